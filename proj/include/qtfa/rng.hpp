// SPDX-License-Identifier: Apache-2.0
//
// qtfa - finite-dimensional quantum time-frequency analysis
// Copyright (C) 2026 The qtfa authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef QTFA_RNG_HPP
#define QTFA_RNG_HPP

#include "qtfa/types.hpp"
#include <cstdint>
#include <random>

namespace qtfa
{
    // mt19937_64 with hand-rolled uniform/normal maps so streams agree across standard libraries
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed) : eng_(seed) {}

        // (u >> 11) * 2^-53, in [0, 1)
        double uniform();

        // Box-Muller, one normal per call (the sine branch is discarded)
        double normal();

        cplx complex_normal() { return {normal(), normal()}; }

        Eigen::VectorXcd complex_vector(Eigen::Index n);
        Eigen::MatrixXcd complex_matrix(Eigen::Index r, Eigen::Index c);

        // Uniform integer in [lo, hi]
        long long integer(long long lo, long long hi);

    private:
        std::mt19937_64 eng_;
    };
}

#endif
