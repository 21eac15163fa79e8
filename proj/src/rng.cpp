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

#include "qtfa/rng.hpp"

#include <cmath>

namespace qtfa
{
    double Rng::uniform()
    {
        return (double)(eng_() >> 11) * 0x1.0p-53;
    }

    double Rng::normal()
    {
        double u1 = uniform();
        while (u1 <= 0.0)
            u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * PI * u2);
    }

    Eigen::VectorXcd Rng::complex_vector(Eigen::Index n)
    {
        Eigen::VectorXcd v(n);
        for (Eigen::Index i = 0; i < n; ++i)
            v(i) = complex_normal();
        return v;
    }

    Eigen::MatrixXcd Rng::complex_matrix(Eigen::Index r, Eigen::Index c)
    {
        Eigen::MatrixXcd m(r, c);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index j = 0; j < c; ++j)
                m(i, j) = complex_normal();
        return m;
    }

    long long Rng::integer(long long lo, long long hi)
    {
        const std::uint64_t span = (std::uint64_t)(hi - lo) + 1;
        return lo + (long long)(eng_() % span);
    }
}
