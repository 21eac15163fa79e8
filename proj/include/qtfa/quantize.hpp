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

#ifndef QTFA_QUANTIZE_HPP
#define QTFA_QUANTIZE_HPP

#include "qtfa/fourier_wigner.hpp"
#include <vector>

namespace qtfa
{
    // (f (x) g)(s, t) = f(s) conj(g(t)), i.e. h -> <h, g> f
    OperatorMat rank_one(const Signal &f, const Signal &g);

    cplx trace(const OperatorMat &S);

    // tr(S T^*)
    cplx hs_inner(const OperatorMat &S, const OperatorMat &T);

    double hs_norm(const OperatorMat &S);

    struct SpectralDecomp
    {
        std::vector<double> values; // descending, all above the rank cutoff
        std::vector<Signal> left;   // psi_n
        std::vector<Signal> right;  // phi_n
    };

    // SVD truncated at sigma > 1e-10 sigma_max
    SpectralDecomp spectral_decomp(const OperatorMat &S);

    // sum lambda_n psi_n (x) phi_n
    OperatorMat reassemble(const SpectralDecomp &sd, int N);

    // sigma_S = F_Omega F_W(S)
    PhaseFn weyl_symbol(const OperatorMat &S);

    // L_sigma = (1/N) sum_z (F_Omega sigma)(z) rho(z)
    OperatorMat weyl_quantize(const PhaseFn &sigma);

    // kappa_S = F_Omega(e^{-pi i x w / N} F_W(S)); kappa_{f (x) g} = R(f, g)
    PhaseFn kn_symbol(const OperatorMat &S);
    OperatorMat kn_quantize(const PhaseFn &kappa);
}

#endif
