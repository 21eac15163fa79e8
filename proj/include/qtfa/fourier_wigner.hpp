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

#ifndef QTFA_FOURIER_WIGNER_HPP
#define QTFA_FOURIER_WIGNER_HPP

#include "qtfa/tfa.hpp"

namespace qtfa
{
    // F_W(S)(z) = tr(rho(-z) S) = <S, rho(z)>_HS, z on centered representatives
    PhaseFn fourier_wigner(const OperatorMat &S);

    // Inverse of fourier_wigner: S = (1/N) sum_z F(z) rho(z)
    OperatorMat fourier_wigner_inverse(const PhaseFn &F);
}

#endif
