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

#include "qtfa/fourier_wigner.hpp"

namespace qtfa
{
    // Both directions use rho(x, w)(s, s - x) = e^{-pi i x w / N} e^{2 pi i w s / N}
    PhaseFn fourier_wigner(const OperatorMat &S)
    {
        require_size(S.cols(), S.rows(), "operator");
        const Grid G = grid_of(S.rows());
        const int N = G.N;
        PhaseFn F(N, N);
        for (int xi = 0; xi < N; ++xi)
        {
            const long long x = G.reduce(xi);
            for (int wi = 0; wi < N; ++wi)
            {
                const long long w = G.reduce(wi);
                cplx acc = 0.0;
                for (int s = 0; s < N; ++s)
                    acc += S(s, G.index(s - x)) * std::polar(1.0, -2.0 * PI * (double)((w * s) % N) / N);
                F(xi, wi) = acc * std::polar(1.0, PI * (double)((x * w) % (2LL * N)) / N);
            }
        }
        return F;
    }

    OperatorMat fourier_wigner_inverse(const PhaseFn &F)
    {
        require_size(F.cols(), F.rows(), "phase-space function");
        const Grid G = grid_of(F.rows());
        const int N = G.N;
        OperatorMat S = OperatorMat::Zero(N, N);
        for (int xi = 0; xi < N; ++xi)
        {
            const long long x = G.reduce(xi);
            for (int wi = 0; wi < N; ++wi)
            {
                const long long w = G.reduce(wi);
                const cplx c = F(xi, wi) * std::polar(1.0, -PI * (double)((x * w) % (2LL * N)) / N) / (double)N;
                if (c == 0.0)
                    continue;
                for (int s = 0; s < N; ++s)
                    S(s, G.index(s - x)) += c * std::polar(1.0, 2.0 * PI * (double)((w * s) % N) / N);
            }
        }
        return S;
    }
}
