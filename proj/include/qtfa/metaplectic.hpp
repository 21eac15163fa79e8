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

#ifndef QTFA_METAPLECTIC_HPP
#define QTFA_METAPLECTIC_HPP

#include "qtfa/qha.hpp"
#include "qtfa/symplectic.hpp"
#include <vector>

namespace qtfa
{
    // Discrete metaplectic operator on functions of Z_N^d, d = 1 (signals) or d = 2 (phase-space functions).
    // For d = 2 a PhaseFn F is flattened column-major: index x + N w.
    struct MetaplecticOp
    {
        int N = 0;
        int d = 0;
        GeneratorWord word;   // symplectic factors, empty for a direct generator
        Eigen::MatrixXcd U;   // N^d x N^d unitary
        double validity = 0;  // intertwining residual on the standard test set
        std::size_t tested = 0;

        Eigen::VectorXcd apply(const Eigen::VectorXcd &v) const { return U * v; }
        PhaseFn apply(const PhaseFn &F) const;
        PhaseFn apply_adjoint(const PhaseFn &F) const;
    };

    // Unitary DFT on Z_N^d
    MetaplecticOp mu_fourier(int N, int d);

    // e^{i pi y.Cy / N} on centered y; entries of C in (1/2)Z
    MetaplecticOp mu_chirp(int N, const RMat &C);

    // F(y) -> F(Ly mod N); L integer, det L a unit mod N
    MetaplecticOp mu_dilate(int N, const RMat &L);

    // Fourier-conjugated chirp F^* chirp(-B) F, the operator of [[I, B], [0, I]]
    MetaplecticOp mu_vtb(int N, const RMat &B);

    // Operator of one generator factor
    MetaplecticOp mu_factor(int N, const Factor &f);

    // Realised through general_decompose; validity holds the intertwining residual on the standard set
    MetaplecticOp mu_from(int N, const SympMat &M);

    // rho on Z_N^d for z = (x, w) in Z^{2d}, half phase on the integers given
    Eigen::MatrixXcd rho_d(int N, int d, const std::vector<long long> &z);

    // max over zs of || U rho(z) U^* - c rho(Mz) || with c aligning phases at the first nonzero entry
    double intertwine_check(const MetaplecticOp &A, const SympMat &M, const std::vector<std::vector<long long>> &zs);

    // Integer test vectors with integer image under M, taken from a fixed small box
    std::vector<std::vector<long long>> standard_test_set(const SympMat &M, int count);

    // sigma^A_T = mu(A) sigma_T
    PhaseFn a_weyl_symbol(const OperatorMat &T, const MetaplecticOp &A);

    // L^A_sigma = L_{mu(A)^* sigma}
    OperatorMat a_quantize(const PhaseFn &sigma, const MetaplecticOp &A);

    // mu(A) T = L_{mu(A) sigma_T}
    OperatorMat meta_transform_op(const OperatorMat &T, const MetaplecticOp &A);

    // || sigma^A_{alpha_z S} - c T_{Bz} sigma^A_S ||_max / ||sigma^A_S||_max, c the aligning phase
    double b_covariance_check(const MetaplecticOp &A, const RMat &B, const OperatorMat &S, const TFPoint &z);

    // max |X - c Y| with c = X_k / Y_k at the first entry where |Y_k| exceeds half its max
    double phase_aligned_residual(const Eigen::MatrixXcd &X, const Eigen::MatrixXcd &Y);
}

#endif
