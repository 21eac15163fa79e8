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

#ifndef QTFA_QHA_HPP
#define QTFA_QHA_HPP

#include "qtfa/quantize.hpp"
#include <array>
#include <string>
#include <vector>

namespace qtfa
{
    struct OpTFPoint
    {
        TFPoint w;
        TFPoint z;
    };

    // alpha_z(S) = rho(z) S rho(z)^*
    OperatorMat op_translate(const TFPoint &z, const OperatorMat &S);

    // (P f)(t) = f(-t)
    OperatorMat parity_matrix(int N);

    // PSP
    OperatorMat parity(const OperatorMat &S);

    // beta_w(S) = rho(w/2) S rho(w/2), w with even coordinates
    OperatorMat op_modulate(const TFPoint &w, const OperatorMat &S);

    // F_W(beta_w S)(zeta) = modulation_sign(w, zeta) F_W(S)(zeta - w); the sign is +-1
    double modulation_sign(const Grid &grid, const TFPoint &w, const TFPoint &zeta);

    // gamma_{w,z}(S) = e^{-pi i (z1 z2 - w1 w2) / N} rho(z) S rho(w)^*
    OperatorMat op_tf_shift(const OpTFPoint &p, const OperatorMat &S);

    // (S * T)(z) = tr(S alpha_z(PTP))
    PhaseFn op_conv_oo(const OperatorMat &S, const OperatorMat &T);

    // f * S = (1/N) sum_z f(z) alpha_z(S)
    OperatorMat op_conv_fo(const PhaseFn &f, const OperatorMat &S);

    // Q_S T(w, z) = <T, gamma_{w,z}(S)>_HS
    cplx cohens_class(const OperatorMat &T, const OperatorMat &S, const OpTFPoint &p);

    // w -> Q_S T(w, w) on all of Z_N x Z_N
    PhaseFn cohens_diagonal(const OperatorMat &T, const OperatorMat &S);

    struct GaborMatrix
    {
        LatticeSpec rows;
        LatticeSpec cols;
        Eigen::MatrixXcd entries; // (lambda, mu) -> Q_S T(lambda, mu)
    };

    GaborMatrix gabor_matrix(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L, const LatticeSpec &M);

    // lambda -> Q_S T(lambda, lambda), in lattice enumeration order
    Eigen::VectorXcd diagonal(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L);

    // lambda -> Q_S T(lambda, lambda + eta), eta in the lattice
    Eigen::VectorXcd side_diagonal(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L, const TFPoint &eta);

    // Columns lambda1, lambda2, mu1, mu2, re, im
    std::string gabor_csv(const GaborMatrix &G);

    // E_S T = sum Q_S T(lambda, mu) gamma_{lambda,mu}(S)
    OperatorMat frame_operator(const OperatorMat &S, const LatticeSpec &L, const LatticeSpec &M, const OperatorMat &T);

    // Extremal eigenvalues of E_S on the N^2-dimensional HS space
    std::array<double, 2> frame_bounds(const OperatorMat &S, const LatticeSpec &L, const LatticeSpec &M);

    // V_G F(u) for phase-space functions, u = (x1, x2, w1, w2)
    cplx phase_space_stft(const PhaseFn &F, const PhaseFn &G, const std::array<long long, 4> &u);
}

#endif
