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

#ifndef QTFA_TFA_HPP
#define QTFA_TFA_HPP

#include "qtfa/phasespace.hpp"

namespace qtfa
{
    // Omega(z, z') = w' x - w x'
    long long omega(const TFPoint &z, const TFPoint &zp);

    // <f, g> = sum f conj(g), for signals and phase-space functions alike
    cplx inner(const Eigen::Ref<const Eigen::MatrixXcd> &f, const Eigen::Ref<const Eigen::MatrixXcd> &g);

    // pi(x, w) f(t) = e^{2 pi i w t / N} f(t - x)
    OperatorMat pi_matrix(const Grid &grid, long long x, long long w);

    // rho(x, w) = e^{-pi i x w / N} pi(x, w), phase evaluated on the integers given.
    // Passing centered representatives yields the canonical rho(z) on Z_N.
    OperatorMat rho_matrix(const Grid &grid, long long x, long long w);
    OperatorMat rho_matrix(const Grid &grid, const TFPoint &z);

    // rho_matrix(x, w) = shift_sign(x, w) * rho_matrix(reduce(x), reduce(w)); the sign is +-1
    // because the half phase makes rho 2N-periodic on an even grid.
    double shift_sign(const Grid &grid, long long x, long long w);

    // rho(z)^* = reflection_sign(z) * rho(reduce(-z)); -1 only on the wrap lines x = -N/2 or w = -N/2
    double reflection_sign(const Grid &grid, const TFPoint &z);

    Signal tf_shift(const TFPoint &z, const Signal &f);
    Signal sym_tf_shift(const TFPoint &z, const Signal &f);

    // Unitary DFT: fhat(k) = N^{-1/2} sum_t f(t) e^{-2 pi i k t / N}
    Signal dft(const Signal &f);
    Signal idft(const Signal &f);

    // V_g f(x, w) = sum_t f(t) conj(g(t - x)) e^{-2 pi i w t / N}
    PhaseFn stft(const Signal &f, const Signal &g);

    // V_g^* F = sum_z F(z) pi(z) g
    Signal adjoint_stft(const PhaseFn &F, const Signal &g);

    // (F_Omega F)(z) = (1/N) sum_{z'} F(z') e^{2 pi i Omega(z, z') / N}
    PhaseFn sympft(const PhaseFn &F);

    // A(f, g)(z) = <f, rho(z) g>
    PhaseFn ambiguity(const Signal &f, const Signal &g);

    // W(f, g) = F_Omega A(f, g)
    PhaseFn wigner(const Signal &f, const Signal &g);

    // R(f, g) = F_Omega V_g f
    PhaseFn rihaczek(const Signal &f, const Signal &g);

    // sqrt(N) f(x) conj(ghat(w)) e^{-2 pi i x w / N}; equals rihaczek(f, g)
    PhaseFn rihaczek_closed_form(const Signal &f, const Signal &g);

    // (T_z F)(y) = F(y - z)
    PhaseFn translate(const PhaseFn &F, const TFPoint &z);

    // F(-y)
    PhaseFn reflect(const PhaseFn &F);

    // Centered chirp e^{s pi i x w / N}; s = -1 turns A(f,g) into V_g f
    PhaseFn tf_chirp(const Grid &grid, int s);

    Grid grid_of(long long n);
}

#endif
