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

#ifndef QTFA_SYMPLECTIC_HPP
#define QTFA_SYMPLECTIC_HPP

#include "qtfa/tfa.hpp"
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qtfa
{
    // Real 2m x 2m matrix, validated symplectic by make_symp
    struct SympMat
    {
        RMat M;
        int m() const { return (int)M.rows() / 2; }
    };

    enum class FactorKind
    {
        J,
        VC,  // [[I, 0], [C, I]]
        VTB, // [[I, B], [0, I]]
        DL   // [[L^{-1}, 0], [0, L^T]]
    };

    struct Factor
    {
        FactorKind kind;
        RMat param; // C, B or L; empty for J
    };

    using GeneratorWord = std::vector<Factor>;

    struct Blocks
    {
        RMat A, B, C, D;
    };

    constexpr double SYMP_TOL = 1e-10;

    // Standard skew form [[0, I], [-I, 0]]
    RMat skew_form(int m);

    bool is_symplectic(const RMat &M, double tol = SYMP_TOL);

    // Checks AC^T = A^T C style block conditions: A^T C and B^T D symmetric, A^T D - C^T B = I
    bool block_conditions(const RMat &M, double tol = SYMP_TOL);

    SympMat make_symp(const RMat &M);

    Blocks block_parts(const SympMat &S);

    SympMat from_blocks(const RMat &A, const RMat &B, const RMat &C, const RMat &D);

    // [[D^T, -B^T], [-C^T, A^T]]
    SympMat symp_inverse(const SympMat &S);

    SympMat make_J(int m);
    SympMat make_VC(const RMat &C);
    SympMat make_VTB(const RMat &B);
    SympMat make_DL(const RMat &L);

    RMat factor_matrix(const Factor &f);
    SympMat compose(const GeneratorWord &word);

    std::string factor_name(FactorKind k);

    // M = V_A D_L J V_B with L = B_M^{-1}, B = B_M^{-1} A_M, A = D_M B_M^{-1}
    GeneratorWord free_decompose(const SympMat &S);

    // M = D_L V_A~ VT_B~ V_A', pivot A' fixed by the rule documented in the README
    GeneratorWord general_decompose(const SympMat &S);

    // A_FOmega, A_F2, A_STFT, A_Rih, kernel_map, A_FT2, U_phase, L_phase, weyl_to_kn, weyl_to_kn_grid, J, I
    SympMat named_matrix(const std::string &name);
    std::vector<std::string> named_matrix_names();

    // B block when M = [[B, A2], [0, B^{-T}]]
    std::optional<RMat> covariance_form(const SympMat &S);

    struct PhaseChange
    {
        cplx c;
        std::array<double, 4> u;
    };

    // c_{w,z} = e^{-i pi (w1+z1)(w2-z2)/N}, u = ((w1+z1)/2, (w2+z2)/2, w2-z2, z1-w1)
    PhaseChange phase_and_change_of_vars(const Grid &grid, const TFPoint &w, const TFPoint &z);
}

#endif
