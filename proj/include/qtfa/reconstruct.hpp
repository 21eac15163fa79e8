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

#ifndef QTFA_RECONSTRUCT_HPP
#define QTFA_RECONSTRUCT_HPP

#include "qtfa/metaplectic.hpp"
#include <cstdint>
#include <functional>

namespace qtfa
{
    struct UnderspreadSpec
    {
        LatticeSpec lattice;
        FundamentalDomain Q;
        OperatorMat S;
        OperatorMat R;
        PhaseFn h;
    };

    constexpr double WINDOW_FLOOR = 1e-8;

    // T with F_W(T) = seeded complex normals on Q, zero elsewhere
    OperatorMat synth_underspread(const Grid &grid, const FundamentalDomain &Q, std::uint64_t seed);

    // F_W(R) = N h / (|Lambda| conj(F_W(S))) on Q; equals N h / (|Lambda| F_W(S-check)) for self-adjoint S
    UnderspreadSpec build_correction(const OperatorMat &S, const LatticeSpec &L, double floor = WINDOW_FLOOR);

    // T = sum_lambda samples(lambda) alpha_lambda(R)
    OperatorMat reconstruct_diagonal(const Eigen::VectorXcd &samples, const UnderspreadSpec &spec);

    // Q_S T(lambda, lambda + eta) = conj(phase) Q_{rho(eta) S} T(lambda, lambda)
    cplx side_diagonal_phase(const Grid &grid, const TFPoint &lambda, const TFPoint &eta);

    // spec_eta must be built from the window rho(eta) S
    OperatorMat reconstruct_side_diagonal(const Eigen::VectorXcd &samples, const UnderspreadSpec &spec_eta, const TFPoint &eta);

    // Returns Q_W T(lambda, lambda) for window W
    using DiagonalSampler = std::function<cplx(const OperatorMat &W, const TFPoint &lambda)>;

    DiagonalSampler sampler_for(const OperatorMat &T);

    struct MetaplecticRecon
    {
        OperatorMat T;
        std::vector<TFPoint> sample_points; // Lambda' = A1^{-1} Lambda
        OperatorMat window;                 // S' = mu(A)^* S
        double intertwining = 0;
    };

    // Samples Q_{S'} T on Lambda', rebuilds mu(A) T with reconstruct_diagonal, then undoes mu(A) on the symbol
    MetaplecticRecon reconstruct_metaplectic(const DiagonalSampler &samples, const SympMat &A, const OperatorMat &S, const LatticeSpec &L);

    // T = (1 / (2 sigma_S(0))) sum_{lambda0} Q_S T(lambda0, lambda0) rho(2 lambda0) P
    OperatorMat reconstruct_mod_invariant(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L);

    // max over lambda in Lambda with even coordinates of ||T rho(lambda/2) - rho(lambda/2)^* T||
    double mod_invariance_residual(const OperatorMat &T, const LatticeSpec &L);

    // sum_{lambda in Lambda} F(lambda) e^{2 pi i Omega(z, lambda) / N}, as a function of z
    PhaseFn lattice_sample_sum(const PhaseFn &F, const LatticeSpec &L);

    // sum_{lambda0 in adjoint lattice} F(z + lambda0)
    PhaseFn periodize(const PhaseFn &F, const LatticeSpec &L);

    double relative_hs_error(const OperatorMat &got, const OperatorMat &want);
}

#endif
