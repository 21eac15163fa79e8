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

#include "qtfa/reconstruct.hpp"
#include "qtfa/rng.hpp"

#include <cmath>
#include <string>
#include <sstream>

namespace qtfa
{
    namespace
    {
        void require_samples(long long got, std::size_t want)
        {
            if (got != (long long)want)
                fail(ErrorCode::LengthMismatch, "sample vector has " + std::to_string(got) + " entries, lattice has " + std::to_string(want));
        }

        cplx half_phase(long long k, int N)
        {
            const long long m = ((k % (2LL * N)) + 2LL * N) % (2LL * N);
            return std::polar(1.0, PI * (double)m / (double)N);
        }
    }

    OperatorMat synth_underspread(const Grid &grid, const FundamentalDomain &Q, std::uint64_t seed)
    {
        Rng r(seed);
        PhaseFn F = PhaseFn::Zero(grid.N, grid.N);
        for (const auto &z : Q.Q)
            F(grid.index(z.x), grid.index(z.w)) = r.complex_normal();
        return fourier_wigner_inverse(F);
    }

    UnderspreadSpec build_correction(const OperatorMat &S, const LatticeSpec &L, double floor)
    {
        const Grid &G = L.grid;
        require_size(S.rows(), G.N, "window");
        UnderspreadSpec spec;
        spec.lattice = L;
        spec.Q = fundamental_domain(L);
        spec.S = S;
        spec.h = indicator_window(spec.Q);
        const PhaseFn F = fourier_wigner(S);
        PhaseFn FR = PhaseFn::Zero(G.N, G.N);
        const double scale = (double)G.N / (double)L.size();
        for (const auto &z : spec.Q.Q)
        {
            const cplx v = F(G.index(z.x), G.index(z.w));
            if (std::abs(v) < floor)
            {
                std::ostringstream os;
                os << "|F_W(S)| = " << std::abs(v) << " at (" << z.x << "," << z.w << ") is below " << floor;
                fail(ErrorCode::WindowVanishes, os.str());
            }
            FR(G.index(z.x), G.index(z.w)) = scale / std::conj(v);
        }
        spec.R = fourier_wigner_inverse(FR);
        return spec;
    }

    OperatorMat reconstruct_diagonal(const Eigen::VectorXcd &samples, const UnderspreadSpec &spec)
    {
        require_samples(samples.size(), spec.lattice.size());
        const int N = spec.lattice.grid.N;
        OperatorMat T = OperatorMat::Zero(N, N);
        for (std::size_t i = 0; i < spec.lattice.size(); ++i)
            if (samples(i) != 0.0)
                T += samples(i) * op_translate(spec.lattice.points[i], spec.R);
        return T;
    }

    cplx side_diagonal_phase(const Grid &grid, const TFPoint &lambda, const TFPoint &eta)
    {
        const long long sx = (long long)lambda.x + eta.x, sw = (long long)lambda.w + eta.w;
        const TFPoint z = make_point(grid, sx, sw);
        const long long e = -((long long)z.x * z.w - (long long)lambda.x * lambda.w) + omega(lambda, eta);
        return shift_sign(grid, sx, sw) * half_phase(e, grid.N);
    }

    OperatorMat reconstruct_side_diagonal(const Eigen::VectorXcd &samples, const UnderspreadSpec &spec_eta, const TFPoint &eta)
    {
        const LatticeSpec &L = spec_eta.lattice;
        if (!L.contains(eta))
            fail(ErrorCode::EtaNotInLattice, "eta (" + std::to_string(eta.x) + "," + std::to_string(eta.w) + ") is not a lattice point");
        require_samples(samples.size(), L.size());
        Eigen::VectorXcd adjusted(samples.size());
        for (std::size_t i = 0; i < L.size(); ++i)
            adjusted(i) = side_diagonal_phase(L.grid, L.points[i], eta) * samples(i);
        return reconstruct_diagonal(adjusted, spec_eta);
    }

    DiagonalSampler sampler_for(const OperatorMat &T)
    {
        return [T](const OperatorMat &W, const TFPoint &l) { return hs_inner(T, op_translate(l, W)); };
    }

    MetaplecticRecon reconstruct_metaplectic(const DiagonalSampler &samples, const SympMat &A, const OperatorMat &S, const LatticeSpec &L)
    {
        const Grid &G = L.grid;
        const auto B = covariance_form(A);
        if (!B)
            fail(ErrorCode::NotCovarianceForm, "metaplectic reconstruction needs an upper block-triangular matrix");
        MetaplecticOp mu = mu_from(G.N, A);
        if (mu.validity > 1e-6)
        {
            std::ostringstream os;
            os << "intertwining residual " << mu.validity << " exceeds 1e-6";
            fail(ErrorCode::GridIncompatible, os.str());
        }
        const RMat Binv = B->inverse();
        MetaplecticRecon out;
        out.intertwining = mu.validity;
        for (const auto &l : L.points)
        {
            const Eigen::Vector2d v = Binv * Eigen::Vector2d((double)l.x, (double)l.w);
            if (std::abs(v(0) - std::round(v(0))) > 1e-9 || std::abs(v(1) - std::round(v(1))) > 1e-9)
                fail(ErrorCode::LatticeImageNotIntegral, "A1^{-1} lambda is not an integer point");
            out.sample_points.push_back(make_point(G, std::llround(v(0)), std::llround(v(1))));
        }
        out.window = a_quantize(weyl_symbol(S), mu);
        const UnderspreadSpec spec = build_correction(S, L);
        Eigen::VectorXcd d(L.size());
        for (std::size_t i = 0; i < L.size(); ++i)
            d(i) = samples(out.window, out.sample_points[i]);
        const OperatorMat muT = reconstruct_diagonal(d, spec);
        out.T = a_quantize(weyl_symbol(muT), mu);
        return out;
    }

    OperatorMat reconstruct_mod_invariant(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L)
    {
        const Grid &G = L.grid;
        require_size(T.rows(), G.N, "operator");
        require_size(S.rows(), G.N, "window");
        const PhaseFn sS = weyl_symbol(S);
        const cplx s0 = sS(0, 0);
        if (std::abs(s0) < 1e-8)
            fail(ErrorCode::SymbolVanishesAtZero, "sigma_S(0) vanishes");
        const double smax = sS.cwiseAbs().maxCoeff();
        for (const auto &l : L.adjoint_points)
        {
            if (l.x == 0 && l.w == 0)
                continue;
            if (std::abs(sS(G.index(l.x), G.index(l.w))) > 1e-12 * smax)
            {
                std::ostringstream os;
                os << "supp(sigma_S) meets the adjoint lattice at (" << l.x << "," << l.w << ")";
                fail(ErrorCode::SupportViolation, os.str());
            }
        }
        const OperatorMat P = parity_matrix(G.N);
        OperatorMat out = OperatorMat::Zero(G.N, G.N);
        for (const auto &l : L.adjoint_points)
        {
            const cplx q = hs_inner(T, op_translate(l, S));
            out += q * rho_matrix(G, 2LL * l.x, 2LL * l.w) * P;
        }
        return out / (2.0 * s0);
    }

    double mod_invariance_residual(const OperatorMat &T, const LatticeSpec &L)
    {
        const Grid &G = L.grid;
        double worst = 0;
        for (const auto &l : L.points)
        {
            if (l.x % 2 || l.w % 2)
                continue;
            const OperatorMat r = rho_matrix(G, l.x / 2, l.w / 2);
            worst = std::max(worst, (T * r - r.adjoint() * T).cwiseAbs().maxCoeff());
        }
        return worst;
    }

    PhaseFn lattice_sample_sum(const PhaseFn &F, const LatticeSpec &L)
    {
        const Grid &G = L.grid;
        require_size(F.rows(), G.N, "phase-space function");
        PhaseFn out = PhaseFn::Zero(G.N, G.N);
        for (const auto &z : all_points(G))
        {
            cplx acc = 0;
            for (const auto &l : L.points)
                acc += F(G.index(l.x), G.index(l.w)) * half_phase(2 * omega(z, l), G.N);
            out(G.index(z.x), G.index(z.w)) = acc;
        }
        return out;
    }

    PhaseFn periodize(const PhaseFn &F, const LatticeSpec &L)
    {
        const Grid &G = L.grid;
        require_size(F.rows(), G.N, "phase-space function");
        PhaseFn out = PhaseFn::Zero(G.N, G.N);
        for (const auto &z : all_points(G))
            for (const auto &l : L.adjoint_points)
                out(G.index(z.x), G.index(z.w)) += F(G.index(z.x + l.x), G.index(z.w + l.w));
        return out;
    }

    double relative_hs_error(const OperatorMat &got, const OperatorMat &want)
    {
        const double n = want.norm();
        return n > 0 ? (got - want).norm() / n : got.norm();
    }
}
