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

#include "qtfa/qha.hpp"

#include <Eigen/Eigenvalues>
#include <iomanip>
#include <sstream>

namespace qtfa
{
    namespace
    {
        cplx half_phase(long long k, int N)
        {
            long long m = ((k % (2LL * N)) + 2LL * N) % (2LL * N);
            return std::polar(1.0, PI * (double)m / (double)N);
        }

        void require_operator(const OperatorMat &S, int N)
        {
            require_size(S.rows(), N, "operator");
            require_size(S.cols(), N, "operator");
        }
    }

    OperatorMat op_translate(const TFPoint &z, const OperatorMat &S)
    {
        const Grid G = grid_of(S.rows());
        require_operator(S, G.N);
        const OperatorMat r = rho_matrix(G, z);
        return r * S * r.adjoint();
    }

    OperatorMat parity_matrix(int N)
    {
        const Grid G = grid_of(N);
        OperatorMat P = OperatorMat::Zero(N, N);
        for (int t = 0; t < N; ++t)
            P(t, G.index(-t)) = 1.0;
        return P;
    }

    OperatorMat parity(const OperatorMat &S)
    {
        require_size(S.cols(), S.rows(), "operator");
        const OperatorMat P = parity_matrix((int)S.rows());
        return P * S * P;
    }

    OperatorMat op_modulate(const TFPoint &w, const OperatorMat &S)
    {
        if (w.x % 2 != 0 || w.w % 2 != 0)
            fail(ErrorCode::OddModulation, "modulation (" + std::to_string(w.x) + "," + std::to_string(w.w) + ") has an odd coordinate");
        const Grid G = grid_of(S.rows());
        require_operator(S, G.N);
        const OperatorMat r = rho_matrix(G, (long long)(w.x / 2), (long long)(w.w / 2));
        return r * S * r;
    }

    double modulation_sign(const Grid &grid, const TFPoint &w, const TFPoint &zeta)
    {
        // rho(w/2) rho(zeta)^* rho(w/2) = rho_raw(w - zeta); compare with rho(reduce(zeta - w))^*
        const long long vx = (long long)w.x - zeta.x, vw = (long long)w.w - zeta.w;
        const TFPoint u = make_point(grid, -vx, -vw);
        return shift_sign(grid, vx, vw) * shift_sign(grid, -(long long)u.x, -(long long)u.w);
    }

    OperatorMat op_tf_shift(const OpTFPoint &p, const OperatorMat &S)
    {
        const Grid G = grid_of(S.rows());
        require_operator(S, G.N);
        const cplx ph = half_phase(-((long long)p.z.x * p.z.w - (long long)p.w.x * p.w.w), G.N);
        return ph * rho_matrix(G, p.z) * S * rho_matrix(G, p.w).adjoint();
    }

    PhaseFn op_conv_oo(const OperatorMat &S, const OperatorMat &T)
    {
        const Grid G = grid_of(S.rows());
        require_operator(S, G.N);
        require_operator(T, G.N);
        const OperatorMat Tc = parity(T);
        PhaseFn out(G.N, G.N);
        for (const auto &z : all_points(G))
            out(G.index(z.x), G.index(z.w)) = (S * op_translate(z, Tc)).trace();
        return out;
    }

    OperatorMat op_conv_fo(const PhaseFn &f, const OperatorMat &S)
    {
        const Grid G = grid_of(S.rows());
        require_operator(S, G.N);
        require_size(f.rows(), G.N, "phase-space function");
        require_size(f.cols(), G.N, "phase-space function");
        OperatorMat out = OperatorMat::Zero(G.N, G.N);
        for (const auto &z : all_points(G))
        {
            const cplx c = f(G.index(z.x), G.index(z.w));
            if (c != 0.0)
                out += c * op_translate(z, S);
        }
        return out / (double)G.N;
    }

    cplx cohens_class(const OperatorMat &T, const OperatorMat &S, const OpTFPoint &p)
    {
        require_size(T.rows(), S.rows(), "operator");
        return hs_inner(T, op_tf_shift(p, S));
    }

    PhaseFn cohens_diagonal(const OperatorMat &T, const OperatorMat &S)
    {
        const Grid G = grid_of(S.rows());
        require_operator(T, G.N);
        PhaseFn out(G.N, G.N);
        for (const auto &z : all_points(G))
            out(G.index(z.x), G.index(z.w)) = hs_inner(T, op_translate(z, S));
        return out;
    }

    GaborMatrix gabor_matrix(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L, const LatticeSpec &M)
    {
        require_operator(T, L.grid.N);
        require_operator(S, L.grid.N);
        require_size(M.grid.N, L.grid.N, "column lattice grid");
        GaborMatrix out{L, M, Eigen::MatrixXcd(L.size(), M.size())};
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = 0; j < M.size(); ++j)
                out.entries(i, j) = cohens_class(T, S, {L.points[i], M.points[j]});
        return out;
    }

    Eigen::VectorXcd diagonal(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L)
    {
        require_operator(T, L.grid.N);
        require_operator(S, L.grid.N);
        Eigen::VectorXcd d(L.size());
        for (std::size_t i = 0; i < L.size(); ++i)
            d(i) = hs_inner(T, op_translate(L.points[i], S));
        return d;
    }

    Eigen::VectorXcd side_diagonal(const OperatorMat &T, const OperatorMat &S, const LatticeSpec &L, const TFPoint &eta)
    {
        if (!L.contains(eta))
            fail(ErrorCode::EtaNotInLattice, "eta (" + std::to_string(eta.x) + "," + std::to_string(eta.w) + ") is not a lattice point");
        require_operator(T, L.grid.N);
        require_operator(S, L.grid.N);
        Eigen::VectorXcd d(L.size());
        for (std::size_t i = 0; i < L.size(); ++i)
        {
            const TFPoint &l = L.points[i];
            d(i) = cohens_class(T, S, {l, make_point(L.grid, (long long)l.x + eta.x, (long long)l.w + eta.w)});
        }
        return d;
    }

    std::string gabor_csv(const GaborMatrix &G)
    {
        std::ostringstream os;
        os << std::setprecision(17);
        os << "lambda1,lambda2,mu1,mu2,re,im\n";
        for (std::size_t i = 0; i < G.rows.size(); ++i)
            for (std::size_t j = 0; j < G.cols.size(); ++j)
            {
                const auto &l = G.rows.points[i];
                const auto &m = G.cols.points[j];
                const cplx v = G.entries(i, j);
                os << l.x << "," << l.w << "," << m.x << "," << m.w << "," << v.real() << "," << v.imag() << "\n";
            }
        return os.str();
    }

    OperatorMat frame_operator(const OperatorMat &S, const LatticeSpec &L, const LatticeSpec &M, const OperatorMat &T)
    {
        require_operator(S, L.grid.N);
        require_operator(T, L.grid.N);
        OperatorMat out = OperatorMat::Zero(S.rows(), S.cols());
        for (const auto &l : L.points)
            for (const auto &m : M.points)
            {
                const OperatorMat g = op_tf_shift({l, m}, S);
                out += hs_inner(T, g) * g;
            }
        return out;
    }

    std::array<double, 2> frame_bounds(const OperatorMat &S, const LatticeSpec &L, const LatticeSpec &M)
    {
        require_operator(S, L.grid.N);
        const int N = L.grid.N;
        // Analysis matrix: row (lambda, mu) holds conj(vec(gamma_{lambda,mu}(S)))
        Eigen::MatrixXcd A(L.size() * M.size(), (Eigen::Index)N * N);
        Eigen::Index r = 0;
        for (const auto &l : L.points)
            for (const auto &m : M.points)
            {
                const OperatorMat g = op_tf_shift({l, m}, S);
                A.row(r++) = Eigen::Map<const Eigen::VectorXcd>(g.data(), g.size()).conjugate().transpose();
            }
        const Eigen::MatrixXcd E = A.adjoint() * A;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(E, Eigen::EigenvaluesOnly);
        const auto &ev = es.eigenvalues();
        double lo = std::max(0.0, ev.minCoeff()), hi = std::max(0.0, ev.maxCoeff());
        return {lo, hi};
    }

    cplx phase_space_stft(const PhaseFn &F, const PhaseFn &Gw, const std::array<long long, 4> &u)
    {
        require_size(Gw.rows(), F.rows(), "phase-space window");
        const Grid G = grid_of(F.rows());
        const int N = G.N;
        cplx acc = 0.0;
        for (int y1 = 0; y1 < N; ++y1)
            for (int y2 = 0; y2 < N; ++y2)
                acc += F(y1, y2) * std::conj(Gw(G.index(y1 - u[0]), G.index(y2 - u[1]))) *
                       half_phase(-2LL * (G.index(u[2]) * (long long)y1 + G.index(u[3]) * (long long)y2), N);
        return acc;
    }
}
