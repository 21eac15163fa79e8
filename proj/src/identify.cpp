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

#include "qtfa/identify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace qtfa
{
    SupportRegion support_block(const Grid &grid, int nx, int nw)
    {
        return SupportRegion{centered_block(grid, nx, nw)};
    }

    Signal gaussian_window(const Grid &grid, double a)
    {
        if (!(a > 0))
            fail(ErrorCode::NotPositive, "Gaussian parameter must be positive");
        const int N = grid.N;
        const double amp = std::pow(2.0, 0.25);
        Signal phi(N);
        for (int i = 0; i < N; ++i)
        {
            const double t = grid.reduce(i);
            double acc = amp * std::exp(-PI * a * t * t / N);
            for (int j = 1;; ++j)
            {
                const double p = amp * std::exp(-PI * a * (t + j * N) * (t + j * N) / N);
                const double m = amp * std::exp(-PI * a * (t - j * N) * (t - j * N) / N);
                acc += p + m;
                if (p < 1e-17 && m < 1e-17)
                    break;
            }
            phi(i) = acc;
        }
        return phi;
    }

    Signal chirp_gaussian_window(const Grid &grid, double a)
    {
        if (a == 0 || !std::isfinite(a))
            fail(ErrorCode::NotPositive, "chirp-Gaussian parameter must be nonzero");
        Signal phi = gaussian_window(grid, std::abs(a));
        for (int i = 0; i < grid.N; ++i)
        {
            const double t = grid.reduce(i);
            phi(i) *= std::polar(1.0, -PI * a * t * t / grid.N);
        }
        return phi;
    }

    Eigen::MatrixXcd build_gram(const OperatorMat &S, const LatticeSpec &L, const SupportRegion &K)
    {
        const Grid &G = L.grid;
        require_size(S.rows(), G.N, "window");
        const PhaseFn sS = weyl_symbol(S);
        Eigen::MatrixXcd M(L.size(), K.size());
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t k = 0; k < K.size(); ++k)
            {
                const TFPoint &l = L.points[i], &y = K.K[k];
                M(i, k) = std::conj(sS(G.index(y.x - l.x), G.index(y.w - l.w))) / (double)G.N;
            }
        return M;
    }

    IdentReport svd_report(const Eigen::MatrixXcd &G, double rel_tol)
    {
        IdentReport rep;
        rep.samples = (std::size_t)G.rows();
        rep.unknowns = (std::size_t)G.cols();
        if (G.size() == 0)
            return rep;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
        const auto &sv = svd.singularValues();
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            rep.singular_values.push_back(sv(i));
        rep.sigma_max = sv.size() ? sv(0) : 0.0;
        const double thr = rel_tol * rep.sigma_max;
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > thr && sv(i) > 0)
                ++rep.rank;
        // sigma_min of the column space: zero when there are fewer rows than unknowns
        rep.sigma_min = G.rows() >= G.cols() && sv.size() ? sv(sv.size() - 1) : 0.0;
        rep.identifiable = rep.sigma_max > 0 && rep.sigma_min > thr && rep.rank == (int)G.cols();
        return rep;
    }

    IdentReport identifiability_test(const OperatorMat &S, const LatticeSpec &L, const SupportRegion &K, double rel_tol)
    {
        if (L.size() < K.size())
        {
            std::ostringstream os;
            os << "|Lambda| = " << L.size() << " < |K| = " << K.size();
            fail(ErrorCode::UnderSampled, os.str());
        }
        return svd_report(build_gram(S, L, K), rel_tol);
    }

    LSResult ls_identify(const Eigen::VectorXcd &samples, const OperatorMat &S, const LatticeSpec &L, const SupportRegion &K)
    {
        require_size(samples.size(), (long long)L.size(), "sample vector");
        LSResult out;
        out.report = identifiability_test(S, L, K);
        if (!out.report.identifiable)
        {
            std::ostringstream os;
            os << "Gram sigma_min " << out.report.sigma_min << " is below threshold";
            fail(ErrorCode::IllConditioned, os.str());
        }
        const Eigen::MatrixXcd Gm = build_gram(S, L, K);
        const Eigen::VectorXcd x = Gm.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(samples);
        const double sn = samples.norm();
        out.residual = sn > 0 ? (Gm * x - samples).norm() / sn : 0.0;
        const Grid &G = L.grid;
        out.sigma = PhaseFn::Zero(G.N, G.N);
        for (std::size_t k = 0; k < K.size(); ++k)
            out.sigma(G.index(K.K[k].x), G.index(K.K[k].w)) = x(k);
        out.T = weyl_quantize(out.sigma);
        return out;
    }

    Eigen::MatrixXcd build_meta_gram(const OperatorMat &Sp, const MetaplecticOp &A, const LatticeSpec &L, const SupportRegion &K)
    {
        const Grid &G = L.grid;
        const PhaseFn sS = weyl_symbol(Sp);
        Eigen::MatrixXcd M(L.size(), K.size());
        for (std::size_t i = 0; i < L.size(); ++i)
        {
            const PhaseFn v = A.apply(translate(sS, L.points[i]));
            for (std::size_t k = 0; k < K.size(); ++k)
                M(i, k) = std::conj(v(G.index(K.K[k].x), G.index(K.K[k].w))) / (double)G.N;
        }
        return M;
    }

    std::vector<LatticeSpec> lattice_sweep(const Grid &grid, std::size_t min_size)
    {
        std::vector<std::pair<int, int>> ab;
        for (int a = 1; a <= grid.N; ++a)
            for (int b = 1; b <= grid.N; ++b)
                if (grid.N % a == 0 && grid.N % b == 0 && (std::size_t)(grid.N / a) * (grid.N / b) >= min_size)
                    ab.push_back({a, b});
        std::stable_sort(ab.begin(), ab.end(), [](const auto &p, const auto &q) { return p.first * p.second < q.first * q.second; });
        std::vector<LatticeSpec> out;
        for (const auto &[a, b] : ab)
            out.push_back(make_lattice(grid, a, b));
        return out;
    }

    MetaIdentReport meta_identifiability(const SympMat &A, const SupportRegion &K, const Grid &grid, double gauss_a)
    {
        MetaIdentReport out;
        const MetaplecticOp mu = mu_from(grid.N, A);
        if (mu.validity > 1e-6)
        {
            std::ostringstream os;
            os << "intertwining residual " << mu.validity << " exceeds 1e-6";
            fail(ErrorCode::GridIncompatible, os.str());
        }
        out.word = mu.word;
        const RMat &At = out.word[1].param, &Bt = out.word[2].param;
        out.commutator = (At * Bt - Bt * At).cwiseAbs().maxCoeff();
        out.status = out.commutator <= 1e-10 ? "theorem-supported" : "exploratory";
        const Signal phi = gaussian_window(grid, gauss_a);
        const OperatorMat Sp = a_quantize(weyl_symbol(rank_one(phi, phi)), mu);
        for (const LatticeSpec &L : lattice_sweep(grid, K.size()))
        {
            const IdentReport rep = svd_report(build_meta_gram(Sp, mu, L, K));
            out.sweep.push_back({L, rep});
            if (rep.identifiable)
            {
                out.suggested = L;
                out.report = rep;
                out.found = true;
            }
        }
        return out;
    }

    Eigen::MatrixXcd phase_retrieval_gram(const Signal &g, const LatticeSpec &L, const std::vector<int> &K1)
    {
        require_size(g.size(), L.grid.N, "window");
        const std::size_t k = K1.size();
        Eigen::MatrixXcd M(L.size(), k * k);
        for (std::size_t i = 0; i < L.size(); ++i)
        {
            const Signal rg = sym_tf_shift(L.points[i], g);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b)
                    M(i, a * k + b) = std::conj(rg(L.grid.index(K1[a]))) * rg(L.grid.index(K1[b]));
        }
        return M;
    }

    Eigen::VectorXd spectrogram_samples(const Signal &f, const Signal &g, const LatticeSpec &L)
    {
        Eigen::VectorXd m(L.size());
        for (std::size_t i = 0; i < L.size(); ++i)
            m(i) = std::norm(inner(f, tf_shift(L.points[i], g)));
        return m;
    }

    PhaseRetrieval phase_retrieval_from_samples(const Eigen::VectorXd &m, const Signal &g, const LatticeSpec &L, const std::vector<int> &K1)
    {
        require_size(m.size(), (long long)L.size(), "measurement vector");
        if (K1.empty())
            fail(ErrorCode::BadShape, "empty support");
        PhaseRetrieval out;
        const Eigen::MatrixXcd Gm = phase_retrieval_gram(g, L, K1);
        out.report = svd_report(Gm);
        if (L.size() < K1.size() * K1.size())
            fail(ErrorCode::UnderSampled, "fewer measurements than kernel unknowns");
        if (!out.report.identifiable)
            fail(ErrorCode::IllConditioned, "kernel-picture Gram is rank deficient");
        const Eigen::VectorXcd mc = m.cast<cplx>();
        const Eigen::VectorXcd x = Gm.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(mc);
        const double mn = mc.norm();
        out.residual = mn > 0 ? (Gm * x - mc).norm() / mn : 0.0;
        const Eigen::Index k = (Eigen::Index)K1.size();
        Eigen::MatrixXcd X(k, k);
        for (Eigen::Index a = 0; a < k; ++a)
            for (Eigen::Index b = 0; b < k; ++b)
                X(a, b) = x(a * k + b);
        const Eigen::MatrixXcd H = 0.5 * (X + X.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
        const auto &ev = es.eigenvalues();
        const double top = ev(k - 1);
        const Eigen::VectorXd sv = X.jacobiSvd().singularValues();
        out.second_ratio = k > 1 && sv(0) > 0 ? sv(1) / sv(0) : 0.0;
        out.f = Signal::Zero(L.grid.N);
        if (top > 0)
        {
            Eigen::VectorXcd v = es.eigenvectors().col(k - 1) * std::sqrt(top);
            // fix the phase of the largest entry to be real positive
            Eigen::Index imax = 0;
            v.cwiseAbs().maxCoeff(&imax);
            v *= std::conj(v(imax)) / std::abs(v(imax));
            for (Eigen::Index a = 0; a < k; ++a)
                out.f(L.grid.index(K1[a])) = v(a);
        }
        if (out.second_ratio > 1e-4)
        {
            std::ostringstream os;
            os << "recovered kernel has sigma_2 / sigma_1 = " << out.second_ratio;
            fail(ErrorCode::RankDeficient, os.str());
        }
        return out;
    }

    PhaseRetrieval phase_retrieval_demo(const Signal &f, const Signal &g, const LatticeSpec &L, const std::vector<int> &K1)
    {
        require_size(f.size(), L.grid.N, "signal");
        return phase_retrieval_from_samples(spectrogram_samples(f, g, L), g, L, K1);
    }

    double phase_distance(const Signal &a, const Signal &b)
    {
        require_size(a.size(), b.size(), "signal");
        const cplx c = inner(b, a);
        const cplx ph = std::abs(c) > 0 ? c / std::abs(c) : cplx(1.0);
        const double bn = b.norm();
        return bn > 0 ? (ph * a - b).norm() / bn : a.norm();
    }

    IdentReport muntz_gram_probe(const LatticeSpec &L, const SupportRegion &K, const RMat &E)
    {
        if (E.rows() != 2 || E.cols() != 2)
            fail(ErrorCode::BadShape, "exponent map must be 2x2");
        const int N = L.grid.N;
        Eigen::MatrixXcd M(L.size(), K.size());
        for (std::size_t i = 0; i < L.size(); ++i)
        {
            const Eigen::Vector2d e = E * Eigen::Vector2d((double)L.points[i].x, (double)L.points[i].w);
            for (std::size_t k = 0; k < K.size(); ++k)
                M(i, k) = std::polar(1.0, 2.0 * PI * (e(0) * K.K[k].x + e(1) * K.K[k].w) / N);
        }
        return svd_report(M);
    }
}
