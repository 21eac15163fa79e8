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

#include "qtfa/tfa.hpp"

namespace qtfa
{
    namespace
    {
        // e^{i pi k / N} evaluated after reducing k mod 2N
        cplx half_phase(long long k, int N)
        {
            long long m = ((k % (2LL * N)) + 2LL * N) % (2LL * N);
            return std::polar(1.0, PI * (double)m / (double)N);
        }

        Eigen::MatrixXcd dft_kernel(int N)
        {
            Eigen::MatrixXcd D(N, N);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b)
                    D(a, b) = half_phase(-2LL * a * b, N);
            return D;
        }

        void require_square(const Eigen::MatrixXcd &F, const char *what)
        {
            require_size(F.cols(), F.rows(), what);
        }
    }

    Grid grid_of(long long n)
    {
        return make_grid((int)n);
    }

    long long omega(const TFPoint &z, const TFPoint &zp)
    {
        return (long long)zp.w * z.x - (long long)z.w * zp.x;
    }

    cplx inner(const Eigen::Ref<const Eigen::MatrixXcd> &f, const Eigen::Ref<const Eigen::MatrixXcd> &g)
    {
        require_size(f.size(), g.size(), "inner product operand");
        return (f.array() * g.array().conjugate()).sum();
    }

    OperatorMat pi_matrix(const Grid &grid, long long x, long long w)
    {
        const int N = grid.N;
        OperatorMat M = OperatorMat::Zero(N, N);
        for (int t = 0; t < N; ++t)
            M(t, grid.index(t - x)) = half_phase(2LL * grid.index(w) * t, N);
        return M;
    }

    OperatorMat rho_matrix(const Grid &grid, long long x, long long w)
    {
        return half_phase(-x * w, grid.N) * pi_matrix(grid, x, w);
    }

    OperatorMat rho_matrix(const Grid &grid, const TFPoint &z)
    {
        return rho_matrix(grid, (long long)z.x, (long long)z.w);
    }

    double shift_sign(const Grid &grid, long long x, long long w)
    {
        const long long x0 = grid.reduce(x), w0 = grid.reduce(w);
        const long long k1 = (x - x0) / grid.N, k2 = (w - w0) / grid.N;
        const long long e = k1 * w0 + k2 * x0;
        return (e % 2 == 0) ? 1.0 : -1.0;
    }

    double reflection_sign(const Grid &grid, const TFPoint &z)
    {
        return shift_sign(grid, -(long long)z.x, -(long long)z.w);
    }

    Signal tf_shift(const TFPoint &z, const Signal &f)
    {
        const Grid g = grid_of(f.size());
        Signal out(g.N);
        for (int t = 0; t < g.N; ++t)
            out(t) = half_phase(2LL * g.index(z.w) * t, g.N) * f(g.index(t - z.x));
        return out;
    }

    Signal sym_tf_shift(const TFPoint &z, const Signal &f)
    {
        const Grid g = grid_of(f.size());
        return half_phase(-(long long)z.x * z.w, g.N) * tf_shift(z, f);
    }

    Signal dft(const Signal &f)
    {
        const int N = (int)f.size();
        return dft_kernel(N) * f / std::sqrt((double)N);
    }

    Signal idft(const Signal &f)
    {
        const int N = (int)f.size();
        return dft_kernel(N).conjugate() * f / std::sqrt((double)N);
    }

    PhaseFn stft(const Signal &f, const Signal &g)
    {
        require_size(g.size(), f.size(), "window");
        const Grid G = grid_of(f.size());
        const int N = G.N;
        const Eigen::MatrixXcd D = dft_kernel(N);
        Eigen::MatrixXcd H(N, N); // H(t, x) = f(t) conj(g(t - x))
        for (int x = 0; x < N; ++x)
            for (int t = 0; t < N; ++t)
                H(t, x) = f(t) * std::conj(g(G.index(t - x)));
        return (D * H).transpose();
    }

    Signal adjoint_stft(const PhaseFn &F, const Signal &g)
    {
        const Grid G = grid_of(g.size());
        const int N = G.N;
        require_size(F.rows(), N, "phase-space function");
        require_square(F, "phase-space function");
        // M(t, x) = sum_w F(x, w) e^{2 pi i w t / N}
        const Eigen::MatrixXcd M = dft_kernel(N).conjugate() * F.transpose();
        Signal out = Signal::Zero(N);
        for (int t = 0; t < N; ++t)
            for (int x = 0; x < N; ++x)
                out(t) += M(t, x) * g(G.index(t - x));
        return out;
    }

    PhaseFn sympft(const PhaseFn &F)
    {
        require_square(F, "phase-space function");
        const int N = (int)F.rows();
        const Eigen::MatrixXcd D = dft_kernel(N);
        return (D * F * D.conjugate()).transpose() / (double)N;
    }

    PhaseFn tf_chirp(const Grid &grid, int s)
    {
        PhaseFn C(grid.N, grid.N);
        for (int i = 0; i < grid.N; ++i)
            for (int j = 0; j < grid.N; ++j)
            {
                const long long x = grid.reduce(i), w = grid.reduce(j);
                C(i, j) = half_phase((long long)s * x * w, grid.N);
            }
        return C;
    }

    PhaseFn ambiguity(const Signal &f, const Signal &g)
    {
        const Grid G = grid_of(f.size());
        return stft(f, g).cwiseProduct(tf_chirp(G, 1));
    }

    PhaseFn wigner(const Signal &f, const Signal &g)
    {
        return sympft(ambiguity(f, g));
    }

    PhaseFn rihaczek(const Signal &f, const Signal &g)
    {
        return sympft(stft(f, g));
    }

    PhaseFn rihaczek_closed_form(const Signal &f, const Signal &g)
    {
        require_size(g.size(), f.size(), "window");
        const int N = (int)f.size();
        const Signal gh = dft(g);
        PhaseFn R(N, N);
        for (int x = 0; x < N; ++x)
            for (int w = 0; w < N; ++w)
                R(x, w) = std::sqrt((double)N) * f(x) * std::conj(gh(w)) * half_phase(-2LL * x * w, N);
        return R;
    }

    PhaseFn translate(const PhaseFn &F, const TFPoint &z)
    {
        require_square(F, "phase-space function");
        const Grid G = grid_of(F.rows());
        PhaseFn out(G.N, G.N);
        for (int x = 0; x < G.N; ++x)
            for (int w = 0; w < G.N; ++w)
                out(x, w) = F(G.index(x - z.x), G.index(w - z.w));
        return out;
    }

    PhaseFn reflect(const PhaseFn &F)
    {
        require_square(F, "phase-space function");
        const Grid G = grid_of(F.rows());
        PhaseFn out(G.N, G.N);
        for (int x = 0; x < G.N; ++x)
            for (int w = 0; w < G.N; ++w)
                out(x, w) = F(G.index(-x), G.index(-w));
        return out;
    }
}
