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

#include "qtfa/metaplectic.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <sstream>

namespace qtfa
{
    namespace
    {
        int modn(long long k, int N) { return (int)(((k % N) + N) % N); }

        int cen(long long k, int N)
        {
            int r = modn(k, N);
            return r >= N / 2 ? r - N : r;
        }

        // e^{i pi k / (2N)}
        cplx quarter_phase(long long k, int N)
        {
            const long long P = 4LL * N;
            const long long m = ((k % P) + P) % P;
            return std::polar(1.0, PI * (double)m / (2.0 * N));
        }

        // Multi-index y in Z_N^d <-> flat position, first coordinate fastest
        int flat(const std::vector<int> &y, int N)
        {
            int f = 0;
            for (int i = (int)y.size() - 1; i >= 0; --i)
                f = f * N + modn(y[i], N);
            return f;
        }

        std::vector<int> unflat(int f, int N, int d)
        {
            std::vector<int> y(d);
            for (int i = 0; i < d; ++i)
            {
                y[i] = f % N;
                f /= N;
            }
            return y;
        }

        int dim_of(const RMat &C)
        {
            if (C.rows() != C.cols() || (C.rows() != 1 && C.rows() != 2))
                fail(ErrorCode::BadShape, "metaplectic parameters must be 1x1 or 2x2");
            return (int)C.rows();
        }

        bool is_integer(double v, double tol = 1e-9) { return std::abs(v - std::round(v)) <= tol; }

        long long gcd_ll(long long a, long long b)
        {
            a = std::llabs(a);
            b = std::llabs(b);
            while (b)
            {
                const long long t = a % b;
                a = b;
                b = t;
            }
            return a;
        }
    }

    PhaseFn MetaplecticOp::apply(const PhaseFn &F) const
    {
        require_size(F.size(), U.cols(), "phase-space function");
        const Eigen::VectorXcd v = U * Eigen::Map<const Eigen::VectorXcd>(F.data(), F.size());
        return Eigen::Map<const PhaseFn>(v.data(), F.rows(), F.cols());
    }

    PhaseFn MetaplecticOp::apply_adjoint(const PhaseFn &F) const
    {
        require_size(F.size(), U.cols(), "phase-space function");
        const Eigen::VectorXcd v = U.adjoint() * Eigen::Map<const Eigen::VectorXcd>(F.data(), F.size());
        return Eigen::Map<const PhaseFn>(v.data(), F.rows(), F.cols());
    }

    MetaplecticOp mu_fourier(int N, int d)
    {
        make_grid(N);
        if (d != 1 && d != 2)
            fail(ErrorCode::BadShape, "dimension must be 1 or 2");
        Eigen::MatrixXcd F1(N, N);
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                F1(a, b) = quarter_phase(-4LL * ((long long)a * b % N), N) / std::sqrt((double)N);
        MetaplecticOp op;
        op.N = N;
        op.d = d;
        op.word = {{FactorKind::J, RMat::Zero(d, d)}};
        if (d == 1)
            op.U = F1;
        else
            op.U = Eigen::kroneckerProduct(F1, F1);
        return op;
    }

    MetaplecticOp mu_chirp(int N, const RMat &C)
    {
        make_grid(N);
        const int d = dim_of(C);
        if ((C - C.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            fail(ErrorCode::NotSymmetric, "chirp matrix is not symmetric");
        Eigen::MatrixXi C2(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
            {
                if (!is_integer(2.0 * C(i, j)))
                {
                    std::ostringstream os;
                    os << "chirp entry " << C(i, j) << " is not a half-integer";
                    fail(ErrorCode::ChirpNotRepresentable, os.str());
                }
                C2(i, j) = (int)std::lround(2.0 * C(i, j));
            }
        const int n = d == 1 ? N : N * N;
        MetaplecticOp op;
        op.N = N;
        op.d = d;
        op.word = {{FactorKind::VC, C}};
        op.U = Eigen::MatrixXcd::Zero(n, n);
        for (int f = 0; f < n; ++f)
        {
            std::vector<int> y = unflat(f, N, d);
            for (auto &v : y)
                v = cen(v, N);
            long long q = 0; // y.(2C)y
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    q += (long long)y[i] * C2(i, j) * y[j];
            op.U(f, f) = quarter_phase(q, N);
        }
        return op;
    }

    MetaplecticOp mu_dilate(int N, const RMat &L)
    {
        make_grid(N);
        const int d = dim_of(L);
        Eigen::MatrixXi Li(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
            {
                if (!is_integer(L(i, j)))
                {
                    std::ostringstream os;
                    os << "dilation entry " << L(i, j) << " is not an integer";
                    fail(ErrorCode::DilationNotUnit, os.str());
                }
                Li(i, j) = (int)std::lround(L(i, j));
            }
        const long long det = d == 1 ? Li(0, 0) : (long long)Li(0, 0) * Li(1, 1) - (long long)Li(0, 1) * Li(1, 0);
        if (gcd_ll(det, N) != 1)
            fail(ErrorCode::DilationNotUnit, "det L = " + std::to_string(det) + " is not a unit mod " + std::to_string(N));
        const int n = d == 1 ? N : N * N;
        MetaplecticOp op;
        op.N = N;
        op.d = d;
        op.word = {{FactorKind::DL, L}};
        op.U = Eigen::MatrixXcd::Zero(n, n);
        for (int f = 0; f < n; ++f)
        {
            const std::vector<int> y = unflat(f, N, d);
            std::vector<int> Ly(d, 0);
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    Ly[i] += Li(i, j) * y[j];
            op.U(f, flat(Ly, N)) = 1.0;
        }
        return op;
    }

    MetaplecticOp mu_vtb(int N, const RMat &B)
    {
        const MetaplecticOp F = mu_fourier(N, dim_of(B));
        const MetaplecticOp c = mu_chirp(N, -B);
        MetaplecticOp op;
        op.N = N;
        op.d = F.d;
        op.word = {{FactorKind::VTB, B}};
        op.U = F.U.adjoint() * c.U * F.U;
        return op;
    }

    MetaplecticOp mu_factor(int N, const Factor &f)
    {
        switch (f.kind)
        {
        case FactorKind::J:
            return mu_fourier(N, f.param.size() ? (int)f.param.rows() : 2);
        case FactorKind::VC:
            return mu_chirp(N, f.param);
        case FactorKind::VTB:
            return mu_vtb(N, f.param);
        case FactorKind::DL:
            return mu_dilate(N, f.param);
        }
        fail(ErrorCode::BadShape, "unknown factor");
    }

    MetaplecticOp mu_from(int N, const SympMat &M)
    {
        const GeneratorWord w = general_decompose(M);
        MetaplecticOp op = mu_factor(N, w.front());
        for (std::size_t i = 1; i < w.size(); ++i)
            op.U = op.U * mu_factor(N, w[i]).U;
        op.word = w;
        const auto zs = standard_test_set(M, 24);
        op.validity = intertwine_check(op, M, zs);
        op.tested = zs.size();
        return op;
    }

    Eigen::MatrixXcd rho_d(int N, int d, const std::vector<long long> &z)
    {
        if ((int)z.size() != 2 * d)
            fail(ErrorCode::BadShape, "rho_d needs a vector of length 2d");
        const int n = d == 1 ? N : N * N;
        long long xw = 0;
        for (int i = 0; i < d; ++i)
            xw += z[i] * z[d + i];
        const cplx half = quarter_phase(-2 * xw, N);
        Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(n, n);
        for (int f = 0; f < n; ++f)
        {
            const std::vector<int> y = unflat(f, N, d);
            std::vector<int> ys(d);
            long long wy = 0;
            for (int i = 0; i < d; ++i)
            {
                ys[i] = (int)modn(y[i] - z[i], N);
                wy += modn(z[d + i], N) * (long long)y[i];
            }
            R(f, flat(ys, N)) = half * quarter_phase(4 * (wy % N), N);
        }
        return R;
    }

    double phase_aligned_residual(const Eigen::MatrixXcd &X, const Eigen::MatrixXcd &Y)
    {
        require_size(X.size(), Y.size(), "compared array");
        const double ymax = Y.cwiseAbs().maxCoeff();
        if (ymax == 0.0)
            return X.cwiseAbs().maxCoeff();
        Eigen::Index k = 0;
        for (; k < Y.size(); ++k)
            if (std::abs(Y.data()[k]) > 0.5 * ymax)
                break;
        const cplx yk = Y.data()[k];
        const cplx c = X.data()[k] / yk;
        const double mag = std::abs(c);
        const cplx ph = mag > 0 ? c / mag : cplx(1.0);
        return (X - ph * Y).cwiseAbs().maxCoeff();
    }

    double intertwine_check(const MetaplecticOp &A, const SympMat &M, const std::vector<std::vector<long long>> &zs)
    {
        if (M.M.rows() != 2 * A.d)
            fail(ErrorCode::BadShape, "symplectic matrix does not match operator dimension");
        double worst = 0.0;
        for (const auto &z : zs)
        {
            Eigen::VectorXd zv(2 * A.d);
            for (int i = 0; i < 2 * A.d; ++i)
                zv(i) = (double)z[i];
            const Eigen::VectorXd mz = M.M * zv;
            std::vector<long long> img(2 * A.d);
            for (int i = 0; i < 2 * A.d; ++i)
            {
                if (!is_integer(mz(i)))
                {
                    std::ostringstream os;
                    os << "image coordinate " << mz(i) << " is not an integer";
                    fail(ErrorCode::NonIntegerImage, os.str());
                }
                img[i] = cen(std::llround(mz(i)), A.N);
            }
            const Eigen::MatrixXcd lhs = A.U * rho_d(A.N, A.d, z) * A.U.adjoint();
            worst = std::max(worst, phase_aligned_residual(lhs, rho_d(A.N, A.d, img)));
        }
        return worst;
    }

    std::vector<std::vector<long long>> standard_test_set(const SympMat &M, int count)
    {
        const int n = (int)M.M.rows();
        std::vector<std::vector<long long>> out;
        // unit vectors first, then a fixed lattice walk through [-2, 2]^n
        for (int i = 0; i < n && (int)out.size() < count; ++i)
            for (int scale : {1, 2})
            {
                std::vector<long long> z(n, 0);
                z[i] = scale;
                Eigen::VectorXd zv = Eigen::VectorXd::Zero(n);
                zv(i) = scale;
                const Eigen::VectorXd mz = M.M * zv;
                bool ok = true;
                for (int k = 0; k < n; ++k)
                    ok = ok && is_integer(mz(k));
                if (ok)
                {
                    out.push_back(z);
                    break;
                }
            }
        long long total = 1;
        for (int i = 0; i < n; ++i)
            total *= 5;
        for (long long idx = 1; idx < total && (int)out.size() < count; idx += 37)
        {
            std::vector<long long> z(n);
            long long r = idx;
            Eigen::VectorXd zv(n);
            for (int i = 0; i < n; ++i)
            {
                z[i] = r % 5 - 2;
                zv(i) = (double)z[i];
                r /= 5;
            }
            const Eigen::VectorXd mz = M.M * zv;
            bool ok = true;
            for (int k = 0; k < n; ++k)
                ok = ok && is_integer(mz(k));
            if (ok)
                out.push_back(z);
        }
        return out;
    }

    PhaseFn a_weyl_symbol(const OperatorMat &T, const MetaplecticOp &A)
    {
        if (A.d != 2)
            fail(ErrorCode::BadShape, "A-Weyl symbols need a phase-space metaplectic operator");
        require_size(T.rows(), A.N, "operator");
        return A.apply(weyl_symbol(T));
    }

    OperatorMat a_quantize(const PhaseFn &sigma, const MetaplecticOp &A)
    {
        if (A.d != 2)
            fail(ErrorCode::BadShape, "A-quantisation needs a phase-space metaplectic operator");
        return weyl_quantize(A.apply_adjoint(sigma));
    }

    OperatorMat meta_transform_op(const OperatorMat &T, const MetaplecticOp &A)
    {
        return weyl_quantize(a_weyl_symbol(T, A));
    }

    double b_covariance_check(const MetaplecticOp &A, const RMat &B, const OperatorMat &S, const TFPoint &z)
    {
        if (B.rows() != 2 || B.cols() != 2)
            fail(ErrorCode::BadShape, "B must be 2x2");
        const Eigen::Vector2d bz = B * Eigen::Vector2d((double)z.x, (double)z.w);
        if (!is_integer(bz(0)) || !is_integer(bz(1)))
            fail(ErrorCode::NonIntegerImage, "Bz is not an integer point");
        const Grid G = grid_of(A.N);
        const PhaseFn lhs = a_weyl_symbol(op_translate(z, S), A);
        const PhaseFn rhs = translate(a_weyl_symbol(S, A), make_point(G, std::llround(bz(0)), std::llround(bz(1))));
        const double scale = std::max(1e-300, rhs.cwiseAbs().maxCoeff());
        return phase_aligned_residual(lhs, rhs) / scale;
    }
}
