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

#include "qtfa/symplectic.hpp"

#include <cmath>
#include <sstream>

namespace qtfa
{
    namespace
    {
        double maxabs(const RMat &A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

        void require_square_even(const RMat &M)
        {
            if (M.rows() != M.cols() || M.rows() == 0 || M.rows() % 2 != 0)
            {
                std::ostringstream os;
                os << "expected a square matrix of even size, got " << M.rows() << "x" << M.cols();
                fail(ErrorCode::BadShape, os.str());
            }
        }

        void require_symmetric(const RMat &C, const char *what)
        {
            if (C.rows() != C.cols())
                fail(ErrorCode::BadShape, std::string(what) + " must be square");
            if (maxabs(C - C.transpose()) > SYMP_TOL)
                fail(ErrorCode::NotSymmetric, std::string(what) + " is not symmetric");
        }

        RMat symmetrize(const RMat &C) { return 0.5 * (C + C.transpose()); }

        RMat rows(std::initializer_list<std::initializer_list<double>> r)
        {
            RMat M((Eigen::Index)r.size(), (Eigen::Index)r.begin()->size());
            Eigen::Index i = 0;
            for (const auto &row : r)
            {
                Eigen::Index j = 0;
                for (double v : row)
                    M(i, j++) = v;
                ++i;
            }
            return M;
        }
    }

    RMat skew_form(int m)
    {
        RMat J = RMat::Zero(2 * m, 2 * m);
        J.topRightCorner(m, m) = RMat::Identity(m, m);
        J.bottomLeftCorner(m, m) = -RMat::Identity(m, m);
        return J;
    }

    bool is_symplectic(const RMat &M, double tol)
    {
        require_square_even(M);
        const RMat J = skew_form((int)M.rows() / 2);
        return maxabs(M.transpose() * J * M - J) <= tol;
    }

    bool block_conditions(const RMat &M, double tol)
    {
        require_square_even(M);
        const Eigen::Index m = M.rows() / 2;
        const RMat A = M.topLeftCorner(m, m), B = M.topRightCorner(m, m);
        const RMat C = M.bottomLeftCorner(m, m), D = M.bottomRightCorner(m, m);
        const RMat AtC = A.transpose() * C, BtD = B.transpose() * D;
        return maxabs(AtC - AtC.transpose()) <= tol && maxabs(BtD - BtD.transpose()) <= tol &&
               maxabs(A.transpose() * D - C.transpose() * B - RMat::Identity(m, m)) <= tol;
    }

    SympMat make_symp(const RMat &M)
    {
        if (!is_symplectic(M))
            fail(ErrorCode::NotSymplectic, "matrix violates M^T J M = J");
        return SympMat{M};
    }

    Blocks block_parts(const SympMat &S)
    {
        const Eigen::Index m = S.m();
        return Blocks{S.M.topLeftCorner(m, m), S.M.topRightCorner(m, m), S.M.bottomLeftCorner(m, m), S.M.bottomRightCorner(m, m)};
    }

    SympMat from_blocks(const RMat &A, const RMat &B, const RMat &C, const RMat &D)
    {
        const Eigen::Index m = A.rows();
        RMat M(2 * m, 2 * m);
        M << A, B, C, D;
        return make_symp(M);
    }

    SympMat symp_inverse(const SympMat &S)
    {
        if (!is_symplectic(S.M))
            fail(ErrorCode::NotSymplectic, "symp_inverse needs a symplectic matrix");
        const Blocks b = block_parts(S);
        RMat M(S.M.rows(), S.M.cols());
        M << b.D.transpose(), -b.B.transpose(), -b.C.transpose(), b.A.transpose();
        return SympMat{M};
    }

    SympMat make_J(int m) { return SympMat{skew_form(m)}; }

    SympMat make_VC(const RMat &C)
    {
        require_symmetric(C, "C");
        const Eigen::Index m = C.rows();
        RMat M = RMat::Identity(2 * m, 2 * m);
        M.bottomLeftCorner(m, m) = C;
        return SympMat{M};
    }

    SympMat make_VTB(const RMat &B)
    {
        require_symmetric(B, "B");
        const Eigen::Index m = B.rows();
        RMat M = RMat::Identity(2 * m, 2 * m);
        M.topRightCorner(m, m) = B;
        return SympMat{M};
    }

    SympMat make_DL(const RMat &L)
    {
        if (L.rows() != L.cols())
            fail(ErrorCode::BadShape, "L must be square");
        if (std::abs(L.determinant()) < 1e-10)
            fail(ErrorCode::Singular, "L is singular");
        const Eigen::Index m = L.rows();
        RMat M = RMat::Zero(2 * m, 2 * m);
        M.topLeftCorner(m, m) = L.inverse();
        M.bottomRightCorner(m, m) = L.transpose();
        return SympMat{M};
    }

    RMat factor_matrix(const Factor &f)
    {
        switch (f.kind)
        {
        case FactorKind::J:
            return skew_form(f.param.size() ? (int)f.param.rows() : 2);
        case FactorKind::VC:
            return make_VC(f.param).M;
        case FactorKind::VTB:
            return make_VTB(f.param).M;
        case FactorKind::DL:
            return make_DL(f.param).M;
        }
        fail(ErrorCode::BadShape, "unknown factor");
    }

    SympMat compose(const GeneratorWord &word)
    {
        if (word.empty())
            fail(ErrorCode::BadShape, "empty generator word");
        RMat M = factor_matrix(word.front());
        for (std::size_t i = 1; i < word.size(); ++i)
            M = M * factor_matrix(word[i]);
        return SympMat{M};
    }

    std::string factor_name(FactorKind k)
    {
        switch (k)
        {
        case FactorKind::J:
            return "J";
        case FactorKind::VC:
            return "V_C";
        case FactorKind::VTB:
            return "VT_B";
        case FactorKind::DL:
            return "D_L";
        }
        return "?";
    }

    GeneratorWord free_decompose(const SympMat &S)
    {
        if (!is_symplectic(S.M))
            fail(ErrorCode::NotSymplectic, "free_decompose needs a symplectic matrix");
        const Blocks b = block_parts(S);
        if (std::abs(b.B.determinant()) < 1e-10)
            fail(ErrorCode::NotFree, "top-right block is singular");
        const RMat Binv = b.B.inverse();
        const int m = S.m();
        // J carries its size in a zero m x m parameter
        return {{FactorKind::VC, symmetrize(b.D * Binv)},
                {FactorKind::DL, Binv},
                {FactorKind::J, RMat::Zero(m, m)},
                {FactorKind::VC, symmetrize(Binv * b.A)}};
    }

    GeneratorWord general_decompose(const SympMat &S)
    {
        if (!is_symplectic(S.M))
            fail(ErrorCode::NotSymplectic, "general_decompose needs a symplectic matrix");
        const Blocks b = block_parts(S);
        const int m = S.m();
        const RMat I = RMat::Identity(m, m);

        std::vector<RMat> candidates;
        if (std::abs(b.A.determinant()) > 1e-10)
            candidates.push_back(RMat::Zero(m, m));
        else
        {
            // orthogonal projector onto ker(A)
            Eigen::JacobiSVD<RMat> svd(b.A, Eigen::ComputeFullV);
            const auto &sv = svd.singularValues();
            const double cut = 1e-10 * std::max(1.0, sv.size() ? sv(0) : 0.0);
            RMat P = RMat::Zero(m, m);
            for (int i = 0; i < m; ++i)
                if (sv(i) <= cut)
                    P += svd.matrixV().col(i) * svd.matrixV().col(i).transpose();
            for (int k = 1; k <= 8; ++k)
                candidates.push_back(-(double)k * P);
            for (int k = 1; k <= 8; ++k)
                candidates.push_back(-(double)k * I);
        }
        for (const RMat &Ap : candidates)
        {
            const RMat Linv = b.A - b.B * Ap;
            if (std::abs(Linv.determinant()) < 1e-10)
                continue;
            const RMat L = Linv.inverse();
            const RMat Bt = symmetrize(L * b.B);
            const RMat At = symmetrize(L.transpose().inverse() * (b.C - b.D * Ap));
            GeneratorWord w{{FactorKind::DL, L}, {FactorKind::VC, At}, {FactorKind::VTB, Bt}, {FactorKind::VC, symmetrize(Ap)}};
            if (maxabs(compose(w).M - S.M) <= 1e-9 * std::max(1.0, maxabs(S.M)))
                return w;
        }
        fail(ErrorCode::Singular, "no pivot makes A - B A' invertible");
    }

    std::vector<std::string> named_matrix_names()
    {
        return {"A_FOmega", "A_F2", "A_STFT", "A_Rih", "kernel_map", "A_FT2", "L_phase", "U_phase", "weyl_to_kn", "weyl_to_kn_grid", "J", "I"};
    }

    SympMat named_matrix(const std::string &name)
    {
        const double h = 0.5;
        if (name == "A_FOmega")
            return make_symp(rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}));
        if (name == "A_F2")
            return make_symp(rows({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}}));
        if (name == "A_STFT")
            return make_symp(rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, -h, 0}, {-1, 0, 0, h}}));
        if (name == "A_Rih")
            return make_symp(rows({{1, 0, 0, -h}, {0, 1, -h, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
        if (name == "kernel_map")
            return make_symp(rows({{h, h, 0, 0}, {0, 0, h, -h}, {0, 0, 1, 1}, {-1, 1, 0, 0}}));
        if (name == "A_FT2")
            return make_symp(rows({{1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}}));
        if (name == "L_phase")
            return make_DL(rows({{h, h}, {1, -1}}));
        if (name == "U_phase")
            return SympMat{make_DL(rows({{h, h}, {1, -1}})).M * named_matrix("A_FT2").M};
        if (name == "weyl_to_kn")
            return make_VTB(rows({{0, h}, {h, 0}}));
        if (name == "weyl_to_kn_grid")
            return make_VTB(rows({{0, 1}, {1, 0}}));
        if (name == "J")
            return make_J(2);
        if (name == "I")
            return SympMat{RMat::Identity(4, 4)};
        fail(ErrorCode::UnknownName, "no named matrix '" + name + "'");
    }

    std::optional<RMat> covariance_form(const SympMat &S)
    {
        if (!is_symplectic(S.M))
            fail(ErrorCode::NotSymplectic, "covariance_form needs a symplectic matrix");
        const Blocks b = block_parts(S);
        if (maxabs(b.C) > 1e-10)
            return std::nullopt;
        if (std::abs(b.A.determinant()) < 1e-10)
            return std::nullopt;
        if (maxabs(b.D - b.A.inverse().transpose()) > 1e-10)
            return std::nullopt;
        return b.A;
    }

    PhaseChange phase_and_change_of_vars(const Grid &grid, const TFPoint &w, const TFPoint &z)
    {
        const long long e = -(long long)(w.x + z.x) * (w.w - z.w);
        const long long m = ((e % (2LL * grid.N)) + 2LL * grid.N) % (2LL * grid.N);
        PhaseChange out;
        out.c = std::polar(1.0, PI * (double)m / grid.N);
        out.u = {0.5 * (w.x + z.x), 0.5 * (w.w + z.w), (double)(w.w - z.w), (double)(z.x - w.x)};
        return out;
    }
}
