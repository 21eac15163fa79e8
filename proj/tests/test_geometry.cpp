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

#include "catch_amalgamated.hpp"
#include "oracle.hpp"
#include "qtfa/metaplectic.hpp"

using namespace qtfa;
using Catch::Matchers::WithinAbs;

namespace
{
    RMat rm(std::initializer_list<std::initializer_list<double>> r)
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

    double maxabs(const RMat &A) { return A.cwiseAbs().maxCoeff(); }

    RMat rand_sym(Rng &r, int m)
    {
        RMat C(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                C(i, j) = r.normal();
        return 0.5 * (C + C.transpose());
    }

    RMat rand_invertible(Rng &r, int m)
    {
        RMat L(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                L(i, j) = r.normal() * 0.4;
        return L + RMat::Identity(m, m) * (1.0 + r.uniform());
    }

    GeneratorWord random_word(Rng &r, int len)
    {
        GeneratorWord w;
        for (int i = 0; i < len; ++i)
        {
            switch (r.integer(0, 3))
            {
            case 0:
                w.push_back({FactorKind::J, RMat::Zero(2, 2)});
                break;
            case 1:
                w.push_back({FactorKind::VC, rand_sym(r, 2)});
                break;
            case 2:
                w.push_back({FactorKind::VTB, rand_sym(r, 2)});
                break;
            default:
                w.push_back({FactorKind::DL, rand_invertible(r, 2)});
            }
        }
        return w;
    }

    template <class F>
    ErrorCode code_of(F &&f)
    {
        try
        {
            f();
        }
        catch (const Error &e)
        {
            return e.code();
        }
        return ErrorCode::IoError;
    }
}

TEST_CASE("symplectic verification and block conditions")
{
    REQUIRE(is_symplectic(skew_form(2)));
    REQUIRE(is_symplectic(named_matrix("A_STFT").M));
    // J + 0.1 E_11 is still symplectic (E_11 J E_11 = 0 and the first-order terms cancel)
    RMat P = skew_form(2);
    P(0, 0) += 0.1;
    REQUIRE(is_symplectic(P));
    P(0, 0) = 0;
    P(0, 1) += 0.1;
    REQUIRE_FALSE(is_symplectic(P));
    REQUIRE_FALSE(block_conditions(P));
    REQUIRE(code_of([] { is_symplectic(RMat::Identity(3, 3)); }) == ErrorCode::BadShape);
    for (const auto &n : named_matrix_names())
    {
        const SympMat S = named_matrix(n);
        INFO(n);
        REQUIRE(is_symplectic(S.M));
        REQUIRE(block_conditions(S.M));
        REQUIRE_THAT(S.M.determinant(), WithinAbs(1.0, 1e-8));
    }
    REQUIRE(code_of([] { named_matrix("nope"); }) == ErrorCode::UnknownName);
}

TEST_CASE("named matrices match their displays")
{
    const double h = 0.5;
    CHECK(named_matrix("A_FOmega").M == rm({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}));
    CHECK(named_matrix("A_F2").M == rm({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}}));
    CHECK(named_matrix("A_STFT").M == rm({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, -h, 0}, {-1, 0, 0, h}}));
    CHECK(named_matrix("A_Rih").M == rm({{1, 0, 0, -h}, {0, 1, -h, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(named_matrix("A_Rih").M.topRightCorner(2, 2) == rm({{0, -h}, {-h, 0}}));
    CHECK(named_matrix("kernel_map").M == rm({{h, h, 0, 0}, {0, 0, h, -h}, {0, 0, 1, 1}, {-1, 1, 0, 0}}));
    CHECK(named_matrix("A_FT2").M == rm({{1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}}));
    // A_STFT = V_{C0} A_FOmega with C0 = [[0, -1/2], [-1/2, 0]]
    const RMat C0 = rm({{0, -h}, {-h, 0}});
    CHECK(maxabs(make_VC(C0).M * named_matrix("A_FOmega").M - named_matrix("A_STFT").M) == 0);
    // Weyl -> Kohn-Nirenberg: J^T V_{C0} J = [[I, -C0], [0, I]]
    CHECK(maxabs(skew_form(2).transpose() * make_VC(C0).M * skew_form(2) - named_matrix("weyl_to_kn").M) == 0);
}

TEST_CASE("closed-form inverse and generator relations")
{
    CHECK(maxabs(symp_inverse(make_J(2)).M + skew_form(2)) == 0);
    const SympMat R = named_matrix("A_Rih");
    CHECK(maxabs(symp_inverse(R).M - R.M.inverse()) < 1e-12);
    Rng r(31);
    const RMat C = rand_sym(r, 2), C2 = rand_sym(r, 2);
    CHECK(maxabs(symp_inverse(make_VC(C)).M - make_VC(-C).M) < 1e-15);
    CHECK(maxabs(make_VC(C).M * make_VC(C2).M - make_VC(C + C2).M) < 1e-12);
    CHECK(maxabs(make_VC(C).M * make_VC(-C).M - RMat::Identity(4, 4)) < 1e-12);
    const RMat L1 = rand_invertible(r, 2), L2 = rand_invertible(r, 2);
    CHECK(maxabs(make_DL(L1).M * make_DL(L2).M - make_DL(L2 * L1).M) < 1e-12);
    CHECK(maxabs(make_DL(RMat::Identity(2, 2)).M - RMat::Identity(4, 4)) == 0);
    CHECK(code_of([] { make_VC(rm({{0, 1}, {0, 0}})); }) == ErrorCode::NotSymmetric);
    CHECK(code_of([] { make_DL(rm({{1, 2}, {2, 4}})); }) == ErrorCode::Singular);
    CHECK(code_of([] { symp_inverse(SympMat{rm({{1, 1}, {0, 2}})}); }) == ErrorCode::NotSymplectic);

    for (int k = 0; k < 100; ++k)
    {
        const SympMat M = compose(random_word(r, 6));
        const double s = std::max(1.0, maxabs(M.M));
        REQUIRE(is_symplectic(M.M, 1e-10 * s * s));
        REQUIRE_THAT(M.M.determinant(), WithinAbs(1.0, 1e-8 * std::pow(s, 4)));
        REQUIRE(maxabs(symp_inverse(M).M - M.M.inverse()) < 1e-10 * std::pow(s, 4));
    }
}

TEST_CASE("free decomposition")
{
    const GeneratorWord wj = free_decompose(make_J(2));
    REQUIRE(wj.size() == 4);
    CHECK(maxabs(wj[0].param) == 0);
    CHECK(maxabs(wj[1].param - RMat::Identity(2, 2)) == 0);
    CHECK(maxabs(wj[3].param) == 0);
    CHECK(maxabs(compose(wj).M - skew_form(2)) == 0);
    const SympMat F = named_matrix("A_FOmega");
    CHECK(maxabs(compose(free_decompose(F)).M - F.M) < 1e-12);
    CHECK(code_of([] { free_decompose(SympMat{RMat::Identity(4, 4)}); }) == ErrorCode::NotFree);
    Rng r(32);
    for (int k = 0; k < 50; ++k)
    {
        const SympMat M = compose(random_word(r, 5));
        if (std::abs(block_parts(M).B.determinant()) < 1e-3)
            continue;
        const GeneratorWord w = free_decompose(M);
        REQUIRE(maxabs(compose(w).M - M.M) < 1e-8 * std::max(1.0, maxabs(M.M) * maxabs(M.M)));
    }
}

TEST_CASE("general decomposition")
{
    const GeneratorWord id = general_decompose(SympMat{RMat::Identity(4, 4)});
    REQUIRE(id.size() == 4);
    CHECK(id[0].kind == FactorKind::DL);
    CHECK(id[1].kind == FactorKind::VC);
    CHECK(id[2].kind == FactorKind::VTB);
    CHECK(id[3].kind == FactorKind::VC);
    CHECK(maxabs(id[0].param - RMat::Identity(2, 2)) == 0);
    CHECK((maxabs(id[1].param) == 0 && maxabs(id[2].param) == 0 && maxabs(id[3].param) == 0));

    // the displayed decomposition: C = L^{-1} = diag(1,-1), A = diag(0,-1), B = diag(0,1)
    const GeneratorWord ft = general_decompose(named_matrix("A_FT2"));
    CHECK(maxabs(ft[0].param.inverse() - rm({{1, 0}, {0, -1}})) == 0);
    CHECK(maxabs(ft[1].param - rm({{0, 0}, {0, -1}})) == 0);
    CHECK(maxabs(ft[2].param - rm({{0, 0}, {0, 1}})) == 0);
    CHECK(maxabs(ft[3].param - rm({{0, 0}, {0, -1}})) == 0);

    Rng r(33);
    for (int k = 0; k < 100; ++k)
    {
        const SympMat M = compose(random_word(r, 6));
        const GeneratorWord w = general_decompose(M);
        REQUIRE(w.size() == 4);
        REQUIRE(maxabs(compose(w).M - M.M) <= 1e-9 * std::max(1.0, maxabs(M.M)));
        // deterministic
        const GeneratorWord w2 = general_decompose(M);
        for (int i = 0; i < 4; ++i)
            REQUIRE(w[i].param == w2[i].param);
    }
    for (const auto &n : named_matrix_names())
        REQUIRE(maxabs(compose(general_decompose(named_matrix(n))).M - named_matrix(n).M) < 1e-10);
}

TEST_CASE("covariance form")
{
    CHECK(maxabs(*covariance_form(named_matrix("weyl_to_kn")) - RMat::Identity(2, 2)) == 0);
    CHECK_FALSE(covariance_form(make_J(2)).has_value());
    CHECK(maxabs(*covariance_form(named_matrix("A_Rih")) - RMat::Identity(2, 2)) == 0);
    Rng r(34);
    for (int k = 0; k < 40; ++k)
    {
        const RMat L = rand_invertible(r, 2), B = rand_sym(r, 2), C = rand_sym(r, 2);
        const SympMat pos{make_DL(L).M * make_VTB(B).M};
        const auto got = covariance_form(pos);
        REQUIRE(got.has_value());
        REQUIRE(maxabs(*got - L.inverse()) < 1e-10);
        const SympMat neg{make_VC(C + RMat::Identity(2, 2) * 0.5).M * pos.M};
        REQUIRE_FALSE(covariance_form(neg).has_value());
    }
}

TEST_CASE("phase factor and change of variables")
{
    const Grid G = make_grid(8);
    const PhaseChange d = phase_and_change_of_vars(G, {3, -2}, {3, -2});
    CHECK(std::abs(d.c - 1.0) < 1e-15);
    CHECK(d.u == std::array<double, 4>{3, -2, 0, 0});
    const PhaseChange e = phase_and_change_of_vars(G, {0, 0}, {2, 0});
    CHECK(e.u == std::array<double, 4>{1, 0, 0, 2});

    // consistency with Cohen's class: the frequency half enters negated, see the README
    Rng r(35);
    const int N = 8;
    const OperatorMat T = r.complex_matrix(N, N);
    PhaseFn Fs = PhaseFn::Zero(N, N);
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            Fs(G.index(a), G.index(b)) = r.complex_normal();
    const OperatorMat S = fourier_wigner_inverse(Fs);
    const PhaseFn sS = weyl_symbol(S), sT = weyl_symbol(T);
    for (const auto &w : all_points(G))
        for (const auto &z : all_points(G))
        {
            if ((w.x + z.x) % 2 || (w.w + z.w) % 2 || std::abs(z.x - w.x) > 2 || std::abs(z.w - w.w) > 2)
                continue;
            const PhaseChange pc = phase_and_change_of_vars(G, w, z);
            const std::array<long long, 4> u{std::llround(pc.u[0]), std::llround(pc.u[1]), -std::llround(pc.u[2]), -std::llround(pc.u[3])};
            REQUIRE(std::abs(cohens_class(T, S, {w, z}) - pc.c * phase_space_stft(sT, sS, u) / (double)N) < 1e-10);
        }
}

TEST_CASE("metaplectic generators")
{
    const int N = 8;
    const MetaplecticOp F = mu_fourier(N, 2);
    Rng r(36);
    const PhaseFn X = r.complex_matrix(N, N);
    CHECK(oracle::maxabs(F.apply(F.apply(X)) - reflect(X)) < 1e-12);
    CHECK(oracle::maxabs(mu_chirp(N, RMat::Zero(2, 2)).U - Eigen::MatrixXcd::Identity(64, 64)) == 0);
    CHECK(oracle::maxabs(mu_dilate(N, RMat::Identity(2, 2)).U - Eigen::MatrixXcd::Identity(64, 64)) == 0);
    CHECK(code_of([] { mu_chirp(8, rm({{0.3, 0}, {0, 0}})); }) == ErrorCode::ChirpNotRepresentable);
    CHECK(code_of([] { mu_dilate(8, rm({{2, 0}, {0, 1}})); }) == ErrorCode::DilationNotUnit);
    CHECK(code_of([] { mu_dilate(8, rm({{0.5, 0}, {0, 1}})); }) == ErrorCode::DilationNotUnit);
    for (const MetaplecticOp &op : {F, mu_chirp(N, rm({{1, 0.5}, {0.5, -1}})), mu_dilate(N, rm({{1, 1}, {0, 1}})), mu_vtb(N, rm({{0, 1}, {1, 2}}))})
    {
        CHECK(oracle::maxabs(op.U * op.U.adjoint() - Eigen::MatrixXcd::Identity(64, 64)) < 1e-12);
        CHECK(std::abs(op.apply(X).norm() - X.norm()) < 1e-10);
    }
}

TEST_CASE("intertwining")
{
    const int N = 8;
    // signal level, exhaustive
    const MetaplecticOp F1 = mu_fourier(N, 1);
    std::vector<std::vector<long long>> all;
    for (int x = -4; x < 4; ++x)
        for (int w = -4; w < 4; ++w)
            all.push_back({x, w});
    CHECK(intertwine_check(F1, make_J(1), all) < 1e-10);
    CHECK(intertwine_check(mu_chirp(N, RMat::Zero(2, 2)), SympMat{RMat::Identity(4, 4)}, standard_test_set(SympMat{RMat::Identity(4, 4)}, 20)) == 0);

    std::vector<std::vector<long long>> box, even;
    for (int k = 0; k < 256; k += 5)
    {
        std::vector<long long> z{k % 4 - 2, (k / 4) % 4 - 2, (k / 16) % 4 - 2, (k / 64) % 4 - 2};
        box.push_back(z);
        std::vector<long long> z2 = z;
        for (auto &v : z2)
            v *= 2;
        even.push_back(z2);
    }
    const RMat Ci = rm({{1, 2}, {2, -1}});
    CHECK(intertwine_check(mu_fourier(N, 2), make_J(2), box) < 1e-10);
    CHECK(intertwine_check(mu_chirp(N, Ci), make_VC(Ci), even) < 1e-8);
    CHECK(intertwine_check(mu_chirp(N, Ci), make_VC(Ci), box) < 1e-8);
    CHECK(intertwine_check(mu_vtb(N, Ci), make_VTB(Ci), box) < 1e-8);
    const RMat L = rm({{1, 1}, {0, 1}});
    CHECK(intertwine_check(mu_dilate(N, L), make_DL(L), box) < 1e-10);
    // half-integer chirps are not periodic on the grid
    const RMat Ch = rm({{0, 0.5}, {0.5, 0}});
    CHECK(intertwine_check(mu_chirp(N, Ch), make_VC(Ch), even) > 0.1);
    CHECK(code_of([&] { intertwine_check(mu_chirp(N, Ch), make_VC(Ch), {{1, 0, 0, 0}}); }) == ErrorCode::NonIntegerImage);
}

TEST_CASE("metaplectic operators from symplectic matrices")
{
    const int N = 8;
    const Grid G = make_grid(N);
    CHECK(oracle::maxabs(mu_from(N, SympMat{RMat::Identity(4, 4)}).U - Eigen::MatrixXcd::Identity(64, 64)) < 1e-12);

    // A_FOmega acts as the symplectic Fourier transform
    const MetaplecticOp Fo = mu_from(N, named_matrix("A_FOmega"));
    CHECK(Fo.validity < 1e-10);
    Eigen::MatrixXcd SF(64, 64);
    for (int k = 0; k < 64; ++k)
    {
        PhaseFn e = PhaseFn::Zero(N, N);
        e.data()[k] = 1.0;
        const PhaseFn s = sympft(e);
        SF.col(k) = Eigen::Map<const Eigen::VectorXcd>(s.data(), 64);
    }
    CHECK(phase_aligned_residual(Fo.U, SF) < 1e-10);

    // projective homomorphism on grid-compatible pairs
    const RMat L = rm({{1, 1}, {0, 1}}), B1 = rm({{0, 1}, {1, 2}}), B2 = rm({{1, 0}, {0, -1}});
    const std::vector<std::pair<SympMat, SympMat>> pairs = {
        {make_J(2), make_J(2)}, {make_DL(L), make_VTB(B1)}, {make_VTB(B1), make_VTB(B2)}, {make_J(2), make_DL(L)}};
    for (const auto &[M1, M2] : pairs)
    {
        const MetaplecticOp a = mu_from(N, M1), b = mu_from(N, M2), c = mu_from(N, SympMat{M1.M * M2.M});
        CHECK(a.validity < 1e-10);
        CHECK(phase_aligned_residual(a.U * b.U, c.U) < 1e-8);
    }

    // the kernel map needs the half-integer dilation [[1/2, 1/2], [1, -1]] and is refused on the grid
    const ErrorCode km = code_of([&] { mu_from(N, named_matrix("kernel_map")); });
    CHECK((km == ErrorCode::DilationNotUnit || km == ErrorCode::ChirpNotRepresentable));

    // Kohn-Nirenberg: kn_symbol = mu([[I, C0], [0, I]]) sigma for windows whose spread avoids the wrap
    Rng r(37);
    PhaseFn Fs = PhaseFn::Zero(N, N);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            Fs(G.index(a), G.index(b)) = r.complex_normal();
    const OperatorMat S = fourier_wigner_inverse(Fs);
    const MetaplecticOp kn = mu_from(N, symp_inverse(named_matrix("weyl_to_kn")));
    CHECK(phase_aligned_residual(kn.apply(weyl_symbol(S)), kn_symbol(S)) < 1e-10);
}

TEST_CASE("A-Weyl symbols and metaplectic transforms")
{
    const int N = 8;
    Rng r(38);
    const OperatorMat T = r.complex_matrix(N, N);
    const MetaplecticOp I = mu_from(N, SympMat{RMat::Identity(4, 4)});
    CHECK(oracle::maxabs(a_weyl_symbol(T, I) - weyl_symbol(T)) < 1e-12);
    for (const char *name : {"weyl_to_kn_grid", "A_FOmega", "J"})
    {
        const MetaplecticOp A = mu_from(N, named_matrix(name));
        const PhaseFn sigma = r.complex_matrix(N, N);
        CHECK(oracle::maxabs(a_weyl_symbol(a_quantize(sigma, A), A) - sigma) < 1e-8);
        CHECK(oracle::maxabs(a_quantize(a_weyl_symbol(T, A), A) - T) < 1e-8);
        const Signal f = r.complex_vector(N), g = r.complex_vector(N);
        const cplx lhs = inner(a_quantize(sigma, A) * f, g);
        const cplx rhs = inner(sigma, a_weyl_symbol(rank_one(g, f), A)) / (double)N;
        CHECK(std::abs(lhs - rhs) < 1e-9);
        CHECK(oracle::maxabs(meta_transform_op(T, A) - weyl_quantize(A.apply(weyl_symbol(T)))) < 1e-12);
    }
}

TEST_CASE("B-covariance")
{
    const int N = 8;
    Rng r(39);
    const OperatorMat S = r.complex_matrix(N, N);
    const RMat I2 = RMat::Identity(2, 2);
    const MetaplecticOp id = mu_from(N, SympMat{RMat::Identity(4, 4)});
    const MetaplecticOp kn = mu_from(N, named_matrix("weyl_to_kn"));
    const MetaplecticOp kng = mu_from(N, named_matrix("weyl_to_kn_grid"));
    const RMat L = rm({{1, 1}, {0, 1}});
    const SympMat DV{make_DL(L).M * make_VTB(rm({{0, 1}, {1, 2}})).M};
    const MetaplecticOp dv = mu_from(N, DV);
    const RMat Bdv = *covariance_form(DV);
    const MetaplecticOp J = mu_from(N, make_J(2));
    double worst_neg = 0;
    for (int x = -4; x < 4; x += 2)
        for (int w = -4; w < 4; w += 2)
        {
            const TFPoint z{x, w};
            REQUIRE(b_covariance_check(id, I2, S, z) < 1e-12);
            REQUIRE(b_covariance_check(kn, I2, S, z) < 1e-8);
            REQUIRE(b_covariance_check(kng, I2, S, z) < 1e-8);
            REQUIRE(b_covariance_check(dv, Bdv, S, z) < 1e-8);
            worst_neg = std::max(worst_neg, b_covariance_check(J, I2, S, z));
        }
    CHECK(worst_neg > 0.1);
}
