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
#include "qtfa/qha.hpp"

using namespace qtfa;
using Catch::Matchers::WithinAbs;

namespace
{
    Signal delta(int N, int k)
    {
        Signal d = Signal::Zero(N);
        d(((k % N) + N) % N) = 1.0;
        return d;
    }

    PhaseFn at(const Grid &G, const PhaseFn &F, const TFPoint &z)
    {
        PhaseFn out(1, 1);
        out(0, 0) = F(G.index(z.x), G.index(z.w));
        return out;
    }
}

TEST_CASE("grid construction and reduction")
{
    REQUIRE(make_grid(4).indices() == std::vector<int>{-2, -1, 0, 1});
    REQUIRE(make_grid(32).N == 32);
    REQUIRE_THROWS_MATCHES(make_grid(3), Error, Catch::Matchers::Predicate<Error>([](const Error &e) { return e.code() == ErrorCode::OddSize; }));
    REQUIRE_THROWS_MATCHES(make_grid(2), Error, Catch::Matchers::Predicate<Error>([](const Error &e) { return e.code() == ErrorCode::TooSmall; }));
    const Grid G = make_grid(8);
    for (long long k = -40; k < 40; ++k)
    {
        REQUIRE(G.reduce(k + 8) == G.reduce(k));
        REQUIRE(G.reduce(G.reduce(k)) == G.reduce(k));
        REQUIRE(G.reduce(k) >= -4);
        REQUIRE(G.reduce(k) <= 3);
    }
}

TEST_CASE("lattice enumeration, annihilator and tiling")
{
    const Grid G4 = make_grid(4);
    const LatticeSpec L = make_lattice(G4, 2, 2);
    REQUIRE(L.size() == 4);
    for (const auto &p : L.points)
        REQUIRE((p.x % 2 == 0 && p.w % 2 == 0));
    REQUIRE_THROWS_AS(make_lattice(G4, 3, 2), Error);

    for (int N : {4, 8, 12, 16})
    {
        const Grid G = make_grid(N);
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b)
            {
                if (N % a || N % b)
                    continue;
                const LatticeSpec lat = make_lattice(G, a, b);
                REQUIRE(lat.size() * lat.adjoint_points.size() == (std::size_t)N * N);
                // annihilator by brute force: all z with e^{2 pi i Omega(z, lambda)/N} = 1 on the lattice
                std::vector<TFPoint> ann;
                for (const auto &z : all_points(G))
                {
                    bool ok = true;
                    for (const auto &l : lat.points)
                        if (oracle::mod((long long)l.w * z.x - (long long)z.w * l.x, N) != 0)
                            ok = false;
                    if (ok)
                        ann.push_back(z);
                }
                REQUIRE(ann == lat.adjoint_points);
                const FundamentalDomain D = fundamental_domain(lat);
                REQUIRE(D.Q.size() == lat.size());
                const PhaseFn h = indicator_window(D);
                REQUIRE_THAT(h.real().sum(), WithinAbs((double)lat.size(), 0));
                for (const auto &z : all_points(G))
                {
                    double s = 0;
                    for (const auto &l : lat.adjoint_points)
                        s += h(G.index(z.x - l.x), G.index(z.w - l.w)).real();
                    REQUIRE(s == 1.0);
                }
            }
    }
    const LatticeSpec L32 = make_lattice(make_grid(32), 4, 4);
    REQUIRE(L32.size() == 64);
    REQUIRE(L32.adjoint_points.size() == 16);
    REQUIRE(fundamental_domain(L32).Q.size() == 64);
}

TEST_CASE("time-frequency shifts")
{
    const Grid G8 = make_grid(8), G4 = make_grid(4);
    Rng r(11);
    const Signal f = r.complex_vector(8);
    REQUIRE(oracle::maxabs(tf_shift({0, 0}, f) - f) == 0);
    REQUIRE(oracle::maxabs(tf_shift({1, 0}, delta(4, 0)) - delta(4, 1)) == 0);
    REQUIRE(oracle::maxabs(pi_matrix(G4, 1, 0) * pi_matrix(G4, 0, 1) - std::polar(1.0, -2 * PI / 4) * pi_matrix(G4, 1, 1)) < 1e-14);
    REQUIRE(oracle::maxabs(rho_matrix(G4, 1, 1) - std::polar(1.0, -PI / 4) * pi_matrix(G4, 1, 1)) < 1e-14);

    // exhaustive composition sweep at N = 8
    double err_pi = 0, err_rho = 0, err_unit = 0;
    for (const auto &z : all_points(G8))
    {
        REQUIRE(oracle::maxabs(rho_matrix(G8, z) - oracle::rho(8, z.x, z.w)) < 1e-13);
        err_unit = std::max(err_unit, std::abs(sym_tf_shift(z, f).norm() - f.norm()));
        for (const auto &zp : all_points(G8))
        {
            const long long sx = (long long)z.x + zp.x, sw = (long long)z.w + zp.w;
            const OperatorMat lp = pi_matrix(G8, z.x, z.w) * pi_matrix(G8, zp.x, zp.w);
            err_pi = std::max(err_pi, oracle::maxabs(lp - std::polar(1.0, -2 * PI * (double)(zp.w * z.x) / 8) * pi_matrix(G8, sx, sw)));
            const OperatorMat lr = rho_matrix(G8, z) * rho_matrix(G8, zp);
            err_rho = std::max(err_rho, oracle::maxabs(lr - std::polar(1.0, -PI * (double)omega(z, zp) / 8) * rho_matrix(G8, sx, sw)));
        }
    }
    CHECK(err_pi < 1e-12);
    CHECK(err_rho < 1e-12);
    CHECK(err_unit < 1e-12);

    // the spec example pair
    const TFPoint z{2, 1}, zp{1, 3};
    CHECK(oracle::maxabs(rho_matrix(G8, z) * rho_matrix(G8, zp) - std::polar(1.0, -PI * (double)omega(z, zp) / 8) * rho_matrix(G8, 3, 4)) < 1e-12);

    // the reduced sum differs from the raw one by the sign cocycle
    for (const auto &a : all_points(G8))
        for (const auto &b : all_points(G8))
        {
            const long long sx = (long long)a.x + b.x, sw = (long long)a.w + b.w;
            const TFPoint red = make_point(G8, sx, sw);
            REQUIRE(oracle::maxabs(rho_matrix(G8, sx, sw) - shift_sign(G8, sx, sw) * rho_matrix(G8, red)) < 1e-12);
        }
}

TEST_CASE("stft, adjoint and Moyal")
{
    Rng r(12);
    const int N = 16;
    const Signal f = r.complex_vector(N), g = r.complex_vector(N), h = r.complex_vector(N);
    const PhaseFn V = stft(f, g);
    CHECK(oracle::maxabs(V - oracle::stft(f, g)) < 1e-11);
    CHECK(std::abs(stft(g, g)(0, 0) - g.squaredNorm()) < 1e-11);
    const PhaseFn Vd = stft(delta(8, 0), delta(8, 0));
    for (int x = 0; x < 8; ++x)
        for (int w = 0; w < 8; ++w)
            REQUIRE(std::abs(Vd(x, w) - (x == 0 ? 1.0 : 0.0)) < 1e-14);
    CHECK(std::abs(V.squaredNorm() - N * f.squaredNorm() * g.squaredNorm()) / V.squaredNorm() < 1e-12);

    const Signal f2 = r.complex_vector(N), g2 = r.complex_vector(N);
    const cplx lhs = inner(V, stft(f2, g2));
    const cplx rhs = (double)N * inner(f, f2) * std::conj(inner(g, g2));
    CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-12);

    const PhaseFn F = r.complex_matrix(8, 8);
    const Signal g8 = r.complex_vector(8), h8 = r.complex_vector(8);
    CHECK(std::abs(inner(adjoint_stft(F, g8), h8) - inner(F, stft(h8, g8))) < 1e-11);
    CHECK(adjoint_stft(PhaseFn::Zero(8, 8), g8).norm() == 0);
    CHECK((adjoint_stft(V, g) / (N * g.squaredNorm()) - f).norm() / f.norm() < 1e-12);
    (void)h;
}

TEST_CASE("symplectic Fourier transform")
{
    Rng r(13);
    const PhaseFn F = r.complex_matrix(8, 8);
    const PhaseFn S = sympft(F);
    CHECK(oracle::maxabs(S - oracle::sympft(F)) < 1e-12);
    CHECK(oracle::maxabs(sympft(S) - F) < 1e-12);
    CHECK(std::abs(S.norm() - F.norm()) < 1e-12);
    PhaseFn d = PhaseFn::Zero(8, 8);
    d(0, 0) = 1.0;
    CHECK(oracle::maxabs(sympft(d) - PhaseFn::Constant(8, 8, 1.0 / 8)) < 1e-15);
}

TEST_CASE("ambiguity, Wigner, Rihaczek")
{
    Rng r(14);
    const int N = 8;
    const Grid G = make_grid(N);
    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    const PhaseFn A = ambiguity(f, g);
    CHECK(oracle::maxabs(A - oracle::ambiguity(f, g)) < 1e-12);
    CHECK(std::abs(A(0, 0) - inner(f, g)) < 1e-12);
    CHECK(oracle::maxabs(A.cwiseAbs() - stft(f, g).cwiseAbs()) < 1e-12);
    const PhaseFn Aff = ambiguity(f, f);
    for (const auto &z : all_points(G))
        REQUIRE(std::abs(Aff(G.index(z.x), G.index(z.w)) - reflection_sign(G, z) * std::conj(Aff(G.index(-z.x), G.index(-z.w)))) < 1e-12);

    const PhaseFn W = wigner(f, f);
    // W(f,f) is real exactly when A(f,f) is conjugate-symmetric; the sign flips live on the wrap lines
    PhaseFn defect = PhaseFn::Zero(N, N);
    for (const auto &z : all_points(G))
        if (reflection_sign(G, z) < 0)
            defect(G.index(z.x), G.index(z.w)) = Aff(G.index(z.x), G.index(z.w));
    CHECK(oracle::maxabs(W - W.real().cast<cplx>() - sympft(defect)) < 1e-12);
    CHECK(wigner(delta(N, 0), delta(N, 0)).imag().cwiseAbs().maxCoeff() < 1e-12);
    CHECK(wigner(Signal::Zero(N), g).norm() == 0);
    CHECK(std::abs(W.sum() - (double)N * f.squaredNorm()) < 1e-11);

    // standard discrete Wigner on an even grid: W(f,f)(x,w) = sum_t f(x+t) conj f(x-t) e^{-4 pi i w t / N} has
    // half-integer points; the symplectic definition agrees with it after rescaling on x even
    const PhaseFn R = rihaczek(f, g);
    CHECK(oracle::maxabs(R - rihaczek_closed_form(f, g)) < 1e-12);
    CHECK(std::abs(R.norm() - stft(f, g).norm()) < 1e-12);
    CHECK(rihaczek(Signal::Zero(N), g).norm() == 0);

    // delta against a flat-spectrum window
    const Signal flat = idft(Signal::Constant(N, 1.0));
    const PhaseFn Rd = rihaczek(delta(N, 0), flat);
    for (int x = 1; x < N; ++x)
        CHECK(Rd.row(x).cwiseAbs().maxCoeff() < 1e-12);
    (void)G;
}

TEST_CASE("rank one, trace, Hilbert-Schmidt, spectral")
{
    Rng r(15);
    const int N = 8;
    const Signal f = r.complex_vector(N), g = r.complex_vector(N), u = r.complex_vector(N), v = r.complex_vector(N), h = r.complex_vector(N);
    OperatorMat E = OperatorMat::Zero(N, N);
    E(0, 0) = 1.0;
    CHECK(oracle::maxabs(rank_one(delta(N, 0), delta(N, 0)) - E) == 0);
    CHECK((rank_one(f, g) * h - inner(h, g) * f).norm() < 1e-12);
    CHECK(std::abs(trace(rank_one(f, g)) - inner(f, g)) < 1e-12);
    CHECK(std::abs(trace(OperatorMat::Identity(N, N)) - (double)N) == 0);
    CHECK(std::abs(hs_inner(E, E) - 1.0) == 0);
    CHECK(std::abs(hs_inner(rank_one(f, g), rank_one(u, v)) - inner(f, u) * std::conj(inner(g, v))) < 1e-11);

    CHECK(spectral_decomp(OperatorMat::Zero(N, N)).values.empty());
    const SpectralDecomp sd1 = spectral_decomp(rank_one(f.normalized(), g.normalized()));
    REQUIRE(sd1.values.size() == 1);
    CHECK_THAT(sd1.values[0], WithinAbs(1.0, 1e-12));
    const OperatorMat S = r.complex_matrix(N, N);
    const SpectralDecomp sd = spectral_decomp(S);
    CHECK((reassemble(sd, N) - S).norm() / S.norm() < 1e-10);
    for (std::size_t i = 0; i < sd.values.size(); ++i)
        for (std::size_t j = 0; j < sd.values.size(); ++j)
        {
            const double want = i == j ? 1.0 : 0.0;
            CHECK(std::abs(inner(sd.left[i], sd.left[j]) - want) < 1e-10);
            CHECK(std::abs(inner(sd.right[i], sd.right[j]) - want) < 1e-10);
        }
}

TEST_CASE("Fourier-Wigner transform")
{
    Rng r(16);
    const int N = 8;
    const Grid G = make_grid(N);
    const OperatorMat S = r.complex_matrix(N, N);
    CHECK(oracle::maxabs(fourier_wigner(S) - oracle::fw(S)) < 1e-12);
    CHECK(oracle::maxabs(fourier_wigner_inverse(fourier_wigner(S)) - S) < 1e-12);
    PhaseFn d = PhaseFn::Zero(N, N);
    d(0, 0) = (double)N;
    CHECK(oracle::maxabs(fourier_wigner(OperatorMat::Identity(N, N)) - d) < 1e-12);

    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    // rank_one(f, g) = f (x) g carries A(f, g); the swapped product is its conjugate reflection
    CHECK(oracle::maxabs(fourier_wigner(rank_one(f, g)) - ambiguity(f, g)) < 1e-12);
    const PhaseFn Fgf = fourier_wigner(rank_one(g, f)), Afg = ambiguity(f, g);
    for (const auto &z : all_points(G))
        REQUIRE(std::abs(Fgf(G.index(z.x), G.index(z.w)) - reflection_sign(G, z) * std::conj(Afg(G.index(-z.x), G.index(-z.w)))) < 1e-12);

    for (const TFPoint z : {TFPoint{3, -2}, TFPoint{-4, 1}, TFPoint{-4, -4}})
    {
        const PhaseFn Fa = fourier_wigner(op_translate(z, S)), F = fourier_wigner(S);
        double e = 0;
        for (const auto &zeta : all_points(G))
        {
            const cplx ph = std::polar(1.0, -2 * PI * (double)omega(z, zeta) / N);
            e = std::max(e, std::abs(at(G, Fa, zeta)(0, 0) - ph * at(G, F, zeta)(0, 0)));
        }
        CHECK(e < 1e-12);
    }
}

TEST_CASE("Weyl and Kohn-Nirenberg quantisation")
{
    Rng r(17);
    const int N = 8;
    const Grid G = make_grid(N);
    CHECK(oracle::maxabs(weyl_symbol(OperatorMat::Identity(N, N)) - PhaseFn::Ones(N, N)) < 1e-12);
    CHECK(oracle::maxabs(weyl_quantize(PhaseFn::Ones(N, N)) - OperatorMat::Identity(N, N)) < 1e-12);
    double eW = 0, eR = 0;
    for (int k = 0; k < 20; ++k)
    {
        const Signal f = r.complex_vector(N), g = r.complex_vector(N);
        eW = std::max(eW, oracle::maxabs(weyl_symbol(rank_one(f, g)) - wigner(f, g)));
        eR = std::max(eR, oracle::maxabs(kn_symbol(rank_one(f, g)) - rihaczek(f, g)));
    }
    CHECK(eW < 1e-11);
    CHECK(eR < 1e-11);
    // exhaustive rank-one sweep over basis pairs
    for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t)
        {
            REQUIRE(oracle::maxabs(weyl_symbol(rank_one(delta(N, s), delta(N, t))) - wigner(delta(N, s), delta(N, t))) < 1e-12);
            REQUIRE(oracle::maxabs(kn_symbol(rank_one(delta(N, s), delta(N, t))) - rihaczek(delta(N, s), delta(N, t))) < 1e-12);
        }

    const OperatorMat S = r.complex_matrix(N, N), T = r.complex_matrix(N, N);
    const PhaseFn sS = weyl_symbol(S), sT = weyl_symbol(T);
    CHECK(oracle::maxabs(weyl_quantize(sS) - S) < 1e-11);
    CHECK(oracle::maxabs(weyl_symbol(weyl_quantize(sT)) - sT) < 1e-11);
    CHECK(oracle::maxabs(kn_quantize(kn_symbol(S)) - S) < 1e-11);
    CHECK(kn_symbol(OperatorMat::Zero(N, N)).norm() == 0);
    CHECK(oracle::maxabs(weyl_quantize(sS + sT) - weyl_quantize(sS) - weyl_quantize(sT)) < 1e-11);
    CHECK(std::abs(sS.squaredNorm() - N * S.squaredNorm()) / sS.squaredNorm() < 1e-12);
    CHECK(std::abs(hs_inner(S, T) - inner(sS, sT) / (double)N) < 1e-10);
    for (const TFPoint z : {TFPoint{3, -2}, TFPoint{-4, 1}, TFPoint{1, 1}})
        CHECK(oracle::maxabs(weyl_symbol(op_translate(z, S)) - translate(sS, z)) < 1e-11);
    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    CHECK(oracle::maxabs(weyl_quantize(wigner(f, g)) - rank_one(f, g)) < 1e-11);
    (void)G;
}

TEST_CASE("operator translation, parity and modulation")
{
    Rng r(18);
    const int N = 8;
    const Grid G = make_grid(N);
    const OperatorMat S = r.complex_matrix(N, N);
    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    CHECK(oracle::maxabs(op_translate({0, 0}, S) - S) == 0);
    const TFPoint z{3, -1};
    CHECK(oracle::maxabs(op_translate(z, rank_one(f, g)) - rank_one(sym_tf_shift(z, f), sym_tf_shift(z, g))) < 1e-12);
    CHECK(oracle::maxabs(parity(OperatorMat::Identity(N, N)) - OperatorMat::Identity(N, N)) == 0);
    CHECK(oracle::maxabs(parity(parity(S)) - S) == 0);
    const PhaseFn Fp = fourier_wigner(parity(S)), Fs = fourier_wigner(S);
    for (const auto &z : all_points(G))
        REQUIRE(std::abs(Fp(G.index(z.x), G.index(z.w)) - reflection_sign(G, z) * Fs(G.index(-z.x), G.index(-z.w))) < 1e-12);

    CHECK(oracle::maxabs(op_modulate({0, 0}, S) - S) == 0);
    REQUIRE_THROWS_MATCHES(op_modulate({1, 0}, S), Error, Catch::Matchers::Predicate<Error>([](const Error &e) { return e.code() == ErrorCode::OddModulation; }));
    const PhaseFn F = fourier_wigner(S);
    for (int wx = -4; wx < 4; wx += 2)
        for (int wv = -4; wv < 4; wv += 2)
        {
            const TFPoint w{wx, wv};
            const PhaseFn Fb = fourier_wigner(op_modulate(w, S));
            const PhaseFn Tw = translate(F, w);
            for (const auto &zeta : all_points(G))
            {
                const cplx lhs = Fb(G.index(zeta.x), G.index(zeta.w));
                const cplx rhs = Tw(G.index(zeta.x), G.index(zeta.w));
                REQUIRE(std::abs(lhs - modulation_sign(G, w, zeta) * rhs) < 1e-12);
            }
        }
    // away from the wrap the sign is trivial and the plain translation identity holds
    const PhaseFn Fb = fourier_wigner(op_modulate({2, 0}, S)), Tw = translate(F, {2, 0});
    for (const auto &zeta : all_points(G))
        if (zeta.x - 2 >= -4 && zeta.x - 2 < 4)
            REQUIRE(std::abs(Fb(G.index(zeta.x), G.index(zeta.w)) - Tw(G.index(zeta.x), G.index(zeta.w))) < 1e-12);
}

TEST_CASE("operator time-frequency shifts")
{
    Rng r(19);
    const int N = 8;
    const Grid G = make_grid(N);
    const OperatorMat S = r.complex_matrix(N, N);
    CHECK(oracle::maxabs(op_tf_shift({{0, 0}, {0, 0}}, S) - S) == 0);
    CHECK(oracle::maxabs(op_tf_shift({{1, 1}, {1, 1}}, S) - op_translate({1, 1}, S)) < 1e-12);
    for (int k = 0; k < 30; ++k)
    {
        const TFPoint w = make_point(G, r.integer(-4, 3), r.integer(-4, 3)), z = make_point(G, r.integer(-4, 3), r.integer(-4, 3));
        REQUIRE(std::abs(hs_norm(op_tf_shift({w, z}, S)) - hs_norm(S)) < 1e-12);
        REQUIRE(oracle::maxabs(op_tf_shift({w, w}, S) - op_translate(w, S)) < 1e-12);
    }
}

TEST_CASE("operator convolutions")
{
    Rng r(20);
    const int N = 8;
    const OperatorMat S = r.complex_matrix(N, N), T = r.complex_matrix(N, N);
    const PhaseFn c = op_conv_oo(S, T);
    CHECK(oracle::maxabs(sympft(c) - fourier_wigner(S).cwiseProduct(fourier_wigner(T))) < 1e-10);
    CHECK(oracle::maxabs(c - op_conv_oo(T, S)) < 1e-10);
    CHECK(op_conv_oo(S, OperatorMat::Zero(N, N)).norm() == 0);
    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    const PhaseFn spec = stft(f, g).cwiseAbs2().cast<cplx>();
    CHECK(oracle::maxabs(op_conv_oo(rank_one(f, f), parity(rank_one(g, g))) - spec) < 1e-10);

    const PhaseFn F = r.complex_matrix(N, N);
    CHECK(oracle::maxabs(fourier_wigner(op_conv_fo(F, S)) - sympft(F).cwiseProduct(fourier_wigner(S))) < 1e-10);
    PhaseFn d = PhaseFn::Zero(N, N);
    d(0, 0) = (double)N;
    CHECK(oracle::maxabs(op_conv_fo(d, S) - S) < 1e-12);

    // localisation operator form: (F * (g (x) h)) psi = (1/N) sum_z F(z) <psi, rho(z) h> rho(z) g
    const Signal h = r.complex_vector(N), psi = r.complex_vector(N);
    Signal want = Signal::Zero(N);
    const Grid G = make_grid(N);
    for (const auto &z : all_points(G))
        want += F(G.index(z.x), G.index(z.w)) * inner(psi, sym_tf_shift(z, h)) * sym_tf_shift(z, g);
    want /= (double)N;
    CHECK((op_conv_fo(F, rank_one(g, h)) * psi - want).norm() < 1e-10);
}

TEST_CASE("polarised Cohen's class")
{
    Rng r(21);
    const int N = 8;
    const Grid G = make_grid(N);
    const OperatorMat S = r.complex_matrix(N, N), T = r.complex_matrix(N, N);
    CHECK(std::abs(cohens_class(S, S, {{0, 0}, {0, 0}}) - S.squaredNorm()) < 1e-10);
    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    const PhaseFn A = ambiguity(f, g);
    for (const auto &l : all_points(G))
        REQUIRE(std::abs(cohens_class(rank_one(f, f), rank_one(g, g), {l, l}) - std::norm(A(G.index(l.x), G.index(l.w)))) < 1e-10);

    // diagonal as a symbol correlation, exhaustive
    const PhaseFn sS = weyl_symbol(S), sT = weyl_symbol(T);
    const PhaseFn D = cohens_diagonal(T, S);
    double e = 0;
    for (const auto &w : all_points(G))
    {
        const cplx q = cohens_class(T, S, {w, w});
        e = std::max(e, std::abs(q - inner(sT, translate(sS, w)) / (double)N));
        e = std::max(e, std::abs(q - D(G.index(w.x), G.index(w.w))));
    }
    CHECK(e < 1e-10);

    // Fourier transform of the diagonal
    CHECK(oracle::maxabs(sympft(D) - fourier_wigner(S).conjugate().cwiseProduct(fourier_wigner(T))) < 1e-10);
    const OperatorMat H = S + S.adjoint();
    CHECK(oracle::maxabs(sympft(cohens_diagonal(T, H)) - fourier_wigner(parity(H)).cwiseProduct(fourier_wigner(T))) < 1e-10);

    // orthogonality
    const OperatorMat R = r.complex_matrix(N, N), W = r.complex_matrix(N, N);
    cplx acc = 0;
    for (const auto &w : all_points(G))
        for (const auto &z : all_points(G))
            acc += cohens_class(T, S, {w, z}) * std::conj(cohens_class(W, R, {w, z}));
    const cplx want = (double)(N * N) * hs_inner(T, W) * std::conj(hs_inner(S, R));
    CHECK(std::abs(acc - want) / std::abs(want) < 1e-10);
}

TEST_CASE("Cohen's class as a phase-space STFT")
{
    Rng r(22);
    const int N = 8;
    const Grid G = make_grid(N);
    const OperatorMat T = r.complex_matrix(N, N);
    const OperatorMat S = r.complex_matrix(N, N);
    const PhaseFn sS = weyl_symbol(S), sT = weyl_symbol(T);
    // diagonal pairs, random window
    for (const auto &w : all_points(G))
    {
        const std::array<long long, 4> u{w.x, w.w, 0, 0};
        REQUIRE(std::abs(cohens_class(T, S, {w, w}) - phase_space_stft(sT, sS, u) / (double)N) < 1e-10);
    }
    // off-diagonal pairs for a window with F_W supported in radius 1
    PhaseFn Fs = PhaseFn::Zero(N, N);
    for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
            Fs(G.index(a), G.index(b)) = r.complex_normal();
    const OperatorMat Sl = fourier_wigner_inverse(Fs);
    const PhaseFn sSl = weyl_symbol(Sl);
    for (const auto &w : all_points(G))
        for (const auto &z : all_points(G))
        {
            if ((w.x + z.x) % 2 || (w.w + z.w) % 2)
                continue;
            const int d1 = z.x - w.x, d2 = z.w - w.w;
            if (std::abs(d1) > 2 || std::abs(d2) > 2)
                continue;
            const cplx c = std::polar(1.0, -PI * (double)((w.x + z.x) * (w.w - z.w)) / N);
            const std::array<long long, 4> u{(w.x + z.x) / 2, (w.w + z.w) / 2, z.w - w.w, w.x - z.x};
            REQUIRE(std::abs(cohens_class(T, Sl, {w, z}) - c * phase_space_stft(sT, sSl, u) / (double)N) < 1e-10);
        }
}

TEST_CASE("Gabor matrix, diagonals and frames")
{
    Rng r(23);
    const int N = 8;
    const Grid G = make_grid(N);
    const OperatorMat S = r.complex_matrix(N, N), T = r.complex_matrix(N, N);
    const LatticeSpec L = make_lattice(G, 2, 4), M = make_lattice(G, 4, 2);
    const GaborMatrix GM = gabor_matrix(T, S, L, M);
    for (std::size_t i = 0; i < L.size(); i += 3)
        for (std::size_t j = 0; j < M.size(); j += 2)
            REQUIRE(std::abs(GM.entries(i, j) - cohens_class(T, S, {L.points[i], M.points[j]})) < 1e-12);
    const std::string csv = gabor_csv(GM);
    CHECK(csv.rfind("lambda1,lambda2,mu1,mu2,re,im\n", 0) == 0);
    CHECK((std::size_t)std::count(csv.begin(), csv.end(), '\n') == 1 + L.size() * M.size());

    const Eigen::VectorXcd d = diagonal(S, S, L);
    const auto &pts = L.points;
    const std::size_t i0 = (std::size_t)(std::find(pts.begin(), pts.end(), TFPoint{0, 0}) - pts.begin());
    CHECK(std::abs(d(i0) - S.squaredNorm()) < 1e-10);
    CHECK((side_diagonal(T, S, L, {0, 0}) - diagonal(T, S, L)).norm() == 0);
    REQUIRE_THROWS_MATCHES(side_diagonal(T, S, L, {1, 0}), Error, Catch::Matchers::Predicate<Error>([](const Error &e) { return e.code() == ErrorCode::EtaNotInLattice; }));
    const Signal f = r.complex_vector(N), g = r.complex_vector(N);
    const LatticeSpec full = make_lattice(G, 1, 1);
    const Eigen::VectorXcd dd = diagonal(rank_one(f, f), rank_one(g, g), full);
    const PhaseFn V = stft(f, g);
    for (std::size_t i = 0; i < full.size(); ++i)
        REQUIRE(std::abs(dd(i) - std::norm(V(G.index(full.points[i].x), G.index(full.points[i].w)))) < 1e-10);

    // tight frame on the full lattice at N = 4
    Rng r4(24);
    const Grid G4 = make_grid(4);
    OperatorMat S4 = r4.complex_matrix(4, 4);
    S4 /= hs_norm(S4);
    const LatticeSpec F4 = make_lattice(G4, 1, 1);
    const auto fb = frame_bounds(S4, F4, F4);
    CHECK_THAT(fb[0], WithinAbs(16.0, 1e-10));
    CHECK_THAT(fb[1], WithinAbs(16.0, 1e-10));
    const OperatorMat T4 = r4.complex_matrix(4, 4);
    CHECK(oracle::maxabs(frame_operator(S4, F4, F4, T4) - 16.0 * T4) < 1e-10);
    const auto z = frame_bounds(OperatorMat::Zero(4, 4), F4, F4);
    CHECK((z[0] == 0 && z[1] == 0));
    // a one-point lattice: E T = <T, S> S, rank one
    const LatticeSpec one = make_lattice(G4, 4, 4);
    const auto b1 = frame_bounds(S4, one, one);
    CHECK_THAT(b1[0], WithinAbs(0.0, 1e-12));
    CHECK_THAT(b1[1], WithinAbs(1.0, 1e-12));
}
