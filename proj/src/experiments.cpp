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

#include "qtfa/experiments.hpp"
#include "qtfa/io.hpp"
#include "qtfa/rng.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <sstream>

namespace qtfa
{
    using nlohmann::json;

    Check check_le(const std::string &name, double value, double threshold)
    {
        return Check{name, value, threshold, "<=", value <= threshold};
    }

    Check check_gt(const std::string &name, double value, double threshold)
    {
        return Check{name, value, threshold, ">", value > threshold};
    }

    Check check_true(const std::string &name, bool ok)
    {
        return Check{name, ok ? 1.0 : 0.0, 1.0, "==", ok};
    }

    namespace
    {
        double max_abs(const Eigen::MatrixXcd &A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

        double rel(const Eigen::MatrixXcd &got, const Eigen::MatrixXcd &want)
        {
            const double n = max_abs(want);
            return max_abs(got - want) / (n > 0 ? n : 1.0);
        }

        double rmax(const RMat &A) { return A.size() ? A.cwiseAbs().maxCoeff() : 0.0; }

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

        json rmat_json(const RMat &M)
        {
            json a = json::array();
            for (Eigen::Index i = 0; i < M.rows(); ++i)
            {
                json row = json::array();
                for (Eigen::Index j = 0; j < M.cols(); ++j)
                    row.push_back(M(i, j));
                a.push_back(row);
            }
            return a;
        }

        json report_json(const IdentReport &r)
        {
            return json{{"sigma_min", r.sigma_min}, {"sigma_max", r.sigma_max}, {"rank", r.rank}, {"identifiable", r.identifiable}, {"sampleCount", r.samples}, {"unknownCount", r.unknowns}};
        }

        double tol_of(const ExperimentConfig &cfg, const std::string &name, double dflt)
        {
            const auto it = cfg.tol.find(name);
            return it == cfg.tol.end() ? dflt : it->second;
        }

        OperatorMat gauss_op(const Grid &G, double a = 1.0)
        {
            const Signal phi = gaussian_window(G, a);
            return rank_one(phi, phi);
        }

        OperatorMat random_supported(const Grid &G, const SupportRegion &K, Rng &r)
        {
            PhaseFn s = PhaseFn::Zero(G.N, G.N);
            for (const auto &k : K.K)
                s(G.index(k.x), G.index(k.w)) = r.complex_normal();
            return weyl_quantize(s);
        }

        std::string lat_name(const LatticeSpec &L)
        {
            return std::to_string(L.a) + "Z x " + std::to_string(L.b) + "Z";
        }

        bool is_named(const std::string &s)
        {
            const auto names = named_matrix_names();
            return std::find(names.begin(), names.end(), s) != names.end();
        }
    }

    // ---------------------------------------------------------------- configuration

    std::pair<int, int> parse_pair(const std::string &text, const std::string &field)
    {
        const auto comma = text.find(',');
        try
        {
            if (comma == std::string::npos)
                throw std::invalid_argument("no comma");
            std::size_t u1 = 0, u2 = 0;
            const std::string s1 = text.substr(0, comma), s2 = text.substr(comma + 1);
            const int a = std::stoi(s1, &u1), b = std::stoi(s2, &u2);
            if (u1 != s1.size() || u2 != s2.size())
                throw std::invalid_argument("trailing characters");
            return {a, b};
        }
        catch (const std::exception &)
        {
            fail(ErrorCode::ConfigInvalid, field + ": expected two integers 'a,b', got '" + text + "'");
        }
    }

    void validate_config(const ExperimentConfig &cfg)
    {
        static const std::vector<std::string> subs = {"selftest", "reconstruct", "identify", "symplectic", "demo"};
        if (std::find(subs.begin(), subs.end(), cfg.subcommand) == subs.end())
            fail(ErrorCode::ConfigInvalid, "subcommand: unknown '" + cfg.subcommand + "'");
        if (cfg.N < 4 || cfg.N % 2)
            fail(ErrorCode::ConfigInvalid, "grid: N must be even and at least 4");
        if (cfg.N > 64)
            fail(ErrorCode::ConfigInvalid, "grid: N above 64 is not supported by the dense phase-space operators");
        if (cfg.lattice)
        {
            const auto [a, b] = *cfg.lattice;
            if (a <= 0 || b <= 0 || cfg.N % a || cfg.N % b)
                fail(ErrorCode::ConfigInvalid, "lattice: a and b must divide N");
        }
        if (cfg.support.first < 1 || cfg.support.second < 1 || cfg.support.first > cfg.N || cfg.support.second > cfg.N)
            fail(ErrorCode::ConfigInvalid, "support: block sides must lie in 1..N");
        if (cfg.trials < 1)
            fail(ErrorCode::ConfigInvalid, "trials: must be positive");
        const auto colon = cfg.window.find(':');
        const std::string kind = cfg.window.substr(0, colon), arg = colon == std::string::npos ? "" : cfg.window.substr(colon + 1);
        if (kind == "gaussian")
        {
            double a = 0;
            try
            {
                a = std::stod(arg);
            }
            catch (const std::exception &)
            {
                fail(ErrorCode::ConfigInvalid, "window: gaussian needs a numeric parameter");
            }
            if (!(a > 0) && !cfg.allow_indefinite)
                fail(ErrorCode::ConfigInvalid, "window: gaussian parameter must be positive (use --allow-indefinite for chirp-Gaussian probes)");
            if (a == 0)
                fail(ErrorCode::ConfigInvalid, "window: gaussian parameter must be nonzero");
        }
        else if (kind == "random")
        {
            try
            {
                (void)std::stoull(arg);
            }
            catch (const std::exception &)
            {
                fail(ErrorCode::ConfigInvalid, "window: random needs an unsigned seed");
            }
        }
        else if (kind == "file")
        {
            if (!std::filesystem::exists(arg))
                fail(ErrorCode::ConfigInvalid, "window: file '" + arg + "' does not exist");
        }
        else
            fail(ErrorCode::ConfigInvalid, "window: expected gaussian:A, random:SEED or file:PATH");
        if (!cfg.matrix.empty() && !is_named(cfg.matrix) && !std::filesystem::exists(cfg.matrix))
            fail(ErrorCode::ConfigInvalid, "matrix: '" + cfg.matrix + "' is neither a named matrix nor an existing file");
        if (cfg.subcommand == "symplectic" && cfg.matrix.empty())
            fail(ErrorCode::ConfigInvalid, "matrix: required for symplectic");
    }

    void apply_config_json(ExperimentConfig &cfg, const json &j)
    {
        if (!j.is_object())
            fail(ErrorCode::ConfigInvalid, "config: top level must be an object");
        auto pair_of = [](const json &v, const std::string &field) {
            if (v.is_string())
                return parse_pair(v.get<std::string>(), field);
            if (v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer())
                return std::pair<int, int>{v[0].get<int>(), v[1].get<int>()};
            fail(ErrorCode::ConfigInvalid, field + ": expected \"a,b\" or [a, b]");
        };
        try
        {
            for (const auto &[key, v] : j.items())
            {
                if (key == "subcommand")
                    cfg.subcommand = v.get<std::string>();
                else if (key == "grid")
                    cfg.N = v.get<int>();
                else if (key == "lattice")
                    cfg.lattice = pair_of(v, "lattice");
                else if (key == "window")
                    cfg.window = v.get<std::string>();
                else if (key == "matrix")
                    cfg.matrix = v.get<std::string>();
                else if (key == "seed")
                    cfg.seed = v.get<std::uint64_t>();
                else if (key == "out")
                    cfg.out = v.get<std::string>();
                else if (key == "tol")
                {
                    for (const auto &[name, val] : v.items())
                        cfg.tol[name] = val.get<double>();
                }
                else if (key == "allow_indefinite")
                    cfg.allow_indefinite = v.get<bool>();
                else if (key == "support")
                    cfg.support = pair_of(v, "support");
                else if (key == "eta")
                    cfg.eta = pair_of(v, "eta");
                else if (key == "trials")
                    cfg.trials = v.get<int>();
                else if (key == "svg")
                    cfg.svg = v.get<bool>();
                else
                    fail(ErrorCode::ConfigInvalid, "config: unknown key '" + key + "'");
            }
        }
        catch (const json::exception &e)
        {
            fail(ErrorCode::ConfigInvalid, std::string("config: ") + e.what());
        }
    }

    Signal window_signal(const ExperimentConfig &cfg, const Grid &grid)
    {
        const auto colon = cfg.window.find(':');
        const std::string kind = cfg.window.substr(0, colon), arg = colon == std::string::npos ? "" : cfg.window.substr(colon + 1);
        Signal g;
        if (kind == "gaussian")
        {
            const double a = std::stod(arg);
            g = a > 0 ? gaussian_window(grid, a) : chirp_gaussian_window(grid, a);
        }
        else if (kind == "random")
        {
            Rng r(std::stoull(arg));
            g = r.complex_vector(grid.N);
            g /= g.norm();
        }
        else if (kind == "file")
            g = signal_from_csv(read_text(arg), grid.N);
        else
            fail(ErrorCode::ConfigInvalid, "window: unknown kind '" + kind + "'");
        return g;
    }

    OperatorMat make_window(const ExperimentConfig &cfg, const Grid &grid)
    {
        const Signal g = window_signal(cfg, grid);
        return rank_one(g, g);
    }

    SympMat load_matrix(const std::string &spec)
    {
        if (is_named(spec))
            return named_matrix(spec);
        return make_symp(matrix_from_csv(read_text(spec)));
    }

    // ---------------------------------------------------------------- reports

    bool RunReport::pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
    }

    json RunReport::to_json() const
    {
        json cs = json::array();
        for (const auto &c : checks)
            cs.push_back(json{{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"relation", c.relation}, {"pass", c.pass}});
        return json{{"config", config}, {"checks", cs}, {"pass", pass()}, {"artifacts", artifacts}, {"data", data}};
    }

    json config_echo(const ExperimentConfig &cfg)
    {
        json j{{"subcommand", cfg.subcommand}, {"grid", cfg.N}, {"window", cfg.window}, {"matrix", cfg.matrix}, {"seed", cfg.seed},
               {"allow_indefinite", cfg.allow_indefinite}, {"support", {cfg.support.first, cfg.support.second}},
               {"eta", {cfg.eta.first, cfg.eta.second}}, {"trials", cfg.trials}, {"svg", cfg.svg}};
        j["lattice"] = cfg.lattice ? json{cfg.lattice->first, cfg.lattice->second} : json(nullptr);
        j["tol"] = json::object();
        for (const auto &[k, v] : cfg.tol)
            j["tol"][k] = v;
        return j;
    }

    void write_report(const RunReport &rep, const std::string &dir)
    {
        for (const auto &[name, content] : rep.files)
            write_text((std::filesystem::path(dir) / name).string(), content);
        write_text((std::filesystem::path(dir) / "report.json").string(), rep.to_json().dump(2) + "\n");
    }

    // ---------------------------------------------------------------- suites

    std::vector<Check> suite_algebra(int N, std::uint64_t seed)
    {
        const Grid G = make_grid(N);
        Rng r(seed);
        std::vector<Check> out;
        const auto pts = all_points(G);

        double epi = 0, erho = 0;
        for (const auto &z : pts)
        {
            const OperatorMat pz = pi_matrix(G, z.x, z.w), rz = rho_matrix(G, z);
            for (const auto &zp : pts)
            {
                const long long sx = (long long)z.x + zp.x, sw = (long long)z.w + zp.w;
                epi = std::max(epi, max_abs(pz * pi_matrix(G, zp.x, zp.w) - std::polar(1.0, -2 * PI * (double)((long long)zp.w * z.x) / N) * pi_matrix(G, sx, sw)));
                erho = std::max(erho, max_abs(rz * rho_matrix(G, zp) - std::polar(1.0, -PI * (double)omega(z, zp) / N) * rho_matrix(G, sx, sw)));
            }
        }
        out.push_back(check_le("pi_composition", epi, 1e-10));
        out.push_back(check_le("rho_composition", erho, 1e-10));

        double emoyal = 0, einv = 0, eunit = 0, efw = 0, eoo = 0, efo = 0, ew = 0, ekn = 0, eq = 0;
        for (int k = 0; k < 10; ++k)
        {
            const Signal f1 = r.complex_vector(N), f2 = r.complex_vector(N), g1 = r.complex_vector(N), g2 = r.complex_vector(N);
            const cplx lhs = inner(stft(f1, g1), stft(f2, g2)), rhs = (double)N * inner(f1, f2) * std::conj(inner(g1, g2));
            emoyal = std::max(emoyal, std::abs(lhs - rhs) / std::abs(rhs));
            const PhaseFn F = r.complex_matrix(N, N);
            einv = std::max(einv, rel(sympft(sympft(F)), F));
            eunit = std::max(eunit, std::abs(sympft(F).norm() - F.norm()) / F.norm());
            efw = std::max(efw, rel(fourier_wigner(rank_one(f1, g1)), ambiguity(f1, g1)));
            const OperatorMat S = r.complex_matrix(N, N), T = r.complex_matrix(N, N);
            const PhaseFn FS = fourier_wigner(S), FT = fourier_wigner(T);
            eoo = std::max(eoo, rel(sympft(op_conv_oo(S, T)), FS.cwiseProduct(FT)));
            efo = std::max(efo, rel(fourier_wigner(op_conv_fo(F, S)), sympft(F).cwiseProduct(FS)));
            ew = std::max(ew, rel(weyl_symbol(rank_one(f1, g1)), wigner(f1, g1)));
            ekn = std::max(ekn, rel(kn_symbol(rank_one(f1, g1)), rihaczek(f1, g1)));
            const PhaseFn D = cohens_diagonal(T, S), sS = weyl_symbol(S), sT = weyl_symbol(T);
            PhaseFn want(N, N);
            for (const auto &w : pts)
                want(G.index(w.x), G.index(w.w)) = inner(sT, translate(sS, w)) / (double)N;
            eq = std::max(eq, rel(D, want));
        }
        out.push_back(check_le("moyal_constant_N", emoyal, 1e-10));
        out.push_back(check_le("sympft_involution", einv, 1e-10));
        out.push_back(check_le("sympft_unitarity", eunit, 1e-10));
        out.push_back(check_le("fourier_wigner_rank_one_is_ambiguity", efw, 1e-10));
        out.push_back(check_le("operator_operator_convolution", eoo, 1e-10));
        out.push_back(check_le("function_operator_convolution", efo, 1e-10));
        out.push_back(check_le("weyl_symbol_rank_one_is_wigner", ew, 1e-10));
        out.push_back(check_le("kn_symbol_rank_one_is_rihaczek", ekn, 1e-10));
        out.push_back(check_le("cohen_diagonal_translate_pairing", eq, 1e-10));
        return out;
    }

    std::vector<Check> suite_symplectic(std::uint64_t seed)
    {
        std::vector<Check> out;
        const double h = 0.5;
        const std::vector<std::pair<std::string, RMat>> displays = {
            {"A_FOmega", rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}})},
            {"A_F2", rows({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}})},
            {"A_STFT", rows({{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, -h, 0}, {-1, 0, 0, h}})},
            {"A_Rih", rows({{1, 0, 0, -h}, {0, 1, -h, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})},
            {"kernel_map", rows({{h, h, 0, 0}, {0, 0, h, -h}, {0, 0, 1, 1}, {-1, 1, 0, 0}})},
            {"A_FT2", rows({{1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}})}};
        double einv = 0;
        for (const auto &[name, D] : displays)
        {
            const SympMat M = named_matrix(name);
            out.push_back(check_true(name + "_symplectic", is_symplectic(M.M)));
            out.push_back(check_le(name + "_matches_display", rmax(M.M - D), 0.0));
            einv = std::max(einv, rmax(symp_inverse(M).M - M.M.inverse()));
        }
        out.push_back(check_le("closed_form_inverse", einv, 1e-12));

        Rng r(seed);
        double eround = 0;
        for (int k = 0; k < 100; ++k)
        {
            const SympMat M = compose(random_word(r, 6));
            const GeneratorWord w = general_decompose(M);
            eround = std::max(eround, rmax(compose(w).M - M.M) / std::max(1.0, rmax(M.M)));
        }
        out.push_back(check_le("general_decompose_roundtrip", eround, 1e-10));

        const GeneratorWord ft = general_decompose(named_matrix("A_FT2"));
        const double eft = std::max({rmax(ft[0].param.inverse() - rows({{1, 0}, {0, -1}})), rmax(ft[1].param - rows({{0, 0}, {0, -1}})),
                                     rmax(ft[2].param - rows({{0, 0}, {0, 1}}))});
        out.push_back(check_le("A_FT2_blocks_exact", eft, 0.0));
        return out;
    }

    std::vector<Check> suite_intertwining(int N, std::uint64_t seed)
    {
        std::vector<Check> out;
        std::vector<std::vector<long long>> all;
        for (int x = -N / 2; x < N / 2; ++x)
            for (int w = -N / 2; w < N / 2; ++w)
                all.push_back({x, w});
        out.push_back(check_le("dft_intertwines_J", intertwine_check(mu_fourier(N, 1), make_J(1), all), 1e-10));

        Rng r(seed);
        const OperatorMat S = r.complex_matrix(N, N);
        const RMat I2 = RMat::Identity(2, 2), L = rows({{1, 1}, {0, 1}});
        const SympMat DV{make_DL(L).M * make_VTB(rows({{0, 1}, {1, 2}})).M};
        const std::vector<std::pair<std::string, SympMat>> cov = {
            {"identity", SympMat{RMat::Identity(4, 4)}}, {"weyl_to_kn", named_matrix("weyl_to_kn")}, {"weyl_to_kn_grid", named_matrix("weyl_to_kn_grid")}, {"dilation_shear", DV}};
        for (const auto &[name, M] : cov)
        {
            const MetaplecticOp mu = mu_from(N, M);
            const RMat B = *covariance_form(M);
            double worst = 0;
            for (int x = -N / 2; x < N / 2; x += 2)
                for (int w = -N / 2; w < N / 2; w += 2)
                    worst = std::max(worst, b_covariance_check(mu, B, S, {x, w}));
            out.push_back(check_le("b_covariance_" + name, worst, 1e-8));
        }
        const MetaplecticOp J = mu_from(N, make_J(2));
        double neg = 0;
        for (int x = -N / 2; x < N / 2; x += 2)
            for (int w = -N / 2; w < N / 2; w += 2)
                neg = std::max(neg, b_covariance_check(J, I2, S, {x, w}));
        out.push_back(check_gt("b_covariance_negative_control_J", neg, 0.1));
        return out;
    }

    std::vector<Check> suite_underspread(std::uint64_t seed)
    {
        std::vector<Check> out;
        const Grid G = make_grid(16);
        const LatticeSpec L = make_lattice(G, 4, 4);
        const OperatorMat S = gauss_op(G);
        const UnderspreadSpec spec = build_correction(S, L);
        double worst = 0;
        for (std::uint64_t k = 0; k < 20; ++k)
        {
            const OperatorMat T = synth_underspread(G, spec.Q, seed + k);
            worst = std::max(worst, relative_hs_error(reconstruct_diagonal(diagonal(T, S, L), spec), T));
        }
        out.push_back(check_le("diagonal_reconstruction_20_seeds", worst, 1e-8));

        const TFPoint eta = make_point(G, 4, 0);
        const UnderspreadSpec spec_eta = build_correction(rho_matrix(G, eta) * S, L);
        double worst_side = 0;
        for (std::uint64_t k = 0; k < 20; ++k)
        {
            const OperatorMat T = synth_underspread(G, spec_eta.Q, seed + 1000 + k);
            worst_side = std::max(worst_side, relative_hs_error(reconstruct_side_diagonal(side_diagonal(T, S, L, eta), spec_eta, eta), T));
        }
        out.push_back(check_le("side_diagonal_reconstruction_eta_4_0", worst_side, 1e-8));

        Rng r(seed + 2000);
        PhaseFn F = PhaseFn::Zero(16, 16);
        for (const auto &z : all_points(G))
            if (!spec.Q.contains(z) && std::abs(z.x) <= 4 && std::abs(z.w) <= 4)
                F(G.index(z.x), G.index(z.w)) = r.complex_normal();
        const OperatorMat Tout = fourier_wigner_inverse(F);
        out.push_back(check_gt("aliasing_negative_control", relative_hs_error(reconstruct_diagonal(diagonal(Tout, S, L), spec), Tout), 0.1));
        return out;
    }

    std::vector<Check> suite_metaplectic_recon(std::uint64_t seed)
    {
        const Grid G = make_grid(16);
        const LatticeSpec L = make_lattice(G, 4, 4);
        const OperatorMat S = gauss_op(G);
        const SympMat A = named_matrix("weyl_to_kn_grid");
        const MetaplecticOp mu = mu_from(16, A);
        const FundamentalDomain Q = fundamental_domain(L);
        double worst = 0;
        for (std::uint64_t k = 0; k < 10; ++k)
        {
            const OperatorMat T = a_quantize(weyl_symbol(synth_underspread(G, Q, seed + k)), mu);
            worst = std::max(worst, relative_hs_error(reconstruct_metaplectic(sampler_for(T), A, S, L).T, T));
        }
        return {check_le("intertwining_residual", mu.validity, 1e-6), check_le("weyl_to_kn_grid_reconstruction_10_seeds", worst, 1e-6)};
    }

    std::vector<Check> suite_mod_invariant(std::uint64_t seed)
    {
        const Grid G = make_grid(16);
        const LatticeSpec L = make_lattice(G, 8, 8);
        Rng r(seed);
        PhaseFn sS = PhaseFn::Zero(16, 16);
        sS(0, 0) = 1.0;
        for (const auto &z : all_points(G))
            if ((z.x % 2 || z.w % 2) && std::abs(z.x) <= 2 && std::abs(z.w) <= 2)
                sS(G.index(z.x), G.index(z.w)) = 0.3 * r.complex_normal();
        const OperatorMat S = weyl_quantize(sS), P = parity_matrix(16);
        std::vector<Check> out;
        out.push_back(check_le("parity_recovered", relative_hs_error(reconstruct_mod_invariant(P, S, L), P), 1e-8));
        double worst = 0, inv = 0;
        for (std::uint64_t k = 0; k < 10; ++k)
        {
            Rng rs(seed + 1 + k);
            OperatorMat T = OperatorMat::Zero(16, 16);
            for (int j = 0; j < 3; ++j)
            {
                const TFPoint &l = L.adjoint_points[(std::size_t)rs.integer(0, (long long)L.adjoint_points.size() - 1)];
                T += rs.complex_normal() * rho_matrix(G, 2LL * l.x, 2LL * l.w) * P;
            }
            inv = std::max(inv, mod_invariance_residual(T, L));
            worst = std::max(worst, relative_hs_error(reconstruct_mod_invariant(T, S, L), T));
        }
        out.push_back(check_le("family_is_modulation_invariant", inv, 1e-12));
        out.push_back(check_le("three_term_family_recovered", worst, 1e-8));
        return out;
    }

    std::vector<Check> suite_identifiability(const OperatorMat &S, int trials, std::uint64_t seed)
    {
        std::vector<Check> out;
        const Grid G = make_grid(16);
        const SupportRegion K = support_block(G, 4, 4);
        for (const LatticeSpec &L : lattice_sweep(G, K.size()))
        {
            const IdentReport rep = identifiability_test(S, L, K);
            out.push_back(check_true("identifiable " + lat_name(L), rep.identifiable));
            if (!rep.identifiable)
                continue;
            double worst = 0;
            for (int k = 0; k < trials; ++k)
            {
                Rng r(seed + (std::uint64_t)k);
                const OperatorMat T = random_supported(G, K, r);
                worst = std::max(worst, relative_hs_error(ls_identify(diagonal(T, S, L), S, L, K).T, T));
            }
            out.push_back(check_le("ls_identify " + lat_name(L), worst, 1e-6));
        }
        // sparser lattices are refused
        bool refused = true;
        for (int a : {4, 8, 16})
            for (int b : {8, 16})
            {
                const LatticeSpec L = make_lattice(G, a, b);
                if (L.size() >= K.size())
                    continue;
                try
                {
                    identifiability_test(S, L, K);
                    refused = false;
                }
                catch (const Error &e)
                {
                    refused = refused && e.code() == ErrorCode::UnderSampled;
                }
            }
        out.push_back(check_true("undersampled_lattices_refused", refused));
        return out;
    }

    std::vector<Check> suite_phase_retrieval(std::uint64_t seed)
    {
        const Grid G = make_grid(16);
        const Signal g = gaussian_window(G, 1.0);
        const std::vector<int> K1 = {-2, -1, 0, 1};
        const LatticeSpec L = make_lattice(G, 2, 2);
        double worst = 0, phase_inv = 0;
        for (std::uint64_t k = 0; k < 20; ++k)
        {
            Rng r(seed + k);
            Signal f = Signal::Zero(16);
            for (int t : K1)
                f(G.index(t)) = r.complex_normal();
            const PhaseRetrieval pr = phase_retrieval_demo(f, g, L, K1);
            worst = std::max(worst, phase_distance(pr.f, f));
            const PhaseRetrieval pr2 = phase_retrieval_demo(std::polar(1.0, 0.3 + 0.1 * (double)k) * f, g, L, K1);
            phase_inv = std::max(phase_inv, phase_distance(pr2.f, pr.f));
        }
        return {check_le("recovery_up_to_global_phase_20_seeds", worst, 1e-6), check_le("global_phase_invariance", phase_inv, 1e-8)};
    }

    // ---------------------------------------------------------------- subcommands

    RunReport run_selftest(const ExperimentConfig &cfg)
    {
        RunReport rep;
        rep.config = config_echo(cfg);
        auto add = [&](const std::string &suite, std::vector<Check> cs) {
            for (auto &c : cs)
            {
                c.name = suite + "/" + c.name;
                rep.checks.push_back(std::move(c));
            }
        };
        add("algebra", suite_algebra(cfg.N, cfg.seed));
        add("symplectic", suite_symplectic(cfg.seed));
        add("intertwining", suite_intertwining(cfg.N, cfg.seed));

        const Grid G = make_grid(cfg.N);
        const int a = cfg.N % 4 == 0 ? cfg.N / 4 : 1;
        const LatticeSpec L = make_lattice(G, a, a);
        const OperatorMat S = gauss_op(G);
        const UnderspreadSpec spec = build_correction(S, L);
        const OperatorMat T = synth_underspread(G, spec.Q, cfg.seed);
        add("reconstruct", {check_le("diagonal_reconstruction", relative_hs_error(reconstruct_diagonal(diagonal(T, S, L), spec), T), tol_of(cfg, "relative_error", 1e-8))});
        for (auto &c : rep.checks)
        {
            const auto it = cfg.tol.find(c.name);
            if (it == cfg.tol.end())
                continue;
            if (c.relation == "<=")
                c = check_le(c.name, c.value, it->second);
            else if (c.relation == ">")
                c = check_gt(c.name, c.value, it->second);
        }
        rep.data["check_count"] = rep.checks.size();
        return rep;
    }

    RunReport run_reconstruct(const ExperimentConfig &cfg)
    {
        RunReport rep;
        rep.config = config_echo(cfg);
        const Grid G = make_grid(cfg.N);
        const auto [a, b] = cfg.lattice.value_or(std::pair<int, int>{cfg.N >= 16 ? cfg.N / 4 : 2, cfg.N >= 16 ? cfg.N / 4 : 2});
        const LatticeSpec L = make_lattice(G, a, b);
        const OperatorMat S = make_window(cfg, G);
        const TFPoint eta = make_point(G, cfg.eta.first, cfg.eta.second);
        OperatorMat T, Trec;
        Eigen::VectorXcd samples;
        std::string mode;
        double tol = 1e-8;
        if (!cfg.matrix.empty())
        {
            mode = "metaplectic";
            tol = 1e-6;
            const SympMat A = load_matrix(cfg.matrix);
            const MetaplecticOp mu = mu_from(G.N, A);
            T = a_quantize(weyl_symbol(synth_underspread(G, fundamental_domain(L), cfg.seed)), mu);
            const DiagonalSampler sampler = sampler_for(T);
            const MetaplecticRecon rec = reconstruct_metaplectic(sampler, A, S, L);
            Trec = rec.T;
            samples.resize((Eigen::Index)L.size());
            for (std::size_t i = 0; i < L.size(); ++i)
                samples(i) = sampler(rec.window, rec.sample_points[i]);
            rep.data["intertwining_residual"] = rec.intertwining;
            json pts = json::array();
            for (const auto &p : rec.sample_points)
                pts.push_back({p.x, p.w});
            rep.data["sample_points"] = pts;
        }
        else if (eta.x != 0 || eta.w != 0)
        {
            mode = "side_diagonal";
            const UnderspreadSpec spec_eta = build_correction(rho_matrix(G, eta) * S, L);
            T = synth_underspread(G, spec_eta.Q, cfg.seed);
            samples = side_diagonal(T, S, L, eta);
            Trec = reconstruct_side_diagonal(samples, spec_eta, eta);
        }
        else
        {
            mode = "diagonal";
            const UnderspreadSpec spec = build_correction(S, L);
            T = synth_underspread(G, spec.Q, cfg.seed);
            samples = diagonal(T, S, L);
            Trec = reconstruct_diagonal(samples, spec);
        }
        const double err = relative_hs_error(Trec, T);
        rep.checks.push_back(check_le("relative_error", err, tol_of(cfg, "relative_error", tol)));
        rep.data["mode"] = mode;
        rep.data["relative_error"] = err;
        rep.data["lattice"] = {L.a, L.b};
        rep.data["sample_count"] = L.size();
        rep.files["samples.csv"] = samples_csv(L, samples);
        rep.artifacts.push_back("samples.csv");
        if (cfg.svg)
        {
            rep.files["fw_true.svg"] = heatmap_svg(G, fourier_wigner(T), "|F_W(T)|");
            rep.files["fw_recovered.svg"] = heatmap_svg(G, fourier_wigner(Trec), "|F_W(T_rec)|");
            rep.files["error.svg"] = heatmap_svg(G, fourier_wigner(Trec - T), "|F_W(T_rec - T)|");
            rep.artifacts.insert(rep.artifacts.end(), {"fw_true.svg", "fw_recovered.svg", "error.svg"});
            rep.data["residual_map_path"] = "error.svg";
        }
        else
            rep.data["residual_map_path"] = nullptr;
        return rep;
    }

    RunReport run_identify(const ExperimentConfig &cfg)
    {
        RunReport rep;
        rep.config = config_echo(cfg);
        const Grid G = make_grid(cfg.N);
        const SupportRegion K = support_block(G, cfg.support.first, cfg.support.second);
        std::ostringstream sv;
        sv << std::setprecision(17) << "a,b,index,sigma\n";
        auto put_sv = [&](const LatticeSpec &L, const IdentReport &r) {
            for (std::size_t i = 0; i < r.singular_values.size(); ++i)
                sv << L.a << ',' << L.b << ',' << i << ',' << r.singular_values[i] << '\n';
        };
        json arr = json::array();
        if (!cfg.matrix.empty())
        {
            double ga = 1.0;
            if (cfg.window.rfind("gaussian:", 0) == 0)
                ga = std::stod(cfg.window.substr(9));
            if (!(ga > 0))
                fail(ErrorCode::ConfigInvalid, "window: metaplectic identifiability needs a positive Gaussian parameter");
            const MetaIdentReport m = meta_identifiability(load_matrix(cfg.matrix), K, G, ga);
            for (const auto &[L, r] : m.sweep)
            {
                json e = report_json(r);
                e["lattice"] = {L.a, L.b};
                arr.push_back(e);
                put_sv(L, r);
            }
            rep.data["status"] = m.status;
            rep.data["commutator"] = m.commutator;
            rep.data["suggested_lattice"] = m.found ? json{m.suggested.a, m.suggested.b} : json(nullptr);
            rep.checks.push_back(check_true("suggested_lattice_found", m.found));
        }
        else
        {
            const OperatorMat S = make_window(cfg, G);
            std::vector<LatticeSpec> lats;
            if (cfg.lattice)
                lats.push_back(make_lattice(G, cfg.lattice->first, cfg.lattice->second));
            else
                lats = lattice_sweep(G, K.size());
            for (const auto &L : lats)
            {
                json e{{"lattice", {L.a, L.b}}};
                if (L.size() < K.size())
                {
                    e["refused"] = "UnderSampled";
                    arr.push_back(e);
                    continue;
                }
                const IdentReport r = identifiability_test(S, L, K);
                e.update(report_json(r));
                put_sv(L, r);
                if (cfg.lattice)
                    rep.checks.push_back(check_true("identifiable " + lat_name(L), r.identifiable));
                if (r.identifiable)
                {
                    double worst = 0;
                    for (int k = 0; k < cfg.trials; ++k)
                    {
                        Rng rs(cfg.seed + (std::uint64_t)k);
                        const OperatorMat T = random_supported(G, K, rs);
                        worst = std::max(worst, relative_hs_error(ls_identify(diagonal(T, S, L), S, L, K).T, T));
                    }
                    e["ls_max_rel_error"] = worst;
                    rep.checks.push_back(check_le("ls_identify " + lat_name(L), worst, tol_of(cfg, "ls_error", 1e-6)));
                }
                arr.push_back(e);
            }
        }
        rep.data["reports"] = arr;
        rep.files["singular_values.csv"] = sv.str();
        rep.artifacts.push_back("singular_values.csv");
        return rep;
    }

    RunReport run_symplectic(const ExperimentConfig &cfg)
    {
        RunReport rep;
        rep.config = config_echo(cfg);
        RMat M;
        if (is_named(cfg.matrix))
            M = named_matrix(cfg.matrix).M;
        else
            M = matrix_from_csv(read_text(cfg.matrix));
        rep.data["matrix"] = rmat_json(M);
        const bool symp = M.rows() == M.cols() && M.rows() % 2 == 0 && is_symplectic(M);
        rep.data["is_symplectic"] = symp;
        rep.checks.push_back(check_true("is_symplectic", symp));
        if (!symp)
            return rep;
        const SympMat S{M};
        rep.data["block_conditions"] = block_conditions(M);
        rep.data["inverse"] = rmat_json(symp_inverse(S).M);
        GeneratorWord w;
        std::string form;
        try
        {
            w = free_decompose(S);
            form = "free";
        }
        catch (const Error &)
        {
            w = general_decompose(S);
            form = "general";
        }
        json factors = json::array();
        for (const auto &f : w)
            factors.push_back(json{{"kind", factor_name(f.kind)}, {"param", rmat_json(f.param)}});
        rep.data["decomposition"] = {{"form", form}, {"factors", factors}};
        const double round = rmax(compose(w).M - M) / std::max(1.0, rmax(M));
        rep.data["reassembly_residual"] = round;
        rep.checks.push_back(check_le("decomposition_roundtrip", round, tol_of(cfg, "roundtrip", 1e-10)));
        const auto B = covariance_form(S);
        rep.data["covariance_form"] = B ? rmat_json(*B) : json(nullptr);
        if (S.m() == 2)
        {
            try
            {
                const MetaplecticOp mu = mu_from(cfg.N, S);
                rep.data["metaplectic"] = {{"grid", cfg.N}, {"intertwining_residual", mu.validity}, {"grid_compatible", mu.validity <= 1e-6}};
            }
            catch (const Error &e)
            {
                rep.data["metaplectic"] = {{"grid", cfg.N}, {"refused", error_name(e.code())}, {"message", e.what()}};
            }
        }
        return rep;
    }

    RunReport run_demo(const ExperimentConfig &cfg)
    {
        RunReport rep;
        rep.config = config_echo(cfg);
        const Grid G = make_grid(cfg.N);
        const auto [a, b] = cfg.lattice.value_or(std::pair<int, int>{2, 2});
        const LatticeSpec L = make_lattice(G, a, b);
        const Signal g = window_signal(cfg, G);
        const std::vector<int> K1 = {-2, -1, 0, 1};
        Rng r(cfg.seed);
        Signal f = Signal::Zero(G.N);
        for (int t : K1)
            f(G.index(t)) = r.complex_normal();
        const PhaseRetrieval pr = phase_retrieval_demo(f, g, L, K1);
        const double dist = phase_distance(pr.f, f);
        rep.checks.push_back(check_le("phase_retrieval_distance", dist, tol_of(cfg, "distance", 1e-6)));
        rep.data["distance"] = dist;
        rep.data["residual"] = pr.residual;
        rep.data["second_ratio"] = pr.second_ratio;
        rep.data["gram"] = report_json(pr.report);
        rep.data["lattice"] = {L.a, L.b};
        std::ostringstream os;
        os << std::setprecision(17) << "t,f_re,f_im,rec_re,rec_im\n";
        for (int t = -G.N / 2; t < G.N / 2; ++t)
        {
            const cplx u = f(G.index(t)), v = pr.f(G.index(t));
            os << t << ',' << u.real() << ',' << u.imag() << ',' << v.real() << ',' << v.imag() << '\n';
        }
        rep.files["signals.csv"] = os.str();
        rep.artifacts.push_back("signals.csv");
        if (cfg.svg)
        {
            PhaseFn spec = stft(f, g).cwiseAbs2().cast<cplx>();
            rep.files["spectrogram.svg"] = heatmap_svg(G, spec, "|V_g f|^2");
            rep.files["ambiguity.svg"] = heatmap_svg(G, stft(g, g), "|V_g g|");
            rep.artifacts.insert(rep.artifacts.end(), {"spectrogram.svg", "ambiguity.svg"});
        }
        return rep;
    }

    RunReport run(const ExperimentConfig &cfg)
    {
        validate_config(cfg);
        if (cfg.subcommand == "selftest")
            return run_selftest(cfg);
        if (cfg.subcommand == "reconstruct")
            return run_reconstruct(cfg);
        if (cfg.subcommand == "identify")
            return run_identify(cfg);
        if (cfg.subcommand == "symplectic")
            return run_symplectic(cfg);
        return run_demo(cfg);
    }
}
