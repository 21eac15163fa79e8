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

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace qtfa;

namespace
{
    struct Flags
    {
        std::string config;
        int grid = 0;
        std::string lattice, window, matrix, out, support, eta;
        std::uint64_t seed = 0;
        std::vector<std::string> tol;
        int trials = 0;
        bool no_svg = false;
    };

    void add_options(CLI::App *sub, Flags &f, std::vector<CLI::Option *> &opts)
    {
        opts.push_back(sub->add_option("--config", f.config, "JSON config file; flags override its keys"));
        opts.push_back(sub->add_option("--grid", f.grid, "grid size N (even, >= 4)"));
        opts.push_back(sub->add_option("--lattice", f.lattice, "separable lattice a,b"));
        opts.push_back(sub->add_option("--window", f.window, "gaussian:A | random:SEED | file:PATH"));
        opts.push_back(sub->add_option("--matrix", f.matrix, "named symplectic matrix or CSV path"));
        opts.push_back(sub->add_option("--seed", f.seed, "64-bit seed"));
        opts.push_back(sub->add_option("--out", f.out, "output directory (QTFA_OUT overrides)"));
        opts.push_back(sub->add_option("--tol", f.tol, "tolerance override NAME=VAL")->take_all());
        opts.push_back(sub->add_flag("--allow-indefinite", "accept non-positive Gaussian parameters as chirp-Gaussian probes"));
        opts.push_back(sub->add_option("--support", f.support, "support block nx,nw (identify)"));
        opts.push_back(sub->add_option("--eta", f.eta, "side-diagonal offset x,w (reconstruct)"));
        opts.push_back(sub->add_option("--trials", f.trials, "seeded instances per lattice (identify)"));
        opts.push_back(sub->add_flag("--no-svg", f.no_svg, "skip SVG heatmaps"));
    }

    bool given(const CLI::App *sub, const char *name) { return sub->count(name) > 0; }

    ExperimentConfig build_config(const CLI::App *sub, const Flags &f)
    {
        ExperimentConfig cfg;
        cfg.subcommand = sub->get_name();
        if (cfg.subcommand == "selftest")
            cfg.N = 8;
        if (given(sub, "--config"))
        {
            nlohmann::json j;
            try
            {
                j = nlohmann::json::parse(read_text(f.config));
            }
            catch (const nlohmann::json::exception &e)
            {
                fail(ErrorCode::ConfigInvalid, std::string("config: ") + e.what());
            }
            j.erase("subcommand");
            apply_config_json(cfg, j);
        }
        if (given(sub, "--grid"))
            cfg.N = f.grid;
        if (given(sub, "--lattice"))
            cfg.lattice = parse_pair(f.lattice, "lattice");
        if (given(sub, "--window"))
            cfg.window = f.window;
        if (given(sub, "--matrix"))
            cfg.matrix = f.matrix;
        if (given(sub, "--seed"))
            cfg.seed = f.seed;
        if (given(sub, "--out"))
            cfg.out = f.out;
        for (const auto &t : f.tol)
        {
            const auto eq = t.find('=');
            if (eq == std::string::npos)
                fail(ErrorCode::ConfigInvalid, "tol: expected NAME=VAL, got '" + t + "'");
            try
            {
                cfg.tol[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
            }
            catch (const std::exception &)
            {
                fail(ErrorCode::ConfigInvalid, "tol: value of '" + t.substr(0, eq) + "' is not a number");
            }
        }
        if (given(sub, "--allow-indefinite"))
            cfg.allow_indefinite = true;
        if (given(sub, "--support"))
            cfg.support = parse_pair(f.support, "support");
        if (given(sub, "--eta"))
            cfg.eta = parse_pair(f.eta, "eta");
        if (given(sub, "--trials"))
            cfg.trials = f.trials;
        if (f.no_svg)
            cfg.svg = false;
        if (const char *env = std::getenv("QTFA_OUT"); env && *env)
            cfg.out = env;
        return cfg;
    }

    int exit_code_for(ErrorCode c)
    {
        switch (c)
        {
        case ErrorCode::ConfigInvalid:
        case ErrorCode::IoError:
        case ErrorCode::OddSize:
        case ErrorCode::TooSmall:
        case ErrorCode::NotDivisor:
        case ErrorCode::UnknownName:
            return 2;
        default:
            return 1;
        }
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"qtfa: finite quantum time-frequency analysis experiments"};
    app.require_subcommand(1);
    Flags flags;
    std::vector<CLI::Option *> opts;
    const std::vector<std::pair<const char *, const char *>> subs = {
        {"selftest", "run the invariant suite on a grid"},
        {"reconstruct", "underspread, side-diagonal or metaplectic reconstruction"},
        {"identify", "identifiability sweep and least-squares identification"},
        {"symplectic", "verify and decompose a symplectic matrix"},
        {"demo", "phase retrieval from lattice spectrogram samples"}};
    for (const auto &[name, help] : subs)
        add_options(app.add_subcommand(name, help), flags, opts);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const CLI::App *sub = app.get_subcommands().front();
    const auto t0 = std::chrono::steady_clock::now();
    try
    {
        const ExperimentConfig cfg = build_config(sub, flags);
        const RunReport rep = run(cfg);
        write_report(rep, cfg.out);
        std::size_t failed = 0;
        for (const auto &c : rep.checks)
            if (!c.pass)
            {
                ++failed;
                std::cout << "FAIL " << c.name << ": " << c.value << " " << c.relation << " " << c.threshold << "\n";
            }
        std::cout << cfg.subcommand << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.checks.size() - failed << "/" << rep.checks.size()
                  << " checks), report " << cfg.out << "/report.json\n";
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cerr << "wall time " << secs << " s\n";
        return rep.pass() ? 0 : 1;
    }
    catch (const Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
