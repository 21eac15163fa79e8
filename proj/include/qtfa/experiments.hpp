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

#ifndef QTFA_EXPERIMENTS_HPP
#define QTFA_EXPERIMENTS_HPP

#include "qtfa/identify.hpp"
#include "qtfa/reconstruct.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qtfa
{
    struct Check
    {
        std::string name;
        double value = 0;
        double threshold = 0;
        std::string relation = "<="; // "<=" or ">"
        bool pass = false;
    };

    Check check_le(const std::string &name, double value, double threshold);
    Check check_gt(const std::string &name, double value, double threshold);
    Check check_true(const std::string &name, bool ok);

    struct ExperimentConfig
    {
        std::string subcommand;
        int N = 16;
        std::optional<std::pair<int, int>> lattice;
        std::string window = "gaussian:1";
        std::string matrix;
        std::uint64_t seed = 7;
        std::string out = "qtfa_out";
        std::map<std::string, double> tol;
        bool allow_indefinite = false;
        std::pair<int, int> support{4, 4};
        std::pair<int, int> eta{0, 0};
        int trials = 5;
        bool svg = true;
    };

    // Throws ConfigInvalid naming the offending field
    void validate_config(const ExperimentConfig &cfg);

    // Merges keys of a JSON config object into cfg (flags are applied afterwards by the caller)
    void apply_config_json(ExperimentConfig &cfg, const nlohmann::json &j);

    std::pair<int, int> parse_pair(const std::string &text, const std::string &field);

    // gaussian:A | random:SEED | file:PATH
    Signal window_signal(const ExperimentConfig &cfg, const Grid &grid);

    // rank_one(g, g) of window_signal
    OperatorMat make_window(const ExperimentConfig &cfg, const Grid &grid);

    // Named matrix or CSV path
    SympMat load_matrix(const std::string &spec);

    struct RunReport
    {
        nlohmann::json config;
        std::vector<Check> checks;
        std::vector<std::string> artifacts; // file names relative to the output directory
        nlohmann::json data = nlohmann::json::object();
        std::map<std::string, std::string> files; // name -> contents, written by write_report

        bool pass() const;
        nlohmann::json to_json() const;
    };

    nlohmann::json config_echo(const ExperimentConfig &cfg);

    RunReport run_selftest(const ExperimentConfig &cfg);
    RunReport run_reconstruct(const ExperimentConfig &cfg);
    RunReport run_identify(const ExperimentConfig &cfg);
    RunReport run_symplectic(const ExperimentConfig &cfg);
    RunReport run_demo(const ExperimentConfig &cfg);
    RunReport run(const ExperimentConfig &cfg);

    // Writes report.json and every generated file under dir
    void write_report(const RunReport &rep, const std::string &dir);

    // Check suites behind the acceptance criteria
    std::vector<Check> suite_algebra(int N, std::uint64_t seed);
    std::vector<Check> suite_symplectic(std::uint64_t seed);
    std::vector<Check> suite_intertwining(int N, std::uint64_t seed);
    std::vector<Check> suite_underspread(std::uint64_t seed);
    std::vector<Check> suite_metaplectic_recon(std::uint64_t seed);
    std::vector<Check> suite_mod_invariant(std::uint64_t seed);
    std::vector<Check> suite_identifiability(const OperatorMat &S, int trials, std::uint64_t seed);
    std::vector<Check> suite_phase_retrieval(std::uint64_t seed);
}

#endif
