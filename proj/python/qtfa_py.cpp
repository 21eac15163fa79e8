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
#include "qtfa/rng.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qtfa;

namespace
{
    int size_of(const Eigen::MatrixXcd &M)
    {
        if (M.rows() != M.cols())
            fail(ErrorCode::BadShape, "expected a square array");
        return (int)M.rows();
    }

    py::list word_list(const GeneratorWord &w)
    {
        py::list out;
        for (const auto &f : w)
            out.append(py::make_tuple(factor_name(f.kind), f.param));
        return out;
    }

    py::dict report_dict(const IdentReport &r)
    {
        py::dict d;
        d["sigma_min"] = r.sigma_min;
        d["sigma_max"] = r.sigma_max;
        d["rank"] = r.rank;
        d["identifiable"] = r.identifiable;
        d["sampleCount"] = r.samples;
        d["unknownCount"] = r.unknowns;
        d["singular_values"] = r.singular_values;
        return d;
    }
}

PYBIND11_MODULE(_qtfa, m)
{
    m.doc() = "Finite quantum time-frequency analysis on Z_N";

    // messages start with the error code name, e.g. "UnderSampled: ..."
    py::register_exception<Error>(m, "QtfaError", PyExc_RuntimeError);

    m.def("gaussian_window", [](int N, double a) { return Signal(gaussian_window(make_grid(N), a)); }, py::arg("N"), py::arg("a") = 1.0);
    m.def("rho_matrix", [](int N, long long x, long long w) { return OperatorMat(rho_matrix(make_grid(N), x, w)); });
    m.def("stft", [](const Signal &f, const Signal &g) { return PhaseFn(stft(f, g)); });
    m.def("ambiguity", [](const Signal &f, const Signal &g) { return PhaseFn(ambiguity(f, g)); });
    m.def("wigner", [](const Signal &f, const Signal &g) { return PhaseFn(wigner(f, g)); });
    m.def("rihaczek", [](const Signal &f, const Signal &g) { return PhaseFn(rihaczek(f, g)); });
    m.def("sympft", [](const PhaseFn &F) { size_of(F); return PhaseFn(sympft(F)); });
    m.def("fourier_wigner", [](const OperatorMat &S) { size_of(S); return PhaseFn(fourier_wigner(S)); });
    m.def("fourier_wigner_inverse", [](const PhaseFn &F) { size_of(F); return OperatorMat(fourier_wigner_inverse(F)); });
    m.def("weyl_symbol", [](const OperatorMat &S) { size_of(S); return PhaseFn(weyl_symbol(S)); });
    m.def("weyl_quantize", [](const PhaseFn &s) { size_of(s); return OperatorMat(weyl_quantize(s)); });
    m.def("kn_symbol", [](const OperatorMat &S) { size_of(S); return PhaseFn(kn_symbol(S)); });
    m.def("kn_quantize", [](const PhaseFn &k) { size_of(k); return OperatorMat(kn_quantize(k)); });
    m.def("rank_one", [](const Signal &f, const Signal &g) { return OperatorMat(rank_one(f, g)); });

    m.def("named_matrix", [](const std::string &name) { return RMat(named_matrix(name).M); });
    m.def("named_matrix_names", &named_matrix_names);
    m.def("is_symplectic", [](const RMat &M) { return is_symplectic(M); });
    m.def("general_decompose", [](const RMat &M) { return word_list(general_decompose(make_symp(M))); });
    m.def("free_decompose", [](const RMat &M) { return word_list(free_decompose(make_symp(M))); });
    m.def("metaplectic_validity", [](int N, const RMat &M) { return mu_from(N, make_symp(M)).validity; });

    m.def("lattice_points", [](int N, int a, int b) {
        std::vector<std::pair<int, int>> out;
        for (const auto &p : make_lattice(make_grid(N), a, b).points)
            out.push_back({p.x, p.w});
        return out;
    });
    m.def("synth_underspread", [](int N, int a, int b, std::uint64_t seed) {
        const Grid G = make_grid(N);
        return OperatorMat(synth_underspread(G, fundamental_domain(make_lattice(G, a, b)), seed));
    });
    m.def("diagonal", [](const OperatorMat &T, const OperatorMat &S, int a, int b) {
        return Eigen::VectorXcd(diagonal(T, S, make_lattice(make_grid(size_of(T)), a, b)));
    });
    m.def("reconstruct_diagonal", [](const Eigen::VectorXcd &samples, const OperatorMat &S, int a, int b) {
        const UnderspreadSpec spec = build_correction(S, make_lattice(make_grid(size_of(S)), a, b));
        return OperatorMat(reconstruct_diagonal(samples, spec));
    });
    m.def("identifiability_test", [](const OperatorMat &S, int a, int b, int nx, int nw) {
        const Grid G = make_grid(size_of(S));
        return report_dict(identifiability_test(S, make_lattice(G, a, b), support_block(G, nx, nw)));
    });
    m.def("phase_retrieval", [](const Signal &f, const Signal &g, int a, int b, const std::vector<int> &K1) {
        const PhaseRetrieval pr = phase_retrieval_demo(f, g, make_lattice(make_grid((int)f.size()), a, b), K1);
        return py::make_tuple(Signal(pr.f), pr.residual);
    });
    m.def("phase_distance", [](const Signal &a, const Signal &b) { return phase_distance(a, b); });

    m.def(
        "run_json",
        [](const std::string &subcommand, const std::string &config_json) {
            ExperimentConfig cfg;
            cfg.subcommand = subcommand;
            if (subcommand == "selftest")
                cfg.N = 8;
            apply_config_json(cfg, nlohmann::json::parse(config_json));
            return run(cfg).to_json().dump(2);
        },
        py::arg("subcommand"), py::arg("config_json") = "{}");
}
