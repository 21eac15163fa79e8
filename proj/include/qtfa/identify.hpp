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

#ifndef QTFA_IDENTIFY_HPP
#define QTFA_IDENTIFY_HPP

#include "qtfa/metaplectic.hpp"
#include <string>
#include <vector>

namespace qtfa
{
    struct SupportRegion
    {
        std::vector<TFPoint> K;
        std::size_t size() const { return K.size(); }
    };

    SupportRegion support_block(const Grid &grid, int nx, int nw);

    struct IdentReport
    {
        double sigma_min = 0;
        double sigma_max = 0;
        int rank = 0;
        bool identifiable = false;
        std::size_t samples = 0;
        std::size_t unknowns = 0;
        std::vector<double> singular_values;
    };

    constexpr double RANK_TOL = 1e-10;

    // Periodised sampled Gaussian sum_j 2^{1/4} e^{-pi a (t + jN)^2 / N}
    Signal gaussian_window(const Grid &grid, double a);

    // Experimental probe for indefinite quadratic forms: phi_|a|(t) e^{-pi i a t^2 / N}; a != 0
    Signal chirp_gaussian_window(const Grid &grid, double a);

    // Entry (lambda, k) = conj(T_lambda sigma_S(k)) / N, so diagonal(T, S, L) = G vec(sigma_T|_K)
    Eigen::MatrixXcd build_gram(const OperatorMat &S, const LatticeSpec &L, const SupportRegion &K);

    // SVD report of an arbitrary sampling matrix, threshold relative to sigma_max
    IdentReport svd_report(const Eigen::MatrixXcd &G, double rel_tol = RANK_TOL);

    IdentReport identifiability_test(const OperatorMat &S, const LatticeSpec &L, const SupportRegion &K, double rel_tol = RANK_TOL);

    struct LSResult
    {
        OperatorMat T;
        PhaseFn sigma;
        double residual = 0; // || G x - samples || / || samples ||
        IdentReport report;
    };

    LSResult ls_identify(const Eigen::VectorXcd &samples, const OperatorMat &S, const LatticeSpec &L, const SupportRegion &K);

    struct MetaIdentReport
    {
        std::string status; // "theorem-supported" or "exploratory"
        double commutator = 0;
        GeneratorWord word;
        LatticeSpec suggested;
        bool found = false;
        IdentReport report;                    // for the suggested lattice
        std::vector<std::pair<LatticeSpec, IdentReport>> sweep; // every lattice tried, densest first
    };

    // Gram of the A-Weyl picture: rows conj(mu(A) T_lambda sigma_{S'})|_K / N
    Eigen::MatrixXcd build_meta_gram(const OperatorMat &Sp, const MetaplecticOp &A, const LatticeSpec &L, const SupportRegion &K);

    // Separable lattices with |Lambda| >= |K|, densest first (ties by a then b)
    std::vector<LatticeSpec> lattice_sweep(const Grid &grid, std::size_t min_size);

    MetaIdentReport meta_identifiability(const SympMat &A, const SupportRegion &K, const Grid &grid, double gauss_a = 1.0);

    struct PhaseRetrieval
    {
        Signal f;
        IdentReport report;
        double residual = 0;
        double second_ratio = 0; // sigma_2 / sigma_1 of the recovered kernel
    };

    // Kernel-picture Gram: row lambda, column (s, t) in K1 x K1, entry conj(rho(lambda) g(s)) rho(lambda) g(t)
    Eigen::MatrixXcd phase_retrieval_gram(const Signal &g, const LatticeSpec &L, const std::vector<int> &K1);

    // Measurements |V_g f(lambda)|^2 on the lattice
    Eigen::VectorXd spectrogram_samples(const Signal &f, const Signal &g, const LatticeSpec &L);

    PhaseRetrieval phase_retrieval_from_samples(const Eigen::VectorXd &m, const Signal &g, const LatticeSpec &L, const std::vector<int> &K1);

    PhaseRetrieval phase_retrieval_demo(const Signal &f, const Signal &g, const LatticeSpec &L, const std::vector<int> &K1);

    // min over phi of || e^{i phi} a - b || / || b ||
    double phase_distance(const Signal &a, const Signal &b);

    // Rows e^{2 pi i (E lambda) . t / N} restricted to t in K
    IdentReport muntz_gram_probe(const LatticeSpec &L, const SupportRegion &K, const RMat &E);
}

#endif
