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

#ifndef QTFA_IO_HPP
#define QTFA_IO_HPP

#include "qtfa/phasespace.hpp"
#include <string>
#include <vector>

namespace qtfa
{
    void write_text(const std::string &path, const std::string &content);
    std::string read_text(const std::string &path);

    // Columns t,re,im on centered t
    std::string signal_csv(const Grid &grid, const Signal &f);

    // Columns x,w,re,im on centered (x, w)
    std::string phase_csv(const Grid &grid, const PhaseFn &F);

    // Columns lambda1,lambda2,re,im in lattice enumeration order
    std::string samples_csv(const LatticeSpec &L, const Eigen::VectorXcd &v);

    // Reads "index..., re, im" rows; a header line is skipped when it is not numeric
    std::vector<std::vector<double>> read_csv_rows(const std::string &text);

    // Signal from rows (t, re, im); t taken mod N
    Signal signal_from_csv(const std::string &text, int N);

    // Real matrix from rows (i, j, value) or plain rows of numbers
    RMat matrix_from_csv(const std::string &text);

    // |F| heatmap, x across, w upward, linear colour scale with colourbar
    std::string heatmap_svg(const Grid &grid, const PhaseFn &F, const std::string &title);

    void emit_heatmap(const Grid &grid, const PhaseFn &F, const std::string &path, const std::string &title = "");
}

#endif
