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

#include "qtfa/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qtfa
{
    namespace
    {
        std::string num(double v)
        {
            std::ostringstream os;
            os << std::setprecision(17) << v;
            return os.str();
        }

        std::string short_num(double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.3e", v);
            return buf;
        }

        // viridis sampled at five stops
        std::string colour(double t)
        {
            static const std::array<std::array<double, 3>, 5> stops = {{{68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
            t = std::clamp(t, 0.0, 1.0) * 4.0;
            const int i = std::min(3, (int)t);
            const double u = t - i;
            char buf[8];
            int c[3];
            for (int k = 0; k < 3; ++k)
                c[k] = (int)std::lround(stops[i][k] + u * (stops[i + 1][k] - stops[i][k]));
            std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
            return buf;
        }
    }

    void write_text(const std::string &path, const std::string &content)
    {
        std::error_code ec;
        const auto parent = std::filesystem::path(path).parent_path();
        if (!parent.empty())
            std::filesystem::create_directories(parent, ec);
        std::ofstream out(path, std::ios::binary);
        if (!out)
            fail(ErrorCode::IoError, "cannot open " + path + " for writing");
        out << content;
        if (!out)
            fail(ErrorCode::IoError, "write to " + path + " failed");
    }

    std::string read_text(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            fail(ErrorCode::IoError, "cannot read " + path);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    std::string signal_csv(const Grid &grid, const Signal &f)
    {
        std::ostringstream os;
        os << "t,re,im\n";
        for (int t = -grid.N / 2; t < grid.N / 2; ++t)
        {
            const cplx v = f(grid.index(t));
            os << t << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
        }
        return os.str();
    }

    std::string phase_csv(const Grid &grid, const PhaseFn &F)
    {
        std::ostringstream os;
        os << "x,w,re,im\n";
        for (const auto &z : all_points(grid))
        {
            const cplx v = F(grid.index(z.x), grid.index(z.w));
            os << z.x << ',' << z.w << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
        }
        return os.str();
    }

    std::string samples_csv(const LatticeSpec &L, const Eigen::VectorXcd &v)
    {
        require_size(v.size(), (long long)L.size(), "sample vector");
        std::ostringstream os;
        os << "lambda1,lambda2,re,im\n";
        for (std::size_t i = 0; i < L.size(); ++i)
            os << L.points[i].x << ',' << L.points[i].w << ',' << num(v(i).real()) << ',' << num(v(i).imag()) << '\n';
        return os.str();
    }

    std::vector<std::vector<double>> read_csv_rows(const std::string &text)
    {
        std::vector<std::vector<double>> rows;
        std::istringstream in(text);
        std::string line;
        bool first = true;
        while (std::getline(in, line))
        {
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            if (line.empty())
                continue;
            std::vector<double> row;
            std::istringstream ls(line);
            std::string cell;
            bool ok = true;
            while (std::getline(ls, cell, ','))
            {
                try
                {
                    std::size_t used = 0;
                    row.push_back(std::stod(cell, &used));
                }
                catch (const std::exception &)
                {
                    ok = false;
                    break;
                }
            }
            if (!ok)
            {
                if (first)
                {
                    first = false;
                    continue;
                }
                fail(ErrorCode::ConfigInvalid, "non-numeric CSV row: " + line);
            }
            first = false;
            rows.push_back(std::move(row));
        }
        return rows;
    }

    Signal signal_from_csv(const std::string &text, int N)
    {
        const Grid G{N};
        Signal f = Signal::Zero(N);
        for (const auto &r : read_csv_rows(text))
        {
            if (r.size() != 3)
                fail(ErrorCode::ConfigInvalid, "signal CSV rows need t,re,im");
            f(G.index(std::llround(r[0]))) = cplx(r[1], r[2]);
        }
        return f;
    }

    RMat matrix_from_csv(const std::string &text)
    {
        const auto rows = read_csv_rows(text);
        if (rows.empty())
            fail(ErrorCode::ConfigInvalid, "empty matrix CSV");
        const bool triplets = std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.size() == 3; }) && rows.size() != 3;
        if (triplets)
        {
            long long n = 0;
            for (const auto &r : rows)
                n = std::max({n, std::llround(r[0]) + 1, std::llround(r[1]) + 1});
            RMat M = RMat::Zero(n, n);
            for (const auto &r : rows)
                M(std::llround(r[0]), std::llround(r[1])) = r[2];
            return M;
        }
        RMat M((Eigen::Index)rows.size(), (Eigen::Index)rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
        {
            if (rows[i].size() != rows[0].size())
                fail(ErrorCode::ConfigInvalid, "ragged matrix CSV");
            for (std::size_t j = 0; j < rows[i].size(); ++j)
                M((Eigen::Index)i, (Eigen::Index)j) = rows[i][j];
        }
        return M;
    }

    std::string heatmap_svg(const Grid &grid, const PhaseFn &F, const std::string &title)
    {
        const int N = grid.N;
        const int cell = std::max(2, 384 / N);
        const int top = 24, left = 8, side = N * cell;
        const int bar_x = left + side + 16, bar_w = 14, width = bar_x + bar_w + 80;
        const int height = top + side + 16;
        const double hi = F.cwiseAbs().maxCoeff(), lo = F.cwiseAbs().minCoeff();
        const double span = hi - lo;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
           << height << "\" shape-rendering=\"crispEdges\">\n";
        os << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
        os << "<text x=\"" << left << "\" y=\"16\" font-family=\"monospace\" font-size=\"12\">" << title << "</text>\n";
        for (int x = -N / 2; x < N / 2; ++x)
            for (int w = -N / 2; w < N / 2; ++w)
            {
                const double v = std::abs(F(grid.index(x), grid.index(w)));
                const double t = span > 0 ? (v - lo) / span : 0.5;
                const int px = left + (x + N / 2) * cell;
                const int py = top + (N / 2 - 1 - w) * cell;
                os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\"" << colour(t) << "\"/>\n";
            }
        const int steps = 32;
        for (int k = 0; k < steps; ++k)
        {
            const int y0 = top + side * k / steps, y1 = top + side * (k + 1) / steps;
            os << "<rect x=\"" << bar_x << "\" y=\"" << y0 << "\" width=\"" << bar_w << "\" height=\"" << (y1 - y0) << "\" fill=\""
               << colour(1.0 - (k + 0.5) / steps) << "\"/>\n";
        }
        os << "<text x=\"" << bar_x + bar_w + 4 << "\" y=\"" << top + 10 << "\" font-family=\"monospace\" font-size=\"10\">" << short_num(hi) << "</text>\n";
        os << "<text x=\"" << bar_x + bar_w + 4 << "\" y=\"" << top + side << "\" font-family=\"monospace\" font-size=\"10\">" << short_num(lo) << "</text>\n";
        os << "</svg>\n";
        return os.str();
    }

    void emit_heatmap(const Grid &grid, const PhaseFn &F, const std::string &path, const std::string &title)
    {
        write_text(path, heatmap_svg(grid, F, title));
    }
}
