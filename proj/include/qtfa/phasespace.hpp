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

#ifndef QTFA_PHASESPACE_HPP
#define QTFA_PHASESPACE_HPP

#include "qtfa/types.hpp"
#include <vector>

namespace qtfa
{
    // Cyclic grid Z_N with centered representatives {-N/2, ..., N/2-1}
    struct Grid
    {
        int N = 0;

        // Centered representative of k mod N
        int reduce(long long k) const;

        // Storage index of k mod N in 0..N-1
        int index(long long k) const;

        std::vector<int> indices() const;
    };

    Grid make_grid(int N);

    // Time-frequency point (x, w); make_point reduces both to centered range
    struct TFPoint
    {
        int x = 0;
        int w = 0;
        bool operator==(const TFPoint &o) const { return x == o.x && w == o.w; }
    };

    TFPoint make_point(const Grid &grid, long long x, long long w);

    // Separable lattice aZ_N x bZ_N with its annihilator (N/b)Z_N x (N/a)Z_N
    struct LatticeSpec
    {
        Grid grid;
        int a = 1;
        int b = 1;
        std::vector<TFPoint> points;         // enumerated in row-major (x, w) order
        std::vector<TFPoint> adjoint_points; // enumeration of the adjoint lattice

        int adjoint_a() const { return grid.N / b; }
        int adjoint_b() const { return grid.N / a; }
        std::size_t size() const { return points.size(); }
        bool contains(const TFPoint &z) const;
        bool adjoint_contains(const TFPoint &z) const;
    };

    // Centered (N/b) x (N/a) block, one representative per adjoint-lattice coset
    struct FundamentalDomain
    {
        LatticeSpec lattice;
        std::vector<TFPoint> Q;
        int x_lo = 0, x_hi = 0; // inclusive centered bounds
        int w_lo = 0, w_hi = 0;
        bool contains(const TFPoint &z) const;
    };

    LatticeSpec make_lattice(const Grid &grid, int a, int b);

    FundamentalDomain fundamental_domain(const LatticeSpec &lattice);

    // h = 1_Q
    PhaseFn indicator_window(const FundamentalDomain &domain);

    // Every point of Z_N x Z_N in centered row-major order
    std::vector<TFPoint> all_points(const Grid &grid);

    // Centered block [x_lo, x_hi] x [w_lo, w_hi]
    std::vector<TFPoint> centered_block(const Grid &grid, int nx, int nw);

    // Size check shared by every module: throws GridMismatch with context
    void require_size(long long got, long long want, const char *what);
}

#endif
