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

#include "qtfa/phasespace.hpp"

#include <sstream>

namespace qtfa
{
    const char *error_name(ErrorCode code)
    {
        switch (code)
        {
        case ErrorCode::OddSize: return "OddSize";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NotDivisor: return "NotDivisor";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::OddModulation: return "OddModulation";
        case ErrorCode::EtaNotInLattice: return "EtaNotInLattice";
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::NotSymplectic: return "NotSymplectic";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::NotFree: return "NotFree";
        case ErrorCode::UnknownName: return "UnknownName";
        case ErrorCode::ChirpNotRepresentable: return "ChirpNotRepresentable";
        case ErrorCode::DilationNotUnit: return "DilationNotUnit";
        case ErrorCode::NonIntegerImage: return "NonIntegerImage";
        case ErrorCode::WindowVanishes: return "WindowVanishes";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NotCovarianceForm: return "NotCovarianceForm";
        case ErrorCode::GridIncompatible: return "GridIncompatible";
        case ErrorCode::LatticeImageNotIntegral: return "LatticeImageNotIntegral";
        case ErrorCode::SymbolVanishesAtZero: return "SymbolVanishesAtZero";
        case ErrorCode::SupportViolation: return "SupportViolation";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::UnderSampled: return "UnderSampled";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::ConfigInvalid: return "ConfigInvalid";
        case ErrorCode::IoError: return "IoError";
        }
        return "Unknown";
    }

    Error::Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code)
    {
    }

    void fail(ErrorCode code, const std::string &message)
    {
        throw Error(code, message);
    }

    void require_size(long long got, long long want, const char *what)
    {
        if (got != want)
        {
            std::ostringstream os;
            os << what << " has size " << got << ", expected " << want;
            fail(ErrorCode::GridMismatch, os.str());
        }
    }

    int Grid::reduce(long long k) const
    {
        long long r = ((k % N) + N) % N;
        if (r >= N / 2)
            r -= N;
        return (int)r;
    }

    int Grid::index(long long k) const
    {
        return (int)(((k % N) + N) % N);
    }

    std::vector<int> Grid::indices() const
    {
        std::vector<int> out;
        for (int k = -N / 2; k < N / 2; ++k)
            out.push_back(k);
        return out;
    }

    Grid make_grid(int N)
    {
        if (N % 2 != 0)
            fail(ErrorCode::OddSize, "grid size " + std::to_string(N) + " is odd");
        if (N < 4)
            fail(ErrorCode::TooSmall, "grid size " + std::to_string(N) + " is below 4");
        return Grid{N};
    }

    TFPoint make_point(const Grid &grid, long long x, long long w)
    {
        return TFPoint{grid.reduce(x), grid.reduce(w)};
    }

    bool LatticeSpec::contains(const TFPoint &z) const
    {
        return grid.index(z.x) % a == 0 && grid.index(z.w) % b == 0;
    }

    bool LatticeSpec::adjoint_contains(const TFPoint &z) const
    {
        return grid.index(z.x) % adjoint_a() == 0 && grid.index(z.w) % adjoint_b() == 0;
    }

    bool FundamentalDomain::contains(const TFPoint &z) const
    {
        return z.x >= x_lo && z.x <= x_hi && z.w >= w_lo && z.w <= w_hi;
    }

    std::vector<TFPoint> all_points(const Grid &grid)
    {
        std::vector<TFPoint> out;
        out.reserve((std::size_t)grid.N * grid.N);
        for (int x : grid.indices())
            for (int w : grid.indices())
                out.push_back({x, w});
        return out;
    }

    static void block_bounds(int n, int &lo, int &hi)
    {
        lo = -(n / 2);
        hi = lo + n - 1;
    }

    std::vector<TFPoint> centered_block(const Grid &grid, int nx, int nw)
    {
        if (nx < 1 || nw < 1 || nx > grid.N || nw > grid.N)
            fail(ErrorCode::BadShape, "block shape out of range");
        int xl, xh, wl, wh;
        block_bounds(nx, xl, xh);
        block_bounds(nw, wl, wh);
        std::vector<TFPoint> out;
        for (int x = xl; x <= xh; ++x)
            for (int w = wl; w <= wh; ++w)
                out.push_back({grid.reduce(x), grid.reduce(w)});
        return out;
    }

    LatticeSpec make_lattice(const Grid &grid, int a, int b)
    {
        if (a <= 0 || b <= 0 || grid.N % a != 0 || grid.N % b != 0)
        {
            std::ostringstream os;
            os << "lattice steps (" << a << "," << b << ") must divide " << grid.N;
            fail(ErrorCode::NotDivisor, os.str());
        }
        LatticeSpec L;
        L.grid = grid;
        L.a = a;
        L.b = b;
        for (int x : grid.indices())
            for (int w : grid.indices())
            {
                TFPoint z{x, w};
                if (L.contains(z))
                    L.points.push_back(z);
                if (L.adjoint_contains(z))
                    L.adjoint_points.push_back(z);
            }
        return L;
    }

    FundamentalDomain fundamental_domain(const LatticeSpec &lattice)
    {
        FundamentalDomain D;
        D.lattice = lattice;
        block_bounds(lattice.adjoint_a(), D.x_lo, D.x_hi);
        block_bounds(lattice.adjoint_b(), D.w_lo, D.w_hi);
        D.Q = centered_block(lattice.grid, lattice.adjoint_a(), lattice.adjoint_b());
        return D;
    }

    PhaseFn indicator_window(const FundamentalDomain &domain)
    {
        const Grid &g = domain.lattice.grid;
        PhaseFn h = PhaseFn::Zero(g.N, g.N);
        for (const auto &z : domain.Q)
            h(g.index(z.x), g.index(z.w)) = 1.0;
        return h;
    }
}
