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

#include "qtfa/quantize.hpp"

#include <Eigen/SVD>

namespace qtfa
{
    OperatorMat rank_one(const Signal &f, const Signal &g)
    {
        require_size(g.size(), f.size(), "rank-one factor");
        return f * g.adjoint();
    }

    cplx trace(const OperatorMat &S)
    {
        require_size(S.cols(), S.rows(), "operator");
        return S.trace();
    }

    cplx hs_inner(const OperatorMat &S, const OperatorMat &T)
    {
        require_size(T.rows(), S.rows(), "operator");
        require_size(T.cols(), S.cols(), "operator");
        return (S.array() * T.array().conjugate()).sum();
    }

    double hs_norm(const OperatorMat &S)
    {
        return S.norm();
    }

    SpectralDecomp spectral_decomp(const OperatorMat &S)
    {
        require_size(S.cols(), S.rows(), "operator");
        SpectralDecomp out;
        if (S.rows() == 0)
            return out;
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(S, Eigen::ComputeFullU | Eigen::ComputeFullV);
        const auto &sv = svd.singularValues();
        const double smax = sv.size() ? sv(0) : 0.0;
        if (smax == 0.0)
            return out;
        for (Eigen::Index n = 0; n < sv.size(); ++n)
        {
            if (sv(n) <= 1e-10 * smax)
                break;
            out.values.push_back(sv(n));
            out.left.push_back(svd.matrixU().col(n));
            out.right.push_back(svd.matrixV().col(n));
        }
        return out;
    }

    OperatorMat reassemble(const SpectralDecomp &sd, int N)
    {
        OperatorMat S = OperatorMat::Zero(N, N);
        for (std::size_t n = 0; n < sd.values.size(); ++n)
            S += sd.values[n] * rank_one(sd.left[n], sd.right[n]);
        return S;
    }

    PhaseFn weyl_symbol(const OperatorMat &S)
    {
        return sympft(fourier_wigner(S));
    }

    OperatorMat weyl_quantize(const PhaseFn &sigma)
    {
        return fourier_wigner_inverse(sympft(sigma));
    }

    PhaseFn kn_symbol(const OperatorMat &S)
    {
        const Grid G = grid_of(S.rows());
        return sympft(fourier_wigner(S).cwiseProduct(tf_chirp(G, -1)));
    }

    OperatorMat kn_quantize(const PhaseFn &kappa)
    {
        const Grid G = grid_of(kappa.rows());
        return fourier_wigner_inverse(sympft(kappa).cwiseProduct(tf_chirp(G, 1)));
    }
}
