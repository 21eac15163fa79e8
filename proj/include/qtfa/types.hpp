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

#ifndef QTFA_TYPES_HPP
#define QTFA_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace qtfa
{
    using cplx = std::complex<double>;

    // Signal on Z_N, stored at indices 0..N-1 (index t holds the value at t mod N)
    using Signal = Eigen::VectorXcd;

    // Function on Z_N x Z_N, entry (x mod N, w mod N)
    using PhaseFn = Eigen::MatrixXcd;

    // N x N matrix acting on signals; entry (s,t) is the kernel K(s,t)
    using OperatorMat = Eigen::MatrixXcd;

    // Real matrix used for symplectic algebra
    using RMat = Eigen::MatrixXd;

    constexpr double PI = 3.14159265358979323846;

    enum class ErrorCode
    {
        OddSize,
        TooSmall,
        NotDivisor,
        GridMismatch,
        OddModulation,
        EtaNotInLattice,
        BadShape,
        NotSymplectic,
        NotSymmetric,
        Singular,
        NotFree,
        UnknownName,
        ChirpNotRepresentable,
        DilationNotUnit,
        NonIntegerImage,
        WindowVanishes,
        LengthMismatch,
        NotCovarianceForm,
        GridIncompatible,
        LatticeImageNotIntegral,
        SymbolVanishesAtZero,
        SupportViolation,
        NotPositive,
        UnderSampled,
        IllConditioned,
        RankDeficient,
        ConfigInvalid,
        IoError
    };

    const char *error_name(ErrorCode code);

    class Error : public std::runtime_error
    {
    public:
        Error(ErrorCode code, const std::string &message);
        ErrorCode code() const { return code_; }

    private:
        ErrorCode code_;
    };

    [[noreturn]] void fail(ErrorCode code, const std::string &message);
}

#endif
