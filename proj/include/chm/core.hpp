// Copyright 2026-present the chm6 authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace chm {

using Complex = std::complex<double>;

enum class ErrorKind {
    NonSquare,
    NonFinite,
    NotChm,
    NotUnimodular,
    NotBasis,
    ZeroPivot,
    DimensionMismatch,
    Domain,
    UnknownName,
    Parse,
    InvalidTolerance,
    InvalidArgument,
    Timeout,
    Io,
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Absolute tolerance on moduli and residuals. Valid range is 0 < eps < 1e-3.
class Tolerance {
public:
    static constexpr double kDefault = 1e-9;

    constexpr Tolerance() = default;
    explicit Tolerance(double eps);

    double eps() const noexcept { return eps_; }

private:
    double eps_ = kDefault;
};

struct CheckResult {
    bool ok = false;
    double residual = 0.0;
};

/// Dense square complex matrix, row-major. Entries are always finite.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t d);
    Matrix(std::size_t d, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t d);

    std::size_t dim() const noexcept { return d_; }

    // 0-based.
    const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * d_ + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return data_[row * d_ + col]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    Matrix transpose() const;
    Matrix adjoint() const;

    bool operator==(const Matrix&) const = default;

private:
    std::size_t d_ = 0;
    std::vector<Complex> data_;
};

/// Largest entrywise distance; matrices must share a dimension.
double max_entry_distance(const Matrix& a, const Matrix& b);

CheckResult is_unimodular(Complex z, Tolerance tol = {});

/// max_{j,k} |(M M^*)_{jk} - d delta_{jk}|
double gram_residual(const Matrix& m);

/// Complex Hadamard test: unimodular entries and M M^* = d I. The gram part is
/// compared against eps*d; the reported residual is max(unimodular deviation,
/// gram residual / d) so that ok <=> residual <= eps.
CheckResult is_chm(const Matrix& m, Tolerance tol = {});

/// Throws Error(NotChm) when is_chm fails.
void require_chm(const Matrix& m, Tolerance tol, const char* what);

}  // namespace chm
