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

#include "chm/core.hpp"

#include <algorithm>
#include <cmath>

#include "chm/kernels.hpp"

namespace chm {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::NotChm: return "NotCHM";
        case ErrorKind::NotUnimodular: return "NotUnimodular";
        case ErrorKind::NotBasis: return "NotBasis";
        case ErrorKind::ZeroPivot: return "ZeroPivot";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::Domain: return "DomainError";
        case ErrorKind::UnknownName: return "UnknownName";
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::InvalidTolerance: return "InvalidTolerance";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Timeout: return "Timeout";
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

Tolerance::Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps < 1e-3)) {
        throw Error(ErrorKind::InvalidTolerance, "tolerance must satisfy 0 < eps < 1e-3");
    }
}

namespace {

void require_finite(const Complex& z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw Error(ErrorKind::NonFinite, "matrix entries must be finite");
    }
}

}  // namespace

Matrix::Matrix(std::size_t d) : d_(d), data_(d * d, Complex{0.0, 0.0}) {}

Matrix::Matrix(std::size_t d, std::vector<Complex> entries) : d_(d), data_(std::move(entries)) {
    if (data_.size() != d_ * d_) {
        throw Error(ErrorKind::NonSquare, "expected " + std::to_string(d_ * d_) + " entries, got " +
                                              std::to_string(data_.size()));
    }
    std::for_each(data_.begin(), data_.end(), require_finite);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) : d_(rows.size()) {
    data_.reserve(d_ * d_);
    for (const auto& row : rows) {
        if (row.size() != d_) throw Error(ErrorKind::NonSquare, "ragged or non-square matrix literal");
        for (const auto& z : row) {
            require_finite(z);
            data_.push_back(z);
        }
    }
}

Matrix Matrix::identity(std::size_t d) {
    Matrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(d_);
    for (std::size_t r = 0; r < d_; ++r)
        for (std::size_t c = 0; c < d_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::adjoint() const {
    Matrix t(d_);
    for (std::size_t r = 0; r < d_; ++r)
        for (std::size_t c = 0; c < d_; ++c) t(c, r) = std::conj((*this)(r, c));
    return t;
}

double max_entry_distance(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return worst;
}

CheckResult is_unimodular(Complex z, Tolerance tol) {
    const double residual = std::abs(std::abs(z) - 1.0);
    return {residual <= tol.eps(), residual};
}

double gram_residual(const Matrix& m) {
    return kernels::active().gram_residual(kernels::SplitMatrix::from(m));
}

CheckResult is_chm(const Matrix& m, Tolerance tol) {
    double unimodular = 0.0;
    for (const auto& z : m.entries()) unimodular = std::max(unimodular, is_unimodular(z, tol).residual);
    const double d = static_cast<double>(m.dim());
    const double gram = gram_residual(m) / d;
    const double residual = std::max(unimodular, gram);
    return {residual <= tol.eps(), residual};
}

void require_chm(const Matrix& m, Tolerance tol, const char* what) {
    const CheckResult r = is_chm(m, tol);
    if (!r.ok) {
        throw Error(ErrorKind::NotChm, std::string(what) + " is not a complex Hadamard matrix (residual " +
                                           std::to_string(r.residual) + ")");
    }
}

}  // namespace chm
