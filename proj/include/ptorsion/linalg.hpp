// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_LINALG_HPP
#define PTORSION_LINALG_HPP

#include <cstddef>
#include <vector>

#include "ptorsion/field.hpp"

namespace ptorsion {

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols);
    Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

    static Matrix identity(const Field& field, std::size_t n);
    static Matrix from_ints(const Field& field, const std::vector<std::vector<std::int64_t>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_zero() const noexcept;

    Elem at(std::size_t i, std::size_t j) const noexcept { return a_[i * cols_ + j]; }
    Elem& at(std::size_t i, std::size_t j) noexcept { return a_[i * cols_ + j]; }
    const std::vector<Elem>& entries() const noexcept { return a_; }
    std::vector<Elem> row(std::size_t i) const;

    Matrix transpose() const;
    /// Entrywise sigma^t.
    Matrix frobenius(int t) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

private:
    Field field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

/// Reduced row echelon form with the zero rows removed, plus pivot columns.
struct RowEchelon {
    Matrix basis;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const Matrix& m);
std::size_t matrix_rank(const Matrix& m);
/// Basis (as rows) of {x : m x = 0}.
Matrix nullspace(const Matrix& m);
Matrix vstack(const Matrix& top, const Matrix& bottom);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Subspace of F^n kept as a canonical reduced row echelon basis, so two
/// subspaces are equal exactly when their bases are.
class Subspace {
public:
    /// Span of the rows of generators.
    explicit Subspace(const Matrix& generators);

    static Subspace zero(const Field& field, std::size_t ambient);
    static Subspace whole(const Field& field, std::size_t ambient);

    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    const Matrix& basis() const noexcept { return basis_; }
    const Field& field() const noexcept { return basis_.field(); }

    bool contains(const Subspace& other) const;
    /// Rows spanning the annihilator {y : y . w = 0 for all w}.
    Matrix annihilator() const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b) noexcept { return a.basis_ == b.basis_; }

private:
    Subspace(Matrix rref, int) : basis_(std::move(rref)) {}
    Matrix basis_;
};

}  // namespace ptorsion

#endif  // PTORSION_LINALG_HPP
