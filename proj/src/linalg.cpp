// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/linalg.hpp"

#include <stdexcept>

namespace ptorsion {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, Elem{0}) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_ints(const Field& field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
}

bool Matrix::is_zero() const noexcept {
    for (Elem e : a_) {
        if (e.value != 0) return false;
    }
    return true;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::frobenius(int t) const {
    Matrix r = *this;
    for (Elem& e : r.a_) e = field_.frobenius(e, t);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("matrices over different fields");
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch in product");
    const Field& k = a.field_;
    Matrix r(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t l = 0; l < a.cols_; ++l) {
            const Elem x = a.at(i, l);
            if (x.value == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) = k.add(r.at(i, j), k.mul(x, b.at(l, j)));
        }
    }
    return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix shape mismatch in sum");
    Matrix r = a;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = a.field_.add(a.a_[i], b.a_[i]);
    return r;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

RowEchelon row_reduce(const Matrix& m) {
    const Field& k = m.field();
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a.at(piv, c).value == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        const Elem inv = k.inv(a.at(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = k.mul(a.at(r, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const Elem f = a.at(i, c);
            if (f.value == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) = k.sub(a.at(i, j), k.mul(f, a.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Elem> kept(a.entries().begin(), a.entries().begin() + static_cast<std::ptrdiff_t>(r * a.cols()));
    return {Matrix(k, r, a.cols(), std::move(kept)), std::move(pivots)};
}

std::size_t matrix_rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
    const Field& k = m.field();
    const RowEchelon e = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : e.pivots) is_pivot[c] = true;
    Matrix ns(k, n - e.pivots.size(), n);
    std::size_t row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        ns.at(row, free) = k.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i) ns.at(row, e.pivots[i]) = k.neg(e.basis.at(i, free));
        ++row;
    }
    return ns;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
    if (!(top.field() == bottom.field()) || top.cols() != bottom.cols())
        throw std::invalid_argument("vstack shape mismatch");
    std::vector<Elem> e = top.entries();
    e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
    return Matrix(top.field(), top.rows() + bottom.rows(), top.cols(), std::move(e));
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("block_diagonal over different fields");
    Matrix r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return r;
}

Subspace::Subspace(const Matrix& generators) : basis_(row_reduce(generators).basis) {}

Subspace Subspace::zero(const Field& field, std::size_t ambient) { return Subspace(Matrix(field, 0, ambient), 0); }

Subspace Subspace::whole(const Field& field, std::size_t ambient) {
    return Subspace(Matrix::identity(field, ambient), 0);
}

bool Subspace::contains(const Subspace& other) const { return (*this + other).dim() == dim(); }

Matrix Subspace::annihilator() const { return nullspace(basis_); }

Subspace operator+(const Subspace& a, const Subspace& b) { return Subspace(vstack(a.basis_, b.basis_)); }

Subspace intersect(const Subspace& a, const Subspace& b) {
    // x lies in both iff it is killed by both annihilators.
    const Matrix eqs = vstack(a.annihilator(), b.annihilator());
    return Subspace(nullspace(eqs));
}

}  // namespace ptorsion
