// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_LAURENT_HPP
#define PTORSION_LAURENT_HPP

#include <vector>

#include "ptorsion/field.hpp"
#include "ptorsion/poly.hpp"

namespace ptorsion {

/// Laurent polynomial sum a_i x^i over the window [low(), high()].
/// Both window endpoints carry nonzero coefficients unless the value is zero.
class LaurentPoly {
public:
    explicit LaurentPoly(Field field) : field_(std::move(field)) {}
    /// Coefficients of x^low, x^{low+1}, ...
    LaurentPoly(Field field, int low, std::vector<Elem> coeffs);
    explicit LaurentPoly(const Poly& p) : LaurentPoly(p.field(), 0, p.coeffs()) {}

    static LaurentPoly monomial(const Field& field, Elem c, int exponent);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Window endpoints; meaningless for the zero value.
    int low() const noexcept { return low_; }
    int high() const noexcept { return low_ + static_cast<int>(c_.size()) - 1; }
    Elem coeff(int exponent) const noexcept;

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept;

private:
    void normalize() noexcept;

    Field field_;
    int low_ = 0;
    std::vector<Elem> c_;
};

/// Cartier operator on the differential (sum a_i x^i) dx in characteristic p:
/// C(sum a_i x^i dx) = sum (a_{p i + p - 1})^{1/p} x^i dx.
/// For p = 2 this is the parity rule x^b dx -> x^{(b-1)/2} dx for odd b, 0 for even b.
LaurentPoly cartier_on_differential(const LaurentPoly& coeffs_of_dx);

}  // namespace ptorsion

#endif  // PTORSION_LAURENT_HPP
