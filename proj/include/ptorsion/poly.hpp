// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_POLY_HPP
#define PTORSION_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ptorsion/field.hpp"

namespace ptorsion {

/// Dense univariate polynomial over a finite field, lowest degree first.
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient vector and degree kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    /// Convenience for small examples: integers are mapped through Z -> F_p.
    static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);
    static Poly monomial(const Field& field, Elem c, std::size_t k);
    static Poly constant(const Field& field, Elem c) { return monomial(field, c, 0); }
    static Poly x(const Field& field) { return monomial(field, field.one(), 1); }

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == field_.one(); }
    /// Coefficient of x^k; zero beyond the degree.
    Elem coeff(std::size_t k) const noexcept { return k < c_.size() ? c_[k] : Elem{0}; }
    Elem leading() const noexcept { return c_.empty() ? Elem{0} : c_.back(); }

    Elem operator()(Elem x) const noexcept;

    Poly derivative() const;
    Poly scaled(Elem s) const;
    /// Divides by the leading coefficient; the zero polynomial is returned unchanged.
    Poly monic() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) noexcept;

private:
    void normalize() noexcept;

    Field field_;
    std::vector<Elem> c_;
};

/// Products above this many coefficients (in the smaller factor) use Karatsuba.
inline constexpr std::size_t kKaratsubaThreshold = 32;

Poly mul_schoolbook(const Poly& a, const Poly& b);
Poly mul_karatsuba(const Poly& a, const Poly& b);

/// f^e by square-and-multiply; f^0 = 1.
Poly poly_pow(const Poly& f, std::uint64_t e);

/// Euclidean division a = q * b + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// gcd(f, f') is constant. A nonconstant f with f' = 0 is a p-th power and
/// therefore not squarefree.
bool is_squarefree(const Poly& f);

/// Rabin's test over the coefficient field F_q: x^{q^n} = x mod f and
/// gcd(x^{q^{n/r}} - x, f) = 1 for every prime r dividing n = deg f.
bool is_irreducible(const Poly& f);

}  // namespace ptorsion

#endif  // PTORSION_POLY_HPP
