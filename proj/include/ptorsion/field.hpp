// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_FIELD_HPP
#define PTORSION_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ptorsion {

/// Element of a finite field F_{p^m}, encoded as the integer sum c_i p^i of its
/// coordinates in the power basis 1, x, ..., x^{m-1} of F_p[x]/(modulus).
/// Elements carry no field pointer; every operation goes through a Field.
struct Elem {
    std::uint64_t value = 0;

    friend constexpr bool operator==(Elem, Elem) = default;
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Deterministic primality test, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n) noexcept;

/**
 * Finite field F_{p^m} presented as F_p[x]/(modulus).
 *
 * A Field is a cheap, immutable handle: copies share the same tables, and a
 * Field may be used from any number of threads. Supported sizes are
 * p^m <= 2^64. For m > 1 and p^m <= 256 addition, multiplication and
 * Frobenius go through precomputed tables; larger fields fall back to
 * coordinate arithmetic.
 */
class Field {
public:
    /// F_{p^m} with the lexicographically smallest monic irreducible modulus,
    /// comparing coefficient sequences (c_0, c_1, ..., c_{m-1}) low-to-high.
    static Field make(std::uint64_t p, unsigned m = 1);

    /// F_p[x]/(modulus) for an explicit monic modulus given low degree first.
    /// Throws std::invalid_argument when p is not prime or the modulus is not
    /// monic irreducible.
    Field(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    /// Number of elements; throws std::overflow_error for F_{2^64}.
    std::uint64_t order() const;
    /// Monic modulus, low degree first, length degree() + 1.
    const std::vector<std::uint64_t>& modulus() const noexcept;

    Elem zero() const noexcept { return Elem{0}; }
    Elem one() const noexcept { return Elem{1}; }
    /// Image of an integer under Z -> F_p -> F_{p^m}.
    Elem from_int(std::int64_t v) const noexcept;
    /// Element with the given power-basis coordinates (low first, at most m).
    Elem from_coords(std::span<const std::uint64_t> coords) const;
    std::vector<std::uint64_t> coords(Elem a) const;
    /// Checked conversion from the integer encoding.
    Elem from_index(std::uint64_t index) const;
    /// Residue class of x itself (a generator of the power basis).
    Elem generator_x() const;

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// sigma^t(a) = a^{p^t}; t may be negative and is reduced mod m.
    Elem frobenius(Elem a, int t = 1) const noexcept;

    bool is_prime_field() const noexcept { return degree() == 1; }

    /// "F_5", "F_2^3" style label.
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Data;
    explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
    std::shared_ptr<const Data> d_;
};

}  // namespace ptorsion

#endif  // PTORSION_FIELD_HPP
