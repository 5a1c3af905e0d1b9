// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ptorsion/field.hpp"

using namespace ptorsion;

TEST_CASE("primality") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(91));
    CHECK(is_prime(1'000'000'007));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    for (std::uint64_t n = 0; n < 2000; ++n) {
        bool trial = n >= 2;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) trial = false;
        CHECK(is_prime(n) == trial);
    }
}

TEST_CASE("prime field is integers mod p") {
    const Field k = Field::make(5);
    CHECK(k.modulus() == std::vector<std::uint64_t>{0, 1});
    CHECK(k.order() == 5);
    CHECK(k.name() == "F_5");
    for (std::int64_t a = 0; a < 5; ++a)
        for (std::int64_t b = 0; b < 5; ++b) {
            CHECK(k.add(k.from_int(a), k.from_int(b)).value == static_cast<std::uint64_t>((a + b) % 5));
            CHECK(k.mul(k.from_int(a), k.from_int(b)).value == static_cast<std::uint64_t>((a * b) % 5));
        }
    CHECK(k.from_int(-1).value == 4);
    CHECK(k.inv(k.from_int(2)).value == 3);
    CHECK_THROWS_AS(k.inv(k.zero()), std::domain_error);
}

TEST_CASE("canonical moduli match the smallest irreducible") {
    CHECK(Field::make(2, 2).modulus() == std::vector<std::uint64_t>{1, 1, 1});
    for (auto [p, m] : std::vector<std::pair<int, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 8}}) {
        const auto expect = oracle::smallest_irreducible(m, p);
        const auto got = Field::make(static_cast<std::uint64_t>(p), m).modulus();
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == static_cast<std::uint64_t>(expect[i]));
    }
    CHECK(Field::make(3, 2).modulus() == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(Field::make(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field::make(2, 65), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, {1, 0, 1}), std::invalid_argument);  // x^2 + 1 = (x + 1)^2
    CHECK_THROWS_AS(Field(3, {1, 0, 2}), std::invalid_argument);  // not monic
    CHECK_NOTHROW(Field(3, {2, 2, 1}));
}

TEST_CASE("extension multiplication agrees with the oracle") {
    for (auto [p, m] : std::vector<std::pair<int, unsigned>>{{2, 3}, {3, 2}, {5, 3}, {2, 9}, {3, 6}}) {
        const Field k = Field::make(static_cast<std::uint64_t>(p), m);
        oracle::IntPoly mod_poly(k.modulus().begin(), k.modulus().end());
        const oracle::ExtField ref{p, mod_poly};
        std::mt19937_64 rng(m * 1000 + static_cast<unsigned>(p));
        for (int it = 0; it < 200; ++it) {
            const Elem a = k.from_index(rng() % k.order()), b = k.from_index(rng() % k.order());
            auto ca = k.coords(a), cb = k.coords(b), cc = k.coords(k.mul(a, b));
            const auto expect = ref.mul(oracle::IntPoly(ca.begin(), ca.end()), oracle::IntPoly(cb.begin(), cb.end()));
            for (unsigned i = 0; i < m; ++i) CHECK(cc[i] == static_cast<std::uint64_t>(expect[i]));
        }
    }
}

namespace {

void field_axioms(const Field& k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto draw = [&] {
        const std::uint64_t q = k.degree() == 1 ? k.characteristic() : k.order();
        return k.from_index(rng() % q);
    };
    const unsigned m = k.degree();
    for (int it = 0; it < 1000; ++it) {
        const Elem a = draw(), b = draw(), c = draw();
        REQUIRE(k.add(k.add(a, b), c) == k.add(a, k.add(b, c)));
        REQUIRE(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
        REQUIRE(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        REQUIRE(k.add(a, k.neg(a)) == k.zero());
        REQUIRE(k.sub(a, b) == k.add(a, k.neg(b)));
        REQUIRE(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
        REQUIRE(k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)));
        REQUIRE(k.frobenius(a) == k.pow(a, k.characteristic()));
        REQUIRE(k.frobenius(a, static_cast<int>(m)) == a);
        REQUIRE(k.frobenius(k.frobenius(a, 1), -1) == a);
        if (a != k.zero()) REQUIRE(k.mul(a, k.inv(a)) == k.one());
    }
}

}  // namespace

TEST_CASE("field axioms on random triples") {
    field_axioms(Field::make(2), 1);
    field_axioms(Field::make(5), 2);
    field_axioms(Field::make(2, 2), 3);
    field_axioms(Field::make(2, 3), 4);
    field_axioms(Field::make(3, 2), 5);
    field_axioms(Field::make(2, 8), 6);     // largest table-driven field
    field_axioms(Field::make(3, 7), 7);     // coordinate arithmetic
    field_axioms(Field::make(2, 20), 8);
    field_axioms(Field::make(1'000'000'007), 9);
    field_axioms(Field::make(18446744073709551557ULL), 10);
}

TEST_CASE("coordinates round-trip and equality") {
    const Field k = Field::make(3, 2);
    for (std::uint64_t i = 0; i < 9; ++i) CHECK(k.from_coords(k.coords(k.from_index(i))) == k.from_index(i));
    CHECK(k.name() == "F_3^2");
    CHECK(Field::make(3, 2) == k);
    CHECK_FALSE(Field::make(3) == k);
    CHECK(Field(5, {1, 1}) == Field::make(5));
    const Elem x = k.generator_x();
    CHECK(k.coords(x) == std::vector<std::uint64_t>{0, 1});
    CHECK(k.pow(x, 8) == k.one());  // multiplicative group has order 8
}
