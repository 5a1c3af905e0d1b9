// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ptorsion/laurent.hpp"
#include "ptorsion/poly.hpp"

using namespace ptorsion;

namespace {

Poly random_poly(const Field& k, std::mt19937_64& rng, std::size_t len) {
    std::vector<Elem> c(len);
    const std::uint64_t q = k.degree() == 1 ? k.characteristic() : k.order();
    for (auto& e : c) e = k.from_index(rng() % q);
    return Poly(k, c);
}

}  // namespace

TEST_CASE("powers of small polynomials") {
    const Field k = Field::make(5);
    CHECK(poly_pow(Poly::from_ints(k, {0, 1, 0, 1}), 2) == Poly::from_ints(k, {0, 0, 1, 0, 2, 0, 1}));
    CHECK(poly_pow(Poly::from_ints(k, {1, 0, 0, 1}), 2) == Poly::from_ints(k, {1, 0, 0, 2, 0, 0, 1}));
    CHECK(poly_pow(Poly::from_ints(k, {3, 4, 1}), 0) == Poly::constant(k, k.one()));
    CHECK(poly_pow(Poly(k), 0).is_one());
}

TEST_CASE("normalization and basic accessors") {
    const Field k = Field::make(7);
    const Poly z = Poly::from_ints(k, {0, 0, 7});
    CHECK(z.is_zero());
    CHECK(z.degree() == Poly::kZeroDegree);
    const Poly f = Poly::from_ints(k, {1, 2, 3});
    CHECK(f.degree() == 2);
    CHECK(f.leading() == k.from_int(3));
    CHECK(f(k.from_int(2)) == k.from_int(1 + 4 + 12));
    CHECK(f.derivative() == Poly::from_ints(k, {2, 6}));
    CHECK(f.monic().leading() == k.one());
    CHECK((f - f).is_zero());
    CHECK(-f + f == Poly(k));
}

TEST_CASE("poly_pow is additive in the exponent") {
    std::mt19937_64 rng(42);
    for (const Field& k : {Field::make(3), Field::make(7), Field::make(2, 3)}) {
        for (int it = 0; it < 40; ++it) {
            const Poly f = random_poly(k, rng, 1 + rng() % 5);
            const unsigned a = rng() % 9, b = rng() % 9;
            CHECK(poly_pow(f, a + b) == poly_pow(f, a) * poly_pow(f, b));
        }
    }
}

TEST_CASE("schoolbook agrees with the oracle, karatsuba agrees with schoolbook") {
    std::mt19937_64 rng(7);
    const Field k = Field::make(11);
    for (int it = 0; it < 50; ++it) {
        const Poly a = random_poly(k, rng, 1 + rng() % 20), b = random_poly(k, rng, 1 + rng() % 20);
        oracle::IntPoly ia, ib;
        for (Elem e : a.coeffs()) ia.push_back(static_cast<std::int64_t>(e.value));
        for (Elem e : b.coeffs()) ib.push_back(static_cast<std::int64_t>(e.value));
        const auto expect = oracle::mul(ia, ib, 11);
        const Poly got = mul_schoolbook(a, b);
        REQUIRE(got.coeffs().size() == expect.size());
        for (std::size_t i = 0; i < expect.size(); ++i) CHECK(got.coeffs()[i].value == static_cast<std::uint64_t>(expect[i]));
    }
    for (const Field& kk : {Field::make(2), Field::make(13), Field::make(2, 4), Field::make(3, 5)}) {
        for (int it = 0; it < 30; ++it) {
            const Poly a = random_poly(kk, rng, 1 + rng() % 150), b = random_poly(kk, rng, 1 + rng() % 150);
            CHECK(mul_karatsuba(a, b) == mul_schoolbook(a, b));
            CHECK(a * b == mul_schoolbook(a, b));
        }
    }
}

TEST_CASE("division, gcd and squarefreeness") {
    const Field k = Field::make(5);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 100; ++it) {
        const Poly a = random_poly(k, rng, 1 + rng() % 12), b = random_poly(k, rng, 1 + rng() % 6);
        if (b.is_zero()) continue;
        const auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        CHECK(a % b == r);
    }
    CHECK_THROWS_AS(divmod(Poly::x(k), Poly(k)), std::domain_error);
    const Poly f = Poly::from_ints(k, {-1, 1}) * Poly::from_ints(k, {2, 0, 1});
    const Poly g = Poly::from_ints(k, {-1, 1}) * Poly::from_ints(k, {3, 1});
    CHECK(gcd(f, g) == Poly::from_ints(k, {-1, 1}));
    CHECK(is_squarefree(Poly::from_ints(k, {0, 1, 0, 1})));
    CHECK_FALSE(is_squarefree(Poly::from_ints(k, {1, 2, 1})));
    CHECK_FALSE(is_squarefree(Poly::from_ints(Field::make(3), {1, 0, 0, 1})));  // (x + 1)^3
    CHECK(powmod(Poly::x(k), 5, Poly::from_ints(k, {1, 0, 1})) == Poly::x(k) % Poly::from_ints(k, {1, 0, 1}));
}

TEST_CASE("irreducibility agrees with trial division") {
    for (std::int64_t p : {2, 3, 5}) {
        const Field k = Field::make(static_cast<std::uint64_t>(p));
        for (unsigned d = 1; d <= 5; ++d) {
            std::uint64_t count = 1;
            for (unsigned i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
            for (std::uint64_t idx = 0; idx < count && idx < 400; ++idx) {
                const auto f = oracle::monic_from_index(idx, d, p);
                CHECK(is_irreducible(Poly::from_ints(k, f)) == oracle::is_irreducible(f, p));
            }
        }
    }
}

TEST_CASE("laurent polynomials and the Cartier rule") {
    const Field k = Field::make(3);
    const LaurentPoly a(k, -2, {k.one(), k.zero(), k.from_int(2)});
    CHECK(a.low() == -2);
    CHECK(a.high() == 0);
    CHECK(a.coeff(-1) == k.zero());
    CHECK(LaurentPoly(k, 4, {k.zero(), k.zero()}).is_zero());
    CHECK((a + LaurentPoly::monomial(k, k.one(), -2)).coeff(-2) == k.from_int(2));

    // C(x^{p-1} dx) = dx, C(x^{2p-1} dx) = x dx, C(x^j dx) = 0 otherwise.
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        const Field kp = Field::make(p);
        const int ip = static_cast<int>(p);
        for (int j = -3 * ip; j <= 3 * ip; ++j) {
            const LaurentPoly c = cartier_on_differential(LaurentPoly::monomial(kp, kp.one(), j));
            if ((j + 1) % ip == 0) {
                CHECK(c == LaurentPoly::monomial(kp, kp.one(), (j + 1) / ip - 1));
            } else {
                CHECK(c.is_zero());
            }
        }
    }
    // Semilinearity: C(c^p w) = c C(w).
    const Field k4 = Field::make(2, 2);
    const Elem w = k4.generator_x();
    const LaurentPoly d = LaurentPoly::monomial(k4, k4.pow(w, 2), 1);
    CHECK(cartier_on_differential(d) == LaurentPoly::monomial(k4, w, 0));
}
