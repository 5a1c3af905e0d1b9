// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ptorsion/semilinear.hpp"

using namespace ptorsion;

namespace {

Matrix random_matrix(const Field& k, std::mt19937_64& rng, std::size_t r, std::size_t c, int zero_bias = 0) {
    Matrix m(k, r, c);
    const std::uint64_t q = k.degree() == 1 ? k.characteristic() : k.order();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = (zero_bias && rng() % zero_bias) ? k.zero() : k.from_index(rng() % q);
    return m;
}

}  // namespace

TEST_CASE("rank examples") {
    const Field k = Field::make(3);
    CHECK(matrix_rank(Matrix(k, 3, 3)) == 0);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(matrix_rank(Matrix::identity(k, n)) == n);
    CHECK(matrix_rank(Matrix::from_ints(k, {{0, 0}, {1, 0}})) == 1);
    CHECK(matrix_rank(Matrix::from_ints(k, {{1, 2}, {2, 1}})) == 1);  // second row is twice the first mod 3
}

TEST_CASE("rank agrees with the oracle and survives row operations") {
    std::mt19937_64 rng(11);
    for (std::int64_t p : {2, 3, 7}) {
        const Field k = Field::make(static_cast<std::uint64_t>(p));
        for (int it = 0; it < 60; ++it) {
            const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m = random_matrix(k, rng, r, c, 2);
            std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) rows[i][j] = static_cast<std::int64_t>(m.at(i, j).value);
            const std::size_t rk = matrix_rank(m);
            CHECK(rk == oracle::rank(rows, p));
            // Random invertible row operations.
            for (int op = 0; op < 10; ++op) {
                const std::size_t i = rng() % r, j = rng() % r;
                if (i == j) {
                    const Elem s = k.from_int(1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p - 1)));
                    for (std::size_t col = 0; col < c; ++col) m.at(i, col) = k.mul(s, m.at(i, col));
                } else {
                    const Elem s = k.from_int(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)));
                    for (std::size_t col = 0; col < c; ++col) m.at(i, col) = k.add(m.at(i, col), k.mul(s, m.at(j, col)));
                }
            }
            CHECK(matrix_rank(m) == rk);
            // Rank-nullity.
            CHECK(nullspace(m).rows() + rk == c);
            CHECK((m * nullspace(m).transpose()).is_zero());
        }
    }
}

TEST_CASE("subspaces") {
    const Field k = Field::make(5);
    const Subspace a(Matrix::from_ints(k, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
    const Subspace b(Matrix::from_ints(k, {{0, 1, 0, 0}, {0, 0, 1, 0}}));
    CHECK((a + b).dim() == 3);
    CHECK(intersect(a, b).dim() == 1);
    CHECK(intersect(a, b) == Subspace(Matrix::from_ints(k, {{0, 3, 0, 0}})));
    CHECK(a.contains(intersect(a, b)));
    CHECK_FALSE(a.contains(b));
    CHECK(Subspace::whole(k, 4).contains(a + b));
    CHECK(Subspace::zero(k, 4).dim() == 0);
    CHECK(a.annihilator().rows() == 2);
    CHECK(Subspace(Matrix::from_ints(k, {{2, 4, 0, 0}, {1, 2, 0, 0}})).dim() == 1);
}

TEST_CASE("semilinear maps") {
    const Field k = Field::make(5);
    const Field k4 = Field::make(2, 2);
    std::mt19937_64 rng(5);

    SUBCASE("identity is neutral") {
        const SemilinearMap x(random_matrix(k4, rng, 3, 3), 1);
        CHECK(semilinear_compose(SemilinearMap::identity(k4, 3), x) == x);
        CHECK(semilinear_compose(x, SemilinearMap::identity(k4, 3)) == x);
    }
    SUBCASE("composition is associative") {
        for (const Field& f : {Field::make(2, 3), Field::make(3, 2), k}) {
            for (int it = 0; it < 30; ++it) {
                const std::size_t n = 1 + rng() % 4;
                const SemilinearMap a(random_matrix(f, rng, n, n), static_cast<int>(rng() % 5) - 2);
                const SemilinearMap b(random_matrix(f, rng, n, n), static_cast<int>(rng() % 5) - 2);
                const SemilinearMap c(random_matrix(f, rng, n, n), static_cast<int>(rng() % 5) - 2);
                CHECK((a * b) * c == a * (b * c));
                // Composition agrees with applying one map after the other.
                std::vector<Elem> x(n);
                for (auto& e : x) e = f.from_index(rng() % f.order());
                CHECK((a * b).apply(x) == a.apply(b.apply(x)));
            }
        }
    }
    SUBCASE("semilinearity") {
        const SemilinearMap a(random_matrix(k4, rng, 2, 2), 1);
        const Elem w = k4.generator_x();
        const std::vector<Elem> x{k4.one(), w};
        const std::vector<Elem> wx{w, k4.mul(w, w)};
        const auto ax = a.apply(x), awx = a.apply(wx);
        for (std::size_t i = 0; i < 2; ++i) CHECK(awx[i] == k4.mul(k4.frobenius(w), ax[i]));
    }
    SUBCASE("image, kernel and preimage") {
        for (int it = 0; it < 40; ++it) {
            const Field& f = it % 2 ? k : k4;
            const std::size_t n = 1 + rng() % 5;
            const SemilinearMap a(random_matrix(f, rng, n, n, 2), it % 3 - 1);
            CHECK(a.image().dim() + a.kernel().dim() == n);
            CHECK(a.rank() == a.image().dim());
            const Subspace w(random_matrix(f, rng, 1 + rng() % n, n));
            const Subspace pre = a.preimage(w);
            CHECK(w.contains(a.image(pre)));
            CHECK(pre.contains(a.kernel()));
            CHECK(a.preimage(Subspace::zero(f, n)) == a.kernel());
            CHECK(pre.dim() == a.kernel().dim() + intersect(w, a.image()).dim());
        }
    }
    SUBCASE("stable rank") {
        CHECK(stable_rank(SemilinearMap(Matrix::from_ints(k, {{0, 0}, {1, 0}}), -1), 4) == 0);
        CHECK(stable_rank(SemilinearMap(Matrix::from_ints(k, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}), 1), 3) == 0);
        CHECK(stable_rank(SemilinearMap(Matrix::from_ints(k, {{2, 1}, {1, 1}}), -1), 7) == 2);
        for (int it = 0; it < 40; ++it) {
            const std::size_t n = 1 + rng() % 5;
            const SemilinearMap a(random_matrix(k4, rng, n, n, 3), -1);
            std::size_t prev = n;
            for (unsigned i = 1; i <= 2 * n + 2; ++i) {
                const std::size_t s = stable_rank(a, i);
                CHECK(s <= prev);
                if (i >= n) CHECK(s == stable_rank(a, static_cast<unsigned>(n)));
                prev = s;
            }
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(SemilinearMap(Matrix(k, 2, 3), 0), std::invalid_argument);
        CHECK_THROWS_AS(semilinear_compose(SemilinearMap::identity(k, 2), SemilinearMap::identity(k, 3)),
                        std::invalid_argument);
        CHECK_THROWS_AS(semilinear_compose(SemilinearMap::identity(k, 2), SemilinearMap::identity(k4, 2)),
                        std::invalid_argument);
    }
}
