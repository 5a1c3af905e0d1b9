// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "ptorsion/eo.hpp"

using namespace ptorsion;

TEST_CASE("small enumerations") {
    CHECK(eo_enumerate(1) == std::vector<EOSequence>{EOSequence({0}), EOSequence({1})});
    CHECK(eo_enumerate(2) ==
          std::vector<EOSequence>{EOSequence({0, 0}), EOSequence({0, 1}), EOSequence({1, 1}), EOSequence({1, 2})});
    const auto g3 = eo_enumerate(3);
    CHECK(g3.size() == 8);
    CHECK(std::find(g3.begin(), g3.end(), EOSequence({0, 1, 2})) != g3.end());
    CHECK(std::find(g3.begin(), g3.end(), EOSequence({1, 2, 3})) != g3.end());
    CHECK(std::is_sorted(g3.begin(), g3.end()));
}

TEST_CASE("invariants of named types") {
    CHECK(EOSequence({1, 2, 3}).p_rank() == 3);
    CHECK(EOSequence({0, 1, 2}).p_rank() == 0);
    CHECK(EOSequence({0, 1, 1}).p_rank() == 0);
    CHECK(EOSequence({0, 1, 2}).a_number() == 1);
    CHECK(EOSequence({0, 1, 1}).a_number() == 2);
    CHECK(EOSequence({0, 0, 0}).a_number() == 3);
    CHECK(EOSequence({1, 1, 1}).stratum_dim() == 3);
    CHECK(EOSequence({0, 1, 1}).stratum_dim() == 2);
    CHECK(EOSequence({0, 0, 0}).stratum_dim() == 0);
    CHECK(eo_p_rank(EOSequence({1, 1})) == 1);
    CHECK(eo_a_number(EOSequence({1, 1})) == 1);
    CHECK(eo_stratum_dim(EOSequence({1, 2})) == 3);
}

TEST_CASE("counts by p-rank") {
    CHECK(eo_count_by_prank(1) == std::map<int, std::uint64_t>{{0, 1}, {1, 1}});
    CHECK(eo_count_by_prank(2) == std::map<int, std::uint64_t>{{0, 2}, {1, 1}, {2, 1}});
    CHECK(eo_count_by_prank(3) == std::map<int, std::uint64_t>{{0, 4}, {1, 2}, {2, 1}, {3, 1}});
    for (int g = 1; g <= 30; ++g) {
        const auto c = eo_count_by_prank(g);
        for (int f = 0; f < g; ++f) CHECK(c.at(f) == (std::uint64_t{1} << (g - f - 1)));
        CHECK(c.at(g) == 1);
    }
}

TEST_CASE("enumeration agrees with the recursive oracle up to genus 16") {
    for (int g = 1; g <= 16; ++g) {
        std::vector<std::vector<int>> expect;
        oracle::eo_sequences(g, [&](const std::vector<int>& nu) { expect.push_back(nu); });
        std::vector<std::vector<int>> got;
        std::map<int, std::uint64_t> by_f;
        int lemma_hits = 0;
        eo_for_each(g, [&](const EOSequence& s) {
            got.push_back(s.nu());
            const int f = s.p_rank(), a = s.a_number();
            CHECK(f == oracle::eo_prank(s.nu()));
            CHECK(0 <= f);
            CHECK(f <= g);
            CHECK(0 <= a);
            CHECK(a <= g - f);
            ++by_f[f];
            if (f == 0 && a == 1) {
                ++lemma_hits;
                CHECK(s == eo_type_of_Ir(g));
            }
        });
        CHECK(got == expect);  // both lexicographic
        CHECK(got.size() == (std::size_t{1} << g));
        CHECK(by_f == eo_count_by_prank(g));
        CHECK(lemma_hits == 1);
    }
}

TEST_CASE("genus 3 strata with a >= 2") {
    std::map<std::vector<int>, int> found;
    for (const auto& s : eo_enumerate(3))
        if (s.a_number() >= 2) found[s.nu()] = s.stratum_dim();
    CHECK(found == std::map<std::vector<int>, int>{{{1, 1, 1}, 3}, {{0, 1, 1}, 2}, {{0, 0, 1}, 1}, {{0, 0, 0}, 0}});
}

TEST_CASE("I_r types") {
    CHECK(eo_type_of_Ir(1) == EOSequence({0}));
    CHECK(eo_type_of_Ir(2) == EOSequence({0, 1}));
    CHECK(eo_type_of_Ir(3) == EOSequence({0, 1, 2}));
}

TEST_CASE("validation and parsing") {
    CHECK_THROWS_AS(EOSequence({2}), std::invalid_argument);
    CHECK_THROWS_AS(EOSequence({1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(EOSequence({0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(EOSequence(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(eo_enumerate(0), std::invalid_argument);
    CHECK_THROWS_AS(eo_enumerate(31), std::invalid_argument);
    CHECK(EOSequence::parse("[0,1,1]") == EOSequence({0, 1, 1}));
    CHECK(EOSequence::parse(" [ 0 , 1 ] ") == EOSequence({0, 1}));
    CHECK_THROWS_AS(EOSequence::parse("[0,2]"), std::invalid_argument);
    CHECK(EOSequence::parse("0,1") == EOSequence({0, 1}));
    CHECK_THROWS_AS(EOSequence::parse("[0,x]"), std::invalid_argument);
    for (const auto& s : eo_enumerate(5)) CHECK(EOSequence::parse(s.str()) == s);
    CHECK(EOSequence::is_valid({1, 1, 2}));
    CHECK_FALSE(EOSequence::is_valid({1, 3}));
}
