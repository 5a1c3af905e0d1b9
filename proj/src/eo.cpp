// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/eo.hpp"

#include <sstream>
#include <stdexcept>

namespace ptorsion {

namespace {

void check_genus(int g) {
    if (g < 1 || g > kMaxEnumerationGenus)
        throw std::invalid_argument("genus must be in [1, " + std::to_string(kMaxEnumerationGenus) + "]");
}

}  // namespace

bool EOSequence::is_valid(const std::vector<int>& nu) noexcept {
    if (nu.empty()) return false;
    int prev = 0;  // nu_0
    for (int v : nu) {
        if (v < prev || v > prev + 1) return false;
        prev = v;
    }
    return true;
}

EOSequence::EOSequence(std::vector<int> nu) : nu_(std::move(nu)) {
    if (!is_valid(nu_)) {
        std::string s = "[";
        for (std::size_t i = 0; i < nu_.size(); ++i) s += (i ? "," : "") + std::to_string(nu_[i]);
        throw std::invalid_argument("invalid Ekedahl-Oort sequence " + s + "]");
    }
}

int EOSequence::p_rank() const noexcept {
    int f = 0;
    for (int i = 1; i <= genus(); ++i) {
        if (nu_[static_cast<std::size_t>(i - 1)] == i) f = i;
    }
    return f;
}

int EOSequence::stratum_dim() const noexcept {
    int s = 0;
    for (int v : nu_) s += v;
    return s;
}

std::string EOSequence::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < nu_.size(); ++i) s += (i ? "," : "") + std::to_string(nu_[i]);
    return s + "]";
}

EOSequence EOSequence::parse(const std::string& text) {
    std::string t;
    for (char c : text) {
        if (c != '[' && c != ']' && c != ' ') t += c;
    }
    std::vector<int> nu;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            nu.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse Ekedahl-Oort sequence '" + text + "'");
        }
    }
    return EOSequence(std::move(nu));
}

void eo_for_each(int g, const std::function<void(const EOSequence&)>& visit) {
    check_genus(g);
    // Each sequence is determined by its g increments in {0, 1}; counting the
    // increment word up in binary with the first step most significant visits
    // the sequences in lexicographic order.
    std::vector<int> nu(static_cast<std::size_t>(g));
    const std::uint64_t total = std::uint64_t{1} << g;
    for (std::uint64_t word = 0; word < total; ++word) {
        int v = 0;
        for (int i = 0; i < g; ++i) {
            v += static_cast<int>((word >> (g - 1 - i)) & 1U);
            nu[static_cast<std::size_t>(i)] = v;
        }
        visit(EOSequence(nu));
    }
}

std::vector<EOSequence> eo_enumerate(int g) {
    check_genus(g);
    std::vector<EOSequence> out;
    out.reserve(std::size_t{1} << g);
    eo_for_each(g, [&](const EOSequence& s) { out.push_back(s); });
    return out;
}

std::map<int, std::uint64_t> eo_count_by_prank(int g) {
    check_genus(g);
    // State after position i: (nu_i, whether nu_j = j for all j <= i).
    // On the diagonal nu_i = i, so the diagonal flag pins the value; off the
    // diagonal we track counts by the p-rank already fixed and the current nu.
    std::map<int, std::uint64_t> out;
    // off[f][v]: sequences that left the diagonal right after position f, now at value v.
    std::vector<std::vector<std::uint64_t>> off(static_cast<std::size_t>(g + 1),
                                                std::vector<std::uint64_t>(static_cast<std::size_t>(g + 1), 0));
    for (int i = 1; i <= g; ++i) {
        std::vector<std::vector<std::uint64_t>> next = off;
        for (auto& row : next) std::fill(row.begin(), row.end(), 0);
        for (int f = 0; f <= g; ++f) {
            for (int v = 0; v <= g; ++v) {
                const std::uint64_t c = off[static_cast<std::size_t>(f)][static_cast<std::size_t>(v)];
                if (c == 0) continue;
                next[static_cast<std::size_t>(f)][static_cast<std::size_t>(v)] += c;  // stay
                if (v + 1 < i) next[static_cast<std::size_t>(f)][static_cast<std::size_t>(v + 1)] += c;  // step
                // v + 1 == i would return to the diagonal, impossible once below it.
            }
        }
        // Leaving the diagonal at position i: nu_{i-1} = i-1, nu_i = i-1.
        next[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)] += 1;
        off = std::move(next);
    }
    for (int f = 0; f < g; ++f) {
        std::uint64_t total = 0;
        for (auto c : off[static_cast<std::size_t>(f)]) total += c;
        out[f] = total;
    }
    out[g] = 1;  // the diagonal path itself
    return out;
}

EOSequence eo_type_of_Ir(int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    std::vector<int> nu(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) nu[static_cast<std::size_t>(i)] = i;
    return EOSequence(std::move(nu));
}

}  // namespace ptorsion
