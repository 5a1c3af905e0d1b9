// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_EO_HPP
#define PTORSION_EO_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ptorsion {

inline constexpr int kMaxEnumerationGenus = 30;

/**
 * Ekedahl-Oort type [nu_1, ..., nu_g] of a symmetric BT_1 of rank p^{2g}.
 *
 * Valid sequences satisfy nu_1 in {0, 1} and nu_i <= nu_{i+1} <= nu_i + 1.
 * The constructor rejects anything else with std::invalid_argument, so every
 * EOSequence in hand is valid.
 */
class EOSequence {
public:
    explicit EOSequence(std::vector<int> nu);

    int genus() const noexcept { return static_cast<int>(nu_.size()); }
    const std::vector<int>& nu() const noexcept { return nu_; }
    int operator[](std::size_t i) const noexcept { return nu_[i]; }

    /// max{i : nu_i = i}, or 0.
    int p_rank() const noexcept;
    /// g - nu_g.
    int a_number() const noexcept { return genus() - nu_.back(); }
    /// sum of nu_i.
    int stratum_dim() const noexcept;

    /// "[0,1,2]".
    std::string str() const;
    static EOSequence parse(const std::string& text);

    static bool is_valid(const std::vector<int>& nu) noexcept;

    friend bool operator==(const EOSequence&, const EOSequence&) = default;
    friend auto operator<=>(const EOSequence&, const EOSequence&) = default;

private:
    std::vector<int> nu_;
};

inline int eo_p_rank(const EOSequence& s) { return s.p_rank(); }
inline int eo_a_number(const EOSequence& s) { return s.a_number(); }
inline int eo_stratum_dim(const EOSequence& s) { return s.stratum_dim(); }

/// Streams every valid sequence of genus g in lexicographic order.
void eo_for_each(int g, const std::function<void(const EOSequence&)>& visit);

/// All 2^g valid sequences of genus g, in lexicographic order. Materializing
/// the list for large g is expensive; prefer eo_for_each there.
std::vector<EOSequence> eo_enumerate(int g);

/// Number of valid sequences of each p-rank, counted by dynamic programming
/// over the constraint automaton (no enumeration, no closed form).
std::map<int, std::uint64_t> eo_count_by_prank(int g);

/// [0, 1, ..., r-1].
EOSequence eo_type_of_Ir(int r);

}  // namespace ptorsion

#endif  // PTORSION_EO_HPP
