// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_CENSUS_HPP
#define PTORSION_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ptorsion/field.hpp"

namespace ptorsion {

enum class Model { OddPPoly, As2Poly, As2Gamma1, As2Gamma2 };

/// "ODD_P_POLY", "AS2_POLY", "AS2_GAMMA1", "AS2_GAMMA2".
std::string to_string(Model m);
/// Case-insensitive inverse of to_string.
Model parse_model(const std::string& s);

/// Largest coefficient space accepted in exhaustive mode.
inline constexpr std::uint64_t kMaxExhaustiveSpace = 100'000'000;
inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

struct SampleSpec {
    std::uint64_t p = 0;
    unsigned m = 1;
    int g = 1;
    Model model = Model::OddPPoly;
    bool exhaustive = false;
    /// Number of draws in random mode; ignored when exhaustive.
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// Throws std::invalid_argument for a model/characteristic mismatch, a
/// non-prime p, a genus the model does not support, or an exhaustive space
/// above kMaxExhaustiveSpace.
void validate(const SampleSpec& spec);

/// Number of free coefficients drawn per curve.
std::size_t parameter_count(const SampleSpec& spec);

/// Size of the coefficient space q^{parameter_count}, saturating at UINT64_MAX.
std::uint64_t space_size(const SampleSpec& spec);

/// A concrete curve of one of the census models. For the POLY models coeffs
/// is the full monic polynomial, low degree first; for the Gamma shapes it is
/// (c1, c2, c3).
struct CurveSpec {
    std::uint64_t p = 0;
    unsigned m = 1;
    int g = 1;
    Model model = Model::OddPPoly;
    std::vector<Elem> coeffs;
};

struct CensusRecord {
    std::uint64_t p;
    unsigned m;
    int g;
    Model model;
    int p_rank;
    int a_number;
    std::uint64_t count;

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct CensusResult {
    /// Sorted by p-rank descending, then a-number ascending.
    std::vector<CensusRecord> records;
    /// Curves classified; equals the sum of record counts.
    std::uint64_t valid = 0;
    /// Draws rejected as singular (non-squarefree) or with c3 = 0.
    std::uint64_t invalid = 0;
};

struct Witness {
    CurveSpec curve;
    int p_rank;
    int a_number;
    /// Position of the curve in the sample or enumeration order.
    std::uint64_t index;
};

/// Coefficients of sample `index`: a counter-mode stream keyed by (seed,
/// index) in random mode, base-q digits of index (first coefficient most
/// significant) in exhaustive mode.
CurveSpec census_sample(const SampleSpec& spec, const Field& field, std::uint64_t index);

/// (p_rank, a_number) of a curve, or nullopt when the curve is singular.
std::optional<std::pair<int, int>> classify(const CurveSpec& curve, const Field& field);
std::optional<std::pair<int, int>> classify(const CurveSpec& curve);

/// Classifies every sample and aggregates by (p_rank, a_number). The result
/// depends only on the spec, never on spec.jobs or scheduling.
CensusResult census_run(const SampleSpec& spec);

/// First curve in sample order with the target invariants, or nullopt
/// (EXHAUSTED) after `budget` draws. Throws std::invalid_argument when the
/// target violates 0 <= a <= g - f.
std::optional<Witness> census_search(const SampleSpec& spec, int target_f, int target_a,
                                     std::uint64_t budget = kDefaultSearchBudget);

/// Recomputes the invariants of a witness curve and compares.
bool verify(const Witness& w);

struct DiagnosticRow {
    int p_rank;
    int a_number;
    std::uint64_t count;
    double frequency;
    /// Heuristic q^{-(g - f)} for the p-rank stratum.
    double reference;
};

/// Informational frequency report; never a pass/fail gate.
std::vector<DiagnosticRow> census_diagnostics(const std::vector<CensusRecord>& records);

}  // namespace ptorsion

#endif  // PTORSION_CENSUS_HPP
