// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_SERIALIZE_HPP
#define PTORSION_SERIALIZE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptorsion/census.hpp"
#include "ptorsion/dieudonne.hpp"

namespace ptorsion {

// Field elements in text: prime-field elements as integers, extension-field
// elements as power-basis coordinates joined by ':' (low first), e.g. "1:0:1".
Elem parse_element(const Field& k, const std::string& token);
std::string format_element(const Field& k, Elem e);
/// Comma-separated list of elements.
std::vector<Elem> parse_element_list(const Field& k, const std::string& text);

// In JSON an element is an integer for prime fields and an array of m
// coordinates otherwise. An integer is also accepted for extension fields
// and read as an element of the prime subfield.
nlohmann::json element_to_json(const Field& k, Elem e);
Elem element_from_json(const Field& k, const nlohmann::json& j);

/// {"p":..,"m":..,"dim":..,"F":[[..]],"V":[[..]]}. Matrices are row-major,
/// acting on column vectors.
nlohmann::json module_to_json(const DieudonneModule& d);
DieudonneModule module_from_json(const nlohmann::json& j);

/// {"p":..,"m":..,"g":..,"model":..,"coeffs":[..]}.
nlohmann::json curve_to_json(const CurveSpec& c);
CurveSpec curve_from_json(const nlohmann::json& j);

/// Curve fields plus "f" and "a".
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

inline constexpr const char* kCensusCsvHeader = "p,m,g,model,f,a,count";

/// Header line then one row per record.
void write_census_csv(std::ostream& os, const std::vector<CensusRecord>& records, bool header = true);
/// Throws std::invalid_argument on a missing header or malformed row.
std::vector<CensusRecord> read_census_csv(std::istream& is);

nlohmann::json census_to_json(const CensusResult& r);

}  // namespace ptorsion

#endif  // PTORSION_SERIALIZE_HPP
