// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/serialize.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ptorsion {

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("expected a non-negative integer, got '" + s + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("integer out of range: '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Field& k, const nlohmann::json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw std::invalid_argument("matrix must have " + std::to_string(n) + " rows");
    Matrix m(k, n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) throw std::invalid_argument("matrix row has wrong length");
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = element_from_json(k, j[r][c]);
    }
    return m;
}

}  // namespace

Elem parse_element(const Field& k, const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw std::invalid_argument("empty field element");
    std::vector<std::uint64_t> coords;
    for (const auto& part : split(t, ':')) coords.push_back(parse_u64(trim(part)));
    if (coords.size() == 1) {
        if (coords[0] >= k.characteristic())
            throw std::invalid_argument("element " + t + " out of range for " + k.name());
        return k.from_int(static_cast<std::int64_t>(coords[0]));
    }
    return k.from_coords(coords);
}

std::string format_element(const Field& k, Elem e) {
    if (k.is_prime_field()) return std::to_string(e.value);
    std::string s;
    const auto c = k.coords(e);
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
    return s;
}

std::vector<Elem> parse_element_list(const Field& k, const std::string& text) {
    std::vector<Elem> out;
    if (trim(text).empty()) return out;
    for (const auto& tok : split(text, ',')) out.push_back(parse_element(k, tok));
    return out;
}

nlohmann::json element_to_json(const Field& k, Elem e) {
    if (k.is_prime_field()) return e.value;
    return k.coords(e);
}

Elem element_from_json(const Field& k, const nlohmann::json& j) {
    if (j.is_number_unsigned() || j.is_number_integer()) {
        const auto v = j.get<std::int64_t>();
        if (v < 0 || static_cast<std::uint64_t>(v) >= k.characteristic())
            throw std::invalid_argument("element out of range for " + k.name());
        return k.from_int(v);
    }
    if (j.is_array()) return k.from_coords(j.get<std::vector<std::uint64_t>>());
    throw std::invalid_argument("field element must be an integer or a coordinate array");
}

nlohmann::json module_to_json(const DieudonneModule& d) {
    return {{"p", d.field().characteristic()},
            {"m", d.field().degree()},
            {"dim", d.dim()},
            {"F", matrix_to_json(d.F().matrix())},
            {"V", matrix_to_json(d.V().matrix())}};
}

DieudonneModule module_from_json(const nlohmann::json& j) {
    try {
        const Field k = Field::make(j.at("p").get<std::uint64_t>(), j.at("m").get<unsigned>());
        const auto n = j.at("dim").get<std::size_t>();
        return DieudonneModule(SemilinearMap(matrix_from_json(k, j.at("F"), n), 1),
                               SemilinearMap(matrix_from_json(k, j.at("V"), n), -1));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed module JSON: ") + e.what());
    }
}

nlohmann::json curve_to_json(const CurveSpec& c) {
    const Field k = Field::make(c.p, c.m);
    nlohmann::json coeffs = nlohmann::json::array();
    for (Elem e : c.coeffs) coeffs.push_back(element_to_json(k, e));
    return {{"p", c.p}, {"m", c.m}, {"g", c.g}, {"model", to_string(c.model)}, {"coeffs", coeffs}};
}

CurveSpec curve_from_json(const nlohmann::json& j) {
    try {
        CurveSpec c;
        c.p = j.at("p").get<std::uint64_t>();
        c.m = j.at("m").get<unsigned>();
        c.g = j.at("g").get<int>();
        c.model = parse_model(j.at("model").get<std::string>());
        const Field k = Field::make(c.p, c.m);
        for (const auto& e : j.at("coeffs")) c.coeffs.push_back(element_from_json(k, e));
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed curve JSON: ") + e.what());
    }
}

nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j = curve_to_json(w.curve);
    j["f"] = w.p_rank;
    j["a"] = w.a_number;
    return j;
}

Witness witness_from_json(const nlohmann::json& j) {
    try {
        return Witness{curve_from_json(j), j.at("f").get<int>(), j.at("a").get<int>(), 0};
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed witness JSON: ") + e.what());
    }
}

void write_census_csv(std::ostream& os, const std::vector<CensusRecord>& records, bool header) {
    if (header) os << kCensusCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.p << ',' << r.m << ',' << r.g << ',' << to_string(r.model) << ',' << r.p_rank << ',' << r.a_number
           << ',' << r.count << '\n';
    }
}

std::vector<CensusRecord> read_census_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || trim(line) != kCensusCsvHeader)
        throw std::invalid_argument(std::string("census CSV must start with header ") + kCensusCsvHeader);
    std::vector<CensusRecord> out;
    while (std::getline(is, line)) {
        if (trim(line).empty()) continue;
        const auto f = split(trim(line), ',');
        if (f.size() != 7) throw std::invalid_argument("census CSV row needs 7 fields: '" + line + "'");
        const auto as_int = [](const std::string& s) {
            if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative value in census CSV");
            return static_cast<int>(parse_u64(s));
        };
        out.push_back({parse_u64(f[0]), static_cast<unsigned>(parse_u64(f[1])), as_int(f[2]), parse_model(f[3]),
                       as_int(f[4]), as_int(f[5]), parse_u64(f[6])});
    }
    return out;
}

nlohmann::json census_to_json(const CensusResult& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& rec : r.records) {
        rows.push_back({{"p", rec.p},
                        {"m", rec.m},
                        {"g", rec.g},
                        {"model", to_string(rec.model)},
                        {"f", rec.p_rank},
                        {"a", rec.a_number},
                        {"count", rec.count}});
    }
    return {{"records", rows}, {"valid", r.valid}, {"invalid", r.invalid}};
}

}  // namespace ptorsion
