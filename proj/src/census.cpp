// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/census.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>

#include "ptorsion/cartier.hpp"

namespace ptorsion {

namespace {

using u64 = std::uint64_t;

u64 splitmix(u64 z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-mode generator: word c of sample i depends only on (seed, i, c).
class SampleStream {
public:
    SampleStream(u64 seed, u64 index) : key_(splitmix(splitmix(seed) ^ splitmix(index ^ 0xd1b54a32d192ed03ULL))) {}

    u64 next() noexcept { return splitmix(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

    /// Uniform in [0, bound) by rejection.
    u64 uniform(u64 bound) noexcept {
        const u64 limit = std::numeric_limits<u64>::max() - std::numeric_limits<u64>::max() % bound;
        for (;;) {
            const u64 w = next();
            if (w < limit) return w % bound;
        }
    }

private:
    u64 key_;
    u64 counter_ = 0;
};

bool is_poly_model(Model m) { return m == Model::OddPPoly || m == Model::As2Poly; }

// Runs body(begin, end, worker) on `jobs` threads over a split of [begin, end).
template <class Body>
void parallel_ranges(u64 begin, u64 end, unsigned jobs, Body&& body) {
    const u64 total = end - begin;
    jobs = static_cast<unsigned>(std::max<u64>(1, std::min<u64>(jobs, total)));
    if (jobs == 1) {
        body(begin, end, 0U);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t) {
        const u64 lo = begin + total * t / jobs;
        const u64 hi = begin + total * (t + 1) / jobs;
        threads.emplace_back([&, lo, hi, t] {
            try {
                body(lo, hi, t);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace

std::string to_string(Model m) {
    switch (m) {
        case Model::OddPPoly: return "ODD_P_POLY";
        case Model::As2Poly: return "AS2_POLY";
        case Model::As2Gamma1: return "AS2_GAMMA1";
        case Model::As2Gamma2: return "AS2_GAMMA2";
    }
    return "?";
}

Model parse_model(const std::string& s) {
    std::string u;
    for (char c : s) u += static_cast<char>(c == '-' ? '_' : std::toupper(static_cast<unsigned char>(c)));
    for (Model m : {Model::OddPPoly, Model::As2Poly, Model::As2Gamma1, Model::As2Gamma2}) {
        if (to_string(m) == u) return m;
    }
    throw std::invalid_argument("unknown model '" + s + "'");
}

std::size_t parameter_count(const SampleSpec& spec) {
    return is_poly_model(spec.model) ? static_cast<std::size_t>(2 * spec.g + 1) : 3;
}

std::uint64_t space_size(const SampleSpec& spec) {
    const Field k = Field::make(spec.p, spec.m);
    const u64 q = k.order();
    u64 s = 1;
    for (std::size_t i = 0; i < parameter_count(spec); ++i) {
        if (s > std::numeric_limits<u64>::max() / q) return std::numeric_limits<u64>::max();
        s *= q;
    }
    return s;
}

void validate(const SampleSpec& spec) {
    if (!is_prime(spec.p)) throw std::invalid_argument("p = " + std::to_string(spec.p) + " is not prime");
    if (spec.m < 1) throw std::invalid_argument("extension degree must be positive");
    if (spec.jobs < 1) throw std::invalid_argument("jobs must be positive");
    if (spec.g < 1) throw std::invalid_argument("genus must be positive");
    if (spec.model == Model::OddPPoly && spec.p == 2)
        throw std::invalid_argument("ODD_P_POLY needs odd characteristic");
    if (spec.model != Model::OddPPoly && spec.p != 2)
        throw std::invalid_argument(to_string(spec.model) + " needs characteristic 2");
    if ((spec.model == Model::As2Gamma1 || spec.model == Model::As2Gamma2) && spec.g != 3)
        throw std::invalid_argument(to_string(spec.model) + " curves have genus 3");
    if (spec.exhaustive && space_size(spec) > kMaxExhaustiveSpace)
        throw std::invalid_argument("exhaustive coefficient space exceeds " + std::to_string(kMaxExhaustiveSpace) + " points");
}

CurveSpec census_sample(const SampleSpec& spec, const Field& k, std::uint64_t index) {
    const std::size_t n = parameter_count(spec);
    const u64 q = k.order();
    std::vector<Elem> params(n);
    if (spec.exhaustive) {
        for (std::size_t i = n; i-- > 0;) {
            params[i] = Elem{index % q};
            index /= q;
        }
    } else {
        SampleStream s(spec.seed, index);
        for (auto& e : params) e = Elem{s.uniform(q)};
    }
    CurveSpec c{spec.p, spec.m, spec.g, spec.model, std::move(params)};
    if (is_poly_model(spec.model)) c.coeffs.push_back(k.one());  // monic
    return c;
}

std::optional<std::pair<int, int>> classify(const CurveSpec& c, const Field& k) {
    switch (c.model) {
        case Model::OddPPoly: {
            Poly f(k, c.coeffs);
            if (f.degree() != 2 * c.g + 1 && f.degree() != 2 * c.g + 2)
                throw std::invalid_argument("polynomial degree does not match genus " + std::to_string(c.g));
            if (!is_squarefree(f)) return std::nullopt;
            const auto inv = cm_invariants(HyperellipticCurve(std::move(f)));
            return std::pair{inv.p_rank, inv.a_number};
        }
        case Model::As2Poly: {
            Poly f(k, c.coeffs);
            if (f.degree() != 2 * c.g + 1) throw std::invalid_argument("polynomial degree does not match genus " + std::to_string(c.g));
            const auto inv = as2_invariants(ArtinSchreierCurve::poly(f));
            return std::pair{inv.p_rank, inv.a_number};
        }
        case Model::As2Gamma1:
        case Model::As2Gamma2: {
            if (c.coeffs.size() != 3) throw std::invalid_argument("Gamma shapes take three parameters c1, c2, c3");
            if (c.coeffs[2].value == 0) return std::nullopt;
            const auto curve = c.model == Model::As2Gamma1
                                   ? ArtinSchreierCurve::gamma1(k, c.coeffs[0], c.coeffs[1], c.coeffs[2])
                                   : ArtinSchreierCurve::gamma2(k, c.coeffs[0], c.coeffs[1], c.coeffs[2]);
            const auto inv = as2_invariants(curve);
            return std::pair{inv.p_rank, inv.a_number};
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> classify(const CurveSpec& c) { return classify(c, Field::make(c.p, c.m)); }

CensusResult census_run(const SampleSpec& spec) {
    validate(spec);
    const Field k = Field::make(spec.p, spec.m);
    const u64 total = spec.exhaustive ? space_size(spec) : spec.n;

    using Tally = std::map<std::pair<int, int>, u64>;
    std::vector<Tally> tallies(spec.jobs);
    std::vector<u64> invalid(spec.jobs, 0);
    if (total > 0) {
        parallel_ranges(0, total, spec.jobs, [&](u64 lo, u64 hi, unsigned t) {
            for (u64 i = lo; i < hi; ++i) {
                const auto r = classify(census_sample(spec, k, i), k);
                if (r)
                    ++tallies[t][*r];
                else
                    ++invalid[t];
            }
        });
    }

    Tally merged;
    CensusResult out;
    for (unsigned t = 0; t < spec.jobs; ++t) {
        for (const auto& [key, c] : tallies[t]) merged[key] += c;
        out.invalid += invalid[t];
    }
    for (const auto& [key, c] : merged) {
        out.records.push_back({spec.p, spec.m, spec.g, spec.model, key.first, key.second, c});
        out.valid += c;
    }
    std::sort(out.records.begin(), out.records.end(), [](const CensusRecord& a, const CensusRecord& b) {
        return a.p_rank != b.p_rank ? a.p_rank > b.p_rank : a.a_number < b.a_number;
    });
    return out;
}

std::optional<Witness> census_search(const SampleSpec& spec, int target_f, int target_a, std::uint64_t budget) {
    validate(spec);
    if (target_f < 0 || target_a < 0 || target_a > spec.g - target_f)
        throw std::invalid_argument("infeasible target (f, a) = (" + std::to_string(target_f) + ", " +
                                    std::to_string(target_a) + ") for genus " + std::to_string(spec.g));
    if (budget == 0) throw std::invalid_argument("search budget must be positive");
    const Field k = Field::make(spec.p, spec.m);
    const u64 total = spec.exhaustive ? std::min(budget, space_size(spec)) : budget;

    // Blocks are scanned in order; within a block every worker reports the
    // first hit of its slice, and the smallest index wins.
    const u64 block = u64{4096} * spec.jobs;
    constexpr u64 kNone = std::numeric_limits<u64>::max();
    for (u64 start = 0; start < total; start += block) {
        const u64 stop = std::min(total, start + block);
        std::vector<u64> first(spec.jobs, kNone);
        parallel_ranges(start, stop, spec.jobs, [&](u64 lo, u64 hi, unsigned t) {
            for (u64 i = lo; i < hi; ++i) {
                const auto r = classify(census_sample(spec, k, i), k);
                if (r && r->first == target_f && r->second == target_a) {
                    first[t] = i;
                    return;
                }
            }
        });
        const u64 hit = *std::min_element(first.begin(), first.end());
        if (hit != kNone) return Witness{census_sample(spec, k, hit), target_f, target_a, hit};
    }
    return std::nullopt;
}

bool verify(const Witness& w) {
    const auto r = classify(w.curve);
    return r && r->first == w.p_rank && r->second == w.a_number;
}

std::vector<DiagnosticRow> census_diagnostics(const std::vector<CensusRecord>& records) {
    std::vector<DiagnosticRow> out;
    if (records.empty()) return out;
    u64 total = 0;
    for (const auto& r : records) total += r.count;
    const double q = std::pow(static_cast<double>(records.front().p), records.front().m);
    for (const auto& r : records) {
        const double freq = total == 0 ? 0.0 : static_cast<double>(r.count) / static_cast<double>(total);
        out.push_back({r.p_rank, r.a_number, r.count, freq, std::pow(q, -(r.g - r.p_rank))});
    }
    return out;
}

}  // namespace ptorsion
