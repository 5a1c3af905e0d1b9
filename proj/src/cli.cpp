// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <thread>

#include "ptorsion/cartier.hpp"
#include "ptorsion/census.hpp"
#include "ptorsion/dieudonne.hpp"
#include "ptorsion/eo.hpp"
#include "ptorsion/serialize.hpp"

namespace ptorsion::cli {

namespace {

using nlohmann::json;

struct OutputOptions {
    std::string format;
    std::string path;
    bool append = false;
};

// Either the caller's stream or a file opened per --output / --append.
class Sink {
public:
    Sink(const OutputOptions& o, std::ostream& fallback) {
        if (o.path.empty() || o.path == "-") {
            os_ = &fallback;
            return;
        }
        file_ = std::make_unique<std::ofstream>(o.path, o.append ? std::ios::app : std::ios::trunc);
        if (!*file_) throw std::invalid_argument("cannot open output file '" + o.path + "'");
        os_ = file_.get();
    }
    std::ostream& operator*() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_ = nullptr;
};

void add_output_options(CLI::App* cmd, OutputOptions& o, std::string default_format, std::vector<std::string> formats) {
    o.format = std::move(default_format);
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
    cmd->add_option("-o,--output", o.path, "Write results to this file instead of standard output");
    cmd->add_flag("--append", o.append, "Append to --output instead of overwriting");
}

unsigned default_jobs() { return std::max(1U, std::thread::hardware_concurrency()); }

// Value of PTORSION_JOBS, if set. Anything but a positive integer is an error.
std::optional<unsigned> jobs_from_env() {
    const char* v = std::getenv("PTORSION_JOBS");
    if (v == nullptr || *v == '\0') return std::nullopt;
    const std::string s(v);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6 || std::stoul(s) == 0)
        throw std::invalid_argument("PTORSION_JOBS must be a positive integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

// --- eo -----------------------------------------------------------------

struct EoOptions {
    int genus = 0;
    std::optional<int> filter_f, filter_a;
    OutputOptions out;
};

void run_eo_enumerate(const EoOptions& o, std::ostream& os) {
    const bool as_json = o.out.format == "json";
    json rows = json::array();
    if (o.out.format == "csv") os << "type,f,a,dim\n";
    eo_for_each(o.genus, [&](const EOSequence& s) {
        if (o.filter_f && s.p_rank() != *o.filter_f) return;
        if (o.filter_a && s.a_number() != *o.filter_a) return;
        if (as_json) {
            rows.push_back({{"type", s.nu()}, {"f", s.p_rank()}, {"a", s.a_number()}, {"dim", s.stratum_dim()}});
        } else if (o.out.format == "csv") {
            os << csv_quote(s.str()) << ',' << s.p_rank() << ',' << s.a_number() << ',' << s.stratum_dim() << '\n';
        } else {
            os << s.str() << '\n';
        }
    });
    if (as_json) os << rows.dump() << '\n';
}

void run_eo_counts(const EoOptions& o, std::ostream& os) {
    const auto counts = eo_count_by_prank(o.genus);
    if (o.out.format == "json") {
        json rows = json::array();
        for (const auto& [f, c] : counts) rows.push_back({{"f", f}, {"count", c}});
        os << rows.dump() << '\n';
        return;
    }
    if (o.out.format == "csv") os << "f,count\n";
    for (const auto& [f, c] : counts) os << f << (o.out.format == "csv" ? "," : ": ") << c << '\n';
}

// --- dd -----------------------------------------------------------------

struct DdOptions {
    std::string kind;
    int r = 1;
    std::vector<std::string> summands;
    std::uint64_t p = 2;
    unsigned m = 1;
    std::string show = "eo-type";
    OutputOptions out;
};

DieudonneModule build_summand(const Field& k, const std::string& token) {
    if (token == "i32") return dd_build_I32(k);
    if (token == "ordinary") return dd_ordinary(k, 1);
    if (token == "etale") return dd_block_etale(k);
    if (token == "mult") return dd_block_mult(k);
    if (token.size() > 1 && token[0] == 'i' && token.find_first_not_of("0123456789", 1) == std::string::npos) {
        return dd_build_Ir(k, std::stoi(token.substr(1)));
    }
    throw std::invalid_argument("unknown summand '" + token + "' (expected iR, i32, ordinary, etale or mult)");
}

DieudonneModule build_module(const DdOptions& o) {
    const Field k = Field::make(o.p, o.m);
    if (o.kind == "ir") return dd_build_Ir(k, o.r);
    if (o.kind == "i32") return dd_build_I32(k);
    if (o.kind == "ordinary") return dd_ordinary(k, o.r);
    // sum
    if (o.summands.empty()) throw std::invalid_argument("--kind sum needs --summands");
    std::optional<DieudonneModule> d;
    for (const auto& s : o.summands) {
        auto next = build_summand(k, s);
        d = d ? dd_direct_sum(*d, next) : next;
    }
    return *d;
}

std::vector<int> kernel_dims(const DieudonneModule& d, Operator op) {
    std::vector<int> dims;
    for (unsigned n = 1; n <= d.dim(); ++n) dims.push_back(dd_kernel_power(d, op, n));
    return dims;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void run_dd_build(const DdOptions& o, std::ostream& os) {
    const DieudonneModule d = build_module(o);
    if (!dd_is_bt1(d)) throw std::invalid_argument("constructed module is not a BT_1");
    if (o.out.format == "json") {
        json j = {{"kind", o.kind}, {"dim", d.dim()}, {"f", dd_p_rank(d)}, {"a", dd_a_number(d)},
                  {"ker_V", kernel_dims(d, Operator::V)}, {"ker_F", kernel_dims(d, Operator::F)},
                  {"module", module_to_json(d)}};
        if (d.dim() % 2 == 0) j["eo_type"] = dd_eo_type(d).nu();
        os << j.dump() << '\n';
        return;
    }
    if (o.show == "eo-type") {
        os << dd_eo_type(d).str() << '\n';
    } else if (o.show == "f") {
        os << dd_p_rank(d) << '\n';
    } else if (o.show == "a") {
        os << dd_a_number(d) << '\n';
    } else if (o.show == "ker-powers") {
        os << "V: " << join(kernel_dims(d, Operator::V)) << '\n';
        os << "F: " << join(kernel_dims(d, Operator::F)) << '\n';
    } else {  // module
        os << module_to_json(d).dump() << '\n';
    }
}

// --- cm / as2 -----------------------------------------------------------

struct CurveOptions {
    std::uint64_t p = 0;
    unsigned m = 1;
    std::string shape = "poly";
    std::string coeffs;
    OutputOptions out;
};

void print_invariants(const Field& k, int g, const CurveInvariants& inv, const OutputOptions& o, std::ostream& os) {
    if (o.format == "json") {
        json mat = json::array();
        const Matrix& a = inv.cartier_matrix.matrix();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(element_to_json(k, a.at(i, j)));
            mat.push_back(row);
        }
        os << json{{"p", k.characteristic()}, {"m", k.degree()}, {"g", g}, {"f", inv.p_rank}, {"a", inv.a_number},
                   {"cartier_matrix", mat}, {"twist", inv.cartier_matrix.twist()}}
                  .dump()
           << '\n';
    } else if (o.format == "csv") {
        os << "p,m,g,f,a\n" << k.characteristic() << ',' << k.degree() << ',' << g << ',' << inv.p_rank << ','
           << inv.a_number << '\n';
    } else {
        os << "f=" << inv.p_rank << ",a=" << inv.a_number << '\n';
    }
}

void run_cm(const CurveOptions& o, std::ostream& os) {
    if (o.p == 2) throw std::invalid_argument("cm needs odd p; use as2 for characteristic 2");
    const Field k = Field::make(o.p, o.m);
    const HyperellipticCurve c(Poly(k, parse_element_list(k, o.coeffs)));
    print_invariants(k, c.genus(), cm_invariants(c), o.out, os);
}

void run_as2(const CurveOptions& o, std::ostream& os) {
    const Field k = Field::make(2, o.m);
    const auto coeffs = parse_element_list(k, o.coeffs);
    auto curve = [&] {
        if (o.shape == "poly") return ArtinSchreierCurve::poly(Poly(k, coeffs));
        if (coeffs.size() != 3) throw std::invalid_argument("--shape " + o.shape + " takes --coeffs c1,c2,c3");
        if (o.shape == "gamma1") return ArtinSchreierCurve::gamma1(k, coeffs[0], coeffs[1], coeffs[2]);
        return ArtinSchreierCurve::gamma2(k, coeffs[0], coeffs[1], coeffs[2]);
    }();
    print_invariants(k, curve.genus(), as2_invariants(curve), o.out, os);
}

// --- census -------------------------------------------------------------

struct CensusOptions {
    SampleSpec spec;
    std::string model = "ODD_P_POLY";
    int target_f = 0;
    int target_a = 0;
    std::uint64_t budget = kDefaultSearchBudget;
    bool diagnostics = false;
    OutputOptions out;
};

void add_census_options(CLI::App* cmd, CensusOptions& o) {
    cmd->add_option("--p", o.spec.p, "Characteristic")->required();
    cmd->add_option("--m", o.spec.m, "Extension degree")->capture_default_str();
    cmd->add_option("--g,--genus", o.spec.g, "Genus")->required();
    cmd->add_option("--model", o.model, "ODD_P_POLY, AS2_POLY, AS2_GAMMA1 or AS2_GAMMA2")->capture_default_str();
    cmd->add_option("--n", o.spec.n, "Number of random draws");
    cmd->add_option("--seed", o.spec.seed, "Seed of the sample stream")->capture_default_str();
    cmd->add_flag("--exhaustive", o.spec.exhaustive, "Enumerate the whole coefficient space");
    o.spec.jobs = default_jobs();
    cmd->add_option("--jobs", o.spec.jobs, "Worker threads (default: $PTORSION_JOBS, else all cores)")
        ->check(CLI::PositiveNumber);
}

SampleSpec finish_spec(const CensusOptions& o) {
    SampleSpec s = o.spec;
    s.model = parse_model(o.model);
    return s;
}

void run_census(const CensusOptions& o, std::ostream& os, std::ostream& err) {
    const SampleSpec spec = finish_spec(o);
    const CensusResult r = census_run(spec);
    if (o.out.format == "json") {
        os << census_to_json(r).dump() << '\n';
    } else {
        write_census_csv(os, r.records);
    }
    err << "# valid=" << r.valid << " invalid=" << r.invalid << '\n';
    if (o.diagnostics) {
        for (const auto& row : census_diagnostics(r.records)) {
            err << "# f=" << row.p_rank << " a=" << row.a_number << " count=" << row.count << std::fixed
                << std::setprecision(6) << " freq=" << row.frequency << " ref=" << row.reference << '\n';
        }
    }
}

int run_search(const CensusOptions& o, std::ostream& os, std::ostream& err) {
    const SampleSpec spec = finish_spec(o);
    const auto w = census_search(spec, o.target_f, o.target_a, o.budget);
    if (!w) {
        if (o.out.format == "json")
            os << json{{"status", "EXHAUSTED"}, {"budget", o.budget}}.dump() << '\n';
        else
            os << "EXHAUSTED\n";
        err << "no curve with (f, a) = (" << o.target_f << ", " << o.target_a << ") within " << o.budget << " curves\n";
        return kExhausted;
    }
    if (!verify(*w)) throw InvariantError("witness failed re-verification");
    if (o.out.format == "json") {
        os << witness_to_json(*w).dump() << '\n';
    } else {
        const Field k = Field::make(spec.p, spec.m);
        std::string coeffs;
        for (std::size_t i = 0; i < w->curve.coeffs.size(); ++i)
            coeffs += (i ? "," : "") + format_element(k, w->curve.coeffs[i]);
        os << "f=" << w->p_rank << ",a=" << w->a_number << ",coeffs=" << coeffs << '\n';
    }
    err << "# witness found at sample index " << w->index << '\n';
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-torsion invariants: Ekedahl-Oort types, Dieudonne modules, Cartier operators, curve census"};
    app.name("ptorsion");
    app.require_subcommand(1);

    EoOptions eo;
    auto* eo_cmd = app.add_subcommand("eo", "Ekedahl-Oort type combinatorics");
    eo_cmd->require_subcommand(1);
    auto* eo_enum = eo_cmd->add_subcommand("enumerate", "List Ekedahl-Oort types with f, a and stratum dimension");
    auto* eo_counts = eo_cmd->add_subcommand("counts", "Number of types of each p-rank");
    for (auto* c : {eo_enum, eo_counts}) {
        c->add_option("--genus,--g", eo.genus, "Genus")->required()->check(CLI::Range(1, kMaxEnumerationGenus));
    }
    eo_enum->add_option("--filter-f", eo.filter_f, "Keep only this p-rank");
    eo_enum->add_option("--filter-a", eo.filter_a, "Keep only this a-number");
    add_output_options(eo_enum, eo.out, "csv", {"csv", "json", "text"});
    OutputOptions eo_counts_out;
    add_output_options(eo_counts, eo_counts_out, "csv", {"csv", "json", "text"});

    DdOptions dd;
    auto* dd_cmd = app.add_subcommand("dd", "Dieudonne modules of BT_1 group schemes");
    dd_cmd->require_subcommand(1);
    auto* dd_build = dd_cmd->add_subcommand("build", "Build a standard module and report invariants");
    dd_build->add_option("--kind", dd.kind, "ir, i32, ordinary or sum")
        ->required()
        ->check(CLI::IsMember({"ir", "i32", "ordinary", "sum"}));
    dd_build->add_option("--r", dd.r, "r for I_r; genus for ordinary")->capture_default_str()->check(CLI::PositiveNumber);
    dd_build->add_option("--summands", dd.summands, "Summands for --kind sum: iR, i32, ordinary, etale, mult")
        ->delimiter(',');
    dd_build->add_option("--p", dd.p, "Characteristic of the base field")->capture_default_str();
    dd_build->add_option("--m", dd.m, "Extension degree of the base field")->capture_default_str();
    dd_build->add_option("--show", dd.show, "eo-type, f, a, ker-powers or module")
        ->capture_default_str()
        ->check(CLI::IsMember({"eo-type", "f", "a", "ker-powers", "module"}));
    add_output_options(dd_build, dd.out, "text", {"text", "json"});

    CurveOptions cm;
    auto* cm_cmd = app.add_subcommand("cm", "Hyperelliptic curves y^2 = f(x), odd p");
    cm_cmd->require_subcommand(1);
    auto* cm_inv = cm_cmd->add_subcommand("invariants", "p-rank and a-number from the Cartier-Manin matrix");
    cm_inv->add_option("--p", cm.p, "Odd characteristic")->required();
    cm_inv->add_option("--m", cm.m, "Extension degree")->capture_default_str();
    cm_inv->add_option("--coeffs", cm.coeffs, "Coefficients of f, low degree first; extension elements as a:b:c")
        ->required();
    add_output_options(cm_inv, cm.out, "text", {"text", "csv", "json"});

    CurveOptions as2;
    auto* as2_cmd = app.add_subcommand("as2", "Artin-Schreier curves y^2 - y = f(x), p = 2");
    as2_cmd->require_subcommand(1);
    auto* as2_inv = as2_cmd->add_subcommand("invariants", "p-rank and a-number from the Cartier operator");
    as2_inv->add_option("--m", as2.m, "Extension degree of F_2^m")->capture_default_str();
    as2_inv->add_option("--shape", as2.shape, "poly, gamma1 or gamma2")
        ->capture_default_str()
        ->check(CLI::IsMember({"poly", "gamma1", "gamma2"}));
    as2_inv->add_option("--coeffs", as2.coeffs, "poly: f low degree first; gamma1/gamma2: c1,c2,c3")->required();
    add_output_options(as2_inv, as2.out, "text", {"text", "csv", "json"});

    CensusOptions census;
    auto* census_cmd = app.add_subcommand("census", "Sampling and search over curve families");
    census_cmd->require_subcommand(1);
    auto* census_run_cmd = census_cmd->add_subcommand("run", "Aggregate (f, a) counts over a sample");
    add_census_options(census_run_cmd, census);
    census_run_cmd->add_flag("--diagnostics", census.diagnostics, "Print frequency diagnostics to standard error");
    add_output_options(census_run_cmd, census.out, "csv", {"csv", "json"});
    auto* census_search_cmd = census_cmd->add_subcommand("search", "Find the first curve with given (f, a)");
    add_census_options(census_search_cmd, census);
    census_search_cmd->add_option("--target-f", census.target_f, "Target p-rank")->required();
    census_search_cmd->add_option("--target-a", census.target_a, "Target a-number")->required();
    census_search_cmd->add_option("--budget", census.budget, "Maximum number of curves examined")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    OutputOptions search_out;
    add_output_options(census_search_cmd, search_out, "json", {"json", "text"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidArguments;
    }

    try {
        if (eo_enum->parsed()) {
            Sink s(eo.out, out);
            run_eo_enumerate(eo, *s);
        } else if (eo_counts->parsed()) {
            eo.out = eo_counts_out;
            Sink s(eo.out, out);
            run_eo_counts(eo, *s);
        } else if (dd_build->parsed()) {
            Sink s(dd.out, out);
            run_dd_build(dd, *s);
        } else if (cm_inv->parsed()) {
            Sink s(cm.out, out);
            run_cm(cm, *s);
        } else if (as2_inv->parsed()) {
            Sink s(as2.out, out);
            run_as2(as2, *s);
        } else if (census_run_cmd->parsed() || census_search_cmd->parsed()) {
            auto* cmd = census_run_cmd->parsed() ? census_run_cmd : census_search_cmd;
            if (cmd->get_option("--jobs")->count() == 0) {
                if (const auto env = jobs_from_env()) census.spec.jobs = *env;
            }
            if (census_run_cmd->parsed()) {
                Sink s(census.out, out);
                run_census(census, *s, err);
                return kSuccess;
            }
            census.out = search_out;
            Sink s(census.out, out);
            return run_search(census, *s, err);
        }
    } catch (const InvariantError& e) {
        err << "internal invariant violation: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
    return kSuccess;
}

}  // namespace ptorsion::cli
