#ifndef AIRPOCKETS_TOOLS_CLI_HPP
#define AIRPOCKETS_TOOLS_CLI_HPP

// The airpockets command line: series, enumerate, map, verify.
// Data goes to `out`, diagnostics to `err`.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "airpockets/airpockets.hpp"

namespace airpockets::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,
    kUnknownName = 2,
    kBadParams = 3,
    kNotInDomain = 4,
};

inline int exit_code_for(ErrorCode c) {
    switch (c) {
    case ErrorCode::UnknownName: return kUnknownName;
    case ErrorCode::BadParams:
    case ErrorCode::InfeasibleSpec:
    case ErrorCode::MalformedToken:
    case ErrorCode::ConsecutiveDowns:
    case ErrorCode::IndexOutOfRange: return kBadParams;
    case ErrorCode::NotInFamily:
    case ErrorCode::NotAlternating:
    case ErrorCode::NotInCPrime:
    case ErrorCode::NotPrime:
    case ErrorCode::NotDAP: return kNotInDomain;
    default: return kFailed;
    }
}

inline const std::string kEpsilon = "\xce\xb5";  // ε

inline std::string path_text(const LatticePath& p) { return p.empty() ? kEpsilon : p.to_string(); }

inline LatticePath read_path(const std::string& text) {
    return text == kEpsilon ? LatticePath{} : parse_path(text);
}

inline std::string composition_text(const Composition& c) {
    return c.parts.empty() ? "()" : c.to_string();
}

inline Composition read_composition(const std::string& text) {
    return text == "()" ? Composition{} : parse_composition(text);
}

inline nlohmann::json params_json(const CatalogParams& p) {
    nlohmann::json j = nlohmann::json::object();
    if (p.k) j["k"] = *p.k;
    if (p.m) j["m"] = *p.m;
    if (p.t) j["t"] = *p.t;
    return j;
}

// Coefficients are written by hand so that integers of any size stay exact.
inline std::string series_json(const std::string& name, const CatalogParams& p,
                               const std::vector<Integer>& coeffs) {
    std::string out = "{\"coeffs\":[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ',';
        out += coeffs[i].get_str();
    }
    out += "],\"name\":" + nlohmann::json(name).dump();
    out += ",\"params\":" + params_json(p).dump() + "}";
    return out;
}

struct SeriesArgs {
    std::string name;
    std::optional<int> k, t, m;
    int order = 20;
    std::string format = "plain";
};

inline int cmd_series(const SeriesArgs& a, std::ostream& out) {
    CatalogParams p{a.k, a.t, a.m};
    auto coeffs = catalog_series(a.name, p, a.order).integer_coeffs();
    if (a.format == "json") {
        out << series_json(a.name, p, coeffs) << '\n';
    } else if (a.format == "csv") {
        out << "n,coeff\n";
        for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << ',' << coeffs[n].get_str() << '\n';
    } else {
        for (std::size_t n = 0; n < coeffs.size(); ++n) out << (n ? " " : "") << coeffs[n].get_str();
        out << '\n';
    }
    return kOk;
}

struct EnumerateArgs {
    std::string family = "gdap";
    int length = 0;
    std::optional<int> min_y, max_y, end_ordinate;
    std::optional<std::string> end_step, start_step;
    bool list = false;
    std::string format = "plain";
};

inline Family family_from(const std::string& name) {
    for (Family f : {Family::GDAP, Family::DAP, Family::Prime, Family::PrefixGDAP, Family::SpecialH,
                     Family::MotzkinAvoidUH_HU_HH, Family::CompositionAlt,
                     Family::CompositionAltOddEven})
        if (to_string(f) == name) return f;
    throw Error(ErrorCode::UnknownName, "no family named '" + name + "'");
}

inline StepKind step_from(const std::string& s) {
    if (s == "U" || s == "up") return StepKind::Up;
    if (s == "D" || s == "down") return StepKind::Down;
    throw Error(ErrorCode::BadParams, "step must be U or D, got '" + s + "'");
}

inline int cmd_enumerate(const EnumerateArgs& a, std::ostream& out) {
    const Family family = family_from(a.family);
    if (a.length < 0) throw Error(ErrorCode::InfeasibleSpec, "negative length");
    std::vector<std::string> items;
    std::optional<std::uint64_t> count;
    switch (family) {
    case Family::MotzkinAvoidUH_HU_HH:
        items = enum_motzkin_avoiding(a.length);
        for (auto& s : items)
            if (s.empty()) s = kEpsilon;
        break;
    case Family::CompositionAlt:
    case Family::CompositionAltOddEven:
        for (const auto& c : enum_compositions(a.length, family == Family::CompositionAlt
                                                             ? CompositionKind::Alt
                                                             : CompositionKind::AltOddEven))
            items.push_back(composition_text(c));
        break;
    default: {
        FamilySpec spec = FamilySpec::of(family);
        spec.min_y = a.min_y;
        spec.max_y = a.max_y;
        spec.end_ordinate = a.end_ordinate;
        if (a.end_step) spec.end_step = step_from(*a.end_step);
        if (a.start_step) spec.start_step = step_from(*a.start_step);
        if (a.list)
            for (const auto& p : enum_paths(a.length, spec)) items.push_back(path_text(p));
        else
            count = count_paths(a.length, spec);
    }
    }
    const std::uint64_t total = count ? *count : items.size();

    if (a.format == "json") {
        nlohmann::json j = {{"family", a.family}, {"length", a.length}};
        if (a.list) j["items"] = items;
        else j["count"] = total;
        out << j.dump() << '\n';
    } else if (a.format == "csv") {
        if (a.list) {
            out << "item\n";
            for (const auto& s : items) out << s << '\n';
        } else {
            out << "count\n" << total << '\n';
        }
    } else if (a.list) {
        for (const auto& s : items) out << s << '\n';
    } else {
        out << total << '\n';
    }
    return kOk;
}

struct MapArgs {
    std::string bijection;
    std::optional<std::string> apply, invert;
};

inline int cmd_map(const MapArgs& a, std::ostream& out) {
    if (a.apply.has_value() == a.invert.has_value())
        throw Error(ErrorCode::BadParams, "give exactly one of --apply and --invert");
    if (a.bijection != "psi" && a.bijection != "phi")
        throw Error(ErrorCode::UnknownName, "no bijection named '" + a.bijection + "'");
    const bool is_psi = a.bijection == "psi";
    if (a.apply) {
        LatticePath p = read_path(*a.apply);
        out << composition_text(is_psi ? psi(p) : phi(p)) << '\n';
    } else {
        Composition c = read_composition(*a.invert);
        out << path_text(is_psi ? psi_inv(c) : phi_inv(c)) << '\n';
    }
    return kOk;
}

struct VerifyArgs {
    std::string suite = "all";
    int max_n = 10;
    std::string format = "plain";
    bool offline = false;
    bool refresh = false;
    std::optional<std::string> cache_dir;
    std::optional<std::string> base_url;
    unsigned threads = 0;
};

inline void print_report(const VerificationReport& r, const std::string& format,
                         std::ostream& out) {
    if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json j = {{"check_kind", to_string(c.kind)},
                                {"range", c.range},
                                {"status", c.passed ? "pass" : "fail"},
                                {"subject", c.subject}};
            if (c.first_mismatch) j["first_mismatch"] = *c.first_mismatch;
            checks.push_back(std::move(j));
        }
        out << nlohmann::json{{"checks", checks}, {"passed", r.passed()}, {"suite", r.suite}}.dump()
            << '\n';
        return;
    }
    if (format == "csv") {
        auto quote = [](const std::string& s) {
            std::string q = "\"";
            for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        };
        out << "status,check_kind,subject,range,first_mismatch\n";
        for (const auto& c : r.checks)
            out << (c.passed ? "pass" : "fail") << ',' << to_string(c.kind) << ','
                << quote(c.subject) << ',' << quote(c.range) << ','
                << quote(c.first_mismatch.value_or("")) << '\n';
        return;
    }
    for (const auto& c : r.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << to_string(c.kind) << "  " << c.subject << "  ["
            << c.range << "]\n";
        if (c.first_mismatch) out << "     first mismatch: " << *c.first_mismatch << '\n';
    }
    out << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks passed\n";
}

inline int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    VerifyOptions opts;
    opts.max_n = a.max_n;
    opts.threads = a.threads;
    opts.oeis.offline = a.offline;
    opts.oeis.refresh = a.refresh;
    if (a.cache_dir) opts.oeis.cache_dir = *a.cache_dir;
    if (a.base_url) opts.oeis.base_url = *a.base_url;
    auto report = run_suite(a.suite, opts);
    print_report(report, a.format, out);
    return report.passed() ? kOk : kFailed;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"Dyck paths with air pockets: series, enumeration, bijections, verification"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"plain", "json", "csv"};

    SeriesArgs sa;
    auto* series = app.add_subcommand("series", "print the coefficients of a catalog series");
    std::string names;
    for (const auto& e : catalog_entries()) names += (names.empty() ? "" : ", ") + e.name;
    series->add_option("name", sa.name, "one of: " + names)->required();
    series->add_option("--k", sa.k, "ordinate or height parameter");
    series->add_option("--t", sa.t, "window parameter");
    series->add_option("--m", sa.m, "floor for minorized prefixes");
    series->add_option("--order", sa.order, "last coefficient index")->capture_default_str();
    series->add_option("--format", sa.format)->check(CLI::IsMember(formats))->capture_default_str();

    EnumerateArgs ea;
    auto* enumerate = app.add_subcommand("enumerate", "count or list a family");
    enumerate->add_option("--family", ea.family)->capture_default_str();
    enumerate->add_option("--length", ea.length)->required();
    enumerate->add_option("--min-y", ea.min_y);
    enumerate->add_option("--max-y", ea.max_y);
    enumerate->add_option("--end-ordinate", ea.end_ordinate);
    enumerate->add_option("--end-step", ea.end_step, "U or D");
    enumerate->add_option("--start-step", ea.start_step, "U or D");
    auto* list_flag = enumerate->add_flag("--list", ea.list, "list members");
    enumerate->add_flag("--count", "print the count (default)")->excludes(list_flag);
    enumerate->add_option("--format", ea.format)->check(CLI::IsMember(formats))->capture_default_str();

    MapArgs ma;
    auto* map = app.add_subcommand("map", "apply or invert psi or phi");
    map->add_option("--bijection", ma.bijection)->required()->check(CLI::IsMember({"psi", "phi"}));
    map->add_option("--apply", ma.apply, "step string, e.g. UUD2UD");
    map->add_option("--invert", ma.invert, "comma-separated parts, e.g. 1,2,3");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", va.suite)->check(CLI::IsMember(suite_names()))->capture_default_str();
    verify->add_option("--max-n", va.max_n)->capture_default_str();
    verify->add_option("--format", va.format)->check(CLI::IsMember(formats))->capture_default_str();
    verify->add_flag("--offline", va.offline, "never touch the network");
    verify->add_flag("--refresh", va.refresh, "ignore cached b-files");
    verify->add_option("--cache-dir", va.cache_dir, "overrides AIRPOCKETS_OEIS_CACHE");
    verify->add_option("--oeis-url", va.base_url, "b-file server base URL");
    verify->add_option("--threads", va.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kBadParams;
    }

    try {
        if (*series) return cmd_series(sa, out);
        if (*enumerate) return cmd_enumerate(ea, out);
        if (*map) return cmd_map(ma, out);
        if (*verify) return cmd_verify(va, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kFailed;
    }
    return kBadParams;
}

} // namespace airpockets::cli

#endif // AIRPOCKETS_TOOLS_CLI_HPP
