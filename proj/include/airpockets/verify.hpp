#ifndef AIRPOCKETS_VERIFY_HPP
#define AIRPOCKETS_VERIFY_HPP

// Three-way verification: printed series, brute-force oracles, bijection
// round trips, and OEIS alignments. Checks run on a worker pool; the report
// keeps submission order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "airpockets/bijections.hpp"
#include "airpockets/catalog.hpp"
#include "airpockets/oeis.hpp"
#include "airpockets/oracle.hpp"

namespace airpockets {

enum class CheckKind { OracleVsGf, GfVsOeis, BijectionRoundtrip, DualPath, GfVsPrinted };

inline std::string to_string(CheckKind k) {
    switch (k) {
    case CheckKind::OracleVsGf: return "oracle_vs_gf";
    case CheckKind::GfVsOeis: return "gf_vs_oeis";
    case CheckKind::BijectionRoundtrip: return "bijection_roundtrip";
    case CheckKind::DualPath: return "dual_path";
    case CheckKind::GfVsPrinted: return "gf_vs_printed";
    }
    return "?";
}

struct CheckResult {
    std::string subject;
    CheckKind kind = CheckKind::DualPath;
    std::string range;
    bool passed = false;
    std::optional<std::string> first_mismatch;
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
    }
    std::size_t failures() const {
        return std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
    }
};

// ---------------------------------------------------------------------------
// Printed reference values

struct PrintedSeries {
    std::string label;
    std::string name;
    CatalogParams params;
    std::vector<long> coeffs;  // from x^0
};

inline const std::vector<PrintedSeries>& printed_series() {
    static const std::vector<PrintedSeries> table = {
        {"A", "A", {}, {0, 0, 1, 1, 2, 4, 8, 17, 37, 82, 185}},
        {"Gp1", "Gp1", {}, {0, 0, 1, 1, 2, 5, 11, 26, 63, 153, 376}},
        {"Gp2", "Gp2", {}, {0, 0, 0, 1, 2, 5, 13, 32, 80, 201, 505}},
        {"Gp", "Gp", {}, {1, 0, 1, 2, 4, 10, 24, 58, 143, 354, 881}},
        {"Gm", "Gm", {}, {0, 0, 1, 1, 3, 7, 16, 39, 95, 233, 577}},
        {"G", "G", {}, {1, 0, 2, 3, 7, 17, 40, 97, 238, 587, 1458}},
        {"Gm1", "Gm1", {}, {0, 0, 0, 0, 1, 2, 5, 13, 32, 80, 201}},
        {"Gm2", "Gm2", {}, {0, 0, 1, 1, 2, 5, 11, 26, 63, 153, 376}},
        {"f0", "f0", {}, {0, 0, 1, 2, 4, 10, 24, 58, 143, 354, 881}},
        {"g0", "g0", {}, {0, 0, 1, 1, 3, 7, 16, 39, 95, 233, 577}},
        {"prefix_positive", "prefix_positive", {}, {0, 1, 1, 4, 9, 22, 55, 136, 339, 849, 2132}},
        {"prefix k=-1", "prefix", {-1, {}, {}}, {0, 1, 2, 4, 10, 24, 58, 143, 354, 881, 2204}},
        {"prefix k=-2", "prefix", {-2, {}, {}}, {0, 1, 2, 5, 13, 32, 80, 201, 505, 1273, 3217}},
        {"minorized m=-1", "minorized", {{}, {}, -1},
         {1, 2, 4, 8, 17, 37, 82, 185, 423, 978, 2283}},
        {"minorized m=-2", "minorized", {{}, {}, -2},
         {1, 3, 6, 13, 29, 65, 148, 341, 793, 1860, 4395}},
        {"g0t t=1", "g0t", {{}, 1, {}}, {0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}},
        {"g0t t=2", "g0t", {{}, 2, {}}, {0, 0, 1, 1, 1, 3, 2, 6, 6, 11, 16}},
        {"g0t t=3", "g0t", {{}, 3, {}}, {0, 0, 1, 1, 2, 3, 7, 9, 22, 32, 66}},
        {"g0t t=4", "g0t", {{}, 4, {}}, {0, 0, 1, 1, 2, 4, 7, 16, 27, 63, 112}},
        {"sym t=1", "sym", {{}, 1, {}}, {1, 0, 2, 1, 3, 4, 5, 10, 11, 21, 27}},
        {"sym t=2", "sym", {{}, 2, {}}, {1, 0, 2, 3, 5, 13, 22, 48, 93, 190, 375}},
        {"sym t=3", "sym", {{}, 3, {}}, {1, 0, 2, 3, 7, 15, 36, 75, 176, 386, 869}},
        {"H", "H", {}, {1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273}},
    };
    return table;
}

struct PrintedPolynomial {
    std::string label;
    int k;  // -1 for D_t
    int t;
    std::vector<long> coeffs;
};

inline const std::vector<PrintedPolynomial>& printed_polynomials() {
    static const std::vector<PrintedPolynomial> table = {
        {"D_0", -1, 0, {1}},
        {"D_1", -1, 1, {1, 0, -1}},
        {"D_2", -1, 2, {1, 0, -2, -1, 1}},
        {"D_3", -1, 3, {1, 0, -3, -2, 2, 2, -1}},
        {"N_0^0", 0, 0, {1}},
        {"N_1^0", 1, 0, {}},
        {"N_0^1", 0, 1, {1, 0, -1}},
        {"N_1^1", 1, 1, {0, 1}},
        {"N_2^1", 2, 1, {0, 0, 1}},
        {"N_3^1", 3, 1, {}},
        {"N_0^2", 0, 2, {1, 0, -2, -1, 1}},
        {"N_1^2", 1, 2, {0, 1, 0, -1}},
        {"N_2^2", 2, 2, {0, 0, 1}},
        {"N_3^2", 3, 2, {0, 0, 1, 1, -1}},
        {"N_4^2", 4, 2, {0, 0, 0, 1}},
        {"N_5^2", 5, 2, {}},
        {"N_0^3", 0, 3, {1, 0, -3, -2, 2, 2, -1}},
        {"N_1^3", 1, 3, {0, 1, 0, -2, -1, 1}},
        {"N_2^3", 2, 3, {0, 0, 1, 0, -1}},
        {"N_3^3", 3, 3, {0, 0, 0, 1}},
        {"N_4^3", 4, 3, {0, 0, 1, 1, -1, -2, 1}},
        {"N_5^3", 5, 3, {0, 0, 0, 1, 1, -1}},
        {"N_6^3", 6, 3, {0, 0, 0, 0, 1}},
        {"N_7^3", 7, 3, {}},
    };
    return table;
}

// ---------------------------------------------------------------------------
// Oracle counterparts of catalog entries

struct OracleCounterpart {
    std::string label;
    std::string name;
    CatalogParams params;
    bool bounded;  // height-bounded families are checked further
    std::function<std::uint64_t(int)> count;
};

namespace detail {

inline FamilySpec with_steps(FamilySpec s, std::optional<StepKind> start,
                             std::optional<StepKind> end) {
    s.start_step = start;
    s.end_step = end;
    return s;
}

inline FamilySpec window_prefix(int lo, int hi, int end, StepKind last) {
    FamilySpec s = FamilySpec::prefix(end, lo);
    s.max_y = hi;
    s.end_step = last;
    return s;
}

inline std::string param_label(const std::string& name, const CatalogParams& p) {
    std::string out = name;
    if (p.k) out += " k=" + std::to_string(*p.k);
    if (p.t) out += " t=" + std::to_string(*p.t);
    if (p.m) out += " m=" + std::to_string(*p.m);
    return out;
}

} // namespace detail

inline std::vector<OracleCounterpart> oracle_counterparts() {
    using detail::with_steps;
    const auto up = StepKind::Up;
    const auto down = StepKind::Down;
    const FamilySpec g = FamilySpec::gdap();
    std::vector<OracleCounterpart> out;
    auto add = [&](std::string name, CatalogParams p, bool bounded,
                   std::function<std::uint64_t(int)> f) {
        out.push_back({detail::param_label(name, p), std::move(name), p, bounded, std::move(f)});
    };
    // ends beyond reach count zero rather than being infeasible
    auto of = [](FamilySpec s) {
        return [s](int n) -> std::uint64_t {
            if (s.end_ordinate && *s.end_ordinate > n) return 0;
            return count_paths(n, s);
        };
    };

    add("A", {}, false, of(FamilySpec::of(Family::DAP)));
    add("P", {}, false, of(FamilySpec::of(Family::Prime)));
    add("Gp1", {}, false, of(with_steps(g, up, down)));
    add("Gp2", {}, false, of(with_steps(g, up, up)));
    add("Gp", {}, false, [=](int n) { return count_paths(n, with_steps(g, up, {})) + (n == 0); });
    add("Gm", {}, false, of(with_steps(g, down, {})));
    add("G", {}, false, of(g));
    add("Gm1", {}, false, of(with_steps(g, down, down)));
    add("Gm2", {}, false, of(with_steps(g, down, up)));
    add("f0", {}, false, of(with_steps(g, {}, up)));
    add("g0", {}, false, of(with_steps(g, {}, down)));
    for (int k = 0; k <= 3; ++k) add("T", {k, {}, {}}, false, of(FamilySpec::prefix(k, 0)));
    for (int k : {-3, -2, -1, 1, 2, 3}) add("prefix", {k, {}, {}}, false, of(FamilySpec::prefix(k)));
    add("prefix_positive", {}, false, [](int n) {
        std::uint64_t total = 0;
        for (int k = 1; k <= n; ++k) total += count_paths(n, FamilySpec::prefix(k));
        return total;
    });
    for (int m = 0; m >= -3; --m)
        add("minorized", {{}, {}, m}, false, of(FamilySpec::prefix(std::nullopt, m)));
    for (int t = 1; t <= 3; ++t) {
        for (int k = 0; k <= t; ++k) {
            add("fkt", {k, t, {}}, true, [=](int n) {
                return of(detail::window_prefix(0, t, k, up))(n) + (n == 0 && k == 0);
            });
            add("gkt", {k, t, {}}, true, of(detail::window_prefix(0, t, k, down)));
        }
    }
    for (int t = 1; t <= 4; ++t)
        add("g0t", {{}, t, {}}, true, of(with_steps(FamilySpec::bounded(0, t), {}, down)));
    for (int t = 1; t <= 3; ++t) add("sym", {{}, t, {}}, true, of(FamilySpec::bounded(-t, t)));
    for (int t = 1; t <= 2; ++t) {
        for (int k = -t; k <= t; ++k) {
            add("sym_f", {k, t, {}}, true, [=](int n) {
                return of(detail::window_prefix(-t, t, k, up))(n) + (n == 0 && k == 0);
            });
            add("sym_g", {k, t, {}}, true, of(detail::window_prefix(-t, t, k, down)));
        }
    }
    add("H", {}, false, of(FamilySpec::of(Family::SpecialH)));
    for (int k = 1; k <= 4; ++k) {
        FamilySpec s = FamilySpec::of(Family::SpecialH);
        s.max_y = k;
        add("Hk", {k, {}, {}}, true, of(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Check helpers

namespace detail {

inline std::string mismatch_at(int n, const std::string& expected, const std::string& got) {
    return "x^" + std::to_string(n) + ": expected " + expected + ", got " + got;
}

inline std::optional<std::string> compare_prefix(const TruncatedSeries& s,
                                                 const std::vector<long>& expected) {
    for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
        Rational got = n <= s.order() ? s[n] : Rational(0);
        if (got != expected[n]) return mismatch_at(n, std::to_string(expected[n]), got.get_str());
    }
    return std::nullopt;
}

inline std::optional<std::string> compare_series(const TruncatedSeries& a,
                                                 const TruncatedSeries& b) {
    if (a.order() != b.order())
        return "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order());
    for (int n = 0; n <= a.order(); ++n)
        if (a[n] != b[n]) return mismatch_at(n, b[n].get_str(), a[n].get_str());
    return std::nullopt;
}

inline std::optional<std::string> compare_poly(const Polynomial& a, const Polynomial& b) {
    if (a == b) return std::nullopt;
    return a.to_string() + " != " + b.to_string();
}

inline std::string range_upto(int n) { return "n<=" + std::to_string(n); }

} // namespace detail

using CheckTask = std::function<CheckResult()>;

inline CheckTask make_check(std::string subject, CheckKind kind, std::string range,
                            std::function<std::optional<std::string>()> body) {
    return [=]() {
        CheckResult r{subject, kind, range, false, std::nullopt};
        try {
            r.first_mismatch = body();
        } catch (const std::exception& e) {
            r.first_mismatch = e.what();
        }
        r.passed = !r.first_mismatch;
        return r;
    };
}

/// Runs tasks on up to `threads` workers; results keep task order.
inline std::vector<CheckResult> run_checks(const std::vector<CheckTask>& tasks,
                                           unsigned threads = 0) {
    std::vector<CheckResult> results(tasks.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(tasks.size(), 1));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    return results;
}

// ---------------------------------------------------------------------------
// Suites

struct VerifyOptions {
    int max_n = 10;
    unsigned threads = 0;
    OeisOptions oeis;
};

inline std::vector<CheckTask> printed_series_checks() {
    std::vector<CheckTask> tasks;
    for (const auto& p : printed_series()) {
        const int order = static_cast<int>(p.coeffs.size()) - 1;
        tasks.push_back(make_check(p.label, CheckKind::GfVsPrinted, detail::range_upto(order),
                                   [p, order] {
                                       return detail::compare_prefix(
                                           catalog_series(p.name, p.params, order), p.coeffs);
                                   }));
    }
    for (const auto& p : printed_polynomials()) {
        tasks.push_back(make_check(p.label, CheckKind::GfVsPrinted, "exact", [p] {
            std::vector<Rational> c(p.coeffs.begin(), p.coeffs.end());
            Polynomial printed(std::move(c));
            Polynomial got = p.k < 0 ? poly_D_recurrence(p.t) : poly_N_cramer(p.k, p.t);
            return detail::compare_poly(got, printed);
        }));
    }

    constexpr int order = 30;
    for (int t = 0; t <= 6; ++t)
        tasks.push_back(make_check("D_" + std::to_string(t), CheckKind::DualPath,
                                   "recurrence, determinant, closed form; order 30", [t] {
                                       poly_D(t, order);
                                       return std::optional<std::string>{};
                                   }));
    for (int t = 0; t <= 3; ++t)
        for (int k = 0; k <= 2 * t + 1; ++k)
            tasks.push_back(make_check("N_" + std::to_string(k) + "^" + std::to_string(t),
                                       CheckKind::DualPath, "recurrence vs Cramer", [k, t] {
                                           return detail::compare_poly(poly_N_recurrence(k, t),
                                                                       poly_N_cramer(k, t));
                                       }));
    for (int t = 0; t <= 5; ++t)
        tasks.push_back(make_check("D'_" + std::to_string(t) + " = D_" + std::to_string(2 * t),
                                   CheckKind::DualPath, "exact", [t] {
                                       return detail::compare_poly(poly_Dprime_determinant(t),
                                                                   poly_D_recurrence(2 * t));
                                   }));
    for (int t = 1; t <= 3; ++t) {
        tasks.push_back(make_check("Ntilde_0^" + std::to_string(t) + " = D_{t-1} D_t",
                                   CheckKind::DualPath, "exact", [t] {
                                       return detail::compare_poly(
                                           poly_Ntilde_cramer(0, t),
                                           poly_D_recurrence(t - 1) * poly_D_recurrence(t));
                                   }));
        tasks.push_back(make_check("Ntilde_{2t+1}^" + std::to_string(t) + " = D_{t-1} N_{t+1}^t",
                                   CheckKind::DualPath, "exact", [t] {
                                       return detail::compare_poly(
                                           poly_Ntilde_cramer(2 * t + 1, t),
                                           poly_D_recurrence(t - 1) * poly_N_recurrence(t + 1, t));
                                   }));
    }
    tasks.push_back(make_check("prefix k=-1 = (Gp - 1)/x", CheckKind::DualPath, "order 30", [] {
        auto gp = gf_gdap(GdapName::Gp, order + 1) - TruncatedSeries::one(order + 1);
        return detail::compare_series(gf_prefix_negative(-1, order), shift(gp, -1));
    }));
    tasks.push_back(make_check("prefix k=-2 = Gp2/x^2", CheckKind::DualPath, "order 30", [] {
        return detail::compare_series(gf_prefix_negative(-2, order),
                                      shift(gf_gdap(GdapName::Gp2, order + 2), -2));
    }));
    tasks.push_back(make_check("prefix_positive closed form vs sum", CheckKind::DualPath,
                               "order 30", [] {
                                   return detail::compare_series(gf_prefix_positive_total(order),
                                                                 gf_prefix_positive_sum(order));
                               }));
    for (int m = 0; m >= -3; --m)
        tasks.push_back(make_check("minorized m=" + std::to_string(m) + " closed form vs system",
                                   CheckKind::DualPath, "order 20", [m] {
                                       return detail::compare_series(gf_minorized(m, 20),
                                                                     minorized_by_system(m, 20).total());
                                   }));
    tasks.push_back(make_check("H height-bounded limit", CheckKind::DualPath, "order 20", [] {
        constexpr int n = 20;
        return detail::compare_series(gf_H_bounded(n, n), gf_H(n));
    }));
    tasks.push_back(make_check("H backward step", CheckKind::DualPath, "k=1..8, order 20", [] {
        constexpr int n = 20;
        auto b = gf_H_bounded_upto(8, n + 1);
        for (int k = 1; k <= 8; ++k)
            if (auto m = detail::compare_series(H_backward_step(b[k]), b[k - 1].truncated(n)))
                return std::optional<std::string>("k=" + std::to_string(k) + ": " + *m);
        return std::optional<std::string>{};
    }));
    return tasks;
}

inline std::vector<CheckTask> oracle_checks(int max_n) {
    std::vector<CheckTask> tasks;
    for (auto& c : oracle_counterparts()) {
        const int n_max = c.bounded ? max_n + 2 : max_n;
        tasks.push_back(make_check(c.label, CheckKind::OracleVsGf, detail::range_upto(n_max),
                                   [c, n_max]() -> std::optional<std::string> {
                                       auto s = catalog_series(c.name, c.params, n_max);
                                       for (int n = 0; n <= n_max; ++n) {
                                           Integer expected(static_cast<unsigned long>(c.count(n)));
                                           if (s[n] != expected)
                                               return detail::mismatch_at(n, expected.get_str(),
                                                                          s[n].get_str());
                                       }
                                       return std::nullopt;
                                   }));
    }
    tasks.push_back(make_check("H grammar vs membership filter", CheckKind::DualPath,
                               detail::range_upto(max_n), [max_n]() -> std::optional<std::string> {
                                   auto h = enum_H_upto(max_n);
                                   for (int n = 0; n <= max_n; ++n)
                                       if (enum_H_by_filter(n) != h[n])
                                           return "sets differ at n=" + std::to_string(n);
                                   return std::nullopt;
                               }));
    tasks.push_back(make_check("H vs Motzkin paths avoiding UH, HU, HH", CheckKind::DualPath,
                               detail::range_upto(max_n) + ", n!=1", [max_n]() -> std::optional<std::string> {
                                   auto h = enum_H_upto(max_n);
                                   // the lone level step H is the only length-1 path
                                   if (enum_motzkin_avoiding(1) != std::vector<MotzkinPath>{"H"} ||
                                       !h[1].empty())
                                       return std::string("unexpected length-1 sets");
                                   for (int n = 0; n <= max_n; ++n)
                                       if (n != 1 && enum_motzkin_avoiding(n).size() != h[n].size())
                                           return detail::mismatch_at(
                                               n, std::to_string(h[n].size()),
                                               std::to_string(enum_motzkin_avoiding(n).size()));
                                   return std::nullopt;
                               }));
    return tasks;
}

/// Exhaustive round trips and image discipline for psi on lengths 2..n_max.
inline std::optional<std::string> check_psi(int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        for (const auto& p : enum_paths(n, FamilySpec::bounded(0, 2))) {
            Composition c = psi(p);
            if (!is_alternating(c) || c.total() != n - 2)
                return "psi(" + p.to_string() + ") = " + c.to_string() + " outside C(n-2)";
            if (psi_inv(c) != p) return "psi_inv(psi(" + p.to_string() + ")) differs";
        }
    }
    for (int m = 0; m <= n_max - 2; ++m)
        for (const auto& c : enum_compositions(m, CompositionKind::Alt))
            if (psi(psi_inv(c)) != c) return "psi(psi_inv(" + c.to_string() + ")) differs";
    return std::nullopt;
}

/// Same for phi on lengths 0..n_max.
inline std::optional<std::string> check_phi(int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        for (const auto& p : enum_paths(n, FamilySpec::bounded(-1, 1))) {
            Composition c = phi(p);
            if (!is_alternating_odd_even(c) || c.total() != n + 3)
                return "phi(" + p.to_string() + ") = " + c.to_string() + " outside C'(n+3)";
            if (phi_inv(c) != p) return "phi_inv(phi(" + p.to_string() + ")) differs";
        }
    }
    for (int m = 3; m <= n_max + 3; ++m)
        for (const auto& c : enum_compositions(m, CompositionKind::AltOddEven))
            if (phi(phi_inv(c)) != c) return "phi(phi_inv(" + c.to_string() + ")) differs";
    return std::nullopt;
}

inline std::vector<CheckTask> bijection_checks(int max_n) {
    std::vector<CheckTask> tasks;
    tasks.push_back(make_check("psi", CheckKind::BijectionRoundtrip,
                               "2<=n<=" + std::to_string(max_n), [max_n] { return check_psi(max_n); }));
    tasks.push_back(make_check("phi", CheckKind::BijectionRoundtrip,
                               "0<=n<=" + std::to_string(max_n), [max_n] { return check_phi(max_n); }));
    tasks.push_back(make_check("|C(n-2)| = g0t t=2 coefficient", CheckKind::DualPath,
                               "2<=n<=" + std::to_string(max_n),
                               [max_n]() -> std::optional<std::string> {
                                   auto s = catalog_series("g0t", {{}, 2, {}}, max_n);
                                   for (int n = 2; n <= max_n; ++n) {
                                       auto c = enum_compositions(n - 2, CompositionKind::Alt).size();
                                       if (s[n] != static_cast<unsigned long>(c))
                                           return detail::mismatch_at(n, s[n].get_str(),
                                                                      std::to_string(c));
                                   }
                                   return std::nullopt;
                               }));
    tasks.push_back(make_check("|C'(n+3)| = sym t=1 coefficient", CheckKind::DualPath,
                               "0<=n<=" + std::to_string(max_n),
                               [max_n]() -> std::optional<std::string> {
                                   auto s = catalog_series("sym", {{}, 1, {}}, max_n);
                                   for (int n = 0; n <= max_n; ++n) {
                                       auto c =
                                           enum_compositions(n + 3, CompositionKind::AltOddEven).size();
                                       if (s[n] != static_cast<unsigned long>(c))
                                           return detail::mismatch_at(n, s[n].get_str(),
                                                                      std::to_string(c));
                                   }
                                   return std::nullopt;
                               }));
    return tasks;
}

inline std::vector<CheckTask> oeis_checks(std::shared_ptr<OeisClient> client) {
    std::vector<CheckTask> tasks;
    for (const auto& c : oeis_citations()) {
        CatalogParams p{c.k, c.t, c.m};
        tasks.push_back(make_check(detail::param_label(c.name, p) + " ~ " + c.id,
                                   CheckKind::GfVsOeis, "shift in [-5,5], >= 9 terms",
                                   [client, c, p]() -> std::optional<std::string> {
                                       auto rec = client->fetch(c.id);
                                       align_and_compare(catalog_series(c.name, p, 20), rec, 9);
                                       return std::nullopt;
                                   }));
    }
    return tasks;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"paper-series", "oracle", "bijections", "oeis",
                                                   "all"};
    return names;
}

inline VerificationReport run_suite(const std::string& suite, const VerifyOptions& opts = {}) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw Error(ErrorCode::UnknownName, "no suite named '" + suite + "'");
    if (opts.max_n < 2) throw Error(ErrorCode::BadParams, "max-n must be >= 2");
    std::vector<CheckTask> tasks;
    auto take = [&](std::vector<CheckTask> more) {
        for (auto& t : more) tasks.push_back(std::move(t));
    };
    const bool all = suite == "all";
    if (all || suite == "paper-series") take(printed_series_checks());
    if (all || suite == "oracle") take(oracle_checks(opts.max_n));
    if (all || suite == "bijections") take(bijection_checks(opts.max_n));
    if (all || suite == "oeis") take(oeis_checks(std::make_shared<OeisClient>(opts.oeis)));
    return VerificationReport{suite, run_checks(tasks, opts.threads)};
}

} // namespace airpockets

#endif // AIRPOCKETS_VERIFY_HPP
