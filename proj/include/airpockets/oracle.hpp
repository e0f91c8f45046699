#ifndef AIRPOCKETS_ORACLE_HPP
#define AIRPOCKETS_ORACLE_HPP

// Brute-force generators and counters for every path and composition family.
// Nothing here uses generating functions; these are the ground truth.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "airpockets/error.hpp"
#include "airpockets/path.hpp"

namespace airpockets {

enum class Family {
    GDAP,
    DAP,
    Prime,
    PrefixGDAP,
    SpecialH,
    MotzkinAvoidUH_HU_HH,
    CompositionAlt,
    CompositionAltOddEven,
};

inline constexpr std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::GDAP: return "gdap";
    case Family::DAP: return "dap";
    case Family::Prime: return "prime";
    case Family::PrefixGDAP: return "prefix";
    case Family::SpecialH: return "H";
    case Family::MotzkinAvoidUH_HU_HH: return "motzkin-avoid";
    case Family::CompositionAlt: return "comp-alt";
    case Family::CompositionAltOddEven: return "comp-alt-odd-even";
    }
    return "?";
}

struct FamilySpec {
    Family kind = Family::GDAP;
    std::optional<int> min_y;
    std::optional<int> max_y;
    std::optional<int> end_ordinate;
    std::optional<StepKind> end_step;
    std::optional<StepKind> start_step;

    static FamilySpec gdap() { return {}; }
    static FamilySpec bounded(int lo, int hi) {
        FamilySpec s;
        s.min_y = lo;
        s.max_y = hi;
        return s;
    }
    static FamilySpec prefix(std::optional<int> end = std::nullopt,
                             std::optional<int> lo = std::nullopt) {
        FamilySpec s;
        s.kind = Family::PrefixGDAP;
        s.end_ordinate = end;
        s.min_y = lo;
        return s;
    }
    static FamilySpec of(Family kind) {
        FamilySpec s;
        s.kind = kind;
        return s;
    }
};

namespace detail {

inline bool is_path_family(Family f) {
    return f == Family::GDAP || f == Family::DAP || f == Family::Prime ||
           f == Family::PrefixGDAP || f == Family::SpecialH;
}

// Window and endpoint after folding the family's implicit constraints in.
struct ResolvedSpec {
    std::optional<int> lo;
    std::optional<int> hi;
    std::optional<int> end;
    std::optional<StepKind> start_step;
    std::optional<StepKind> end_step;
};

inline ResolvedSpec resolve(int n, const FamilySpec& spec) {
    if (n < 0) throw Error(ErrorCode::InfeasibleSpec, "negative length");
    if (!is_path_family(spec.kind))
        throw Error(ErrorCode::InfeasibleSpec,
                    std::string(to_string(spec.kind)) + " is not a lattice-path family");
    ResolvedSpec r{spec.min_y, spec.max_y, spec.end_ordinate, spec.start_step, spec.end_step};
    if (spec.kind != Family::PrefixGDAP) {
        if (r.end && *r.end != 0)
            throw Error(ErrorCode::InfeasibleSpec, "closed paths end on the x-axis");
        r.end = 0;
    }
    if (spec.kind == Family::DAP || spec.kind == Family::Prime || spec.kind == Family::SpecialH)
        r.lo = std::max(r.lo.value_or(0), 0);
    if (r.lo && *r.lo > 0) throw Error(ErrorCode::InfeasibleSpec, "min_y must be <= 0");
    if (r.hi && *r.hi < 0) throw Error(ErrorCode::InfeasibleSpec, "max_y must be >= 0");
    if (r.end) {
        if (*r.end > n)
            throw Error(ErrorCode::InfeasibleSpec,
                        "end ordinate " + std::to_string(*r.end) + " exceeds length " +
                            std::to_string(n));
        if ((r.lo && *r.end < *r.lo) || (r.hi && *r.end > *r.hi))
            throw Error(ErrorCode::InfeasibleSpec, "end ordinate outside the window");
    }
    if (!r.lo && !r.end)
        throw Error(ErrorCode::InfeasibleSpec,
                    "prefixes with neither a floor nor an end ordinate are infinite");
    for (auto k : {r.start_step, r.end_step})
        if (k && *k == StepKind::Empty)
            throw Error(ErrorCode::InfeasibleSpec, "step constraint must be Up or Down");
    return r;
}

// Lowest ordinate a step may reach with `remaining` steps left after it.
inline int floor_after(const ResolvedSpec& r, int remaining) {
    int floor = r.lo ? *r.lo : *r.end - remaining;
    if (r.end) floor = std::max(floor, *r.end - remaining);
    return floor;
}

inline bool leaf_ok(const ResolvedSpec& r, int h, StepKind last) {
    if (last == StepKind::Empty && r.start_step) return false;
    if (r.end && h != *r.end) return false;
    if (r.end_step && last != *r.end_step) return false;
    return true;
}

class PathCounter {
public:
    PathCounter(int n, const ResolvedSpec& r) : n_(n), r_(r) {
        base_ = floor_after(r, n);
        top_ = r.hi ? *r.hi : n;
        width_ = top_ - base_ + 1;
        memo_.assign(static_cast<std::size_t>(n + 1) * width_ * 2, kUnset);
    }

    std::uint64_t count() {
        if (n_ == 0) return leaf_ok(r_, 0, StepKind::Empty) ? 1 : 0;
        std::uint64_t total = 0;
        const int rem = n_ - 1;
        if (!r_.start_step || *r_.start_step == StepKind::Up)
            if (1 <= top_ && 1 >= floor_after(r_, rem)) total = add(total, go(rem, 1, StepKind::Up));
        if (!r_.start_step || *r_.start_step == StepKind::Down)
            for (int k = 1; -k >= floor_after(r_, rem); ++k)
                total = add(total, go(rem, -k, StepKind::Down));
        return total;
    }

private:
    static constexpr std::uint64_t kUnset = ~std::uint64_t{0};

    static std::uint64_t add(std::uint64_t a, std::uint64_t b) {
        std::uint64_t s;
        if (__builtin_add_overflow(a, b, &s))
            throw Error(ErrorCode::InfeasibleSpec, "count exceeds 64 bits");
        return s;
    }

    std::uint64_t go(int remaining, int h, StepKind last) {
        if (remaining == 0) return leaf_ok(r_, h, last) ? 1 : 0;
        auto& slot = memo_[(static_cast<std::size_t>(remaining) * width_ + (h - base_)) * 2 +
                           (last == StepKind::Down ? 1 : 0)];
        if (slot != kUnset) return slot;
        std::uint64_t total = 0;
        const int rem = remaining - 1;
        const int floor = floor_after(r_, rem);
        if (h + 1 <= top_ && h + 1 >= floor) total = add(total, go(rem, h + 1, StepKind::Up));
        if (last != StepKind::Down)
            for (int k = 1; h - k >= floor; ++k) total = add(total, go(rem, h - k, StepKind::Down));
        slot = total;
        return total;
    }

    int n_;
    ResolvedSpec r_;
    int base_ = 0;
    int top_ = 0;
    int width_ = 0;
    std::vector<std::uint64_t> memo_;
};

template <class Visit>
void walk_paths(int n, const ResolvedSpec& r, std::vector<Step>& steps, int h, Visit&& visit) {
    const int pos = static_cast<int>(steps.size());
    if (pos == n) {
        StepKind last = steps.empty() ? StepKind::Empty
                                      : (steps.back().is_up() ? StepKind::Up : StepKind::Down);
        if (leaf_ok(r, h, last)) visit(steps);
        return;
    }
    const int rem = n - pos - 1;
    const int floor = floor_after(r, rem);
    const bool first = pos == 0;
    const bool last_down = !steps.empty() && steps.back().is_down();
    if (!first || !r.start_step || *r.start_step == StepKind::Up) {
        if (h + 1 <= (r.hi ? *r.hi : n) && h + 1 >= floor) {
            steps.push_back(Step::up());
            walk_paths(n, r, steps, h + 1, visit);
            steps.pop_back();
        }
    }
    if (last_down) return;
    if (!first || !r.start_step || *r.start_step == StepKind::Down) {
        for (int k = 1; h - k >= floor; ++k) {
            steps.push_back(Step::down(k));
            walk_paths(n, r, steps, h - k, visit);
            steps.pop_back();
        }
    }
}

} // namespace detail

/// Memoized count of the length-n lattice paths of a family, without
/// materializing them. Special H is counted by its generator.
inline std::uint64_t count_paths(int n, const FamilySpec& spec);

/// All length-n members of a lattice-path family, in lexicographic step
/// order (U < D1 < D2 < ...).
inline std::vector<LatticePath> enum_paths(int n, const FamilySpec& spec);

namespace detail {

inline bool in_special_h(const LatticePath& path);

} // namespace detail

/// ℋ_n built from its recursive grammar: ε, or α·β with α = UD or a prime
/// whose lowering is in ℋ, β in ℋ, and height(α) >= height(β).
inline std::vector<std::vector<LatticePath>> enum_H_upto(int max_n) {
    std::vector<std::vector<LatticePath>> h(std::max(max_n, 0) + 1);
    if (max_n < 0) return h;
    h[0].push_back(LatticePath{});
    const LatticePath atom = parse_path("UD");
    for (int n = 2; n <= max_n; ++n) {
        for (int len = 2; len <= n; ++len) {
            std::vector<LatticePath> heads;
            if (len == 2) heads.push_back(atom);
            else
                for (const auto& d : h[len - 1]) heads.push_back(sharp(d));
            for (const auto& alpha : heads) {
                const int ha = alpha.max_height();
                for (const auto& beta : h[n - len])
                    if (beta.max_height() <= ha) h[n].push_back(concat(alpha, beta));
            }
        }
        std::sort(h[n].begin(), h[n].end());
    }
    return h;
}

inline std::vector<LatticePath> enum_H(int n) {
    if (n < 0) return {};
    return enum_H_upto(n)[n];
}

namespace detail {

inline bool in_special_h(const LatticePath& path) {
    if (path.empty()) return true;
    if (!is_dap(path)) return false;
    auto profile = path.profile();
    std::size_t cut = 1;
    while (profile[cut] != 0) ++cut;
    LatticePath alpha(std::vector<Step>(path.steps().begin(), path.steps().begin() + cut));
    LatticePath beta(std::vector<Step>(path.steps().begin() + cut, path.steps().end()));
    if (alpha.max_height() < beta.max_height()) return false;
    if (alpha.length() > 2 && !in_special_h(flat(alpha))) return false;
    return in_special_h(beta);
}

} // namespace detail

/// ℋ_n by filtering every DAP (and ε) through the membership test. Slower
/// than the grammar; kept as a second route.
inline std::vector<LatticePath> enum_H_by_filter(int n) {
    if (n == 0) return {LatticePath{}};
    std::vector<LatticePath> out;
    for (auto& p : enum_paths(n, FamilySpec::of(Family::DAP)))
        if (detail::in_special_h(p)) out.push_back(std::move(p));
    return out;
}

inline std::uint64_t count_paths(int n, const FamilySpec& spec) {
    if (spec.kind == Family::SpecialH || spec.kind == Family::Prime)
        return enum_paths(n, spec).size();
    auto r = detail::resolve(n, spec);
    if (spec.kind == Family::DAP && n < 2) return 0;
    return detail::PathCounter(n, r).count();
}

inline std::vector<LatticePath> enum_paths(int n, const FamilySpec& spec) {
    auto r = detail::resolve(n, spec);
    std::vector<LatticePath> out;
    if (spec.kind == Family::SpecialH) {
        for (auto& p : enum_H(n)) {
            if (r.hi && p.max_height() > *r.hi) continue;
            if (r.start_step && p.first_kind() != *r.start_step) continue;
            if (r.end_step && p.last_kind() != *r.end_step) continue;
            out.push_back(std::move(p));
        }
        return out;
    }
    if ((spec.kind == Family::DAP || spec.kind == Family::Prime) && n < 2) return out;
    std::vector<Step> steps;
    detail::walk_paths(n, r, steps, 0, [&](const std::vector<Step>& s) {
        LatticePath p(s);
        if (spec.kind == Family::Prime && !is_prime(p)) return;
        out.push_back(std::move(p));
    });
    return out;
}

// ---------------------------------------------------------------------------
// Motzkin paths avoiding the factors UH, HU and HH.

/// Step-string over {U, D, H}.
using MotzkinPath = std::string;

inline std::vector<MotzkinPath> enum_motzkin_avoiding(int n) {
    std::vector<MotzkinPath> out;
    if (n < 0) return out;
    std::string cur;
    auto rec = [&](auto&& self, int h) -> void {
        const int rem = n - static_cast<int>(cur.size());
        if (rem == 0) {
            if (h == 0) out.push_back(cur);
            return;
        }
        if (h > rem) return;
        const char prev = cur.empty() ? '\0' : cur.back();
        // lexicographic order: D < H < U
        if (h > 0) {
            cur.push_back('D');
            self(self, h - 1);
            cur.pop_back();
        }
        if (prev != 'U' && prev != 'H') {
            cur.push_back('H');
            self(self, h);
            cur.pop_back();
        }
        if (prev != 'H') {
            cur.push_back('U');
            self(self, h + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Compositions with alternating parities.

struct Composition {
    std::vector<int> parts;

    int total() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    bool operator==(const Composition&) const = default;
    auto operator<=>(const Composition&) const = default;

    /// Comma-separated parts; the empty composition prints as "".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(parts[i]);
        }
        return out;
    }
};

inline Composition parse_composition(std::string_view text) {
    Composition c;
    if (text.empty()) return c;
    std::size_t i = 0;
    while (true) {
        std::size_t j = text.find(',', i);
        std::string_view tok = text.substr(i, j == std::string_view::npos ? j : j - i);
        if (tok.empty() || tok.size() > 9 ||
            !std::all_of(tok.begin(), tok.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw Error(ErrorCode::MalformedToken, "bad composition part '" + std::string(tok) + "'");
        int v = std::stoi(std::string(tok));
        if (v < 1) throw Error(ErrorCode::MalformedToken, "composition parts must be positive");
        c.parts.push_back(v);
        if (j == std::string_view::npos) break;
        i = j + 1;
    }
    return c;
}

inline bool is_alternating(const Composition& c) {
    for (int p : c.parts)
        if (p < 1) return false;
    for (std::size_t i = 1; i < c.parts.size(); ++i)
        if ((c.parts[i] - c.parts[i - 1]) % 2 == 0) return false;
    return true;
}

inline bool is_alternating_odd_even(const Composition& c) {
    return !c.parts.empty() && is_alternating(c) && c.parts.front() % 2 == 1 &&
           c.parts.back() % 2 == 0;
}

enum class CompositionKind { Alt, AltOddEven };

/// C(n) (Alt) or C'(n) (AltOddEven), in lexicographic order of parts.
/// C(0) holds the empty composition.
inline std::vector<Composition> enum_compositions(int n, CompositionKind kind) {
    std::vector<Composition> out;
    if (n < 0) return out;
    Composition cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            if (kind == CompositionKind::Alt || is_alternating_odd_even(cur)) out.push_back(cur);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            if (!cur.parts.empty() && (p - cur.parts.back()) % 2 == 0) continue;
            if (cur.parts.empty() && kind == CompositionKind::AltOddEven && p % 2 == 0) continue;
            cur.parts.push_back(p);
            self(self, remaining - p);
            cur.parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

} // namespace airpockets

#endif // AIRPOCKETS_ORACLE_HPP
