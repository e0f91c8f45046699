#ifndef AIRPOCKETS_CATALOG_HPP
#define AIRPOCKETS_CATALOG_HPP

// Generating functions for air-pocket paths, evaluated as truncated series.
// Where two independent routes exist (closed form vs. linear system,
// recurrence vs. determinant) both are exposed so callers can compare them.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "airpockets/error.hpp"
#include "airpockets/series.hpp"
#include "airpockets/series_system.hpp"

namespace airpockets {

namespace detail {

inline TruncatedSeries fit(const TruncatedSeries& a, int order) { return a.truncated(order); }

inline int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    return std::min(a.order(), b.order());
}
inline TruncatedSeries plus(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = min_order(a, b);
    return fit(a, n) + fit(b, n);
}
inline TruncatedSeries minus(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = min_order(a, b);
    return fit(a, n) - fit(b, n);
}
inline TruncatedSeries times(const TruncatedSeries& a, const TruncatedSeries& b) {
    int n = min_order(a, b);
    return fit(a, n) * fit(b, n);
}

inline TruncatedSeries poly(int order, std::initializer_list<long> c) {
    return TruncatedSeries::polynomial(order, c);
}

inline void expect_equal(const TruncatedSeries& a, const TruncatedSeries& b, int order,
                         const std::string& what) {
    if (fit(a, order) != fit(b, order))
        throw Error(ErrorCode::CrossCheckFailed, what + ": " + fit(a, order).to_string() +
                                                     " != " + fit(b, order).to_string());
}

inline void check_order(int order) {
    if (order < 0) throw Error(ErrorCode::BadParams, "order must be >= 0");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Building blocks

/// 1 - 2x - x^2 - 2x^3 + x^4, the radicand shared by most closed forms.
inline TruncatedSeries radicand(int order) { return detail::poly(order, {1, -2, -1, -2, 1}); }

/// The positive square root of the radicand (named R or W in the formulas).
inline TruncatedSeries radical(int order) { return sqrt(radicand(order)); }

/// s2 = r2 = (1 + x - x^2 - W) / (2x), the root with a Taylor expansion at 0.
inline TruncatedSeries s2(int order) {
    detail::check_order(order);
    const int n = order + 1;
    auto num = detail::poly(n, {1, 1, -1}) - radical(n);
    return shift(num, -1) * Rational(1, 2);
}

/// Generalized Catalan numbers: (1 - x - x^2 - R) / (2x).
inline TruncatedSeries gf_dap(int order) {
    detail::check_order(order);
    const int n = order + 1;
    auto num = detail::poly(n, {1, -1, -1}) - radical(n);
    return shift(num, -1) * Rational(1, 2);
}

/// Prime paths: P = x A.
inline TruncatedSeries gf_prime(int order) {
    return shift(gf_dap(order), 1);
}

// ---------------------------------------------------------------------------
// Grand paths by first and last step

enum class GdapName { Gp1, Gp2, Gp, Gm, G, Gm1, Gm2, f0, g0 };

inline const std::vector<std::pair<GdapName, std::string>>& gdap_names() {
    static const std::vector<std::pair<GdapName, std::string>> names = {
        {GdapName::Gp1, "Gp1"}, {GdapName::Gp2, "Gp2"}, {GdapName::Gp, "Gp"},
        {GdapName::Gm, "Gm"},   {GdapName::G, "G"},     {GdapName::Gm1, "Gm1"},
        {GdapName::Gm2, "Gm2"}, {GdapName::f0, "f0"},   {GdapName::g0, "g0"},
    };
    return names;
}

/// The nine grand-path series, each to the same order.
struct GdapFamily {
    std::map<GdapName, TruncatedSeries> series;
    const TruncatedSeries& operator[](GdapName n) const { return series.at(n); }
};

/// Closed forms obtained by solving the first/last-step systems.
inline GdapFamily gdap_closed_forms(int order) {
    detail::check_order(order);
    using detail::poly;
    const int n = order + 1;
    const auto w = radical(n);
    const auto rad = radicand(n);
    const auto one_m_x_p_x2 = poly(n, {1, -1, 1});
    const auto one_p_x_m_x2 = poly(n, {1, 1, -1});

    GdapFamily out;
    auto& s = out.series;
    s[GdapName::Gp1] = div(poly(n, {0, 0, 1}), w);
    s[GdapName::Gp2] = div(poly(n, {1, -1, -1}) * w - rad, 2 * rad);
    s[GdapName::Gp] = div(one_m_x_p_x2 * w + rad, 2 * rad);
    // G = (1 - x + x^2 + R) / ((1 + x - x^2 + R) R) and G- = Q G with
    // Q = (1 - x + x^2 - R) / 2.
    s[GdapName::Gm] = div((one_m_x_p_x2 - w) * (one_m_x_p_x2 + w), 2 * (one_p_x_m_x2 + w) * w);
    s[GdapName::G] = div(one_m_x_p_x2 + w, (one_p_x_m_x2 + w) * w);
    s[GdapName::Gm2] = s[GdapName::Gp1];
    s[GdapName::Gm1] = s[GdapName::Gm] - s[GdapName::Gm2];
    s[GdapName::f0] = div(one_m_x_p_x2 + w, 2 * w) - TruncatedSeries::one(n);
    s[GdapName::g0] = div(shift(one_p_x_m_x2 - w, 1), 2 * w);
    for (auto& [name, series] : s) series = detail::fit(series, order);
    return out;
}

/// Same series obtained by solving the decomposition systems numerically
/// with Q = x^2 + P, i.e. G+1 = G+ Q, G+2 = G+2 Q + G+1 Q / x,
/// G+ = 1 + G+1 + G+2, then G- = Q G and G = G+ + Q G.
inline GdapFamily gdap_by_system(int order) {
    detail::check_order(order);
    const int n = order + 2;
    auto q = gf_prime(n) + TruncatedSeries::monomial(n, 2);
    auto q_over_x = shift(q, -1);
    const int m = n - 1;
    q = detail::fit(q, m);
    const auto one = TruncatedSeries::one(m);
    const auto zero = TruncatedSeries(m);

    SeriesSystem plus_sys;
    plus_sys.matrix = {{one, zero, -q}, {-q_over_x, one - q, zero}, {-one, -one, one}};
    plus_sys.rhs = {zero, zero, one};
    auto plus = solve_series_system(plus_sys);

    SeriesSystem all_sys;
    all_sys.matrix = {{one, -q}, {zero, one - q}};
    all_sys.rhs = {zero, plus[2]};
    auto all = solve_series_system(all_sys);

    GdapFamily out;
    auto& s = out.series;
    s[GdapName::Gp1] = plus[0];
    s[GdapName::Gp2] = plus[1];
    s[GdapName::Gp] = plus[2];
    s[GdapName::Gm] = all[0];
    s[GdapName::G] = all[1];
    s[GdapName::Gm2] = s[GdapName::Gp1];
    s[GdapName::Gm1] = s[GdapName::Gm] - s[GdapName::Gm2];
    s[GdapName::f0] = s[GdapName::Gp2] + s[GdapName::Gm2];
    s[GdapName::g0] = s[GdapName::Gp1] + s[GdapName::Gm1];
    for (auto& [name, series] : s) series = detail::fit(series, order);
    return out;
}

/// One grand-path series from its closed form, re-derived from the system
/// and checked against it together with G = G+ + G-, G = 1 + f0 + g0.
inline TruncatedSeries gf_gdap(GdapName name, int order) {
    auto closed = gdap_closed_forms(order);
    auto solved = gdap_by_system(order);
    for (const auto& [key, label] : gdap_names())
        detail::expect_equal(closed[key], solved[key], order, label + " closed form vs system");
    detail::expect_equal(closed[GdapName::G], closed[GdapName::Gp] + closed[GdapName::Gm], order,
                         "G = G+ + G-");
    detail::expect_equal(closed[GdapName::G],
                         TruncatedSeries::one(order) + closed[GdapName::f0] +
                             closed[GdapName::g0],
                         order, "G = 1 + f0 + g0");
    return closed[name];
}

// ---------------------------------------------------------------------------
// Prefixes ending at a fixed ordinate

/// x^k s2^(k+1): nonnegative prefixes ending at ordinate k.
inline TruncatedSeries gf_T(int k, int order) {
    if (k < 0) throw Error(ErrorCode::BadParams, "T_k needs k >= 0");
    return shift(pow(s2(order), k + 1), k);
}

/// Prefixes of grand paths ending at ordinate k >= 1: (1 + f0) T_k.
inline TruncatedSeries gf_prefix_positive(int k, int order) {
    if (k < 1) throw Error(ErrorCode::BadParams, "positive ordinate expected");
    auto f0 = gdap_closed_forms(order)[GdapName::f0];
    return (TruncatedSeries::one(order) + f0) * gf_T(k, order);
}

/// Prefixes ending at any positive ordinate, as a single closed form:
/// (x^2 - x - 1 + W)^2 / (4 x W).
inline TruncatedSeries gf_prefix_positive_total(int order) {
    detail::check_order(order);
    const int n = order + 1;
    auto w = radical(n);
    auto base = detail::poly(n, {-1, -1, 1}) + w;
    return detail::fit(div(base * base, shift(4 * w, 1)), order);
}

/// The same total as a finite sum over k = 1..order of gf_prefix_positive.
inline TruncatedSeries gf_prefix_positive_sum(int order) {
    detail::check_order(order);
    TruncatedSeries total(order);
    if (order == 0) return total;
    auto f0 = gdap_closed_forms(order)[GdapName::f0];
    auto lead = TruncatedSeries::one(order) + f0;
    auto s = s2(order);
    auto power = s; // s2^(k+1), starting at k = 1
    for (int k = 1; k <= order; ++k) {
        power *= s;
        total += lead * shift(power, k);
    }
    return total;
}

/// Prefixes ending at ordinate k <= -1: R_k (1 + g0 / x) with
/// R_k = (s2 - 1) s2^(-k-1) / x.
inline TruncatedSeries gf_prefix_negative(int k, int order) {
    if (k > -1) throw Error(ErrorCode::BadParams, "negative ordinate expected");
    detail::check_order(order);
    const int n = order + 2;
    auto s = s2(n);
    auto rk = shift((s - TruncatedSeries::one(n)) * pow(s, -k - 1), -1);
    auto g0 = gdap_closed_forms(n)[GdapName::g0];
    auto tail = TruncatedSeries::one(n - 1) + shift(g0, -1);
    return detail::fit(detail::times(rk, tail), order);
}

// ---------------------------------------------------------------------------
// Prefixes staying weakly above y = m

/// (r2^(-m) - r2^(-1-m) - x^2) / x^3.
inline TruncatedSeries gf_minorized(int m, int order) {
    if (m > 0) throw Error(ErrorCode::BadParams, "floor m must be <= 0");
    detail::check_order(order);
    const int n = order + 3;
    auto r2 = s2(n);
    auto num = pow(r2, -m) - pow(r2, -1 - m) - TruncatedSeries::monomial(n, 2);
    return detail::fit(shift(num, -3), order);
}

// ---------------------------------------------------------------------------
// Height-window systems

/// Coefficient matrix of the window system on ordinates lo..hi (lo <= 0 <= hi)
/// with unknowns f_lo..f_hi, g_lo..g_hi:
///   f_k = [k = 0] + x (f_{k-1} + g_{k-1}),   g_k = x (f_{k+1} + ... + f_hi).
/// For the window [0, t] this is A_t; for [-t, t] it is A'_t (= A_{2t}).
inline PolyMatrix window_matrix(int lo, int hi) {
    const int w = hi - lo + 1;
    const std::size_t dim = 2 * static_cast<std::size_t>(w);
    PolyMatrix a(dim, std::vector<Polynomial>(dim));
    const Polynomial x = Polynomial::x();
    for (int k = lo; k <= hi; ++k) {
        const int fr = k - lo;
        const int gr = w + k - lo;
        a[fr][fr] = Polynomial{-1};
        if (k > lo) {
            a[fr][fr - 1] = x;
            a[fr][gr - 1] = x;
        }
        a[gr][gr] = Polynomial{-1};
        for (int j = k + 1; j <= hi; ++j) a[gr][j - lo] = x;
    }
    return a;
}

inline std::vector<Polynomial> window_rhs(int lo, int hi) {
    std::vector<Polynomial> b(2 * static_cast<std::size_t>(hi - lo + 1));
    b[-lo] = Polynomial{-1};
    return b;
}

struct WindowSolution {
    int lo = 0;
    int hi = 0;
    std::vector<TruncatedSeries> f; // f[k - lo]
    std::vector<TruncatedSeries> g; // g[k - lo]

    const TruncatedSeries& f_at(int k) const { return f.at(k - lo); }
    const TruncatedSeries& g_at(int k) const { return g.at(k - lo); }
    TruncatedSeries total() const {
        TruncatedSeries t(f.front().order());
        for (std::size_t i = 0; i < f.size(); ++i) t += f[i] + g[i];
        return t;
    }
};

/// Solves the window system by elimination over series.
inline WindowSolution solve_window(int lo, int hi, int order) {
    if (lo > 0 || hi < 0) throw Error(ErrorCode::BadParams, "window must contain 0");
    detail::check_order(order);
    auto sys = SeriesSystem::from_polynomials(window_matrix(lo, hi), window_rhs(lo, hi), order);
    auto x = solve_series_system(sys);
    WindowSolution out{lo, hi, {}, {}};
    const std::size_t w = static_cast<std::size_t>(hi - lo + 1);
    out.f.assign(x.begin(), x.begin() + w);
    out.g.assign(x.begin() + w, x.end());
    return out;
}

/// Per-ordinate counts of prefixes above y = m from the window [m, order];
/// a prefix of length <= order cannot climb above `order`.
inline WindowSolution minorized_by_system(int m, int order) {
    if (m > 0) throw Error(ErrorCode::BadParams, "floor m must be <= 0");
    return solve_window(m, std::max(order, 0), order);
}

// ---------------------------------------------------------------------------
// D_t and N_k^t for the window [0, t]

/// D_t from D_{t+2} = (1 + x - x^2) D_{t+1} - x D_t, D_0 = 1, D_1 = 1 - x^2.
inline Polynomial poly_D_recurrence(int t) {
    if (t < 0) throw Error(ErrorCode::IndexOutOfRange, "t must be >= 0");
    Polynomial prev{1}, cur{1, 0, -1};
    if (t == 0) return prev;
    const Polynomial a{1, 1, -1};
    const Polynomial x = Polynomial::x();
    for (int i = 1; i < t; ++i) {
        Polynomial next = a * cur - x * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// det(A_t) directly.
inline Polynomial poly_D_determinant(int t) {
    if (t < 0) throw Error(ErrorCode::IndexOutOfRange, "t must be >= 0");
    return determinant(window_matrix(0, t));
}

/// D_t from its closed form in W.
inline TruncatedSeries poly_D_closed_form(int t, int order) {
    if (t < 0) throw Error(ErrorCode::IndexOutOfRange, "t must be >= 0");
    detail::check_order(order);
    using detail::poly;
    const int n = order + t + 2;
    auto w = radical(n);
    auto first = div(shift(w + poly(n, {-1, 1, -1}), t + 1), pow(w + poly(n, {1, 1, -1}), t + 1));
    auto second = div(shift(w + poly(n, {1, -1, 1}), t + 1), pow(w + poly(n, {-1, -1, 1}), t + 1));
    if (t % 2 == 0) second = -second;
    auto sum = detail::plus(first, second);
    Rational scale = 1;
    for (int i = 0; i < t; ++i) scale *= 2;
    return detail::fit(div(sum * scale, detail::fit(w, sum.order())), order);
}

/// D_t with all three routes checked against each other.
inline TruncatedSeries poly_D(int t, int order) {
    auto rec = poly_D_recurrence(t);
    if (rec != poly_D_determinant(t))
        throw Error(ErrorCode::CrossCheckFailed, "D_" + std::to_string(t) +
                                                     ": recurrence vs determinant");
    auto s = rec.to_series(order);
    detail::expect_equal(s, poly_D_closed_form(t, order), order,
                         "D_" + std::to_string(t) + ": recurrence vs closed form");
    return s;
}

/// N_k^t from its recurrences in t.
inline Polynomial poly_N_recurrence(int k, int t) {
    if (t < 0 || k < 0 || k > 2 * t + 1)
        throw Error(ErrorCode::IndexOutOfRange,
                    "N_k^t needs 0 <= k <= 2t+1 (k=" + std::to_string(k) + ", t=" +
                        std::to_string(t) + ")");
    const Polynomial x = Polynomial::x();
    if (k == 0) return poly_D_recurrence(t);
    if (k == 2 * t + 1) return {};
    if (k <= t) return x * poly_N_recurrence(k - 1, t - 1);
    if (k == t + 1) return x * x * poly_N_recurrence(0, t - 1) + x * poly_N_recurrence(t, t - 1);
    return x * poly_N_recurrence(k - 2, t - 1);
}

/// det A_t(k), the matrix A_t with column k+1 replaced by the right-hand side.
inline Polynomial cramer_numerator(int lo, int hi, int column) {
    auto a = window_matrix(lo, hi);
    auto b = window_rhs(lo, hi);
    if (column < 0 || column >= static_cast<int>(a.size()))
        throw Error(ErrorCode::IndexOutOfRange, "column out of range");
    for (std::size_t r = 0; r < a.size(); ++r) a[r][column] = b[r];
    return determinant(std::move(a));
}

inline Polynomial poly_N_cramer(int k, int t) {
    if (t < 0 || k < 0 || k > 2 * t + 1)
        throw Error(ErrorCode::IndexOutOfRange, "N_k^t needs 0 <= k <= 2t+1");
    return cramer_numerator(0, t, k);
}

/// N_k^t with the recurrence and Cramer routes checked against each other.
inline TruncatedSeries poly_N(int k, int t, int order) {
    auto rec = poly_N_recurrence(k, t);
    if (rec != poly_N_cramer(k, t))
        throw Error(ErrorCode::CrossCheckFailed,
                    "N_" + std::to_string(k) + "^" + std::to_string(t) + ": recurrence vs Cramer");
    return rec.to_series(order);
}

/// Closed form of N_{t+1}^t:
///   2^(t+2) x^(t+3) (-1)^t / (W (x^2-x-1)^2 - W^3)
///     * (1/(x^2-x-1+W)^t - 1/(x^2-x-1-W)^t).
inline TruncatedSeries poly_N_closed_form(int t, int order) {
    if (t < 0) throw Error(ErrorCode::IndexOutOfRange, "t must be >= 0");
    detail::check_order(order);
    using detail::poly;
    const int n = order + t + 2;
    auto w = radical(n);
    auto q = poly(n, {-1, -1, 1});
    auto den0 = w * q * q - w * w * w;
    Rational scale = t % 2 == 0 ? 1 : -1;
    for (int i = 0; i < t + 2; ++i) scale *= 2;
    auto c = TruncatedSeries::monomial(n, t + 3, scale);
    auto first = div(c, den0 * pow(q + w, t));
    auto second = div(c, den0 * pow(q - w, t));
    return detail::fit(detail::minus(first, second), order);
}

enum class BoundedKind { f, g };

/// f_k^t or g_k^t on the window [0, t], as N/D_t (Cramer) checked against
/// the elimination solve of the same system.
inline TruncatedSeries gf_bounded_0t(int k, int t, BoundedKind kind, int order) {
    if (t < 1 || k < 0 || k > t)
        throw Error(ErrorCode::IndexOutOfRange, "need t >= 1 and 0 <= k <= t");
    detail::check_order(order);
    const int idx = kind == BoundedKind::f ? k : t + 1 + k;
    auto cramer = div(poly_N_recurrence(idx, t).to_series(order), poly_D(t, order));
    auto sol = solve_window(0, t, order);
    const auto& semantic = kind == BoundedKind::f ? sol.f_at(k) : sol.g_at(k);
    detail::expect_equal(cramer, semantic, order, "bounded [0,t]: Cramer vs elimination");
    return cramer;
}

/// Nonempty paths in [0, t] back on the axis, N_{t+1}^t / D_t, from the
/// closed forms.
inline TruncatedSeries gf_g0t_closed_form(int t, int order) {
    return div(poly_N_closed_form(t, order), poly_D_closed_form(t, order));
}

// ---------------------------------------------------------------------------
// The symmetric window [-t, t]

/// det A'_t computed directly on the symmetric window.
inline Polynomial poly_Dprime_determinant(int t) {
    if (t < 0) throw Error(ErrorCode::IndexOutOfRange, "t must be >= 0");
    return determinant(window_matrix(-t, t));
}

/// Ñ_k^t: A'_t with column k+t+1 replaced; k in -t..3t+1 (g_k sits at 2t+1+k).
inline Polynomial poly_Ntilde_cramer(int k, int t) {
    if (t < 0 || k < -t || k > 3 * t + 1)
        throw Error(ErrorCode::IndexOutOfRange, "Ñ_k^t needs -t <= k <= 3t+1");
    return cramer_numerator(-t, t, k + t);
}

/// D_{t-1} (D_t + N_{t+1}^t) / D_{2t}: closed paths in [-t, t], ε included.
inline TruncatedSeries gf_bounded_sym_formula(int t, int order) {
    if (t < 1) throw Error(ErrorCode::IndexOutOfRange, "t must be >= 1");
    detail::check_order(order);
    auto num = poly_D_recurrence(t - 1) * (poly_D_recurrence(t) + poly_N_recurrence(t + 1, t));
    return div(num.to_series(order), poly_D_recurrence(2 * t).to_series(order));
}

/// f_0^t + g_0^t on [-t, t] from the product formula, checked against the
/// elimination solve of the window system.
inline TruncatedSeries gf_bounded_sym(int t, int order) {
    auto formula = gf_bounded_sym_formula(t, order);
    auto sol = solve_window(-t, t, order);
    detail::expect_equal(formula, sol.f_at(0) + sol.g_at(0), order,
                         "bounded [-t,t]: formula vs elimination");
    return formula;
}

/// f_k^t or g_k^t on [-t, t] for any k, from the elimination solve.
inline TruncatedSeries gf_bounded_sym_at(int k, int t, BoundedKind kind, int order) {
    if (t < 1 || k < -t || k > t)
        throw Error(ErrorCode::IndexOutOfRange, "need t >= 1 and -t <= k <= t");
    auto sol = solve_window(-t, t, order);
    return kind == BoundedKind::f ? sol.f_at(k) : sol.g_at(k);
}

// ---------------------------------------------------------------------------
// The set H

/// (1 - x^3 - sqrt(x^6 - 2x^3 - 4x^2 + 1)) / (2x^2).
inline TruncatedSeries gf_H(int order) {
    detail::check_order(order);
    const int n = order + 2;
    auto root = sqrt(detail::poly(n, {1, 0, -4, -2, 0, 0, 1}));
    auto num = detail::poly(n, {1, 0, 0, -1}) - root;
    return detail::fit(shift(num, -2) * Rational(1, 2), order);
}

/// B_0..B_kmax, where B_k counts elements of H of height at most k
/// (ε included). Built forward: B_1 = 1/(1 - x^2), and for k >= 2
/// A_k = x A_{k-1} B_k with B_k = B_{k-1} + A_k, i.e.
/// B_k = B_{k-1} / (1 - x A_{k-1}).
inline std::vector<TruncatedSeries> gf_H_bounded_upto(int kmax, int order) {
    if (kmax < 0) throw Error(ErrorCode::BadParams, "k must be >= 0");
    detail::check_order(order);
    std::vector<TruncatedSeries> b;
    b.push_back(TruncatedSeries::one(order));
    if (kmax == 0) return b;
    const auto one = TruncatedSeries::one(order);
    b.push_back(inverse(one - TruncatedSeries::monomial(order, 2)));
    for (int k = 2; k <= kmax; ++k) {
        auto a_prev = b[k - 1] - b[k - 2];
        b.push_back(div(b[k - 1], one - shift(a_prev, 1)));
    }
    return b;
}

inline TruncatedSeries gf_H_bounded(int k, int order) {
    return gf_H_bounded_upto(k, order).back();
}

/// ((1 - x^3 + x) B_k - 1) / (x^2 B_k + x); should reproduce B_{k-1}.
/// Loses one order to the division by x.
inline TruncatedSeries H_backward_step(const TruncatedSeries& bk) {
    const int n = bk.order();
    auto num = detail::poly(n, {1, 1, 0, -1}) * bk - TruncatedSeries::one(n);
    auto den = shift(bk, 2) + TruncatedSeries::monomial(n, 1);
    return div(num, den);
}

// ---------------------------------------------------------------------------
// Name-based lookup

struct CatalogParams {
    std::optional<int> k;
    std::optional<int> t;
    std::optional<int> m;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::vector<char> params; // subset of {'k','t','m'}
};

inline const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"A", "Dyck paths with air pockets", {}},
        {"P", "prime paths", {}},
        {"Gp1", "grand paths starting up, ending down", {}},
        {"Gp2", "grand paths starting up, ending up", {}},
        {"Gp", "grand paths starting up, plus the empty path", {}},
        {"Gm", "grand paths starting down", {}},
        {"G", "all grand paths", {}},
        {"Gm1", "grand paths starting down, ending down", {}},
        {"Gm2", "grand paths starting down, ending up", {}},
        {"f0", "nonempty grand paths ending with an up-step", {}},
        {"g0", "nonempty grand paths ending with a down-step", {}},
        {"s2", "the root r2 = s2", {}},
        {"W", "square root of the common radicand", {}},
        {"T", "nonnegative prefixes ending at ordinate k", {'k'}},
        {"prefix", "prefixes ending at ordinate k != 0", {'k'}},
        {"prefix_positive", "prefixes ending at a positive ordinate", {}},
        {"minorized", "prefixes staying above y = m", {'m'}},
        {"D", "det A_t", {'t'}},
        {"N", "N_k^t", {'k', 't'}},
        {"fkt", "f_k^t on [0, t]", {'k', 't'}},
        {"gkt", "g_k^t on [0, t]", {'k', 't'}},
        {"g0t", "nonempty closed paths in [0, t]", {'t'}},
        {"Dprime", "det A'_t = D_{2t}", {'t'}},
        {"Ntilde", "Ñ_k^t on [-t, t]", {'k', 't'}},
        {"sym", "closed paths in [-t, t], empty path included", {'t'}},
        {"sym_f", "f_k^t on [-t, t]", {'k', 't'}},
        {"sym_g", "g_k^t on [-t, t]", {'k', 't'}},
        {"H", "the set H", {}},
        {"Hk", "elements of H of height at most k", {'k'}},
    };
    return entries;
}

/// Evaluates a catalog entry by name.
inline TruncatedSeries catalog_series(const std::string& name, const CatalogParams& p, int order) {
    const CatalogEntry* entry = nullptr;
    for (const auto& e : catalog_entries())
        if (e.name == name) entry = &e;
    if (!entry) throw Error(ErrorCode::UnknownName, "no catalog series named '" + name + "'");
    for (char c : entry->params) {
        bool present = (c == 'k' && p.k) || (c == 't' && p.t) || (c == 'm' && p.m);
        if (!present)
            throw Error(ErrorCode::BadParams, name + " needs parameter " + std::string(1, c));
    }
    if (order < 0) throw Error(ErrorCode::BadParams, "order must be >= 0");

    for (const auto& [key, label] : gdap_names())
        if (label == name) return gf_gdap(key, order);
    if (name == "A") return gf_dap(order);
    if (name == "P") return gf_prime(order);
    if (name == "s2") return s2(order);
    if (name == "W") return radical(order);
    if (name == "T") {
        if (*p.k < 0) throw Error(ErrorCode::BadParams, "T needs k >= 0");
        return gf_T(*p.k, order);
    }
    if (name == "prefix") {
        if (*p.k == 0) throw Error(ErrorCode::BadParams, "use f0/g0 for ordinate 0");
        return *p.k > 0 ? gf_prefix_positive(*p.k, order) : gf_prefix_negative(*p.k, order);
    }
    if (name == "prefix_positive") return gf_prefix_positive_total(order);
    if (name == "minorized") {
        if (*p.m > 0) throw Error(ErrorCode::BadParams, "minorized needs m <= 0");
        return gf_minorized(*p.m, order);
    }
    auto need_t = [&](int lo) {
        if (*p.t < lo || *p.t > 64)
            throw Error(ErrorCode::BadParams, name + " needs " + std::to_string(lo) +
                                                  " <= t <= 64");
    };
    auto guard = [&](auto&& f) {
        try {
            return f();
        } catch (const Error& e) {
            if (e.code() == ErrorCode::IndexOutOfRange) throw Error(ErrorCode::BadParams, e.what());
            throw;
        }
    };
    if (name == "D") return need_t(0), guard([&] { return poly_D(*p.t, order); });
    if (name == "N") return need_t(0), guard([&] { return poly_N(*p.k, *p.t, order); });
    if (name == "fkt")
        return need_t(1), guard([&] { return gf_bounded_0t(*p.k, *p.t, BoundedKind::f, order); });
    if (name == "gkt")
        return need_t(1), guard([&] { return gf_bounded_0t(*p.k, *p.t, BoundedKind::g, order); });
    if (name == "g0t") return need_t(1), guard([&] {
        auto closed = gf_g0t_closed_form(*p.t, order);
        detail::expect_equal(closed, gf_bounded_0t(0, *p.t, BoundedKind::g, order), order,
                             "g0t closed form vs Cramer");
        return closed;
    });
    if (name == "Dprime") return need_t(0), guard([&] {
        auto d = poly_Dprime_determinant(*p.t);
        if (d != poly_D_recurrence(2 * *p.t))
            throw Error(ErrorCode::CrossCheckFailed, "D'_t != D_{2t}");
        return d.to_series(order);
    });
    if (name == "Ntilde")
        return need_t(0), guard([&] { return poly_Ntilde_cramer(*p.k, *p.t).to_series(order); });
    if (name == "sym") return need_t(1), guard([&] { return gf_bounded_sym(*p.t, order); });
    if (name == "sym_f")
        return need_t(1),
               guard([&] { return gf_bounded_sym_at(*p.k, *p.t, BoundedKind::f, order); });
    if (name == "sym_g")
        return need_t(1),
               guard([&] { return gf_bounded_sym_at(*p.k, *p.t, BoundedKind::g, order); });
    if (name == "H") return gf_H(order);
    if (name == "Hk") {
        if (*p.k < 0) throw Error(ErrorCode::BadParams, "Hk needs k >= 0");
        return gf_H_bounded(*p.k, order);
    }
    throw Error(ErrorCode::UnknownName, name);
}

} // namespace airpockets

#endif // AIRPOCKETS_CATALOG_HPP
