#include <gtest/gtest.h>

#include "airpockets/catalog.hpp"
#include "airpockets/oracle.hpp"
#include "airpockets/verify.hpp"

using namespace airpockets;

namespace {

using TS = TruncatedSeries;

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

std::vector<long> head(const TS& s, int from, int to) {
    std::vector<long> out;
    for (int i = from; i <= to; ++i) out.push_back(s[i].get_num().get_si());
    return out;
}

Polynomial poly(std::initializer_list<long> c) { return Polynomial(c); }

} // namespace

TEST(Dap, PrintedTerms) {
    auto a = gf_dap(12);
    EXPECT_EQ(head(a, 2, 10), (std::vector<long>{1, 1, 2, 4, 8, 17, 37, 82, 185}));
    EXPECT_EQ(a[0], 0);
    EXPECT_EQ(a[1], 0);
}

TEST(Dap, FunctionalEquation) {
    const int n = 30;
    auto a = gf_dap(n);
    auto x = TS::monomial(n, 1), x2 = TS::monomial(n, 2);
    EXPECT_EQ(a, x2 + x2 * a + x * a + x * a * a);
    EXPECT_EQ(gf_prime(n), x * a);
}

TEST(Gdap, PrintedSeries) {
    for (const auto& p : printed_series()) {
        const int order = static_cast<int>(p.coeffs.size()) - 1;
        auto s = catalog_series(p.name, p.params, order);
        EXPECT_EQ(head(s, 0, order), p.coeffs) << p.label;
    }
}

TEST(Gdap, Identities) {
    const int n = 30;
    auto g = [&](GdapName k) { return gf_gdap(k, n); };
    EXPECT_EQ(g(GdapName::G), g(GdapName::Gp) + g(GdapName::Gm));
    EXPECT_EQ(g(GdapName::Gm2), g(GdapName::Gp1));
    EXPECT_EQ(g(GdapName::Gm1), g(GdapName::Gm) - g(GdapName::Gm2));
    EXPECT_EQ(g(GdapName::G), TS::one(n) + g(GdapName::f0) + g(GdapName::g0));
    EXPECT_EQ(g(GdapName::Gp), TS::one(n) + g(GdapName::Gp1) + g(GdapName::Gp2));
}

TEST(Prefix, PositiveTotal) {
    auto s = gf_prefix_positive_total(10);
    EXPECT_EQ(head(s, 0, 10), (std::vector<long>{0, 1, 1, 4, 9, 22, 55, 136, 339, 849, 2132}));
    EXPECT_EQ(s, gf_prefix_positive_sum(10));
    EXPECT_EQ(gf_prefix_positive(1, 5)[1], 1);
}

TEST(Prefix, ShiftCorrespondences) {
    const int n = 30;
    auto gp = gf_gdap(GdapName::Gp, n + 1) - TS::one(n + 1);
    EXPECT_EQ(gf_prefix_negative(-1, n), shift(gp, -1));
    EXPECT_EQ(gf_prefix_negative(-2, n), shift(gf_gdap(GdapName::Gp2, n + 2), -2));
}

TEST(Prefix, OracleByOrdinate) {
    const int n = 10;
    for (int k : {1, 2, 3}) {
        auto s = gf_prefix_positive(k, n);
        for (int i = k; i <= n; ++i) EXPECT_EQ(s[i], count_paths(i, FamilySpec::prefix(k)));
    }
    for (int k : {-1, -2, -3}) {
        auto s = gf_prefix_negative(k, n);
        for (int i = 0; i <= n; ++i) EXPECT_EQ(s[i], count_paths(i, FamilySpec::prefix(k)));
    }
}

TEST(Minorized, Oracle) {
    const int n = 12;
    for (int m = 0; m >= -3; --m) {
        auto s = gf_minorized(m, n);
        for (int i = 0; i <= n; ++i)
            EXPECT_EQ(s[i], count_paths(i, FamilySpec::prefix(std::nullopt, m))) << m << " " << i;
        EXPECT_EQ(s, minorized_by_system(m, n).total());
    }
    EXPECT_EQ(code_of([] { gf_minorized(1, 5); }), ErrorCode::BadParams);
}

TEST(Minorized, PerOrdinateFromSystem) {
    const int n = 10;
    auto sol = minorized_by_system(-1, n);
    for (int k = -1; k <= 3; ++k) {
        auto total = sol.f_at(k) + sol.g_at(k);
        for (int i = 0; i <= n; ++i) {
            if (k > i) continue;
            EXPECT_EQ(total[i], count_paths(i, FamilySpec::prefix(k, -1)));
        }
    }
}

TEST(DPolys, Printed) {
    EXPECT_EQ(poly_D_recurrence(0), poly({1}));
    EXPECT_EQ(poly_D_recurrence(1), poly({1, 0, -1}));
    EXPECT_EQ(poly_D_recurrence(2), poly({1, 0, -2, -1, 1}));
    EXPECT_EQ(poly_D_recurrence(3), poly({1, 0, -3, -2, 2, 2, -1}));
}

TEST(DPolys, ThreeRoutesAgree) {
    for (int t = 0; t <= 6; ++t) {
        EXPECT_EQ(poly_D_recurrence(t), poly_D_determinant(t)) << t;
        EXPECT_EQ(poly_D_closed_form(t, 30), poly_D_recurrence(t).to_series(30)) << t;
        EXPECT_NO_THROW(poly_D(t, 30));
    }
}

TEST(NPolys, TableEntries) {
    for (const auto& p : printed_polynomials()) {
        if (p.k < 0) continue;
        std::vector<Rational> c(p.coeffs.begin(), p.coeffs.end());
        Polynomial expected(std::move(c));
        EXPECT_EQ(poly_N_recurrence(p.k, p.t), expected) << p.label;
        EXPECT_EQ(poly_N_cramer(p.k, p.t), expected) << p.label;
    }
    EXPECT_EQ(poly_N_recurrence(3, 2), poly({0, 0, 1, 1, -1}));
    EXPECT_EQ(poly_N_recurrence(1, 3), poly({0, 1, 0, -2, -1, 1}));
    EXPECT_TRUE(poly_N_recurrence(7, 3).is_zero());
    EXPECT_EQ(code_of([] { poly_N_recurrence(8, 3); }), ErrorCode::IndexOutOfRange);
}

TEST(NPolys, RecurrenceMatchesCramerBeyondTable) {
    for (int t = 4; t <= 5; ++t)
        for (int k = 0; k <= 2 * t + 1; ++k)
            EXPECT_EQ(poly_N_recurrence(k, t), poly_N_cramer(k, t)) << k << "," << t;
}

TEST(Bounded, CramerMatchesSystemAndOracle) {
    const int n = 30;
    for (int t = 1; t <= 4; ++t) {
        auto sol = solve_window(0, t, n);
        for (int k = 0; k <= t; ++k) {
            EXPECT_EQ(gf_bounded_0t(k, t, BoundedKind::f, n), sol.f_at(k));
            EXPECT_EQ(gf_bounded_0t(k, t, BoundedKind::g, n), sol.g_at(k));
        }
        EXPECT_EQ(gf_g0t_closed_form(t, n), sol.g_at(0));
    }
    EXPECT_EQ(code_of([] { gf_bounded_0t(3, 2, BoundedKind::f, 5); }), ErrorCode::IndexOutOfRange);
}

TEST(Bounded, PrintedG0t) {
    EXPECT_EQ(head(gf_g0t_closed_form(1, 10), 0, 10),
              (std::vector<long>{0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
    EXPECT_EQ(head(gf_g0t_closed_form(2, 10), 2, 10),
              (std::vector<long>{1, 1, 1, 3, 2, 6, 6, 11, 16}));
}

TEST(Symmetric, DeterminantsAndProducts) {
    for (int t = 0; t <= 5; ++t) EXPECT_EQ(poly_Dprime_determinant(t), poly_D_recurrence(2 * t));
    for (int t = 1; t <= 3; ++t) {
        EXPECT_EQ(poly_Ntilde_cramer(0, t), poly_D_recurrence(t - 1) * poly_D_recurrence(t));
        EXPECT_EQ(poly_Ntilde_cramer(2 * t + 1, t),
                  poly_D_recurrence(t - 1) * poly_N_recurrence(t + 1, t));
    }
}

TEST(Symmetric, FormulaMatchesSystem) {
    const int n = 30;
    for (int t = 1; t <= 4; ++t) {
        auto sol = solve_window(-t, t, n);
        EXPECT_EQ(gf_bounded_sym_formula(t, n), sol.f_at(0) + sol.g_at(0));
        EXPECT_EQ(gf_bounded_sym(t, n), sol.f_at(0) + sol.g_at(0));
    }
}

TEST(SetH, PrintedAndQuadratic) {
    auto b = gf_H(12);
    EXPECT_EQ(head(b, 0, 12), (std::vector<long>{1, 0, 1, 1, 2, 3, 6, 10, 20, 36, 72, 136, 273}));
    const int n = 30;
    auto bb = gf_H(n);
    auto lhs = TS::monomial(n, 2) * bb * Rational(2) - TS::polynomial(n, {1, 0, 0, -1});
    EXPECT_EQ(lhs * lhs, TS::polynomial(n, {1, 0, -4, -2, 0, 0, 1}));
}

TEST(SetH, BoundedHeights) {
    const int n = 14;
    auto b = gf_H_bounded_upto(6, n);
    EXPECT_EQ(b[0], TS::one(n));
    EXPECT_EQ(b[1], div(TS::one(n), TS::polynomial(n, {1, 0, -1})));
    for (int k = 1; k <= 6; ++k) {
        EXPECT_EQ(H_backward_step(b[k]), b[k - 1].truncated(n - 1)) << k;
        for (int i = 0; i <= n; ++i) {
            std::size_t count = 0;
            for (const auto& p : enum_H(i)) count += p.max_height() <= k;
            EXPECT_EQ(b[k][i], count) << "k=" << k << " n=" << i;
        }
    }
    EXPECT_EQ(gf_H_bounded(n, n), gf_H(n));
}

TEST(SetH, OracleCounts) {
    auto b = gf_H(14);
    auto h = enum_H_upto(14);
    for (int n = 0; n <= 14; ++n) EXPECT_EQ(b[n], h[n].size()) << n;
}

TEST(Catalog, AllEntriesIntegral) {
    for (const auto& e : catalog_entries()) {
        CatalogParams p;
        for (char c : e.params) {
            if (c == 'k') p.k = e.name == "prefix" ? -1 : 1;
            if (c == 't') p.t = 2;
            if (c == 'm') p.m = -1;
        }
        auto s = catalog_series(e.name, p, 30);
        EXPECT_EQ(s.order(), 30) << e.name;
        EXPECT_TRUE(s.is_integral()) << e.name;
    }
}

TEST(Catalog, Errors) {
    EXPECT_EQ(code_of([] { catalog_series("nosuch", {}, 5); }), ErrorCode::UnknownName);
    EXPECT_EQ(code_of([] { catalog_series("T", {}, 5); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { catalog_series("N", {9, 2, {}}, 5); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { catalog_series("prefix", {0, {}, {}}, 5); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { catalog_series("minorized", {{}, {}, 2}, 5); }), ErrorCode::BadParams);
    EXPECT_EQ(code_of([] { catalog_series("G", {}, -1); }), ErrorCode::BadParams);
}

TEST(Catalog, Deterministic) {
    EXPECT_EQ(catalog_series("sym", {{}, 3, {}}, 25), catalog_series("sym", {{}, 3, {}}, 25));
    EXPECT_EQ(catalog_series("G", {}, 25).truncated(10), catalog_series("G", {}, 10));
}
