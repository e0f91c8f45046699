#include <gtest/gtest.h>

#include "airpockets/bijections.hpp"
#include "airpockets/verify.hpp"

using namespace airpockets;

namespace {

LatticePath P(const char* s) { return parse_path(s); }
Composition C(std::vector<int> parts) { return Composition{std::move(parts)}; }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

} // namespace

TEST(BlockDecompose, FigureThreeMiddle) {
    auto d = block_decompose(P("UD2UUDUD2UDUDUU"));
    std::vector<LatticePath> expected{P("U"), P("D2U"), P("UDU"), P("D2UDUDU"), P("U")};
    EXPECT_EQ(d.blocks, expected);
    EXPECT_EQ(d.lengths(), (std::vector<int>{1, 2, 3, 6, 1}));
}

TEST(BlockDecompose, Degenerate) {
    auto one = block_decompose(P("UDUD"));
    ASSERT_EQ(one.blocks.size(), 1u);
    EXPECT_EQ(one.lengths(), std::vector<int>{4});
    EXPECT_TRUE(block_decompose(LatticePath{}).blocks.empty());
}

TEST(BlockDecompose, Reassembles) {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& p : enum_paths(n, FamilySpec::bounded(-1, 2))) {
            LatticePath joined;
            for (const auto& b : block_decompose(p).blocks) joined = concat(joined, b);
            EXPECT_EQ(joined, p);
        }
    }
}

TEST(Psi, Examples) {
    EXPECT_EQ(psi(P("UUD2UUDUD2UDUDUUD2")), C({1, 2, 3, 6, 1}));
    EXPECT_EQ(psi(P("UD")), C({}));
    EXPECT_EQ(psi(P("UDUD")), C({2}));
    EXPECT_EQ(code_of([] { psi(P("UDU")); }), ErrorCode::NotInFamily);
    EXPECT_EQ(code_of([] { psi(P("UUUDDD")); }), ErrorCode::ConsecutiveDowns);
    EXPECT_EQ(code_of([] { psi(P("UUUD3")); }), ErrorCode::NotInFamily);
    EXPECT_EQ(code_of([] { psi(LatticePath{}); }), ErrorCode::NotInFamily);
}

TEST(PsiInv, Examples) {
    EXPECT_EQ(psi_inv(C({1, 2, 3, 6, 1})), P("UUD2UUDUD2UDUDUUD2"));
    EXPECT_EQ(psi_inv(C({3})), P("UUDUD2"));
    EXPECT_EQ(psi_inv(C({2})), P("UDUD"));
    EXPECT_EQ(psi_inv(C({})), P("UD"));
    EXPECT_EQ(code_of([] { psi_inv(C({2, 2})); }), ErrorCode::NotAlternating);
}

TEST(Phi, Examples) {
    EXPECT_EQ(phi(P("UD2UUDUD2UDUDUUD")), C({3, 6, 3, 2, 1, 2}));
    EXPECT_EQ(phi(LatticePath{}), C({1, 2}));
    EXPECT_EQ(phi(P("UDUD")), C({5, 2}));
    EXPECT_EQ(phi(P("DUDU")), C({1, 6}));
    EXPECT_EQ(code_of([] { phi(P("UUD2")); }), ErrorCode::NotInFamily);
}

TEST(PhiInv, Examples) {
    EXPECT_EQ(phi_inv(C({3, 6, 3, 2, 1, 2})), P("UD2UUDUD2UDUDUUD"));
    EXPECT_EQ(phi_inv(C({1, 2})), LatticePath{});
    EXPECT_EQ(code_of([] { phi_inv(C({2, 3})); }), ErrorCode::NotInCPrime);
    EXPECT_EQ(code_of([] { phi_inv(C({1, 3})); }), ErrorCode::NotInCPrime);
    EXPECT_EQ(code_of([] { phi_inv(C({})); }), ErrorCode::NotInCPrime);
}

TEST(Psi, ExhaustiveRoundTrip) { EXPECT_EQ(check_psi(14), std::nullopt); }

TEST(Phi, ExhaustiveRoundTrip) { EXPECT_EQ(check_phi(12), std::nullopt); }

TEST(Bijections, CardinalitiesAgainstSeries) {
    auto g0 = gf_g0t_closed_form(2, 14);
    for (int n = 2; n <= 14; ++n)
        EXPECT_EQ(g0[n], enum_compositions(n - 2, CompositionKind::Alt).size());
    auto sym = gf_bounded_sym(1, 12);
    for (int n = 0; n <= 12; ++n)
        EXPECT_EQ(sym[n], enum_compositions(n + 3, CompositionKind::AltOddEven).size());
}
