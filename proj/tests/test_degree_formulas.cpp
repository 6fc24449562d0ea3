#include <doctest.h>

#include <bit>

#include "clawdeg/degree_formulas.hpp"

using namespace clawdeg;

namespace {

BigInt big(const char* s) { return BigInt(s); }

}  // namespace

TEST_CASE("degree values") {
    CHECK(degree(GroupId::Z2, 3) == 1);
    CHECK(degree(GroupId::Z3, 3) == 9);
    CHECK(degree(GroupId::Z2xZ2, 3) == 96);
    CHECK(degree(GroupId::Z2, 2) == 0);
    CHECK(degree(GroupId::Z3, 2) == 0);
    CHECK(degree(GroupId::Z2xZ2, 2) == 0);
    CHECK(degree(GroupId::Z2, 6) == 344);
    CHECK(degree(GroupId::Z3, 4) == 660);
    CHECK_THROWS(degree(GroupId::Z2, 1));
}

TEST_CASE("degrees are nonnegative integers") {
    for (GroupId g : {GroupId::Z2, GroupId::Z2xZ2, GroupId::Z3}) {
        for (int n = 2; n <= 12; ++n) CHECK(degree(g, n) >= 0);
    }
}

TEST_CASE("ambient volumes") {
    CHECK(ambient_volume(GroupId::Z2, 4) == 24);
    CHECK(ambient_volume(GroupId::Z2xZ2, 2) == 20);
    CHECK(ambient_volume(GroupId::Z3, 3) == 90);
}

TEST_CASE("cut-piece closed forms") {
    CHECK(cut_formula(FormulaId::Z22TwoFacet, 2) == 5);
    CHECK(cut_formula(FormulaId::Z3OneFacet, 2) == 3);
    CHECK(cut_formula(FormulaId::Z22ThreeFacet, 2, TripleSubsets{1, 1, 1}) == Rat(5, 2));
    CHECK(cut_formula(FormulaId::Z22OneFacet, 2) == 10);
    CHECK(cut_formula(FormulaId::Z3TwoFacet, 2) == 2);
    for (int n = 2; n <= 8; ++n) CHECK(cut_formula(FormulaId::Z2Cut, n) == 1);
    CHECK(cut_formula(FormulaId::DegZ3, 3) == 9);
}

TEST_CASE("three-facet formula needs odd data") {
    CHECK_THROWS_AS(cut_formula(FormulaId::Z22ThreeFacet, 2), std::invalid_argument);
    CHECK_THROWS_AS(cut_formula(FormulaId::Z22ThreeFacet, 2, TripleSubsets{1, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(cut_formula(FormulaId::Z22ThreeFacet, 2, TripleSubsets{4, 1, 1}), std::invalid_argument);
}

TEST_CASE("three-facet formula vanishes off |delta| = 1") {
    for (int n = 2; n <= 4; ++n) {
        const Subset full = (Subset{1} << n) - 1;
        for (Subset a = 0; a <= full; ++a) {
            for (Subset b = 0; b <= full; ++b) {
                for (Subset c = 0; c <= full; ++c) {
                    const int parity = std::popcount(a) + std::popcount(b) + std::popcount(c);
                    const int k = std::popcount(delta_set(a, b, c));
                    CHECK(k % 2 == parity % 2);
                    if (parity % 2 == 1 && k != 1) CHECK(cut_formula(FormulaId::Z22ThreeFacet, n, TripleSubsets{a, b, c}) == 0);
                }
            }
        }
    }
}

TEST_CASE("delta set") {
    CHECK(delta_set(0b1, 0b1, 0b1) == 0b1);
    CHECK(delta_set(0b001, 0b010, 0b100) == 0b111);
    CHECK(delta_set(0b01, 0b01, 0b10) == 0b10);
}

TEST_CASE("degree tables") {
    using Rows = std::vector<std::pair<int, BigInt>>;
    CHECK(degree_table(GroupId::Z2, 2, 5) == Rows{{2, 0}, {3, 1}, {4, 8}, {5, 52}});
    CHECK(degree_table(GroupId::Z3, 2, 4) == Rows{{2, 0}, {3, 9}, {4, 660}});
    CHECK(degree_table(GroupId::Z2xZ2, 2, 3) == Rows{{2, 0}, {3, 96}});
    CHECK(degree_table(GroupId::Z2, 20, 20).front().second == big("1216451004088057856"));
    CHECK_THROWS(degree_table(GroupId::Z2, 2, 21));
    CHECK_THROWS(degree_table(GroupId::Z2, 4, 3));
    CHECK_THROWS(degree_table(GroupId::Z2, 1, 3));
}

TEST_CASE("formula names") {
    CHECK(formula_name(FormulaId::Z22ThreeFacet) == "z22-three-facet");
}
