#include <doctest.h>

#include "clawdeg/claw_polytopes.hpp"
#include "clawdeg/inclusion_exclusion.hpp"
#include "clawdeg/polytope_io.hpp"
#include "helpers.hpp"

using namespace clawdeg;
using testing::ipt;
using testing::pt;

TEST_CASE("rational rendering") {
    CHECK(to_string(Rat(3)) == "3");
    CHECK(to_string(Rat(-6, 4)) == "-3/2");
    CHECK(parse_rat("10/4") == Rat(5, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("abc"));
    CHECK_THROWS(parse_rat(""));
    CHECK(parse_int("123456789012345678901234567890").get_str() == "123456789012345678901234567890");
}

TEST_CASE("json documents") {
    const VPolytope v(2, {pt({"1/2", "0"}), ipt({0, 1})});
    const auto j = to_json(v);
    CHECK(j.dump() == R"({"dim":2,"kind":"V","vertices":[["0","1"],["1/2","0"]]})");
    CHECK(vpolytope_from_json(j) == v);
    CHECK(vpolytope_from_json(nlohmann::json::parse(j.dump())) == v);

    const HPolytope h = facets(GroupId::Z3, 2);
    const HPolytope back = hpolytope_from_json(nlohmann::json::parse(to_json(h).dump()));
    CHECK(back.dim == h.dim);
    CHECK(back.halfspaces == h.halfspaces);
    CHECK_THROWS(vpolytope_from_json(to_json(h)));
}

TEST_CASE("cdd blocks") {
    const VPolytope v(2, {pt({"1/2", "0"}), ipt({0, 1})});
    CHECK(to_ext(v) == "V-representation\nbegin\n2 3 rational\n 1 0 1\n 1 1/2 0\nend\n");
    CHECK(parse_ext(to_ext(v)) == v);

    HPolytope h;
    h.dim = 2;
    h.add(testing::hs({1, -2}, 3));
    CHECK(to_ine(h) == "H-representation\nbegin\n1 3 integer\n 3 -1 2\nend\n");
    CHECK(parse_ine(to_ine(h)).halfspaces == h.halfspaces);
}

TEST_CASE("round trips are bit-exact on model polytopes") {
    for (GroupId g : {GroupId::Z2, GroupId::Z2xZ2, GroupId::Z3}) {
        for (int n = 2; n <= 3; ++n) {
            const VPolytope v = vertices(g, n);
            CHECK(parse_ext(to_ext(v)) == v);
            CHECK(to_ext(parse_ext(to_ext(v))) == to_ext(v));
            const HPolytope h = facets(g, n);
            CHECK(parse_ine(to_ine(h)).halfspaces == h.halfspaces);
            CHECK(to_ine(parse_ine(to_ine(h))) == to_ine(h));
        }
    }
    // Half-integral vertices survive the rational format.
    const GroupId g = GroupId::Z2xZ2;
    const auto piece = vertex_enumeration(cut_piece(
        CutSpec{g, 2, {CutIndex::subset(g, 2, 1, 1), CutIndex::subset(g, 2, 1, 2), CutIndex::subset(g, 2, 1, 3)}}));
    CHECK(parse_ext(to_ext(piece)) == piece);
    CHECK(vpolytope_from_json(to_json(piece)) == piece);
}

TEST_CASE("malformed cdd input") {
    CHECK_THROWS(parse_ext("V-representation\nbegin\n1 3 rational\n 0 1 1\nend\n"));
    CHECK_THROWS(parse_ext("begin\n2 3 rational\n 1 0 1\nend\n"));
    CHECK_THROWS(parse_ine("H-representation\nbegin\n1 3 integer\n 1 2\nend\n"));
}
