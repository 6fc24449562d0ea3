#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "clawdeg/abelian_groups.hpp"
#include "clawdeg/claw_polytopes.hpp"
#include "clawdeg/volume_engine.hpp"
#include "helpers.hpp"

using namespace clawdeg;
using testing::ipt;
using testing::pt;

namespace {

// Independent Euclidean volume: cone from the least vertex over the facets
// missing it, each facet measured recursively after dropping one coordinate.
Rat pyramid_volume(const VPolytope& p) {
    const int d = p.dim;
    if (p.size() <= static_cast<size_t>(d) || affine_dim(p) < d) return 0;
    if (d == 1) return p.vertices.back()[0] - p.vertices.front()[0];
    const RatPoint& apex = p.vertices.front();
    const HPolytope f = facet_enumeration(p);
    Rat total = 0;
    for (const auto& h : f.halfspaces) {
        if (is_tight(h, apex)) continue;
        int k = 0;
        while (h.normal[k] == 0) ++k;
        std::vector<RatPoint> proj;
        for (const auto& v : p.vertices) {
            if (!is_tight(h, v)) continue;
            RatPoint q;
            for (int c = 0; c < d; ++c) {
                if (c != k) q.push_back(v[c]);
            }
            proj.push_back(std::move(q));
        }
        Rat height = Rat(h.offset) - dot(h.normal, apex);
        total += pyramid_volume(VPolytope(d - 1, std::move(proj))) * abs(height) / (Rat(d) * abs(Rat(h.normal[k])));
    }
    total.canonicalize();
    return total;
}

Rat factorial(int d) {
    Rat f = 1;
    for (int i = 2; i <= d; ++i) f *= i;
    return f;
}

VPolytope random_01_polytope(std::mt19937& rng, int d) {
    std::vector<RatPoint> pts{RatPoint(d, 0)};
    for (int i = 0; i < d; ++i) {
        RatPoint e(d, 0);
        e[i] = 1;
        pts.push_back(e);
    }
    const int extra = static_cast<int>(rng() % 4);
    for (int k = 0; k < extra; ++k) {
        RatPoint q(d);
        for (auto& x : q) x = static_cast<int>(rng() % 2);
        pts.push_back(q);
    }
    return prune_to_vertices(VPolytope(d, pts));
}

}  // namespace

TEST_CASE("simplex volumes") {
    const Simplex tri{{ipt({0, 0}), ipt({1, 0}), ipt({0, 1})}};
    CHECK(simplex_volume(tri) == Rat(1, 2));
    CHECK(simplex_lattice_volume(tri) == 1);
    CHECK(simplex_lattice_volume(Simplex{{ipt({0, 0}), ipt({2, 0}), ipt({0, 1})}}) == 2);
    CHECK(simplex_lattice_volume(Simplex{{ipt({0, 0}), ipt({1, 1}), ipt({2, 2})}}) == 0);
    CHECK(simplex_lattice_volume(Simplex{{ipt({0, 0}), ipt({1, 0}), pt({"0", "1/2"})}}) == Rat(1, 2));
    // 0, 2e_1^i, e_2^i for i = 1,2.
    const VPolytope q0(4, {ipt({0, 0, 0, 0}), ipt({2, 0, 0, 0}), ipt({0, 1, 0, 0}), ipt({0, 0, 2, 0}),
                           ipt({0, 0, 0, 1})});
    CHECK(lattice_volume(q0) == 4);
}

TEST_CASE("triangulation examples") {
    const auto sq = triangulate(testing::unit_square());
    CHECK(sq.simplices.size() == 2);
    CHECK(euclidean_volume(testing::unit_square()) == 1);

    const auto p3 = triangulate(vertices(GroupId::Z2, 3));
    CHECK(p3.simplices.size() == 1);
    CHECK(lattice_volume(vertices(GroupId::Z2, 3), lattice(GroupId::Z2, 3)) == 1);

    CHECK(lattice_volume(vertices(GroupId::Z2, 4)) == 16);
    CHECK(lattice_volume(vertices(GroupId::Z2xZ2, 2)) == 0);
    CHECK(lattice_volume(vertices(GroupId::Z2, 2), lattice(GroupId::Z2, 2)) == 0);
    CHECK(triangulate(vertices(GroupId::Z2, 2)).simplices.empty());
}

TEST_CASE("simplex volumes sum to the lattice volume") {
    for (GroupId g : {GroupId::Z2, GroupId::Z2xZ2, GroupId::Z3}) {
        for (int n = 3; n <= (g == GroupId::Z2 ? 5 : 3); ++n) {
            const VPolytope v = vertices(g, n);
            const Triangulation t = triangulate(v);
            Rat sum = 0;
            for (size_t i = 0; i < t.simplices.size(); ++i) {
                const Rat s = simplex_lattice_volume(t.simplex(i));
                CHECK(s > 0);
                sum += s;
            }
            CHECK(sum == lattice_volume(v));
        }
    }
}

TEST_CASE("placing triangulation agrees with the pyramid oracle") {
    for (int n = 2; n <= 4; ++n) {
        const VPolytope v = vertices(GroupId::Z2, n);
        CHECK(euclidean_volume(v) == pyramid_volume(v));
    }
    CHECK(euclidean_volume(vertices(GroupId::Z3, 3)) == pyramid_volume(vertices(GroupId::Z3, 3)));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const VPolytope v = random_01_polytope(rng, 2 + static_cast<int>(rng() % 3));
        CHECK(euclidean_volume(v) == pyramid_volume(v));
        CHECK(lattice_volume(v) == factorial(v.dim) * pyramid_volume(v));
    }
}

TEST_CASE("triangulation is deterministic") {
    const VPolytope v = vertices(GroupId::Z3, 3);
    CHECK(to_json(triangulate(v)).dump() == to_json(triangulate(v)).dump());
    // Input order does not matter once canonicalized.
    auto pts = v.vertices;
    std::reverse(pts.begin(), pts.end());
    CHECK(to_json(triangulate(VPolytope(v.dim, pts))).dump() == to_json(triangulate(v)).dump());
}

TEST_CASE("volume is invariant under symmetries") {
    const GroupId g = GroupId::Z3;
    const VPolytope v = vertices(g, 3);
    // A non-symmetric sub-polytope: drop one vertex.
    const VPolytope sub(v.dim, std::vector<RatPoint>(v.vertices.begin() + 1, v.vertices.end()));
    for (const auto& t : zero_sum_tuples(g, 3)) {
        std::vector<RatPoint> img;
        for (const auto& p : sub.vertices) img.push_back(apply_action(g, GroupTranslate{t}, p));
        CHECK(euclidean_volume(VPolytope(v.dim, img)) == euclidean_volume(sub));
    }
}

TEST_CASE("guard rails") {
    const int d = 15;
    std::vector<RatPoint> pts{RatPoint(d, 0)};
    for (int i = 0; i < d; ++i) {
        RatPoint e(d, 0);
        e[i] = 1;
        pts.push_back(e);
    }
    const VPolytope big(d, pts);
    CHECK_THROWS_AS(triangulate(big), GuardRailRefusal);
    GuardRails open;
    open.override = true;
    CHECK(lattice_volume(big, open) == 1);
    CHECK_THROWS_AS(lattice_volume(vertices(GroupId::Z2, 9)), GuardRailRefusal);

    setenv("CLAWDEG_OVERRIDE_GUARD", "1", 1);
    CHECK(GuardRails::from_env().override);
    unsetenv("CLAWDEG_OVERRIDE_GUARD");
    CHECK_FALSE(GuardRails::from_env().override);
}

TEST_CASE("join products") {
    const VPolytope seg(1, {ipt({0}), ipt({1})});
    CHECK(join_product(seg, seg) == VPolytope(2, {ipt({0, 0}), ipt({1, 0}), ipt({0, 1})}));

    const VPolytope r(3, {ipt({0, 0, 0}), ipt({0, 1, 0}), ipt({0, 0, 1}), ipt({1, 1, 0}), ipt({1, 0, 1})});
    CHECK(lattice_volume(r) == 2);
    VPolytope acc = r;
    for (int n = 2; n <= 3; ++n) {
        acc = join_product(acc, r);
        CHECK(lattice_volume(acc) == Rat(1 << n));
    }

    CHECK_THROWS(join_product(VPolytope(1, {ipt({1}), ipt({2})}), seg));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const VPolytope a = random_01_polytope(rng, 1 + static_cast<int>(rng() % 3));
        const VPolytope b = random_01_polytope(rng, 1 + static_cast<int>(rng() % 3));
        CHECK(lattice_volume(join_product(a, b)) == lattice_volume(a) * lattice_volume(b));
    }
}
