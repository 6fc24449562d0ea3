#pragma once

#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "clawdeg/exact_geometry.hpp"

namespace clawdeg {

/// Limits past which exact triangulation is refused unless overridden.
struct GuardRails {
    int max_dim = 14;
    int max_vertices = 200;
    bool override = false;

    /// Default limits, with override taken from CLAWDEG_OVERRIDE_GUARD.
    static GuardRails from_env();
};

class GuardRailRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Simplex {
    std::vector<RatPoint> points;  // d+1 points in R^d

    int dim() const { return static_cast<int>(points.size()) - 1; }
};

/// Simplices as sorted vertex-index tuples into `base.vertices`.
struct Triangulation {
    VPolytope base;
    std::vector<std::vector<int>> simplices;

    Simplex simplex(std::size_t i) const;
};

/// |det(v_i - v_0)|: the lattice volume of the simplex in Z^d.
Rat simplex_lattice_volume(const Simplex& s);
/// |det(v_i - v_0)| / d!.
Rat simplex_volume(const Simplex& s);

/// Placing triangulation. Vertices are taken in their canonical
/// (lexicographic) order: the first affinely independent d+1 of them form the
/// seed simplex, the rest are placed one at a time, each coned to the boundary
/// facets it sees strictly. Lower-dimensional input gives no simplices.
Triangulation triangulate(const VPolytope& p, const GuardRails& rails = GuardRails{});

/// Lattice volume in Z^d (d! times the Euclidean volume); 0 when not
/// full-dimensional.
Rat lattice_volume(const VPolytope& p, const GuardRails& rails = GuardRails{});
/// Lattice volume in the sublattice L, i.e. the Z^d value divided by the index.
Rat lattice_volume(const VPolytope& p, const LatticeBasis& l, const GuardRails& rails = GuardRails{});
Rat euclidean_volume(const VPolytope& p, const GuardRails& rails = GuardRails{});

/// conv(P1 x {0} u {0} x P2). Both factors must have the origin as a vertex.
VPolytope join_product(const VPolytope& p1, const VPolytope& p2);

nlohmann::json to_json(const Triangulation& t);

}  // namespace clawdeg
