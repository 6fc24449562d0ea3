#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "clawdeg/abelian_groups.hpp"

namespace clawdeg {

using IntVector = std::vector<BigInt>;
using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<IntVector>;

/// <normal, x> <= offset.
struct HalfSpace {
    IntVector normal;
    BigInt offset;

    int dim() const { return static_cast<int>(normal.size()); }
    /// Divides normal and offset by the gcd of all entries.
    HalfSpace canonical() const;
    bool operator==(const HalfSpace&) const = default;
};

struct HPolytope {
    int dim = 0;
    std::vector<HalfSpace> halfspaces;

    void add(HalfSpace h);
};

/// Vertex list kept deduplicated and lexicographically sorted.
struct VPolytope {
    int dim = 0;
    std::vector<RatPoint> vertices;

    VPolytope() = default;
    VPolytope(int d, std::vector<RatPoint> pts);

    bool empty() const { return vertices.empty(); }
    int size() const { return static_cast<int>(vertices.size()); }
    bool operator==(const VPolytope&) const = default;
};

struct LatticeBasis {
    int dim = 0;
    IntMatrix generators;
    BigInt index;  // |Z^d / L|, filled by make_lattice
};

class UnboundedPolyhedron : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RankDeficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Linear algebra over Q and Z.

int rank(RatMatrix m);
/// Basis of {x : m x = 0}, as primitive integer vectors.
IntMatrix nullspace(RatMatrix m, int cols);
/// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt determinant(IntMatrix m);
/// Clears denominators of a rational vector and divides by the content.
IntVector primitive(const std::vector<Rat>& v);
Rat dot(const IntVector& a, const RatPoint& x);

// Polyhedral operations.

/// Dimension of the affine hull; throws on an empty vertex list.
int affine_dim(const VPolytope& p);

/// Exact vertex set of a bounded H-polytope via integer double description.
/// Infeasible systems give an empty VPolytope; unbounded ones throw
/// UnboundedPolyhedron.
VPolytope vertex_enumeration(const HPolytope& h);

/// H-representation of conv(V). Lower-dimensional input yields its affine
/// equations as opposite inequality pairs followed by the relative facets.
HPolytope facet_enumeration(const VPolytope& v);

/// Drops points that are not vertices of conv(V).
VPolytope prune_to_vertices(const VPolytope& v);

bool contains(const HPolytope& h, const RatPoint& p);
bool satisfies(const HalfSpace& h, const RatPoint& p);
bool is_tight(const HalfSpace& h, const RatPoint& p);

/// Every vertex of V satisfies H and vertex_enumeration(H) equals V.
bool vh_consistent(const VPolytope& v, const HPolytope& h);

/// Builds a basis record and computes its index; throws RankDeficient.
LatticeBasis make_lattice(int dim, IntMatrix generators);
/// Index of the generated lattice in Z^d via Hermite reduction.
BigInt lattice_index(const LatticeBasis& b);

}  // namespace clawdeg
