#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "clawdeg/abelian_groups.hpp"
#include "clawdeg/exact_geometry.hpp"

namespace clawdeg {

/// Index of coordinate x_g^j (block j 0-based, g a nonzero element index).
inline int coord(GroupId g, int block, int elem) { return block * nonzero_count(g) + elem - 1; }
inline int ambient_dim(GroupId g, int n) { return nonzero_count(g) * n; }

/// Indexes one cut functional S_{A,g} with its right-hand side.
///
/// For Z2 and Z2xZ2 the index A is a subset of [n] (digits are 0/1
/// memberships); for Z3 it is a tuple in {0,1,2}^n. The channel is 1 for Z2,
/// one of alpha=1, beta=2, gamma=3 for Z2xZ2, and 1 (u normals) or 2 (w
/// normals) for Z3. Facet cuts additionally need |A| odd, or digit sum = 2
/// mod 3 for Z3; lemma hypotheses also use non-facet indices, so the
/// constructor does not insist on it.
struct CutIndex {
    GroupId group;
    std::vector<int> digits;
    int channel;

    static CutIndex subset(GroupId g, int n, std::uint32_t mask, int channel);
    static CutIndex tuple(std::vector<int> digits, int channel);

    int n() const { return static_cast<int>(digits.size()); }
    std::uint32_t mask() const;  // Z2 / Z2xZ2 only
    int digit_sum() const;
    /// True when the index carries a facet of P_{G,n}.
    bool admissible() const;
    /// 1-|A| for Z2 / Z2xZ2, 2 - sum(a_i) for Z3.
    int rhs() const;
    std::string label() const;

    bool operator==(const CutIndex&) const = default;
};

enum class Side { Plus, Minus };

/// u_0..u_2 and w_0..w_2 for the Z3 cuts.
inline constexpr std::array<std::array<int, 2>, 3> kZ3U{{{1, 2}, {1, -1}, {-2, -1}}};
inline constexpr std::array<std::array<int, 2>, 3> kZ3W{{{2, 1}, {-1, 1}, {-1, -2}}};

/// Coefficient vector of S_{A,g}.
IntVector s_coefficients(const CutIndex& cut);
Rat s_value(const CutIndex& cut, const RatPoint& x);
/// Minus: S <= rhs. Plus: S >= rhs, written as -S <= -rhs.
HalfSpace cut_halfspace(const CutIndex& cut, Side side);

/// All facet cut indices in (channel, index) lexicographic order.
std::vector<CutIndex> facet_cuts(GroupId g, int n);
/// Every index of the given channel, admissible or not, in index order.
std::vector<CutIndex> all_cut_indices(GroupId g, int n, int channel);
std::vector<int> channels(GroupId g);

VPolytope vertices(GroupId g, int n);
HPolytope facets(GroupId g, int n);
/// [0,1]^n, (Delta_3)^n or (Delta_2)^n.
HPolytope ambient(GroupId g, int n);

/// L_{G,n} in projected coordinates.
LatticeBasis lattice(GroupId g, int n);
/// Vertex vectors only; rank-deficient for n = 2.
IntMatrix vertex_generators(GroupId g, int n);

}  // namespace clawdeg
