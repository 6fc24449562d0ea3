#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "clawdeg/abelian_groups.hpp"

namespace clawdeg {

/// Subsets of [n] as bitmasks, element i+1 <-> bit i.
using Subset = std::uint32_t;

enum class FormulaId {
    DegZ2,
    DegZ2xZ2,
    DegZ3,
    Z2Cut,
    Z22OneFacet,
    Z22TwoFacet,
    Z22ThreeFacet,
    Z3OneFacet,
    Z3TwoFacet,
};

std::string_view formula_name(FormulaId f);

struct TripleSubsets {
    Subset a;
    Subset b;
    Subset c;
};

/// Phylogenetic degree of X_{G,n}, i.e. the lattice volume of P_{G,n} in
/// L_{G,n}. Throws std::logic_error if the value is not an integer.
BigInt degree(GroupId g, int n);

/// Lattice volume in Z^d of the ambient cube or product of simplices.
BigInt ambient_volume(GroupId g, int n);

/// Closed-form lattice volume (in Z^d) of one family of cut pieces. The
/// degree formulas are also accepted and return the degree. Z22ThreeFacet
/// needs the triple (A,B,C) with |A|+|B|+|C| odd.
Rat cut_formula(FormulaId f, int n, std::optional<TripleSubsets> extra = std::nullopt);

/// (A\(B u C)) u (B\(A u C)) u (C\(A u B)) u (A n B n C).
Subset delta_set(Subset a, Subset b, Subset c);

std::vector<std::pair<int, BigInt>> degree_table(GroupId g, int n_min, int n_max);

/// Largest n accepted by degree_table.
inline constexpr int kTableMaxN = 20;

}  // namespace clawdeg
