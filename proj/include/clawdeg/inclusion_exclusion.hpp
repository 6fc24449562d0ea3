#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "clawdeg/claw_polytopes.hpp"
#include "clawdeg/degree_formulas.hpp"
#include "clawdeg/volume_engine.hpp"

namespace clawdeg {

/// Ambient product intersected with H^-_{A,g} for every listed cut.
struct CutSpec {
    GroupId group;
    int n;
    std::vector<CutIndex> cuts;
};

HPolytope cut_piece(const CutSpec& spec);
/// Exact lattice volume in Z^d of the cut piece.
Rat piece_volume(const CutSpec& spec, const GuardRails& rails = GuardRails{});

enum class LemmaId {
    Z2CutSimplex,         // C_n n H^-_A is a unit simplex
    Z2PairOverlap,        // two cuts, |A|+|B| even: not full-dimensional
    Z22PairOverlap,       // same channel, |A|+|B| even: not full-dimensional
    Z22IntegralVertices,  // box, block-sum and one S-bound systems are lattice polytopes
    Z22OneCut,
    Z22TwoCuts,
    Z22ThreeCuts,
    Z3PairOverlap,        // same channel, >2 differing digits: not full-dimensional
    Z3SameChannelPair,    // two differing digits: contained in a cut of the other channel
    Z3MixedPairOverlap,
    Z3FourCuts,
    Z3OneCut,
    Z3MixedPair,
};

std::string_view lemma_name(LemmaId id);
LemmaId parse_lemma(std::string_view name);
GroupId lemma_group(LemmaId id);
std::vector<LemmaId> all_lemmas();
std::vector<LemmaId> lemmas_for(GroupId g);

struct VolumeClaim {
    Rat value;
};
struct ZeroVolumeClaim {};
/// Some candidate's H^- contains the whole piece.
struct ContainedInClaim {
    std::vector<CutIndex> candidates;
};
struct IntegralVerticesClaim {};

using Claim = std::variant<VolumeClaim, ZeroVolumeClaim, ContainedInClaim, IntegralVerticesClaim>;

struct LemmaClaim {
    LemmaId lemma;
    GroupId group;
    int n;
    std::vector<CutIndex> cuts;
    /// Set for the integral-vertices lemma, whose polytopes are not cut pieces.
    std::optional<HPolytope> explicit_piece;
    std::string hypothesis;
    Claim claim;
};

/// Builds the claim the lemma makes for this hypothesis, with volumes taken
/// from the closed forms. Throws std::invalid_argument if the hypothesis does
/// not meet the lemma's side conditions.
LemmaClaim make_claim(LemmaId lemma, int n, std::vector<CutIndex> cuts);
/// Integral-vertices instance on an explicit polytope.
LemmaClaim make_integrality_claim(int n, HPolytope piece, std::string hypothesis);

/// Every hypothesis instance of the lemma at this n. Symmetric hypotheses are
/// listed once (unordered pairs). The integral-vertices lemma gets every
/// one-sided S-bound on the ambient product plus seeded random box instances.
std::vector<LemmaClaim> lemma_instances(LemmaId lemma, int n);

struct LemmaVerdict {
    bool confirmed;
    std::string expected;
    std::string computed;
};

/// Throws std::invalid_argument on a hypothesis violation.
LemmaVerdict check_lemma(const LemmaClaim& claim, const GuardRails& rails = GuardRails{});

nlohmann::json report_record(const LemmaClaim& claim, const LemmaVerdict& verdict);

/// One line of the inclusion-exclusion bookkeeping: sign * count * value.
struct AssemblyTerm {
    std::string label;
    int sign;
    BigInt count;
    Rat value;
};

struct Assembly {
    GroupId group;
    int n;
    BigInt ambient;
    std::vector<AssemblyTerm> terms;
    Rat volume;  // in Z^d
    BigInt index;
    Rat degree;  // volume / index
};

/// Total volume from the closed-form piece volumes and enumerated counts of
/// the index families with nonzero contribution.
Assembly assemble(GroupId g, int n);

/// #{(A,B,C) odd subsets of [n] : |delta(A,B,C)| = 1}, by enumeration.
BigInt count_delta_one_triples(int n);

/// Volume of the union of all facet cut pieces by full inclusion-exclusion,
/// every intersection measured geometrically. Subfamilies of a zero-volume
/// intersection are pruned.
Rat cut_union_volume_brute_force(GroupId g, int n, const GuardRails& rails = GuardRails{});

/// Right-hand side of the Z3 single-minus-mixed-pairs identity with every term
/// measured geometrically (all mixed pairs, no lemma used to drop terms).
Rat z3_single_minus_pairs_geometric(int n, const GuardRails& rails = GuardRails{});

}  // namespace clawdeg
