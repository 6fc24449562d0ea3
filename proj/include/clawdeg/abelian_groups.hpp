#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace clawdeg {

using Rat = mpq_class;
using BigInt = mpz_class;
using RatPoint = std::vector<Rat>;

/// The three model groups. Elements are encoded 0..order-1 with 0 the identity;
/// for Z2xZ2 the encoding is alpha=1, beta=2, gamma=3.
enum class GroupId { Z2, Z2xZ2, Z3 };

int order(GroupId g);
inline int nonzero_count(GroupId g) { return order(g) - 1; }

/// Lowercase CLI names: "z2", "z2xz2", "z3".
std::string_view group_name(GroupId g);
GroupId parse_group(std::string_view name);

struct GroupElem {
    GroupId group;
    int index;

    GroupElem(GroupId g, int i);
    bool operator==(const GroupElem&) const = default;
};

GroupElem add(GroupElem a, GroupElem b);
GroupElem neg(GroupElem a);
GroupElem zero(GroupId g);

/// Raw table lookups for hot loops. No validation beyond debug asserts.
int add_index(GroupId g, int a, int b);
int neg_index(GroupId g, int a);

struct GTuple {
    GroupId group;
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    int sum() const;
    bool operator==(const GTuple&) const = default;
};

/// All n-tuples over G with zero sum, lexicographic in the element encoding.
std::vector<GTuple> zero_sum_tuples(GroupId g, int n);

// Symmetry actions on R^{(|G|-1)n}.

struct GroupTranslate {
    GTuple shift;  // must sum to zero
};

/// sigma[j] is the image block of block j (0-based).
struct Permute {
    std::vector<int> sigma;
};

/// phi[i] is the image of element i; phi[0] must be 0.
struct Automorphism {
    std::vector<int> phi;
};

using SymmetryAction = std::variant<GroupTranslate, Permute, Automorphism>;

bool is_automorphism(GroupId g, const std::vector<int>& phi);
std::vector<Automorphism> automorphisms(GroupId g);

/// Throws std::invalid_argument for an invalid action (non zero-sum shift,
/// non-permutation, non-homomorphism) or a dimension mismatch.
void validate_action(GroupId g, int n, const SymmetryAction& action);

/// Applies the action in projected coordinates. The identity coordinate of
/// each block is reconstructed as 1 - sum of the block before translating.
RatPoint apply_action(GroupId g, const SymmetryAction& action, const RatPoint& p);

}  // namespace clawdeg
