#include "clawdeg/abelian_groups.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace clawdeg {

namespace {

// Z2xZ2 as bit pairs: alpha=01, beta=10, gamma=11, so addition is xor.
int klein_add(int a, int b) { return a ^ b; }

void check_index(GroupId g, int i) {
    if (i < 0 || i >= order(g)) {
        throw std::invalid_argument("group element index out of range");
    }
}

}  // namespace

int order(GroupId g) {
    switch (g) {
        case GroupId::Z2: return 2;
        case GroupId::Z2xZ2: return 4;
        case GroupId::Z3: return 3;
    }
    throw std::logic_error("unknown group");
}

std::string_view group_name(GroupId g) {
    switch (g) {
        case GroupId::Z2: return "z2";
        case GroupId::Z2xZ2: return "z2xz2";
        case GroupId::Z3: return "z3";
    }
    throw std::logic_error("unknown group");
}

GroupId parse_group(std::string_view name) {
    if (name == "z2") return GroupId::Z2;
    if (name == "z2xz2") return GroupId::Z2xZ2;
    if (name == "z3") return GroupId::Z3;
    throw std::invalid_argument("unknown group '" + std::string(name) + "' (expected z2, z2xz2 or z3)");
}

GroupElem::GroupElem(GroupId g, int i) : group(g), index(i) { check_index(g, i); }

int add_index(GroupId g, int a, int b) {
    assert(a >= 0 && a < order(g) && b >= 0 && b < order(g));
    switch (g) {
        case GroupId::Z2: return a ^ b;
        case GroupId::Z2xZ2: return klein_add(a, b);
        case GroupId::Z3: return (a + b) % 3;
    }
    return 0;
}

int neg_index(GroupId g, int a) {
    return g == GroupId::Z3 ? (3 - a) % 3 : a;
}

GroupElem add(GroupElem a, GroupElem b) {
    if (a.group != b.group) throw std::invalid_argument("add: elements of different groups");
    return {a.group, add_index(a.group, a.index, b.index)};
}

GroupElem neg(GroupElem a) { return {a.group, neg_index(a.group, a.index)}; }

GroupElem zero(GroupId g) { return {g, 0}; }

int GTuple::sum() const {
    int s = 0;
    for (int e : entries) s = add_index(group, s, e);
    return s;
}

std::vector<GTuple> zero_sum_tuples(GroupId g, int n) {
    if (n < 1) throw std::invalid_argument("zero_sum_tuples: n must be >= 1");
    const int q = order(g);
    std::vector<GTuple> out;
    std::vector<int> t(n, 0);
    // Odometer over the first n-1 entries; the last entry is forced.
    while (true) {
        int s = 0;
        for (int j = 0; j + 1 < n; ++j) s = add_index(g, s, t[j]);
        t[n - 1] = neg_index(g, s);
        out.push_back({g, t});
        int j = n - 2;
        while (j >= 0 && t[j] == q - 1) t[j--] = 0;
        if (j < 0) break;
        ++t[j];
    }
    // The forced last entry keeps the odometer order lexicographic.
    return out;
}

bool is_automorphism(GroupId g, const std::vector<int>& phi) {
    const int q = order(g);
    if (static_cast<int>(phi.size()) != q || phi[0] != 0) return false;
    std::vector<int> sorted = phi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < q; ++i) {
        if (sorted[i] != i) return false;
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (phi[add_index(g, a, b)] != add_index(g, phi[a], phi[b])) return false;
        }
    }
    return true;
}

std::vector<Automorphism> automorphisms(GroupId g) {
    std::vector<int> perm(order(g));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<Automorphism> out;
    do {
        if (is_automorphism(g, perm)) out.push_back({perm});
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return out;
}

void validate_action(GroupId g, int n, const SymmetryAction& action) {
    if (const auto* t = std::get_if<GroupTranslate>(&action)) {
        if (t->shift.group != g || t->shift.size() != n) {
            throw std::invalid_argument("translate: shift has wrong group or length");
        }
        for (int e : t->shift.entries) check_index(g, e);
        if (t->shift.sum() != 0) throw std::invalid_argument("translate: shift does not sum to zero");
    } else if (const auto* p = std::get_if<Permute>(&action)) {
        if (static_cast<int>(p->sigma.size()) != n) throw std::invalid_argument("permute: wrong length");
        std::vector<int> s = p->sigma;
        std::sort(s.begin(), s.end());
        for (int j = 0; j < n; ++j) {
            if (s[j] != j) throw std::invalid_argument("permute: not a permutation");
        }
    } else {
        const auto& a = std::get<Automorphism>(action);
        if (!is_automorphism(g, a.phi)) throw std::invalid_argument("automorphism: not an automorphism");
    }
}

RatPoint apply_action(GroupId g, const SymmetryAction& action, const RatPoint& p) {
    const int k = nonzero_count(g);
    if (p.size() % k != 0) throw std::invalid_argument("apply_action: dimension not a multiple of |G|-1");
    const int n = static_cast<int>(p.size()) / k;
    validate_action(g, n, action);
    const int q = order(g);

    // Full block: index 0 holds the reconstructed identity coordinate.
    auto full_block = [&](int j) {
        std::vector<Rat> x(q);
        x[0] = 1;
        for (int i = 1; i < q; ++i) {
            x[i] = p[j * k + i - 1];
            x[0] -= x[i];
        }
        return x;
    };

    RatPoint out(p.size());
    if (const auto* t = std::get_if<GroupTranslate>(&action)) {
        for (int j = 0; j < n; ++j) {
            auto x = full_block(j);
            for (int i = 1; i < q; ++i) {
                out[j * k + i - 1] = x[add_index(g, i, t->shift.entries[j])];
            }
        }
    } else if (const auto* s = std::get_if<Permute>(&action)) {
        for (int j = 0; j < n; ++j) {
            for (int i = 0; i < k; ++i) out[s->sigma[j] * k + i] = p[j * k + i];
        }
    } else {
        const auto& phi = std::get<Automorphism>(action).phi;
        for (int j = 0; j < n; ++j) {
            for (int i = 1; i < q; ++i) out[j * k + phi[i] - 1] = p[j * k + i - 1];
        }
    }
    return out;
}

}  // namespace clawdeg
