#include "clawdeg/claw_polytopes.hpp"

#include <numeric>
#include <stdexcept>

namespace clawdeg {

namespace {

void require_n(int n, int min) {
    if (n < min) throw std::invalid_argument("n must be >= " + std::to_string(min));
}

bool valid_channel(GroupId g, int channel) {
    switch (g) {
        case GroupId::Z2: return channel == 1;
        case GroupId::Z2xZ2: return channel >= 1 && channel <= 3;
        case GroupId::Z3: return channel == 1 || channel == 2;
    }
    return false;
}

// Tuples of {0,..,base-1}^n in lexicographic order.
std::vector<std::vector<int>> all_digit_vectors(int n, int base) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    while (true) {
        out.push_back(t);
        int j = n - 1;
        while (j >= 0 && t[j] == base - 1) t[j--] = 0;
        if (j < 0) break;
        ++t[j];
    }
    return out;
}

void add_ambient_rows(HPolytope& h, GroupId g, int n) {
    const int d = ambient_dim(g, n);
    for (int c = 0; c < d; ++c) {
        HalfSpace s{IntVector(d, 0), 0};
        s.normal[c] = -1;
        h.add(std::move(s));
    }
    for (int j = 0; j < n; ++j) {
        HalfSpace s{IntVector(d, 0), 1};
        for (int e = 1; e < order(g); ++e) s.normal[coord(g, j, e)] = 1;
        h.add(std::move(s));
    }
}

}  // namespace

CutIndex CutIndex::subset(GroupId g, int n, std::uint32_t mask, int channel) {
    if (g == GroupId::Z3) throw std::invalid_argument("Z3 cuts are indexed by tuples");
    if (n < 1 || n > 31) throw std::invalid_argument("subset cut: n out of range");
    if (mask >> n) throw std::invalid_argument("subset cut: mask exceeds [n]");
    if (!valid_channel(g, channel)) throw std::invalid_argument("invalid channel for group");
    CutIndex c{g, std::vector<int>(n, 0), channel};
    for (int i = 0; i < n; ++i) c.digits[i] = (mask >> i) & 1U;
    return c;
}

CutIndex CutIndex::tuple(std::vector<int> digits, int channel) {
    for (int a : digits) {
        if (a < 0 || a > 2) throw std::invalid_argument("Z3 cut digit out of range");
    }
    if (!valid_channel(GroupId::Z3, channel)) throw std::invalid_argument("invalid channel for Z3");
    return CutIndex{GroupId::Z3, std::move(digits), channel};
}

std::uint32_t CutIndex::mask() const {
    std::uint32_t m = 0;
    for (int i = 0; i < n(); ++i) {
        if (digits[i]) m |= 1U << i;
    }
    return m;
}

int CutIndex::digit_sum() const { return std::accumulate(digits.begin(), digits.end(), 0); }

bool CutIndex::admissible() const {
    return group == GroupId::Z3 ? digit_sum() % 3 == 2 : digit_sum() % 2 == 1;
}

int CutIndex::rhs() const { return group == GroupId::Z3 ? 2 - digit_sum() : 1 - digit_sum(); }

std::string CutIndex::label() const {
    std::string s;
    if (group == GroupId::Z3) {
        s = "(";
        for (int i = 0; i < n(); ++i) s += (i ? "," : "") + std::to_string(digits[i]);
        s += ")";
    } else {
        s = "{";
        bool first = true;
        for (int i = 0; i < n(); ++i) {
            if (!digits[i]) continue;
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
        s += "}";
    }
    static constexpr const char* klein[] = {"0", "alpha", "beta", "gamma"};
    if (group == GroupId::Z2xZ2) return s + ":" + klein[channel];
    if (group == GroupId::Z3) return s + ":" + std::to_string(channel);
    return s;
}

std::vector<int> channels(GroupId g) {
    switch (g) {
        case GroupId::Z2: return {1};
        case GroupId::Z2xZ2: return {1, 2, 3};
        case GroupId::Z3: return {1, 2};
    }
    return {};
}

IntVector s_coefficients(const CutIndex& cut) {
    const GroupId g = cut.group;
    const int n = cut.n();
    IntVector a(ambient_dim(g, n), 0);
    for (int i = 0; i < n; ++i) {
        switch (g) {
            case GroupId::Z2:
                a[coord(g, i, 1)] = cut.digits[i] ? -1 : 1;
                break;
            case GroupId::Z2xZ2:
                for (int e = 1; e <= 3; ++e) {
                    if (e != cut.channel) a[coord(g, i, e)] = cut.digits[i] ? -1 : 1;
                }
                break;
            case GroupId::Z3: {
                const auto& v = cut.channel == 1 ? kZ3U[cut.digits[i]] : kZ3W[cut.digits[i]];
                a[coord(g, i, 1)] = v[0];
                a[coord(g, i, 2)] = v[1];
                break;
            }
        }
    }
    return a;
}

Rat s_value(const CutIndex& cut, const RatPoint& x) {
    if (static_cast<int>(x.size()) != ambient_dim(cut.group, cut.n())) {
        throw std::invalid_argument("s_value: dimension mismatch");
    }
    return dot(s_coefficients(cut), x);
}

HalfSpace cut_halfspace(const CutIndex& cut, Side side) {
    HalfSpace h{s_coefficients(cut), cut.rhs()};
    if (side == Side::Plus) {
        for (auto& x : h.normal) x = -x;
        h.offset = -h.offset;
    }
    return h;
}

std::vector<CutIndex> all_cut_indices(GroupId g, int n, int channel) {
    std::vector<CutIndex> out;
    if (g == GroupId::Z3) {
        for (auto& t : all_digit_vectors(n, 3)) out.push_back(CutIndex::tuple(std::move(t), channel));
    } else {
        for (std::uint32_t m = 0; m < (1U << n); ++m) out.push_back(CutIndex::subset(g, n, m, channel));
    }
    return out;
}

std::vector<CutIndex> facet_cuts(GroupId g, int n) {
    std::vector<CutIndex> out;
    for (int ch : channels(g)) {
        for (auto& c : all_cut_indices(g, n, ch)) {
            if (c.admissible()) out.push_back(std::move(c));
        }
    }
    return out;
}

VPolytope vertices(GroupId g, int n) {
    require_n(n, 2);
    const int d = ambient_dim(g, n);
    std::vector<RatPoint> pts;
    for (const auto& t : zero_sum_tuples(g, n)) {
        RatPoint p(d, 0);
        for (int j = 0; j < n; ++j) {
            if (t.entries[j] != 0) p[coord(g, j, t.entries[j])] = 1;
        }
        pts.push_back(std::move(p));
    }
    return VPolytope(d, std::move(pts));
}

HPolytope ambient(GroupId g, int n) {
    require_n(n, 1);
    HPolytope h;
    h.dim = ambient_dim(g, n);
    add_ambient_rows(h, g, n);
    return h;
}

HPolytope facets(GroupId g, int n) {
    require_n(n, 2);
    HPolytope h = ambient(g, n);
    for (const auto& c : facet_cuts(g, n)) {
        // Printed as S >= rhs.
        h.add(cut_halfspace(c, Side::Plus));
    }
    return h;
}

IntMatrix vertex_generators(GroupId g, int n) {
    IntMatrix gens;
    for (const auto& v : vertices(g, n).vertices) {
        IntVector row;
        for (const auto& x : v) row.push_back(x.get_num());
        gens.push_back(std::move(row));
    }
    return gens;
}

LatticeBasis lattice(GroupId g, int n) {
    require_n(n, 2);
    const int d = ambient_dim(g, n);
    IntMatrix gens = vertex_generators(g, n);

    // Generators of {y : sum_{j,h} y_h^j h = 0 in G}, the projected form of the
    // lattice the vertices generate. They change nothing for n >= 3 and make the
    // basis full rank for n = 2, where P_{G,2} is not full-dimensional.
    auto unit = [d](int k, long c) {
        IntVector v(d, 0);
        v[k] = c;
        return v;
    };
    if (g == GroupId::Z2xZ2) {
        const int a = coord(g, 0, 1);
        const int b = coord(g, 0, 2);
        gens.push_back(unit(a, 2));
        gens.push_back(unit(b, 2));
        for (int k = 0; k < d; ++k) {
            if (k == a || k == b) continue;
            const int elem = k % 3 + 1;
            IntVector v = unit(k, 1);
            if (elem & 1) v[a] -= 1;
            if (elem & 2) v[b] -= 1;
            gens.push_back(std::move(v));
        }
    } else {
        const int q = order(g);
        const int p = coord(g, 0, 1);
        gens.push_back(unit(p, q));
        for (int k = 0; k < d; ++k) {
            if (k == p) continue;
            const int elem = k % (q - 1) + 1;
            IntVector v = unit(k, 1);
            v[p] -= elem;
            gens.push_back(std::move(v));
        }
    }
    return make_lattice(d, std::move(gens));
}

}  // namespace clawdeg
