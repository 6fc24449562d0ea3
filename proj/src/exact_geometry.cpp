#include "clawdeg/exact_geometry.hpp"

#include <algorithm>
#include <cstdint>

namespace clawdeg {

namespace {

class Bitset {
public:
    explicit Bitset(int n = 0) : words_((n + 63) / 64, 0) {}
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        for (size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
        return r;
    }
    bool contains(const Bitset& o) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            if ((o.words_[w] & ~words_[w]) != 0) return false;
        }
        return true;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

void make_primitive(IntVector& v) {
    BigInt g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r;
    r.reserve(m.size());
    for (const auto& row : m) r.emplace_back(row.begin(), row.end());
    return r;
}

struct ConeRays {
    IntMatrix rays;
    IntMatrix lineality;
};

// Extreme rays of {y in R^D : row . y >= 0 for all rows} by the double
// description method with the combinatorial adjacency test. A nontrivial
// lineality space is returned separately and the rays are computed in its
// orthogonal complement.
ConeRays extreme_rays(const IntMatrix& input, int D) {
    ConeRays result;
    result.lineality = nullspace(to_rat(input), D);

    IntMatrix rows;
    for (const auto& l : result.lineality) rows.push_back(l);
    rows.insert(rows.end(), input.begin(), input.end());
    for (const auto& l : result.lineality) {
        IntVector m = l;
        for (auto& x : m) x = -x;
        rows.push_back(std::move(m));
    }
    const int m = static_cast<int>(rows.size());

    // Greedy initial basis of D independent rows.
    std::vector<int> basis;
    RatMatrix acc;
    for (int i = 0; i < m && static_cast<int>(basis.size()) < D; ++i) {
        acc.emplace_back(rows[i].begin(), rows[i].end());
        if (rank(acc) == static_cast<int>(acc.size())) {
            basis.push_back(i);
        } else {
            acc.pop_back();
        }
    }
    if (static_cast<int>(basis.size()) < D) {
        // Only possible when D == 0.
        return result;
    }

    // Columns of the inverse of the basis matrix are the initial rays.
    RatMatrix aug(D, std::vector<Rat>(2 * D, 0));
    for (int r = 0; r < D; ++r) {
        for (int c = 0; c < D; ++c) aug[r][c] = rows[basis[r]][c];
        aug[r][D + r] = 1;
    }
    for (int c = 0; c < D; ++c) {
        int sel = c;
        while (sgn(aug[sel][c]) == 0) ++sel;
        std::swap(aug[c], aug[sel]);
        const Rat inv = 1 / aug[c][c];
        for (auto& x : aug[c]) x *= inv;
        for (int r = 0; r < D; ++r) {
            if (r == c || sgn(aug[r][c]) == 0) continue;
            const Rat f = aug[r][c];
            for (int k = 0; k < 2 * D; ++k) aug[r][k] -= f * aug[c][k];
        }
    }
    std::vector<bool> processed(m, false);
    for (int i : basis) processed[i] = true;

    struct Ray {
        IntVector v;
        Bitset zero;
    };
    std::vector<Ray> rays;
    for (int k = 0; k < D; ++k) {
        std::vector<Rat> col(D);
        for (int r = 0; r < D; ++r) col[r] = aug[r][D + k];
        Ray ray{primitive(col), Bitset(m)};
        for (int i : basis) {
            if (dot(rows[i], ray.v) == 0) ray.zero.set(i);
        }
        rays.push_back(std::move(ray));
    }

    const int adj_threshold = std::max(D - 2, 0);
    for (int i = 0; i < m; ++i) {
        if (processed[i]) continue;
        std::vector<int> pos, neg;
        std::vector<int> sign(rays.size());
        std::vector<BigInt> val(rays.size());
        for (size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(rows[i], rays[r].v);
            sign[r] = sgn(val[r]);
            if (sign[r] > 0) pos.push_back(static_cast<int>(r));
            if (sign[r] < 0) neg.push_back(static_cast<int>(r));
        }
        processed[i] = true;
        if (neg.empty()) {
            for (size_t r = 0; r < rays.size(); ++r) {
                if (sign[r] == 0) rays[r].zero.set(i);
            }
            continue;
        }

        std::vector<Ray> next;
        for (int p : pos) {
            for (int q : neg) {
                Bitset common = rays[p].zero & rays[q].zero;
                if (common.count() < adj_threshold) continue;
                bool adjacent = true;
                for (size_t t = 0; t < rays.size() && adjacent; ++t) {
                    if (static_cast<int>(t) == p || static_cast<int>(t) == q) continue;
                    if (rays[t].zero.contains(common)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVector v(D);
                for (int c = 0; c < D; ++c) v[c] = val[p] * rays[q].v[c] - val[q] * rays[p].v[c];
                make_primitive(v);
                common.set(i);
                next.push_back({std::move(v), std::move(common)});
            }
        }
        for (size_t r = 0; r < rays.size(); ++r) {
            if (sign[r] > 0) next.push_back(std::move(rays[r]));
            if (sign[r] == 0) {
                rays[r].zero.set(i);
                next.push_back(std::move(rays[r]));
            }
        }
        rays = std::move(next);
    }

    for (auto& r : rays) result.rays.push_back(std::move(r.v));
    return result;
}

}  // namespace

HalfSpace HalfSpace::canonical() const {
    BigInt g = offset;
    g = abs(g);
    for (const auto& x : normal) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    HalfSpace h = *this;
    if (g > 1) {
        for (auto& x : h.normal) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(h.offset.get_mpz_t(), h.offset.get_mpz_t(), g.get_mpz_t());
    }
    return h;
}

void HPolytope::add(HalfSpace h) {
    if (h.dim() != dim) throw std::invalid_argument("halfspace dimension mismatch");
    halfspaces.push_back(std::move(h));
}

VPolytope::VPolytope(int d, std::vector<RatPoint> pts) : dim(d), vertices(std::move(pts)) {
    for (const auto& p : vertices) {
        if (static_cast<int>(p.size()) != d) throw std::invalid_argument("point dimension mismatch");
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

int affine_dim(const VPolytope& p) {
    if (p.empty()) throw std::invalid_argument("affine_dim: empty vertex list");
    RatMatrix diffs;
    for (int i = 1; i < p.size(); ++i) {
        std::vector<Rat> d(p.dim);
        for (int c = 0; c < p.dim; ++c) d[c] = p.vertices[i][c] - p.vertices[0][c];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

bool satisfies(const HalfSpace& h, const RatPoint& p) { return dot(h.normal, p) <= h.offset; }

bool is_tight(const HalfSpace& h, const RatPoint& p) { return dot(h.normal, p) == h.offset; }

bool contains(const HPolytope& h, const RatPoint& p) {
    if (static_cast<int>(p.size()) != h.dim) throw std::invalid_argument("contains: dimension mismatch");
    return std::all_of(h.halfspaces.begin(), h.halfspaces.end(),
                       [&](const HalfSpace& s) { return satisfies(s, p); });
}

VPolytope vertex_enumeration(const HPolytope& h) {
    const int D = h.dim + 1;
    IntMatrix rows;
    IntVector y0(D, 0);
    y0[0] = 1;
    rows.push_back(y0);
    for (const auto& s : h.halfspaces) {
        if (s.dim() != h.dim) throw std::invalid_argument("vertex_enumeration: halfspace dimension mismatch");
        IntVector r(D);
        r[0] = s.offset;
        for (int c = 0; c < h.dim; ++c) r[c + 1] = -s.normal[c];
        rows.push_back(std::move(r));
    }
    ConeRays cone = extreme_rays(rows, D);
    std::vector<RatPoint> verts;
    bool recession = !cone.lineality.empty();
    for (const auto& r : cone.rays) {
        if (r[0] == 0) {
            recession = true;
            continue;
        }
        RatPoint x(h.dim);
        for (int c = 0; c < h.dim; ++c) {
            x[c] = Rat(r[c + 1], r[0]);
            x[c].canonicalize();
        }
        verts.push_back(std::move(x));
    }
    if (!verts.empty() && recession) throw UnboundedPolyhedron("vertex_enumeration: polyhedron is unbounded");
    return VPolytope(h.dim, std::move(verts));
}

HPolytope facet_enumeration(const VPolytope& v) {
    if (v.empty()) throw std::invalid_argument("facet_enumeration: empty vertex list");
    const int D = v.dim + 1;
    IntMatrix rows;
    for (const auto& p : v.vertices) {
        std::vector<Rat> r(D);
        r[0] = 1;
        for (int c = 0; c < v.dim; ++c) r[c + 1] = p[c];
        rows.push_back(primitive(r));
    }
    ConeRays cone = extreme_rays(rows, D);
    HPolytope h;
    h.dim = v.dim;
    auto to_halfspace = [&](const IntVector& r) {
        HalfSpace s;
        s.offset = r[0];
        s.normal.resize(v.dim);
        for (int c = 0; c < v.dim; ++c) s.normal[c] = -r[c + 1];
        return s;
    };
    for (const auto& l : cone.lineality) {
        HalfSpace s = to_halfspace(l);
        h.add(s);
        for (auto& x : s.normal) x = -x;
        s.offset = -s.offset;
        h.add(s);
    }
    for (const auto& r : cone.rays) {
        HalfSpace s = to_halfspace(r);
        // Rays tight at no vertex are implied by the affine equations.
        bool supporting = std::any_of(v.vertices.begin(), v.vertices.end(),
                                      [&](const RatPoint& p) { return is_tight(s, p); });
        if (supporting) h.add(std::move(s));
    }
    return h;
}

VPolytope prune_to_vertices(const VPolytope& v) {
    if (v.size() <= 1) return v;
    HPolytope h = facet_enumeration(v);
    std::vector<RatPoint> keep;
    for (const auto& p : v.vertices) {
        RatMatrix tight;
        for (const auto& s : h.halfspaces) {
            if (is_tight(s, p)) tight.emplace_back(s.normal.begin(), s.normal.end());
        }
        if (rank(std::move(tight)) == v.dim) keep.push_back(p);
    }
    return VPolytope(v.dim, std::move(keep));
}

bool vh_consistent(const VPolytope& v, const HPolytope& h) {
    if (v.dim != h.dim) throw std::invalid_argument("vh_consistent: dimension mismatch");
    for (const auto& p : v.vertices) {
        if (!contains(h, p)) return false;
    }
    try {
        return vertex_enumeration(h) == v;
    } catch (const UnboundedPolyhedron&) {
        return false;
    }
}

}  // namespace clawdeg
