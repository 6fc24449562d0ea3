#include "clawdeg/volume_engine.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace clawdeg {

namespace {

IntVector sub(const IntVector& a, const IntVector& b) {
    IntVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

BigInt dot(const IntVector& a, const IntVector& b) {
    BigInt s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

struct Facet {
    std::vector<int> verts;  // sorted, size d
    IntVector normal;        // inside is normal . x <= offset
    BigInt offset;
    bool alive = true;
};

class Placer {
public:
    Placer(std::vector<IntVector> pts, int d) : pts_(std::move(pts)), d_(d) {}

    std::vector<std::vector<int>> run(const std::vector<int>& seed, const std::vector<int>& rest) {
        simplices_.push_back(sorted(seed));
        for (size_t k = 0; k < seed.size(); ++k) {
            std::vector<int> f;
            for (size_t i = 0; i < seed.size(); ++i) {
                if (i != k) f.push_back(seed[i]);
            }
            add_facet(sorted(f), seed[k]);
        }
        for (int p : rest) place(p);
        return std::move(simplices_);
    }

private:
    static std::vector<int> sorted(std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v;
    }

    void add_facet(std::vector<int> verts, int opposite) {
        RatMatrix rows;
        const IntVector& base = pts_[verts[0]];
        for (size_t i = 1; i < verts.size(); ++i) {
            IntVector diff = sub(pts_[verts[i]], base);
            rows.emplace_back(diff.begin(), diff.end());
        }
        Facet f;
        f.normal = nullspace(std::move(rows), d_).front();
        f.offset = dot(f.normal, base);
        if (dot(f.normal, pts_[opposite]) > f.offset) {
            for (auto& x : f.normal) x = -x;
            f.offset = -f.offset;
        }
        f.verts = std::move(verts);
        const int id = static_cast<int>(facets_.size());
        for (size_t k = 0; k < f.verts.size(); ++k) ridges_[ridge(f.verts, k)].push_back(id);
        facets_.push_back(std::move(f));
    }

    static std::vector<int> ridge(const std::vector<int>& verts, size_t drop) {
        std::vector<int> r;
        r.reserve(verts.size() - 1);
        for (size_t i = 0; i < verts.size(); ++i) {
            if (i != drop) r.push_back(verts[i]);
        }
        return r;
    }

    void place(int p) {
        std::vector<int> visible;
        std::vector<char> is_visible(facets_.size(), 0);
        for (size_t i = 0; i < facets_.size(); ++i) {
            if (facets_[i].alive && dot(facets_[i].normal, pts_[p]) > facets_[i].offset) {
                visible.push_back(static_cast<int>(i));
                is_visible[i] = 1;
            }
        }
        if (visible.empty()) return;  // inside or on the boundary

        struct Pending {
            std::vector<int> verts;
            int opposite;
        };
        std::vector<Pending> horizon;
        for (int fi : visible) {
            const Facet& f = facets_[fi];
            std::vector<int> simplex = f.verts;
            simplex.push_back(p);
            simplices_.push_back(sorted(std::move(simplex)));
            for (size_t k = 0; k < f.verts.size(); ++k) {
                const auto& owners = ridges_.at(ridge(f.verts, k));
                const int other = owners[0] == fi ? owners[1] : owners[0];
                if (!is_visible[other]) {
                    std::vector<int> nv = ridge(f.verts, k);
                    nv.push_back(p);
                    horizon.push_back({sorted(std::move(nv)), f.verts[k]});
                }
            }
        }
        for (int fi : visible) {
            Facet& f = facets_[fi];
            f.alive = false;
            for (size_t k = 0; k < f.verts.size(); ++k) {
                auto it = ridges_.find(ridge(f.verts, k));
                auto& owners = it->second;
                owners.erase(std::find(owners.begin(), owners.end(), fi));
                if (owners.empty()) ridges_.erase(it);
            }
        }
        for (auto& h : horizon) add_facet(std::move(h.verts), h.opposite);
    }

    std::vector<IntVector> pts_;
    int d_;
    std::vector<Facet> facets_;
    std::map<std::vector<int>, std::vector<int>> ridges_;
    std::vector<std::vector<int>> simplices_;
};

}  // namespace

GuardRails GuardRails::from_env() {
    GuardRails g;
    if (const char* v = std::getenv("CLAWDEG_OVERRIDE_GUARD")) {
        const std::string s(v);
        g.override = !s.empty() && s != "0";
    }
    return g;
}

Simplex Triangulation::simplex(std::size_t i) const {
    Simplex s;
    for (int idx : simplices.at(i)) s.points.push_back(base.vertices.at(idx));
    return s;
}

Rat simplex_lattice_volume(const Simplex& s) {
    const int d = s.dim();
    RatMatrix m;
    for (int i = 1; i <= d; ++i) {
        std::vector<Rat> row(d);
        for (int c = 0; c < d; ++c) row[c] = s.points[i][c] - s.points[0][c];
        m.push_back(std::move(row));
    }
    // Scale rows to integers, take the Bareiss determinant, then unscale.
    IntMatrix im;
    Rat scale = 1;
    for (auto& row : m) {
        BigInt l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        IntVector r(d);
        for (int c = 0; c < d; ++c) r[c] = row[c].get_num() * (l / row[c].get_den());
        im.push_back(std::move(r));
        scale *= l;
    }
    Rat v = Rat(abs(determinant(std::move(im)))) / scale;
    v.canonicalize();
    return v;
}

Rat simplex_volume(const Simplex& s) {
    Rat v = simplex_lattice_volume(s) / Rat(factorial(s.dim()));
    v.canonicalize();
    return v;
}

Triangulation triangulate(const VPolytope& p, const GuardRails& rails) {
    if (p.empty()) throw std::invalid_argument("triangulate: empty polytope");
    if (!rails.override && (p.dim > rails.max_dim || p.size() > rails.max_vertices)) {
        throw GuardRailRefusal("triangulation refused: dim " + std::to_string(p.dim) + ", " +
                               std::to_string(p.size()) + " vertices exceed guard rails (dim <= " +
                               std::to_string(rails.max_dim) + ", vertices <= " +
                               std::to_string(rails.max_vertices) + ")");
    }
    Triangulation t{p, {}};
    const int d = p.dim;
    if (d == 0) {
        t.simplices.push_back({0});
        return t;
    }
    if (affine_dim(p) < d) return t;
    if (d == 1) {
        t.simplices.push_back({0, p.size() - 1});
        return t;
    }

    // Common denominator so that all orientation tests stay in Z.
    BigInt l = 1;
    for (const auto& v : p.vertices) {
        for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<IntVector> pts;
    for (const auto& v : p.vertices) {
        IntVector q(d);
        for (int c = 0; c < d; ++c) q[c] = v[c].get_num() * (l / v[c].get_den());
        pts.push_back(std::move(q));
    }

    std::vector<int> seed{0};
    std::vector<int> rest;
    RatMatrix diffs;
    for (int i = 1; i < p.size(); ++i) {
        if (static_cast<int>(seed.size()) == d + 1) {
            rest.push_back(i);
            continue;
        }
        IntVector diff = sub(pts[i], pts[0]);
        diffs.emplace_back(diff.begin(), diff.end());
        if (rank(diffs) == static_cast<int>(diffs.size())) {
            seed.push_back(i);
        } else {
            diffs.pop_back();
            rest.push_back(i);
        }
    }
    t.simplices = Placer(std::move(pts), d).run(seed, rest);
    std::sort(t.simplices.begin(), t.simplices.end());
    return t;
}

Rat lattice_volume(const VPolytope& p, const GuardRails& rails) {
    if (p.empty()) return 0;
    Triangulation t = triangulate(p, rails);
    Rat total = 0;
    for (std::size_t i = 0; i < t.simplices.size(); ++i) total += simplex_lattice_volume(t.simplex(i));
    return total;
}

Rat lattice_volume(const VPolytope& p, const LatticeBasis& l, const GuardRails& rails) {
    if (l.dim != p.dim) throw std::invalid_argument("lattice_volume: lattice dimension mismatch");
    const BigInt index = l.index > 0 ? l.index : lattice_index(l);
    Rat v = lattice_volume(p, rails) / Rat(index);
    v.canonicalize();
    return v;
}

Rat euclidean_volume(const VPolytope& p, const GuardRails& rails) {
    Rat v = lattice_volume(p, rails) / Rat(factorial(p.dim));
    v.canonicalize();
    return v;
}

VPolytope join_product(const VPolytope& p1, const VPolytope& p2) {
    auto has_origin = [](const VPolytope& p) {
        return std::any_of(p.vertices.begin(), p.vertices.end(), [](const RatPoint& v) {
            return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
        });
    };
    if (!has_origin(p1) || !has_origin(p2)) throw std::invalid_argument("join_product: origin is not a vertex");
    if (affine_dim(p1) < p1.dim || affine_dim(p2) < p2.dim) {
        throw std::invalid_argument("join_product: factors must be full-dimensional");
    }
    const int d = p1.dim + p2.dim;
    std::vector<RatPoint> pts;
    for (const auto& v : p1.vertices) {
        RatPoint x(d, 0);
        std::copy(v.begin(), v.end(), x.begin());
        pts.push_back(std::move(x));
    }
    for (const auto& w : p2.vertices) {
        RatPoint x(d, 0);
        std::copy(w.begin(), w.end(), x.begin() + p1.dim);
        pts.push_back(std::move(x));
    }
    return VPolytope(d, std::move(pts));
}

nlohmann::json to_json(const Triangulation& t) {
    return {{"dim", t.base.dim}, {"vertex_count", t.base.size()}, {"simplices", t.simplices}};
}

}  // namespace clawdeg
