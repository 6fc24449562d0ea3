#include <algorithm>
#include <cassert>

#include "clawdeg/exact_geometry.hpp"

namespace clawdeg {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m, int cols) {
    std::vector<int> pivots;
    int row = 0;
    const int rows = static_cast<int>(m.size());
    for (int c = 0; c < cols && row < rows; ++c) {
        int sel = -1;
        for (int r = row; r < rows; ++r) {
            if (sgn(m[r][c]) != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(m[row], m[sel]);
        const Rat inv = 1 / m[row][c];
        for (int k = c; k < cols; ++k) m[row][k] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || sgn(m[r][c]) == 0) continue;
            const Rat f = m[r][c];
            for (int k = c; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(RatMatrix m) {
    if (m.empty()) return 0;
    const int cols = static_cast<int>(m[0].size());
    return static_cast<int>(rref(m, cols).size());
}

IntMatrix nullspace(RatMatrix m, int cols) {
    std::vector<int> pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    IntMatrix basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(cols, 0);
        v[free] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
        basis.push_back(primitive(v));
    }
    return basis;
}

BigInt determinant(IntMatrix m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int sel = -1;
            for (int r = k + 1; r < n; ++r) {
                if (m[r][k] != 0) {
                    sel = r;
                    break;
                }
            }
            if (sel < 0) return 0;
            std::swap(m[k], m[sel]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

IntVector primitive(const std::vector<Rat>& v) {
    BigInt l = 1;
    for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    BigInt g = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = v[i].get_num() * (l / v[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
    }
    if (g > 1) {
        for (BigInt& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
    return out;
}

Rat dot(const IntVector& a, const RatPoint& x) {
    assert(a.size() == x.size());
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && sgn(x[i]) != 0) s += a[i] * x[i];
    }
    return s;
}

LatticeBasis make_lattice(int dim, IntMatrix generators) {
    LatticeBasis b{dim, std::move(generators), 0};
    b.index = lattice_index(b);
    return b;
}

BigInt lattice_index(const LatticeBasis& b) {
    IntMatrix m = b.generators;
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != b.dim) throw std::invalid_argument("lattice generator has wrong length");
    }
    const int rows = static_cast<int>(m.size());
    BigInt index = 1;
    int prow = 0;
    for (int c = 0; c < b.dim; ++c) {
        // Euclid on column c over rows prow.. until a single nonzero entry remains.
        while (true) {
            int best = -1;
            for (int r = prow; r < rows; ++r) {
                if (m[r][c] != 0 && (best < 0 || abs(m[r][c]) < abs(m[best][c]))) best = r;
            }
            if (best < 0) throw RankDeficient("lattice generators are rank-deficient");
            std::swap(m[prow], m[best]);
            bool done = true;
            for (int r = prow + 1; r < rows; ++r) {
                if (m[r][c] == 0) continue;
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[prow][c].get_mpz_t());
                for (int k = c; k < b.dim; ++k) m[r][k] -= q * m[prow][k];
                if (m[r][c] != 0) done = false;
            }
            if (done) break;
        }
        index *= abs(m[prow][c]);
        ++prow;
    }
    return index;
}

}  // namespace clawdeg
