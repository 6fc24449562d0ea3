#include "clawdeg/degree_formulas.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace clawdeg {

namespace {

BigInt fac(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

BigInt binom(int n, int k) {
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// b^e for possibly negative e.
Rat power(long b, int e) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e < 0 ? -e : e));
    Rat r = e < 0 ? Rat(1) / Rat(p) : Rat(p);
    r.canonicalize();
    return r;
}

Rat canon(Rat r) {
    r.canonicalize();
    return r;
}

void require_n(int n) {
    if (n < 2) throw std::invalid_argument("formula requires n >= 2");
}

Rat z22_one_facet(int n) {
    Rat s = 0;
    const BigInt top = fac(3 * n);
    for (int i = 0; i <= n; ++i) {
        Rat term = power(2, i) * Rat(binom(n, i)) * Rat(top / fac(2 * n + i));
        s += (i % 2 == 0) ? term : -term;
    }
    return canon(s);
}

Rat degree_value(GroupId g, int n) {
    switch (g) {
        case GroupId::Z2:
            return canon(Rat(fac(n)) / 2 - power(2, n - 2));
        case GroupId::Z2xZ2:
            return canon(Rat(fac(3 * n)) / (Rat(4) * power(6, n)) - 3 * power(2, n - 3) * z22_one_facet(n) +
                         3 * power(4, n - 2) * Rat(binom(2 * n, n)) - n * power(4, n - 1));
        case GroupId::Z3: {
#ifdef CLAWDEG_FAULT_INJECTION
            // Deliberately wrong constant for the fault-injection build.
            const int last = n + 1;
#else
            const int last = n;
#endif
            return canon(Rat(fac(2 * n)) / (Rat(3) * power(2, n)) - power(2, n + 1) * power(3, n - 2) +
                         power(3, n - 1) * last);
        }
    }
    throw std::logic_error("unknown group");
}

}  // namespace

std::string_view formula_name(FormulaId f) {
    switch (f) {
        case FormulaId::DegZ2: return "deg-z2";
        case FormulaId::DegZ2xZ2: return "deg-z2xz2";
        case FormulaId::DegZ3: return "deg-z3";
        case FormulaId::Z2Cut: return "z2-cut";
        case FormulaId::Z22OneFacet: return "z22-one-facet";
        case FormulaId::Z22TwoFacet: return "z22-two-facet";
        case FormulaId::Z22ThreeFacet: return "z22-three-facet";
        case FormulaId::Z3OneFacet: return "z3-one-facet";
        case FormulaId::Z3TwoFacet: return "z3-two-facet";
    }
    return "?";
}

BigInt degree(GroupId g, int n) {
    require_n(n);
    const Rat v = degree_value(g, n);
    if (v.get_den() != 1) {
        throw std::logic_error("degree formula for " + std::string(group_name(g)) + " at n=" + std::to_string(n) +
                               " is not integral: " + v.get_str());
    }
    return v.get_num();
}

BigInt ambient_volume(GroupId g, int n) {
    switch (g) {
        case GroupId::Z2: return fac(n);
        case GroupId::Z2xZ2: return fac(3 * n) / power(6, n).get_num();
        case GroupId::Z3: return fac(2 * n) / power(2, n).get_num();
    }
    throw std::logic_error("unknown group");
}

Subset delta_set(Subset a, Subset b, Subset c) {
    return (a & ~(b | c)) | (b & ~(a | c)) | (c & ~(a | b)) | (a & b & c);
}

Rat cut_formula(FormulaId f, int n, std::optional<TripleSubsets> extra) {
    require_n(n);
    switch (f) {
        case FormulaId::DegZ2: return Rat(degree(GroupId::Z2, n));
        case FormulaId::DegZ2xZ2: return Rat(degree(GroupId::Z2xZ2, n));
        case FormulaId::DegZ3: return Rat(degree(GroupId::Z3, n));
        case FormulaId::Z2Cut: return 1;
        case FormulaId::Z22OneFacet: return z22_one_facet(n);
        case FormulaId::Z22TwoFacet: return canon(Rat(binom(2 * n, n)) - Rat(n) / power(2, n - 1));
        case FormulaId::Z22ThreeFacet: {
            if (!extra) throw std::invalid_argument("z22-three-facet needs the subsets (A,B,C)");
            const Subset limit = n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
            if ((extra->a | extra->b | extra->c) & ~limit) throw std::invalid_argument("subset exceeds [n]");
            if ((std::popcount(extra->a) + std::popcount(extra->b) + std::popcount(extra->c)) % 2 == 0) {
                throw std::invalid_argument("z22-three-facet needs |A|+|B|+|C| odd");
            }
            if (std::popcount(delta_set(extra->a, extra->b, extra->c)) != 1) return 0;
            return canon(4 - Rat(3) / power(2, n - 1));
        }
        case FormulaId::Z3OneFacet: return canon(power(2, n) - Rat(n) / power(2, n - 1));
        case FormulaId::Z3TwoFacet: return canon(3 - Rat(1) / power(2, n - 2));
    }
    throw std::logic_error("unknown formula");
}

std::vector<std::pair<int, BigInt>> degree_table(GroupId g, int n_min, int n_max) {
    if (n_min < 2 || n_max < n_min) throw std::invalid_argument("degree_table: need 2 <= n_min <= n_max");
    if (n_max > kTableMaxN) {
        throw std::invalid_argument("degree_table: n_max above " + std::to_string(kTableMaxN));
    }
    std::vector<std::pair<int, BigInt>> rows;
    for (int n = n_min; n <= n_max; ++n) rows.emplace_back(n, degree(g, n));
    return rows;
}

}  // namespace clawdeg
