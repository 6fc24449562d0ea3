#include "clawdeg/inclusion_exclusion.hpp"
#include "clawdeg/polytope_io.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <stdexcept>

namespace clawdeg {

using nlohmann::json;

namespace {

struct LemmaInfo {
    LemmaId id;
    std::string_view name;
    GroupId group;
};

constexpr LemmaInfo kLemmas[] = {
    {LemmaId::Z2CutSimplex, "z2-cut-simplex", GroupId::Z2},
    {LemmaId::Z2PairOverlap, "z2-pair-overlap", GroupId::Z2},
    {LemmaId::Z22PairOverlap, "z22-pair-overlap", GroupId::Z2xZ2},
    {LemmaId::Z22IntegralVertices, "z22-integral-vertices", GroupId::Z2xZ2},
    {LemmaId::Z22OneCut, "z22-one-cut", GroupId::Z2xZ2},
    {LemmaId::Z22TwoCuts, "z22-two-cuts", GroupId::Z2xZ2},
    {LemmaId::Z22ThreeCuts, "z22-three-cuts", GroupId::Z2xZ2},
    {LemmaId::Z3PairOverlap, "z3-pair-overlap", GroupId::Z3},
    {LemmaId::Z3SameChannelPair, "z3-same-channel-pair", GroupId::Z3},
    {LemmaId::Z3MixedPairOverlap, "z3-mixed-pair-overlap", GroupId::Z3},
    {LemmaId::Z3FourCuts, "z3-four-cuts", GroupId::Z3},
    {LemmaId::Z3OneCut, "z3-one-cut", GroupId::Z3},
    {LemmaId::Z3MixedPair, "z3-mixed-pair", GroupId::Z3},
};

const LemmaInfo& info(LemmaId id) {
    for (const auto& l : kLemmas) {
        if (l.id == id) return l;
    }
    throw std::logic_error("unknown lemma");
}

void require(bool cond, LemmaId id, const std::string& what) {
    if (!cond) throw std::invalid_argument(std::string(lemma_name(id)) + ": hypothesis violated: " + what);
}

int differing_digits(const CutIndex& a, const CutIndex& b) {
    int k = 0;
    for (int i = 0; i < a.n(); ++i) k += a.digits[i] != b.digits[i];
    return k;
}

// #{i : a_i + b_i = 0 mod 3}
int cancelling_digits(const CutIndex& a, const CutIndex& b) {
    int k = 0;
    for (int i = 0; i < a.n(); ++i) k += (a.digits[i] + b.digits[i]) % 3 == 0;
    return k;
}

int mod3(int x) { return ((x % 3) + 3) % 3; }

std::string describe(const std::vector<CutIndex>& cuts) {
    std::string s;
    for (size_t i = 0; i < cuts.size(); ++i) s += (i ? " " : "") + cuts[i].label();
    return s;
}

void validate(const LemmaClaim& c) {
    const LemmaId id = c.lemma;
    require(c.group == lemma_group(id), id, "wrong group");
    require(c.n >= 1, id, "n must be positive");
    for (const auto& cut : c.cuts) {
        require(cut.group == c.group && cut.n() == c.n, id, "cut index does not match group and n");
    }
    const auto& k = c.cuts;
    auto count = [&](size_t m) { require(k.size() == m, id, "expected " + std::to_string(m) + " cuts"); };
    switch (id) {
        case LemmaId::Z2CutSimplex:
        case LemmaId::Z22OneCut:
        case LemmaId::Z3OneCut:
            count(1);
            break;
        case LemmaId::Z2PairOverlap:
        case LemmaId::Z22PairOverlap:
            count(2);
            require(k[0].channel == k[1].channel, id, "cuts must share the channel");
            require(k[0] != k[1], id, "A and B must differ");
            require((k[0].digit_sum() + k[1].digit_sum()) % 2 == 0, id, "|A|+|B| must be even");
            break;
        case LemmaId::Z22TwoCuts:
            count(2);
            require(k[0].channel != k[1].channel, id, "channels must differ");
            break;
        case LemmaId::Z22ThreeCuts:
            count(3);
            require(k[0].channel == 1 && k[1].channel == 2 && k[2].channel == 3, id,
                    "channels must be alpha, beta, gamma");
            require((k[0].digit_sum() + k[1].digit_sum() + k[2].digit_sum()) % 2 == 1, id,
                    "|A|+|B|+|C| must be odd");
            break;
        case LemmaId::Z22IntegralVertices:
            require(c.explicit_piece.has_value(), id, "needs an explicit polytope");
            require(c.explicit_piece->dim == ambient_dim(GroupId::Z2xZ2, c.n), id, "dimension must be 3n");
            break;
        case LemmaId::Z3PairOverlap:
            count(2);
            require(k[0].channel == k[1].channel, id, "cuts must share the channel");
            require(k[0] != k[1], id, "A and B must differ");
            require(mod3(k[0].digit_sum()) == mod3(k[1].digit_sum()), id, "digit sums must agree mod 3");
            require(differing_digits(k[0], k[1]) > 2, id, "A and B must differ in more than two places");
            break;
        case LemmaId::Z3SameChannelPair:
            count(2);
            require(k[0].channel == k[1].channel, id, "cuts must share the channel");
            require(k[0].admissible() && k[1].admissible(), id, "digit sums must be 2 mod 3");
            require(differing_digits(k[0], k[1]) == 2, id, "A and B must differ in exactly two places");
            break;
        case LemmaId::Z3MixedPairOverlap:
            count(2);
            require(k[0].channel == 1 && k[1].channel == 2, id, "channels must be 1 then 2");
            require(k[0].digits != k[1].digits, id, "A and B must differ");
            require(mod3(k[0].digit_sum() + k[1].digit_sum()) == 1, id, "sum(a)+sum(b) must be 1 mod 3");
            require(cancelling_digits(k[0], k[1]) < c.n - 1, id, "fewer than n-1 cancelling digits required");
            break;
        case LemmaId::Z3MixedPair:
            count(2);
            require(k[0].channel == 1 && k[1].channel == 2, id, "channels must be 1 then 2");
            require(mod3(k[0].digit_sum() + k[1].digit_sum()) == 1, id, "sum(a)+sum(b) must be 1 mod 3");
            require(cancelling_digits(k[0], k[1]) == c.n - 1, id, "exactly n-1 cancelling digits required");
            break;
        case LemmaId::Z3FourCuts:
            count(4);
            require(k[0].channel == 1 && k[1].channel == 1 && k[2].channel == 2 && k[3].channel == 2, id,
                    "channels must be 1,1,2,2");
            for (const auto& cut : k) require(cut.admissible(), id, "digit sums must be 2 mod 3");
            require(k[0] != k[1] && k[2] != k[3], id, "A != B and C != D required");
            break;
    }
}

std::vector<CutIndex> admissible_of_channel(GroupId g, int n, int ch) {
    std::vector<CutIndex> out;
    for (auto& c : all_cut_indices(g, n, ch)) {
        if (c.admissible()) out.push_back(std::move(c));
    }
    return out;
}

// Seeded box instances: random integer bounds on coordinates and block sums
// plus one S_{A,h} lower bound. Raw engine output keeps them platform-stable.
std::vector<LemmaClaim> random_integrality_instances(int n, int count) {
    const GroupId g = GroupId::Z2xZ2;
    const int d = ambient_dim(g, n);
    std::mt19937 rng(20240601U + static_cast<unsigned>(n));
    auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)); };
    std::vector<LemmaClaim> out;
    for (int t = 0; t < count; ++t) {
        HPolytope h;
        h.dim = d;
        for (int c = 0; c < d; ++c) {
            const int lo = pick(-1, 0);
            const int hi = lo + pick(0, 2);
            HalfSpace up{IntVector(d, 0), hi};
            up.normal[c] = 1;
            HalfSpace down{IntVector(d, 0), -lo};
            down.normal[c] = -1;
            h.add(std::move(up));
            h.add(std::move(down));
        }
        for (int j = 0; j < n; ++j) {
            const int lo = pick(-1, 1);
            const int hi = lo + pick(0, 2);
            HalfSpace up{IntVector(d, 0), hi};
            HalfSpace down{IntVector(d, 0), -lo};
            for (int e = 1; e <= 3; ++e) {
                up.normal[coord(g, j, e)] = 1;
                down.normal[coord(g, j, e)] = -1;
            }
            h.add(std::move(up));
            h.add(std::move(down));
        }
        const auto mask = static_cast<std::uint32_t>(pick(0, (1 << n) - 1));
        const int channel = pick(1, 3);
        const int bound = pick(-n, n);
        CutIndex cut = CutIndex::subset(g, n, mask, channel);
        HalfSpace s{s_coefficients(cut), -bound};
        for (auto& x : s.normal) x = -x;  // S >= bound
        h.add(std::move(s));
        out.push_back(make_integrality_claim(
            n, std::move(h), "random box #" + std::to_string(t) + " with S" + cut.label() + " >= " + std::to_string(bound)));
    }
    return out;
}

}  // namespace

HPolytope cut_piece(const CutSpec& spec) {
    HPolytope h = ambient(spec.group, spec.n);
    for (const auto& c : spec.cuts) {
        if (c.group != spec.group || c.n() != spec.n) throw std::invalid_argument("cut_piece: cut does not match spec");
        h.add(cut_halfspace(c, Side::Minus));
    }
    return h;
}

Rat piece_volume(const CutSpec& spec, const GuardRails& rails) {
    VPolytope v = vertex_enumeration(cut_piece(spec));
    if (v.empty()) return 0;
    return lattice_volume(v, rails);
}

std::string_view lemma_name(LemmaId id) { return info(id).name; }

LemmaId parse_lemma(std::string_view name) {
    for (const auto& l : kLemmas) {
        if (l.name == name) return l.id;
    }
    throw std::invalid_argument("unknown lemma '" + std::string(name) + "'");
}

GroupId lemma_group(LemmaId id) { return info(id).group; }

std::vector<LemmaId> all_lemmas() {
    std::vector<LemmaId> out;
    for (const auto& l : kLemmas) out.push_back(l.id);
    return out;
}

std::vector<LemmaId> lemmas_for(GroupId g) {
    std::vector<LemmaId> out;
    for (const auto& l : kLemmas) {
        if (l.group == g) out.push_back(l.id);
    }
    return out;
}

LemmaClaim make_claim(LemmaId lemma, int n, std::vector<CutIndex> cuts) {
    LemmaClaim c{lemma, lemma_group(lemma), n, std::move(cuts), std::nullopt, "", ZeroVolumeClaim{}};
    c.hypothesis = describe(c.cuts);
    validate(c);
    switch (lemma) {
        case LemmaId::Z2CutSimplex: c.claim = VolumeClaim{cut_formula(FormulaId::Z2Cut, n)}; break;
        case LemmaId::Z22OneCut: c.claim = VolumeClaim{cut_formula(FormulaId::Z22OneFacet, n)}; break;
        case LemmaId::Z22TwoCuts: c.claim = VolumeClaim{cut_formula(FormulaId::Z22TwoFacet, n)}; break;
        case LemmaId::Z22ThreeCuts:
            c.claim = VolumeClaim{cut_formula(FormulaId::Z22ThreeFacet, n,
                                              TripleSubsets{c.cuts[0].mask(), c.cuts[1].mask(), c.cuts[2].mask()})};
            break;
        case LemmaId::Z3OneCut: c.claim = VolumeClaim{cut_formula(FormulaId::Z3OneFacet, n)}; break;
        case LemmaId::Z3MixedPair: c.claim = VolumeClaim{cut_formula(FormulaId::Z3TwoFacet, n)}; break;
        case LemmaId::Z3SameChannelPair:
            c.claim = ContainedInClaim{admissible_of_channel(GroupId::Z3, n, 3 - c.cuts[0].channel)};
            break;
        case LemmaId::Z22IntegralVertices:
            throw std::invalid_argument("use make_integrality_claim for z22-integral-vertices");
        default: c.claim = ZeroVolumeClaim{}; break;
    }
    return c;
}

LemmaClaim make_integrality_claim(int n, HPolytope piece, std::string hypothesis) {
    LemmaClaim c{LemmaId::Z22IntegralVertices, GroupId::Z2xZ2, n, {}, std::move(piece), std::move(hypothesis),
                 IntegralVerticesClaim{}};
    validate(c);
    return c;
}

std::vector<LemmaClaim> lemma_instances(LemmaId lemma, int n) {
    const GroupId g = lemma_group(lemma);
    std::vector<LemmaClaim> out;
    auto emit = [&](std::vector<CutIndex> cuts) { out.push_back(make_claim(lemma, n, std::move(cuts))); };
    switch (lemma) {
        case LemmaId::Z2CutSimplex:
        case LemmaId::Z22OneCut:
        case LemmaId::Z3OneCut:
            for (int ch : channels(g)) {
                for (auto& c : all_cut_indices(g, n, ch)) emit({c});
            }
            break;
        case LemmaId::Z2PairOverlap:
        case LemmaId::Z22PairOverlap:
            for (int ch : channels(g)) {
                auto all = all_cut_indices(g, n, ch);
                for (size_t i = 0; i < all.size(); ++i) {
                    for (size_t j = i + 1; j < all.size(); ++j) {
                        if ((all[i].digit_sum() + all[j].digit_sum()) % 2 == 0) emit({all[i], all[j]});
                    }
                }
            }
            break;
        case LemmaId::Z22TwoCuts:
            for (int g1 = 1; g1 <= 3; ++g1) {
                for (int g2 = g1 + 1; g2 <= 3; ++g2) {
                    for (auto& a : all_cut_indices(g, n, g1)) {
                        for (auto& b : all_cut_indices(g, n, g2)) emit({a, b});
                    }
                }
            }
            break;
        case LemmaId::Z22ThreeCuts:
            for (auto& a : all_cut_indices(g, n, 1)) {
                for (auto& b : all_cut_indices(g, n, 2)) {
                    for (auto& c : all_cut_indices(g, n, 3)) {
                        if ((a.digit_sum() + b.digit_sum() + c.digit_sum()) % 2 == 1) emit({a, b, c});
                    }
                }
            }
            break;
        case LemmaId::Z22IntegralVertices:
            for (int ch = 1; ch <= 3; ++ch) {
                for (auto& a : all_cut_indices(g, n, ch)) {
                    for (Side side : {Side::Minus, Side::Plus}) {
                        HPolytope h = ambient(g, n);
                        h.add(cut_halfspace(a, side));
                        out.push_back(make_integrality_claim(
                            n, std::move(h), "ambient with H" + std::string(side == Side::Minus ? "-" : "+") + a.label()));
                    }
                }
            }
            for (auto& c : random_integrality_instances(n, 24)) out.push_back(std::move(c));
            break;
        case LemmaId::Z3PairOverlap:
        case LemmaId::Z3SameChannelPair:
            for (int ch : channels(g)) {
                auto all = all_cut_indices(g, n, ch);
                for (size_t i = 0; i < all.size(); ++i) {
                    for (size_t j = i + 1; j < all.size(); ++j) {
                        const auto& a = all[i];
                        const auto& b = all[j];
                        const int diff = differing_digits(a, b);
                        if (lemma == LemmaId::Z3PairOverlap && diff > 2 && mod3(a.digit_sum()) == mod3(b.digit_sum())) {
                            emit({a, b});
                        }
                        if (lemma == LemmaId::Z3SameChannelPair && diff == 2 && a.admissible() && b.admissible()) {
                            emit({a, b});
                        }
                    }
                }
            }
            break;
        case LemmaId::Z3MixedPairOverlap:
        case LemmaId::Z3MixedPair:
            for (auto& a : all_cut_indices(g, n, 1)) {
                for (auto& b : all_cut_indices(g, n, 2)) {
                    if (mod3(a.digit_sum() + b.digit_sum()) != 1) continue;
                    const int cancel = cancelling_digits(a, b);
                    if (lemma == LemmaId::Z3MixedPair && cancel == n - 1) emit({a, b});
                    if (lemma == LemmaId::Z3MixedPairOverlap && cancel < n - 1 && a.digits != b.digits) emit({a, b});
                }
            }
            break;
        case LemmaId::Z3FourCuts: {
            auto ones = admissible_of_channel(g, n, 1);
            auto twos = admissible_of_channel(g, n, 2);
            for (size_t i = 0; i < ones.size(); ++i) {
                for (size_t j = i + 1; j < ones.size(); ++j) {
                    for (size_t k = 0; k < twos.size(); ++k) {
                        for (size_t l = k + 1; l < twos.size(); ++l) emit({ones[i], ones[j], twos[k], twos[l]});
                    }
                }
            }
            break;
        }
    }
    return out;
}

LemmaVerdict check_lemma(const LemmaClaim& claim, const GuardRails& rails) {
    validate(claim);
    const HPolytope piece =
        claim.explicit_piece ? *claim.explicit_piece : cut_piece(CutSpec{claim.group, claim.n, claim.cuts});
    const VPolytope v = vertex_enumeration(piece);
    const int d = piece.dim;

    if (const auto* vol = std::get_if<VolumeClaim>(&claim.claim)) {
        const Rat got = v.empty() ? Rat(0) : lattice_volume(v, rails);
        return {got == vol->value, to_string(vol->value), to_string(got)};
    }
    if (std::holds_alternative<ZeroVolumeClaim>(claim.claim)) {
        if (v.empty()) return {true, "volume 0", "empty"};
        const int k = affine_dim(v);
        return {k < d, "volume 0", "dim " + std::to_string(k) + " of " + std::to_string(d)};
    }
    if (const auto* in = std::get_if<ContainedInClaim>(&claim.claim)) {
        if (v.empty()) return {true, "contained", "empty"};
        for (const auto& cand : in->candidates) {
            const HalfSpace h = cut_halfspace(cand, Side::Minus);
            if (std::all_of(v.vertices.begin(), v.vertices.end(), [&](const RatPoint& p) { return satisfies(h, p); })) {
                return {true, "contained", "in H-" + cand.label()};
            }
        }
        return {false, "contained", "no candidate contains the piece"};
    }
    for (const auto& p : v.vertices) {
        for (const auto& x : p) {
            if (x.get_den() != 1) return {false, "integral vertices", "vertex coordinate " + to_string(x)};
        }
    }
    return {true, "integral vertices", std::to_string(v.size()) + " integral vertices"};
}

json report_record(const LemmaClaim& claim, const LemmaVerdict& verdict) {
    return {{"lemma", std::string(lemma_name(claim.lemma))},
            {"group", std::string(group_name(claim.group))},
            {"n", claim.n},
            {"hypothesis", claim.hypothesis},
            {"expected", verdict.expected},
            {"computed", verdict.computed},
            {"verdict", verdict.confirmed ? "confirmed" : "refuted"}};
}

BigInt count_delta_one_triples(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("count_delta_one_triples: n out of range");
    std::vector<Subset> odd;
    for (Subset m = 0; m < (Subset{1} << n); ++m) {
        if (std::popcount(m) % 2 == 1) odd.push_back(m);
    }
    unsigned long long count = 0;
    for (Subset a : odd) {
        for (Subset b : odd) {
            for (Subset c : odd) count += std::popcount(delta_set(a, b, c)) == 1;
        }
    }
    return BigInt(std::to_string(count));
}

Assembly assemble(GroupId g, int n) {
    if (n < 2) throw std::invalid_argument("assemble: n must be >= 2");
    Assembly a{g, n, ambient_volume(g, n), {}, 0, order(g), 0};

    switch (g) {
        case GroupId::Z2: {
            // Distinct cuts overlap in measure zero, so only single pieces count.
            const auto cuts = facet_cuts(g, n);
            a.terms.push_back({"single cuts", -1, static_cast<long>(cuts.size()), cut_formula(FormulaId::Z2Cut, n)});
            break;
        }
        case GroupId::Z2xZ2: {
            if (n > 12) throw std::invalid_argument("assemble: n too large for Z2xZ2 enumeration");
            // Families with two cuts of one channel have measure zero; what
            // remains is singles, cross-channel pairs and alpha-beta-gamma triples.
            const auto cuts = facet_cuts(g, n);
            a.terms.push_back({"single cuts", -1, static_cast<long>(cuts.size()), cut_formula(FormulaId::Z22OneFacet, n)});
            long pairs = 0;
            for (const auto& x : cuts) {
                for (const auto& y : cuts) pairs += x.channel < y.channel;
            }
            a.terms.push_back({"cross-channel pairs", +1, pairs, cut_formula(FormulaId::Z22TwoFacet, n)});

            BigInt triples = count_delta_one_triples(n);
            const Subset e1 = 1;
            a.terms.push_back({"triples with |delta| = 1", -1, triples,
                               cut_formula(FormulaId::Z22ThreeFacet, n, TripleSubsets{e1, e1, e1})});
            break;
        }
        case GroupId::Z3: {
            if (n > 12) throw std::invalid_argument("assemble: n too large for Z3 enumeration");
            const auto ones = admissible_of_channel(g, n, 1);
            const auto twos = admissible_of_channel(g, n, 2);
            a.terms.push_back({"single cuts", -1, static_cast<long>(ones.size() + twos.size()),
                               cut_formula(FormulaId::Z3OneFacet, n)});
            // Mixed pairs with A + B = E_j; every other mixed pair has measure zero.
            long pairs = 0;
            for (const auto& x : ones) {
                for (const auto& y : twos) pairs += cancelling_digits(x, y) == n - 1;
            }
            a.terms.push_back({"mixed pairs with A+B = E_j", +1, pairs, cut_formula(FormulaId::Z3TwoFacet, n)});
            break;
        }
    }

    a.volume = Rat(a.ambient);
    for (const auto& t : a.terms) a.volume += t.sign * Rat(t.count) * t.value;
    a.volume.canonicalize();
    a.degree = a.volume / Rat(a.index);
    a.degree.canonicalize();
    return a;
}

Rat cut_union_volume_brute_force(GroupId g, int n, const GuardRails& rails) {
    const auto cuts = facet_cuts(g, n);
    Rat total = 0;
    std::vector<CutIndex> chosen;
    // Depth-first over families in index order; a zero-volume family has only
    // zero-volume extensions.
    std::function<void(size_t)> extend = [&](size_t start) {
        for (size_t i = start; i < cuts.size(); ++i) {
            chosen.push_back(cuts[i]);
            const Rat v = piece_volume(CutSpec{g, n, chosen}, rails);
            if (sgn(v) != 0) {
                total += (chosen.size() % 2 == 1) ? v : -v;
                extend(i + 1);
            }
            chosen.pop_back();
        }
    };
    extend(0);
    total.canonicalize();
    return total;
}

Rat z3_single_minus_pairs_geometric(int n, const GuardRails& rails) {
    const GroupId g = GroupId::Z3;
    const auto ones = admissible_of_channel(g, n, 1);
    const auto twos = admissible_of_channel(g, n, 2);
    Rat total = 0;
    for (const auto& c : ones) total += piece_volume(CutSpec{g, n, {c}}, rails);
    for (const auto& c : twos) total += piece_volume(CutSpec{g, n, {c}}, rails);
    for (const auto& x : ones) {
        for (const auto& y : twos) total -= piece_volume(CutSpec{g, n, {x, y}}, rails);
    }
    total.canonicalize();
    return total;
}

}  // namespace clawdeg
