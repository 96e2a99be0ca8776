#include "polymat/theorems.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polymat {

namespace {

void add_cond(LinFunctional& fn, Mask I, Mask K, const Rat& w) {
    fn.coeffs[(I | K) - 1] += w;
    if (K != 0) fn.coeffs[K - 1] -= w;
}

void add_mutual(LinFunctional& fn, Mask I, Mask J, Mask K, const Rat& w) {
    fn.coeffs[(I | K) - 1] += w;
    fn.coeffs[(J | K) - 1] += w;
    fn.coeffs[(I | J | K) - 1] -= w;
    if (K != 0) fn.coeffs[K - 1] -= w;
}

void add_ingleton(LinFunctional& fn, Mask I, Mask J, Mask K, Mask L, const Rat& w) {
    add_mutual(fn, I, J, 0, -w);
    add_mutual(fn, I, J, K, w);
    add_mutual(fn, I, J, L, w);
    add_mutual(fn, K, L, 0, w);
}

struct FamilyBuilder {
    GroundSet ground;
    std::map<std::vector<Int>, std::string> seen;

    void add(LinFunctional fn, std::string expr) {
        fn.normalize();
        if (fn.is_zero()) return;
        seen.try_emplace(to_integer_vector(fn.coeffs), std::move(expr));
    }

    InequalityFamily build(std::string name) const {
        InequalityFamily fam{std::move(name), ground, {}};
        for (const auto& [coeffs, expr] : seen) {
            LinFunctional fn{ground, {}};
            fn.coeffs.reserve(coeffs.size());
            for (const Int& c : coeffs) fn.coeffs.emplace_back(c);
            fam.instances.push_back({std::move(fn), expr});
        }
        return fam;
    }
};

// Instances of the three-element amalgam/adhesivity criterion under the role
// assignment (ea, eb, ec, ex, ey); with_tight_term selects the amalgam form.
void amalgam3_instances(FamilyBuilder& fb, int ea, int eb, int ec, int ex, int ey,
                        bool with_tight_term) {
    const GroundSet& g = fb.ground;
    const Mask A = g.singleton(ea), B = g.singleton(eb), C = g.singleton(ec);
    const Mask X = g.singleton(ex), Y = g.singleton(ey);
    const std::string a = g.label(ea), b = g.label(eb), c = g.label(ec);
    const std::string x = g.label(ex), y = g.label(ey);
    auto side = [&](Mask E) { return E == X ? "f" + x : "f" + y; };

    for (int tb = 0; tb < 2; ++tb)
        for (int tc = 0; tc < 2; ++tc)
            for (int tl = 0; tl < (with_tight_term ? 2 : 1); ++tl) {
                LinFunctional fn{g, std::vector<Rat>(g.coord_count(), Rat(0))};
                std::string expr;
                add_mutual(fn, A, X, C, Rat(1));
                expr += side(X) + "(" + a + "," + x + "|" + c + ")";
                add_mutual(fn, A, B, X, Rat(1));
                expr += " + " + side(X) + "(" + a + "," + b + "|" + x + ")";
                add_mutual(fn, A, B, Y, Rat(1));
                expr += " + " + side(Y) + "(" + a + "," + b + "|" + y + ")";
                add_mutual(fn, C, Y, 0, Rat(1));
                expr += " + " + side(Y) + "(" + c + "," + y + ")";

                Mask E = tb ? Y : X;
                add_mutual(fn, B, E, A | C, Rat(1));
                expr += " + " + side(E) + "(" + b + "," + g.subset_name(E) + "|" + a + c + ")";
                E = tc ? Y : X;
                add_mutual(fn, C, E, A | B, Rat(1));
                expr += " + " + side(E) + "(" + c + "," + g.subset_name(E) + "|" + a + b + ")";
                if (with_tight_term) {
                    E = tl ? Y : X;
                    add_cond(fn, E, A | B | C, Rat(2));
                    expr += " + 2" + side(E) + "(" + g.subset_name(E) + "|" + a + b + c + ")";
                }
                add_mutual(fn, A, B, 0, Rat(-1));
                expr += " >= f(" + a + "," + b + ")";
                fb.add(std::move(fn), std::move(expr));
            }
}

InequalityFamily make_amalgam3(bool with_tight_term, const std::string& name) {
    FamilyBuilder fb{GroundSet({"a", "b", "c", "x", "y"}), {}};
    int perm[3] = {0, 1, 2};
    std::sort(perm, perm + 3);
    do {
        amalgam3_instances(fb, perm[0], perm[1], perm[2], 3, 4, with_tight_term);
        amalgam3_instances(fb, perm[0], perm[1], perm[2], 4, 3, with_tight_term);
    } while (std::next_permutation(perm, perm + 3));
    return fb.build(name);
}

}  // namespace

std::vector<Rat> InequalityFamily::evaluate(const MergedVector& mv) const {
    if (mv.ground != ground) throw std::invalid_argument("family pattern mismatch");
    std::vector<Rat> out;
    out.reserve(instances.size());
    for (const auto& inst : instances) {
        Rat acc(0);
        for (std::size_t t = 0; t < inst.fn.coeffs.size(); ++t) {
            if (sgn(inst.fn.coeffs[t]) == 0) continue;
            if (!mv.known[t])
                throw std::invalid_argument("family instance touches an unknown coordinate");
            acc += inst.fn.coeffs[t] * mv.values[t];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<std::size_t> InequalityFamily::violated(const MergedVector& mv) const {
    std::vector<Rat> vals = evaluate(mv);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (sgn(vals[i]) < 0) out.push_back(i);
    return out;
}

const InequalityFamily& amalgam3_family() {
    static const InequalityFamily fam = make_amalgam3(true, "amalgam3");
    return fam;
}

const InequalityFamily& adhesive3_family() {
    static const InequalityFamily fam = make_amalgam3(false, "adhesive3");
    return fam;
}

const InequalityFamily& sticky21_family() {
    static const InequalityFamily fam = [] {
        FamilyBuilder fb{GroundSet({"a", "b", "x1", "x2", "y"}), {}};
        const GroundSet& g = fb.ground;
        for (int sab = 0; sab < 2; ++sab)
            for (int sx = 0; sx < 2; ++sx)
                for (int alt = 0; alt < 2; ++alt) {
                    int ea = sab ? 1 : 0, eb = sab ? 0 : 1;
                    int e1 = sx ? 3 : 2, e2 = sx ? 2 : 3;
                    const Mask A = g.singleton(ea), B = g.singleton(eb);
                    const Mask X1 = g.singleton(e1), X2 = g.singleton(e2);
                    const Mask Y = g.singleton(4);
                    LinFunctional fn{g, std::vector<Rat>(g.coord_count(), Rat(0))};
                    std::string expr = "fX[";
                    if (alt == 0) {
                        add_ingleton(fn, A, B, X1, X2, Rat(1));
                        expr += g.label(ea) + "," + g.label(eb) + "," + g.label(e1) + "," +
                                g.label(e2);
                    } else {
                        add_ingleton(fn, A, X1, B, X2, Rat(1));
                        expr += g.label(ea) + "," + g.label(e1) + "," + g.label(eb) + "," +
                                g.label(e2);
                    }
                    expr += "]";
                    add_mutual(fn, Y, A, B, Rat(1));
                    expr += " + fy(y," + g.label(ea) + "|" + g.label(eb) + ")";
                    add_mutual(fn, Y, B, A, Rat(1));
                    expr += " + fy(y," + g.label(eb) + "|" + g.label(ea) + ")";
                    add_mutual(fn, A, B, Y, Rat(1));
                    expr += " + fy(" + g.label(ea) + "," + g.label(eb) + "|y)";
                    add_cond(fn, Y, A | B, Rat(3));
                    expr += " + 3fy(y|ab) >= 0";
                    fb.add(std::move(fn), std::move(expr));
                }
        return fb.build("sticky21");
    }();
    return fam;
}

std::vector<Rat> five_var_values(const RankVector& f, const std::array<int, 5>& roles) {
    const GroundSet& g = f.ground();
    if (g.size() < 5) throw std::invalid_argument("five_var_values: need at least 5 elements");
    Mask used = 0;
    for (int r : roles) {
        if (r < 0 || r >= g.size()) throw std::invalid_argument("five_var_values: bad role index");
        used |= g.singleton(r);
    }
    if (popcount(used) != 5) throw std::invalid_argument("five_var_values: roles must be distinct");

    FamilyBuilder fb{g, {}};
    int perm[3] = {0, 1, 2};
    do {
        for (int s = 0; s < 2; ++s)
            amalgam3_instances(fb, roles[static_cast<std::size_t>(perm[0])],
                               roles[static_cast<std::size_t>(perm[1])],
                               roles[static_cast<std::size_t>(perm[2])], roles[s ? 4 : 3],
                               roles[s ? 3 : 4], false);
    } while (std::next_permutation(perm, perm + 3));
    InequalityFamily fam = fb.build("five_var");
    std::vector<Rat> out;
    out.reserve(fam.instances.size());
    for (const auto& inst : fam.instances) out.push_back(inst.fn.value_on(f));
    return out;
}

GlueExample uniform_base_example() {
    GroundSet abc({"a", "b", "c"});
    RankVector base(abc);
    for (Mask s = 1; s <= abc.full_mask(); ++s) base.at(s) = popcount(s) == 1 ? 4 : 6;

    RankVector fx = extend_by_excess(base, "x", uniform_excess(abc, rat(1), rat(2)));
    RankVector fy = extend_by_excess(base, "y", pointed_excess(abc, 2, rat(1), rat(2)));

    // The explicit amalgam: values by |A| for the four blocks A, Ax, Ay, Axy.
    GroundSet abcxy({"a", "b", "c", "x", "y"});
    const Mask x = abcxy.singleton(3), y = abcxy.singleton(4);
    RankVector fxy(abcxy);
    for (Mask A = 0; A <= 7; ++A) {
        static const int plain[4] = {0, 4, 6, 6};
        static const int withx[4] = {3, 5, 7, 7};
        static const int withxy[4] = {5, 6, 7, 7};
        int k = popcount(A);
        if (A != 0) fxy.at(A) = plain[k];
        fxy.at(A | x) = withx[k];
        // Ay: like Ax except that cy jumps to 7.
        fxy.at(A | y) = (A == 4) ? 7 : withx[k];
        fxy.at(A | x | y) = (A == 4) ? 7 : withxy[k];
    }

    ExtensionPair pair = ExtensionPair::make(fx, fy, {"a", "b", "c"});
    return {std::move(base), std::move(fx), std::move(fy), std::move(fxy), std::move(pair)};
}

std::pair<SubspaceArrangement, SubspaceArrangement> uniform_example_arrangements() {
    // Seven independent vectors s1, s2, u1, u2, v1, v2, r.
    auto unit = [](int i) {
        std::vector<Rat> v(7, Rat(0));
        v[static_cast<std::size_t>(i)] = 1;
        return v;
    };
    auto s1 = unit(0), s2 = unit(1), u1 = unit(2), u2 = unit(3), v1 = unit(4), v2 = unit(5),
         r = unit(6);
    auto plus = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
        return out;
    };
    SubspaceArrangement for_x{7,
                              {{s1, s2, u1, u2},
                               {s1, s2, v1, v2},
                               {s1, s2, plus(u1, v1), plus(u2, v2)},
                               {s1, s2, r}}};
    SubspaceArrangement for_y{7,
                              {{s1, s2, u1, u2},
                               {s1, s2, v1, v2},
                               {u1, u2, v1, v2},
                               {s1, s2, r}}};
    return {std::move(for_x), std::move(for_y)};
}

ExtensionPair nonsticky_pair(const RankVector& f) {
    const GroundSet& g = f.ground();
    if (g.size() != 3) throw std::invalid_argument("nonsticky_pair: three-element base required");
    const Mask a = g.singleton(0), b = g.singleton(1), c = g.singleton(2);
    Rat t = mutual_info(f, a, b);
    Rat u = std::min(t, mutual_info(f, a, b, c));
    if (sgn(t) <= 0 || sgn(mutual_info(f, a, b, c)) <= 0)
        throw std::invalid_argument("nonsticky_pair: needs (a,b) > 0 and (a,b|c) > 0");
    if (t > mutual_info(f, a, c) || t > mutual_info(f, b, c))
        throw std::invalid_argument("nonsticky_pair: needs (a,b) <= (a,c) and (a,b) <= (b,c)");
    RankVector fx = extend_by_excess(f, "x", uniform_excess(g, Rat(0), t));
    RankVector fy = extend_by_excess(f, "y", pointed_excess(g, 2, Rat(0), u));
    return ExtensionPair::make(std::move(fx), std::move(fy), g.labels());
}

bool one_sticky_sufficient(const RankVector& f) {
    const GroundSet& g = f.ground();
    if (g.size() != 3) throw std::invalid_argument("one_sticky_sufficient: three elements required");
    if (!is_polymatroid(f)) throw std::invalid_argument("one_sticky_sufficient: not a polymatroid");
    const Mask a = g.singleton(0), b = g.singleton(1), c = g.singleton(2);
    if (sgn(cond_rank(f, a, b | c)) != 0 || sgn(cond_rank(f, b, a | c)) != 0 ||
        sgn(cond_rank(f, c, a | b)) != 0)
        return false;
    return sgn(mutual_info(f, a, b, c)) == 0 || sgn(mutual_info(f, a, c, b)) == 0 ||
           sgn(mutual_info(f, b, c, a)) == 0;
}

TwoStickyRefutation two_sticky_pair(const RankVector& f, std::optional<Rat> eps) {
    const GroundSet& g = f.ground();
    if (g.size() != 2) throw std::invalid_argument("two_sticky_pair: two-element base required");
    const Mask a = g.singleton(0), b = g.singleton(1);
    Rat iab = mutual_info(f, a, b), ab_ = cond_rank(f, a, b), ba_ = cond_rank(f, b, a);
    Rat bound = std::min(std::min(iab, ab_), ba_);
    if (sgn(bound) <= 0)
        throw std::invalid_argument("two_sticky_pair: needs (a,b), (a|b), (b|a) all positive");
    Rat e = eps.value_or(bound / 2);
    if (sgn(e) <= 0 || e > bound)
        throw std::invalid_argument("two_sticky_pair: eps must satisfy 0 < eps <= min");

    NaturalCoords v;
    v.fill(Rat(0));
    v[0] = e;
    v[7] = ab_ - e;   // (x1,x2|a)
    v[8] = ba_ - e;   // (x1,x2|b)
    v[9] = iab - e;   // (x1,x2)
    GroundSet four({g.label(0), g.label(1), "x1", "x2"});
    RankVector fX = from_natural_coords(v, four);

    RankVector fy = extend_by_excess(f, "y", uniform_excess(g, Rat(0), iab));
    ExtensionPair pair = ExtensionPair::make(std::move(fX), std::move(fy), g.labels());
    return {std::move(pair), std::move(e)};
}

bool two_sticky_criterion(const RankVector& f) {
    const GroundSet& g = f.ground();
    if (g.size() != 2) throw std::invalid_argument("two_sticky_criterion: two elements required");
    if (!is_polymatroid(f)) throw std::invalid_argument("two_sticky_criterion: not a polymatroid");
    const Mask a = g.singleton(0), b = g.singleton(1);
    return sgn(mutual_info(f, a, b)) == 0 || sgn(cond_rank(f, a, b)) == 0 ||
           sgn(cond_rank(f, b, a)) == 0;
}

}  // namespace polymat
