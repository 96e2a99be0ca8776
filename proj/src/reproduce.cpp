#include "polymat/reproduce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "polymat/io.hpp"

namespace polymat {

namespace {

std::vector<Mask> dropped_outside(const ProjectionSpec& spec) {
    std::vector<Mask> dropped;
    for (Mask t = 1; t <= spec.ground.full_mask(); ++t)
        if ((t & ~spec.side_x) != 0 && (t & ~spec.side_y) != 0) dropped.push_back(t);
    return dropped;
}

std::set<std::vector<Int>> normalized_set(const std::vector<LinFunctional>& fns) {
    std::set<std::vector<Int>> out;
    for (const auto& fn : fns) out.insert(to_integer_vector(fn.coeffs));
    return out;
}

// Functionals with a nonzero coefficient on a subset meeting X and on a
// subset meeting Y: the inequalities genuinely tying the two extensions.
bool two_sided(const LinFunctional& fn, Mask x_side, Mask y_side) {
    bool x = false, y = false;
    for (std::size_t t = 1; t <= fn.coeffs.size(); ++t) {
        if (sgn(fn.coeffs[t - 1]) == 0) continue;
        if (static_cast<Mask>(t) & x_side) x = true;
        if (static_cast<Mask>(t) & y_side) y = true;
    }
    return x && y;
}

// Index of a restricted row by its exact source tag set, or npos.
std::size_t row_by_sources(const FacetMatrix& m, const RestrictedRows& rr,
                           const std::vector<std::string>& tags) {
    for (std::size_t i = 0; i < rr.rows.size(); ++i) {
        if (rr.sources[i].size() != tags.size()) continue;
        bool all = true;
        for (std::size_t k = 0; k < tags.size(); ++k)
            if (m.rows[rr.sources[i][k]].tag != tags[k]) {
                all = false;
                break;
            }
        if (all) return i;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

ProjectionSpec projection_3_1_1() {
    GroundSet g({"a", "b", "c", "x", "y"});
    return {g, g.mask_of({"a", "b", "c", "x"}), g.mask_of({"a", "b", "c", "y"})};
}

ProjectionSpec projection_2_2_1() {
    GroundSet g({"a", "b", "x1", "x2", "y"});
    return {g, g.mask_of({"a", "b", "x1", "x2"}), g.mask_of({"a", "b", "y"})};
}

ProjectionRun run_projection(const ProjectionSpec& spec, int threads, bool with_candidates) {
    ProjectionRun run;
    run.facets = polymatroid_facets(spec.ground);
    std::vector<Mask> dropped = dropped_outside(spec);
    if (dropped.empty()) throw std::invalid_argument("run_projection: nothing to drop");
    run.restricted = restricted_rows(run.facets, dropped);

    const Mask base = spec.side_x & spec.side_y;
    const Mask xs = spec.side_x & ~base, ys = spec.side_y & ~base;
    if (popcount(xs) == 1 && popcount(ys) == 1) {
        // Base monotonicity rows restrict to mirrors of the merged
        // (i,x|..)/(i,y|..) class and have no kept coordinates; drop them to
        // match the pinned counts. The facet set is unchanged either way.
        RestrictedRows trimmed;
        trimmed.dropped = run.restricted.dropped;
        for (std::size_t i = 0; i < run.restricted.rows.size(); ++i) {
            bool skip = false;
            if (run.restricted.sources[i].size() == 1) {
                const std::string& tag = run.facets.rows[run.restricted.sources[i][0]].tag;
                for (int e = 0; e < spec.ground.size(); ++e)
                    if ((base & spec.ground.singleton(e)) &&
                        tag == monotone_tag(spec.ground, e)) {
                        skip = true;
                        break;
                    }
            }
            if (skip) continue;
            trimmed.rows.push_back(run.restricted.rows[i]);
            trimmed.sources.push_back(run.restricted.sources[i]);
        }
        run.restricted = std::move(trimmed);
    }

    run.cone = combination_cone(run.facets, run.restricted);
    run.rays = extreme_rays(run.cone, {threads});
    if (with_candidates)
        run.candidates = projection_candidates(run.rays, run.facets, run.restricted);
    return run;
}

Report reproduce_amalgam3(int threads) {
    Report rep;
    ProjectionSpec spec = projection_3_1_1();
    ProjectionRun run = run_projection(spec, threads);
    rep.put("rows", static_cast<long>(run.restricted.rows.size()));
    rep.put("rays", static_cast<long>(run.rays.rays.size()));
    rep.check("rows == 27", run.restricted.rows.size() == 27);
    rep.check("rays == 154", run.rays.rays.size() == 154);

    // The distinguished ray: every displayed row once, the last one twice.
    std::vector<Int> spot(run.restricted.rows.size(), Int(0));
    bool tags_found = true;
    auto put = [&](const std::vector<std::string>& tags, long coeff) {
        std::size_t i = row_by_sources(run.facets, run.restricted, tags);
        if (i == static_cast<std::size_t>(-1)) {
            tags_found = false;
            return;
        }
        spot[i] = coeff;
    };
    put({"(c,x|y)", "(c,y|x)"}, 1);
    put({"(a,b|xy)"}, 1);
    put({"(x,y|a)"}, 1);
    put({"(x,y|b)"}, 1);
    put({"(a,x|cy)", "(a,y|cx)"}, 1);
    put({"(c,x|aby)", "(c,y|abx)"}, 1);
    put({"(b,x|acy)", "(b,y|acx)"}, 1);
    put({"(x|abcy)", "(y|abcx)"}, 2);
    rep.check("spot ray assembled", tags_found);
    rep.check("spot ray among the extreme rays",
              std::find(run.rays.rays.begin(), run.rays.rays.end(), spot) != run.rays.rays.end());

    rep.put("candidates", static_cast<long>(run.candidates.size()));
    FacetFilter filter = facet_filter(run.candidates);
    rep.put("facets", static_cast<long>(filter.facets.size()));
    rep.put("redundant", static_cast<long>(filter.redundant.size()));
    rep.check("filter certificates re-verify", reverify_filter(run.candidates, filter));

    // Two-sided facets coincide with the deduplicated template orbit.
    const Mask xs = spec.ground.singleton(3), ys = spec.ground.singleton(4);
    std::vector<LinFunctional> twoside;
    for (std::size_t q : filter.facets)
        if (two_sided(run.candidates[q], xs, ys)) twoside.push_back(run.candidates[q]);
    rep.put("two-sided facets", static_cast<long>(twoside.size()));
    std::vector<LinFunctional> family;
    for (const auto& inst : amalgam3_family().instances) family.push_back(inst.fn);
    rep.put("family instances", static_cast<long>(family.size()));
    rep.check("two-sided facets == family orbit", normalized_set(twoside) == normalized_set(family));

    // Back-combinations of the distinguished ray: the template instances it
    // carries are facets, the sibling choices are redundant.
    RayList one;
    one.rays.push_back(spot);
    std::vector<LinFunctional> expanded = projection_candidates(one, run.facets, run.restricted);
    rep.put("spot ray back-combinations", static_cast<long>(expanded.size()));
    rep.check("spot ray expands to 32 candidates", expanded.size() == 32);
    std::set<std::vector<Int>> fam_set = normalized_set(family);
    std::set<std::vector<Int>> facet_set;
    for (std::size_t q : filter.facets) facet_set.insert(to_integer_vector(run.candidates[q].coeffs));
    std::size_t families = 0, siblings = 0;
    bool siblings_redundant = true;
    std::set<std::vector<Int>> redundant_set;
    for (std::size_t q : filter.redundant)
        redundant_set.insert(to_integer_vector(run.candidates[q].coeffs));
    for (const auto& fn : expanded) {
        std::vector<Int> key = to_integer_vector(fn.coeffs);
        if (fam_set.count(key)) {
            ++families;
            if (!facet_set.count(key)) siblings_redundant = false;
        } else {
            ++siblings;
            if (!redundant_set.count(key)) siblings_redundant = false;
        }
    }
    rep.put("template instances from the spot ray", static_cast<long>(families));
    rep.put("sibling combinations", static_cast<long>(siblings));
    rep.check("8 template instances, 24 siblings", families == 8 && siblings == 24);
    rep.check("siblings classified redundant, instances facets", siblings_redundant);
    return rep;
}

Report reproduce_sticky21(int threads) {
    Report rep;
    ProjectionSpec spec = projection_2_2_1();
    ProjectionRun run = run_projection(spec, threads);
    rep.put("rows", static_cast<long>(run.restricted.rows.size()));
    rep.put("rays", static_cast<long>(run.rays.rays.size()));
    rep.check("rows == 48", run.restricted.rows.size() == 48);
    rep.check("rays == 6938", run.rays.rays.size() == 6938);

    // Displayed combination: the eleven middle rows once, the last three times.
    std::vector<Int> spot(run.restricted.rows.size(), Int(0));
    bool tags_found = true;
    auto put = [&](const std::vector<std::string>& tags, long coeff) {
        std::size_t i = row_by_sources(run.facets, run.restricted, tags);
        if (i == static_cast<std::size_t>(-1)) {
            tags_found = false;
            return;
        }
        spot[i] = coeff;
    };
    put({"(a,b|x1.y)"}, 1);
    put({"(x1,x2|y)"}, 1);
    put({"(a,b|x2.y)"}, 1);
    put({"(a,y|x1.x2)"}, 1);
    put({"(x1,y|a)"}, 1);
    put({"(x2,y|a)"}, 1);
    put({"(b,y|a.x1.x2)"}, 1);
    put({"(x1,y|b)"}, 1);
    put({"(x2,y|b)"}, 1);
    put({"(x2,y|a.b.x1)"}, 1);
    put({"(x1,y|a.b.x2)"}, 1);
    put({"(y|a.b.x1.x2)"}, 3);
    rep.check("spot combination assembled", tags_found);
    rep.check("spot combination among the extreme rays",
              std::find(run.rays.rays.begin(), run.rays.rays.end(), spot) != run.rays.rays.end());

    rep.put("candidates", static_cast<long>(run.candidates.size()));
    FacetFilter filter = facet_filter(run.candidates);
    rep.put("facets", static_cast<long>(filter.facets.size()));
    rep.check("filter certificates re-verify", reverify_filter(run.candidates, filter));

    const Mask xs = spec.ground.singleton(2) | spec.ground.singleton(3);
    const Mask ys = spec.ground.singleton(4);
    std::vector<LinFunctional> twoside;
    for (std::size_t q : filter.facets)
        if (two_sided(run.candidates[q], xs, ys)) twoside.push_back(run.candidates[q]);
    rep.put("two-sided facets", static_cast<long>(twoside.size()));
    std::vector<LinFunctional> family;
    for (const auto& inst : sticky21_family().instances) family.push_back(inst.fn);
    rep.put("family instances", static_cast<long>(family.size()));
    rep.check("two-sided facets == family orbit", normalized_set(twoside) == normalized_set(family));
    return rep;
}

Report reproduce_ex1() {
    Report rep;
    GlueExample ex = uniform_base_example();
    const GroundSet& gx = ex.fx.ground();
    const GroundSet& gy = ex.fy.ground();
    rep.check("fx is a polymatroid", bool(is_polymatroid(ex.fx)));
    rep.check("fy is a polymatroid", bool(is_polymatroid(ex.fy)));
    rep.check("fx(x)=3, fx(ax)=5, fx(abcx)=7",
              ex.fx.value(gx.mask_of({"x"})) == 3 && ex.fx.value(gx.mask_of({"a", "x"})) == 5 &&
                  ex.fx.value(gx.full_mask()) == 7);
    rep.check("fy(cy)=7, fy(ay)=5",
              ex.fy.value(gy.mask_of({"c", "y"})) == 7 && ex.fy.value(gy.mask_of({"a", "y"})) == 5);
    rep.check("fxy(xy)=5, fxy(abcxy)=7",
              ex.fxy.value(ex.fxy.ground().mask_of({"x", "y"})) == 5 &&
                  ex.fxy.value(ex.fxy.ground().full_mask()) == 7);

    Certificate table_witness{Certificate::Kind::Feasible, ex.fxy, std::nullopt};
    rep.check("explicit amalgam verifies", bool(verify(ex.pair, table_witness, false)));

    Certificate am = has_amalgam(ex.pair);
    rep.check("amalgam: FEASIBLE", am.feasible());
    rep.check("amalgam certificate verifies", bool(verify(ex.pair, am, false)));

    Certificate ad = has_adhesive(ex.pair);
    rep.check("adhesive: INFEASIBLE", !ad.feasible());
    rep.check("adhesive certificate verifies", bool(verify(ex.pair, ad, true)));

    MergedVector mv = merge(ex.pair);
    std::vector<Rat> vals = adhesive3_family().evaluate(mv);
    rep.check("an adhesivity instance evaluates to -2",
              std::find(vals.begin(), vals.end(), rat(-2)) != vals.end());
    rep.check("amalgam instances all hold", amalgam3_family().all_hold(mv));

    auto [arr_x, arr_y] = uniform_example_arrangements();
    rep.check("subspace ranks reproduce fx", subspace_rank(arr_x, gx) == ex.fx);
    rep.check("subspace ranks reproduce fy", subspace_rank(arr_y, gy) == ex.fy);

    RankVector tx = tighten(ex.fx, gx.index_of("x"));
    RankVector ty = tighten(ex.fy, gy.index_of("y"));
    ExtensionPair tightened = ExtensionPair::make(tx, ty, {"a", "b", "c"});
    Certificate tam = has_amalgam(tightened);
    rep.check("tightened pair amalgam: INFEASIBLE", !tam.feasible());
    rep.check("tightened pair certificate verifies", bool(verify(tightened, tam, false)));
    return rep;
}

Report reproduce_nonsticky1() {
    Report rep;
    GroundSet abc({"a", "b", "c"});
    RankVector f(abc);
    for (Mask s = 1; s <= abc.full_mask(); ++s) f.at(s) = popcount(s) == 1 ? 4 : 6;
    ExtensionPair pair = nonsticky_pair(f);
    const GroundSet& gx = pair.fX.ground();
    const GroundSet& gy = pair.fY.ground();
    rep.check("fx(a,b|x) == 0",
              sgn(mutual_info(pair.fX, gx.mask_of({"a"}), gx.mask_of({"b"}), gx.mask_of({"x"}))) == 0);
    rep.check("fy(c,y) == 0",
              sgn(mutual_info(pair.fY, gy.mask_of({"c"}), gy.mask_of({"y"}))) == 0);

    MergedVector mv = merge(pair);
    std::vector<Rat> vals = amalgam3_family().evaluate(mv);
    rep.check("a criterion instance evaluates to -2",
              std::find(vals.begin(), vals.end(), rat(-2)) != vals.end());

    Certificate am = has_amalgam(pair);
    rep.check("amalgam: INFEASIBLE", !am.feasible());
    rep.check("certificate verifies", bool(verify(pair, am, false)));

    // Probe: without the pairwise ordering hypotheses the construction has
    // no valid excess. (a,b) = 2 exceeds (a,c) = 0 here.
    RankVector g(abc, {rat(2), rat(2), rat(2), rat(2), rat(4), rat(4), rat(4)});
    bool throws = false;
    try {
        nonsticky_pair(g);
    } catch (const std::invalid_argument&) {
        throws = true;
    }
    rep.check("construction rejected without ordering hypotheses", throws);
    bool excess_invalid =
        !excess_violations(g, uniform_excess(abc, Rat(0), mutual_info(g, 1, 2))).empty();
    rep.check("uniform excess itself invalid there", excess_invalid);
    return rep;
}

Report reproduce_nonsticky2() {
    Report rep;
    GroundSet ab({"a", "b"});
    RankVector f(ab, {rat(2), rat(2), rat(3)});
    rep.check("base not 2-sticky by the criterion", !two_sticky_criterion(f));

    TwoStickyRefutation r = two_sticky_pair(f, rat(1, 2));
    const GroundSet& g4 = r.pair.fX.ground();
    rep.check("fX extends f", restrict_to(r.pair.fX, g4.mask_of({"a", "b"})) == f);
    rep.check("fX is a polymatroid", bool(is_polymatroid(r.pair.fX)));
    Rat ing = ingleton(r.pair.fX, g4.mask_of({"a"}), g4.mask_of({"b"}), g4.mask_of({"x1"}),
                       g4.mask_of({"x2"}));
    rep.put("ingleton value", show_rat(ing));
    rep.check("ingleton == -1/2", ing == rat(-1, 2));

    MergedVector mv = merge(r.pair);
    std::vector<Rat> vals = sticky21_family().evaluate(mv);
    rep.check("a criterion instance evaluates to -1/2",
              std::find(vals.begin(), vals.end(), rat(-1, 2)) != vals.end());

    Certificate am = has_amalgam(r.pair);
    rep.check("amalgam: INFEASIBLE", !am.feasible());
    rep.check("certificate verifies", bool(verify(r.pair, am, false)));

    rep.check("modular two-element base is 2-sticky by the criterion",
              two_sticky_criterion(RankVector(ab, {rat(1), rat(1), rat(2)})));
    rep.check("determined two-element base is 2-sticky by the criterion",
              two_sticky_criterion(RankVector(ab, {rat(1), rat(1), rat(1)})));
    return rep;
}

namespace {

struct PrintedRow {
    std::vector<long> entries;                // printed column order
    std::vector<std::string> tags;            // full facet names
};

Report reproduce_table(const ProjectionSpec& spec, const std::vector<Mask>& printed_cols,
                       const std::vector<PrintedRow>& expected) {
    Report rep;
    FacetMatrix m = polymatroid_facets(spec.ground);
    RestrictedRows rr = restricted_rows(m, dropped_outside(spec));
    // column permutation internal -> printed
    std::vector<std::size_t> perm;
    for (Mask c : printed_cols) {
        auto it = std::find(rr.dropped.begin(), rr.dropped.end(), c);
        if (it == rr.dropped.end()) throw std::logic_error("printed column not dropped");
        perm.push_back(static_cast<std::size_t>(it - rr.dropped.begin()));
    }
    for (const auto& row : expected) {
        std::size_t i = row_by_sources(m, rr, row.tags);
        std::string name = row.tags.front();
        if (i == static_cast<std::size_t>(-1)) {
            rep.check("row " + name + " present", false);
            continue;
        }
        bool same = true;
        for (std::size_t k = 0; k < perm.size(); ++k)
            if (rr.rows[i][perm[k]] != row.entries[k]) same = false;
        rep.check("row " + name + " entries match", same);
    }
    return rep;
}

}  // namespace

Report reproduce_table1() {
    ProjectionSpec spec = projection_3_1_1();
    const GroundSet& g = spec.ground;
    std::vector<Mask> cols = {
        g.mask_of({"x", "y"}),           g.mask_of({"a", "x", "y"}),
        g.mask_of({"b", "x", "y"}),      g.mask_of({"c", "x", "y"}),
        g.mask_of({"a", "b", "x", "y"}), g.mask_of({"a", "c", "x", "y"}),
        g.mask_of({"b", "c", "x", "y"}), g.full_mask()};
    std::vector<PrintedRow> rows = {
        {{-1, 0, 0, 0, 0, 0, 0, 0}, {"(x,y)"}},
        {{1, 0, 0, -1, 0, 0, 0, 0}, {"(c,x|y)", "(c,y|x)"}},
        {{-1, 1, 1, 0, -1, 0, 0, 0}, {"(a,b|xy)"}},
        {{0, -1, 0, 0, 0, 0, 0, 0}, {"(x,y|a)"}},
        {{0, 0, -1, 0, 0, 0, 0, 0}, {"(x,y|b)"}},
        {{0, 0, 0, 1, 0, -1, 0, 0}, {"(a,x|cy)", "(a,y|cx)"}},
        {{0, 0, 0, 0, 1, 0, 0, -1}, {"(c,x|aby)", "(c,y|abx)"}},
        {{0, 0, 0, 0, 0, 1, 0, -1}, {"(b,x|acy)", "(b,y|acx)"}},
        {{0, 0, 0, 0, 0, 0, 0, 1}, {"(x|abcy)", "(y|abcx)"}},
    };
    return reproduce_table(spec, cols, rows);
}

Report reproduce_table3() {
    ProjectionSpec spec = projection_2_2_1();
    const GroundSet& g = spec.ground;
    auto mk = [&](std::vector<std::string> ls) { return g.mask_of(ls); };
    std::vector<Mask> cols = {mk({"x1", "y"}),
                              mk({"x2", "y"}),
                              mk({"x1", "x2", "y"}),
                              mk({"a", "x1", "y"}),
                              mk({"a", "x2", "y"}),
                              mk({"a", "x1", "x2", "y"}),
                              mk({"b", "x1", "y"}),
                              mk({"b", "x2", "y"}),
                              mk({"b", "x1", "x2", "y"}),
                              mk({"a", "b", "x1", "y"}),
                              mk({"a", "b", "x2", "y"}),
                              g.full_mask()};
    std::vector<PrintedRow> rows = {
        {{1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0}, {"(a,x1|y)", "(a,y|x1)"}},
        {{-1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0}, {"(a,b|x1.y)"}},
        {{1, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {"(x1,x2|y)"}},
        {{0, -1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0}, {"(a,b|x2.y)"}},
        {{0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0}, {"(a,y|x1.x2)"}},
        {{0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0}, {"(x1,y|a)"}},
        {{0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0}, {"(x2,y|a)"}},
        {{0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, -1}, {"(b,y|a.x1.x2)"}},
        {{0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0}, {"(x1,y|b)"}},
        {{0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0}, {"(x2,y|b)"}},
        {{0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1}, {"(x2,y|a.b.x1)"}},
        {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1}, {"(x1,y|a.b.x2)"}},
        {{0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}, {"(y|a.b.x1.x2)"}},
    };
    return reproduce_table(spec, cols, rows);
}

Report run_target(const std::string& target, int threads) {
    if (target == "ex1") return reproduce_ex1();
    if (target == "amalgam3") return reproduce_amalgam3(threads);
    if (target == "sticky21") return reproduce_sticky21(threads);
    if (target == "nonsticky1") return reproduce_nonsticky1();
    if (target == "nonsticky2") return reproduce_nonsticky2();
    if (target == "table1") return reproduce_table1();
    if (target == "table3") return reproduce_table3();
    throw std::invalid_argument("unknown reproduce target '" + target + "'");
}

std::vector<std::string> reproduce_targets() {
    return {"amalgam3", "sticky21", "ex1", "nonsticky1", "nonsticky2", "table1", "table3"};
}

}  // namespace polymat
