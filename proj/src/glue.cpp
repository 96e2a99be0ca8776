#include "polymat/glue.hpp"

#include <algorithm>
#include <stdexcept>

#include "polymat/simplex.hpp"

namespace polymat {

namespace {

// Mask translating subsets of `sub` (its own indexing) into `big` indexing.
Mask lift_mask(const GroundSet& sub, const GroundSet& big, Mask m) {
    Mask out = 0;
    for (int i = 0; i < sub.size(); ++i)
        if (m & sub.singleton(i)) {
            int j = big.index_of(sub.label(i));
            if (j < 0) throw std::invalid_argument("label missing from ground set");
            out |= big.singleton(j);
        }
    return out;
}

}  // namespace

ExtensionPair ExtensionPair::make(RankVector fx, RankVector fy,
                                  const std::vector<std::string>& base_labels) {
    ExtensionPair p;
    p.base = GroundSet(base_labels);
    for (const auto& l : base_labels) {
        if (!fx.ground().contains(l))
            throw std::invalid_argument("base label '" + l + "' missing from the first extension");
        if (!fy.ground().contains(l))
            throw std::invalid_argument("base label '" + l + "' missing from the second extension");
    }
    std::vector<std::string> merged_labels = base_labels;
    std::vector<std::string> xl, yl;
    for (const auto& l : fx.ground().labels())
        if (p.base.index_of(l) < 0) xl.push_back(l);
    for (const auto& l : fy.ground().labels())
        if (p.base.index_of(l) < 0) {
            if (std::find(xl.begin(), xl.end(), l) != xl.end())
                throw std::invalid_argument("extensions share the non-base label '" + l + "'");
            yl.push_back(l);
        }
    merged_labels.insert(merged_labels.end(), xl.begin(), xl.end());
    merged_labels.insert(merged_labels.end(), yl.begin(), yl.end());
    p.merged = GroundSet(merged_labels);

    p.base_mask = lift_mask(p.base, p.merged, p.base.full_mask());
    p.x_mask = 0;
    for (const auto& l : xl) p.x_mask |= p.merged.singleton(p.merged.index_of(l));
    p.y_mask = 0;
    for (const auto& l : yl) p.y_mask |= p.merged.singleton(p.merged.index_of(l));

    // Restrictions to the base must agree exactly.
    std::string diff;
    for (Mask a = 1; a <= p.base.full_mask(); ++a) {
        const Rat& vx = fx.value(lift_mask(p.base, fx.ground(), a));
        const Rat& vy = fy.value(lift_mask(p.base, fy.ground(), a));
        if (vx != vy)
            diff += "\n  " + p.base.subset_name(a) + ": " + show_rat(vx) + " vs " + show_rat(vy);
    }
    if (!diff.empty())
        throw std::invalid_argument("extension pair restrictions differ on the base:" + diff);

    p.fX = std::move(fx);
    p.fY = std::move(fy);
    return p;
}

MergedVector merge(const ExtensionPair& p) {
    MergedVector mv{p.merged, std::vector<Rat>(p.merged.coord_count(), Rat(0)),
                    std::vector<bool>(p.merged.coord_count(), false)};
    const Mask mx = p.base_mask | p.x_mask, my = p.base_mask | p.y_mask;
    for (Mask t = 1; t <= p.merged.full_mask(); ++t) {
        if ((t & ~mx) == 0) {
            Mask s = 0;
            for (int i = 0; i < p.merged.size(); ++i)
                if (t & p.merged.singleton(i))
                    s |= p.fX.ground().singleton(p.fX.ground().index_of(p.merged.label(i)));
            mv.values[t - 1] = p.fX.value(s);
            mv.known[t - 1] = true;
        } else if ((t & ~my) == 0) {
            Mask s = 0;
            for (int i = 0; i < p.merged.size(); ++i)
                if (t & p.merged.singleton(i))
                    s |= p.fY.ground().singleton(p.fY.ground().index_of(p.merged.label(i)));
            mv.values[t - 1] = p.fY.value(s);
            mv.known[t - 1] = true;
        }
    }
    return mv;
}

LinFunctional modularity_functional(const ExtensionPair& p) {
    LinFunctional fn{p.merged, std::vector<Rat>(p.merged.coord_count(), Rat(0))};
    const Mask xm = p.base_mask | p.x_mask, ym = p.base_mask | p.y_mask;
    const Mask all = p.merged.full_mask();
    if (xm != 0) fn.coeffs[xm - 1] += 1;
    if (ym != 0) fn.coeffs[ym - 1] += 1;
    if (all != 0) fn.coeffs[all - 1] -= 1;
    if (p.base_mask != 0) fn.coeffs[p.base_mask - 1] -= 1;
    return fn;
}

namespace {

Certificate decide(const ExtensionPair& p, bool adhesive, WitnessPolicy policy) {
    if (!is_polymatroid(p.fX) || !is_polymatroid(p.fY))
        throw std::invalid_argument("extension pair members must be polymatroids");

    MergedVector mv = merge(p);
    std::vector<Mask> unknown;
    for (Mask t = 1; t <= p.merged.full_mask(); ++t)
        if (!mv.known[t - 1]) unknown.push_back(t);

    FacetMatrix facets = polymatroid_facets(p.merged);
    lp::Constraints cons(unknown.size());
    for (const FacetRow& row : facets.rows) {
        lp::Vec a(unknown.size());
        Rat known_part(0);
        for (std::size_t k = 0; k < unknown.size(); ++k) a[k] = row.fn.coeffs[unknown[k] - 1];
        for (Mask t = 1; t <= p.merged.full_mask(); ++t)
            if (mv.known[t - 1] && sgn(row.fn.coeffs[t - 1]) != 0)
                known_part += row.fn.coeffs[t - 1] * mv.values[t - 1];
        cons.add_ineq(std::move(a), -known_part);
    }
    if (adhesive) {
        LinFunctional mod = modularity_functional(p);
        lp::Vec e(unknown.size());
        Rat known_part(0);
        for (std::size_t k = 0; k < unknown.size(); ++k) e[k] = mod.coeffs[unknown[k] - 1];
        for (Mask t = 1; t <= p.merged.full_mask(); ++t)
            if (mv.known[t - 1] && sgn(mod.coeffs[t - 1]) != 0)
                known_part += mod.coeffs[t - 1] * mv.values[t - 1];
        cons.add_eq(std::move(e), -known_part);
    }

    bool feasible;
    lp::Vec point;
    lp::Farkas farkas;
    if (policy == WitnessPolicy::LexMin) {
        lp::LexResult r = lp::lex_min_point(cons, lp::Vec(unknown.size(), Rat(1)));
        feasible = r.feasible;
        point = std::move(r.point);
        farkas = std::move(r.farkas);
    } else {
        lp::Feasibility r = lp::feasible_point(cons);
        feasible = r.feasible;
        point = std::move(r.point);
        farkas = std::move(r.farkas);
    }

    Certificate cert{Certificate::Kind::Infeasible, std::nullopt, std::nullopt};
    if (feasible) {
        cert.kind = Certificate::Kind::Feasible;
        RankVector w(p.merged, [&] {
            std::vector<Rat> vals = mv.values;
            for (std::size_t k = 0; k < unknown.size(); ++k) vals[unknown[k] - 1] = point[k];
            return vals;
        }());
        cert.witness = std::move(w);
    } else {
        // Scale the multipliers to integers with gcd 1 for stable output.
        std::vector<Rat> all = farkas.ineq_mult;
        all.insert(all.end(), farkas.eq_mult.begin(), farkas.eq_mult.end());
        std::vector<Int> ints = to_integer_vector(all);
        FarkasCombination combo;
        combo.modular_coeff = 0;
        for (std::size_t i = 0; i < farkas.ineq_mult.size(); ++i)
            if (sgn(ints[i]) != 0) combo.facet_coeffs.emplace_back(i, Rat(ints[i]));
        if (adhesive && !farkas.eq_mult.empty()) combo.modular_coeff = Rat(ints.back());
        cert.farkas = std::move(combo);
    }
    return cert;
}

}  // namespace

Certificate has_amalgam(const ExtensionPair& p, WitnessPolicy policy) {
    return decide(p, false, policy);
}

Certificate has_adhesive(const ExtensionPair& p, WitnessPolicy policy) {
    return decide(p, true, policy);
}

VerifyResult verify(const ExtensionPair& p, const Certificate& c, bool adhesive) {
    MergedVector mv = merge(p);
    if (c.kind == Certificate::Kind::Feasible) {
        if (!c.witness) return {false, "feasible certificate without witness"};
        const RankVector& w = *c.witness;
        if (w.ground() != p.merged) return {false, "witness ground set mismatch"};
        for (Mask t = 1; t <= p.merged.full_mask(); ++t)
            if (mv.known[t - 1] && w.value(t) != mv.values[t - 1])
                return {false, "witness does not extend the pair at " + p.merged.subset_name(t)};
        AxiomCheck ax = is_polymatroid(w);
        if (!ax) return {false, "witness violates " + ax.violations.front().tag};
        if (adhesive) {
            if (p.x_mask == 0 || p.y_mask == 0) return {true, ""};
            if (sgn(mutual_info(w, p.x_mask, p.y_mask, p.base_mask)) != 0)
                return {false, "witness is not modular over the base"};
        }
        return {true, ""};
    }

    if (!c.farkas) return {false, "infeasible certificate without combination"};
    const FarkasCombination& fc = *c.farkas;
    if (!adhesive && sgn(fc.modular_coeff) != 0)
        return {false, "amalgam certificate must not use the modularity row"};
    FacetMatrix facets = polymatroid_facets(p.merged);
    std::vector<Rat> combo(p.merged.coord_count(), Rat(0));
    for (const auto& [idx, coeff] : fc.facet_coeffs) {
        if (idx >= facets.rows.size()) return {false, "facet index out of range"};
        if (sgn(coeff) < 0) return {false, "negative facet multiplier"};
        for (std::size_t t = 0; t < combo.size(); ++t)
            combo[t] += coeff * facets.rows[idx].fn.coeffs[t];
    }
    if (sgn(fc.modular_coeff) != 0) {
        LinFunctional mod = modularity_functional(p);
        for (std::size_t t = 0; t < combo.size(); ++t)
            combo[t] += fc.modular_coeff * mod.coeffs[t];
    }
    Rat value(0);
    for (Mask t = 1; t <= p.merged.full_mask(); ++t) {
        if (!mv.known[t - 1]) {
            if (sgn(combo[t - 1]) != 0)
                return {false, "combination does not vanish on " + p.merged.subset_name(t)};
        } else {
            value += combo[t - 1] * mv.values[t - 1];
        }
    }
    if (sgn(value) >= 0) return {false, "combination is not violated by the known coordinates"};
    return {true, ""};
}

}  // namespace polymat
