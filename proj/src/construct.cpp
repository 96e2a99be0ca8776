#include "polymat/construct.hpp"

#include <stdexcept>

#include "polymat/linalg.hpp"

namespace polymat {

RankVector rank_one_matroid(const GroundSet& M, Mask A) {
    if (A == 0 || A > M.full_mask()) throw std::invalid_argument("rank_one_matroid: A must be a nonempty subset");
    RankVector out(M);
    for (Mask I = 1; I <= M.full_mask(); ++I)
        if (I & A) out.at(I) = 1;
    return out;
}

RankVector subtract_rank_one_unchecked(const RankVector& f, Mask A, const Rat& lambda) {
    RankVector out = f;
    for (Mask I = 1; I <= f.ground().full_mask(); ++I)
        if (I & A) out.at(I) -= lambda;
    return out;
}

RankVector subtract_rank_one(const RankVector& f, Mask A, const Rat& lambda) {
    const GroundSet& g = f.ground();
    if (A == 0 || A > g.full_mask()) throw std::invalid_argument("subtract_rank_one: A must be a nonempty subset");
    const Mask outside = g.full_mask() & ~A;
    for (int x = 0; x < g.size(); ++x) {
        if (!(A & g.singleton(x))) continue;
        for (int y = x + 1; y < g.size(); ++y) {
            if (!(A & g.singleton(y))) continue;
            for (Mask B = outside;; B = (B - 1) & outside) {
                if (lambda > mutual_info(f, g.singleton(x), g.singleton(y), B))
                    throw std::invalid_argument("subtract_rank_one: lambda > " +
                                                submodular_tag(g, x, y, B));
                if (B == 0) break;
            }
        }
        if (lambda > cond_rank(f, g.singleton(x), outside))
            throw std::invalid_argument("subtract_rank_one: lambda > (" + g.label(x) + "|" +
                                        (outside ? g.subset_name(outside) : std::string("0")) + ")");
    }
    return subtract_rank_one_unchecked(f, A, lambda);
}

RankVector tighten(const RankVector& f, int elem) {
    const GroundSet& g = f.ground();
    if (elem < 0 || elem >= g.size()) throw std::invalid_argument("tighten: bad element index");
    Mask a = g.singleton(elem);
    Rat lambda = cond_rank(f, a, g.full_mask() & ~a);
    return subtract_rank_one_unchecked(f, a, lambda);
}

RankVector tighten_set(const RankVector& f, Mask A) {
    RankVector out = f;
    for (int i = 0; i < f.ground().size(); ++i)
        if (A & f.ground().singleton(i)) out = tighten(out, i);
    return out;
}

RankVector tighten_all(const RankVector& f) { return tighten_set(f, f.ground().full_mask()); }

std::pair<RankVector, RankVector> modular_decomposition(const RankVector& f) {
    RankVector tight = tighten_all(f);
    return {tight, f - tight};
}

ExcessFunction::ExcessFunction(GroundSet g, std::vector<Rat> vals)
    : ground(std::move(g)), values(std::move(vals)) {
    if (values.size() != ground.coord_count() + 1)
        throw std::invalid_argument("excess function needs a value for every subset incl. empty");
}

const Rat& ExcessFunction::value(Mask a) const {
    if (a > ground.full_mask()) throw std::invalid_argument("excess: mask out of range");
    return values[a];
}

Rat& ExcessFunction::at(Mask a) {
    if (a > ground.full_mask()) throw std::invalid_argument("excess: mask out of range");
    return values[a];
}

Rat ExcessFunction::cond(Mask I, Mask K) const {
    if (I & K) throw std::invalid_argument("excess cond: overlap");
    return value(I | K) - value(K);
}

Rat ExcessFunction::mutual(Mask I, Mask J, Mask K) const {
    if ((I & J) || (I & K) || (J & K)) throw std::invalid_argument("excess mutual: overlap");
    return value(I | K) + value(J | K) - value(I | J | K) - value(K);
}

ExcessFunction uniform_excess(const GroundSet& M, const Rat& u, const Rat& t) {
    if (sgn(u) < 0 || sgn(t) < 0) throw std::invalid_argument("uniform_excess: u, t must be nonnegative");
    std::vector<Rat> vals(M.coord_count() + 1, u);
    vals[0] = u + t;
    return ExcessFunction(M, std::move(vals));
}

ExcessFunction pointed_excess(const GroundSet& M, int c, const Rat& u, const Rat& t) {
    if (sgn(u) < 0 || sgn(t) < 0) throw std::invalid_argument("pointed_excess: u, t must be nonnegative");
    if (c < 0 || c >= M.size()) throw std::invalid_argument("pointed_excess: bad element index");
    std::vector<Rat> vals(M.coord_count() + 1, u);
    vals[0] = u + t;
    vals[M.singleton(c)] = u + t;
    return ExcessFunction(M, std::move(vals));
}

std::vector<std::string> excess_violations(const RankVector& f, const ExcessFunction& e) {
    const GroundSet& g = f.ground();
    if (e.ground != g) throw std::invalid_argument("excess ground set mismatch");
    std::vector<std::string> out;
    const Mask full = g.full_mask();
    // 1. nonincreasing and nonnegative; checking one-element steps suffices.
    if (sgn(e.value(full)) < 0)
        out.push_back("excess negative at " + g.subset_name(full));
    for (Mask A = 0; A <= full; ++A)
        for (int i = 0; i < g.size(); ++i) {
            Mask b = g.singleton(i);
            if (A & b) continue;
            if (e.value(A) < e.value(A | b))
                out.push_back("excess increases from " + g.subset_name(A) + " to " +
                              g.subset_name(A | b));
        }
    // 2. e(a|M-a) + f(a|M-a) >= 0.
    for (int i = 0; i < g.size(); ++i) {
        Mask a = g.singleton(i), rest = full & ~a;
        if (sgn(e.cond(a, rest) + cond_rank(f, a, rest)) < 0)
            out.push_back("monotonicity fails at (" + g.label(i) + "|" + g.subset_name(rest) + ")");
    }
    // 3. e(a,b|A) + f(a,b|A) >= 0.
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j) {
            Mask rest = full & ~(g.singleton(i) | g.singleton(j));
            for (Mask A = rest;; A = (A - 1) & rest) {
                if (sgn(e.mutual(g.singleton(i), g.singleton(j), A) +
                        mutual_info(f, g.singleton(i), g.singleton(j), A)) < 0)
                    out.push_back("submodularity fails at " + submodular_tag(g, i, j, A));
                if (A == 0) break;
            }
        }
    return out;
}

RankVector extend_by_excess_unchecked(const RankVector& f, const std::string& xlabel,
                                      const ExcessFunction& e) {
    const GroundSet& g = f.ground();
    if (e.ground != g) throw std::invalid_argument("excess ground set mismatch");
    std::vector<std::string> labels = g.labels();
    labels.push_back(xlabel);
    GroundSet gx(std::move(labels));
    const Mask x = gx.singleton(gx.size() - 1);
    RankVector out(gx);
    for (Mask A = 1; A <= g.full_mask(); ++A) out.at(A) = f.value(A);
    for (Mask A = 0; A <= g.full_mask(); ++A) out.at(A | x) = f.value(A) + e.value(A);
    return out;
}

RankVector extend_by_excess(const RankVector& f, const std::string& xlabel,
                            const ExcessFunction& e) {
    std::vector<std::string> bad = excess_violations(f, e);
    if (!bad.empty()) {
        std::string msg = "invalid excess function:";
        for (const auto& b : bad) msg += "\n  " + b;
        throw std::invalid_argument(msg);
    }
    return extend_by_excess_unchecked(f, xlabel, e);
}

namespace {

// The 15 information expressions as functionals in the rank basis, in the
// fixed coordinate order. a=0, b=1, x1=2, x2=3.
linalg::RatMat natural_forward_matrix(const GroundSet& g) {
    const Mask a = 1, b = 2, x1 = 4, x2 = 8;
    RankVector probe(g);
    linalg::RatMat rows;
    auto expr = [&](auto&& eval) {
        // Expand a linear expression into coordinates by probing unit vectors.
        std::vector<Rat> row(g.coord_count());
        for (Mask s = 1; s <= g.full_mask(); ++s) {
            RankVector unit(g);
            unit.at(s) = 1;
            row[s - 1] = eval(unit);
        }
        rows.push_back(std::move(row));
    };
    expr([&](const RankVector& f) { return -ingleton(f, a, b, x1, x2); });
    expr([&](const RankVector& f) { return mutual_info(f, a, b, x1); });
    expr([&](const RankVector& f) { return mutual_info(f, a, b, x2); });
    expr([&](const RankVector& f) { return mutual_info(f, a, x1, b); });
    expr([&](const RankVector& f) { return mutual_info(f, b, x1, a); });
    expr([&](const RankVector& f) { return mutual_info(f, a, x2, b); });
    expr([&](const RankVector& f) { return mutual_info(f, b, x2, a); });
    expr([&](const RankVector& f) { return mutual_info(f, x1, x2, a); });
    expr([&](const RankVector& f) { return mutual_info(f, x1, x2, b); });
    expr([&](const RankVector& f) { return mutual_info(f, x1, x2); });
    expr([&](const RankVector& f) { return mutual_info(f, a, b, x1 | x2); });
    expr([&](const RankVector& f) { return cond_rank(f, a, b | x1 | x2); });
    expr([&](const RankVector& f) { return cond_rank(f, b, a | x1 | x2); });
    expr([&](const RankVector& f) { return cond_rank(f, x1, a | b | x2); });
    expr([&](const RankVector& f) { return cond_rank(f, x2, a | b | x1); });
    return rows;
}

const linalg::RatMat& natural_inverse_matrix() {
    static const linalg::RatMat inv = [] {
        GroundSet g({"a", "b", "x1", "x2"});
        return linalg::inverse(natural_forward_matrix(g));
    }();
    return inv;
}

}  // namespace

NaturalCoords natural_coords(const RankVector& f) {
    const GroundSet& g = f.ground();
    if (g.size() != 4) throw std::invalid_argument("natural_coords: ground set must have 4 elements");
    linalg::RatMat T = natural_forward_matrix(g);
    NaturalCoords out;
    for (std::size_t i = 0; i < 15; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < 15; ++j) acc += T[i][j] * f.values()[j];
        out[i] = acc;
    }
    return out;
}

RankVector from_natural_coords(const NaturalCoords& v, const GroundSet& four) {
    if (four.size() != 4) throw std::invalid_argument("from_natural_coords: need 4 elements");
    const linalg::RatMat& inv = natural_inverse_matrix();
    std::vector<Rat> vals(15);
    for (std::size_t i = 0; i < 15; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < 15; ++j) acc += inv[i][j] * v[j];
        vals[i] = acc;
    }
    return RankVector(four, std::move(vals));
}

RankVector subspace_rank(const SubspaceArrangement& s, const GroundSet& M) {
    if (static_cast<int>(s.generators.size()) != M.size())
        throw std::invalid_argument("subspace_rank: one generator list per ground element required");
    for (const auto& gens : s.generators)
        for (const auto& v : gens)
            if (static_cast<int>(v.size()) != s.dim)
                throw std::invalid_argument("subspace_rank: generator dimension mismatch");
    RankVector out(M);
    for (Mask A = 1; A <= M.full_mask(); ++A) {
        linalg::RatMat stack;
        for (int i = 0; i < M.size(); ++i)
            if (A & M.singleton(i))
                for (const auto& v : s.generators[static_cast<std::size_t>(i)])
                    stack.push_back(v);
        out.at(A) = linalg::rank(std::move(stack));
    }
    return out;
}

}  // namespace polymat
