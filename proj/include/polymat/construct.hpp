#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "polymat/rank.hpp"

namespace polymat {

// Rank-1 matroid valuing 1 exactly on the subsets meeting A (A nonempty).
RankVector rank_one_matroid(const GroundSet& M, Mask A);

// f - lambda * rank_one(A), validated: lambda <= f(x,y|B) for distinct
// x,y in A and all B in M-A, and lambda <= f(x|M-A) for x in A. The result
// is then guaranteed to be a polymatroid. Throws std::invalid_argument
// naming the failing inequality.
RankVector subtract_rank_one(const RankVector& f, Mask A, const Rat& lambda);
// Same arithmetic without the validity check, for negative testing.
RankVector subtract_rank_one_unchecked(const RankVector& f, Mask A, const Rat& lambda);

// Tightening at an element: subtract f(a|M-a) * rank_one(a).
RankVector tighten(const RankVector& f, int elem);
// Folds tighten over the elements of A in label order (the result does not
// depend on the order; that is a tested property).
RankVector tighten_set(const RankVector& f, Mask A);
RankVector tighten_all(const RankVector& f);

// Unique decomposition f = tight + modular.
std::pair<RankVector, RankVector> modular_decomposition(const RankVector& f);

// One-point extension data: e(A) = f_x(xA) - f(A) on ALL subsets of the
// base ground set, including the empty set.
struct ExcessFunction {
    GroundSet ground;          // the base M
    std::vector<Rat> values;   // indexed by mask, size 2^n

    ExcessFunction(GroundSet g, std::vector<Rat> vals);
    const Rat& value(Mask a) const;
    Rat& at(Mask a);
    // e(I|K), e(a,b|K) with the same conventions as rank expressions.
    Rat cond(Mask I, Mask K) const;
    Rat mutual(Mask I, Mask J, Mask K = 0) const;
};

// Excess with value u+t on the empty set and u elsewhere (u, t >= 0).
ExcessFunction uniform_excess(const GroundSet& M, const Rat& u, const Rat& t);
// Excess with value u+t on the empty set and on {c}, u elsewhere.
ExcessFunction pointed_excess(const GroundSet& M, int c, const Rat& u, const Rat& t);

// The three validity conditions for a one-point extension; empty when the
// extension of f by e is a polymatroid. Each entry names the condition and
// the witnessing subsets.
std::vector<std::string> excess_violations(const RankVector& f, const ExcessFunction& e);

// Extension to M + x with f_x(Ax) = f(A) + e(A); throws with all violation
// witnesses when the excess is invalid.
RankVector extend_by_excess(const RankVector& f, const std::string& xlabel,
                            const ExcessFunction& e);
RankVector extend_by_excess_unchecked(const RankVector& f, const std::string& xlabel,
                                      const ExcessFunction& e);

// Invertible re-coordinatization of rank vectors on a 4-element ground set
// {a, b, x1, x2} by 15 information expressions, in this fixed order:
//   -ingleton[a,b,x1,x2];
//   (a,b|x1), (a,b|x2), (a,x1|b), (b,x1|a), (a,x2|b), (b,x2|a);
//   (x1,x2|a), (x1,x2|b), (x1,x2), (a,b|x1x2);
//   (a|b.x1.x2), (b|a.x1.x2), (x1|a.b.x2), (x2|a.b.x1).
// Vectors with all 15 coordinates nonnegative are polymatroids.
using NaturalCoords = std::array<Rat, 15>;

NaturalCoords natural_coords(const RankVector& f);
RankVector from_natural_coords(const NaturalCoords& v, const GroundSet& four);

// Lists of generator vectors over the rationals, one list per ground element.
struct SubspaceArrangement {
    int dim = 0;
    std::vector<std::vector<std::vector<Rat>>> generators;
};

// f(A) = rank of the matrix stacking all generators of elements of A,
// by exact elimination.
RankVector subspace_rank(const SubspaceArrangement& s, const GroundSet& M);

}  // namespace polymat
