#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polymat/construct.hpp"
#include "polymat/glue.hpp"

namespace polymat {

struct FamilyInstance {
    LinFunctional fn;  // over the pattern's merged ground, zero on unknown coordinates
    std::string expr;  // human-readable rendering
};

// A template inequality together with its full symmetry orbit (role
// permutations, extension swap, two-line alternatives), deduplicated as
// normalized functionals over the merged coordinate space.
struct InequalityFamily {
    std::string name;
    GroundSet ground;
    std::vector<FamilyInstance> instances;

    std::vector<Rat> evaluate(const MergedVector& mv) const;
    // Indices of instances with negative value.
    std::vector<std::size_t> violated(const MergedVector& mv) const;
    bool all_hold(const MergedVector& mv) const { return violated(mv).empty(); }
};

// Amalgam criterion for one-point extensions of a three-element base
// (pattern abc + x + y): a pair has an amalgam iff every instance holds.
const InequalityFamily& amalgam3_family();

// Adhesivity criterion for the same pattern: the amalgam family with the
// doubled tightness term removed.
const InequalityFamily& adhesive3_family();

// Amalgam criterion for the pattern ab + {x1,x2} + y, built from the two
// Ingleton alternatives.
const InequalityFamily& sticky21_family();

// The adhesive3 expressions evaluated on a single polymatroid with at least
// five elements under the given role assignment (a,b,c,x,y). These can be
// negative on general polymatroids, so values are reported, not asserted.
std::vector<Rat> five_var_values(const RankVector& f, const std::array<int, 5>& roles);

// The worked pair over the uniform base (singletons 4, everything else 6)
// on abc: extensions with an amalgam but no adhesive extension, plus the
// explicit amalgam witness and the linear representations of both sides.
struct GlueExample {
    RankVector base;  // uniform on abc
    RankVector fx;    // on abcx
    RankVector fy;    // on abcy
    RankVector fxy;   // explicit amalgam on abcxy
    ExtensionPair pair;
};

GlueExample uniform_base_example();
// Subspace arrangements (7-dimensional) whose exact ranks reproduce fx and fy.
std::pair<SubspaceArrangement, SubspaceArrangement> uniform_example_arrangements();

// Extension pair witnessing that f (on a three-element ground) is not
// 1-sticky. Requires f(a,b) > 0, f(a,b|c) > 0, f(a,b) <= f(a,c) and
// f(a,b) <= f(b,c), where (a, b, c) are the ground elements in label order.
ExtensionPair nonsticky_pair(const RankVector& f);

// Sufficient condition for 1-stickiness on three elements:
// (a|bc) = (b|ac) = (c|ab) = 0 and at least one pairwise (i,j|k) vanishes.
bool one_sticky_sufficient(const RankVector& f);

// Extension pair witnessing that f (on a two-element ground with
// f(a,b), f(a|b), f(b|a) all positive) is not 2-sticky: fX on {a,b,x1,x2}
// has Ingleton value -eps, fy on {a,b,y} kills every other term.
struct TwoStickyRefutation {
    ExtensionPair pair;
    Rat eps;
};

TwoStickyRefutation two_sticky_pair(const RankVector& f, std::optional<Rat> eps = {});

// 2-stickiness on two elements holds exactly when f(a,b) = 0, f(a|b) = 0
// or f(b|a) = 0.
bool two_sticky_criterion(const RankVector& f);

}  // namespace polymat
