#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymat/cone.hpp"
#include "polymat/rank.hpp"

namespace polymat {

// A pair of extensions of a common base polymatroid: fX on M+X and fY on
// M+Y with identical restriction to M. The merged ground set orders the
// labels M, then X, then Y.
struct ExtensionPair {
    GroundSet base;    // M
    RankVector fX;     // on M + X
    RankVector fY;     // on M + Y
    GroundSet merged;  // M + X + Y
    Mask base_mask, x_mask, y_mask;  // within merged

    // Validates disjointness and the restriction equality; a mismatch throws
    // std::invalid_argument with a per-subset diff.
    static ExtensionPair make(RankVector fX, RankVector fY,
                              const std::vector<std::string>& base_labels);
};

// Partial vector on the merged ground set: coordinates inside M+X or M+Y are
// known, the rest (subsets meeting both X and Y) are not.
struct MergedVector {
    GroundSet ground;
    std::vector<Rat> values;   // unknown entries are 0 placeholders
    std::vector<bool> known;   // per nonempty subset
};

MergedVector merge(const ExtensionPair& p);

// Nonnegative combination of facet rows of the merged polymatroid cone
// (plus the modularity equality row, in the adhesive case) whose induced
// inequality the known coordinates violate.
struct FarkasCombination {
    std::vector<std::pair<std::size_t, Rat>> facet_coeffs;  // index into polymatroid_facets(merged)
    Rat modular_coeff;                                      // 0 unless adhesive
};

struct Certificate {
    enum class Kind { Feasible, Infeasible };
    Kind kind;
    std::optional<RankVector> witness;           // Feasible: completion on M+X+Y
    std::optional<FarkasCombination> farkas;     // Infeasible

    bool feasible() const { return kind == Kind::Feasible; }
};

enum class WitnessPolicy {
    LexMin,  // lexicographically smallest completion minimizing the unknown sum
    Any,     // first feasible point found (still deterministic)
};

// Exact feasibility of the unknown coordinates subject to all facet rows of
// the merged cone. Inputs must pass is_polymatroid.
Certificate has_amalgam(const ExtensionPair& p, WitnessPolicy policy = WitnessPolicy::LexMin);

// Same with the extra equality f(X,Y|M) = 0.
Certificate has_adhesive(const ExtensionPair& p, WitnessPolicy policy = WitnessPolicy::LexMin);

// The modularity functional f(XM) + f(YM) - f(XYM) - f(M) on the merged ground.
LinFunctional modularity_functional(const ExtensionPair& p);

struct VerifyResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Independent certificate check, free of the LP path: a Feasible witness is
// re-checked for extension + axioms (+ modularity), an Infeasible combination
// for nonnegativity, vanishing on the unknowns, and a negative known value.
VerifyResult verify(const ExtensionPair& p, const Certificate& c, bool adhesive);

}  // namespace polymat
