#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymat/cone.hpp"

namespace polymat {

// Dual combination cone {y >= 0 : y^T B = 0}: one coordinate per restricted
// facet row, one homogeneous equality per dropped coordinate.
struct CombinationCone {
    std::vector<std::vector<Int>> rows;  // B: restricted rows x dropped columns
    std::vector<std::string> tags;       // optional row tags, same length or empty
};

CombinationCone combination_cone(const FacetMatrix& m, const RestrictedRows& r);

// Canonical list of extreme rays: integer vectors, gcd 1, sorted
// lexicographically. Every returned ray is certified: y >= 0, y^T B = 0,
// and the tight constraints have rank dim-1.
struct RayList {
    std::vector<std::vector<Int>> rays;
};

struct RayOptions {
    int threads = 0;  // 0: library default; 1: single-threaded
};

// Incremental double description with exact integer arithmetic. Adjacency is
// decided combinatorially (zero-set inclusion) after a popcount prefilter;
// the candidate-pair loop is OpenMP-parallel. Results are canonicalized, so
// the output does not depend on the thread count.
RayList extreme_rays(const CombinationCone& cone, const RayOptions& opt = {});

// Plain single-threaded reference: same insertion order, but adjacency is
// decided algebraically (rank of the common tight constraints). Kept for
// cross-checking the production kernel; see tools/bench_rays.
RayList extreme_rays_serial(const CombinationCone& cone);

// Candidate facets of the projection: for each ray, the nonnegative
// combination of full facet rows it encodes, restricted to the kept
// coordinates. Where a restricted row stems from several full facets, every
// choice of source row is expanded (the "two-line" alternatives). Zero
// functionals are dropped, duplicates merged; output is normalized and
// sorted. Coefficients on dropped coordinates vanish by construction.
std::vector<LinFunctional> projection_candidates(const RayList& rays, const FacetMatrix& m,
                                                 const RestrictedRows& r);

// Nonnegative-combination membership: is `target` a conic combination of
// `generators`? Returns the combination when it is, as (index, coeff) pairs.
std::optional<std::vector<std::pair<std::size_t, Rat>>> conic_membership(
    const LinFunctional& target, const std::vector<LinFunctional>& generators,
    const std::vector<std::size_t>& generator_ids);

// Partition of a complete valid-inequality description into facets and
// redundant members. A candidate is redundant iff it is a nonnegative
// combination of the other candidates; that test is run against a growing
// confirmed subset (Clarkson-style), so each LP stays small. Facets carry a
// separating witness, redundant members the exact combination.
struct FacetFilter {
    std::vector<std::size_t> facets;
    std::vector<std::vector<Rat>> facet_witness;  // point violating only that candidate
    std::vector<std::size_t> redundant;
    std::vector<std::vector<std::pair<std::size_t, Rat>>> redundant_combo;
};

FacetFilter facet_filter(const std::vector<LinFunctional>& cands);

// Exact re-check of every certificate in a filter result; returns false on
// the first failure. Independent of the LP path.
bool reverify_filter(const std::vector<LinFunctional>& cands, const FacetFilter& filter);

}  // namespace polymat
