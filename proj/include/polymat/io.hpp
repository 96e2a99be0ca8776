#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polymat/construct.hpp"
#include "polymat/glue.hpp"
#include "polymat/polyproj.hpp"
#include "polymat/theorems.hpp"

namespace polymat::io {

// Text format, meant for inspection and diffing:
//   # optional comments
//   ground a b c
//   a = 4
//   ab = 13/2
// One line per nonempty subset, each present exactly once, rationals in
// lowest terms, subset labels in ground order ('.'-separated when any label
// has several characters).
void print_polymatroid(std::ostream& os, const RankVector& f);
std::string to_string(const RankVector& f);
// Parse errors raise std::runtime_error carrying the line number.
RankVector parse_polymatroid(std::istream& is);
RankVector parse_polymatroid_string(const std::string& text);
RankVector load_polymatroid(const std::string& path);
void save_polymatroid(const std::string& path, const RankVector& f);

// Excess functions use the same line format plus a "0 = value" line for the
// empty set. Every subset of the base must be present.
ExcessFunction parse_excess(std::istream& is, const GroundSet& base);
ExcessFunction load_excess(const std::string& path, const GroundSet& base);

// Witness block for feasible certificates, "tag: coefficient" lines over the
// facet rows of the merged cone for infeasible ones.
void print_certificate(std::ostream& os, const ExtensionPair& p, const Certificate& c);

// "tag: c_S1 c_S2 ..." with subsets in canonical (ascending mask) order.
void print_facet_matrix(std::ostream& os, const FacetMatrix& m);

// One integer vector per line.
void print_rays(std::ostream& os, const RayList& rays);
RayList parse_rays(std::istream& is);
void print_functionals(std::ostream& os, const std::vector<LinFunctional>& fns);
std::vector<LinFunctional> parse_functionals(std::istream& is, const GroundSet& g);

// One normalized functional per line with its rendering as a trailing comment.
void print_family(std::ostream& os, const InequalityFamily& fam);

}  // namespace polymat::io
