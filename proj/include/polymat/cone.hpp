#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polymat/rank.hpp"

namespace polymat {

struct FacetRow {
    std::string tag;
    LinFunctional fn;
};

// H-representation of the polymatroid cone: all elemental submodular rows
// (i,j|K) and the monotonicity rows (i|M-i). Rows are integer with gcd 1 and
// pairwise distinct; each has 2, 3, or 4 nonzero entries.
struct FacetMatrix {
    GroundSet ground;
    std::vector<FacetRow> rows;
};

// Exactly n + C(n,2) * 2^(n-2) rows for |M| = n >= 2.
FacetMatrix polymatroid_facets(const GroundSet& M);

// Facet rows restricted to a set of dropped coordinates, with zero rows
// removed and duplicates merged. `sources` maps each distinct restricted row
// back to the full facet rows it came from.
struct RestrictedRows {
    std::vector<Mask> dropped;                       // ascending bitmask order
    std::vector<std::vector<Int>> rows;              // distinct nonzero restrictions
    std::vector<std::vector<std::size_t>> sources;   // indices into FacetMatrix.rows
};

RestrictedRows restricted_rows(const FacetMatrix& m, std::vector<Mask> dropped);

}  // namespace polymat
