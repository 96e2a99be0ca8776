#include "polymat/cone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polymat {

FacetMatrix polymatroid_facets(const GroundSet& M) {
    if (M.size() < 2) throw std::invalid_argument("polymatroid_facets: need at least 2 elements");
    FacetMatrix out{M, {}};
    for (int i = 0; i < M.size(); ++i)
        out.rows.push_back({monotone_tag(M, i), monotone_functional(M, i)});
    for (int i = 0; i < M.size(); ++i)
        for (int j = i + 1; j < M.size(); ++j) {
            Mask rest = M.full_mask() & ~(M.singleton(i) | M.singleton(j));
            // Enumerate K in ascending mask order for a stable row layout.
            for (Mask K = 0; K <= rest; ++K) {
                if (K & ~rest) continue;
                out.rows.push_back({submodular_tag(M, i, j, K), submodular_functional(M, i, j, K)});
            }
        }
    return out;
}

RestrictedRows restricted_rows(const FacetMatrix& m, std::vector<Mask> dropped) {
    if (dropped.empty()) throw std::invalid_argument("restricted_rows: no dropped coordinates");
    std::sort(dropped.begin(), dropped.end());
    dropped.erase(std::unique(dropped.begin(), dropped.end()), dropped.end());
    for (Mask d : dropped)
        if (d == 0 || d > m.ground.full_mask())
            throw std::invalid_argument("restricted_rows: bad dropped coordinate");

    RestrictedRows out;
    out.dropped = dropped;
    std::map<std::vector<Int>, std::size_t> seen;
    for (std::size_t r = 0; r < m.rows.size(); ++r) {
        std::vector<Int> restr(dropped.size());
        bool nonzero = false;
        for (std::size_t c = 0; c < dropped.size(); ++c) {
            const Rat& v = m.rows[r].fn.coeffs[dropped[c] - 1];
            restr[c] = v.get_num();  // facet rows are integral
            if (sgn(v) != 0) nonzero = true;
        }
        if (!nonzero) continue;
        auto [it, inserted] = seen.try_emplace(std::move(restr), out.rows.size());
        if (inserted) {
            out.rows.push_back(it->first);
            out.sources.push_back({r});
        } else {
            out.sources[it->second].push_back(r);
        }
    }
    return out;
}

}  // namespace polymat
