#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polymat/polyproj.hpp"
#include "polymat/theorems.hpp"

namespace polymat {

// One reproduction target = a batch of exact checks with a machine-parsable
// report ("key: value" lines) and an overall verdict.
struct Report {
    std::vector<std::pair<std::string, std::string>> lines;
    bool ok = true;

    void put(const std::string& key, const std::string& value) { lines.emplace_back(key, value); }
    void put(const std::string& key, long value) { lines.emplace_back(key, std::to_string(value)); }
    // records the check and folds it into the verdict
    void check(const std::string& key, bool pass) {
        lines.emplace_back(key, pass ? "ok" : "FAIL");
        ok = ok && pass;
    }
};

// The two coordinate projections studied here, with pinned row/ray counts.
// `sides` are the kept blocks (subsets of either side survive).
struct ProjectionSpec {
    GroundSet ground;
    Mask side_x, side_y;  // kept blocks M+X, M+Y
};

ProjectionSpec projection_3_1_1();  // abc + x + y
ProjectionSpec projection_2_2_1();  // ab + {x1,x2} + y

struct ProjectionRun {
    FacetMatrix facets;
    RestrictedRows restricted;
    CombinationCone cone;
    RayList rays;
    std::vector<LinFunctional> candidates;
};

// Restricted rows, dual combination cone and its extreme rays for the
// projection dropping every coordinate outside the two kept blocks. When
// both extension sides are single elements, base-element monotonicity rows
// restrict to exact mirrors of a merged submodular class and carry no kept
// coordinates; they are omitted from the combination cone, which is the
// convention the pinned row/ray counts (27/154) assume. The facet set of
// the projection is unaffected (covered by a test).
ProjectionRun run_projection(const ProjectionSpec& spec, int threads = 0,
                             bool with_candidates = true);

// Reproduction targets; threads only affects the ray enumeration.
Report reproduce_ex1();
Report reproduce_amalgam3(int threads = 0);
Report reproduce_sticky21(int threads = 0);
Report reproduce_nonsticky1();
Report reproduce_nonsticky2();
Report reproduce_table1();
Report reproduce_table3();

Report run_target(const std::string& target, int threads = 0);
std::vector<std::string> reproduce_targets();

}  // namespace polymat
