#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polymat::cli {

// Exit codes shared by every subcommand: 0 success/feasible, 1
// infeasible/mismatch, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitError = 2;

struct CheckArgs {
    std::string file;
};

struct TightenArgs {
    std::string file;
    std::vector<std::string> elems;  // empty: tighten everywhere
    std::optional<std::string> out;
};

struct ExtendArgs {
    std::string file;
    std::string label;        // new element
    std::string excess;       // "uniform:u,t" | "pointed:c,u,t" | "zero" | "@file"
    std::optional<std::string> out;
};

struct AmalgamArgs {
    std::string file_x, file_y;
    std::vector<std::string> base;  // empty: deduce common labels
    bool adhesive = false;
    std::optional<std::string> out;
};

struct ProjectArgs {
    std::vector<std::string> ground;
    std::vector<std::string> side_x, side_y;  // kept blocks; empty: keep everything
    int threads = 0;
    std::optional<std::string> out;
};

struct ReproduceArgs {
    std::string target;
    int threads = 0;
};

int cmd_check(const CheckArgs&, std::ostream& os);
int cmd_tighten(const TightenArgs&, std::ostream& os);
int cmd_extend(const ExtendArgs&, std::ostream& os);
int cmd_amalgam(const AmalgamArgs&, std::ostream& os);
int cmd_project(const ProjectArgs&, std::ostream& os);
int cmd_reproduce(const ReproduceArgs&, std::ostream& os);

}  // namespace polymat::cli
