#pragma once

#include <cstddef>
#include <vector>

#include "polymat/rational.hpp"

namespace polymat::lp {

using Vec = std::vector<Rat>;

// Linear system over free rational variables u:
//   ineq:  a . u >= b   (one row per constraint)
//   eq:    e . u  = d
struct Constraints {
    std::size_t nvars = 0;
    std::vector<Vec> ineq_lhs;
    Vec ineq_rhs;
    std::vector<Vec> eq_lhs;
    Vec eq_rhs;

    explicit Constraints(std::size_t n) : nvars(n) {}
    void add_ineq(Vec a, Rat b);
    void add_eq(Vec e, Rat d);
};

// Infeasibility witness: multipliers y >= 0 on the inequalities and free w on
// the equalities with  sum y_i a_i + sum w_j e_j = 0  and
// sum y_i b_i + sum w_j d_j > 0.
struct Farkas {
    Vec ineq_mult;
    Vec eq_mult;
};

bool check_farkas(const Constraints& c, const Farkas& f);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat value;          // Optimal
    Vec point;          // Optimal: a minimizer
    Vec ineq_dual;      // Optimal: multipliers y >= 0 with sum y a + sum w e = objective
    Vec eq_dual;        //          and sum y b + sum w d = value (strong duality)
    Farkas farkas;      // Infeasible
    Vec direction;      // Unbounded: A dir >= 0, E dir = 0, objective . dir < 0
};

// Exact simplex (Bland's rule, dense rational tableau). The system is solved
// in dual standard form, which keeps the tableau at nvars+1 rows no matter
// how many constraint rows there are.
LpResult minimize(const Constraints& c, const Vec& objective);

struct Feasibility {
    bool feasible = false;
    Vec point;
    Farkas farkas;
};

Feasibility feasible_point(const Constraints& c);

// Minimizes the auxiliary objective, then lexicographically minimizes the
// coordinates among its optima; the result is the unique lex-smallest
// optimal point. Throws std::logic_error if any stage is unbounded.
struct LexResult {
    bool feasible = false;
    Vec point;
    Farkas farkas;
};

LexResult lex_min_point(const Constraints& c, const Vec& aux_objective);

}  // namespace polymat::lp
