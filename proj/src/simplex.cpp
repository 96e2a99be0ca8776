#include "polymat/simplex.hpp"

#include <stdexcept>

namespace polymat::lp {

void Constraints::add_ineq(Vec a, Rat b) {
    if (a.size() != nvars) throw std::invalid_argument("constraint length mismatch");
    ineq_lhs.push_back(std::move(a));
    ineq_rhs.push_back(std::move(b));
}

void Constraints::add_eq(Vec e, Rat d) {
    if (e.size() != nvars) throw std::invalid_argument("constraint length mismatch");
    eq_lhs.push_back(std::move(e));
    eq_rhs.push_back(std::move(d));
}

bool check_farkas(const Constraints& c, const Farkas& f) {
    if (f.ineq_mult.size() != c.ineq_lhs.size() || f.eq_mult.size() != c.eq_lhs.size())
        return false;
    for (const Rat& y : f.ineq_mult)
        if (sgn(y) < 0) return false;
    Vec combo(c.nvars, Rat(0));
    Rat rhs(0);
    for (std::size_t i = 0; i < c.ineq_lhs.size(); ++i) {
        if (sgn(f.ineq_mult[i]) == 0) continue;
        for (std::size_t v = 0; v < c.nvars; ++v) combo[v] += f.ineq_mult[i] * c.ineq_lhs[i][v];
        rhs += f.ineq_mult[i] * c.ineq_rhs[i];
    }
    for (std::size_t j = 0; j < c.eq_lhs.size(); ++j) {
        if (sgn(f.eq_mult[j]) == 0) continue;
        for (std::size_t v = 0; v < c.nvars; ++v) combo[v] += f.eq_mult[j] * c.eq_lhs[j][v];
        rhs += f.eq_mult[j] * c.eq_rhs[j];
    }
    for (const Rat& x : combo)
        if (sgn(x) != 0) return false;
    return sgn(rhs) > 0;
}

namespace {

// min cost . x  s.t.  M x = q, x >= 0, dense tableau, Bland's rule.
// Artificial columns are kept as the trailing block for the whole run; that
// block doubles as B^{-1}, giving exact simplex multipliers for free.
class StandardSimplex {
public:
    enum class Status { Optimal, Infeasible, Unbounded };

    StandardSimplex(std::vector<Vec> m, Vec q, Vec cost)
        : m_(m.size()), n_(cost.size()), cost_(std::move(cost)) {
        flip_.assign(m_, false);
        tab_.resize(m_);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (m[i].size() != n_) throw std::invalid_argument("simplex: row length mismatch");
            tab_[i].assign(n_ + m_ + 1, Rat(0));
            bool flip = sgn(q[i]) < 0;
            flip_[i] = flip;
            for (std::size_t j = 0; j < n_; ++j) tab_[i][j] = flip ? -m[i][j] : m[i][j];
            tab_[i][n_ + i] = 1;
            tab_[i].back() = flip ? -q[i] : q[i];
            basis_[i] = n_ + i;
        }
    }

    Status run() {
        // Phase 1: minimize the artificial sum.
        rc_.assign(n_ + m_, Rat(0));
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t i = 0; i < m_; ++i) rc_[j] -= tab_[i][j];
        obj_ = Rat(0);
        for (std::size_t i = 0; i < m_; ++i) obj_ += tab_[i].back();
        iterate(/*allow_artificial=*/true);
        if (sgn(obj_) > 0) {
            // Infeasible; multipliers from the artificial block.
            pi_.assign(m_, Rat(0));
            for (std::size_t i = 0; i < m_; ++i) {
                pi_[i] = Rat(1) - rc_[n_ + i];
                if (flip_[i]) pi_[i] = -pi_[i];
            }
            return Status::Infeasible;
        }
        drive_out_artificials();

        // Phase 2 with the real costs.
        rc_.assign(n_ + m_, Rat(0));
        obj_ = Rat(0);
        for (std::size_t j = 0; j < n_ + m_; ++j) {
            rc_[j] = j < n_ ? cost_[j] : Rat(0);
            for (std::size_t i = 0; i < m_; ++i) {
                const Rat& cb = basis_cost(i);
                if (sgn(cb) != 0 && sgn(tab_[i][j]) != 0) rc_[j] -= cb * tab_[i][j];
            }
        }
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat& cb = basis_cost(i);
            if (sgn(cb) != 0) obj_ += cb * tab_[i].back();
        }
        if (!iterate(/*allow_artificial=*/false)) return Status::Unbounded;

        pi_.assign(m_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) {
            pi_[i] = -rc_[n_ + i];
            if (flip_[i]) pi_[i] = -pi_[i];
        }
        return Status::Optimal;
    }

    Vec solution() const {
        Vec x(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = tab_[i].back();
        return x;
    }

    // Multipliers w.r.t. the original (unflipped) rows.
    const Vec& multipliers() const { return pi_; }
    const Rat& objective() const { return obj_; }

    // Unbounded direction in x-space from the entering column that failed
    // the ratio test.
    Vec ray() const {
        Vec r(n_, Rat(0));
        r[ray_col_] = 1;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) r[basis_[i]] = -tab_[i][ray_col_];
        return r;
    }

private:
    const Rat& basis_cost(std::size_t i) const {
        static const Rat zero(0);
        return basis_[i] < n_ ? cost_[basis_[i]] : zero;
    }

    // Bland pivoting until optimal (true) or unbounded (false).
    bool iterate(bool allow_artificial) {
        const std::size_t limit = allow_artificial ? n_ + m_ : n_;
        for (long guard = 0;; ++guard) {
            if (guard > 2000000) throw std::logic_error("simplex: iteration limit hit");
            std::size_t enter = limit;
            for (std::size_t j = 0; j < limit; ++j)
                if (sgn(rc_[j]) < 0) {
                    enter = j;
                    break;
                }
            if (enter == limit) return true;

            std::size_t leave = m_;
            for (std::size_t i = 0; i < m_; ++i) {
                if (sgn(tab_[i][enter]) <= 0) continue;
                if (leave == m_) {
                    leave = i;
                    continue;
                }
                Rat cur = tab_[i].back() * tab_[leave][enter];
                Rat best = tab_[leave].back() * tab_[i][enter];
                if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
            }
            if (leave == m_) {
                ray_col_ = enter;
                return false;
            }
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        Vec& pr = tab_[row];
        Rat inv = Rat(1) / pr[col];
        for (auto& v : pr)
            if (sgn(v) != 0) v *= inv;
        pr[col] = 1;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row) continue;
            Rat factor = tab_[i][col];
            if (sgn(factor) == 0) continue;
            Vec& ri = tab_[i];
            for (std::size_t j = 0; j < ri.size(); ++j)
                if (sgn(pr[j]) != 0) ri[j] -= factor * pr[j];
            ri[col] = 0;
        }
        Rat factor = rc_[col];
        if (sgn(factor) != 0) {
            for (std::size_t j = 0; j < rc_.size(); ++j)
                if (sgn(pr[j]) != 0) rc_[j] -= factor * pr[j];
            rc_[col] = 0;
            obj_ += factor * pr.back();  // objective moves by rc[enter] * step
        }
        basis_[row] = col;
    }

    // After phase 1 at value 0: pivot zero-valued artificials out wherever
    // a real column is available; rows without one are redundant and inert.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (sgn(tab_[i][j]) != 0) {
                    pivot(i, j);
                    break;
                }
        }
    }

    std::size_t m_, n_;
    Vec cost_;
    std::vector<Vec> tab_;
    std::vector<std::size_t> basis_;
    std::vector<bool> flip_;
    Vec rc_;
    Rat obj_;
    Vec pi_;
    std::size_t ray_col_ = 0;
};

}  // namespace

LpResult minimize(const Constraints& c, const Vec& objective) {
    if (objective.size() != c.nvars) throw std::invalid_argument("objective length mismatch");
    const std::size_t m1 = c.ineq_lhs.size(), m2 = c.eq_lhs.size(), k = c.nvars;

    // Dual standard form: min -b.y - d.w  s.t.  A^T y + E^T w = objective,
    // y >= 0, w split into w+ - w-.
    std::vector<Vec> mat(k, Vec(m1 + 2 * m2, Rat(0)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t j = 0; j < m1; ++j) mat[r][j] = c.ineq_lhs[j][r];
        for (std::size_t j = 0; j < m2; ++j) {
            mat[r][m1 + 2 * j] = c.eq_lhs[j][r];
            mat[r][m1 + 2 * j + 1] = -c.eq_lhs[j][r];
        }
    }
    Vec cost(m1 + 2 * m2);
    for (std::size_t j = 0; j < m1; ++j) cost[j] = -c.ineq_rhs[j];
    for (std::size_t j = 0; j < m2; ++j) {
        cost[m1 + 2 * j] = -c.eq_rhs[j];
        cost[m1 + 2 * j + 1] = c.eq_rhs[j];
    }

    StandardSimplex splx(std::move(mat), objective, std::move(cost));
    LpResult out;
    switch (splx.run()) {
        case StandardSimplex::Status::Optimal: {
            out.status = LpStatus::Optimal;
            const Vec& pi = splx.multipliers();
            out.point.assign(k, Rat(0));
            for (std::size_t r = 0; r < k; ++r) out.point[r] = -pi[r];
            out.value = -splx.objective();
            Vec x = splx.solution();
            out.ineq_dual.assign(x.begin(), x.begin() + static_cast<long>(m1));
            out.eq_dual.resize(m2);
            for (std::size_t j = 0; j < m2; ++j)
                out.eq_dual[j] = x[m1 + 2 * j] - x[m1 + 2 * j + 1];
            // Complementary solution must satisfy the primal system exactly.
            for (std::size_t j = 0; j < m1; ++j) {
                Rat acc(0);
                for (std::size_t r = 0; r < k; ++r) acc += c.ineq_lhs[j][r] * out.point[r];
                if (acc < c.ineq_rhs[j]) throw std::logic_error("simplex: primal extraction failed");
            }
            for (std::size_t j = 0; j < m2; ++j) {
                Rat acc(0);
                for (std::size_t r = 0; r < k; ++r) acc += c.eq_lhs[j][r] * out.point[r];
                if (acc != c.eq_rhs[j]) throw std::logic_error("simplex: primal extraction failed");
            }
            break;
        }
        case StandardSimplex::Status::Unbounded: {
            // Dual unbounded ray is a Farkas witness for the primal system.
            out.status = LpStatus::Infeasible;
            Vec r = splx.ray();
            out.farkas.ineq_mult.assign(r.begin(), r.begin() + static_cast<long>(m1));
            out.farkas.eq_mult.resize(m2);
            for (std::size_t j = 0; j < m2; ++j)
                out.farkas.eq_mult[j] = r[m1 + 2 * j] - r[m1 + 2 * j + 1];
            if (!check_farkas(c, out.farkas))
                throw std::logic_error("simplex: invalid infeasibility certificate");
            break;
        }
        case StandardSimplex::Status::Infeasible: {
            // Dual infeasible: the primal is unbounded along -pi.
            out.status = LpStatus::Unbounded;
            const Vec& pi = splx.multipliers();
            out.direction.assign(k, Rat(0));
            for (std::size_t r = 0; r < k; ++r) out.direction[r] = -pi[r];
            break;
        }
    }
    return out;
}

Feasibility feasible_point(const Constraints& c) {
    LpResult r = minimize(c, Vec(c.nvars, Rat(0)));
    Feasibility out;
    if (r.status == LpStatus::Optimal) {
        out.feasible = true;
        out.point = std::move(r.point);
    } else if (r.status == LpStatus::Infeasible) {
        out.feasible = false;
        out.farkas = std::move(r.farkas);
    } else {
        throw std::logic_error("feasible_point: unexpected unbounded status");
    }
    return out;
}

LexResult lex_min_point(const Constraints& c, const Vec& aux_objective) {
    LexResult out;
    LpResult first = minimize(c, aux_objective);
    if (first.status == LpStatus::Infeasible) {
        out.feasible = false;
        out.farkas = std::move(first.farkas);
        return out;
    }
    if (first.status == LpStatus::Unbounded)
        throw std::logic_error("lex_min_point: auxiliary objective unbounded");

    Constraints work = c;
    work.add_eq(aux_objective, first.value);
    out.feasible = true;
    out.point.assign(c.nvars, Rat(0));
    for (std::size_t i = 0; i < c.nvars; ++i) {
        Vec e(c.nvars, Rat(0));
        e[i] = 1;
        LpResult r = minimize(work, e);
        if (r.status != LpStatus::Optimal)
            throw std::logic_error("lex_min_point: coordinate stage not optimal");
        out.point[i] = r.value;
        work.add_eq(std::move(e), r.value);
    }
    return out;
}

}  // namespace polymat::lp
