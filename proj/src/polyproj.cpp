#include "polymat/polyproj.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "polymat/linalg.hpp"
#include "polymat/simplex.hpp"

namespace polymat {

namespace {

// Zero-coordinate sets of rays, up to 256 coordinates.
struct Bits {
    std::array<std::uint64_t, 4> w{};

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    friend Bits operator&(const Bits& a, const Bits& b) {
        Bits r;
        for (int k = 0; k < 4; ++k) r.w[k] = a.w[k] & b.w[k];
        return r;
    }
    // this subset of other
    bool subset_of(const Bits& o) const {
        for (int k = 0; k < 4; ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (int k = 0; k < 4; ++k) c += std::popcount(w[k]);
        return c;
    }
};

struct Ray {
    std::vector<Int> v;
    Bits zeros;
};

Bits zero_set(const std::vector<Int>& v) {
    Bits b;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(v[i]) == 0) b.set(i);
    return b;
}

Ray make_ray(std::vector<Int> v) {
    normalize_gcd(v);
    Ray r{std::move(v), {}};
    r.zeros = zero_set(r.v);
    return r;
}

// Constraint columns in insertion order: fewest nonzeros first, then
// lexicographic. Reproducible intermediate cone sizes.
std::vector<std::vector<Int>> ordered_constraints(const CombinationCone& cone) {
    if (cone.rows.empty()) return {};
    const std::size_t r = cone.rows.size(), d = cone.rows[0].size();
    for (const auto& row : cone.rows)
        if (row.size() != d) throw std::invalid_argument("combination cone: ragged rows");
    std::vector<std::vector<Int>> cols(d, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < d; ++c) cols[c][i] = cone.rows[i][c];
    std::sort(cols.begin(), cols.end(), [](const auto& a, const auto& b) {
        int na = 0, nb = 0;
        for (const Int& x : a) na += sgn(x) != 0;
        for (const Int& x : b) nb += sgn(x) != 0;
        if (na != nb) return na < nb;
        return a < b;
    });
    return cols;
}

std::vector<Ray> unit_rays(std::size_t r) {
    std::vector<Ray> rays;
    rays.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> v(r, Int(0));
        v[i] = 1;
        rays.push_back(make_ray(std::move(v)));
    }
    return rays;
}

Ray combine(const Ray& p, const Ray& n, const Int& vp, const Int& vn) {
    // vp > 0, vn < 0; the combination lies on the new hyperplane.
    std::vector<Int> w(p.v.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = vp * n.v[i] - vn * p.v[i];
    return make_ray(std::move(w));
}

// Final certification: nonnegative, orthogonal to every constraint, gcd 1,
// and extreme (tight constraints of rank dim-1, computed on the support).
void certify_rays(const CombinationCone& cone, const std::vector<std::vector<Int>>& rays) {
    const std::size_t r = cone.rows.empty() ? 0 : cone.rows.size();
    const std::size_t d = r == 0 ? 0 : cone.rows[0].size();
    for (const auto& y : rays) {
        Int g = 0;
        for (const Int& x : y) {
            if (sgn(x) < 0) throw std::logic_error("extreme_rays: negative ray entry");
            g = gcd(g, x);
        }
        if (g != 1) throw std::logic_error("extreme_rays: ray not normalized");
        for (std::size_t c = 0; c < d; ++c) {
            Int acc = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (sgn(y[i]) != 0) acc += y[i] * cone.rows[i][c];
            if (sgn(acc) != 0) throw std::logic_error("extreme_rays: ray not in the cone");
        }
        // rank over the support columns: need |support| - 1.
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < r; ++i)
            if (sgn(y[i]) != 0) support.push_back(i);
        linalg::IntMat sub(d, std::vector<Int>(support.size()));
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t k = 0; k < support.size(); ++k) sub[c][k] = cone.rows[support[k]][c];
        if (linalg::rank(std::move(sub)) != static_cast<int>(support.size()) - 1)
            throw std::logic_error("extreme_rays: ray fails the extremality rank test");
    }
}

RayList finish(const CombinationCone& cone, std::vector<Ray> rays) {
    RayList out;
    out.rays.reserve(rays.size());
    for (auto& ray : rays) out.rays.push_back(std::move(ray.v));
    std::sort(out.rays.begin(), out.rays.end());
    for (std::size_t i = 1; i < out.rays.size(); ++i)
        if (out.rays[i] == out.rays[i - 1]) throw std::logic_error("extreme_rays: duplicate ray");
    certify_rays(cone, out.rays);
    return out;
}

}  // namespace

CombinationCone combination_cone(const FacetMatrix& m, const RestrictedRows& r) {
    CombinationCone cone;
    cone.rows = r.rows;
    cone.tags.reserve(r.sources.size());
    for (const auto& src : r.sources) {
        std::string tag;
        for (std::size_t k = 0; k < src.size(); ++k) {
            if (k) tag += " / ";
            tag += m.rows[src[k]].tag;
        }
        cone.tags.push_back(std::move(tag));
    }
    return cone;
}

RayList extreme_rays(const CombinationCone& cone, const RayOptions& opt) {
    const std::size_t r = cone.rows.size();
    if (r == 0) return {};
    if (r > 256) throw std::invalid_argument("extreme_rays: more than 256 rows");
    std::vector<std::vector<Int>> constraints = ordered_constraints(cone);
    std::vector<Ray> rays = unit_rays(r);

    int threads = 1;
#ifdef _OPENMP
    threads = opt.threads == 0 ? omp_get_max_threads() : opt.threads;
#else
    (void)opt;
#endif

    std::size_t processed = 0;
    for (const auto& h : constraints) {
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            Int acc = 0;
            for (std::size_t k = 0; k < r; ++k)
                if (sgn(rays[i].v[k]) != 0 && sgn(h[k]) != 0) acc += rays[i].v[k] * h[k];
            val[i] = acc;
            if (sgn(val[i]) > 0)
                pos.push_back(i);
            else if (sgn(val[i]) < 0)
                neg.push_back(i);
            else
                next.push_back(std::move(rays[i]));
        }
        ++processed;
        if (pos.empty() && neg.empty()) {
            rays = std::move(next);
            continue;
        }

        // A pair can only span a 2-face if enough constraints are tight.
        const int need =
            static_cast<int>(r) - 2 - static_cast<int>(processed - 1);
        const long total = static_cast<long>(pos.size()) * static_cast<long>(neg.size());
        std::vector<std::vector<Ray>> buckets(static_cast<std::size_t>(threads > 0 ? threads : 1));

#ifdef _OPENMP
#pragma omp parallel num_threads(threads) if (threads > 1)
#endif
        {
            std::size_t tid = 0;
#ifdef _OPENMP
            tid = static_cast<std::size_t>(omp_get_thread_num());
#endif
            std::vector<Ray>& local = buckets[tid];
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
            for (long t = 0; t < total; ++t) {
                const Ray& p = rays[pos[static_cast<std::size_t>(t) / neg.size()]];
                const Ray& n = rays[neg[static_cast<std::size_t>(t) % neg.size()]];
                Bits common = p.zeros & n.zeros;
                if (common.count() < need) continue;
                bool adjacent = true;
                for (const Ray& other : rays) {
                    if (&other == &p || &other == &n) continue;
                    if (common.subset_of(other.zeros)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                const Int& vp = val[pos[static_cast<std::size_t>(t) / neg.size()]];
                const Int& vn = val[neg[static_cast<std::size_t>(t) % neg.size()]];
                local.push_back(combine(p, n, vp, vn));
            }
        }
        for (auto& b : buckets)
            for (auto& ray : b) next.push_back(std::move(ray));
        rays = std::move(next);
        if (rays.empty()) break;
    }
    return finish(cone, std::move(rays));
}

RayList extreme_rays_serial(const CombinationCone& cone) {
    const std::size_t r = cone.rows.size();
    if (r == 0) return {};
    std::vector<std::vector<Int>> constraints = ordered_constraints(cone);
    std::vector<Ray> rays = unit_rays(r);

    std::vector<std::vector<Int>> processed;  // constraint rows seen so far
    for (const auto& h : constraints) {
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            Int acc = 0;
            for (std::size_t k = 0; k < r; ++k) acc += rays[i].v[k] * h[k];
            val[i] = acc;
            if (sgn(val[i]) > 0)
                pos.push_back(i);
            else if (sgn(val[i]) < 0)
                neg.push_back(i);
            else
                next.push_back(rays[i]);
        }
        if (pos.empty() && neg.empty()) {
            rays = std::move(next);
            processed.push_back(h);
            continue;
        }
        for (std::size_t ip : pos)
            for (std::size_t in : neg) {
                const Ray& p = rays[ip];
                const Ray& n = rays[in];
                // Algebraic adjacency: the tight constraints of the pair must
                // have rank dim-2, reduced to the union support.
                std::vector<std::size_t> support;
                for (std::size_t k = 0; k < r; ++k)
                    if (sgn(p.v[k]) != 0 || sgn(n.v[k]) != 0) support.push_back(k);
                linalg::IntMat sub(processed.size(), std::vector<Int>(support.size()));
                for (std::size_t c = 0; c < processed.size(); ++c)
                    for (std::size_t k = 0; k < support.size(); ++k)
                        sub[c][k] = processed[c][support[k]];
                if (linalg::rank(std::move(sub)) != static_cast<int>(support.size()) - 2) continue;
                next.push_back(combine(p, n, val[ip], val[in]));
            }
        rays = std::move(next);
        processed.push_back(h);
        if (rays.empty()) break;
    }
    return finish(cone, std::move(rays));
}

std::vector<LinFunctional> projection_candidates(const RayList& rays, const FacetMatrix& m,
                                                 const RestrictedRows& r) {
    const std::size_t nrows = r.rows.size();
    std::set<std::vector<Int>> seen;
    const std::size_t ncoords = m.ground.coord_count();

    for (const auto& y : rays.rays) {
        if (y.size() != nrows)
            throw std::invalid_argument("projection_candidates: ray length mismatch");
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < nrows; ++i)
            if (sgn(y[i]) != 0) support.push_back(i);
        // Odometer over the source choices of the supported restricted rows.
        std::vector<std::size_t> choice(support.size(), 0);
        while (true) {
            std::vector<Int> coeffs(ncoords, Int(0));
            for (std::size_t k = 0; k < support.size(); ++k) {
                const std::size_t row = support[k];
                const LinFunctional& full = m.rows[r.sources[row][choice[k]]].fn;
                for (std::size_t c = 0; c < ncoords; ++c)
                    if (sgn(full.coeffs[c]) != 0) coeffs[c] += y[row] * full.coeffs[c].get_num();
            }
            for (Mask d : r.dropped)
                if (sgn(coeffs[d - 1]) != 0)
                    throw std::logic_error("projection_candidates: dropped coordinate survived");
            bool zero = true;
            for (const Int& c : coeffs)
                if (sgn(c) != 0) {
                    zero = false;
                    break;
                }
            if (!zero) {
                normalize_gcd(coeffs);
                seen.insert(std::move(coeffs));
            }
            // advance odometer
            std::size_t k = 0;
            for (; k < support.size(); ++k) {
                if (++choice[k] < r.sources[support[k]].size()) break;
                choice[k] = 0;
            }
            if (k == support.size()) break;
        }
    }

    std::vector<LinFunctional> out;
    out.reserve(seen.size());
    for (const auto& coeffs : seen) {
        LinFunctional fn{m.ground, std::vector<Rat>(ncoords)};
        for (std::size_t c = 0; c < ncoords; ++c) fn.coeffs[c] = Rat(coeffs[c]);
        out.push_back(std::move(fn));
    }
    return out;
}

namespace {

// LP coordinates: only those where some candidate is nonzero.
std::vector<std::size_t> active_coords(const std::vector<LinFunctional>& cands) {
    if (cands.empty()) return {};
    std::vector<std::size_t> active;
    for (std::size_t c = 0; c < cands[0].coeffs.size(); ++c)
        for (const auto& f : cands)
            if (sgn(f.coeffs[c]) != 0) {
                active.push_back(c);
                break;
            }
    return active;
}

lp::Vec compress(const LinFunctional& f, const std::vector<std::size_t>& active) {
    lp::Vec v(active.size());
    for (std::size_t k = 0; k < active.size(); ++k) v[k] = f.coeffs[active[k]];
    return v;
}

}  // namespace

std::optional<std::vector<std::pair<std::size_t, Rat>>> conic_membership(
    const LinFunctional& target, const std::vector<LinFunctional>& generators,
    const std::vector<std::size_t>& generator_ids) {
    std::vector<LinFunctional> all = generators;
    all.push_back(target);
    std::vector<std::size_t> active = active_coords(all);

    // min target.v  s.t.  g.v >= 0 for all generators, target.v >= -1:
    // optimum 0 exhibits the combination through the dual, optimum -1 refutes.
    lp::Constraints cons(active.size());
    for (const auto& g : generators) cons.add_ineq(compress(g, active), Rat(0));
    cons.add_ineq(compress(target, active), rat(-1));
    lp::LpResult res = lp::minimize(cons, compress(target, active));
    if (res.status != lp::LpStatus::Optimal)
        throw std::logic_error("conic_membership: unexpected LP status");
    if (sgn(res.value) < 0) return std::nullopt;
    std::vector<std::pair<std::size_t, Rat>> combo;
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (sgn(res.ineq_dual[i]) != 0)
            combo.emplace_back(generator_ids.empty() ? i : generator_ids[i], res.ineq_dual[i]);
    return combo;
}

FacetFilter facet_filter(const std::vector<LinFunctional>& cands) {
    FacetFilter out;
    if (cands.empty()) return out;
    const std::size_t n = cands.size();

    // Group positive multiples; only representatives are tested.
    std::vector<std::vector<Int>> norm(n);
    std::map<std::vector<Int>, std::size_t> rep_of;
    std::vector<std::size_t> rep(n);
    for (std::size_t i = 0; i < n; ++i) {
        norm[i] = to_integer_vector(cands[i].coeffs);
        auto [it, inserted] = rep_of.try_emplace(norm[i], i);
        rep[i] = it->second;
        if (!inserted) {
            // positive multiple of an earlier candidate
            std::size_t c = 0;
            while (sgn(cands[i].coeffs[c]) == 0) ++c;
            Rat scale = cands[i].coeffs[c] / cands[it->second].coeffs[c];
            out.redundant.push_back(i);
            out.redundant_combo.push_back({{it->second, scale}});
        }
    }

    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i)
        if (rep[i] == i) reps.push_back(i);

    std::vector<std::size_t> active = active_coords(cands);
    std::vector<lp::Vec> compressed(n);
    for (std::size_t i = 0; i < n; ++i) compressed[i] = compress(cands[i], active);

    std::vector<std::size_t> confirmed;  // indices used as LP constraints
    std::vector<char> in_confirmed(n, 0);
    for (std::size_t q : reps) {
        for (;;) {
            lp::Constraints cons(active.size());
            std::vector<std::size_t> rows;
            for (std::size_t i : confirmed)
                if (i != q) {
                    cons.add_ineq(compressed[i], Rat(0));
                    rows.push_back(i);
                }
            cons.add_ineq(compressed[q], rat(-1));
            lp::LpResult res = lp::minimize(cons, compressed[q]);
            if (res.status != lp::LpStatus::Optimal)
                throw std::logic_error("facet_filter: unexpected LP status");
            if (sgn(res.value) >= 0) {
                out.redundant.push_back(q);
                std::vector<std::pair<std::size_t, Rat>> combo;
                for (std::size_t k = 0; k < rows.size(); ++k)
                    if (sgn(res.ineq_dual[k]) != 0) combo.emplace_back(rows[k], res.ineq_dual[k]);
                out.redundant_combo.push_back(std::move(combo));
                break;
            }
            // Violated point: either some untested candidate cuts it off, or
            // q is a real facet.
            std::size_t found = n;
            for (std::size_t j : reps) {
                if (j == q || in_confirmed[j]) continue;
                Rat acc(0);
                for (std::size_t k = 0; k < active.size(); ++k)
                    if (sgn(compressed[j][k]) != 0) acc += compressed[j][k] * res.point[k];
                if (sgn(acc) < 0) {
                    found = j;
                    break;
                }
            }
            if (found < n) {
                confirmed.push_back(found);
                in_confirmed[found] = 1;
                continue;
            }
            out.facets.push_back(q);
            std::vector<Rat> witness(cands[0].coeffs.size(), Rat(0));
            for (std::size_t k = 0; k < active.size(); ++k) witness[active[k]] = res.point[k];
            out.facet_witness.push_back(std::move(witness));
            if (!in_confirmed[q]) {
                confirmed.push_back(q);
                in_confirmed[q] = 1;
            }
            break;
        }
    }
    return out;
}

bool reverify_filter(const std::vector<LinFunctional>& cands, const FacetFilter& filter) {
    if (filter.facets.size() != filter.facet_witness.size()) return false;
    if (filter.redundant.size() != filter.redundant_combo.size()) return false;
    if (filter.facets.size() + filter.redundant.size() != cands.size()) return false;
    for (std::size_t k = 0; k < filter.redundant.size(); ++k) {
        const LinFunctional& target = cands[filter.redundant[k]];
        std::vector<Rat> combo(target.coeffs.size(), Rat(0));
        for (const auto& [idx, coeff] : filter.redundant_combo[k]) {
            if (idx >= cands.size() || sgn(coeff) < 0) return false;
            for (std::size_t c = 0; c < combo.size(); ++c)
                combo[c] += coeff * cands[idx].coeffs[c];
        }
        if (combo != target.coeffs) return false;
    }
    std::vector<std::vector<Int>> norm(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) norm[i] = to_integer_vector(cands[i].coeffs);
    for (std::size_t k = 0; k < filter.facets.size(); ++k) {
        const std::size_t q = filter.facets[k];
        if (sgn(cands[q].value_on(filter.facet_witness[k])) >= 0) return false;
        for (std::size_t j = 0; j < cands.size(); ++j) {
            if (j == q || norm[j] == norm[q]) continue;  // positive multiples of q also fail
            if (sgn(cands[j].value_on(filter.facet_witness[k])) < 0) return false;
        }
    }
    return true;
}

}  // namespace polymat
