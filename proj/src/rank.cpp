#include "polymat/rank.hpp"

#include <stdexcept>

namespace polymat {

RankVector::RankVector(GroundSet g) : ground_(std::move(g)), v_(ground_.coord_count(), Rat(0)) {}

RankVector::RankVector(GroundSet g, std::vector<Rat> values)
    : ground_(std::move(g)), v_(std::move(values)) {
    if (v_.size() != ground_.coord_count())
        throw std::invalid_argument("rank vector needs exactly 2^n - 1 values");
}

const Rat& RankVector::value(Mask s) const {
    static const Rat zero(0);
    if (s == 0) return zero;
    if (s > ground_.full_mask()) throw std::invalid_argument("subset mask out of range");
    return v_[s - 1];
}

Rat& RankVector::at(Mask s) {
    if (s == 0 || s > ground_.full_mask())
        throw std::invalid_argument("subset mask out of range");
    return v_[s - 1];
}

RankVector& RankVector::operator+=(const RankVector& o) {
    if (ground_ != o.ground_) throw std::invalid_argument("ground set mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

RankVector& RankVector::operator-=(const RankVector& o) {
    if (ground_ != o.ground_) throw std::invalid_argument("ground set mismatch");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

RankVector& RankVector::operator*=(const Rat& c) {
    for (auto& x : v_) x *= c;
    return *this;
}

Rat LinFunctional::value_on(const RankVector& f) const {
    if (ground != f.ground()) throw std::invalid_argument("ground set mismatch");
    return value_on(f.values());
}

Rat LinFunctional::value_on(const std::vector<Rat>& values) const {
    if (values.size() != coeffs.size()) throw std::invalid_argument("coefficient length mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (sgn(coeffs[i]) != 0) acc += coeffs[i] * values[i];
    return acc;
}

void LinFunctional::normalize() {
    std::vector<Int> ints = to_integer_vector(coeffs);
    for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = Rat(ints[i]);
}

bool LinFunctional::is_zero() const {
    for (const Rat& c : coeffs)
        if (sgn(c) != 0) return false;
    return true;
}

static void require_disjoint(Mask a, Mask b, const char* what) {
    if (a & b) throw std::invalid_argument(std::string("overlapping arguments in ") + what);
}

Rat cond_rank(const RankVector& f, Mask I, Mask K) {
    if (I == 0) throw std::invalid_argument("cond_rank: empty I");
    require_disjoint(I, K, "cond_rank");
    return f.value(I | K) - f.value(K);
}

Rat mutual_info(const RankVector& f, Mask I, Mask J, Mask K) {
    if (I == 0 || J == 0) throw std::invalid_argument("mutual_info: empty argument");
    require_disjoint(I, J, "mutual_info");
    require_disjoint(I, K, "mutual_info");
    require_disjoint(J, K, "mutual_info");
    return f.value(I | K) + f.value(J | K) - f.value(I | J | K) - f.value(K);
}

Rat ingleton(const RankVector& f, Mask I, Mask J, Mask K, Mask L) {
    if (I == 0 || J == 0 || K == 0 || L == 0)
        throw std::invalid_argument("ingleton: empty argument");
    require_disjoint(I, J, "ingleton");
    require_disjoint(I, K, "ingleton");
    require_disjoint(I, L, "ingleton");
    require_disjoint(J, K, "ingleton");
    require_disjoint(J, L, "ingleton");
    require_disjoint(K, L, "ingleton");
    return -mutual_info(f, I, J) + mutual_info(f, I, J, K) + mutual_info(f, I, J, L) +
           mutual_info(f, K, L);
}

LinFunctional submodular_functional(const GroundSet& g, int i, int j, Mask K) {
    LinFunctional fn{g, std::vector<Rat>(g.coord_count(), Rat(0))};
    Mask I = g.singleton(i), J = g.singleton(j);
    fn.coeffs[(I | K) - 1] += 1;
    fn.coeffs[(J | K) - 1] += 1;
    fn.coeffs[(I | J | K) - 1] -= 1;
    if (K != 0) fn.coeffs[K - 1] -= 1;
    return fn;
}

LinFunctional monotone_functional(const GroundSet& g, int i) {
    LinFunctional fn{g, std::vector<Rat>(g.coord_count(), Rat(0))};
    Mask M = g.full_mask(), I = g.singleton(i);
    fn.coeffs[M - 1] += 1;
    if ((M & ~I) != 0) fn.coeffs[(M & ~I) - 1] -= 1;
    return fn;
}

std::string submodular_tag(const GroundSet& g, int i, int j, Mask K) {
    std::string tag = "(" + g.label(i) + "," + g.label(j);
    if (K != 0) tag += "|" + g.subset_name(K);
    return tag + ")";
}

std::string monotone_tag(const GroundSet& g, int i) {
    Mask rest = g.full_mask() & ~g.singleton(i);
    std::string tag = "(" + g.label(i);
    if (rest != 0) tag += "|" + g.subset_name(rest);
    return tag + ")";
}

AxiomCheck is_polymatroid(const RankVector& f) {
    const GroundSet& g = f.ground();
    AxiomCheck out;
    out.ok = true;
    const int n = g.size();
    for (int i = 0; i < n; ++i) {
        LinFunctional fn = monotone_functional(g, i);
        if (sgn(fn.value_on(f)) < 0) {
            out.ok = false;
            out.violations.push_back({monotone_tag(g, i), std::move(fn)});
        }
    }
    // Single-element ground sets have no submodular rows; monotonicity above
    // degenerates to f(a) >= 0.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mask rest = g.full_mask() & ~(g.singleton(i) | g.singleton(j));
            for (Mask K = rest;; K = (K - 1) & rest) {
                LinFunctional fn = submodular_functional(g, i, j, K);
                if (sgn(fn.value_on(f)) < 0) {
                    out.ok = false;
                    out.violations.push_back({submodular_tag(g, i, j, K), std::move(fn)});
                }
                if (K == 0) break;
            }
        }
    return out;
}

RankClass classify(const RankVector& f) {
    if (!is_polymatroid(f)) throw std::invalid_argument("classify: not a polymatroid");
    const GroundSet& g = f.ground();
    RankClass cl;
    cl.integer = true;
    for (const Rat& x : f.values())
        if (!is_integral(x)) {
            cl.integer = false;
            break;
        }
    cl.matroid = cl.integer;
    if (cl.matroid)
        for (int i = 0; i < g.size(); ++i) {
            const Rat& r = f.value(g.singleton(i));
            if (r != 0 && r != 1) {
                cl.matroid = false;
                break;
            }
        }
    cl.modular = true;
    for (Mask A = 1; A <= g.full_mask(); ++A) {
        Rat sum(0);
        for (int i = 0; i < g.size(); ++i)
            if (A & g.singleton(i)) sum += f.value(g.singleton(i));
        if (f.value(A) != sum) {
            cl.modular = false;
            break;
        }
    }
    cl.tight = true;
    cl.tight_at.resize(static_cast<std::size_t>(g.size()));
    for (int i = 0; i < g.size(); ++i) {
        Mask rest = g.full_mask() & ~g.singleton(i);
        bool t = sgn(cond_rank(f, g.singleton(i), rest)) == 0;
        cl.tight_at[static_cast<std::size_t>(i)] = t;
        cl.tight = cl.tight && t;
    }
    return cl;
}

RankVector restrict_to(const RankVector& f, Mask S) {
    const GroundSet& g = f.ground();
    if (S == 0 || S > g.full_mask()) throw std::invalid_argument("restrict_to: bad subset");
    GroundSet sub = g.sub_ground(S);
    RankVector out(sub);
    // Walk sub-masks of S, translating between the two indexings.
    std::vector<int> bits;
    for (int i = 0; i < g.size(); ++i)
        if (S & g.singleton(i)) bits.push_back(i);
    for (Mask a = 1; a <= sub.full_mask(); ++a) {
        Mask full = 0;
        for (std::size_t k = 0; k < bits.size(); ++k)
            if (a & (Mask{1} << k)) full |= g.singleton(bits[k]);
        out.at(a) = f.value(full);
    }
    return out;
}

Rat distance_sq(const RankVector& f, const RankVector& g) {
    if (f.ground() != g.ground()) throw std::invalid_argument("distance_sq: ground set mismatch");
    Rat acc(0);
    for (std::size_t i = 0; i < f.values().size(); ++i) {
        Rat d = f.values()[i] - g.values()[i];
        acc += d * d;
    }
    return acc;
}

}  // namespace polymat
