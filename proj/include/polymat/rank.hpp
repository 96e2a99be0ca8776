#pragma once

#include <string>
#include <vector>

#include "polymat/ground.hpp"
#include "polymat/rational.hpp"

namespace polymat {

// Rational-valued set function on the nonempty subsets of a ground set,
// identified with a (2^n - 1)-dimensional vector. Whether it satisfies the
// polymatroid axioms is a predicate, not a construction invariant.
class RankVector {
public:
    RankVector() = default;
    explicit RankVector(GroundSet g);  // all-zero
    RankVector(GroundSet g, std::vector<Rat> values);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Rat>& values() const { return v_; }

    // Value on a subset; the empty set counts as 0.
    const Rat& value(Mask s) const;
    Rat& at(Mask s);  // nonempty subsets only

    RankVector& operator+=(const RankVector& o);
    RankVector& operator-=(const RankVector& o);
    RankVector& operator*=(const Rat& c);
    friend RankVector operator+(RankVector a, const RankVector& b) { return a += b; }
    friend RankVector operator-(RankVector a, const RankVector& b) { return a -= b; }
    friend RankVector operator*(const Rat& c, RankVector a) { return a *= c; }

    friend bool operator==(const RankVector&, const RankVector&) = default;

private:
    GroundSet ground_;
    std::vector<Rat> v_;  // index: mask - 1
};

// Homogeneous linear functional over the same coordinate space, read as
// "<coeffs, f> >= 0". Canonical form has integer entries with gcd 1.
struct LinFunctional {
    GroundSet ground;
    std::vector<Rat> coeffs;

    Rat value_on(const RankVector& f) const;
    Rat value_on(const std::vector<Rat>& values) const;
    // Scale to integer entries with collective gcd 1 (sign preserved).
    void normalize();
    bool is_zero() const;

    friend bool operator==(const LinFunctional&, const LinFunctional&) = default;
};

// f(I|K) = f(IK) - f(K). I nonempty, disjoint from K.
Rat cond_rank(const RankVector& f, Mask I, Mask K);

// f(I,J|K) = f(IK) + f(JK) - f(IJK) - f(K) for pairwise disjoint I, J, K
// (K may be empty). Overlaps raise std::invalid_argument.
Rat mutual_info(const RankVector& f, Mask I, Mask J, Mask K = 0);

// Ingleton expression -f(I,J) + f(I,J|K) + f(I,J|L) + f(K,L);
// I, J, K, L nonempty and pairwise disjoint.
Rat ingleton(const RankVector& f, Mask I, Mask J, Mask K, Mask L);

// Functional builders for the elemental inequalities; shared with the cone
// module which assembles them into the facet matrix of the polymatroid cone.
LinFunctional submodular_functional(const GroundSet& g, int i, int j, Mask K);
LinFunctional monotone_functional(const GroundSet& g, int i);
std::string submodular_tag(const GroundSet& g, int i, int j, Mask K);
std::string monotone_tag(const GroundSet& g, int i);

struct AxiomViolation {
    std::string tag;
    LinFunctional functional;
};

struct AxiomCheck {
    bool ok = false;
    std::vector<AxiomViolation> violations;
    explicit operator bool() const { return ok; }
};

// Checks every facet inequality of the polymatroid cone: (i,j|K) >= 0 for
// distinct i,j not in K, and (i|M-i) >= 0. Violated functionals are
// returned exactly.
AxiomCheck is_polymatroid(const RankVector& f);

struct RankClass {
    bool integer = false;
    bool matroid = false;
    bool modular = false;
    bool tight = false;
    std::vector<bool> tight_at;  // per element
};

// Flags computed by their defining equations; requires a polymatroid input
// (std::invalid_argument otherwise).
RankClass classify(const RankVector& f);

// Restriction to the sub-ground-set S (nonempty): result(A) = f(A), A subset of S.
RankVector restrict_to(const RankVector& f, Mask S);

// Squared Euclidean distance, exact. Grounds must match.
Rat distance_sq(const RankVector& f, const RankVector& g);

}  // namespace polymat
