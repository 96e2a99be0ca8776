#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace polymat {

// All arithmetic in this library is exact: arbitrary-precision rationals
// for rank values and functionals, arbitrary-precision integers for rays.
using Rat = mpq_class;
using Int = mpz_class;

// Canonicalized rational from a fraction (mpq_class does not reduce on its own).
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

// "p/q" in lowest terms, or plain "p" for integers.
std::string show_rat(const Rat& r);

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// Divides an integer vector by the gcd of its entries (no sign flip).
// A zero vector is left unchanged.
void normalize_gcd(std::vector<Int>& v);

// Scales a rational vector to integers with collective gcd 1.
std::vector<Int> to_integer_vector(const std::vector<Rat>& v);

inline std::vector<Rat> to_rational_vector(const std::vector<Int>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const Int& x : v) out.emplace_back(x);
    return out;
}

}  // namespace polymat
