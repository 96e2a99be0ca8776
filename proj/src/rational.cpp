#include "polymat/rational.hpp"

#include <stdexcept>

namespace polymat {

std::string show_rat(const Rat& r) {
    if (is_integral(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

void normalize_gcd(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (Int& x : v) x /= g;
}

std::vector<Int> to_integer_vector(const std::vector<Rat>& v) {
    Int den = 1;
    for (const Rat& r : v) den = lcm(den, r.get_den());
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rat& r : v) out.push_back(r.get_num() * (den / r.get_den()));
    normalize_gcd(out);
    return out;
}

}  // namespace polymat
