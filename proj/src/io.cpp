#include "polymat/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace polymat::io {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

// Strips comments and whitespace; empty result means "skip this line".
std::string clean(std::string s) {
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct Assignment {
    std::string subset;
    Rat value;
};

bool parse_assignment(const std::string& s, std::size_t line, Assignment& out) {
    auto eq = s.find('=');
    if (eq == std::string::npos) return false;
    std::string lhs = clean(s.substr(0, eq)), rhs = clean(s.substr(eq + 1));
    if (lhs.empty() || rhs.empty()) fail(line, "malformed assignment '" + s + "'");
    out.subset = lhs;
    try {
        out.value = parse_rat(rhs);
    } catch (const std::invalid_argument& e) {
        fail(line, e.what());
    }
    return true;
}

GroundSet parse_ground_line(const std::string& s, std::size_t line) {
    std::istringstream iss(s);
    std::string word;
    iss >> word;
    std::vector<std::string> labels;
    while (iss >> word) labels.push_back(word);
    if (labels.empty()) fail(line, "ground line without labels");
    try {
        return GroundSet(labels);
    } catch (const std::invalid_argument& e) {
        fail(line, e.what());
    }
}

}  // namespace

void print_polymatroid(std::ostream& os, const RankVector& f) {
    const GroundSet& g = f.ground();
    os << "ground";
    for (const auto& l : g.labels()) os << ' ' << l;
    os << '\n';
    for (Mask s = 1; s <= g.full_mask(); ++s)
        os << g.subset_name(s) << " = " << show_rat(f.value(s)) << '\n';
}

std::string to_string(const RankVector& f) {
    std::ostringstream oss;
    print_polymatroid(oss, f);
    return oss.str();
}

RankVector parse_polymatroid(std::istream& is) {
    std::string raw;
    std::size_t lineno = 0;
    GroundSet ground;
    bool have_ground = false;
    std::vector<Rat> values;
    std::vector<bool> seen;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string s = clean(raw);
        if (s.empty()) continue;
        if (s.rfind("ground", 0) == 0) {
            if (have_ground) fail(lineno, "second ground line");
            ground = parse_ground_line(s, lineno);
            have_ground = true;
            values.assign(ground.coord_count(), Rat(0));
            seen.assign(ground.coord_count(), false);
            continue;
        }
        if (!have_ground) fail(lineno, "assignment before the ground line");
        Assignment a;
        if (!parse_assignment(s, lineno, a)) fail(lineno, "expected '<subset> = <value>'");
        Mask m = 0;
        try {
            m = ground.parse_subset(a.subset);
        } catch (const std::invalid_argument& e) {
            fail(lineno, e.what());
        }
        if (m == 0) fail(lineno, "the empty set has no stored rank");
        if (seen[m - 1]) fail(lineno, "subset '" + a.subset + "' assigned twice");
        seen[m - 1] = true;
        values[m - 1] = a.value;
    }
    if (!have_ground) throw std::runtime_error("missing ground line");
    for (Mask s = 1; s <= ground.full_mask(); ++s)
        if (!seen[s - 1])
            throw std::runtime_error("missing value for subset '" + ground.subset_name(s) + "'");
    return RankVector(ground, std::move(values));
}

RankVector parse_polymatroid_string(const std::string& text) {
    std::istringstream iss(text);
    return parse_polymatroid(iss);
}

RankVector load_polymatroid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return parse_polymatroid(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void save_polymatroid(const std::string& path, const RankVector& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    print_polymatroid(out, f);
}

ExcessFunction parse_excess(std::istream& is, const GroundSet& base) {
    std::string raw;
    std::size_t lineno = 0;
    std::vector<Rat> values(base.coord_count() + 1, Rat(0));
    std::vector<bool> seen(base.coord_count() + 1, false);
    while (std::getline(is, raw)) {
        ++lineno;
        std::string s = clean(raw);
        if (s.empty()) continue;
        Assignment a;
        if (!parse_assignment(s, lineno, a)) fail(lineno, "expected '<subset> = <value>'");
        Mask m = 0;
        if (a.subset != "0") {
            try {
                m = base.parse_subset(a.subset);
            } catch (const std::invalid_argument& e) {
                fail(lineno, e.what());
            }
        }
        if (seen[m]) fail(lineno, "subset '" + a.subset + "' assigned twice");
        seen[m] = true;
        values[m] = a.value;
    }
    for (Mask s = 0; s <= base.full_mask(); ++s)
        if (!seen[s])
            throw std::runtime_error("missing excess value for '" +
                                     (s ? base.subset_name(s) : std::string("0")) + "'");
    return ExcessFunction(base, std::move(values));
}

ExcessFunction load_excess(const std::string& path, const GroundSet& base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    try {
        return parse_excess(in, base);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void print_certificate(std::ostream& os, const ExtensionPair& p, const Certificate& c) {
    if (c.kind == Certificate::Kind::Feasible) {
        os << "status: FEASIBLE\n";
        print_polymatroid(os, *c.witness);
        return;
    }
    os << "status: INFEASIBLE\n";
    FacetMatrix facets = polymatroid_facets(p.merged);
    for (const auto& [idx, coeff] : c.farkas->facet_coeffs)
        os << facets.rows[idx].tag << ": " << show_rat(coeff) << '\n';
    if (sgn(c.farkas->modular_coeff) != 0)
        os << "modularity: " << show_rat(c.farkas->modular_coeff) << '\n';
}

void print_facet_matrix(std::ostream& os, const FacetMatrix& m) {
    for (const auto& row : m.rows) {
        os << row.tag << ':';
        for (const Rat& c : row.fn.coeffs) os << ' ' << show_rat(c);
        os << '\n';
    }
}

void print_rays(std::ostream& os, const RayList& rays) {
    for (const auto& y : rays.rays) {
        for (std::size_t i = 0; i < y.size(); ++i) os << (i ? " " : "") << y[i].get_str();
        os << '\n';
    }
}

RayList parse_rays(std::istream& is) {
    RayList out;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string s = clean(raw);
        if (s.empty()) continue;
        std::istringstream iss(s);
        std::vector<Int> y;
        std::string tok;
        while (iss >> tok) {
            try {
                y.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                fail(lineno, "malformed integer '" + tok + "'");
            }
        }
        out.rays.push_back(std::move(y));
    }
    return out;
}

void print_functionals(std::ostream& os, const std::vector<LinFunctional>& fns) {
    for (const auto& fn : fns) {
        std::vector<Int> ints = to_integer_vector(fn.coeffs);
        for (std::size_t i = 0; i < ints.size(); ++i) os << (i ? " " : "") << ints[i].get_str();
        os << '\n';
    }
}

std::vector<LinFunctional> parse_functionals(std::istream& is, const GroundSet& g) {
    RayList raw = parse_rays(is);
    std::vector<LinFunctional> out;
    for (const auto& v : raw.rays) {
        if (v.size() != g.coord_count())
            throw std::runtime_error("functional length does not match the ground set");
        LinFunctional fn{g, {}};
        fn.coeffs.reserve(v.size());
        for (const Int& x : v) fn.coeffs.emplace_back(x);
        out.push_back(std::move(fn));
    }
    return out;
}

void print_family(std::ostream& os, const InequalityFamily& fam) {
    for (const auto& inst : fam.instances) {
        std::vector<Int> ints = to_integer_vector(inst.fn.coeffs);
        for (std::size_t i = 0; i < ints.size(); ++i) os << (i ? " " : "") << ints[i].get_str();
        os << "  # " << inst.expr << '\n';
    }
}

}  // namespace polymat::io
