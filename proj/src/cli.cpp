#include "polymat/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "polymat/io.hpp"
#include "polymat/reproduce.hpp"

namespace polymat::cli {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void write_or_print(const std::optional<std::string>& out, std::ostream& os,
                    const std::string& text) {
    if (out) {
        std::ofstream f(*out);
        if (!f) throw std::runtime_error("cannot write '" + *out + "'");
        f << text;
    } else {
        os << text;
    }
}

// "uniform:u,t" | "pointed:c,u,t" | "zero" | "@file"
ExcessFunction parse_excess_spec(const std::string& spec, const GroundSet& base) {
    if (spec == "zero") return uniform_excess(base, Rat(0), Rat(0));
    if (!spec.empty() && spec[0] == '@') return io::load_excess(spec.substr(1), base);
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::runtime_error("excess spec must be 'uniform:u,t', 'pointed:c,u,t', 'zero' or '@file'");
    std::string kind = spec.substr(0, colon);
    std::vector<std::string> parts;
    std::string rest = spec.substr(colon + 1);
    std::istringstream iss(rest);
    std::string tok;
    while (std::getline(iss, tok, ',')) parts.push_back(tok);
    if (kind == "uniform" && parts.size() == 2)
        return uniform_excess(base, parse_rat(parts[0]), parse_rat(parts[1]));
    if (kind == "pointed" && parts.size() == 3) {
        int c = base.index_of(parts[0]);
        if (c < 0) throw std::runtime_error("pointed excess: unknown element '" + parts[0] + "'");
        return pointed_excess(base, c, parse_rat(parts[1]), parse_rat(parts[2]));
    }
    throw std::runtime_error("malformed excess spec '" + spec + "'");
}

}  // namespace

int cmd_check(const CheckArgs& args, std::ostream& os) {
    auto body = [&]() -> int {
        Stopwatch sw;
        RankVector f = io::load_polymatroid(args.file);
        AxiomCheck ax = is_polymatroid(f);
        os << "command: check " << args.file << '\n';
        os << "polymatroid: " << (ax.ok ? "true" : "false") << '\n';
        for (const auto& v : ax.violations) os << "violated: " << v.tag << '\n';
        os << "time_ms: " << sw.ms() << '\n';
        return ax.ok ? kExitOk : kExitInfeasible;
    };
    try {
        return body();
    } catch (const std::exception& e) {
        os << "command: check\nstatus: error\nerror: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_tighten(const TightenArgs& args, std::ostream& os) {
    try {
        Stopwatch sw;
        RankVector f = io::load_polymatroid(args.file);
        if (!is_polymatroid(f)) {
            os << "command: tighten\nstatus: error\nerror: input is not a polymatroid\n";
            return kExitError;
        }
        Mask a = args.elems.empty() ? f.ground().full_mask() : f.ground().mask_of(args.elems);
        RankVector out = tighten_set(f, a);
        os << "command: tighten " << args.file << '\n';
        os << "tightened_at: " << f.ground().subset_name(a) << '\n';
        os << "time_ms: " << sw.ms() << '\n';
        write_or_print(args.out, os, io::to_string(out));
        return kExitOk;
    } catch (const std::exception& e) {
        os << "command: tighten\nstatus: error\nerror: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_extend(const ExtendArgs& args, std::ostream& os) {
    try {
        Stopwatch sw;
        RankVector f = io::load_polymatroid(args.file);
        if (!is_polymatroid(f)) {
            os << "command: extend\nstatus: error\nerror: input is not a polymatroid\n";
            return kExitError;
        }
        ExcessFunction e = parse_excess_spec(args.excess, f.ground());
        std::vector<std::string> bad = excess_violations(f, e);
        os << "command: extend " << args.file << " by " << args.label << '\n';
        if (!bad.empty()) {
            os << "status: invalid-excess\n";
            for (const auto& b : bad) os << "violated: " << b << '\n';
            os << "time_ms: " << sw.ms() << '\n';
            return kExitInfeasible;
        }
        RankVector out = extend_by_excess(f, args.label, e);
        os << "status: extended\n";
        os << "time_ms: " << sw.ms() << '\n';
        write_or_print(args.out, os, io::to_string(out));
        return kExitOk;
    } catch (const std::exception& e) {
        os << "command: extend\nstatus: error\nerror: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_amalgam(const AmalgamArgs& args, std::ostream& os) {
    try {
        Stopwatch sw;
        RankVector fx = io::load_polymatroid(args.file_x);
        RankVector fy = io::load_polymatroid(args.file_y);
        std::vector<std::string> base = args.base;
        if (base.empty()) {
            for (const auto& l : fx.ground().labels())
                if (fy.ground().contains(l)) base.push_back(l);
        }
        ExtensionPair pair = ExtensionPair::make(std::move(fx), std::move(fy), base);
        Certificate cert = args.adhesive ? has_adhesive(pair) : has_amalgam(pair);
        os << "command: " << (args.adhesive ? "amalgam --adhesive" : "amalgam") << '\n';
        os << "base: ";
        for (std::size_t i = 0; i < base.size(); ++i) os << (i ? " " : "") << base[i];
        os << '\n';
        os << "result: " << (cert.feasible() ? "FEASIBLE" : "INFEASIBLE") << '\n';
        VerifyResult vr = verify(pair, cert, args.adhesive);
        os << "certificate_verified: " << (vr.ok ? "true" : "false") << '\n';
        os << "time_ms: " << sw.ms() << '\n';
        std::ostringstream cert_text;
        io::print_certificate(cert_text, pair, cert);
        write_or_print(args.out, os, cert_text.str());
        return cert.feasible() ? kExitOk : kExitInfeasible;
    } catch (const std::exception& e) {
        os << "command: amalgam\nstatus: error\nerror: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_project(const ProjectArgs& args, std::ostream& os) {
    try {
        Stopwatch sw;
        GroundSet g(args.ground);
        os << "command: project\n";
        if (args.side_x.empty() && args.side_y.empty()) {
            // Nothing dropped: the projection is the cone itself.
            FacetMatrix m = polymatroid_facets(g);
            os << "rows: 0\nrays: 0\nfacets: " << m.rows.size() << '\n';
            os << "time_ms: " << sw.ms() << '\n';
            std::ostringstream text;
            io::print_facet_matrix(text, m);
            write_or_print(args.out, os, text.str());
            return kExitOk;
        }
        ProjectionSpec spec{g, g.mask_of(args.side_x), g.mask_of(args.side_y)};
        ProjectionRun run = run_projection(spec, args.threads);
        FacetFilter filter = facet_filter(run.candidates);
        os << "rows: " << run.restricted.rows.size() << '\n';
        os << "rays: " << run.rays.rays.size() << '\n';
        os << "candidates: " << run.candidates.size() << '\n';
        os << "facets: " << filter.facets.size() << '\n';
        os << "time_ms: " << sw.ms() << '\n';
        std::vector<LinFunctional> facets;
        for (std::size_t q : filter.facets) facets.push_back(run.candidates[q]);
        std::ostringstream text;
        io::print_functionals(text, facets);
        write_or_print(args.out, os, text.str());
        return kExitOk;
    } catch (const std::exception& e) {
        os << "command: project\nstatus: error\nerror: " << e.what() << '\n';
        return kExitError;
    }
}

int cmd_reproduce(const ReproduceArgs& args, std::ostream& os) {
    try {
        Stopwatch sw;
        Report rep = run_target(args.target, args.threads);
        os << "command: reproduce " << args.target << '\n';
        for (const auto& [k, v] : rep.lines) os << k << ": " << v << '\n';
        os << "status: " << (rep.ok ? "ok" : "MISMATCH") << '\n';
        os << "time_ms: " << sw.ms() << '\n';
        return rep.ok ? kExitOk : kExitInfeasible;
    } catch (const std::exception& e) {
        os << "command: reproduce\nstatus: error\nerror: " << e.what() << '\n';
        return kExitError;
    }
}

}  // namespace polymat::cli
