// Command-line front end: orbit, classify, trigsearch, group, mats, connect,
// verify, integrate, continue, h3pp and report.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pvi/classify.hpp"
#include "pvi/continuation.hpp"
#include "pvi/errors.hpp"
#include "pvi/io.hpp"
#include "pvi/reflect.hpp"

using namespace pvi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    bool json = false;
    unsigned digits = 50;
    double tol = 1e-10;
    double trace_tol = 1e-10;
    std::size_t budget = kDefaultOrbitBudget;
    std::string out;

    Json to_json() const {
        return {{"digits", digits}, {"tol", tol}, {"trace_tol", trace_tol}, {"budget", budget}, {"out", out}};
    }
};

unsigned default_digits() {
    if (const char* env = std::getenv("PVI_DIGITS")) return static_cast<unsigned>(std::stoul(env));
    return 50;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

std::string fmt(Complex z) {
    if (z.imag() == 0.0) return fmt(z.real());
    return fmt(z.real()) + (z.imag() < 0 ? " - " : " + ") + fmt(std::abs(z.imag())) + "i";
}

std::string triple_text(const ExactTriple& t) {
    return "(" + t(0).to_string() + ", " + t(1).to_string() + ", " + t(2).to_string() + ")";
}

double parse_mu(const std::string& text) {
    try {
        const Rational q(text);
        return static_cast<double>(q);
    } catch (const std::exception&) {
        try {
            return std::stod(text);
        } catch (const std::exception&) {
            throw InvalidArgument("cannot parse mu '" + text + "'");
        }
    }
}

Complex parse_complex(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) return {std::stod(text), 0.0};
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InvalidArgument("expected re,im but got '" + text + "'");
    }
}

CriticalPoint parse_point(const std::string& text) {
    if (text == "0") return CriticalPoint::Zero;
    if (text == "1") return CriticalPoint::One;
    if (text == "inf" || text == "infinity") return CriticalPoint::Infinity;
    throw InvalidArgument("critical point must be 0, 1 or inf");
}

// Emits the result with the run header: JSON document or a text summary.
class Emitter {
public:
    Emitter(const RunConfig& cfg, std::string command) : cfg_(cfg), command_(std::move(command)) {}

    void text(const std::string& line) { lines_.push_back(line); }

    void finish(const Json& result) {
        const Json doc = {{"header", run_header(command_, cfg_.to_json())}, {"result", result}};
        if (!cfg_.out.empty() && command_ != "integrate") {
            std::ofstream f(cfg_.out);
            if (!f) throw InvalidArgument("cannot write " + cfg_.out);
            f << doc.dump(2) << '\n';
        }
        if (cfg_.json) {
            std::cout << doc.dump(2) << '\n';
            return;
        }
        std::cout << "# pvi " << library_version() << " " << command_ << " " << cfg_.to_json().dump() << '\n';
        for (const auto& l : lines_) std::cout << l << '\n';
    }

private:
    const RunConfig& cfg_;
    std::string command_;
    std::vector<std::string> lines_;
};

int run_orbit(const RunConfig& cfg, const std::string& seed, const std::string& group) {
    if (group != "b3" && group != "p3") throw InvalidArgument("group must be b3 or p3");
    const ExactTriple t = parse_triple_argument(seed);
    const Orbit o = orbit_enumerate(t, group == "b3" ? BraidGroup::FullB3 : BraidGroup::PureP3, cfg.budget);
    Emitter e(cfg, "orbit");
    e.text("orbit size " + std::to_string(o.size()) + " under " + group);
    for (const auto& c : o.classes) e.text("  " + triple_text(c));
    Json r = to_json(o);
    r["group"] = group;
    e.finish(r);
    return kExitOk;
}

int run_classify(const RunConfig& cfg, const std::string& triple) {
    const ExactTriple t = parse_triple_argument(triple);
    const Classification c = classify_triple(t, std::min<std::size_t>(cfg.budget, 5000));
    Emitter e(cfg, "classify");
    std::string line = orbit_type_name(c.type);
    if (c.orbit_size) line += " (orbit size " + std::to_string(c.orbit_size);
    if (c.known_index) line += ", " + known_orbits()[*c.known_index].label;
    if (c.orbit_size) line += ")";
    e.text(line);
    Json r = {{"type", orbit_type_name(c.type)}, {"orbit_size", c.orbit_size}, {"triple", to_json(t)}};
    if (c.known_index) {
        const auto& k = known_orbits()[*c.known_index];
        r["label"] = k.label;
        r["mu"] = k.mu.str();
    }
    e.finish(r);
    return kExitOk;
}

int run_trigsearch(const RunConfig& cfg, int max_den) {
    const TrigSearchResult res = trig_quadruple_search(max_den);
    Emitter e(cfg, "trigsearch");
    Json sols = Json::array();
    e.text(std::to_string(res.solutions.size()) + " solutions with denominators <= " + std::to_string(max_den) +
           " (" + std::to_string(res.candidates_checked) + " candidates)");
    for (const auto& q : res.solutions) {
        const FamilyMatch m = match_quadruple_family(q);
        std::string tag = family_name(m.family);
        if (m.flip_of) tag = "flip of " + family_name(*m.flip_of);
        e.text("  " + q.to_string() + "  " + tag);
        Json phi = Json::array();
        for (const auto& p : q.phi) phi.push_back(p.str());
        Json entry = {{"phi", phi}, {"family", family_name(m.family)}};
        if (m.flip_of) entry["flip_of"] = family_name(*m.flip_of);
        sols.push_back(entry);
    }
    e.finish({{"max_denominator", max_den},
              {"candidates_checked", res.candidates_checked},
              {"max_field_degree", res.max_field_degree},
              {"solutions", sols}});
    return kExitOk;
}

int run_group(const RunConfig& cfg, const std::string& triple) {
    const ExactTriple t = parse_triple_argument(triple);
    const ReflectionSystem rs = reflections(t);
    const ClosureResult c = group_closure(rs);
    const auto rel = coxeter_relations(rs);
    Emitter e(cfg, "group");
    Json n = Json::object();
    const char* names[] = {"n12", "n23", "n13"};
    std::string rels;
    for (int i = 0; i < 3; ++i) {
        n[names[i]] = rel[i] ? Json(*rel[i]) : Json(nullptr);
        rels += std::string(" ") + names[i] + "=" + (rel[i] ? std::to_string(*rel[i]) : "inf");
    }
    e.text("order " + std::to_string(c.order) + (c.coxeter_type.empty() ? "" : " (" + c.coxeter_type + ")") + rels);
    e.finish({{"order", c.order}, {"coxeter_type", c.coxeter_type}, {"relations", n}});
    return kExitOk;
}

int run_mats(const RunConfig& cfg, const std::string& triple, const std::string& mu_text) {
    const ExactTriple t = parse_triple_argument(triple);
    const CanonicalMatrices m = canonical_matrices(to_real(t), true);
    double mu;
    if (!mu_text.empty()) {
        mu = parse_mu(mu_text);
    } else {
        const MuClass mc = mu_from_triple(t);
        if (!mc.representative_mu) throw InvalidArgument("no real mu for this triple; pass --mu");
        mu = *mc.representative_mu;
    }
    const MInfinityReport rep = m_infinity_check(m.m1, m.m2, m.m3, mu, cfg.trace_tol);
    Emitter e(cfg, "mats");
    if (m.shift != 0) e.text("coordinates cyclically shifted by " + std::to_string(m.shift));
    e.text("M_inf check " + std::string(rep.ok ? "ok" : "FAILED") + ", max error " + fmt(rep.max_error));
    e.finish({{"shift", m.shift},
              {"M1", to_json(m.m1)},
              {"M2", to_json(m.m2)},
              {"M3", to_json(m.m3)},
              {"mu", mu},
              {"m_inf_check",
               {{"ok", rep.ok},
                {"trace", complex_json(rep.trace)},
                {"expected_trace", complex_json(rep.expected_trace)},
                {"max_error", rep.max_error}}}});
    return rep.ok ? kExitOk : kExitFailed;
}

int run_connect(const RunConfig& cfg, const std::string& triple, const std::string& mu_text, const std::string& from,
                const std::string& a0_text, double sigma0) {
    if (mu_text.empty()) throw InvalidArgument("connect needs --mu");
    const double mu = parse_mu(mu_text);
    Emitter e(cfg, "connect");
    if (!triple.empty()) {
        const ExactTriple t = parse_triple_argument(triple);
        Json pts = Json::array();
        for (CriticalPoint p : {CriticalPoint::Zero, CriticalPoint::One, CriticalPoint::Infinity}) {
            const AsymptoticDatum d = coefficient_at(p, to_real(t), mu);
            e.text(point_name(p) + ": sigma " + fmt(d.sigma) + ", l " + fmt(d.l) + ", a " + fmt(d.a));
            pts.push_back(to_json(d));
        }
        e.finish({{"triple", to_json(t)}, {"mu", mu}, {"points", pts}});
        return kExitOk;
    }
    if (from != "0") throw InvalidArgument("connect needs --triple or --from 0 --a0 --sigma0");
    if (a0_text.empty()) throw InvalidArgument("connect --from 0 needs --a0");
    const Complex a0 = parse_complex(a0_text);
    const ComplexTriple t = triple_from_asymptotics(a0, sigma0, mu);
    const MonodromyTriple m = monodromy_from_asymptotics(sigma0, mu, a0);
    e.text("triple (" + fmt(t(0)) + ", " + fmt(t(1)) + ", " + fmt(t(2)) + ")");
    e.finish({{"triple", {complex_json(t(0)), complex_json(t(1)), complex_json(t(2))}},
              {"mu", mu},
              {"sigma0", sigma0},
              {"a0", complex_json(a0)},
              {"M0", to_json(m.m0)},
              {"Mx", to_json(m.mx)},
              {"M1", to_json(m.m1)}});
    return kExitOk;
}

int run_verify(const RunConfig& cfg, const std::string& name, std::size_t samples) {
    const auto id = solution_from_name(name);
    if (!id) throw InvalidArgument("unknown solution '" + name + "'");
    const VerifyReport rep = verify_solution(*id, samples, std::nullopt, kResidualThreshold, cfg.digits);
    const ParametricSolution& sol = parametric_solution(*id);
    Emitter e(cfg, "verify");
    const std::string verdict = rep.passed ? "PASS" : "ERRATUM";
    e.text(verdict + ": " + sol.name + " at mu = " + sol.mu.str() + ", " + std::to_string(rep.samples) +
           " samples, max residual " + fmt(rep.max_residual) + " (threshold " + fmt(kResidualThreshold) + ")");
    if (!rep.passed) {
        e.text("  the formula as stored does not satisfy PVI(mu); " + std::to_string(rep.failing.size()) +
               " samples above threshold");
        if (*id == SolutionId::A3) e.text("  candidate correction: a3-corrected (x -> -x) passes");
    }
    Json failing = Json::array();
    for (const auto& f : rep.failing) failing.push_back({{"s", complex_json(f.s)}, {"residual", f.residual}});
    e.finish({{"solution", sol.name},
              {"verdict", verdict},
              {"samples", rep.samples},
              {"max_residual", rep.max_residual},
              {"threshold", kResidualThreshold},
              {"failing", failing}});
    return rep.passed ? kExitOk : kExitFailed;
}

int run_integrate(const RunConfig& cfg, const std::string& mu_text, double sigma0, const std::string& a0_text,
                  double to, double x_start, const std::string& fit_point) {
    if (mu_text.empty() || a0_text.empty()) throw InvalidArgument("integrate needs --mu and --a0");
    const double mu = parse_mu(mu_text);
    AsymptoticDatum seed;
    seed.sigma = sigma0;
    seed.l = 1.0 - sigma0;
    seed.a = parse_complex(a0_text);
    IntegrateOptions opt;
    opt.tol = cfg.tol;
    const Trajectory traj = integrate(seed, mu, x_start, to, opt);
    Emitter e(cfg, "integrate");
    const OdeSample& last = traj.samples.back();
    e.text("y(" + fmt(last.x) + ") = " + fmt(last.y) + ", y' = " + fmt(last.yx));
    e.text(std::to_string(traj.accepted) + " steps, " + std::to_string(traj.events.size()) + " pole events");
    Json events = Json::array();
    for (const auto& ev : traj.events) events.push_back({{"x", complex_json(ev.x)}, {"kind", ev.kind}});
    Json r = {{"mu", mu},
              {"seed", to_json(seed)},
              {"x_end", complex_json(last.x)},
              {"y_end", complex_json(last.y)},
              {"yx_end", complex_json(last.yx)},
              {"steps", traj.accepted},
              {"rejected", traj.rejected},
              {"events", events}};
    if (!fit_point.empty()) {
        const FitResult f = fit_asymptotics(traj, parse_point(fit_point));
        e.text("fit at " + fit_point + ": l " + fmt(f.datum.l) + " +- " + fmt(f.exponent_stderr) + ", |a| " +
               fmt(std::abs(f.datum.a)));
        r["fit"] = to_json(f.datum);
        r["fit"]["l_stderr"] = f.exponent_stderr;
    }
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) throw InvalidArgument("cannot write " + cfg.out);
        write_csv(f, traj, run_header("integrate", cfg.to_json()).dump());
    }
    e.finish(r);
    return kExitOk;
}

int run_continue(const RunConfig& cfg, const std::string& name, double s0) {
    const auto id = solution_from_name(name);
    if (!id) throw InvalidArgument("unknown solution '" + name + "'");
    ContinuationOptions opt;
    opt.integrate.tol = cfg.tol;
    const ContinuationReport rep = continue_branch(*id, s0, opt);
    const bool ok = rep.endpoint_error < 1e-6 && std::abs(rep.fitted.datum.l - rep.predicted.l) < 1e-3 &&
                    std::abs(std::abs(rep.fitted.datum.a) / std::abs(rep.predicted.a) - 1.0) < 1e-2;
    Emitter e(cfg, "continue");
    e.text("branch s0 = " + fmt(s0) + " of " + name + ": y ~ " + fmt(rep.at_zero.a) + " x at 0");
    e.text("check at x = " + fmt(rep.check_x) + ": |y - y_param| = " + fmt(rep.endpoint_error));
    e.text("at 1 fitted l = " + fmt(rep.fitted.datum.l) + ", |a| = " + fmt(std::abs(rep.fitted.datum.a)) +
           "; predicted l = " + fmt(rep.predicted.l) + ", |a| = " + fmt(std::abs(rep.predicted.a)));
    e.text(ok ? "agreement" : "DISAGREEMENT");
    e.finish({{"solution", name},
              {"s0", s0},
              {"at_zero", to_json(rep.at_zero)},
              {"endpoint_error", rep.endpoint_error},
              {"fitted", to_json(rep.fitted.datum)},
              {"predicted", to_json(rep.predicted)},
              {"agrees", ok}});
    return ok ? kExitOk : kExitFailed;
}

int run_h3pp(const RunConfig& cfg, int k) {
    const PuiseuxBranch b = h3pp_branch(k);
    Emitter e(cfg, "h3pp");
    e.text("branch " + std::to_string(k) + ": y ~ " + b.expression + " x^" + b.exponent.str() + " = " +
           fmt(b.coefficient) + " x^" + b.exponent.str());
    e.finish({{"k", k}, {"exponent", b.exponent.str()}, {"a", complex_json(b.coefficient)}, {"expression", b.expression}});
    return kExitOk;
}

int run_report(const RunConfig& cfg) {
    Emitter e(cfg, "report");
    e.text("label  type                 size  mu     P3 orbits");
    Json rows = Json::array();
    for (const auto& k : known_orbits()) {
        const auto parts = split_orbit(k.orbit, BraidGroup::PureP3);
        std::string split;
        Json sizes = Json::array();
        for (const auto& p : parts) {
            split += (split.empty() ? "" : "+") + std::to_string(p.size());
            sizes.push_back(p.size());
        }
        std::ostringstream line;
        line << std::left << std::setw(7) << k.label << std::setw(21) << orbit_type_name(k.type) << std::setw(6)
             << k.orbit.size() << std::setw(7) << k.mu.str() << split;
        e.text(line.str());
        rows.push_back({{"label", k.label},
                        {"type", orbit_type_name(k.type)},
                        {"size", k.orbit.size()},
                        {"mu", k.mu.str()},
                        {"p3_split", sizes},
                        {"seed", to_json(k.seed)}});
    }
    e.finish({{"orbits", rows}});
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monodromy data, finite braid orbits and algebraic solutions of PVI(mu)"};
    app.set_version_flag("--version", std::string(library_version()));
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    cfg.digits = default_digits();
    app.add_flag("--json", cfg.json, "Machine-readable JSON output");
    app.add_option("--out", cfg.out, "Artifact path (JSON, or CSV for integrate)");

    std::string triple, seed, group = "b3", mu, from, a0, fit, solution;
    int max_den = 20, branch = 1;
    std::size_t samples = 100;
    double sigma0 = 0.0, to = 0.999, x_start = 1e-3, s0 = 0.0;
    bool all = false;

    auto* orbit = app.add_subcommand("orbit", "Enumerate a braid orbit");
    orbit->add_option("--seed", seed, "Triple JSON or file")->required();
    orbit->add_option("--group", group, "b3 or p3");
    orbit->add_option("--budget", cfg.budget, "Maximum number of classes");

    auto* classify = app.add_subcommand("classify", "Classify the orbit of a triple");
    classify->add_option("--triple", triple, "Triple JSON or file")->required();
    classify->add_option("--budget", cfg.budget, "Orbit budget");

    auto* trig = app.add_subcommand("trigsearch", "Rational solutions of a vanishing sum of four cosines");
    trig->add_option("--max-den", max_den, "Largest denominator")->check(CLI::Range(2, 120));

    auto* grp = app.add_subcommand("group", "Reflection group of a triple");
    grp->add_option("--triple", triple, "Triple JSON or file")->required();

    auto* mats = app.add_subcommand("mats", "Monodromy matrices of a triple");
    mats->add_option("--triple", triple, "Triple JSON or file")->required();
    mats->add_option("--mu", mu, "Parameter mu (p/q or decimal)");
    mats->add_option("--trace-tol", cfg.trace_tol, "Trace identity tolerance")->check(CLI::PositiveNumber);

    auto* connect = app.add_subcommand("connect", "Connection formulae");
    connect->add_option("--triple", triple, "Triple JSON or file");
    connect->add_option("--mu", mu, "Parameter mu");
    connect->add_option("--from", from, "Critical point of the given datum (0)");
    connect->add_option("--a0", a0, "Leading coefficient re,im");
    connect->add_option("--sigma0", sigma0, "Exponent sigma0 in [0, 1)");

    auto* verify = app.add_subcommand("verify", "Residual check of an algebraic solution");
    verify->add_option("--solution", solution, "a3, b3, h3, h3p or a3-corrected")->required();
    verify->add_option("--samples", samples, "Number of sample parameters")->check(CLI::PositiveNumber);
    verify->add_option("--digits", cfg.digits, "Working precision (50 or 100)");

    auto* integ = app.add_subcommand("integrate", "Integrate PVI(mu) from a datum at 0");
    integ->add_option("--mu", mu, "Parameter mu")->required();
    integ->add_option("--sigma0", sigma0, "Exponent sigma0 in [0, 1)");
    integ->add_option("--a0", a0, "Leading coefficient re,im")->required();
    integ->add_option("--to", to, "End abscissa");
    integ->add_option("--from-x", x_start, "Start abscissa");
    integ->add_option("--tol", cfg.tol, "Local error tolerance")->check(CLI::PositiveNumber);
    integ->add_option("--fit", fit, "Fit the critical behaviour at 0, 1 or inf");

    auto* cont = app.add_subcommand("continue", "Continue a branch of an algebraic solution from 0 to 1");
    cont->add_option("--solution", solution, "Solution name")->required();
    cont->add_option("--s0", s0, "Parameter of the branch over 0")->required();
    cont->add_option("--tol", cfg.tol, "Local error tolerance")->check(CLI::PositiveNumber);

    auto* h3pp = app.add_subcommand("h3pp", "Puiseux datum of a great dodecahedron branch");
    h3pp->add_option("--branch", branch, "Branch index 1..18")->required()->check(CLI::Range(1, 18));

    auto* report = app.add_subcommand("report", "Summary of the five finite orbits");
    report->add_flag("--all", all, "All orbits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*orbit) return run_orbit(cfg, seed, group);
        if (*classify) return run_classify(cfg, triple);
        if (*trig) return run_trigsearch(cfg, max_den);
        if (*grp) return run_group(cfg, triple);
        if (*mats) return run_mats(cfg, triple, mu);
        if (*connect) return run_connect(cfg, triple, mu, from, a0, sigma0);
        if (*verify) return run_verify(cfg, solution, samples);
        if (*integ) return run_integrate(cfg, mu, sigma0, a0, to, x_start, fit);
        if (*cont) return run_continue(cfg, solution, s0);
        if (*h3pp) return run_h3pp(cfg, branch);
        if (*report) return run_report(cfg);
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const SchemaMismatch& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailed;
    }
    return kExitUsage;
}
