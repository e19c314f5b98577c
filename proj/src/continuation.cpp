#include "pvi/continuation.hpp"

#include <chrono>
#include <cmath>

#include "pvi/errors.hpp"

namespace pvi {

namespace {

Jet<Complex50> jet_at(const RationalFunction& r, double s) { return eval_jet(r, Complex50(s)); }

double real_of(const Complex50& z) { return static_cast<double>(z.real()); }

// Newton for x(s) = target from the guess s; nullopt when it fails to settle.
std::optional<double> newton(const ParametricSolution& sol, double s, double target) {
    for (int it = 0; it < 30; ++it) {
        const auto X = jet_at(sol.x, s);
        const double f = real_of(X.f) - target, df = real_of(X.df);
        if (df == 0.0) return std::nullopt;
        const double ds = f / df;
        s -= ds;
        if (std::abs(ds) <= 1e-15 * (1.0 + std::abs(s))) return s;
    }
    return std::nullopt;
}

} // namespace

double track_parameter(const ParametricSolution& sol, double s_start, double x_start, double x_target,
                       std::size_t steps) {
    double s = s_start, x = x_start;
    double h = (x_target - x_start) / static_cast<double>(steps);
    int halvings = 0;
    while ((h > 0 && x < x_target) || (h < 0 && x > x_target)) {
        const double next = (h > 0) ? std::min(x + h, x_target) : std::max(x + h, x_target);
        const double slope = real_of(jet_at(sol.x, s).df);
        const double guess = s + (next - x) / slope;
        const auto r = newton(sol, guess, next);
        // Reject steps whose Newton correction is large compared with the predictor step.
        if (!r || std::abs(*r - guess) > 0.1 * std::abs(guess - s) + 1e-14) {
            h *= 0.5;
            if (++halvings > 60) throw StepCollapse("parameter tracking stalled near x = " + std::to_string(x));
            continue;
        }
        s = *r;
        x = next;
        halvings = 0;
    }
    return s;
}

ContinuationReport continue_branch(SolutionId id, double s0, const ContinuationOptions& opt) {
    const auto t_start = std::chrono::steady_clock::now();
    const ParametricSolution& sol = parametric_solution(id);
    const double mu = static_cast<double>(sol.mu);

    ContinuationReport rep;
    rep.id = id;
    rep.s0 = s0;

    // accept s0 to about six digits and refine it onto the zero of x
    if (const auto r = newton(sol, s0, 0.0); r && std::abs(*r - s0) < 1e-6) s0 = *r;
    rep.s0 = s0;
    const auto X0 = jet_at(sol.x, s0), Y0 = jet_at(sol.y, s0);
    if (std::abs(real_of(X0.f)) > 1e-12 || std::abs(real_of(Y0.f)) > 1e-12)
        throw InvalidArgument("s0 is not a branch over x = 0 with y -> 0");
    if (std::abs(real_of(X0.df)) < 1e-12) throw NotApplicable("branch over 0 is ramified");
    rep.at_zero.point = CriticalPoint::Zero;
    rep.at_zero.sigma = 0.0;
    rep.at_zero.l = 1.0;
    rep.at_zero.a = real_of(Y0.df) / real_of(X0.df);

    const double s_seed = track_parameter(sol, s0, 0.0, opt.x_seed, 50);
    const auto Xs = jet_at(sol.x, s_seed), Ys = jet_at(sol.y, s_seed);
    const cd y0 = real_of(Ys.f), yx0 = real_of(Ys.df) / real_of(Xs.df);

    rep.check_x = 1.0 - opt.t_check;
    rep.s_check = track_parameter(sol, s_seed, opt.x_seed, rep.check_x);
    rep.y_oracle = real_of(jet_at(sol.y, rep.s_check).f);

    rep.trajectory = integrate_path(
        y0, yx0, {segment(opt.x_seed, rep.check_x), log_approach(CriticalPoint::One, opt.t_check, opt.t_final)}, mu,
        opt.integrate);
    bool found = false;
    for (const auto& s : rep.trajectory.samples)
        if (std::abs(s.x - rep.check_x) < 1e-14) {
            rep.y_numeric = s.y;
            found = true;
        }
    if (!found) throw InconsistentData("trajectory misses the check point");
    rep.endpoint_error = std::abs(rep.y_numeric - rep.y_oracle) / std::max(1.0, std::abs(rep.y_oracle));

    const ComplexTriple t = triple_from_asymptotics(rep.at_zero.a, 0.0, mu);
    rep.predicted = coefficient_at(CriticalPoint::One, real_part_checked(t), mu);
    rep.fitted = fit_asymptotics(rep.trajectory, CriticalPoint::One, opt.t_check);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return rep;
}

} // namespace pvi
