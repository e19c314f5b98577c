#include "doctest.h"

#include <cmath>
#include <sstream>

#include "pvi/continuation.hpp"
#include "pvi/errors.hpp"
#include "pvi/pvi.hpp"

using namespace pvi;

namespace {

// y'' along the Hamiltonian flow by central differences of q_dot.
cd second_derivative_from_flow(cd x, cd q, cd p, double mu) {
    const double h = 1e-6;
    const HamiltonianRate r = hamiltonian_rhs(x, q, p, mu);
    auto qd = [&](cd xx, cd qq, cd pp) { return hamiltonian_rhs(xx, qq, pp, mu).q_dot; };
    const cd dx = (qd(x + h, q, p) - qd(x - h, q, p)) / (2 * h);
    const cd dq = (qd(x, q + h, p) - qd(x, q - h, p)) / (2 * h);
    const cd dp = (qd(x, q, p + h) - qd(x, q, p - h)) / (2 * h);
    return dx + dq * r.q_dot + dp * r.p_dot;
}

Trajectory synthetic(double a, double l, double c, double t0, double t1, std::size_t n) {
    Trajectory t;
    for (std::size_t i = 0; i < n; ++i) {
        const double u = std::log(t1) + (std::log(t0) - std::log(t1)) * i / (n - 1);
        const double x = std::exp(u);
        OdeSample s;
        s.tau = static_cast<double>(i);
        s.x = x;
        s.xm1 = x - 1.0;
        s.y = a * std::pow(x, l) * (1.0 + c * x);
        t.samples.push_back(s);
    }
    return t;
}

struct OracleState {
    double x;
    cd y, yx;
};

OracleState a3c_state(double x) {
    const auto& sol = parametric_solution(SolutionId::A3c);
    const double s = track_parameter(sol, -1.0 / 3.0, 0.0, x);
    const auto X = eval_jet(sol.x, Complex50(s)), Y = eval_jet(sol.y, Complex50(s));
    return {x, static_cast<double>(Y.f.real()), static_cast<double>((Y.df / X.df).real())};
}

} // namespace

TEST_CASE("right-hand side") {
    const cd x(0.3, 0.1), y(0.7, -0.2), yx(0.4, 0.5);
    const cd expected = 0.5 * (1.0 / y + 1.0 / (y - 1.0) + 1.0 / (y - x)) * yx * yx -
                        (1.0 / x + 1.0 / (x - 1.0) + 1.0 / (y - x)) * yx +
                        0.5 * y * (y - 1.0) * (y - x) / (x * x * (x - 1.0) * (x - 1.0)) * (x * (x - 1.0) / ((y - x) * (y - x)));
    CHECK(std::abs(pvi_rhs(x, y, yx, 0.5) - expected) < 1e-12);
    CHECK_THROWS_AS(pvi_rhs(x, x, yx, 0.3), SingularPoint);
}

TEST_CASE("reflection x -> 1 - x, y -> 1 - y") {
    const cd x(0.3, 0.1), y(0.7, -0.2), yx(0.4, 0.5);
    CHECK(std::abs(pvi_rhs(1.0 - x, 1.0 - y, yx, 0.3) + pvi_rhs(x, y, yx, 0.3)) < 1e-12);
}

TEST_CASE("Hamiltonian system") {
    for (double mu : {0.0, 1.0}) CHECK(std::abs(hamiltonian_rhs(0.4, 0.2, 0.0, mu).p_dot) == 0.0);
    const cd x(0.35, 0.05), y(0.6, 0.1), yx(-0.3, 0.2);
    const double mu = -0.2;
    const cd p = p_from_y(x, y, yx);
    CHECK(std::abs(yx_from_qp(x, y, p) - yx) < 1e-13);
    CHECK(std::abs(second_derivative_from_flow(x, y, p, mu) - pvi_rhs(x, y, yx, mu)) < 1e-7);
    CHECK_THROWS_AS(p_from_y(x, x, yx), SingularPoint);
    CHECK_THROWS_AS(p_from_y(x, 0.0, yx), SingularPoint);
}

TEST_CASE("seeding preconditions") {
    AsymptoticDatum d;
    d.a = 0.0;
    CHECK_THROWS_AS(integrate(d, 0.3, 1e-3, 0.5), InvalidArgument);
    d.a = 0.4;
    d.sigma = 1.2;
    CHECK_THROWS_AS(integrate(d, 0.3, 1e-3, 0.5), InvalidArgument);
}

TEST_CASE("continued branch matches the parametric form") {
    const OracleState a = a3c_state(0.05), b = a3c_state(0.6);
    const double mu = static_cast<double>(parametric_solution(SolutionId::A3c).mu);
    double previous = 0.0;
    for (double tol : {1e-7, 1e-9, 1e-11}) {
        IntegrateOptions opt;
        opt.tol = tol;
        const Trajectory t = integrate_path(a.y, a.yx, {segment(a.x, b.x)}, mu, opt);
        const double err = std::abs(t.samples.back().y - b.y);
        CHECK(err < 1e-5);
        if (previous > 0.0) CHECK(err < previous / 8.0);
        previous = err;
    }
    CHECK(previous < 1e-9);
}

TEST_CASE("reversing the path returns to the start") {
    const OracleState a = a3c_state(0.05);
    const double mu = static_cast<double>(parametric_solution(SolutionId::A3c).mu);
    IntegrateOptions opt;
    const Trajectory fwd = integrate_path(a.y, a.yx, {segment(0.05, 0.6)}, mu, opt);
    const OdeSample& e = fwd.samples.back();
    const Trajectory back = integrate_path(e.y, e.yx, {segment(0.6, 0.05)}, mu, opt);
    CHECK(std::abs(back.samples.back().y - a.y) < 10 * opt.tol);
}

TEST_CASE("integration through a pole of y") {
    IntegrateOptions a, b;
    a.tol = 1e-10;
    b.tol = 1e-12;
    const Trajectory ta = integrate_path(2.0, 1.0, {segment(0.3, 0.7)}, -0.2, a);
    const Trajectory tb = integrate_path(2.0, 1.0, {segment(0.3, 0.7)}, -0.2, b);
    bool pole = false;
    for (const auto& ev : ta.events) {
        if (ev.kind == "y-pole" || ev.kind == "y-exit") {
            pole = true;
            CHECK(ev.continuity < 10 * a.tol);
        }
    }
    CHECK(pole);
    CHECK(std::abs(ta.samples.back().y - tb.samples.back().y) < 1e-6 * (1.0 + std::abs(tb.samples.back().y)));
}

TEST_CASE("distinct seeds give distinct branches") {
    AsymptoticDatum d;
    d.sigma = 0.3;
    d.l = 0.7;
    d.a = 0.2;
    const Trajectory t1 = integrate(d, 0.3, 1e-3, 0.5);
    d.a = 0.202;
    const Trajectory t2 = integrate(d, 0.3, 1e-3, 0.5);
    CHECK(std::abs(t1.samples.back().y - t2.samples.back().y) > 1e-3);
}

TEST_CASE("fitting the critical behaviour") {
    const FitResult f = fit_asymptotics(synthetic(0.3, 0.5, 0.1, 1e-6, 1e-3, 80), CriticalPoint::Zero);
    CHECK(std::abs(f.datum.l - 0.5) < 1e-4);
    CHECK(std::abs(f.datum.sigma - 0.5) < 1e-4);
    CHECK(std::abs(std::abs(f.datum.a) - 0.3) < 1e-4);
    CHECK_THROWS_AS(fit_asymptotics(synthetic(0.3, 0.0, 0.0, 1e-6, 1e-3, 80), CriticalPoint::Zero), PoorFit);
    CHECK_THROWS_AS(fit_asymptotics(synthetic(0.3, 0.5, 0.0, 1e-4, 1e-3, 80), CriticalPoint::Zero), PoorFit);
}

TEST_CASE("branch continuation from 0 to 1") {
    const ContinuationReport r = continue_branch(SolutionId::A3c, -1.0 / 3.0);
    CHECK(r.endpoint_error < 1e-6);
    CHECK(std::abs(r.fitted.datum.l - r.predicted.l) < 1e-3);
    CHECK(std::abs(std::abs(r.fitted.datum.a) / std::abs(r.predicted.a) - 1.0) < 1e-2);
}

TEST_CASE("trajectory CSV round trip") {
    const OracleState a = a3c_state(0.05);
    const Trajectory t = integrate_path(a.y, a.yx, {segment(0.05, 0.2)}, -1.0 / 3.0);
    std::stringstream ss;
    write_csv(ss, t, "test");
    const Trajectory back = read_csv(ss);
    REQUIRE(back.samples.size() == t.samples.size());
    for (std::size_t i = 0; i < t.samples.size(); ++i) {
        CHECK(back.samples[i].x == t.samples[i].x);
        CHECK(back.samples[i].y == t.samples[i].y);
        CHECK(back.samples[i].yx == t.samples[i].yx);
        CHECK(back.samples[i].tau == t.samples[i].tau);
    }
    std::stringstream bad("tau,x\n1,2\n");
    CHECK_THROWS_AS(read_csv(bad), SchemaMismatch);
}
