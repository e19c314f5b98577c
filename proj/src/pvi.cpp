#include "pvi/pvi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <iomanip>
#include <istream>
#include <limits>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

#include <Eigen/Dense>
#include <boost/numeric/odeint.hpp>

#include "pvi/errors.hpp"
#include "pvi/solutions.hpp"

namespace pvi {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEnterPoleChart = 1e3;
constexpr double kLeavePoleChart = 1e2;

using State = std::array<cd, 2>;

cd q_rate(cd x, cd xm1, cd q, cd p) {
    return ((q - 1.0) * q + 2.0 * p * (q - 1.0) * q * (q - x)) / (x * xm1);
}

cd p_rate(cd x, cd xm1, cd q, cd p, double mu) {
    return (-p * p * (x - 2.0 * q - 2.0 * x * q + 3.0 * q * q) - p * (2.0 * q - 1.0) - (1.0 - mu) * mu) / (x * xm1);
}

// Chart near a pole of y: w = 1/q, p q = P0 + w R with P0 in {-mu, mu - 1}.
void pole_chart_rates(cd x, cd xm1, cd w, cd R, double mu, bool minus_mu, cd& w_dot, cd& R_dot) {
    const cd d = x * xm1;
    const cd R2 = R * R;
    if (minus_mu) {
        w_dot = -(w - 1.0) * (2.0 * R * w * w * x - 2.0 * R * w - 2.0 * mu * w * x + 2.0 * mu - 1.0) / d;
        R_dot = (3.0 * R2 * w * w * x - 2.0 * R2 * w * x - 2.0 * R2 * w + R2 - 4.0 * R * mu * w * x +
                 2.0 * R * mu * x + 2.0 * R * mu - R + mu * mu * x) / d;
    } else {
        w_dot = -(w - 1.0) * (2.0 * R * w * w * x - 2.0 * R * w + 2.0 * mu * w * x - 2.0 * mu - 2.0 * w * x + 1.0) / d;
        R_dot = (3.0 * R2 * w * w * x - 2.0 * R2 * w * x - 2.0 * R2 * w + R2 + 4.0 * R * mu * w * x -
                 2.0 * R * mu * x - 2.0 * R * mu - 4.0 * R * w * x + 2.0 * R * x + R + mu * mu * x -
                 2.0 * mu * x + x) / d;
    }
}

struct ChartState {
    int chart = 0;        // 0: (q, p); 1: (w, R)
    bool minus_mu = true; // P0 = -mu when true, mu - 1 otherwise
    State z;
};

double p0_of(bool minus_mu, double mu) { return minus_mu ? -mu : mu - 1.0; }

void to_qp(const ChartState& s, double mu, cd& q, cd& p) {
    if (s.chart == 0) {
        q = s.z[0];
        p = s.z[1];
        return;
    }
    const cd w = s.z[0];
    q = 1.0 / w;
    p = (p0_of(s.minus_mu, mu) + w * s.z[1]) * w;
}


// Sub-piece of `p` on [a, b].
PathPiece restrict(const PathPiece& p, double a, double b) {
    const auto parent = std::make_shared<const PathPiece>(p);
    PathPiece r;
    r.x = [parent, a, b](double t) { return parent->x(a + (b - a) * t); };
    r.xm1 = [parent, a, b](double t) { return parent->xm1(a + (b - a) * t); };
    r.dx = [parent, a, b](double t) { return (b - a) * parent->dx(a + (b - a) * t); };
    r.kind = p.kind;
    return r;
}

// Parameter on [lo, hi] where |x - center| crosses r; distance is assumed monotone there.
double crossing(const PathPiece& p, cd center, double r, double lo, double hi) {
    const bool rising = std::abs(p.x(hi) - center) > std::abs(p.x(lo) - center);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const bool outside = std::abs(p.x(mid) - center) > r;
        if (outside == rising) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

cd pvi_rhs(cd x, cd y, cd yx, double mu) { return pvi_rhs_generic<cd>(x, y, yx, cd(mu)); }

HamiltonianRate hamiltonian_rhs(cd x, cd q, cd p, double mu) {
    if (x == 0.0 || x == 1.0) throw SingularPoint("x at a fixed singularity");
    return {q_rate(x, x - 1.0, q, p), p_rate(x, x - 1.0, q, p, mu)};
}

cd p_from_y(cd x, cd y, cd yx) {
    const cd d = 2.0 * (y - x) * y * (y - 1.0);
    if (d == 0.0) throw SingularPoint("y is 0, 1 or x");
    return (x * (x - 1.0) * yx - y * (y - 1.0)) / d;
}

cd yx_from_qp(cd x, cd q, cd p) {
    if (x == 0.0 || x == 1.0) throw SingularPoint("x at a fixed singularity");
    return q_rate(x, x - 1.0, q, p);
}

PathPiece segment(cd a, cd b) {
    PathPiece p;
    p.x = [a, b](double t) { return a + (b - a) * t; };
    p.xm1 = [a, b](double t) { return (a - 1.0) + (b - a) * t; };
    p.dx = [a, b](double) { return b - a; };
    p.kind = "segment";
    return p;
}

PathPiece log_approach(CriticalPoint c, double t0, double t1) {
    if (!(t0 > 0.0 && t1 > 0.0)) throw InvalidArgument("log_approach needs positive distances");
    if (c == CriticalPoint::Infinity) throw InvalidArgument("log_approach supports 0 and 1");
    const double u0 = std::log(t0), u1 = std::log(t1);
    PathPiece p;
    if (c == CriticalPoint::Zero) {
        p.x = [u0, u1](double t) { return cd(std::exp(u0 + (u1 - u0) * t)); };
        p.xm1 = [u0, u1](double t) { return cd(std::exp(u0 + (u1 - u0) * t) - 1.0); };
        p.dx = [u0, u1](double t) { return cd((u1 - u0) * std::exp(u0 + (u1 - u0) * t)); };
    } else {
        p.x = [u0, u1](double t) { return cd(1.0 - std::exp(u0 + (u1 - u0) * t)); };
        p.xm1 = [u0, u1](double t) { return cd(-std::exp(u0 + (u1 - u0) * t)); };
        p.dx = [u0, u1](double t) { return cd(-(u1 - u0) * std::exp(u0 + (u1 - u0) * t)); };
    }
    p.kind = "log";
    return p;
}

PathPiece arc(cd center, double r, cd dir) {
    dir /= std::abs(dir);
    PathPiece p;
    p.x = [=](double t) { return center - r * dir * std::exp(cd(0.0, -kPi * t)); };
    p.xm1 = [=](double t) { return (center - 1.0) - r * dir * std::exp(cd(0.0, -kPi * t)); };
    p.dx = [=](double t) { return cd(0.0, kPi) * r * dir * std::exp(cd(0.0, -kPi * t)); };
    p.kind = "arc";
    return p;
}

Trajectory integrate_path(cd y0, cd yx0, const std::vector<PathPiece>& path, double mu,
                          const IntegrateOptions& opt) {
    namespace ode = boost::numeric::odeint;
    if (path.empty()) throw InvalidArgument("empty path");
    if (!(opt.tol > 0.0 && opt.pole_threshold > 0.0 && opt.min_step > 0.0)) throw InvalidArgument("tolerances must be positive");
    Trajectory traj;
    traj.tol = opt.tol;

    std::deque<PathPiece> pieces(path.begin(), path.end());
    ChartState cs;
    {
        const cd x = pieces.front().x(0.0);
        cs.z = {y0, p_from_y(x, y0, yx0)};
    }

    auto sample = [&](double tau, const PathPiece& piece, double t) {
        OdeSample s;
        s.tau = tau;
        s.x = piece.x(t);
        s.xm1 = piece.xm1(t);
        s.chart = cs.chart;
        s.detour = piece.kind == "arc";
        cd q, p;
        to_qp(cs, mu, q, p);
        s.y = q;
        s.yx = q_rate(s.x, s.xm1, q, p);
        return s;
    };

    double piece_index = 0.0;
    traj.samples.push_back(sample(0.0, pieces.front(), 0.0));
    while (!pieces.empty()) {
        const PathPiece piece = pieces.front();
        pieces.pop_front();
        const ChartState start = cs;
        const std::size_t start_samples = traj.samples.size();

        auto system = [&](const State& z, State& dz, double t) {
            const cd x = piece.x(t), xm1 = piece.xm1(t), dx = piece.dx(t);
            if (cs.chart == 0) {
                dz[0] = dx * q_rate(x, xm1, z[0], z[1]);
                dz[1] = dx * p_rate(x, xm1, z[0], z[1], mu);
            } else {
                cd wd, Rd;
                pole_chart_rates(x, xm1, z[0], z[1], mu, cs.minus_mu, wd, Rd);
                dz[0] = dx * wd;
                dz[1] = dx * Rd;
            }
        };
        auto stepper = ode::make_controlled(opt.tol, opt.tol, ode::runge_kutta_dopri5<State>());

        double t = 0.0, dt = 1e-4;
        std::optional<double> pole_tau;
        while (t < 1.0) {
            if (traj.accepted + traj.rejected > opt.max_steps) throw StepCollapse("step budget exhausted");
            dt = std::min(dt, 1.0 - t);
            State z = cs.z;
            const double t_before = t;
            if (stepper.try_step(system, z, t, dt) == ode::fail) {
                ++traj.rejected;
                if (dt < opt.min_step) throw StepCollapse("step below minimum near x = " + std::to_string(piece.x(t).real()));
                continue;
            }
            ++traj.accepted;
            if (t_before + dt >= 1.0 || t > 1.0 - 1e-15) t = 1.0;
            for (const cd& v : z)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw StepCollapse("non-finite state");
            cs.z = z;

            const cd x = piece.x(t), xm1 = piece.xm1(t);
            if (cs.chart == 0) {
                if (std::abs(cs.z[1] * x * xm1) > opt.pole_threshold) {
                    pole_tau = t;
                    break;
                }
                if (std::abs(cs.z[0]) > kEnterPoleChart) {
                    const cd q = cs.z[0], p = cs.z[1];
                    const cd P = p * q;
                    cs.minus_mu = std::abs(P - (-mu)) <= std::abs(P - (mu - 1.0));
                    const cd w = 1.0 / q;
                    cs.chart = 1;
                    cs.z = {w, (P - p0_of(cs.minus_mu, mu)) / w};
                    stepper.reset(); // the cached derivative belongs to the old chart
                    cd q2, p2;
                    to_qp(cs, mu, q2, p2);
                    traj.events.push_back({x, "y-pole", std::abs(q2 - q) / std::abs(q)});
                }
            } else if (std::abs(cs.z[0]) > 1.0 / kLeavePoleChart) {
                cd q, p;
                to_qp(cs, mu, q, p);
                const cd w = cs.z[0];
                cs.chart = 0;
                cs.z = {q, p};
                stepper.reset();
                traj.events.push_back({x, "y-exit", std::abs(1.0 / w - q) / std::abs(q)});
            }
            traj.samples.push_back(sample(piece_index + t, piece, t));
        }

        if (pole_tau) {
            // Retry the piece with a semicircular detour around the blow-up of p.
            const cd center = piece.x(*pole_tau);
            const double room = std::min({std::abs(piece.x(0.0) - center), std::abs(piece.x(1.0) - center),
                                          std::abs(center), std::abs(piece.xm1(*pole_tau))});
            const double r = std::min(opt.detour_radius, 0.4 * room);
            if (r < 1e-12)
                throw PathThroughSingularity("blow-up of p at a path end near x = " + std::to_string(center.real()));
            const double ta = crossing(piece, center, r, 0.0, *pole_tau);
            double tb = 1.0;
            for (double s = *pole_tau; s < 1.0; s = std::min(1.0, s + 1e-3))
                if (std::abs(piece.x(s) - center) > r) {
                    tb = crossing(piece, center, r, *pole_tau, s);
                    break;
                }
            const cd xa = piece.x(ta), xb = piece.x(tb);
            traj.events.push_back({center, "p-pole", 0.0});
            cs = start;
            traj.samples.resize(start_samples);
            pieces.push_front(restrict(piece, tb, 1.0));
            pieces.push_front(arc(0.5 * (xa + xb), 0.5 * std::abs(xb - xa), xb - xa));
            pieces.push_front(restrict(piece, 0.0, ta));
            continue;
        }
        piece_index += 1.0;
    }
    return traj;
}

Trajectory integrate(const AsymptoticDatum& seed, double mu, double x_start, cd x_end, const IntegrateOptions& opt) {
    if (seed.point != CriticalPoint::Zero) throw InvalidArgument("seeding supports the point 0");
    if (!(x_start > 0.0 && x_start < 1.0)) throw InvalidArgument("x_start must lie in (0, 1)");
    if (seed.a == 0.0) throw InvalidArgument("a0 must be nonzero");
    if (!(seed.sigma >= 0.0 && seed.sigma < 1.0)) throw InvalidArgument("sigma0 must lie in [0, 1)");
    const cd y0 = seed.a * std::pow(x_start, (1.0 - seed.sigma));
    const cd yx0 = seed.a * (1.0 - seed.sigma) * std::pow(x_start, (1.0 - seed.sigma) - 1.0);
    return integrate_path(y0, yx0, {segment(x_start, x_end)}, mu, opt);
}

FitResult fit_asymptotics(const Trajectory& traj, CriticalPoint point, double max_distance) {
    std::vector<double> ts, vs;
    cd phase_ref;
    for (const auto& s : traj.samples) {
        double t;
        cd v;
        switch (point) {
        case CriticalPoint::Zero: t = std::abs(s.x); v = s.y; break;
        case CriticalPoint::One: t = std::abs(s.xm1); v = 1.0 - s.y; break;
        default: t = 1.0 / std::abs(s.x); v = s.y; break;
        }
        if (s.detour || t > max_distance || t == 0.0 || v == 0.0) continue;
        ts.push_back(t);
        vs.push_back(std::log(std::abs(v)));
        phase_ref = v / std::abs(v);
    }
    const std::size_t n = ts.size();
    if (n < 12) throw PoorFit("trajectory does not approach the point within the fitting window");
    const double t_lo = *std::min_element(ts.begin(), ts.end());
    if (t_lo > max_distance * 1e-3) throw PoorFit("approach spans less than three decades");

    FitResult best;
    best.rms_residual = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= 12; ++m) {
        const double kappa = 1.0 / m;
        for (int J = 0; J <= 8 && static_cast<std::size_t>(J + 2) * 4 <= n; ++J) {
            Eigen::MatrixXd A(n, J + 2);
            Eigen::VectorXd b(n);
            for (std::size_t i = 0; i < n; ++i) {
                A(i, 0) = 1.0;
                A(i, 1) = std::log(ts[i]);
                const double base = std::pow(ts[i] / max_distance, kappa);
                double pw = 1.0;
                for (int j = 0; j < J; ++j) A(i, j + 2) = (pw *= base);
                b(i) = vs[i];
            }
            const auto qr = A.colPivHouseholderQr();
            if (qr.rank() < J + 2) continue;
            const Eigen::VectorXd c = qr.solve(b);
            const double rss = (A * c - b).squaredNorm();
            const double rms = std::sqrt(rss / n);
            // Penalize extra parameters so that exact models are not overfitted.
            const double score = rms * (1.0 + 0.05 * J);
            const double best_score = best.rms_residual * (1.0 + 0.05 * best.correction_terms);
            if (score < best_score * (1.0 - 1e-9)) {
                const double dof = std::max<double>(1.0, static_cast<double>(n) - (J + 2));
                const Eigen::MatrixXd cov = (A.transpose() * A).inverse() * (rss / dof);
                best.datum.point = point;
                best.datum.l = c(1);
                best.datum.sigma = 1.0 - c(1);
                // a is taken at the reference scale t = 1 after removing corrections at t -> 0.
                best.datum.a = std::exp(c(0)) * phase_ref;
                best.exponent_stderr = std::sqrt(std::max(0.0, cov(1, 1)));
                best.rms_residual = rms;
                best.kappa = kappa;
                best.correction_terms = J;
                best.points = n;
            }
        }
    }
    if (!std::isfinite(best.rms_residual) || best.rms_residual > 1e-3)
        throw PoorFit("no model reaches a log-residual below 1e-3");
    if (!(best.datum.l > 1e-3))
        throw PoorFit("no algebraic decay towards the point");
    return best;
}

void write_csv(std::ostream& out, const Trajectory& traj, const std::string& comment) {
    out << "# " << kTrajectorySchema << '\n';
    if (!comment.empty()) out << "# " << comment << '\n';
    out << "path_param,x_re,x_im,y_re,y_im,yx_re,yx_im,xm1_re,xm1_im,chart,detour\n";
    out << std::setprecision(17);
    for (const auto& s : traj.samples)
        out << s.tau << ',' << s.x.real() << ',' << s.x.imag() << ',' << s.y.real() << ',' << s.y.imag() << ','
            << s.yx.real() << ',' << s.yx.imag() << ',' << s.xm1.real() << ',' << s.xm1.imag() << ',' << s.chart
            << ',' << s.detour << '\n';
}

Trajectory read_csv(std::istream& in) {
    Trajectory traj;
    std::string line;
    if (!std::getline(in, line) || line != std::string("# ") + kTrajectorySchema)
        throw SchemaMismatch("expected " + std::string(kTrajectorySchema));
    while (std::getline(in, line) && line.rfind("#", 0) == 0) {
    }
    if (line.rfind("path_param,", 0) != 0) throw SchemaMismatch("missing trajectory column header");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::array<double, 9> v{};
        char comma;
        OdeSample s;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!(ss >> v[i] >> comma) || comma != ',') throw SchemaMismatch("bad trajectory row");
        int detour = 0;
        if (!(ss >> s.chart >> comma >> detour) || comma != ',') throw SchemaMismatch("bad trajectory row");
        s.detour = detour != 0;
        s.tau = v[0];
        s.x = {v[1], v[2]};
        s.y = {v[3], v[4]};
        s.yx = {v[5], v[6]};
        s.xm1 = {v[7], v[8]};
        traj.samples.push_back(s);
    }
    return traj;
}

} // namespace pvi
