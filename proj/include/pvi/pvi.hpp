#pragma once

// Numerical PVI(mu): right-hand sides, the Hamiltonian system, adaptive
// integration along paths in the x-plane and asymptotic fitting.

#include <complex>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "pvi/connection.hpp"

namespace pvi {

using cd = std::complex<double>;

cd pvi_rhs(cd x, cd y, cd yx, double mu);

struct HamiltonianRate {
    cd q_dot, p_dot;
};

HamiltonianRate hamiltonian_rhs(cd x, cd q, cd p, double mu);

// p = (x(x-1)y' - y(y-1)) / (2(y-x)y(y-1)); SingularPoint when y is 0, 1 or x.
cd p_from_y(cd x, cd y, cd yx);
cd yx_from_qp(cd x, cd q, cd p);

// A path piece x(tau), tau in [0, 1]. `xm1` returns x - 1 computed without cancellation
// and `dist` the distance to the piece's target critical point when it approaches one.
struct PathPiece {
    std::function<cd(double)> x;
    std::function<cd(double)> xm1;
    std::function<cd(double)> dx;
    std::string kind;
};

PathPiece segment(cd a, cd b);
// Real approach x = c - sign * t with log t running from log t0 to log t1, c in {0, 1}.
PathPiece log_approach(CriticalPoint c, double t0, double t1);
// Semicircle from center - r*dir to center + r*dir on the left of dir.
PathPiece arc(cd center, double r, cd dir);

struct OdeSample {
    double tau = 0.0; // cumulative path parameter: piece index + local parameter
    cd x, y, yx;
    cd xm1;           // x - 1
    int chart = 0;    // 0: (q, p); 1: (w = 1/q, R)
    bool detour = false;
};

struct PoleEvent {
    cd x;
    std::string kind; // "y-pole" for chart switches, "p-pole" for detours
    double continuity = 0.0;
};

struct Trajectory {
    std::vector<OdeSample> samples;
    std::vector<PoleEvent> events;
    std::size_t accepted = 0, rejected = 0;
    double tol = 0.0;
};

struct IntegrateOptions {
    double tol = 1e-10;
    double pole_threshold = 1e8;
    double min_step = 1e-14;
    double detour_radius = 1e-2; // shrunk to fit between the pole and nearby path ends
    std::size_t max_steps = 5000000;
};

// Integrates from a state (x, y, y') at the start of the path.
Trajectory integrate_path(cd y0, cd yx0, const std::vector<PathPiece>& path, double mu,
                          const IntegrateOptions& opt = {});

// Seeds y = a x^l, y' = a l x^(l-1) at x_start from a datum at 0 and integrates along the real segment.
Trajectory integrate(const AsymptoticDatum& seed, double mu, double x_start, cd x_end,
                     const IntegrateOptions& opt = {});

struct FitResult {
    AsymptoticDatum datum;
    double exponent_stderr = 0.0;
    double rms_residual = 0.0;
    double kappa = 0.0;     // correction exponent of the selected model
    int correction_terms = 0;
    std::size_t points = 0;
};

// log|v| = log|a| + l log t + sum_j c_j t^(j kappa), v = y, 1 - y or y at 0, 1, inf.
FitResult fit_asymptotics(const Trajectory& traj, CriticalPoint point, double max_distance = 1e-2);

inline constexpr const char* kTrajectorySchema = "pvi.trajectory/1";

// Columns path_param, x, y, y_x (re, im), x - 1, chart, detour; `comment` goes in the header.
void write_csv(std::ostream& out, const Trajectory& traj, const std::string& comment = "");
Trajectory read_csv(std::istream& in);

} // namespace pvi
