#pragma once

// Continuation of a branch of a parametric solution from x = 0 to x = 1 along
// the real segment, checked against the parametric form and the connection formulae.

#include "pvi/pvi.hpp"
#include "pvi/solutions.hpp"

namespace pvi {

// Real parameter s with x(s) = x_target reached by Newton continuation in x from s_start.
double track_parameter(const ParametricSolution& sol, double s_start, double x_start, double x_target,
                       std::size_t steps = 400);

struct ContinuationReport {
    SolutionId id{};
    double s0 = 0.0;             // parameter of the branch over x = 0
    AsymptoticDatum at_zero;     // y ~ a0 x near 0 from the parametric form
    AsymptoticDatum predicted;   // behaviour at 1 from the connection formulae
    FitResult fitted;            // behaviour at 1 read off the trajectory
    double check_x = 0.0;
    double s_check = 0.0;
    cd y_numeric, y_oracle;
    double endpoint_error = 0.0; // |y_numeric - y_oracle| / max(1, |y_oracle|)
    Trajectory trajectory;
    double seconds = 0.0;
};

struct ContinuationOptions {
    double x_seed = 1e-3;
    double t_check = 1e-3; // distance to 1 of the oracle check
    double t_final = 1e-9; // closest approach used by the fit
    IntegrateOptions integrate{};
};

// The branch must be regular over 0 (y ~ a0 x, sigma0 = 0) with real s0.
ContinuationReport continue_branch(SolutionId id, double s0, const ContinuationOptions& opt = {});

} // namespace pvi
