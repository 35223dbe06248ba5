#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "holowave/linearized.hpp"
#include "holowave/waterwave.hpp"

namespace hw {

using FieldVec = std::vector<Field>;
using RhsFn = std::function<FieldVec(const FieldVec&)>;
// Exact flow of the linear part over a time increment, for the
// integrating-factor scheme.
using PropagatorFn = std::function<FieldVec(const FieldVec&, double)>;
// Applied after every accepted step (default: re-enforce holomorphy).
using ProjectFn = std::function<FieldVec(FieldVec)>;

enum class Scheme { rk4, rk4_integrating_factor };

struct StepConfig {
    double dt = 1e-3;
    double t_end = 1.0;
    Scheme scheme = Scheme::rk4;
    int reproject_every = 1;
    int observer_stride = 1;  // 0 disables observations
    // When positive, enforce dt <= 0.5 / sqrt(g * xi_max) for this g.
    double stability_g = 0.0;

    void validate() const;
};

struct Observer {
    std::string name;
    std::function<double(double, const FieldVec&)> eval;
};

struct TrajectorySummary {
    FieldVec final_state;
    double t_final = 0.0;
    int steps = 0;
    std::vector<double> times;
    std::map<std::string, std::vector<double>> series;
};

// Default post-step projection: P-project and zero the mean of every field.
FieldVec project_holomorphic(FieldVec y);

void check_stability(const Grid& grid, double dt, double g);

// One classical RK4 step (no projection).
FieldVec rk4_step(const FieldVec& y, const RhsFn& rhs, double dt);

// Fixed-step integration.  dt is adjusted to divide t_end exactly.  For the
// integrating-factor scheme, `rhs` is the nonlinear remainder (may be null
// for a purely linear flow) and `propagator` the exact linear flow.
TrajectorySummary integrate(const FieldVec& initial, const RhsFn& rhs, const StepConfig& cfg,
                            const std::vector<Observer>& observers = {},
                            const ProjectFn& project = project_holomorphic,
                            const PropagatorFn& propagator = nullptr);

// --- flows -----------------------------------------------------------------

// Zero-background linear system: dw = -q_alpha, dq = i g w - i gamma q.
FieldVec rhs_zero_linear(const FieldVec& y, const Params& p);
// Its exact flow, mode by mode (2x2 matrix exponential).
FieldVec zero_linear_propagate(const FieldVec& y, const Params& p, double t);

// Nonlinear flow in (W, Q).
RhsFn make_rhs_nonlinear(const Params& p);
// Combined flow [W, Q, w, r]: background and linearized state co-evolved.
RhsFn make_rhs_combined(const Params& p);

// --- dispersion test ---------------------------------------------------------

struct DispersionResult {
    cplx tau_exact[2];
    cplx tau_measured[2];
    double max_error() const;
};

// Roots of tau^2 + gamma tau + g xi = 0 (solutions e^{i(xi alpha + tau t)}).
std::pair<cplx, cplx> dispersion_roots(const Params& p, double xi);

// Evolve the two eigen-initializations of integer mode m (<= 0) on an
// n-point grid and extract tau by least-squares phase/amplitude fit.
DispersionResult dispersion_test(const Params& p, int m, int n = 128, double dt = 1e-3,
                                 double t_end = 5.0);

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hw
