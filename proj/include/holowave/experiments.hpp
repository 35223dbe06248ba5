#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "holowave/normalform.hpp"
#include "holowave/norms.hpp"
#include "holowave/timestepper.hpp"

namespace hw {

// Least-squares slope of log10(err) against log10(x).
double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& err);

// Random holomorphic state: W and Q band-limited with decoupled seeds.
State make_random_state(const Grid& g, std::uint64_t seed, double amplitude, int band);

// --- dispersion ---------------------------------------------------------------

struct DispersionRow {
    double gamma = 0.0;
    int mode = 0;
    cplx tau_exact[2];
    cplx tau_measured[2];
    double error = 0.0;
};

std::vector<DispersionRow> dispersion_sweep(double g, const std::vector<double>& gammas,
                                            const std::vector<int>& modes, int n = 128,
                                            double dt = 1e-3, double t_end = 5.0);

// --- conservation -------------------------------------------------------------

struct ConservationReport {
    std::vector<double> times;
    std::vector<double> energy;
    std::vector<double> momentum;
    double energy_drift = 0.0;    // max |E(t)-E(0)| / max(|E(0)|, tiny)
    double momentum_drift = 0.0;  // same for P, |P(0)| guarded by |E(0)|
};

ConservationReport conservation_run(const State& init, const Params& p, const StepConfig& cfg);

// --- normal form --------------------------------------------------------------

// ||(G,K)||_{H^0} of the normal-form residual at one amplitude.
double nf_residual_norm(const State& base, double eps, const Params& p, GammaCubeSign sign);

// Log-log slope of the residual over the given amplitude sweep.
double nf_slope(const Grid& g, std::uint64_t seed, int band, const std::vector<double>& eps,
                const Params& p, GammaCubeSign sign);

struct NormalFormReport {
    GammaCubeSign sign = kDefaultGammaCubeSign;
    double min_slope = 0.0;
    // keyed "gamma=<v>/seed=<s>"
    std::map<std::string, double> slopes;
};

NormalFormReport normalform_sweep(const Grid& g, const std::vector<double>& gammas,
                                  const std::vector<std::uint64_t>& seeds,
                                  const std::vector<double>& eps, double base_g,
                                  GammaCubeSign sign);
// Runs both sign conventions, returns the one with the larger minimum slope.
NormalFormReport normalform_select_sign(const Grid& g, const std::vector<double>& gammas,
                                        const std::vector<std::uint64_t>& seeds,
                                        const std::vector<double>& eps, double base_g);

// --- identities ---------------------------------------------------------------

struct IdentityReport {
    // worst relative residual of each exact identity over the sampled states
    std::map<std::string, double> exact_max;
    // amplitude slope of each quadratic-error identity
    std::map<std::string, double> slopes;
};

// slope_band must exceed 2^(offset+1) so low-high block pairs exist; with
// narrower bands the quadratic residuals are exactly zero and the slope fit
// would only see rounding noise.
IdentityReport identity_sweep(const Grid& g, const Params& p, int n_states, double amplitude,
                              int band, const std::vector<double>& slope_amps,
                              std::uint64_t seed0 = 1, int slope_band = 32);

// Names of the exact vs quadratic identity residuals, fixed order.
const std::vector<std::string>& exact_identity_names();
const std::vector<std::string>& quadratic_identity_names();

// --- linearization ------------------------------------------------------------

// Error between the finite-difference derivative of the nonlinear flow and
// the co-evolved linearized flow, for one epsilon.
double linearization_error(const State& base, const State& dir, double eps, const Params& p,
                           const StepConfig& cfg);

double linearization_slope(const State& base, const State& dir,
                           const std::vector<double>& eps, const Params& p,
                           const StepConfig& cfg);

// --- scaling symmetries -------------------------------------------------------

// Field A * f(mu * alpha) on the grid with period L/mu (same coefficients).
Field scale_field(const Field& f, double factor, double mu);

struct ScalingReport {
    double err_spacetime = 0.0;  // gamma -> lambda gamma, alpha -> lambda^2 alpha
    double err_space = 0.0;      // g -> g/lambda, alpha -> lambda alpha
};

ScalingReport scaling_check(const State& init, const Params& p, double lambda, double t_end,
                            double dt);

// --- norm equivalence ---------------------------------------------------------

struct NormEquivRow {
    double amplitude = 0.0;
    double ratio = 0.0;  // E_lin^{(2)} / E_0
    double uA = 0.0;
    bool in_band = false;      // ratio in [0.5, 2]
    bool near_one = false;     // |ratio - 1| <= 10 uA
};

std::vector<NormEquivRow> norm_equivalence_sweep(const Grid& g, const Params& p, int n_states,
                                                 int band, std::uint64_t seed0 = 1);

// --- convergence --------------------------------------------------------------

// Observed RK4 order on the nonlinear flow by Richardson comparison.
double rk4_order_estimate(const State& init, const Params& p, double t_end,
                          const std::vector<double>& dts);

}  // namespace hw
