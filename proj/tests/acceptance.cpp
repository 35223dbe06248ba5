// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Tolerances are pinned here and mirror the per-module test suites.

#include <cstdio>
#include <string>
#include <vector>

#include "holowave/conserved.hpp"
#include "holowave/experiments.hpp"
#include "holowave/initdata.hpp"
#include "holowave/lp.hpp"
#include "holowave/spectral.hpp"

using namespace hw;

namespace {

bool all_ok = true;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%d] %-22s %s  (%s)\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
    if (!ok) all_ok = false;
}

std::string fmt(const char* label, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s = %.3e", label, v);
    return buf;
}

State random_state(const Grid& g, std::uint64_t seed, double amp, int band) {
    return State{random_bandlimited(g, seed, amp, band),
                 random_bandlimited(g, seed + 1000, amp, band)};
}

// 1. dispersion: measured tau vs roots of tau^2 + gamma tau + g xi = 0
void criterion_dispersion() {
    const auto rows = dispersion_sweep(1.0, {0.0, 1.0, 2.0}, {-1, -2, -4, -8}, 128, 1e-3, 5.0);
    double worst = 0.0;
    for (const auto& r : rows) worst = std::max(worst, r.error);
    report(1, "dispersion", worst < 1e-6, fmt("max |dtau|", worst));
}

// 2. energy/momentum drift over T=1 at n=256, dt=1e-3, amplitude 1e-2
void criterion_conservation() {
    const Grid g(256);
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.observer_stride = 10;
    double worst = 0.0;
    for (double gamma : {0.0, 1.0}) {
        const Params p{1.0, gamma, 0.1};
        const auto rep = conservation_run(random_state(g, 1, 1e-2, 8), p, cfg);
        worst = std::max({worst, rep.energy_drift, rep.momentum_drift});
    }
    report(2, "conservation", worst < 1e-8, fmt("max drift", worst));
}

// 3. normal-form cubic cancellation across gamma and seeds; record the sign
void criterion_normalform() {
    const Grid g(256);
    const auto rep = normalform_select_sign(g, {0.0, 0.5, 2.0}, {1, 2, 3, 4, 5},
                                            {1e-1, 1e-2, 1e-3}, 1.0);
    const char* sign =
        rep.sign == GammaCubeSign::kPlainI ? "sign=plain_i" : "sign=doubled_i";
    report(3, "normal form", rep.min_slope >= 2.8,
           fmt("min slope", rep.min_slope) + ", " + sign);
}

// 4./5. exact identities and quadratic identity slopes
void criterion_identities() {
    const Grid g(256);
    const Params p{1.0, 1.0, 0.1};
    const auto rep =
        identity_sweep(g, p, 20, 1e-2, 8, {1e-2, 1e-3, 1e-4}, /*seed0=*/1, /*slope_band=*/32);
    double worst = 0.0;
    for (const auto& [name, v] : rep.exact_max) worst = std::max(worst, v);
    report(4, "exact identities", worst < 1e-8, fmt("max residual", worst));
    double min_slope = 1e300;
    for (const auto& [name, s] : rep.slopes) min_slope = std::min(min_slope, s);
    report(5, "quadratic identities", min_slope >= 1.8, fmt("min slope", min_slope));
}

// 6. linearized flow vs finite differences of the nonlinear flow
void criterion_linearization() {
    const Grid g(128);
    const Params p{1.0, 1.0, 0.1};
    StepConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 0.2;
    cfg.observer_stride = 0;
    const State base = random_state(g, 1, 1e-2, 8);
    double min_slope = 1e300;
    for (std::uint64_t dseed : {11, 12, 13}) {
        const State dir = random_state(g, dseed, 1.0, 8);  // unit-size direction
        min_slope =
            std::min(min_slope, linearization_slope(base, dir, {1e-2, 1e-3, 1e-4}, p, cfg));
    }
    report(6, "linearization", min_slope >= 0.9, fmt("min slope", min_slope));
}

// 7. both scaling symmetries commute with the flow at lambda = 2
void criterion_scaling() {
    const Grid g(128);
    const Params p{1.0, 0.5, 0.1};
    const auto rep = scaling_check(random_state(g, 1, 1e-2, 8), p, 2.0, 0.5, 1e-3);
    const double worst = std::max(rep.err_spacetime, rep.err_space);
    report(7, "scaling symmetries", worst < 1e-7, fmt("max error", worst));
}

// 8. E_lin^{(2)} / E_0 in [1/2, 2] and within 1 +- 10*uA on 20 backgrounds
void criterion_norm_equivalence() {
    const Grid g(256);
    const Params p{1.0, 0.5, 0.1};
    const auto rows = norm_equivalence_sweep(g, p, 20, 8, 1);
    bool ok = true;
    double worst = 0.0;
    for (const auto& r : rows) {
        ok = ok && r.in_band && r.near_one;
        worst = std::max(worst, std::abs(r.ratio - 1.0));
    }
    report(8, "norm equivalence", ok, fmt("max |ratio-1|", worst));
}

// 9. infrastructure: paraproducts, projections, Plancherel, rk4 order
void criterion_infrastructure() {
    const Grid g(256);
    bool ok = true;
    std::string detail;

    const Field f = random_bandlimited(g, 3, 1.0, 60);
    const Field h = random_bandlimited(g, 4, 1.0, 60);
    const auto tri = paraproducts(basis_for(g), f, h);
    const Field prod = mul_dealiased(f, h);
    const double para =
        (tri.low_high + tri.high_low + tri.balanced - prod).l2() / prod.l2();
    ok = ok && para < 1e-10;

    const Field r = Field::from_values(
        g, fft::backward(fft::forward(random_bandlimited(g, 5, 1.0, 100).values())));
    const double proj = (proj_P(r) + proj_Pbar(r) - r).linf();
    ok = ok && proj < 1e-13;

    const double plancherel = std::abs(r.l2() - r.spectral_l2()) / r.l2();
    ok = ok && plancherel < 1e-12;

    const Params p{1.0, 1.0, 0.1};
    const double order =
        rk4_order_estimate(random_state(Grid(128), 1, 1e-2, 8), p, 0.1, {4e-3, 2e-3, 1e-3});
    ok = ok && order >= 3.8;

    report(9, "infrastructure", ok,
           fmt("para", para) + ", " + fmt("P+Pbar-I", proj) + ", " +
               fmt("plancherel", plancherel) + ", " + fmt("rk4 order", order));
}

}  // namespace

int main() {
    criterion_dispersion();
    criterion_conservation();
    criterion_normalform();
    criterion_identities();
    criterion_linearization();
    criterion_scaling();
    criterion_norm_equivalence();
    criterion_infrastructure();
    std::printf("acceptance: %s\n", all_ok ? "ALL PASS" : "FAILURES");
    return all_ok ? 0 : 1;
}
