#include "holowave/timestepper.hpp"

#include <cmath>
#include <stdexcept>

#include "holowave/initdata.hpp"
#include "holowave/spectral.hpp"

namespace hw {

namespace {

FieldVec fv_add(const FieldVec& a, const FieldVec& b) {
    FieldVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

FieldVec fv_scale(double s, const FieldVec& a) {
    FieldVec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

void fv_check_finite(const FieldVec& y) {
    for (const Field& f : y)
        if (!f.finite()) throw NaNDetected("integrate: non-finite field value");
}

}  // namespace

void StepConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("StepConfig: dt must be positive");
    if (t_end < 0.0) throw std::invalid_argument("StepConfig: t_end must be nonnegative");
    if (reproject_every < 1) throw std::invalid_argument("StepConfig: reproject_every >= 1");
    if (observer_stride < 0) throw std::invalid_argument("StepConfig: observer_stride >= 0");
}

FieldVec project_holomorphic(FieldVec y) {
    for (Field& f : y) f = holomorphic_part(f);
    return y;
}

void check_stability(const Grid& grid, double dt, double g) {
    const double bound = 0.5 / std::sqrt(g * grid.max_wavenumber());
    if (dt > bound)
        throw StabilityViolation("dt exceeds the stability bound 0.5/sqrt(g*xi_max)");
}

FieldVec rk4_step(const FieldVec& y, const RhsFn& rhs, double dt) {
    const FieldVec k1 = rhs(y);
    const FieldVec k2 = rhs(fv_add(y, fv_scale(0.5 * dt, k1)));
    const FieldVec k3 = rhs(fv_add(y, fv_scale(0.5 * dt, k2)));
    const FieldVec k4 = rhs(fv_add(y, fv_scale(dt, k3)));
    FieldVec out = y;
    for (size_t i = 0; i < y.size(); ++i)
        out[i] = y[i] + (dt / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

namespace {

// One step of the classical integrating-factor RK4: E is the exact linear
// flow over dt/2 and N the nonlinear remainder (may be empty).
FieldVec ifrk4_step(const FieldVec& y, const RhsFn& N, const PropagatorFn& prop, double dt) {
    auto E = [&](const FieldVec& v) { return prop(v, 0.5 * dt); };
    if (!N) return E(E(y));
    const FieldVec a = fv_scale(dt, N(y));
    const FieldVec b = fv_scale(dt, N(E(fv_add(y, fv_scale(0.5, a)))));
    const FieldVec c = fv_scale(dt, N(fv_add(E(y), fv_scale(0.5, b))));
    const FieldVec Ey = E(y);
    const FieldVec d = fv_scale(dt, N(fv_add(E(Ey), E(c))));
    FieldVec out = E(Ey);
    const FieldVec Ea = E(E(a));
    const FieldVec Ebc = E(fv_add(b, c));
    for (size_t i = 0; i < y.size(); ++i)
        out[i] = out[i] + (1.0 / 6.0) * (Ea[i] + 2.0 * Ebc[i] + d[i]);
    return out;
}

}  // namespace

TrajectorySummary integrate(const FieldVec& initial, const RhsFn& rhs, const StepConfig& cfg,
                            const std::vector<Observer>& observers, const ProjectFn& project,
                            const PropagatorFn& propagator) {
    cfg.validate();
    if (initial.empty()) throw std::invalid_argument("integrate: empty state");
    if (cfg.scheme == Scheme::rk4_integrating_factor && !propagator)
        throw std::invalid_argument("integrate: integrating factor needs a propagator");
    if (cfg.stability_g > 0.0) check_stability(initial.front().grid(), cfg.dt, cfg.stability_g);

    TrajectorySummary out;
    const int nsteps = cfg.t_end > 0.0 ? std::max(1L, std::lround(cfg.t_end / cfg.dt)) : 0;
    const double dt = nsteps > 0 ? cfg.t_end / nsteps : cfg.dt;

    auto observe = [&](double t, const FieldVec& y) {
        out.times.push_back(t);
        for (const Observer& ob : observers) out.series[ob.name].push_back(ob.eval(t, y));
    };

    FieldVec y = initial;
    if (cfg.observer_stride > 0) observe(0.0, y);
    for (int k = 0; k < nsteps; ++k) {
        y = cfg.scheme == Scheme::rk4 ? rk4_step(y, rhs, dt)
                                      : ifrk4_step(y, rhs, propagator, dt);
        if (project && (k + 1) % cfg.reproject_every == 0) y = project(std::move(y));
        fv_check_finite(y);
        const double t = (k + 1) * dt;
        if (cfg.observer_stride > 0 && ((k + 1) % cfg.observer_stride == 0 || k + 1 == nsteps))
            observe(t, y);
    }
    out.final_state = std::move(y);
    out.t_final = nsteps * dt;
    out.steps = nsteps;
    return out;
}

FieldVec rhs_zero_linear(const FieldVec& y, const Params& p) {
    return {-deriv(y[1]), (iu * p.g) * y[0] - (iu * p.gamma) * y[1]};
}

FieldVec zero_linear_propagate(const FieldVec& y, const Params& p, double t) {
    const Grid& g = y[0].grid();
    require_same_grid(y[0], y[1], "zero_linear_propagate");
    const int n = g.size();
    std::vector<cplx> cw(n), cq(n);
    for (int k = 0; k < n; ++k) {
        const double xi = g.wavenumber(k);
        // A = [[0, -i xi], [i g, -i gamma]], eigenvalues i*tau with
        // tau^2 + gamma tau + g xi = 0.
        const cplx a01{0.0, -xi};
        const cplx a10{0.0, p.g};
        const cplx a11{0.0, -p.gamma};
        const cplx disc = std::sqrt(cplx(p.gamma * p.gamma - 4.0 * p.g * xi, 0.0));
        const cplx l1 = iu * 0.5 * (-p.gamma + disc);
        const cplx l2 = iu * 0.5 * (-p.gamma - disc);
        cplx e00, e01, e10, e11;
        if (std::abs(l1 - l2) > 1e-12 * (1.0 + std::abs(l1) + std::abs(l2))) {
            // exp(At) = (e^{l1 t}(A - l2 I) - e^{l2 t}(A - l1 I)) / (l1 - l2)
            const cplx f1 = std::exp(l1 * t) / (l1 - l2);
            const cplx f2 = std::exp(l2 * t) / (l1 - l2);
            e00 = f1 * (0.0 - l2) - f2 * (0.0 - l1);
            e01 = (f1 - f2) * a01;
            e10 = (f1 - f2) * a10;
            e11 = f1 * (a11 - l2) - f2 * (a11 - l1);
        } else {
            // degenerate eigenvalue: exp(At) = e^{lt}(I + (A - l I) t)
            const cplx el = std::exp(l1 * t);
            e00 = el * (1.0 + (0.0 - l1) * t);
            e01 = el * a01 * t;
            e10 = el * a10 * t;
            e11 = el * (1.0 + (a11 - l1) * t);
        }
        const cplx w0 = y[0].spectrum()[k];
        const cplx q0 = y[1].spectrum()[k];
        cw[k] = e00 * w0 + e01 * q0;
        cq[k] = e10 * w0 + e11 * q0;
    }
    return {Field::from_spectrum(g, std::move(cw)), Field::from_spectrum(g, std::move(cq))};
}

RhsFn make_rhs_nonlinear(const Params& p) {
    return [p](const FieldVec& y) -> FieldVec {
        auto [dW, dQ] = rhs_wq(State{y[0], y[1]}, p);
        return {std::move(dW), std::move(dQ)};
    };
}

RhsFn make_rhs_combined(const Params& p) {
    return [p](const FieldVec& y) -> FieldVec {
        const State s{y[0], y[1]};
        const LinState l{y[2], y[3]};
        const DiffState d = derive(s, p);
        const AuxBundle aux = compute_aux(d, s, p, /*with_paraproducts=*/false);
        auto [dW, dQ] = rhs_wq(s, p);
        auto [dw, dr] = rhs_linearized(l, d, s, aux, p);
        return {std::move(dW), std::move(dQ), std::move(dw), std::move(dr)};
    };
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

std::pair<cplx, cplx> dispersion_roots(const Params& p, double xi) {
    const cplx disc = std::sqrt(cplx(p.gamma * p.gamma - 4.0 * p.g * xi, 0.0));
    return {0.5 * (-p.gamma + disc), 0.5 * (-p.gamma - disc)};
}

double DispersionResult::max_error() const {
    return std::max(std::abs(tau_measured[0] - tau_exact[0]),
                    std::abs(tau_measured[1] - tau_exact[1]));
}

namespace {

// Fit tau from samples of a single spectral coefficient assumed to evolve as
// c(t) = c0 e^{i tau t}: Re tau from the unwrapped phase, Im tau from log|c|.
cplx fit_exponent(const std::vector<double>& t, const std::vector<cplx>& c) {
    std::vector<double> phase(c.size()), logabs(c.size());
    double prev = std::arg(c[0]);
    double acc = prev;
    phase[0] = acc;
    logabs[0] = std::log(std::abs(c[0]));
    for (size_t i = 1; i < c.size(); ++i) {
        const double raw = std::arg(c[i]);
        double d = raw - prev;
        while (d > M_PI) d -= 2.0 * M_PI;
        while (d < -M_PI) d += 2.0 * M_PI;
        acc += d;
        prev = raw;
        phase[i] = acc;
        logabs[i] = std::log(std::abs(c[i]));
    }
    return {ls_slope(t, phase), -ls_slope(t, logabs)};
}

}  // namespace

DispersionResult dispersion_test(const Params& p, int m, int n, double dt, double t_end) {
    if (m > 0) throw std::invalid_argument("dispersion_test: mode must be <= 0");
    const Grid grid(n);
    const double xi = static_cast<double>(m);
    const auto [tau1, tau2] = dispersion_roots(p, xi);

    DispersionResult res;
    res.tau_exact[0] = tau1;
    res.tau_exact[1] = tau2;

    const RhsFn rhs = [p](const FieldVec& y) { return rhs_zero_linear(y, p); };
    StepConfig cfg;
    cfg.dt = dt;
    cfg.t_end = t_end;
    cfg.observer_stride = 0;
    check_stability(grid, dt, p.g);

    for (int root = 0; root < 2; ++root) {
        const cplx tau = root == 0 ? tau1 : tau2;
        std::vector<cplx> cw(n), cq(n);
        int fit_component;
        if (m < 0) {
            // eigenvector of mode m: q = -(tau/xi) w
            cw[grid.bin(m)] = 1.0;
            cq[grid.bin(m)] = -tau / xi;
            fit_component = 0;
        } else {
            // xi = 0: the w component is constant for root 0 (tau = 0); the
            // q component decouples for root 1 (tau = -gamma).
            if (root == 0)
                cw[0] = 1.0;
            else
                cq[0] = 1.0;
            fit_component = root == 0 ? 0 : 1;
        }
        FieldVec y{Field::from_spectrum(grid, std::move(cw)),
                   Field::from_spectrum(grid, std::move(cq))};

        const int nsteps = std::max(1L, std::lround(t_end / dt));
        const double h = t_end / nsteps;
        std::vector<double> ts;
        std::vector<cplx> cs;
        ts.reserve(nsteps + 1);
        cs.reserve(nsteps + 1);
        ts.push_back(0.0);
        cs.push_back(y[fit_component].coeff(m));
        for (int k = 0; k < nsteps; ++k) {
            y = rk4_step(y, rhs, h);
            ts.push_back((k + 1) * h);
            cs.push_back(y[fit_component].coeff(m));
        }
        res.tau_measured[root] = fit_exponent(ts, cs);
    }
    return res;
}

}  // namespace hw
