#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "holowave/conserved.hpp"
#include "holowave/experiments.hpp"
#include "holowave/initdata.hpp"
#include "holowave/spectral.hpp"
#include "holowave/waterwave.hpp"

using namespace hw;
using namespace hwtest;

namespace {

const Grid g256(256);

State small_state(std::uint64_t seed, double amp = 1e-2, int band = 8) {
    return State{random_bandlimited(g256, seed, amp, band),
                 random_bandlimited(g256, seed + 1000, amp, band)};
}

double rel(const Field& got, const Field& want) {
    const double scale = std::max(got.l2(), want.l2());
    return scale > 0.0 ? (got - want).l2() / scale : 0.0;
}

}  // namespace

TEST_CASE("params and interface validation") {
    const Params bad_g{-1.0, 0.0, 0.1};
    CHECK_THROWS_AS(bad_g.validate(), std::invalid_argument);
    const Params bad_gamma{1.0, -1.0, 0.1};
    CHECK_THROWS_AS(bad_gamma.validate(), std::invalid_argument);

    // 1 + W_alpha reaches zero for W = e^{-i alpha}: interface degenerate
    const Params p{1.0, 0.0, 0.1};
    const State bad{single_mode(g256, -1, cplx{1.0, 0.0}), Field::zero(g256)};
    CHECK_THROWS_AS(derive(bad, p), InterfaceSingularity);
    CHECK_THROWS_AS(rhs_wq(bad, p), InterfaceSingularity);
}

TEST_CASE("holomorphic_part keeps the mean, enforce_holomorphic drops it") {
    const Field f = random_field(g256, 3);
    const Field h = holomorphic_part(f);
    CHECK(h.mean() == f.mean());
    for (int m = 0; m < g256.size(); ++m) {
        if (g256.mode(m) > 0)
            CHECK(std::abs(h.spectrum()[m]) == 0.0);
        else
            CHECK(h.spectrum()[m] == f.spectrum()[m]);
    }
}

TEST_CASE("derive") {
    const Params p{1.0, 1.0, 0.1};
    const State zero{Field::zero(g256), Field::zero(g256)};
    const DiffState dz = derive(zero, p);
    CHECK(dz.Wa.l2() == 0.0);
    CHECK(dz.R.l2() == 0.0);

    // W = eps e^{-i a}, Q = 0: Wa = -i eps e^{-i a}, R = 0
    const double eps = 1e-2;
    const State s1{single_mode(g256, -1, cplx{eps, 0.0}), Field::zero(g256)};
    const DiffState d1 = derive(s1, p);
    CHECK(abs_err(d1.Wa, single_mode(g256, -1, -iu * eps)) < 1e-15);
    CHECK(d1.R.l2() == 0.0);

    // random small state vs pointwise oracle (analytic quotient: the
    // dealiasing truncation is below the amplitude^10 level here)
    const State s = small_state(7);
    const DiffState d = derive(s, p);
    std::vector<cplx> rv(g256.size());
    const Field Qa = deriv(s.Q);
    const Field Wa = deriv(s.W);
    for (int i = 0; i < g256.size(); ++i)
        rv[i] = Qa.value(i) / (1.0 + Wa.value(i));
    const Field R_oracle = holomorphic_part(Field::from_values(g256, std::move(rv)));
    CHECK(rel(d.R, R_oracle) < 1e-10);
    CHECK(d.R.holomorphic_defect() < 1e-14);
}

TEST_CASE("compute_aux at the zero state") {
    const Params p{1.0, 2.0, 0.1};
    const State zero{Field::zero(g256), Field::zero(g256)};
    const AuxBundle aux = compute_aux(derive(zero, p), zero, p);
    CHECK(abs_err(aux.J, add_constant(Field::zero(g256), 1.0)) == 0.0);
    for (const Field* f : {&aux.Y, &aux.F, &aux.F1, &aux.uF, &aux.T1, &aux.a, &aux.a1, &aux.N,
                           &aux.ua, &aux.b, &aux.b1, &aux.ub, &aux.M, &aux.M1, &aux.uM, &aux.X,
                           &aux.Z, &aux.U})
        CHECK(f->l2() == 0.0);
    CHECK(aux.has_paraproducts);
}

TEST_CASE("compute_aux structure on small states") {
    const Params p{1.0, 1.5, 0.1};
    const State s = small_state(11);
    const DiffState d = derive(s, p);
    const AuxBundle aux = compute_aux(d, s, p);

    // J = |1+Wa|^2 pointwise
    const Field opW = add_constant(d.Wa, 1.0);
    for (int i = 0; i < g256.size(); ++i)
        CHECK(std::abs(aux.J.value(i) - std::norm(opW.value(i))) < 1e-12);
    // Y = Wa/(1+Wa) pointwise
    for (int i = 0; i < g256.size(); ++i)
        CHECK(std::abs(aux.Y.value(i) - d.Wa.value(i) / opW.value(i)) < 1e-10);

    // a matches the direct convolution-oracle evaluation of its definition
    const Field Ra = deriv(d.R);
    const Field a_oracle = iu * (proj_Pbar(convolution_oracle(d.R.conj(), Ra)) -
                                 proj_P(convolution_oracle(d.R, Ra.conj())));
    CHECK(rel(aux.a, a_oracle) < 1e-10);

    // realness of a, a1, b
    CHECK(imag_part(aux.a).l2() / std::max(aux.a.l2(), 1e-300) < 1e-10);
    CHECK(imag_part(aux.a1).l2() / std::max(aux.a1.l2(), 1e-300) < 1e-10);
    CHECK(imag_part(aux.b).l2() / std::max(aux.b.l2(), 1e-300) < 1e-10);

    // Taylor sign: g + ua > 0 pointwise on accepted small states
    for (int i = 0; i < g256.size(); ++i)
        CHECK(p.g + aux.ua.value(i).real() > 0.0);
    // nonnegativity monitor for a itself, with discretization slack
    double min_a = 1e300;
    for (int i = 0; i < g256.size(); ++i) min_a = std::min(min_a, aux.a.value(i).real());
    CHECK(min_a > -1e-8 * aux.a.linf());

    // gamma = 0: underlined quantities collapse
    const Params p0{1.0, 0.0, 0.1};
    const AuxBundle aux0 = compute_aux(d, s, p0);
    CHECK(abs_err(aux0.uF, aux0.F) == 0.0);
    CHECK(abs_err(aux0.ua, aux0.a) == 0.0);
    CHECK(abs_err(aux0.ub, aux0.b) == 0.0);
    CHECK(abs_err(aux0.uM, aux0.M) == 0.0);
}

TEST_CASE("rhs at the zero state vanishes") {
    const Params p{1.0, 1.0, 0.1};
    const State zero{Field::zero(g256), Field::zero(g256)};
    const auto [dW, dQ] = rhs_wq(zero, p);
    CHECK(dW.l2() == 0.0);
    CHECK(dQ.l2() == 0.0);
    const auto [dWa, dRa] = rhs_diff(derive(zero, p), zero, p);
    CHECK(dWa.l2() == 0.0);
    CHECK(dRa.l2() == 0.0);
    const auto [dY, dR] = rhs_yr(derive(zero, p), zero, p);
    CHECK(dY.l2() == 0.0);
    CHECK(dR.l2() == 0.0);
}

TEST_CASE("linearized limit of the nonlinear rhs has quadratic residual") {
    const Params p{1.0, 1.0, 0.1};
    std::vector<double> amps{1e-2, 1e-3, 1e-4}, errs;
    for (double eps : amps) {
        const State s{random_bandlimited(g256, 21, eps, 8),
                      random_bandlimited(g256, 22, eps, 8)};
        const auto [dW, dQ] = rhs_wq(s, p);
        const Field gw = dW + deriv(s.Q);
        const Field gq = dQ - (iu * p.g) * s.W + (iu * p.gamma) * s.Q;
        errs.push_back(std::sqrt(gw.l2() * gw.l2() + gq.l2() * gq.l2()));
    }
    CHECK(fit_loglog_slope(amps, errs) >= 1.9);
}

TEST_CASE("the two nonlinear rhs forms agree") {
    for (double gamma : {0.0, 1.0, 2.0}) {
        const Params p{1.0, gamma, 0.1};
        for (std::uint64_t seed : {31, 33, 35}) {
            const State s = small_state(seed);
            const auto [dW1, dQ1] = rhs_wq(s, p);
            const auto [dW2, dQ2] = rhs_wq_alt(s, p);
            CHECK(rel(dW1, dW2) < 1e-9);
            CHECK(rel(dQ1, dQ2) < 1e-9);
        }
    }
}

TEST_CASE("chain-rule consistency rhs_wq vs rhs_diff vs rhs_yr") {
    const Params p{1.0, 1.0, 0.1};
    const State s = small_state(41);
    const DiffState d = derive(s, p);
    const auto [dW, dQ] = rhs_wq(s, p);
    const auto [dWa, dR] = rhs_diff(d, s, p);

    // d/dt W_alpha = (d/dt W)_alpha
    CHECK(rel(deriv(dW), dWa) < 1e-8);

    // d/dt R = (dQ_a - R dWa) / (1 + Wa)
    const Field opW = add_constant(d.Wa, 1.0);
    const Field dR_chain = holomorphic_part(
        mul_dealiased(deriv(dQ) - mul_dealiased(d.R, dWa), reciprocal(opW)));
    CHECK(rel(dR_chain, dR) < 1e-8);

    // d/dt Y = dWa / (1+Wa)^2
    const auto [dY, dR2] = rhs_yr(d, s, p);
    const Field r2 = mul_dealiased(reciprocal(opW), reciprocal(opW));
    CHECK(rel(dY, holomorphic_part(mul_dealiased(dWa, r2))) < 1e-8);
    CHECK(rel(dR2, dR) < 1e-8);
}

TEST_CASE("gamma = 0 reduces the advection form to the irrotational system") {
    const Params p0{1.0, 0.0, 0.1};
    const State s = small_state(51);
    const DiffState d = derive(s, p0);
    const AuxBundle aux = compute_aux(d, s, p0, false);
    const auto [dW, dQ] = rhs_wq_alt(s, p0);
    const Field opW = add_constant(d.Wa, 1.0);
    const Field want_dW = holomorphic_part(-mul_dealiased(aux.b, opW) + d.R.conj());
    const Field want_dQ = holomorphic_part(-mul_dealiased(aux.b, deriv(s.Q)) +
                                           (iu * p0.g) * s.W +
                                           proj_Pbar(mul_dealiased(d.R, d.R.conj())));
    CHECK(rel(dW, want_dW) < 1e-13);
    CHECK(rel(dQ, want_dQ) < 1e-13);
}

TEST_CASE("identity residuals") {
    const Params p{1.0, 1.0, 0.1};
    const State zero{Field::zero(g256), Field::zero(g256)};
    for (const auto& [name, value] : identity_residuals(derive(zero, p), zero, p)) {
        INFO(name);
        CHECK(value == 0.0);
    }

    // narrow band keeps sup|W_alpha| small so the dealiasing remainder of the
    // pointwise reciprocals stays far below the exactness tolerance
    for (std::uint64_t seed : {61, 63, 65}) {
        const State s = small_state(seed, 1e-2, 8);
        const auto res = identity_residuals(derive(s, p), s, p);
        for (const char* name : {"ub_alpha", "M_dual", "M1_dual", "N_commutator"}) {
            INFO(name);
            CHECK(res.at(name) < 1e-8);
        }
    }
}

TEST_CASE("quadratic identities scale quadratically in amplitude") {
    const Params p{1.0, 1.0, 0.1};
    const std::vector<double> amps{1e-2, 1e-3, 1e-4};
    std::map<std::string, std::vector<double>> errs;
    for (double eps : amps) {
        const State s{random_bandlimited(g256, 71, eps, 32),
                      random_bandlimited(g256, 72, eps, 32)};
        for (const auto& [name, value] : identity_residuals(derive(s, p), s, p))
            errs[name].push_back(value);
    }
    for (const char* name : {"X_alpha_lowhigh_W", "X_alpha_lowhigh_Y", "Y_lowhigh_W",
                             "Z_alpha_R", "U_alpha_X"}) {
        INFO(name);
        CHECK(fit_loglog_slope(amps, errs.at(name)) >= 1.8);
    }
}
