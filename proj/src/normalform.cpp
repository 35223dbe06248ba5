#include "holowave/normalform.hpp"

#include "holowave/spectral.hpp"

namespace hw {

std::pair<Field, Field> nf_correction(const State& s, const Params& p, GammaCubeSign sign) {
    p.validate();
    const double g = p.g;
    const double gm = p.gamma;

    const Field& W = s.W;
    const Field& Q = s.Q;
    const Field Wb = W.conj();
    const Field Qb = Q.conj();
    const Field Wa = deriv(W);
    const Field Qa = deriv(Q);
    const Field WpWb = W + Wb;
    const Field QpQb = Q + Qb;
    const Field absW2 = mul_dealiased(W, Wb);
    // dalpha^{-1}(W - Wbar); conjugation commutes with the antiderivative.
    const Field S = antideriv(remove_mean(W));
    const Field D = S - S.conj();

    const cplx c3 = sign == GammaCubeSign::kDoubledI
                        ? cplx{-gm * gm * gm / (4.0 * g * g), 0.0}
                        : cplx{0.0, gm * gm * gm / (4.0 * g * g)};

    Field W2 = -mul_dealiased(WpWb, Wa);
    W2 = W2 - (gm / (2.0 * g)) * (mul_dealiased(QpQb, Wa) + mul_dealiased(WpWb, Qa));
    W2 = W2 + (iu * (gm * gm / (2.0 * g))) *
                  (mul_dealiased(D, Wa) + mul_dealiased(W, W) + 0.5 * absW2);
    W2 = W2 - (gm * gm / (4.0 * g * g)) * mul_dealiased(QpQb, Qa);
    W2 = W2 + c3 * (mul_dealiased(QpQb, W) + mul_dealiased(D, Qa));
    W2 = W2 + (gm * gm * gm * gm / (4.0 * g * g)) * mul_dealiased(D, W);

    Field Q2 = -mul_dealiased(WpWb, Qa);
    Q2 = Q2 - (gm / (2.0 * g)) * mul_dealiased(QpQb, Qa);
    Q2 = Q2 + (iu * (gm / 4.0)) * (mul_dealiased(W, W) + 2.0 * absW2);
    Q2 = Q2 + (iu * (gm * gm / (2.0 * g))) *
                  (mul_dealiased(D, Qa) + 0.5 * mul_dealiased(QpQb, W));
    Q2 = Q2 + (gm * gm * gm / (4.0 * g)) * mul_dealiased(D, W);

    return {std::move(W2), std::move(Q2)};
}

State nf_transform(const State& s, const Params& p, GammaCubeSign sign) {
    auto [W2, Q2] = nf_correction(s, p, sign);
    return State{s.W + enforce_holomorphic(W2), s.Q + enforce_holomorphic(Q2)};
}

std::pair<Field, Field> nf_residual(const State& s, const Params& p, GammaCubeSign sign) {
    const auto [dW, dQ] = rhs_wq(s, p);
    const State sdot{dW, dQ};

    // d/dt of a quadratic map C along sdot: C(s + sdot) - C(s) - C(sdot).
    const auto c_s = nf_correction(s, p, sign);
    const auto c_dot = nf_correction(sdot, p, sign);
    const auto c_sum = nf_correction(State{s.W + dW, s.Q + dQ}, p, sign);
    const Field dW2 = c_sum.first - c_s.first - c_dot.first;
    const Field dQ2 = c_sum.second - c_s.second - c_dot.second;

    const Field Wt = s.W + enforce_holomorphic(c_s.first);
    const Field Qt = s.Q + enforce_holomorphic(c_s.second);
    const Field dWt = dW + enforce_holomorphic(dW2);
    const Field dQt = dQ + enforce_holomorphic(dQ2);

    Field G = dWt + deriv(Qt);
    Field K = dQt - (iu * p.g) * Wt + (iu * p.gamma) * Qt;
    return {std::move(G), std::move(K)};
}

}  // namespace hw
