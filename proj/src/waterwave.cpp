#include "holowave/waterwave.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hw {

namespace {

Field constant_one(const Grid& g) { return add_constant(Field::zero(g), 1.0); }

// |f|^2 as a pointwise real field.
Field abs2_field(const Field& f) {
    std::vector<cplx> v(f.size());
    for (int i = 0; i < f.size(); ++i) v[i] = std::norm(f.values()[i]);
    return Field::from_values(f.grid(), std::move(v));
}

double pair_l2(const Field& a, const Field& b) { return a.l2() + b.l2(); }

double rel_residual(const Field& lhs, const Field& rhs) {
    const double scale = std::max(lhs.l2(), rhs.l2());
    return scale > 0.0 ? (lhs - rhs).l2() / scale : 0.0;
}

Field commutator_Pbar(const Field& f, const Field& g) {
    return proj_Pbar(mul_dealiased(f, g)) - mul_dealiased(f, proj_Pbar(g));
}

}  // namespace

void Params::validate() const {
    if (!(g > 0.0)) throw std::invalid_argument("Params: g must be positive");
    if (gamma < 0.0) throw std::invalid_argument("Params: gamma must be nonnegative");
    if (!(delta > 0.0)) throw std::invalid_argument("Params: delta must be positive");
}

Field holomorphic_part(const Field& f) {
    const Grid& grid = f.grid();
    const int n = grid.size();
    std::vector<cplx> c(n);
    for (int k = 0; k < n; ++k) c[k] = grid.mode(k) <= 0 ? f.spectrum()[k] : cplx{};
    return Field::from_spectrum(grid, std::move(c));
}

void check_interface(const Field& Wa, const Params& p) {
    const Field opW = add_constant(Wa, 1.0);
    if (opW.min_abs() <= p.delta)
        throw InterfaceSingularity("inf|1 + W_alpha| <= delta: interface degenerate");
}

DiffState derive(const State& s, const Params& p) {
    const Field Wa = deriv(s.W);
    check_interface(Wa, p);
    const Field opW = add_constant(Wa, 1.0);
    // Quotient of holomorphic functions with nonvanishing denominator is
    // holomorphic up to discretization error; project to enforce it.
    const Field R = holomorphic_part(mul_dealiased(deriv(s.Q), reciprocal(opW)));
    return DiffState{Wa, R};
}

AuxBundle compute_aux(const DiffState& d, const State& s, const Params& p,
                      bool with_paraproducts) {
    check_interface(d.Wa, p);
    const Grid& grid = d.Wa.grid();
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);  // i*gamma/2

    const Field& Wa = d.Wa;
    const Field& R = d.R;
    const Field Wab = Wa.conj();
    const Field Rb = R.conj();
    const Field Ra = deriv(R);
    const Field Rab = Ra.conj();
    const Field& W = s.W;
    const Field Wb = W.conj();
    const Field Qa = deriv(s.Q);
    const Field Qab = Qa.conj();

    const Field opW = add_constant(Wa, 1.0);
    const Field opWb = add_constant(Wab, 1.0);
    const Field ropW = reciprocal(opW);
    const Field ropWb = reciprocal(opWb);

    AuxBundle aux;
    aux.J = abs2_field(opW);
    const Field rJ = reciprocal(aux.J);
    aux.Y = mul_dealiased(Wa, ropW);

    aux.F = proj_P(mul_dealiased(Qa - Qab, rJ));
    aux.F1 = proj_P(mul_dealiased(W, ropWb) + mul_dealiased(Wb, ropW));
    aux.uF = aux.F - ihg * aux.F1;
    aux.T1 = proj_P(mul_dealiased(mul_dealiased(W, Qab), ropWb) -
                    mul_dealiased(mul_dealiased(Wb, Qa), ropW));

    aux.a = iu * (proj_Pbar(mul_dealiased(Rb, Ra)) - proj_P(mul_dealiased(R, Rab)));
    aux.N = proj_P(mul_dealiased(W, Rab) - mul_dealiased(Wab, R)) +
            proj_Pbar(mul_dealiased(Wb, Ra) - mul_dealiased(Wa, Rb));
    aux.a1 = R + Rb - aux.N;
    aux.ua = aux.a + (gamma / 2.0) * aux.a1;

    aux.b = proj_P(mul_dealiased(Qa, rJ)) + proj_Pbar(mul_dealiased(Qab, rJ));
    aux.b1 = proj_P(mul_dealiased(W, ropWb)) - proj_Pbar(mul_dealiased(Wb, ropW));
    aux.ub = aux.b - ihg * aux.b1;

    const Field Ya = deriv(aux.Y);
    const Field Yb = aux.Y.conj();
    const Field Yab = Ya.conj();
    // Projection form of M; the definition form appears as an identity check.
    aux.M = proj_Pbar(mul_dealiased(Rb, Ya) - mul_dealiased(Ra, Yb)) +
            proj_P(mul_dealiased(R, Yab) - mul_dealiased(Rab, aux.Y));
    aux.M1 = deriv(proj_P(mul_dealiased(W, Yb))) - deriv(proj_Pbar(mul_dealiased(Wb, aux.Y)));
    aux.uM = aux.M - ihg * aux.M1;

    if (with_paraproducts) {
        const LPBasis& basis = basis_for(grid);
        const Field oneMinusY = add_constant(-aux.Y, 1.0);
        aux.X = parap_low_high(basis, oneMinusY, W);
        aux.Z = parap_low_high(basis, oneMinusY, s.Q);
        aux.U = parap_low_high(basis, oneMinusY, antideriv(remove_mean(W)));
        aux.has_paraproducts = true;
    }
    return aux;
}

std::pair<Field, Field> rhs_wq(const State& s, const Params& p) {
    const Field Wa = deriv(s.W);
    check_interface(Wa, p);
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);

    const Field& W = s.W;
    const Field Wb = W.conj();
    const Field Qa = deriv(s.Q);
    const Field Qab = Qa.conj();
    const Field opW = add_constant(Wa, 1.0);
    const Field opWb = opW.conj();
    const Field ropW = reciprocal(opW);
    const Field ropWb = reciprocal(opWb);
    const Field rJ = reciprocal(abs2_field(opW));

    const Field F = proj_P(mul_dealiased(Qa - Qab, rJ));
    const Field F1 = proj_P(mul_dealiased(W, ropWb) + mul_dealiased(Wb, ropW));
    const Field uF = F - ihg * F1;
    const Field T1 = proj_P(mul_dealiased(mul_dealiased(W, Qab), ropWb) -
                            mul_dealiased(mul_dealiased(Wb, Qa), ropW));

    Field dW = -mul_dealiased(opW, uF) - ihg * W;
    Field dQ = (iu * p.g) * W - mul_dealiased(uF, Qa) - (iu * gamma) * s.Q -
               proj_P(mul_dealiased(mul_dealiased(Qa, Qab), rJ)) + ihg * T1;
    // The continuous system preserves holomorphy; re-enforce it after
    // discretization leakage. Means are kept: the mean of W tracks the
    // surface level, which the conserved energy depends on.
    return {holomorphic_part(dW), holomorphic_part(dQ)};
}

std::pair<Field, Field> rhs_wq_alt(const State& s, const Params& p) {
    const DiffState d = derive(s, p);
    const AuxBundle aux = compute_aux(d, s, p, /*with_paraproducts=*/false);
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);

    const Field& W = s.W;
    const Field Wb = W.conj();
    const Field Qa = deriv(s.Q);
    const Field opW = add_constant(d.Wa, 1.0);
    const Field Rb = d.R.conj();

    Field dW = -mul_dealiased(aux.ub, opW) - ihg * W + Rb + ihg * Wb;
    Field dQ = -mul_dealiased(aux.ub, Qa) + (iu * p.g) * W - (iu * gamma) * s.Q +
               ihg * mul_dealiased(Rb, W) + proj_Pbar(mul_dealiased(d.R, Rb)) -
               ihg * proj_Pbar(mul_dealiased(W, Rb) - mul_dealiased(Wb, d.R));
    return {holomorphic_part(dW), holomorphic_part(dQ)};
}

std::pair<Field, Field> rhs_diff(const DiffState& d, const State& s, const Params& p) {
    const AuxBundle aux = compute_aux(d, s, p, /*with_paraproducts=*/false);
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);

    const Field& Wa = d.Wa;
    const Field& R = d.R;
    const Field Wab = Wa.conj();
    const Field Ra = deriv(R);
    const Field opW = add_constant(Wa, 1.0);
    const Field opWb = add_constant(Wab, 1.0);
    const Field ropW = reciprocal(opW);
    const Field ropWb = reciprocal(opWb);

    Field dWa = -mul_dealiased(aux.ub, deriv(Wa)) -
                mul_dealiased(mul_dealiased(opW, Ra), ropWb) + mul_dealiased(opW, aux.uM) +
                ihg * mul_dealiased(Wa, Wa - Wab);
    Field dR = -mul_dealiased(aux.ub, Ra) - (iu * gamma) * R +
               iu * mul_dealiased(p.g * Wa - aux.a, ropW) +
               ihg * mul_dealiased(mul_dealiased(R, Wa) + mul_dealiased(R.conj(), Wa) + aux.N,
                                   ropW);
    return {holomorphic_part(dWa), holomorphic_part(dR)};
}

std::pair<Field, Field> rhs_yr(const DiffState& d, const State& s, const Params& p) {
    const AuxBundle aux = compute_aux(d, s, p, /*with_paraproducts=*/false);
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);

    const Field& Y = aux.Y;
    const Field Yb = Y.conj();
    const Field oneMinusY = add_constant(-Y, 1.0);
    const Field oneMinusYb = oneMinusY.conj();
    const Field Ra = deriv(d.R);

    const Field absOneMinusY2 = mul_dealiased(oneMinusY, oneMinusYb);
    // i(gamma/2) W(W - Wbar)/(1+W)^2 written in Y: Y^2 - Ybar/(1-Ybar) Y(1-Y).
    const Field bracket =
        mul_dealiased(Y, Y) -
        mul_dealiased(mul_dealiased(mul_dealiased(Yb, reciprocal(oneMinusYb)), Y), oneMinusY);
    const Field DtY = -mul_dealiased(absOneMinusY2, Ra) + mul_dealiased(oneMinusY, aux.uM) +
                      ihg * bracket;
    Field dY = DtY - mul_dealiased(aux.ub, deriv(Y));

    const Field DtR = iu * (p.g * Y + mul_dealiased(aux.ua, Y)) - iu * aux.ua -
                      ihg * (d.R - d.R.conj());
    Field dR = DtR - mul_dealiased(aux.ub, Ra);
    return {holomorphic_part(dY), holomorphic_part(dR)};
}

std::map<std::string, double> identity_residuals(const DiffState& d, const State& s,
                                                 const Params& p) {
    const AuxBundle aux = compute_aux(d, s, p, /*with_paraproducts=*/true);
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);
    const LPBasis& basis = basis_for(d.Wa.grid());

    const Field& Wa = d.Wa;
    const Field& R = d.R;
    const Field Wab = Wa.conj();
    const Field Ra = deriv(R);
    const Field Rab = Ra.conj();
    const Field opW = add_constant(Wa, 1.0);
    const Field opWb = add_constant(Wab, 1.0);
    const Field ropW = reciprocal(opW);
    const Field ropWb = reciprocal(opWb);
    const Field& W = s.W;

    std::map<std::string, double> res;

    // (i) derivative of the advection velocity
    {
        const Field lhs = deriv(aux.ub);
        const Field rhs = mul_dealiased(Ra, ropWb) + mul_dealiased(Rab, ropW) -
                          ihg * (Wa - Wab) - aux.uM;
        res["ub_alpha"] = rel_residual(lhs, rhs);
    }
    // (ii) M: definition vs projection form
    {
        const Field M_def =
            mul_dealiased(Ra, ropWb) + mul_dealiased(Rab, ropW) - deriv(aux.b);
        res["M_dual"] = rel_residual(M_def, aux.M);
    }
    // (iii) M1: definition vs projection form
    {
        const Field M1_def = Wa - Wab - deriv(aux.b1);
        res["M1_dual"] = rel_residual(M1_def, aux.M1);
    }
    // (iv) N vs its commutator form
    {
        const Field Nc = commutator_Pbar(W.conj(), Ra) - commutator_Pbar(R.conj(), Wa) +
                         commutator_P(W, Rab) - commutator_P(R, Wab);
        res["N_commutator"] = rel_residual(aux.N, Nc);
    }

    // (v)-(ix) hold modulo quadratic errors; scale-guarded denominator.
    const double guard = 1.0 + pair_l2(Wa, R);
    const Field oneMinusY = add_constant(-aux.Y, 1.0);
    const Field Xa = deriv(aux.X);
    res["X_alpha_lowhigh_W"] = (Xa - parap_low_high(basis, oneMinusY, Wa)).l2() / guard;
    res["X_alpha_lowhigh_Y"] = (Xa - parap_low_high(basis, opW, aux.Y)).l2() / guard;
    res["Y_lowhigh_W"] =
        (aux.Y - parap_low_high(basis, mul_dealiased(oneMinusY, oneMinusY), Wa)).l2() / guard;
    res["Z_alpha_R"] = (deriv(aux.Z) - R).l2() / guard;
    res["U_alpha_X"] = (deriv(aux.U) - aux.X).l2() / guard;
    return res;
}

}  // namespace hw
