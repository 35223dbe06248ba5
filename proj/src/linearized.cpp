#include "holowave/linearized.hpp"

#include <cmath>

#include "holowave/conserved.hpp"
#include "holowave/norms.hpp"
#include "holowave/spectral.hpp"

namespace hw {

std::pair<Field, Field> rhs_linearized(const LinState& l, const DiffState& d, const State& s,
                                       const AuxBundle& aux, const Params& p) {
    check_interface(d.Wa, p);
    const double gamma = p.gamma;
    const cplx ihg = iu * (gamma / 2.0);

    const Field& w = l.w;
    const Field& r = l.r;
    const Field wa = deriv(w);
    const Field ra = deriv(r);
    const Field& Wa = d.Wa;
    const Field& R = d.R;
    const Field Ra = deriv(R);
    const Field Rb = R.conj();
    const Field Wb = s.W.conj();
    const Field opW = add_constant(Wa, 1.0);
    const Field opWb = opW.conj();
    const Field ropW = reciprocal(opW);
    const Field ropWb = reciprocal(opWb);
    const Field ropW2 = mul_dealiased(ropW, ropW);
    const Field rJ = mul_dealiased(ropW, ropWb);

    // Sources (GKZeroDef)
    const Field ra_Raw = ra + mul_dealiased(Ra, w);
    const Field m = mul_dealiased(ra_Raw, rJ) + mul_dealiased(mul_dealiased(Rb, wa), ropW2);
    const Field m1 = mul_dealiased(w, ropWb) - mul_dealiased(mul_dealiased(Wb, wa), ropW2);
    const Field m2 =
        mul_dealiased(Rb, w) -
        mul_dealiased(mul_dealiased(Wb, ra) + mul_dealiased(Wb, mul_dealiased(Ra, w)), ropW);
    const Field n = mul_dealiased(mul_dealiased(Rb, ra_Raw), ropW);

    const Field G = mul_dealiased(opW, proj_P(m.conj()) + proj_Pbar(m));
    const Field G1 = -mul_dealiased(opW, proj_P(m1.conj()) - proj_Pbar(m1));
    const Field K = proj_Pbar(n) - proj_P(n.conj());
    const Field K1 = proj_Pbar(m2) + proj_P(m2.conj());
    const Field uG0 = G - ihg * G1;
    const Field uK0 = K - ihg * K1;

    Field dw = -proj_P(mul_dealiased(aux.ub, wa)) - proj_P(mul_dealiased(ra, ropWb)) -
               proj_P(mul_dealiased(mul_dealiased(Ra, w), ropWb)) -
               gamma * proj_P(mul_dealiased(mul_dealiased(imag_part(Wa), w), ropWb)) +
               proj_P(uG0);
    Field dr = -proj_P(mul_dealiased(aux.ub, ra)) - (iu * gamma) * r +
               iu * proj_P(mul_dealiased(mul_dealiased(add_constant(aux.ua, p.g), w), ropW)) +
               proj_P(uK0);
    return {enforce_holomorphic(dw), enforce_holomorphic(dr)};
}

std::map<std::string, double> lin_energy_report(const LinState& l, const AuxBundle& aux,
                                                const Params& p) {
    const double e2 = elin2(l.w, l.r, aux, p);
    const double e0 = linear_energy(l.w, l.r, p);
    const double ep = e0para(l.w, l.r, aux, p);
    std::map<std::string, double> out;
    out["E_lin2"] = e2;
    out["E0"] = e0;
    out["E0_para"] = ep;
    out["ratio_E_lin2_over_E0"] = e0 != 0.0 ? e2 / e0 : 0.0;
    out["ratio_E0_para_over_E0"] = e0 != 0.0 ? ep / e0 : 0.0;
    out["H_quarter"] = h_pair_norm(l.w, l.r, 0.25);
    return out;
}

}  // namespace hw
