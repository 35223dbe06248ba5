#include "holowave/conserved.hpp"

#include <cmath>

#include "holowave/norms.hpp"
#include "holowave/spectral.hpp"

namespace hw {

namespace {
// Pointwise Im of a product field, as a real-valued field.
Field im_of(const Field& f) { return imag_part(f); }
// Pointwise Re of a field, as a real-valued field.
Field re_of(const Field& f) { return 0.5 * (f + f.conj()); }
}  // namespace

double energy(const State& s, const Params& p) {
    const Field y = imag_part(s.W);
    const Field y2 = mul_dealiased(y, y);
    const Field xa = add_constant(re_of(deriv(s.W)), 1.0);
    const double gamma = p.gamma;

    double e = integrate((-iu) * mul_dealiased(s.Q, deriv(s.Q).conj())).real();
    e += 2.0 * p.g * integrate(mul_dealiased(y2, xa)).real();
    e += 2.0 * gamma * integrate(mul_dealiased(re_of(deriv(s.Q)), y2)).real();
    e += (2.0 / 3.0) * gamma * gamma *
         integrate(mul_dealiased(mul_dealiased(y2, y), xa)).real();
    return e;
}

double momentum(const State& s, const Params& p) {
    const Field y = imag_part(s.W);
    const Field xa = add_constant(re_of(deriv(s.W)), 1.0);
    const double m =
        2.0 * integrate(im_of(mul_dealiased(s.Q.conj(), deriv(s.W)))).real();
    return m - 2.0 * p.gamma *
                   integrate(mul_dealiased(mul_dealiased(y, y), xa)).real();
}

double linear_energy(const Field& w, const Field& q, const Params& p) {
    const double hq = sobolev_norm(q, 0.5, /*homogeneous=*/true);
    return p.g * w.l2() * w.l2() + hq * hq;
}

cplx linear_energy_integral(const Field& w, const Field& q, const Params& p) {
    const Field integrand =
        p.g * mul_dealiased(w, w.conj()) - iu * mul_dealiased(q, deriv(q).conj());
    return integrate(integrand);
}

double elin2(const Field& w, const Field& r, const AuxBundle& aux, const Params& p) {
    const Field coeff = add_constant(aux.ua, p.g);
    const Field integrand = mul_dealiased(coeff, mul_dealiased(w, w.conj())) +
                            im_of(mul_dealiased(r, deriv(r).conj()));
    return integrate(integrand).real();
}

double e0para(const Field& w, const Field& r, const AuxBundle& aux, const Params& p) {
    const LPBasis& basis = basis_for(w.grid());
    const Field coeff = add_constant(aux.ua, p.g);
    const Field tw = parap_low_high(basis, coeff, w);
    const Field integrand =
        mul_dealiased(tw, w.conj()) + im_of(mul_dealiased(r, deriv(r).conj()));
    return integrate(integrand).real();
}

}  // namespace hw
