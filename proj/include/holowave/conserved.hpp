#pragma once

#include "holowave/waterwave.hpp"

namespace hw {

// Spectral quadrature over the period: exact for band-limited integrands.
inline cplx integrate(const Field& f) { return f.mean() * f.grid().period(); }

// Conserved energy of the nonlinear flow, with y = Im W and x_a = 1 + Re W_a:
//   E = Im int Q Qbar_a
//     + 2g int y^2 x_a                    (potential energy)
//     + 2 gamma int Re(Q_a) y^2           (vorticity / wave cross term)
//     + (2/3) gamma^2 int y^3 x_a         (vorticity self-energy)
// Each coefficient was pinned by requiring dE/dt = 0 along the flow; the
// quadratic part is g ||W||^2 + ||Q||^2_{Hdot^{1/2}}.
double energy(const State& s, const Params& p);

// Conserved horizontal momentum:
//   P = 2 int Im(Qbar W_a) - 2 gamma int y^2 x_a.
double momentum(const State& s, const Params& p);

// Energy of the zero-background linearized system, norm form:
// g ||w||_{L^2}^2 + ||q||_{Hdot^{1/2}}^2.
double linear_energy(const Field& w, const Field& q, const Params& p);
// Same functional in integral form, int g|w|^2 - i q qbar_alpha.
cplx linear_energy_integral(const Field& w, const Field& q, const Params& p);

// Quadratic linearized energy around a background: int (g+ua)|w|^2 + Im(r rbar_alpha).
double elin2(const Field& w, const Field& r, const AuxBundle& aux, const Params& p);

// Paradifferential variant: int T_{g+ua} w wbar + Im(r rbar_alpha).
double e0para(const Field& w, const Field& r, const AuxBundle& aux, const Params& p);

}  // namespace hw
