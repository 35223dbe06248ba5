#pragma once

#include <map>
#include <string>
#include <utility>

#include "holowave/field.hpp"
#include "holowave/lp.hpp"
#include "holowave/spectral.hpp"

namespace hw {

struct Params {
    double g = 1.0;      // gravitational constant, > 0
    double gamma = 0.0;  // constant vorticity, >= 0 (flip alpha for negative)
    double delta = 0.1;  // interface threshold: require inf|1 + W_alpha| > delta

    void validate() const;
};

// Holomorphic position / velocity potential pair.  Means are dynamic: the
// mean of W carries the surface level, which the energy depends on.
struct State {
    Field W;
    Field Q;
};

// Good variables of the differentiated system.
struct DiffState {
    Field Wa;  // W_alpha
    Field R;   // Q_alpha / (1 + W_alpha)
};

// All derived auxiliary functions at one time slice.
struct AuxBundle {
    Field Y;   // Wa / (1 + Wa), pointwise
    Field J;   // |1 + Wa|^2, real positive pointwise
    Field F, F1, uF, T1;
    Field a, a1, N, ua;
    Field b, b1, ub;
    Field M, M1, uM;
    Field X, Z, U;  // paraproduct auxiliaries T_{1-Y}W, T_{1-Y}Q, T_{1-Y}dalpha^{-1}W
    bool has_paraproducts = false;
};

// Keep modes xi <= 0 including the mean (holomorphic class projection).
Field holomorphic_part(const Field& f);

// Throws InterfaceSingularity unless inf|1 + Wa| > delta.
void check_interface(const Field& Wa, const Params& p);

DiffState derive(const State& s, const Params& p);

// Every auxiliary function from its defining formula.  The paraproduct
// auxiliaries X, Z, U are skipped when with_paraproducts is false (they are
// only needed by the static identity diagnostics).
AuxBundle compute_aux(const DiffState& d, const State& s, const Params& p,
                      bool with_paraproducts = true);

// Time derivatives of (W, Q): fully nonlinear form and the advection form.
std::pair<Field, Field> rhs_wq(const State& s, const Params& p);
std::pair<Field, Field> rhs_wq_alt(const State& s, const Params& p);

// Time derivatives of the differentiated variables (Wa, R).
std::pair<Field, Field> rhs_diff(const DiffState& d, const State& s, const Params& p);

// Time derivatives of (Y, R) in material-derivative form.
std::pair<Field, Field> rhs_yr(const DiffState& d, const State& s, const Params& p);

// Static algebraic identities as residual diagnostics.  (i)-(iv) are exact
// identities reported relative to the operand size; (v)-(ix) hold modulo a
// quadratic error and are reported on the scale-guarded denominator
// 1 + ||(Wa, R)||, so their amplitude scaling stays visible.
std::map<std::string, double> identity_residuals(const DiffState& d, const State& s,
                                                 const Params& p);

}  // namespace hw
