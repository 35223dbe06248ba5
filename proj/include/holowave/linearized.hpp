#pragma once

#include <map>
#include <string>
#include <utility>

#include "holowave/waterwave.hpp"

namespace hw {

// Good linearized variables around a background state: r = q - R w.
struct LinState {
    Field w;
    Field r;
};

// Time derivative of (w, r) per the linearized system, with the advection
// operator M_b f = P[b f_alpha] (multiply then project) and the full
// gamma-weighted sources.  Around the zero background this reduces to
// dw = -r_alpha, dr = -i gamma r + i g w.
std::pair<Field, Field> rhs_linearized(const LinState& l, const DiffState& d, const State& s,
                                       const AuxBundle& aux, const Params& p);

// Quadratic energies of a linearized state with their mutual ratios.
std::map<std::string, double> lin_energy_report(const LinState& l, const AuxBundle& aux,
                                                const Params& p);

}  // namespace hw
