#pragma once

#include <utility>

#include "holowave/waterwave.hpp"

namespace hw {

// Sign convention for the gamma^3 coefficient of the (Q + Qbar) W and
// D Q_alpha terms in the W correction.  The two readings differ by a factor
// of i: kPlainI (+i gamma^3/(4 g^2)) is the one that cancels the quadratic
// sources (verified by a coefficient fit against the flow and by the
// cubic-cancellation slope test); kDoubledI (-gamma^3/(4 g^2)) is kept so
// the selection test can demonstrate the difference.
enum class GammaCubeSign {
    kDoubledI,  // coefficient -gamma^3/(4 g^2)
    kPlainI,    // coefficient +i gamma^3/(4 g^2)
};

inline constexpr GammaCubeSign kDefaultGammaCubeSign = GammaCubeSign::kPlainI;

// Quadratic corrections (W2, Q2) such that (W + P W2, Q + P Q2) solves the
// system with the quadratic source terms cancelled.
std::pair<Field, Field> nf_correction(const State& s, const Params& p,
                                      GammaCubeSign sign = kDefaultGammaCubeSign);

// (W + P W2, Q + P Q2), mean zeroed to keep the state gauge.
State nf_transform(const State& s, const Params& p,
                   GammaCubeSign sign = kDefaultGammaCubeSign);

// Residuals G = d/dt Wt + Qt_alpha, K = d/dt Qt - i g Wt + i gamma Qt of the
// transformed variables; cubic in the state amplitude when the corrections
// cancel the quadratic sources.  Time derivatives of the corrections use the
// exact quadratic polarization C(s + sdot) - C(s) - C(sdot).
std::pair<Field, Field> nf_residual(const State& s, const Params& p,
                                    GammaCubeSign sign = kDefaultGammaCubeSign);

}  // namespace hw
