#pragma once

#include <map>
#include <string>

#include "holowave/lp.hpp"
#include "holowave/waterwave.hpp"

namespace hw {

// (sum |xi|^{2s} |c|^2 L)^{1/2} when homogeneous (mean dropped; s<0 needs
// zero mean), <xi>^s = (1+xi^2)^{s/2} weight otherwise.
double sobolev_norm(const Field& f, double s, bool homogeneous);

// ||(u, v)||: |D|^s shifts of the base space L^2 x Hdot^{1/2}.
double h_pair_norm(const Field& u, const Field& v, double s);

// Besov Bdot^s_{inf,2}: (sum_k 2^{2sk} ||P_k f||_inf^2)^{1/2}.
double besov_norm(const Field& f, double s);

// Discrete BMO estimator of |D|^s f: for each dyadic scale 2^{-k} take the
// sup over all cyclic grid windows of that length of the windowed mean of
// |S_{>k} f|^2, then sup over k and take the square root.
double bmo_norm(const Field& f, double s = 0.0);

// Wdot^{s,4}: L^4 norm of |D|^s f.
double w_s4_norm(const Field& f, double s);

// Pointwise / BMO / L^4-based control norms of a state, with gamma-weighted
// underlined combinations assembled verbatim.
struct ControlNorms {
    double A = 0.0;
    double B = 0.0;
    double A_minus_half = 0.0;
    double A_minus_1 = 0.0;
    double A_minus_3half = 0.0;
    double A_minus_2 = 0.0;
    double uB = 0.0;  // B + gamma A + gamma^2 A_{-1/2}
    double uA = 0.0;  // A + gamma A_{-1/2} + ... + gamma^4 A_{-2}
    double A_quarter = 0.0;
    double A_minus_quarter = 0.0;
    double A_minus_3quarter = 0.0;
    double uA_quarter = 0.0;
    double A_sharp = 0.0;
    double A_sharp_quarter = 0.0;
    double uA_sharp = 0.0;
    double uA_sharp_quarter = 0.0;

    // ||(Wa, R)||_{Hdot^s x Hdot^{s+1/2}} for arbitrary s.
    double N_s(double s) const { return h_pair_norm(Wa, R, s); }

    std::map<std::string, double> as_map() const;

    Field Wa, R;  // retained for N_s
};

ControlNorms control_norms(const DiffState& d, const AuxBundle& aux, const Params& p);

}  // namespace hw
