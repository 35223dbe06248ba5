#include "holowave/norms.hpp"

#include <algorithm>
#include <cmath>

#include "holowave/spectral.hpp"

namespace hw {

double sobolev_norm(const Field& f, double s, bool homogeneous) {
    const Grid& g = f.grid();
    if (homogeneous && s < 0.0 && std::abs(f.mean()) > 1e-12 * (1.0 + f.l2()))
        throw NonZeroMean("sobolev_norm: homogeneous norm with s<0 needs zero mean");
    double acc = 0.0;
    for (int k = 0; k < g.size(); ++k) {
        const double xi = g.wavenumber(k);
        double w;
        if (homogeneous) {
            if (g.mode(k) == 0) continue;
            w = std::pow(std::abs(xi), 2.0 * s);
        } else {
            w = std::pow(1.0 + xi * xi, s);
        }
        acc += w * std::norm(f.spectrum()[k]);
    }
    return std::sqrt(acc * g.period());
}

double h_pair_norm(const Field& u, const Field& v, double s) {
    const double a = sobolev_norm(u, s, /*homogeneous=*/true);
    const double b = sobolev_norm(v, s + 0.5, /*homogeneous=*/true);
    return std::sqrt(a * a + b * b);
}

double besov_norm(const Field& f, double s) {
    const LPBasis& basis = basis_for(f.grid());
    double acc = 0.0;
    for (int k = basis.k_min(); k <= basis.k_max(); ++k) {
        const double m = basis.block(f, k).linf();
        acc += std::pow(2.0, 2.0 * s * k) * m * m;
    }
    return std::sqrt(acc);
}

double bmo_norm(const Field& f, double s) {
    const Grid& g = f.grid();
    const LPBasis& basis = basis_for(g);
    Field h = remove_mean(f);
    if (s != 0.0) h = frac_deriv(h, s);

    const int n = g.size();
    double sup = 0.0;
    for (int k = basis.k_min() - 1; k <= basis.k_max(); ++k) {
        // S_{>k} h as pointwise |.|^2
        const Field sq = basis.square_function(h, k);
        std::vector<double> a2(n);
        for (int i = 0; i < n; ++i) a2[i] = std::norm(sq.value(i));
        // window of length ~ 2^{-k}, in grid points, cyclic
        const double len = std::pow(2.0, -k);
        const int nk = std::clamp(static_cast<int>(std::lround(len / g.dx())), 1, n);
        // prefix sums over a doubled array for cyclic windows
        double best = 0.0;
        double window = 0.0;
        for (int i = 0; i < nk; ++i) window += a2[i];
        best = window;
        for (int i = 1; i < n; ++i) {
            window += a2[(i + nk - 1) % n] - a2[i - 1];
            best = std::max(best, window);
        }
        sup = std::max(sup, best / nk);
    }
    return std::sqrt(sup);
}

double w_s4_norm(const Field& f, double s) {
    Field h = remove_mean(f);
    if (s != 0.0) h = frac_deriv(h, s);
    return h.l4();
}

namespace {
double linf_besov02(const Field& f) {
    return std::max(f.linf(), besov_norm(f, 0.0));
}
}  // namespace

ControlNorms control_norms(const DiffState& d, const AuxBundle& aux, const Params& p) {
    const double gamma = p.gamma;
    const Field& Wa = d.Wa;
    const Field& R = d.R;
    const Field W = antideriv(remove_mean(Wa));
    const Field opW = add_constant(Wa, 1.0);
    const Field Q = antideriv(enforce_holomorphic(mul_dealiased(R, opW)));

    ControlNorms cn;
    cn.Wa = Wa;
    cn.R = R;

    cn.A = Wa.linf() + aux.Y.linf() + linf_besov02(frac_deriv(R, 0.5));
    cn.B = bmo_norm(Wa, 0.5) + bmo_norm(deriv(R), 0.0);
    cn.A_minus_half = frac_deriv(W, 0.5).linf() + R.linf();
    cn.A_minus_1 = W.linf() + bmo_norm(Q, 0.5);
    cn.A_minus_3half = frac_deriv(W, -0.5).linf();
    cn.A_minus_2 = frac_deriv(W, -1.0).linf();
    cn.uB = cn.B + gamma * cn.A + gamma * gamma * cn.A_minus_half;
    cn.uA = cn.A + gamma * cn.A_minus_half + std::pow(gamma, 2) * cn.A_minus_1 +
            std::pow(gamma, 3) * cn.A_minus_3half + std::pow(gamma, 4) * cn.A_minus_2;

    cn.A_quarter = besov_norm(Wa, 0.25) + besov_norm(R, 0.75);
    cn.A_minus_quarter = besov_norm(Wa, -0.25) + besov_norm(R, 0.25);
    cn.A_minus_3quarter = besov_norm(Wa, -0.75) + besov_norm(R, -0.25);
    cn.uA_quarter = cn.A_quarter + std::sqrt(gamma) * cn.A + gamma * cn.A_minus_quarter +
                    std::pow(gamma, 1.5) * cn.A_minus_half +
                    std::pow(gamma, 2) * cn.A_minus_3quarter;

    cn.A_sharp = w_s4_norm(Wa, 0.25) + w_s4_norm(R, 0.75);
    cn.A_sharp_quarter = w_s4_norm(Wa, 0.5) + w_s4_norm(R, 1.0);
    cn.uA_sharp = cn.A_sharp + std::sqrt(gamma) * w_s4_norm(R, 0.5) +
                  gamma * (w_s4_norm(W, 0.75) + w_s4_norm(R, 0.25)) +
                  std::pow(gamma, 1.5) * w_s4_norm(R, 0.0) +
                  std::pow(gamma, 2) * (w_s4_norm(W, 0.25) + w_s4_norm(R, -0.25));
    cn.uA_sharp_quarter = cn.A_sharp_quarter + std::sqrt(gamma) * w_s4_norm(R, 0.75) +
                          gamma * (w_s4_norm(W, 1.0) + w_s4_norm(R, 0.5)) +
                          std::pow(gamma, 1.5) * w_s4_norm(R, 0.25) +
                          std::pow(gamma, 2) * (w_s4_norm(W, 0.5) + w_s4_norm(R, 0.0));
    return cn;
}

std::map<std::string, double> ControlNorms::as_map() const {
    return {
        {"A", A},
        {"B", B},
        {"A_minus_half", A_minus_half},
        {"A_minus_1", A_minus_1},
        {"A_minus_3half", A_minus_3half},
        {"A_minus_2", A_minus_2},
        {"uB", uB},
        {"uA", uA},
        {"A_quarter", A_quarter},
        {"A_minus_quarter", A_minus_quarter},
        {"A_minus_3quarter", A_minus_3quarter},
        {"uA_quarter", uA_quarter},
        {"A_sharp", A_sharp},
        {"A_sharp_quarter", A_sharp_quarter},
        {"uA_sharp", uA_sharp},
        {"uA_sharp_quarter", uA_sharp_quarter},
        {"N_3quarter", N_s(0.75)},
    };
}

}  // namespace hw
