#include "holowave/lp.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "holowave/kernels.hpp"
#include "holowave/spectral.hpp"

namespace hw {

namespace {

// Raised cosine in t = log2|xi|, peak 1 at t = k, support (k-1, k+1).
double raw_window(int k, double abs_xi) {
    const double t = std::log2(abs_xi);
    const double s = t - k;
    if (s <= -1.0 || s >= 1.0) return 0.0;
    const double c = std::cos(0.5 * M_PI * s);
    return c * c;
}

}  // namespace

LPBasis::LPBasis(const Grid& g) : grid_(g) {
    const double xi_min = kTwoPi / g.period();
    const double xi_max = g.max_wavenumber();
    k_min_ = static_cast<int>(std::floor(std::log2(xi_min)));
    k_max_ = static_cast<int>(std::ceil(std::log2(xi_max)));
    const int nk = k_max_ - k_min_ + 1;
    const int n = g.size();
    windows_.assign(nk, std::vector<double>(n, 0.0));
    for (int m = 0; m < n; ++m) {
        if (g.mode(m) == 0) continue;
        const double ax = std::abs(g.wavenumber(m));
        double total = 0.0;
        for (int k = k_min_; k <= k_max_; ++k) total += raw_window(k, ax);
        // total is 1 away from the dyadic range edges; normalizing makes
        // the partition of unity exact everywhere on the grid.
        for (int k = k_min_; k <= k_max_; ++k)
            windows_[k - k_min_][m] = raw_window(k, ax) / total;
    }
}

Field LPBasis::block(const Field& f, int k) const {
    const int n = grid_.size();
    std::vector<cplx> c(n);
    const auto& w = windows_[k - k_min_];
    for (int m = 0; m < n; ++m) c[m] = w[m] * f.spectrum()[m];
    return Field::from_spectrum(grid_, std::move(c));
}

Field LPBasis::below(const Field& f, int k_excl) const {
    const int n = grid_.size();
    std::vector<cplx> c(n);
    c[0] = f.spectrum()[0];
    for (int m = 1; m < n; ++m) {
        double w = 0.0;
        for (int k = k_min_; k <= std::min(k_excl - 1, k_max_); ++k) w += windows_[k - k_min_][m];
        c[m] = w * f.spectrum()[m];
    }
    return Field::from_spectrum(grid_, std::move(c));
}

Field LPBasis::square_function(const Field& f, int k_floor) const {
    const int n = grid_.size();
    std::vector<double> acc(n, 0.0);
    for (int k = std::max(k_floor + 1, k_min_); k <= k_max_; ++k) {
        const Field pk = block(f, k);
        kernels::accumulate_abs2(pk.values().data(), acc.data(), n);
    }
    std::vector<cplx> v(n);
    for (int i = 0; i < n; ++i) v[i] = std::sqrt(acc[i]);
    return Field::from_values(grid_, std::move(v));
}

ParaTriple paraproducts(const LPBasis& basis, const Field& f, const Field& g) {
    require_same_grid(f, g, "paraproducts");
    const Grid& grid = f.grid();
    const cplx mf = f.mean();
    const cplx mg = g.mean();
    const Field fp = remove_mean(f);
    const Field gp = remove_mean(g);

    const int kmin = basis.k_min();
    const int kmax = basis.k_max();
    const int nk = kmax - kmin + 1;
    std::vector<Field> fk(nk), gk(nk);
    for (int k = kmin; k <= kmax; ++k) {
        fk[k - kmin] = basis.block(fp, k);
        gk[k - kmin] = basis.block(gp, k);
    }

    // Running low-frequency sums f_{<k-4} and g_{<k-4}, mean included.
    Field flow = add_constant(Field::zero(grid), mf);
    Field glow = add_constant(Field::zero(grid), mg);
    Field low_high = Field::zero(grid);
    Field high_low = Field::zero(grid);
    for (int k = kmin; k <= kmax; ++k) {
        // Highest block index entering f_{<k-4}: everything at least kParaOffset
        // below k, so together with the |k-l| < kParaOffset balanced band the
        // three pieces tile the (k,l) plane exactly.
        const int src = k - kParaOffset;
        if (src >= kmin) {
            flow = flow + fk[src - kmin];
            glow = glow + gk[src - kmin];
        }
        low_high = low_high + mul_dealiased(flow, gk[k - kmin]);
        high_low = high_low + mul_dealiased(glow, fk[k - kmin]);
    }

    Field balanced = add_constant(Field::zero(grid), mf * mg);
    for (int k = kmin; k <= kmax; ++k)
        for (int l = std::max(kmin, k - kParaOffset + 1); l <= std::min(kmax, k + kParaOffset - 1);
             ++l)
            balanced = balanced + mul_dealiased(fk[k - kmin], gk[l - kmin]);

    return ParaTriple{std::move(low_high), std::move(high_low), std::move(balanced)};
}

Field parap_low_high(const LPBasis& basis, const Field& f, const Field& g) {
    require_same_grid(f, g, "parap_low_high");
    const Grid& grid = f.grid();
    const Field gp = remove_mean(g);
    const int kmin = basis.k_min();
    const int kmax = basis.k_max();
    Field flow = add_constant(Field::zero(grid), f.mean());
    const Field fp = remove_mean(f);
    Field out = Field::zero(grid);
    for (int k = kmin; k <= kmax; ++k) {
        const int src = k - kParaOffset;
        if (src >= kmin) flow = flow + basis.block(fp, src);
        out = out + mul_dealiased(flow, basis.block(gp, k));
    }
    return out;
}

const LPBasis& basis_for(const Grid& g) {
    static std::mutex mtx;
    static std::map<std::pair<int, double>, LPBasis> cache;
    std::lock_guard<std::mutex> lock(mtx);
    const auto key = std::make_pair(g.size(), g.period());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, LPBasis(g)).first;
    return it->second;
}

Field commutator_P(const Field& f, const Field& g) {
    require_same_grid(f, g, "commutator_P");
    return proj_P(mul_dealiased(f, g)) - mul_dealiased(f, proj_P(g));
}

}  // namespace hw
