#pragma once

// Shared helpers for the unit tests: small oracles implemented directly on
// spectra, independent of the library's FFT-based code paths.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "holowave/field.hpp"
#include "holowave/grid.hpp"

namespace hwtest {

using hw::cplx;
using hw::Field;
using hw::Grid;

inline double rel_err(const Field& got, const Field& want) {
    const double scale = std::max(want.l2(), 1e-300);
    return (got - want).l2() / scale;
}

inline double abs_err(const Field& got, const Field& want) { return (got - want).l2(); }

// Random complex field with full spectrum (all modes), fixed seed.
inline Field random_field(const Grid& g, std::uint64_t seed, double scale = 1.0,
                          int band_abs = 0) {
    std::mt19937_64 rng(seed);
    auto u = [&] { return 2.0 * std::ldexp(double(rng() >> 11), -53) - 1.0; };
    std::vector<cplx> c(g.size(), cplx{0.0, 0.0});
    for (int m = 0; m < g.size(); ++m) {
        const int j = g.mode(m);
        if (band_abs > 0 && std::abs(j) > band_abs) continue;
        c[m] = scale * cplx{u(), u()};
    }
    return Field::from_spectrum(g, std::move(c));
}

// Random holomorphic (xi <= 0) field band-limited to modes -band..0.
inline Field random_holo(const Grid& g, std::uint64_t seed, double scale, int band,
                         bool with_mean = false) {
    std::mt19937_64 rng(seed);
    auto u = [&] { return 2.0 * std::ldexp(double(rng() >> 11), -53) - 1.0; };
    std::vector<cplx> c(g.size(), cplx{0.0, 0.0});
    for (int j = -band; j <= 0; ++j) {
        if (j == 0 && !with_mean) continue;
        c[g.bin(j)] = scale * cplx{u(), u()};
    }
    return Field::from_spectrum(g, std::move(c));
}

// O(n^2) circular spectral convolution: the product of two band-limited
// fields, with true integer-mode bookkeeping (no aliasing).  Modes that fall
// outside the representable range are dropped, which is exact as long as the
// inputs are band-limited to |j| <= n/4 combined.
inline Field convolution_oracle(const Field& f, const Field& g) {
    const Grid& grid = f.grid();
    const int n = grid.size();
    std::vector<cplx> out(n, cplx{0.0, 0.0});
    for (int ma = 0; ma < n; ++ma) {
        const cplx ca = f.spectrum()[ma];
        if (std::abs(ca) == 0.0) continue;
        const int ja = grid.mode(ma);
        for (int mb = 0; mb < n; ++mb) {
            const cplx cb = g.spectrum()[mb];
            if (std::abs(cb) == 0.0) continue;
            const int j = ja + grid.mode(mb);
            if (j < -n / 2 || j >= n / 2) continue;
            out[grid.bin(j)] += ca * cb;
        }
    }
    return Field::from_spectrum(grid, std::move(out));
}

// Trapezoid quadrature of samples over the period (exact for band-limited
// integrands sampled above their bandwidth).
inline cplx quadrature(const std::vector<cplx>& samples, double period) {
    cplx acc{0.0, 0.0};
    for (const cplx& v : samples) acc += v;
    return acc * (period / double(samples.size()));
}

// Evaluate a field's Fourier series at an arbitrary point (slow, exact).
inline cplx eval_series(const Field& f, double x) {
    cplx acc{0.0, 0.0};
    for (int m = 0; m < f.size(); ++m) {
        const double xi = f.grid().wavenumber(m);
        acc += f.spectrum()[m] * std::exp(hw::iu * (xi * x));
    }
    return acc;
}

}  // namespace hwtest
