#include "holowave/spectral.hpp"

#include <cmath>

#include "holowave/kernels.hpp"

namespace hw {

namespace {

double spec_norm(const Field& f) {
    return std::sqrt(kernels::sum_abs2(f.spectrum().data(), f.spectrum().size()));
}

void require_zero_mean(const Field& f, const char* where) {
    if (std::abs(f.mean()) > 1e-10 * (spec_norm(f) + 1e-300))
        throw NonZeroMean(std::string(where) + ": field has nonzero mean");
}

}  // namespace

Field hilbert(const Field& f) {
    return apply_multiplier(f, [](double xi) -> cplx {
        if (xi > 0.0) return {0.0, -1.0};
        if (xi < 0.0) return {0.0, 1.0};
        return {0.0, 0.0};
    });
}

Field proj_P(const Field& f) {
    return apply_multiplier(f, [](double xi) -> cplx {
        if (xi < 0.0) return 1.0;
        if (xi > 0.0) return 0.0;
        return 0.5;
    });
}

Field proj_Pbar(const Field& f) {
    return apply_multiplier(f, [](double xi) -> cplx {
        if (xi > 0.0) return 1.0;
        if (xi < 0.0) return 0.0;
        return 0.5;
    });
}

Field deriv(const Field& f) {
    return apply_multiplier(f, [](double xi) -> cplx { return {0.0, xi}; });
}

Field antideriv(const Field& f) {
    require_zero_mean(f, "antideriv");
    return apply_multiplier(f, [](double xi) -> cplx {
        if (xi == 0.0) return 0.0;
        return cplx{0.0, -1.0 / xi};
    });
}

Field frac_deriv(const Field& f, double s) {
    if (s < 0.0) require_zero_mean(f, "frac_deriv");
    return apply_multiplier(f, [s](double xi) -> cplx {
        if (xi == 0.0) return 0.0;
        return std::pow(std::abs(xi), s);
    });
}

Field mul_dealiased(const Field& f, const Field& g) {
    require_same_grid(f, g, "mul_dealiased");
    const Grid& grid = f.grid();
    const int n = grid.size();
    const int m = 2 * n;  // padding factor 2: quadratic products alias-free
    std::vector<cplx> fc(m), gc(m);
    for (int k = 0; k < n; ++k) {
        const int j = grid.mode(k);
        const int big = j >= 0 ? j : j + m;
        fc[big] = f.spectrum()[k];
        gc[big] = g.spectrum()[k];
    }
    std::vector<cplx> fv = fft::backward(fc);
    std::vector<cplx> gv = fft::backward(gc);
    kernels::multiply(fv.data(), gv.data(), fv.data(), m);
    std::vector<cplx> pc = fft::forward(fv);
    std::vector<cplx> out(n);
    for (int k = 0; k < n; ++k) {
        const int j = grid.mode(k);
        const int big = j >= 0 ? j : j + m;
        out[k] = pc[big];
    }
    return Field::from_spectrum(grid, std::move(out));
}

Field reciprocal(const Field& f) {
    const int n = f.size();
    std::vector<cplx> v(n);
    for (int i = 0; i < n; ++i) v[i] = 1.0 / f.values()[i];
    return Field::from_values(f.grid(), std::move(v));
}

Field quotient(const Field& f, const Field& g) { return mul_dealiased(f, reciprocal(g)); }

Field remove_mean(const Field& f) {
    std::vector<cplx> c = f.spectrum();
    c[0] = 0.0;
    return Field::from_spectrum(f.grid(), std::move(c));
}

Field enforce_holomorphic(const Field& f) {
    const Grid& grid = f.grid();
    const int n = grid.size();
    std::vector<cplx> c(n);
    for (int k = 0; k < n; ++k) c[k] = grid.mode(k) < 0 ? f.spectrum()[k] : cplx{};
    return Field::from_spectrum(grid, std::move(c));
}

Field add_constant(const Field& f, cplx c) {
    std::vector<cplx> s = f.spectrum();
    s[0] += c;
    return Field::from_spectrum(f.grid(), std::move(s));
}

}  // namespace hw
