#pragma once

#include "holowave/field.hpp"

namespace hw {

// Fourier multiplier operators on periodic Fields.  Zero-mode conventions:
// H, |D|^s (s <= 0) and the antiderivative annihilate the mean, P halves it.

Field hilbert(const Field& f);           // -i sgn(xi)
Field proj_P(const Field& f);            // 1 on xi<0, 1/2 at 0, 0 on xi>0
Field proj_Pbar(const Field& f);         // mirror of proj_P
Field deriv(const Field& f);             // i xi
Field antideriv(const Field& f);         // 1/(i xi); throws NonZeroMean
Field frac_deriv(const Field& f, double s);  // |xi|^s; throws NonZeroMean for s<0

// Generic multiplier, m(xi) applied coefficientwise.
template <class Fn>
Field apply_multiplier(const Field& f, Fn&& m) {
    const int n = f.size();
    std::vector<cplx> c(n);
    for (int k = 0; k < n; ++k) c[k] = m(f.grid().wavenumber(k)) * f.spectrum()[k];
    return Field::from_spectrum(f.grid(), std::move(c));
}

// Pointwise product, zero-padded so quadratic aliasing vanishes exactly.
Field mul_dealiased(const Field& f, const Field& g);

// Pointwise reciprocal 1/f; the caller guards inf|f| > 0.
Field reciprocal(const Field& f);

// mul_dealiased(f, 1/g).
Field quotient(const Field& f, const Field& g);

// f minus its mean.
Field remove_mean(const Field& f);

// P-project and zero the mean; used to re-enforce the holomorphy invariant
// after nonlinear operations.
Field enforce_holomorphic(const Field& f);

// Shift all samples by a constant.
Field add_constant(const Field& f, cplx c);

inline Field imag_part(const Field& f) { return cplx{0.0, -0.5} * (f - f.conj()); }
inline Field real_part(const Field& f) { return 0.5 * (f + f.conj()); }

}  // namespace hw
