#include "holowave/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace hw::kernels {

namespace serial {

void multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void conj_multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::conj(a[i]) * b[i];
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scale(cplx alpha, const cplx* x, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = alpha * x[i];
}

void apply_real_multiplier(const double* m, const cplx* x, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] * x[i];
}

void apply_cplx_multiplier(const cplx* m, const cplx* x, cplx* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = m[i] * x[i];
}

double sum_abs2(const cplx* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += std::norm(x[i]);
    return s;
}

double sum_abs4(const cplx* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a2 = std::norm(x[i]);
        s += a2 * a2;
    }
    return s;
}

double max_abs(const cplx* x, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s = std::max(s, std::norm(x[i]));
    return std::sqrt(s);
}

double min_abs(const cplx* x, std::size_t n) {
    double s = n ? std::norm(x[0]) : 0.0;
    for (std::size_t i = 1; i < n; ++i) s = std::min(s, std::norm(x[i]));
    return std::sqrt(s);
}

void accumulate_abs2(const cplx* x, double* acc, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) acc[i] += std::norm(x[i]);
}

}  // namespace serial

#define HW_OMP_FOR _Pragma("omp parallel for if (n >= kParallelThreshold)")

void multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) out[i] = a[i] * b[i];
}

void conj_multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        out[i] = std::conj(a[i]) * b[i];
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) y[i] += alpha * x[i];
}

void scale(cplx alpha, const cplx* x, cplx* out, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) out[i] = alpha * x[i];
}

void apply_real_multiplier(const double* m, const cplx* x, cplx* out, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) out[i] = m[i] * x[i];
}

void apply_cplx_multiplier(const cplx* m, const cplx* x, cplx* out, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) out[i] = m[i] * x[i];
}

double sum_abs2(const cplx* x, std::size_t n) {
    double s = 0.0;
#pragma omp parallel for reduction(+ : s) if (n >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) s += std::norm(x[i]);
    return s;
}

double sum_abs4(const cplx* x, std::size_t n) {
    double s = 0.0;
#pragma omp parallel for reduction(+ : s) if (n >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        const double a2 = std::norm(x[i]);
        s += a2 * a2;
    }
    return s;
}

double max_abs(const cplx* x, std::size_t n) {
    double s = 0.0;
#pragma omp parallel for reduction(max : s) if (n >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        s = std::max(s, std::norm(x[i]));
    return std::sqrt(s);
}

double min_abs(const cplx* x, std::size_t n) {
    if (n == 0) return 0.0;
    double s = std::norm(x[0]);
#pragma omp parallel for reduction(min : s) if (n >= kParallelThreshold)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        s = std::min(s, std::norm(x[i]));
    return std::sqrt(s);
}

void accumulate_abs2(const cplx* x, double* acc, std::size_t n) {
    HW_OMP_FOR
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) acc[i] += std::norm(x[i]);
}

#undef HW_OMP_FOR

}  // namespace hw::kernels
