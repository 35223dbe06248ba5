#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Data-parallel pointwise kernels and reductions over complex arrays.
// The primary versions are OpenMP-parallel; kernels::serial keeps a plain
// reference implementation used by the tests and the benchmark target.

namespace hw::kernels {

using cplx = std::complex<double>;

// Below this size the parallel versions run serially; thread startup
// costs more than the loop at desk-scale grid sizes.
inline constexpr std::size_t kParallelThreshold = 1u << 14;

namespace serial {

void multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void conj_multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(cplx alpha, const cplx* x, cplx* out, std::size_t n);
// out[i] = m[i] * x[i] with a real multiplier table.
void apply_real_multiplier(const double* m, const cplx* x, cplx* out, std::size_t n);
void apply_cplx_multiplier(const cplx* m, const cplx* x, cplx* out, std::size_t n);
double sum_abs2(const cplx* x, std::size_t n);
double sum_abs4(const cplx* x, std::size_t n);
double max_abs(const cplx* x, std::size_t n);
double min_abs(const cplx* x, std::size_t n);
// acc[i] += |x[i]|^2 (square-function accumulation)
void accumulate_abs2(const cplx* x, double* acc, std::size_t n);

}  // namespace serial

void multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void conj_multiply(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(cplx alpha, const cplx* x, cplx* out, std::size_t n);
void apply_real_multiplier(const double* m, const cplx* x, cplx* out, std::size_t n);
void apply_cplx_multiplier(const cplx* m, const cplx* x, cplx* out, std::size_t n);
double sum_abs2(const cplx* x, std::size_t n);
double sum_abs4(const cplx* x, std::size_t n);
double max_abs(const cplx* x, std::size_t n);
double min_abs(const cplx* x, std::size_t n);
void accumulate_abs2(const cplx* x, double* acc, std::size_t n);

// Convenience overloads on vectors.
inline std::vector<cplx> multiply(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size());
    multiply(a.data(), b.data(), out.data(), a.size());
    return out;
}

}  // namespace hw::kernels
