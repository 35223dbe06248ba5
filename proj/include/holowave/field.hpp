#pragma once

#include <complex>
#include <vector>

#include "holowave/errors.hpp"
#include "holowave/grid.hpp"

namespace hw {

using cplx = std::complex<double>;
inline constexpr cplx iu{0.0, 1.0};

// Complex periodic function carried in both physical and spectral form.
// Both representations are computed at construction, so a Field is an
// immutable value and safe to share across threads.
//
// Convention: f(x) = sum_j c_j e^{i xi_j x}, spectrum stored in FFT bin
// order (see Grid).  ||f||_{L^2}^2 = sum |values|^2 dx = L sum |c_j|^2.
class Field {
  public:
    Field() = default;

    static Field from_values(const Grid& g, std::vector<cplx> v);
    static Field from_spectrum(const Grid& g, std::vector<cplx> c);
    static Field zero(const Grid& g);

    const Grid& grid() const { return grid_; }
    int size() const { return grid_.size(); }
    bool empty() const { return grid_.size() == 0; }

    const std::vector<cplx>& values() const { return values_; }
    const std::vector<cplx>& spectrum() const { return spectrum_; }

    cplx value(int i) const { return values_[i]; }
    // Coefficient of integer mode j.
    cplx coeff(int j) const { return spectrum_[grid_.bin(j)]; }
    cplx mean() const { return spectrum_.empty() ? cplx{} : spectrum_[0]; }

    Field conj() const;

    // Norms of the samples.
    double l2() const;    // (sum |f_i|^2 dx)^{1/2}
    double l4() const;    // (sum |f_i|^4 dx)^{1/4}
    double linf() const;  // max |f_i|
    double min_abs() const;
    double spectral_l2() const;  // (L sum |c_j|^2)^{1/2}, Plancherel partner of l2()
    bool finite() const;

    // Relative positive-frequency content; 0 for a holomorphic field.
    double holomorphic_defect() const;

    friend Field operator+(const Field& a, const Field& b);
    friend Field operator-(const Field& a, const Field& b);
    friend Field operator*(cplx s, const Field& f);
    friend Field operator*(double s, const Field& f);
    Field operator-() const { return cplx{-1.0, 0.0} * *this; }

  private:
    Grid grid_;
    std::vector<cplx> values_;
    std::vector<cplx> spectrum_;
};

namespace fft {
// Unnormalized DFT pair behind a per-size plan cache (planning is guarded
// by a mutex, execution is concurrent).  forward computes coefficients
// scaled by 1/n; backward reconstructs samples.
std::vector<cplx> forward(const std::vector<cplx>& values);
std::vector<cplx> backward(const std::vector<cplx>& spectrum);
}  // namespace fft

inline void require_same_grid(const Field& a, const Field& b, const char* where) {
    if (a.grid() != b.grid()) throw GridMismatch(std::string(where) + ": grids differ");
}

}  // namespace hw
