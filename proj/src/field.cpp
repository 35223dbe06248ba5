#include "holowave/field.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>

#include "holowave/kernels.hpp"

namespace hw {

namespace fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// Plans are created once per transform size and reused; fftw_execute_dft
// on fresh arrays is thread-safe, planning is not.
PlanPair& plans_for(std::size_t n) {
    static std::mutex mtx;
    static std::map<std::size_t, PlanPair> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<cplx> buf(n);
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    PlanPair pp;
    pp.fwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    pp.bwd = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                              FFTW_ESTIMATE | FFTW_UNALIGNED);
    return cache.emplace(n, pp).first->second;
}

}  // namespace

std::vector<cplx> forward(const std::vector<cplx>& values) {
    const std::size_t n = values.size();
    std::vector<cplx> out(values);
    auto& pp = plans_for(n);
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(pp.fwd, p, p);
    const double inv = 1.0 / static_cast<double>(n);
    kernels::scale(inv, out.data(), out.data(), n);
    return out;
}

std::vector<cplx> backward(const std::vector<cplx>& spectrum) {
    const std::size_t n = spectrum.size();
    std::vector<cplx> out(spectrum);
    auto& pp = plans_for(n);
    auto* p = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(pp.bwd, p, p);
    return out;
}

}  // namespace fft

Field Field::from_values(const Grid& g, std::vector<cplx> v) {
    Field f;
    f.grid_ = g;
    f.spectrum_ = fft::forward(v);
    f.values_ = std::move(v);
    return f;
}

Field Field::from_spectrum(const Grid& g, std::vector<cplx> c) {
    Field f;
    f.grid_ = g;
    f.values_ = fft::backward(c);
    f.spectrum_ = std::move(c);
    return f;
}

Field Field::zero(const Grid& g) {
    Field f;
    f.grid_ = g;
    f.values_.assign(g.size(), cplx{});
    f.spectrum_.assign(g.size(), cplx{});
    return f;
}

Field Field::conj() const {
    // Conjugation flips the spectrum: conj(f)^(xi) = conj(f^(-xi)).
    const int n = grid_.size();
    Field f;
    f.grid_ = grid_;
    f.values_.resize(n);
    f.spectrum_.resize(n);
    for (int i = 0; i < n; ++i) f.values_[i] = std::conj(values_[i]);
    for (int m = 0; m < n; ++m) {
        const int mm = (n - m) % n;
        f.spectrum_[m] = std::conj(spectrum_[mm]);
    }
    return f;
}

double Field::l2() const {
    return std::sqrt(kernels::sum_abs2(values_.data(), values_.size()) * grid_.dx());
}

double Field::l4() const {
    return std::pow(kernels::sum_abs4(values_.data(), values_.size()) * grid_.dx(), 0.25);
}

double Field::linf() const { return kernels::max_abs(values_.data(), values_.size()); }

double Field::min_abs() const { return kernels::min_abs(values_.data(), values_.size()); }

double Field::spectral_l2() const {
    return std::sqrt(kernels::sum_abs2(spectrum_.data(), spectrum_.size()) * grid_.period());
}

bool Field::finite() const {
    for (const auto& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

double Field::holomorphic_defect() const {
    const int n = grid_.size();
    double pos = 0.0, all = 0.0;
    for (int m = 0; m < n; ++m) {
        const double a2 = std::norm(spectrum_[m]);
        all += a2;
        if (grid_.mode(m) > 0) pos += a2;
    }
    return all > 0.0 ? std::sqrt(pos / all) : 0.0;
}

Field operator+(const Field& a, const Field& b) {
    require_same_grid(a, b, "Field::operator+");
    const int n = a.size();
    Field f;
    f.grid_ = a.grid_;
    f.values_.resize(n);
    f.spectrum_.resize(n);
    for (int i = 0; i < n; ++i) f.values_[i] = a.values_[i] + b.values_[i];
    for (int i = 0; i < n; ++i) f.spectrum_[i] = a.spectrum_[i] + b.spectrum_[i];
    return f;
}

Field operator-(const Field& a, const Field& b) {
    require_same_grid(a, b, "Field::operator-");
    const int n = a.size();
    Field f;
    f.grid_ = a.grid_;
    f.values_.resize(n);
    f.spectrum_.resize(n);
    for (int i = 0; i < n; ++i) f.values_[i] = a.values_[i] - b.values_[i];
    for (int i = 0; i < n; ++i) f.spectrum_[i] = a.spectrum_[i] - b.spectrum_[i];
    return f;
}

Field operator*(cplx s, const Field& f) {
    const int n = f.size();
    Field out;
    out.grid_ = f.grid_;
    out.values_.resize(n);
    out.spectrum_.resize(n);
    kernels::scale(s, f.values_.data(), out.values_.data(), n);
    kernels::scale(s, f.spectrum_.data(), out.spectrum_.data(), n);
    return out;
}

Field operator*(double s, const Field& f) { return cplx{s, 0.0} * f; }

}  // namespace hw
