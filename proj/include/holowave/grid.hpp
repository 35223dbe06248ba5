#pragma once

#include <cmath>
#include <stdexcept>

namespace hw {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform periodic grid with n collocation points on [0, L).
// Spectral bins follow the FFT layout: bin m holds integer mode
// j = m for m < n/2 and j = m - n otherwise, so j ranges over
// {-n/2, ..., n/2 - 1} and the wavenumber is xi_j = 2*pi*j/L.
class Grid {
  public:
    Grid() : n_(0), period_(kTwoPi) {}
    explicit Grid(int n, double period = kTwoPi) : n_(n), period_(period) {
        if (n < 16 || n % 2 != 0)
            throw std::invalid_argument("Grid: n_points must be even and >= 16");
        if (!(period > 0.0))
            throw std::invalid_argument("Grid: period must be positive");
    }

    int size() const { return n_; }
    double period() const { return period_; }
    double dx() const { return period_ / n_; }
    double point(int i) const { return period_ * i / n_; }

    // Integer mode index j for spectral bin m.
    int mode(int m) const { return m < n_ / 2 ? m : m - n_; }
    // Spectral bin for integer mode j in [-n/2, n/2-1].
    int bin(int j) const { return j >= 0 ? j : j + n_; }
    double wavenumber(int m) const { return kTwoPi * mode(m) / period_; }
    double max_wavenumber() const { return kTwoPi * (n_ / 2) / period_; }

    bool operator==(const Grid& o) const { return n_ == o.n_ && period_ == o.period_; }
    bool operator!=(const Grid& o) const { return !(*this == o); }

  private:
    int n_;
    double period_;
};

}  // namespace hw
