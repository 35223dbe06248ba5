#pragma once

#include <vector>

#include "holowave/field.hpp"

namespace hw {

// Littlewood-Paley decomposition on the grid's wavenumbers.  Raw windows
// are raised cosines in log2 frequency, supported in |xi| in
// [2^{k-1}, 2^{k+1}], renormalized so that sum_k phi_k(xi) = 1 exactly at
// every nonzero grid wavenumber.  The zero mode belongs to no block.
class LPBasis {
  public:
    explicit LPBasis(const Grid& g);

    const Grid& grid() const { return grid_; }
    int k_min() const { return k_min_; }
    int k_max() const { return k_max_; }

    // Normalized window phi_k at spectral bin m.
    double window(int k, int bin) const { return windows_[k - k_min_][bin]; }
    // phi_k at an arbitrary wavenumber of this grid (by integer mode j).
    double window_at_mode(int k, int j) const { return window(k, grid_.bin(j)); }

    Field block(const Field& f, int k) const;                 // P_k f
    Field below(const Field& f, int k_excl) const;            // sum_{j < k_excl} P_j f + mean
    Field square_function(const Field& f, int k_floor) const; // S_{>k_floor} f, real-valued

  private:
    Grid grid_;
    int k_min_ = 0;
    int k_max_ = 0;
    std::vector<std::vector<double>> windows_;  // [k - k_min][bin]
};

struct ParaTriple {
    Field low_high;  // T_f g
    Field high_low;  // T_g f
    Field balanced;  // Pi(f, g)
};

// Paraproduct decomposition fg = T_f g + T_g f + Pi(f,g) with the block
// offset f_{<k-4} g_k and the balanced band |k-l| < 4.  Means are handled
// by treating the mean as the lowest-frequency block: mean(f)*(g-mean g)
// joins T_f g, mean(g)*(f-mean f) joins T_g f, and mean(f)*mean(g) joins
// Pi, so the triple sums to the dealiased product exactly.
ParaTriple paraproducts(const LPBasis& basis, const Field& f, const Field& g);

// Just the low-high piece T_f g.
Field parap_low_high(const LPBasis& basis, const Field& f, const Field& g);

// [P, f] g = P(fg) - f P(g), products dealiased.
Field commutator_P(const Field& f, const Field& g);

inline constexpr int kParaOffset = 4;

// Shared per-grid basis cache (mutex-guarded construction, read-mostly).
const LPBasis& basis_for(const Grid& g);

}  // namespace hw
