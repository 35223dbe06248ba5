#pragma once

#include <cstdint>

#include "holowave/field.hpp"

namespace hw {

// Single negative mode: amp * e^{i m alpha}, m < 0.
Field single_mode(const Grid& g, int m, cplx amp);

// Random holomorphic band-limited field with modes -band..-1.  Coefficients
// are drawn from the raw mt19937_64 stream (not a std distribution) so runs
// are bit-reproducible across platforms; the result is scaled to have
// sup-norm equal to amplitude.
Field random_bandlimited(const Grid& g, std::uint64_t seed, double amplitude, int band);

}  // namespace hw
