#include "holowave/initdata.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace hw {

Field single_mode(const Grid& g, int m, cplx amp) {
    if (m >= 0 || m < -g.size() / 2) throw std::invalid_argument("single_mode: mode out of range");
    std::vector<cplx> c(g.size());
    c[g.bin(m)] = amp;
    return Field::from_spectrum(g, std::move(c));
}

namespace {
double unit_double(std::mt19937_64& rng) {
    // uniform in [-1, 1), built from the raw 64-bit stream
    return std::ldexp(static_cast<double>(rng() >> 11), -52) - 1.0;
}
}  // namespace

Field random_bandlimited(const Grid& g, std::uint64_t seed, double amplitude, int band) {
    if (band < 1 || band > g.size() / 2 - 1)
        throw std::invalid_argument("random_bandlimited: band out of range");
    std::mt19937_64 rng(seed);
    std::vector<cplx> c(g.size());
    for (int j = -band; j <= -1; ++j) {
        const double re = unit_double(rng);
        const double im = unit_double(rng);
        c[g.bin(j)] = cplx{re, im};
    }
    Field f = Field::from_spectrum(g, std::move(c));
    const double sup = f.linf();
    return (sup > 0.0 ? amplitude / sup : 0.0) * f;
}

}  // namespace hw
