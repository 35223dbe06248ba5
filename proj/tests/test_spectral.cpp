#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "helpers.hpp"
#include "holowave/field.hpp"
#include "holowave/grid.hpp"
#include "holowave/initdata.hpp"
#include "holowave/spectral.hpp"

using namespace hw;
using namespace hwtest;

namespace {

Field mode_field(const Grid& g, int j, cplx amp = {1.0, 0.0}) {
    std::vector<cplx> c(g.size(), cplx{0.0, 0.0});
    c[g.bin(j)] = amp;
    return Field::from_spectrum(g, std::move(c));
}

const Grid g128(128);

}  // namespace

TEST_CASE("grid validation and layout") {
    CHECK_THROWS_AS(Grid(15), std::invalid_argument);
    CHECK_THROWS_AS(Grid(14), std::invalid_argument);
    CHECK_THROWS_AS(Grid(32, -1.0), std::invalid_argument);
    const Grid g(32, 4.0);
    CHECK(g.mode(0) == 0);
    CHECK(g.mode(15) == 15);
    CHECK(g.mode(16) == -16);
    CHECK(g.mode(31) == -1);
    CHECK(g.bin(-1) == 31);
    CHECK(g.wavenumber(g.bin(-2)) == doctest::Approx(-2.0 * kTwoPi / 4.0));
    CHECK(g.max_wavenumber() == doctest::Approx(16.0 * kTwoPi / 4.0));
}

TEST_CASE("fft roundtrip and Plancherel") {
    const Field f = random_field(g128, 7);
    const Field back = Field::from_values(g128, fft::backward(fft::forward(f.values())));
    CHECK(abs_err(back, f) / f.l2() < 1e-13);
    // Plancherel: physical-space and spectral L2 agree.
    CHECK(std::abs(f.l2() - f.spectral_l2()) / f.l2() < 1e-12);
}

TEST_CASE("projections on single modes") {
    const Field em1 = mode_field(g128, -1);
    const Field ep1 = mode_field(g128, 1);
    const Field twocos = em1 + ep1;  // 2 cos(alpha)

    CHECK(abs_err(proj_P(em1), em1) < 1e-13);          // negative mode passes
    CHECK(proj_P(ep1).l2() < 1e-13);                   // positive mode killed
    CHECK(abs_err(proj_P(twocos), em1) < 1e-13);       // P(2 cos a) = e^{-ia}
    CHECK(proj_Pbar(em1).l2() < 1e-13);
    // zero mode is halved
    const Field one = mode_field(g128, 0);
    CHECK(abs_err(proj_P(one), cplx{0.5, 0.0} * one) < 1e-14);
}

TEST_CASE("P + Pbar = I and multiplier relations on random fields") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const Field f = random_field(g128, seed);
        CHECK((proj_P(f) + proj_Pbar(f) - f).linf() < 1e-12);
        // conj(P(conj f)) = Pbar(f); needs the unpaired Nyquist mode -n/2
        // absent, since conjugation has no +n/2 bin to send it to
        const Field fb = random_field(g128, seed, 1.0, 63);
        CHECK(abs_err(proj_P(fb.conj()).conj(), proj_Pbar(fb)) < 1e-12);
        // P is a projection; P Pbar = 0 on zero-mean fields
        const Field f0 = remove_mean(f);
        CHECK(abs_err(proj_P(proj_P(f0)), proj_P(f0)) < 1e-12);
        CHECK(proj_P(proj_Pbar(f0)).l2() < 1e-12);
    }
}

TEST_CASE("hilbert transform") {
    const Field f0 = remove_mean(random_field(g128, 3));
    CHECK(abs_err(hilbert(hilbert(f0)), -f0) / f0.l2() < 1e-13);
    // H e^{-ia} = i e^{-ia} (multiplier -i sgn(xi) at xi = -1)
    const Field em1 = mode_field(g128, -1);
    CHECK(abs_err(hilbert(em1), iu * em1) < 1e-13);
}

TEST_CASE("derivatives") {
    // deriv(sin) = cos
    std::vector<cplx> sv(g128.size()), cv(g128.size());
    for (int i = 0; i < g128.size(); ++i) {
        sv[i] = std::sin(g128.point(i));
        cv[i] = std::cos(g128.point(i));
    }
    const Field s = Field::from_values(g128, std::move(sv));
    const Field c = Field::from_values(g128, std::move(cv));
    CHECK(abs_err(deriv(s), c) < 1e-13);

    // deriv / antideriv inverse pair on zero-mean fields
    const Field f0 = remove_mean(random_field(g128, 11));
    CHECK(abs_err(deriv(antideriv(f0)), f0) / f0.l2() < 1e-12);
    CHECK(abs_err(antideriv(deriv(f0)), f0) / f0.l2() < 1e-12);
    CHECK_THROWS_AS(antideriv(add_constant(f0, 1.0)), NonZeroMean);

    // |D|^{1/2} e^{-4ia} = 2 e^{-4ia}
    const Field em4 = mode_field(g128, -4);
    CHECK(abs_err(frac_deriv(em4, 0.5), 2.0 * em4) < 1e-13);
    CHECK_THROWS_AS(frac_deriv(add_constant(f0, 1.0), -0.5), NonZeroMean);
}

TEST_CASE("frac_deriv semigroup") {
    const Field f0 = remove_mean(random_field(g128, 13));
    const double exps[] = {0.5, -0.5, 1.0, -1.0};
    for (double s : exps)
        for (double t : exps) {
            const Field lhs = frac_deriv(frac_deriv(f0, s), t);
            const Field rhs = frac_deriv(f0, s + t);
            CHECK(abs_err(lhs, rhs) / f0.l2() < 1e-11);
        }
}

TEST_CASE("dealiased products") {
    const Field f = random_field(g128, 17, 1.0, 40);  // band-limited to n/3
    const Field one = mode_field(g128, 0);
    CHECK(abs_err(mul_dealiased(f, one), f) / f.l2() < 1e-13);

    const Field em1 = mode_field(g128, -1);
    CHECK(abs_err(mul_dealiased(em1, em1), mode_field(g128, -2)) < 1e-13);

    // random band-limited pair vs O(n^2) convolution oracle
    const Field a = random_field(g128, 19, 1.0, 42);
    const Field b = random_field(g128, 23, 1.0, 42);
    CHECK(rel_err(mul_dealiased(a, b), convolution_oracle(a, b)) < 1e-12);
}

TEST_CASE("reciprocal and quotient") {
    const Field em1 = mode_field(g128, -1, cplx{0.1, 0.05});
    const Field f = add_constant(em1, 1.0);  // bounded away from zero
    const Field r = reciprocal(f);
    CHECK(abs_err(mul_dealiased(f, r), mode_field(g128, 0)) < 1e-12);
    const Field num = random_field(g128, 29, 1.0, 20);
    CHECK(rel_err(quotient(num, f), mul_dealiased(num, r)) < 1e-12);
}

TEST_CASE("real/imag parts and enforce_holomorphic") {
    const Field f = random_field(g128, 31);
    CHECK(abs_err(real_part(f) + iu * imag_part(f), f) / f.l2() < 1e-13);
    const Field h = enforce_holomorphic(f);
    CHECK(h.holomorphic_defect() < 1e-14);
    CHECK(std::abs(h.mean()) < 1e-14);
    CHECK(abs_err(h, remove_mean(proj_P(f))) < 1e-13);
}

TEST_CASE("grid mismatch is rejected") {
    const Field a = random_field(g128, 1);
    const Field b = random_field(Grid(64), 1);
    CHECK_THROWS_AS(a + b, GridMismatch);
    CHECK_THROWS_AS(mul_dealiased(a, b), GridMismatch);
}

TEST_CASE("initial data families") {
    const Field sm = single_mode(g128, -3, cplx{0.0, 0.5});
    CHECK(std::abs(sm.coeff(-3) - cplx{0.0, 0.5}) < 1e-15);
    CHECK(sm.holomorphic_defect() == 0.0);
    CHECK(std::abs(sm.mean()) == 0.0);

    const Field rb = random_bandlimited(g128, 42, 1e-2, 8);
    CHECK(rb.linf() == doctest::Approx(1e-2).epsilon(1e-12));
    CHECK(rb.holomorphic_defect() < 1e-15);
    CHECK(std::abs(rb.mean()) < 1e-18);
    for (int m = 0; m < g128.size(); ++m) {
        const int j = g128.mode(m);
        if (j < -8 || j >= 0) CHECK(std::abs(rb.spectrum()[m]) == 0.0);
    }
    // bit-reproducible
    const Field rb2 = random_bandlimited(g128, 42, 1e-2, 8);
    CHECK(abs_err(rb, rb2) == 0.0);
}
