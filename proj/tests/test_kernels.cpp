#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "holowave/kernels.hpp"

using hw::kernels::cplx;
namespace k = hw::kernels;
namespace ks = hw::kernels::serial;

namespace {

std::vector<cplx> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& x : v) x = cplx{u(rng), u(rng)};
    return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// Exercise both the serial fallback path and the parallel path.
const std::size_t kSizes[] = {1000, k::kParallelThreshold + 4096};

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
    for (std::size_t n : kSizes) {
        const auto a = random_vec(n, 1 + n);
        const auto b = random_vec(n, 2 + n);
        std::vector<cplx> got(n), want(n);

        k::multiply(a.data(), b.data(), got.data(), n);
        ks::multiply(a.data(), b.data(), want.data(), n);
        CHECK(max_diff(got, want) == 0.0);

        k::conj_multiply(a.data(), b.data(), got.data(), n);
        ks::conj_multiply(a.data(), b.data(), want.data(), n);
        CHECK(max_diff(got, want) == 0.0);

        const cplx alpha{0.3, -1.7};
        got = b;
        want = b;
        k::axpy(alpha, a.data(), got.data(), n);
        ks::axpy(alpha, a.data(), want.data(), n);
        CHECK(max_diff(got, want) == 0.0);

        k::scale(alpha, a.data(), got.data(), n);
        ks::scale(alpha, a.data(), want.data(), n);
        CHECK(max_diff(got, want) == 0.0);

        std::vector<double> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = std::cos(double(i));
        k::apply_real_multiplier(m.data(), a.data(), got.data(), n);
        ks::apply_real_multiplier(m.data(), a.data(), want.data(), n);
        CHECK(max_diff(got, want) == 0.0);

        k::apply_cplx_multiplier(b.data(), a.data(), got.data(), n);
        ks::apply_cplx_multiplier(b.data(), a.data(), want.data(), n);
        CHECK(max_diff(got, want) == 0.0);

        // Reductions: parallel summation may reassociate, allow rounding slack.
        CHECK(std::abs(k::sum_abs2(a.data(), n) - ks::sum_abs2(a.data(), n)) <
              1e-12 * ks::sum_abs2(a.data(), n));
        CHECK(std::abs(k::sum_abs4(a.data(), n) - ks::sum_abs4(a.data(), n)) <
              1e-12 * ks::sum_abs4(a.data(), n));
        CHECK(k::max_abs(a.data(), n) == ks::max_abs(a.data(), n));
        CHECK(k::min_abs(a.data(), n) == ks::min_abs(a.data(), n));

        std::vector<double> acc1(n, 0.5), acc2(n, 0.5);
        k::accumulate_abs2(a.data(), acc1.data(), n);
        ks::accumulate_abs2(a.data(), acc2.data(), n);
        double md = 0.0;
        for (std::size_t i = 0; i < n; ++i) md = std::max(md, std::abs(acc1[i] - acc2[i]));
        CHECK(md == 0.0);
    }
}

TEST_CASE("serial kernels match direct evaluation") {
    const std::size_t n = 257;
    const auto a = random_vec(n, 11);
    const auto b = random_vec(n, 13);
    std::vector<cplx> out(n);
    ks::multiply(a.data(), b.data(), out.data(), n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(out[i] - a[i] * b[i]) == 0.0);
    ks::conj_multiply(a.data(), b.data(), out.data(), n);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(out[i] - std::conj(a[i]) * b[i]) == 0.0);

    double s2 = 0.0, s4 = 0.0, mx = 0.0, mn = 1e300;
    for (const cplx& x : a) {
        const double t = std::norm(x);
        s2 += t;
        s4 += t * t;
        mx = std::max(mx, std::abs(x));
        mn = std::min(mn, std::abs(x));
    }
    CHECK(ks::sum_abs2(a.data(), n) == doctest::Approx(s2).epsilon(1e-14));
    CHECK(ks::sum_abs4(a.data(), n) == doctest::Approx(s4).epsilon(1e-14));
    CHECK(ks::max_abs(a.data(), n) == doctest::Approx(mx).epsilon(1e-14));
    CHECK(ks::min_abs(a.data(), n) == doctest::Approx(mn).epsilon(1e-14));
}
