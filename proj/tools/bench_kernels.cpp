// Benchmark of the OpenMP kernels against the serial reference versions.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "holowave/kernels.hpp"

using hw::kernels::cplx;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warm-up
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::stoul(argv[1]) : (1u << 20);
    const int reps = argc > 2 ? std::stoi(argv[2]) : 20;

    std::mt19937_64 rng(42);
    auto rand01 = [&] { return std::ldexp(double(rng() >> 11), -53); };
    std::vector<cplx> a(n), b(n), out(n);
    std::vector<double> m(n), acc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = {rand01(), rand01()};
        b[i] = {rand01(), rand01()};
        m[i] = rand01();
    }

    struct Row {
        const char* name;
        std::function<void()> parallel;
        std::function<void()> serial;
    };
    volatile double sink = 0.0;
    const std::vector<Row> rows = {
        {"multiply",
         [&] { hw::kernels::multiply(a.data(), b.data(), out.data(), n); },
         [&] { hw::kernels::serial::multiply(a.data(), b.data(), out.data(), n); }},
        {"conj_multiply",
         [&] { hw::kernels::conj_multiply(a.data(), b.data(), out.data(), n); },
         [&] { hw::kernels::serial::conj_multiply(a.data(), b.data(), out.data(), n); }},
        {"apply_real_multiplier",
         [&] { hw::kernels::apply_real_multiplier(m.data(), a.data(), out.data(), n); },
         [&] {
             hw::kernels::serial::apply_real_multiplier(m.data(), a.data(), out.data(), n);
         }},
        {"sum_abs2", [&] { sink = hw::kernels::sum_abs2(a.data(), n); },
         [&] { sink = hw::kernels::serial::sum_abs2(a.data(), n); }},
        {"sum_abs4", [&] { sink = hw::kernels::sum_abs4(a.data(), n); },
         [&] { sink = hw::kernels::serial::sum_abs4(a.data(), n); }},
        {"max_abs", [&] { sink = hw::kernels::max_abs(a.data(), n); },
         [&] { sink = hw::kernels::serial::max_abs(a.data(), n); }},
        {"accumulate_abs2",
         [&] { hw::kernels::accumulate_abs2(a.data(), acc.data(), n); },
         [&] { hw::kernels::serial::accumulate_abs2(a.data(), acc.data(), n); }},
    };

    std::printf("n = %zu, %d reps per kernel\n", n, reps);
    std::printf("%-24s %12s %12s %8s\n", "kernel", "omp (ms)", "serial (ms)", "speedup");
    for (const Row& r : rows) {
        const double tp = time_ms(r.parallel, reps);
        const double ts = time_ms(r.serial, reps);
        std::printf("%-24s %12.4f %12.4f %8.2fx\n", r.name, tp, ts, ts / tp);
    }
    (void)sink;
    return 0;
}
