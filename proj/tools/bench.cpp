// Benchmark of the parallel kernels and transforms against their serial
// reference twins. Prints wall times and the speedup per kernel.

#include <chrono>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "debye/fft.hpp"
#include "debye/grid.hpp"
#include "debye/kernels.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <class F>
double time_ms(int reps, F&& body) {
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) body();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

void report(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-22s serial %9.3f ms   parallel %9.3f ms   speedup %5.2fx\n", name,
                serial_ms, parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main() {
    const int n = 512;
    const std::size_t len = static_cast<std::size_t>(n) * n;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    std::vector<std::complex<double>> c(len);
    std::vector<double> m(len), a(len), b(len), out(len), y(len);
    for (std::size_t i = 0; i < len; ++i) {
        c[i] = {unif(rng), unif(rng)};
        m[i] = unif(rng);
        a[i] = unif(rng);
        b[i] = unif(rng);
        y[i] = unif(rng);
    }

    const int reps = 20;
    report("apply_multiplier",
           time_ms(reps, [&] { debye::ref::apply_multiplier(c, m); }),
           time_ms(reps, [&] { debye::apply_multiplier(c, m); }));
    report("pointwise_product",
           time_ms(reps, [&] { debye::ref::pointwise_product(a, b, out); }),
           time_ms(reps, [&] { debye::pointwise_product(a, b, out); }));
    report("axpy", time_ms(reps, [&] { debye::ref::axpy(0.5, a, y); }),
           time_ms(reps, [&] { debye::axpy(0.5, a, y); }));

    // Transforms: the serial reference is the direct O(n^2) DFT on one line,
    // the batched 2D transform is timed on its own.
    std::vector<std::complex<double>> line(2048), line_out(2048);
    for (auto& v : line) v = {unif(rng), unif(rng)};
    report("fft line (n=2048)",
           time_ms(3, [&] { debye::ref::dft(line, line_out, -1); }),
           time_ms(3, [&] { debye::fft_inplace(line, -1); }));

    std::vector<std::complex<double>> f(len);
    for (std::size_t i = 0; i < len; ++i) f[i] = {unif(rng), unif(rng)};
    const double fft2_ms = time_ms(5, [&] { debye::fft2_inplace(f, n, -1); });
    std::printf("%-22s parallel %9.3f ms\n", "fft2 (512x512)", fft2_ms);

    // End-to-end spectral round trip on a 2D grid.
    const debye::Grid g = debye::make_grid(2, 256, 1.0);
    debye::ScalarField field(g);
    for (auto& v : field.samples) v = unif(rng);
    const double rt =
        time_ms(10, [&] { field = debye::to_physical(debye::to_spectral(field)); });
    std::printf("%-22s round trip %9.3f ms\n", "to_spectral/physical", rt);
    return 0;
}
