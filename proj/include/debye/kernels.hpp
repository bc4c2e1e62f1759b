#ifndef DEBYE_KERNELS_HPP
#define DEBYE_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <span>

namespace debye {

// Data-parallel inner loops shared by the propagators. Each kernel has a
// serial twin under ref:: used by the kernel tests and the benchmark.

/// c[i] *= m[i]
void apply_multiplier(std::span<std::complex<double>> c, std::span<const double> m);

/// out[i] = a[i] * b[i]
void pointwise_product(std::span<const double> a, std::span<const double> b,
                       std::span<double> out);

/// y[i] += s * x[i]
void axpy(double s, std::span<const double> x, std::span<double> y);

namespace ref {

void apply_multiplier(std::span<std::complex<double>> c, std::span<const double> m);
void pointwise_product(std::span<const double> a, std::span<const double> b,
                       std::span<double> out);
void axpy(double s, std::span<const double> x, std::span<double> y);

}  // namespace ref

}  // namespace debye

#endif
