#include "debye/kernels.hpp"

#include <stdexcept>

namespace debye {

void apply_multiplier(std::span<std::complex<double>> c, std::span<const double> m) {
    if (c.size() != m.size()) throw std::invalid_argument("apply_multiplier: size mismatch");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(c.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) c[i] *= m[i];
}

void pointwise_product(std::span<const double> a, std::span<const double> b,
                       std::span<double> out) {
    if (a.size() != b.size() || a.size() != out.size())
        throw std::invalid_argument("pointwise_product: size mismatch");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void axpy(double s, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) y[i] += s * x[i];
}

namespace ref {

void apply_multiplier(std::span<std::complex<double>> c, std::span<const double> m) {
    if (c.size() != m.size()) throw std::invalid_argument("apply_multiplier: size mismatch");
    for (std::size_t i = 0; i < c.size(); ++i) c[i] *= m[i];
}

void pointwise_product(std::span<const double> a, std::span<const double> b,
                       std::span<double> out) {
    if (a.size() != b.size() || a.size() != out.size())
        throw std::invalid_argument("pointwise_product: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void axpy(double s, std::span<const double> x, std::span<double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: size mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

}  // namespace ref

}  // namespace debye
