#ifndef DEBYE_FFT_HPP
#define DEBYE_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>

namespace debye {

using cd = std::complex<double>;

/// In-place radix-2 complex FFT, length a power of two.
/// sign = -1 forward (e^{-2pi i km/n}), +1 inverse (unscaled).
void fft_inplace(std::span<cd> a, int sign);

/// Batched transform of an n x n row-major complex array along both axes.
/// Rows/columns are independent and run in parallel.
void fft2_inplace(std::span<cd> a, int n, int sign);

namespace ref {

/// O(n^2) direct DFT, serial. Reference used by tests and the benchmark.
void dft(std::span<const cd> in, std::span<cd> out, int sign);

}  // namespace ref

}  // namespace debye

#endif
