#include "debye/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace debye {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

void fft_inplace(std::span<cd> a, int sign) {
    const std::size_t n = a.size();
    if (!is_pow2(n)) throw std::invalid_argument("fft: length must be a power of two");
    // bit reversal
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const cd wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cd w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

void fft2_inplace(std::span<cd> a, int n, int sign) {
    if (static_cast<std::size_t>(n) * n != a.size())
        throw std::invalid_argument("fft2: size mismatch");
#pragma omp parallel for schedule(static)
    for (int r = 0; r < n; ++r) {
        fft_inplace(a.subspan(static_cast<std::size_t>(r) * n, n), sign);
    }
#pragma omp parallel for schedule(static)
    for (int c = 0; c < n; ++c) {
        std::vector<cd> col(n);
        for (int r = 0; r < n; ++r) col[r] = a[static_cast<std::size_t>(r) * n + c];
        fft_inplace(col, sign);
        for (int r = 0; r < n; ++r) a[static_cast<std::size_t>(r) * n + c] = col[r];
    }
}

namespace ref {

void dft(std::span<const cd> in, std::span<cd> out, int sign) {
    const std::size_t n = in.size();
    if (out.size() != n) throw std::invalid_argument("dft: size mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        cd acc(0.0, 0.0);
        for (std::size_t m = 0; m < n; ++m) {
            const double ang = sign * 2.0 * std::numbers::pi *
                               static_cast<double>(k) * static_cast<double>(m) /
                               static_cast<double>(n);
            acc += in[m] * cd(std::cos(ang), std::sin(ang));
        }
        out[k] = acc;
    }
}

}  // namespace ref

}  // namespace debye
