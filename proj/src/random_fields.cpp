#include "debye/random_fields.hpp"

#include <cmath>
#include <cstdlib>

namespace debye {

ScalarField random_band_limited(const Grid& g, std::mt19937_64& rng, int kmax) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SpectralField spec(g);
    const int n = g.n_per_axis;
    auto k_of = [n](int i) { return i <= n / 2 ? i : i - n; };
    for (std::size_t i = 0; i < spec.coeff.size(); ++i) {
        const int kx = g.dim == 1 ? k_of(static_cast<int>(i)) : k_of(static_cast<int>(i) / n);
        const int ky = g.dim == 1 ? 0 : k_of(static_cast<int>(i) % n);
        const double re = uni(rng), im = uni(rng);  // fixed draw count per grid
        if ((kx == 0 && ky == 0) || std::abs(kx) > kmax || std::abs(ky) > kmax) continue;
        spec.coeff[i] = {re, im};
    }
    // Hermitian symmetrization
    for (std::size_t i = 0; i < spec.coeff.size(); ++i) {
        std::size_t j;
        if (g.dim == 1) {
            j = (n - i) % static_cast<std::size_t>(n);
        } else {
            const std::size_t ix = i / n, iy = i % n;
            j = ((n - ix) % n) * static_cast<std::size_t>(n) + (n - iy) % n;
        }
        if (i == j)
            spec.coeff[i] = spec.coeff[i].real();
        else if (i < j)
            spec.coeff[j] = std::conj(spec.coeff[i]);
    }
    return to_physical(spec);
}

}  // namespace debye
