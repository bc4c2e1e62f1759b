#include "debye/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "debye/fft.hpp"
#include "debye/kernels.hpp"

namespace debye {

HeatMultiplier make_heat_multiplier(const Grid& grid, double t) {
    if (t < 0.0) throw std::invalid_argument("heat multiplier: t must be nonnegative");
    HeatMultiplier m;
    m.grid = grid;
    m.t = t;
    m.values = frequency_sq(grid);
    for (auto& v : m.values) v = std::exp(-v * t);
    return m;
}

ScalarField heat_propagate(const ScalarField& u0, double t) {
    const HeatMultiplier m = make_heat_multiplier(u0.grid, t);
    SpectralField spec = to_spectral(u0);
    apply_multiplier(spec.coeff, m.values);
    return to_physical(spec);
}

double phi1(double z) {
    if (std::abs(z) < 1e-4)
        return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z / 120.0)));
    return std::expm1(z) / z;
}

double phi2(double z) {
    if (std::abs(z) < 1e-4)
        return 0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0 + z * (1.0 / 120.0 + z / 720.0)));
    return (std::expm1(z) - z) / (z * z);
}

SpaceTimeField duhamel(const ScalarField& u0, const SpaceTimeField& source) {
    source.validate();
    if (!(u0.grid == source.grid)) throw std::invalid_argument("duhamel: grid mismatch");
    const double h = source.dt();
    const std::vector<double> lam = frequency_sq(u0.grid);
    const std::size_t sz = u0.grid.size();

    // per-frequency step weights for a piecewise-linear source
    std::vector<double> decay(sz), w_begin(sz), w_end(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        const double z = -lam[i] * h;
        decay[i] = std::exp(z);
        const double p2 = phi2(z);
        w_begin[i] = h * (phi1(z) - p2);
        w_end[i] = h * p2;
    }

    std::vector<SpectralField> fhat;
    fhat.reserve(source.n_frames());
    for (const auto& f : source.frames) fhat.push_back(to_spectral(f));

    SpaceTimeField out;
    out.grid = u0.grid;
    out.times = source.times;
    out.frames.reserve(source.n_frames());
    SpectralField u = to_spectral(u0);
    out.frames.push_back(to_physical(u));
    for (std::size_t k = 0; k + 1 < source.n_frames(); ++k) {
        const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(sz);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            u.coeff[i] = decay[i] * u.coeff[i] + w_begin[i] * fhat[k].coeff[i] +
                         w_end[i] * fhat[k + 1].coeff[i];
        out.frames.push_back(to_physical(u));
    }
    return out;
}

SpaceTimeField heat_flow(const ScalarField& u0, const std::vector<double>& times) {
    SpaceTimeField zero_src;
    zero_src.grid = u0.grid;
    zero_src.times = times;
    zero_src.frames.assign(times.size(), ScalarField(u0.grid));
    return duhamel(u0, zero_src);
}

double smoothing_probe(const ScalarField& u0, double sigma, double T, double q,
                       const DyadicFilterBank& bank) {
    if (!(q == 1.0 || q == 2.0 || std::isinf(q)))
        throw std::invalid_argument("smoothing_probe: q must be 1, 2 or inf");
    const double denom = detail::hs_norm(to_spectral(u0), sigma);
    if (denom == 0.0) throw std::invalid_argument("smoothing_probe: u0 must be nonzero");
    const int frames = 512;
    const SpaceTimeField u = heat_flow(u0, make_times(T, T / frames));
    const double s_target = std::isinf(q) ? sigma : sigma + 2.0 / q;
    return chemin_lerner_norm(u, q, s_target, bank).total / denom;
}

}  // namespace debye
