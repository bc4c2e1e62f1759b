#include "debye/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "debye/fft.hpp"
#include "debye/kernels.hpp"

namespace debye {

namespace {

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::size_t Grid::size() const {
    std::size_t s = static_cast<std::size_t>(n_per_axis);
    return dim == 2 ? s * s : s;
}

Grid make_grid(int dim, int n, double length) {
    if (dim != 1 && dim != 2) throw std::invalid_argument("make_grid: dim must be 1 or 2");
    if (!is_pow2(n) || n < 16)
        throw std::invalid_argument("make_grid: n must be a power of two >= 16");
    if (!(length > 0.0)) throw std::invalid_argument("make_grid: length must be positive");
    Grid g;
    g.dim = dim;
    g.n_per_axis = n;
    g.length = length;
    g.dx = length / n;
    return g;
}

ScalarField::ScalarField(const Grid& g, std::vector<double> s) : grid(g), samples(std::move(s)) {
    if (samples.size() != g.size())
        throw std::invalid_argument("ScalarField: sample count mismatch");
}

void SpaceTimeField::validate() const {
    if (frames.size() != times.size())
        throw std::invalid_argument("SpaceTimeField: frames/times mismatch");
    if (times.empty() || times[0] != 0.0)
        throw std::invalid_argument("SpaceTimeField: times must start at 0");
    if (times.size() > 1) {
        const double h = times[1] - times[0];
        for (std::size_t k = 1; k + 1 < times.size(); ++k) {
            const double hk = times[k + 1] - times[k];
            if (std::abs(hk - h) > 1e-12 * std::max(1.0, std::abs(h)))
                throw std::invalid_argument("SpaceTimeField: non-uniform time step");
        }
    }
    for (const auto& f : frames)
        if (!(f.grid == grid)) throw std::invalid_argument("SpaceTimeField: grid mismatch");
}

std::vector<double> make_times(double T, double dt) {
    if (!(T > 0.0) || !(dt > 0.0)) throw std::invalid_argument("make_times: T, dt must be positive");
    const double steps_real = T / dt;
    const long steps = std::lround(steps_real);
    if (steps < 1 || std::abs(steps_real - static_cast<double>(steps)) > 1e-9 * steps_real)
        throw std::invalid_argument("make_times: T/dt must be an integer");
    std::vector<double> t(static_cast<std::size_t>(steps) + 1);
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = dt * static_cast<double>(k);
    return t;
}

double axis_frequency(const Grid& g, int i) {
    return 2.0 * std::numbers::pi * wavenumber(i, g.n_per_axis) / g.length;
}

std::vector<double> frequency_sq(const Grid& g) {
    const int n = g.n_per_axis;
    std::vector<double> xi(n);
    for (int i = 0; i < n; ++i) xi[i] = axis_frequency(g, i);
    std::vector<double> out(g.size());
    if (g.dim == 1) {
        for (int i = 0; i < n; ++i) out[i] = xi[i] * xi[i];
    } else {
        for (int ix = 0; ix < n; ++ix)
            for (int iy = 0; iy < n; ++iy)
                out[static_cast<std::size_t>(ix) * n + iy] = xi[ix] * xi[ix] + xi[iy] * xi[iy];
    }
    return out;
}

std::vector<double> frequency_axis(const Grid& g, int axis) {
    if (axis < 0 || axis >= g.dim) throw std::invalid_argument("frequency_axis: axis out of range");
    const int n = g.n_per_axis;
    std::vector<double> out(g.size());
    if (g.dim == 1) {
        for (int i = 0; i < n; ++i) out[i] = axis_frequency(g, i);
    } else {
        for (int ix = 0; ix < n; ++ix)
            for (int iy = 0; iy < n; ++iy)
                out[static_cast<std::size_t>(ix) * n + iy] =
                    axis_frequency(g, axis == 0 ? ix : iy);
    }
    return out;
}

SpectralField to_spectral(const ScalarField& f) {
    if (f.samples.size() != f.grid.size())
        throw std::invalid_argument("to_spectral: sample count mismatch");
    SpectralField out(f.grid);
    for (std::size_t i = 0; i < f.samples.size(); ++i) out.coeff[i] = f.samples[i];
    if (f.grid.dim == 1)
        fft_inplace(out.coeff, -1);
    else
        fft2_inplace(out.coeff, f.grid.n_per_axis, -1);
    const double scale = 1.0 / static_cast<double>(f.grid.size());
    for (auto& c : out.coeff) c *= scale;
    return out;
}

namespace {

std::size_t conj_index(const Grid& g, std::size_t i) {
    const int n = g.n_per_axis;
    if (g.dim == 1) return (n - i) % static_cast<std::size_t>(n);
    const std::size_t ix = i / n, iy = i % n;
    return ((n - ix) % n) * static_cast<std::size_t>(n) + (n - iy) % n;
}

}  // namespace

ScalarField to_physical(const SpectralField& g) {
    // real-field reconstruction requires Hermitian symmetry
    double cmax = 0.0, herm = 0.0;
    for (std::size_t i = 0; i < g.coeff.size(); ++i) {
        cmax = std::max(cmax, std::abs(g.coeff[i]));
        herm = std::max(herm, std::abs(g.coeff[i] - std::conj(g.coeff[conj_index(g.grid, i)])));
    }
    if (herm > 1e-9 * (1.0 + cmax))
        throw std::invalid_argument("to_physical: coefficients are not Hermitian-symmetric");
    std::vector<cd> buf = g.coeff;
    if (g.grid.dim == 1)
        fft_inplace(buf, +1);
    else
        fft2_inplace(buf, g.grid.n_per_axis, +1);
    ScalarField out(g.grid);
    for (std::size_t i = 0; i < buf.size(); ++i) out.samples[i] = buf[i].real();
    check_finite(out, "to_physical");
    return out;
}

SpectralField derivative(const SpectralField& f, int axis) {
    if (axis < 0 || axis >= f.grid.dim)
        throw std::invalid_argument("derivative: axis out of range");
    SpectralField out = f;
    const int n = f.grid.n_per_axis;
    const std::vector<double> xi = frequency_axis(f.grid, axis);
    const std::ptrdiff_t sz = static_cast<std::ptrdiff_t>(out.coeff.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sz; ++i) {
        const int ai = f.grid.dim == 1 ? static_cast<int>(i)
                                       : (axis == 0 ? static_cast<int>(i / n)
                                                    : static_cast<int>(i % n));
        if (ai == n / 2) {
            out.coeff[i] = 0.0;  // Nyquist zeroed to keep real fields real
        } else {
            out.coeff[i] *= cd(0.0, xi[i]);
        }
    }
    return out;
}

ScalarField derivative(const ScalarField& f, int axis) {
    return to_physical(derivative(to_spectral(f), axis));
}

double mean(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.samples) s += v;
    return s / static_cast<double>(f.samples.size());
}

double l2_norm(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.samples) s += v * v;
    const double meas = f.grid.dim == 1 ? f.grid.dx : f.grid.dx * f.grid.dx;
    return std::sqrt(s * meas);
}

double l1_norm(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.samples) s += std::abs(v);
    const double meas = f.grid.dim == 1 ? f.grid.dx : f.grid.dx * f.grid.dx;
    return s * meas;
}

double lp_norm(const ScalarField& f, double p) {
    double s = 0.0;
    for (double v : f.samples) s += std::pow(std::abs(v), p);
    const double meas = f.grid.dim == 1 ? f.grid.dx : f.grid.dx * f.grid.dx;
    return std::pow(s * meas, 1.0 / p);
}

double max_norm(const ScalarField& f) {
    double s = 0.0;
    for (double v : f.samples) s = std::max(s, std::abs(v));
    return s;
}

double min_value(const ScalarField& f) {
    double s = f.samples.empty() ? 0.0 : f.samples[0];
    for (double v : f.samples) s = std::min(s, v);
    return s;
}

void check_finite(const ScalarField& f, const char* where) {
    for (double v : f.samples)
        if (!std::isfinite(v))
            throw std::runtime_error(std::string(where) + ": non-finite sample");
}

}  // namespace debye
