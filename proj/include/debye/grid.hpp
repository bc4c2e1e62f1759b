#ifndef DEBYE_GRID_HPP
#define DEBYE_GRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace debye {

/// Uniform periodic grid on a torus of period `length` per axis.
struct Grid {
    int dim = 1;          // 1 or 2
    int n_per_axis = 0;   // power of two, >= 16
    double length = 0.0;  // period L per axis
    double dx = 0.0;      // length / n_per_axis

    std::size_t size() const;
    bool operator==(const Grid&) const = default;
};

Grid make_grid(int dim, int n, double length);

/// Real samples on a Grid, row-major for dim = 2 (x slowest).
struct ScalarField {
    Grid grid;
    std::vector<double> samples;

    ScalarField() = default;
    explicit ScalarField(const Grid& g) : grid(g), samples(g.size(), 0.0) {}
    ScalarField(const Grid& g, std::vector<double> s);

    double& operator()(std::size_t i) { return samples[i]; }
    double operator()(std::size_t i) const { return samples[i]; }
};

/// Complex Fourier coefficients in FFT layout: linear index i along an axis
/// carries wavenumber k = i <= n/2 ? i : i - n, physical frequency 2*pi*k/L.
struct SpectralField {
    Grid grid;
    std::vector<std::complex<double>> coeff;

    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid(g), coeff(g.size(), 0.0) {}
};

/// Time-indexed sequence of ScalarFields on a uniform time grid with times[0] = 0.
struct SpaceTimeField {
    Grid grid;
    std::vector<double> times;
    std::vector<ScalarField> frames;

    double dt() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
    std::size_t n_frames() const { return frames.size(); }
    void validate() const;
};

/// Uniform time grid 0, dt, ..., T with T/dt steps.
std::vector<double> make_times(double T, double dt);

/// Integer wavenumber along an axis for linear axis index i.
inline int wavenumber(int i, int n) { return i <= n / 2 ? i : i - n; }

/// Physical frequency xi = 2*pi*k/L for axis index i.
double axis_frequency(const Grid& g, int i);

/// |xi|^2 for every linear grid index, precomputed once per call.
std::vector<double> frequency_sq(const Grid& g);

/// Per-axis frequency xi_axis for every linear grid index.
std::vector<double> frequency_axis(const Grid& g, int axis);

SpectralField to_spectral(const ScalarField& f);
ScalarField to_physical(const SpectralField& g);

/// Spectral differentiation along `axis`; Nyquist mode zeroed.
ScalarField derivative(const ScalarField& f, int axis);
SpectralField derivative(const SpectralField& f, int axis);

double mean(const ScalarField& f);
double l2_norm(const ScalarField& f);    // sqrt(integral of f^2)
double l1_norm(const ScalarField& f);
double lp_norm(const ScalarField& f, double p);
double max_norm(const ScalarField& f);
double min_value(const ScalarField& f);

void check_finite(const ScalarField& f, const char* where);

}  // namespace debye

#endif
