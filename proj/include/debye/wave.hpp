#ifndef DEBYE_WAVE_HPP
#define DEBYE_WAVE_HPP

#include "debye/grid.hpp"
#include "debye/lp.hpp"

namespace debye {

/// Potential / velocity pair advanced by the wave propagator.
struct WaveState {
    ScalarField V;
    ScalarField Vt;
    double t = 0.0;
};

/// Discrete wave energy 0.5 * int (Vt^2 + |grad V|^2) dx, computed spectrally.
double wave_energy(const WaveState& s);

/// Per-step weights of the exact per-frequency wave propagator with a
/// piecewise-linear source on the step. All weights are functions of
/// omega = |xi| and the step h only.
struct WaveStepper {
    Grid grid;
    double h = 0.0;
    std::vector<double> cos_wh;     // cos(omega h)
    std::vector<double> sinc_wh;    // sin(omega h)/(omega h), times h applied in step
    std::vector<double> w_sin;      // omega * sin(omega h)
    std::vector<double> v_begin;    // h^2 * (sinc - cos)/sigma^2
    std::vector<double> v_end;      // h^2 * (1 - sinc)/sigma^2
    std::vector<double> vt_begin;   // h * (sin - (1-cos)/sigma)/sigma
    std::vector<double> vt_end;     // h * (1 - cos)/sigma^2
};

WaveStepper make_wave_stepper(const Grid& grid, double h);

/// Advance (Vhat, Vthat) by one step with source linear between a and b.
void wave_step_spectral(const WaveStepper& ws, std::vector<std::complex<double>>& V,
                        std::vector<std::complex<double>>& Vt,
                        const std::vector<std::complex<double>>& a,
                        const std::vector<std::complex<double>>& b);

/// S(u, V0, V1): solution of V_tt - Laplacian V = u, V(0) = V0, V_t(0) = V1,
/// sampled at the times of u.
SpaceTimeField wave_solve(const SpaceTimeField& u, const ScalarField& V0,
                          const ScalarField& V1);

/// Component `axis` of grad S(u, V0, V1).
SpaceTimeField wave_gradient(const SpaceTimeField& u, const ScalarField& V0,
                             const ScalarField& V1, int axis = 0);

/// 1D characteristic (shift-and-interpolate) form of grad S; reference path
/// kept for cross-checking the spectral propagator.
SpaceTimeField wave_gradient_characteristic(const SpaceTimeField& u, const ScalarField& V0,
                                            const ScalarField& V1);

/// ||grad S||_{L~inf_T(Hdot^s)} / (||grad V0||_{Hdot^s} + ||V1||_{Hdot^s} +
/// ||u||_{L~1_T(Hdot^s)}).
double strichartz_energy_probe(const SpaceTimeField& u, const ScalarField& V0,
                               const ScalarField& V1, double s,
                               const DyadicFilterBank& bank);

}  // namespace debye

#endif
