#ifndef DEBYE_HEAT_HPP
#define DEBYE_HEAT_HPP

#include "debye/grid.hpp"
#include "debye/lp.hpp"

namespace debye {

/// Fourier multiplier e^{-|xi|^2 t} of the heat semigroup.
struct HeatMultiplier {
    Grid grid;
    double t = 0.0;
    std::vector<double> values;
};

HeatMultiplier make_heat_multiplier(const Grid& grid, double t);

/// e^{t Laplacian} u0; mass mode is fixed exactly.
ScalarField heat_propagate(const ScalarField& u0, double t);

/// phi-functions of the exponential integrator: phi1(z) = (e^z - 1)/z,
/// phi2(z) = (e^z - 1 - z)/z^2, with series branches near z = 0.
double phi1(double z);
double phi2(double z);

/// u(t_k) = e^{t_k Laplacian} u0 + int_0^{t_k} e^{(t_k - tau) Laplacian} f(tau) dtau,
/// source piecewise linear in time, integrated exactly per frequency.
SpaceTimeField duhamel(const ScalarField& u0, const SpaceTimeField& source);

/// Heat flow of u0 sampled on a uniform time grid (duhamel with zero source).
SpaceTimeField heat_flow(const ScalarField& u0, const std::vector<double>& times);

/// ||e^{.Laplacian} u0||_{L~q_T(Hdot^{sigma + 2/q})} / ||u0||_{Hdot^sigma}.
double smoothing_probe(const ScalarField& u0, double sigma, double T, double q,
                       const DyadicFilterBank& bank);

}  // namespace debye

#endif
