#ifndef DEBYE_LP_HPP
#define DEBYE_LP_HPP

#include <utility>
#include <vector>

#include "debye/grid.hpp"

namespace debye {

/// Dyadic filter bank: psi_hat[j - j_min][i] = psi(2^{-j} xi_i), telescoping
/// from a smooth radial cutoff so that the shells sum to 1 on every nonzero
/// grid frequency.
struct DyadicFilterBank {
    Grid grid;
    int j_min = 0;
    int j_max = 0;
    std::vector<std::vector<double>> psi_hat;

    int n_shells() const { return j_max - j_min + 1; }
    const std::vector<double>& shell(int j) const;
};

/// Smooth radial cutoff: 1 for r <= 3/4, 0 for r >= 4/3, C^inf monotone
/// in between (bump-function transition). Exposed for tests.
double lp_cutoff(double r);

DyadicFilterBank build_filter_bank(const Grid& grid);

/// Homogeneous dyadic block: spectral multiplication by psi(2^{-j} xi).
ScalarField dyadic_block(const ScalarField& f, const DyadicFilterBank& bank, int j);

/// Per-shell weighted block norms 2^{js} ||block_j f|| and their l^2 aggregate.
struct BesovProfile {
    double s = 0.0;
    std::vector<std::pair<int, double>> entries;  // (j, weighted block norm)
    double total = 0.0;
};

/// Homogeneous Sobolev norm (sum_{xi != 0} |xi|^{2s} |fhat|^2 L^dim)^{1/2}.
double sobolev_norm(const ScalarField& f, double s);

/// Inhomogeneous H^s norm: weight (1 + |xi|^2)^{s/2}, zero mode included.
double sobolev_norm_inhom(const ScalarField& f, double s);

/// Chemin-Lerner norm: L^p in time of each block's spatial L^2 norm,
/// weighted 2^{js}, aggregated in l^2 over shells. p in {1, 2, inf}.
BesovProfile chemin_lerner_norm(const SpaceTimeField& u, double p, double s,
                                const DyadicFilterBank& bank);

/// Besov profile of a single field (the p = inf, one-frame case).
BesovProfile besov_profile(const ScalarField& f, double s, const DyadicFilterBank& bank);

/// Max over random band-limited pairs of ||fg||_{H^{2s-dim/2}} / (||f||_{H^s} ||g||_{H^s}).
double product_estimate_probe(const DyadicFilterBank& bank, double s, int trials,
                              unsigned long long seed);

/// (Chemin-Lerner L~1_T(Hdot^s) norm, plain L^1_T(Hdot^s) norm); first <= second.
std::pair<double, double> minkowski_check(const SpaceTimeField& u, double s,
                                          const DyadicFilterBank& bank);

namespace detail {

/// Hdot^s norm straight from a spectrum, zero mode excluded, no mean check.
double hs_norm(const SpectralField& f, double s);

}  // namespace detail

}  // namespace debye

#endif
