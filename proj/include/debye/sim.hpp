#ifndef DEBYE_SIM_HPP
#define DEBYE_SIM_HPP

#include <vector>

#include "debye/grid.hpp"
#include "debye/wave.hpp"

namespace debye {

enum class WrapPolicy { warn, error };

/// Per-species coupling: dt u_j - Lap u_j = div(beta_j u_j grad V),
/// V_tt - Lap V = sum_k alpha_k u_k.
struct Species {
    double alpha = 1.0;
    double beta = 1.0;
};

struct SolverConfig {
    Grid grid;
    double T = 1.0;
    double dt = 1e-3;
    std::vector<Species> species{Species{}};
    WrapPolicy wrap_policy = WrapPolicy::warn;

    std::size_t n_steps() const;
    void validate() const;
};

struct DiagnosticsRow {
    double t = 0.0;
    double mass = 0.0;        // int u dx
    double l1 = 0.0;
    double l2 = 0.0;
    double h1 = 0.0;          // inhomogeneous H^1
    double min_u = 0.0;
    double energy_lhs = 0.0;  // 0.5 d/dt ||u||^2 + ||du||^2, centered in time
    double energy_rhs = 0.0;  // |int u du dS dx|
    double gn_ratio = 0.0;    // ||u||_L4^4 / (||u||_L1^2 ||du||_L2^2)
    bool wrapped = false;
};

struct SimResult {
    std::vector<SpaceTimeField> u;  // one per species
    SpaceTimeField V;
    std::vector<DiagnosticsRow> diagnostics;  // tracks species 0
};

/// Advance all species and the wave state by one dt (order-2
/// predictor-corrector in the exponential-integrator frame).
void step(std::vector<ScalarField>& u, WaveState& wave, const SolverConfig& config);

SimResult run(const std::vector<ScalarField>& u0, const ScalarField& V0,
              const ScalarField& V1, const SolverConfig& config);

struct EnergyAuditRow {
    double t = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // rhs - lhs
};

/// Discrete form of the 1D energy inequality, per interior frame.
std::vector<EnergyAuditRow> energy_audit(const SpaceTimeField& u, const SpaceTimeField& V,
                                         const SolverConfig& config);

struct GronwallResult {
    std::vector<double> z;            // ||u(t)||^2 + int_0^t ||du||^2
    std::vector<double> bound_curve;  // Gronwall envelope
    bool ok = false;
};

/// A priori bound audit: z(t) against the Gronwall envelope built from the
/// initial-data norms with a frozen calibration constant.
GronwallResult gronwall_audit(const std::vector<DiagnosticsRow>& diag,
                              const SolverConfig& config, double u0_l1, double V0_h2,
                              double V1_h1);

/// Smallest window [a, b] containing all samples with |f| > tol * max|f|,
/// returned as its width; used for the 1D no-wrap check.
double support_width(const ScalarField& f);

}  // namespace debye

#endif
