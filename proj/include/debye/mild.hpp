#ifndef DEBYE_MILD_HPP
#define DEBYE_MILD_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "debye/grid.hpp"
#include "debye/lp.hpp"
#include "debye/sim.hpp"

namespace debye {

/// Which space-time norm plays the role of E_T.
struct NormSpec {
    enum class Kind { chemin_lerner, l2t_h1 } kind = Kind::l2t_h1;
    double p = 1.0;  // chemin_lerner only
    double s = 0.0;  // chemin_lerner only

    static NormSpec l2t_h1_norm() { return NormSpec{Kind::l2t_h1, 0.0, 0.0}; }
    static NormSpec chemin(double p, double s) { return NormSpec{Kind::chemin_lerner, p, s}; }
};

/// E_T norm of a space-time field per `spec` (builds the filter bank on demand
/// for the Chemin-Lerner case).
double solution_norm(const SpaceTimeField& u, const NormSpec& spec);

struct IterationConfig {
    int max_iters = 50;
    double rel_tol = 1e-10;
    NormSpec norm_spec = NormSpec::l2t_h1_norm();
    int probe_trials = 8;            // operator-norm probing inside picard_solve
    unsigned long long probe_seed = 1234;
};

struct ContractionReport {
    double norm_L = 0.0;
    double norm_B = 0.0;
    double C0 = 0.0;
    double C1 = 0.0;
    double C2 = 0.0;
    double alpha = 0.0;
    double data_norm = 0.0;  // ||gamma||_{E_T}
    bool guaranteed = false;
    double eta_used = 0.0;   // ||u0|| + ||grad V0|| + ||V1|| in the data norms

    std::string to_key_value() const;
};

/// B_T(u, w) = int_0^t e^{(t-tau) Lap} div(u grad S(w, 0, 0))(tau) dtau.
SpaceTimeField bilinear_B(const SpaceTimeField& u, const SpaceTimeField& w,
                          const SolverConfig& config);

/// L_T(u) = int_0^t e^{(t-tau) Lap} div(u grad S(0, V0, V1))(tau) dtau.
SpaceTimeField linear_L(const SpaceTimeField& u, const ScalarField& V0,
                        const ScalarField& V1, const SolverConfig& config);

/// Randomized lower bounds for the operator norms and the smallness verdict.
ContractionReport estimate_constants(const ScalarField& u0, const ScalarField& V0,
                                     const ScalarField& V1, const SolverConfig& config,
                                     const NormSpec& norm, int trials,
                                     unsigned long long seed);

class PicardError : public std::runtime_error {
  public:
    PicardError(const std::string& msg, std::vector<double> residuals)
        : std::runtime_error(msg), residual_history(std::move(residuals)) {}
    std::vector<double> residual_history;
};

struct PicardResult {
    SpaceTimeField solution;
    ContractionReport report;
    std::vector<double> residual_history;
    int iterations = 0;
};

/// Successive substitution x_{k+1} = gamma + L(x_k) + B(x_k, x_k) from
/// x_0 = gamma, in the configured norm.
PicardResult picard_solve(const ScalarField& u0, const ScalarField& V0,
                          const ScalarField& V1, const SolverConfig& config,
                          const IterationConfig& iter);

}  // namespace debye

#endif
