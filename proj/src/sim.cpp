#include "debye/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "debye/heat.hpp"
#include "debye/kernels.hpp"
#include "debye/lp.hpp"

namespace debye {

namespace {

// Calibrated once on the reference Gaussian run (n = 512, L = 64, amp 0.5,
// width 2, V0 amp 0.1, T = 1) and frozen.
constexpr double kGronwallCEta = 2.0;

struct StepContext {
    Grid grid;
    double h = 0.0;
    std::vector<double> decay;    // e^{-|xi|^2 h}
    std::vector<double> w_phi1;   // h * phi1
    std::vector<double> w_begin;  // h * (phi1 - phi2)
    std::vector<double> w_end;    // h * phi2
    WaveStepper wave;
};

StepContext make_step_context(const Grid& grid, double h) {
    StepContext ctx;
    ctx.grid = grid;
    ctx.h = h;
    const std::vector<double> lam = frequency_sq(grid);
    const std::size_t sz = lam.size();
    ctx.decay.resize(sz);
    ctx.w_phi1.resize(sz);
    ctx.w_begin.resize(sz);
    ctx.w_end.resize(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        const double z = -lam[i] * h;
        ctx.decay[i] = std::exp(z);
        const double p1 = phi1(z), p2 = phi2(z);
        ctx.w_phi1[i] = h * p1;
        ctx.w_begin[i] = h * (p1 - p2);
        ctx.w_end[i] = h * p2;
    }
    ctx.wave = make_wave_stepper(grid, h);
    return ctx;
}

/// div(beta * u * grad V) in spectral form; u physical, Vhat spectral.
SpectralField coupling_source(const ScalarField& u, const SpectralField& Vhat, double beta) {
    const Grid& g = u.grid;
    SpectralField out(g);
    for (int ax = 0; ax < g.dim; ++ax) {
        const ScalarField gV = to_physical(derivative(Vhat, ax));
        ScalarField prod(g);
        pointwise_product(u.samples, gV.samples, prod.samples);
        const SpectralField d = derivative(to_spectral(prod), ax);
        for (std::size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += beta * d.coeff[i];
    }
    return out;
}

void step_impl(std::vector<ScalarField>& u, WaveState& wave, const SolverConfig& config,
               const StepContext& ctx) {
    const std::size_t m = config.species.size();
    if (u.size() != m) throw std::invalid_argument("step: species count mismatch");
    for (const auto& f : u)
        if (!(f.grid == config.grid)) throw std::invalid_argument("step: grid mismatch");
    const std::size_t sz = config.grid.size();

    SpectralField Vhat = to_spectral(wave.V);
    SpectralField Vthat = to_spectral(wave.Vt);

    std::vector<SpectralField> uhat(m);
    std::vector<SpectralField> src0(m);
    SpectralField rho0(config.grid);
    for (std::size_t j = 0; j < m; ++j) {
        uhat[j] = to_spectral(u[j]);
        src0[j] = coupling_source(u[j], Vhat, config.species[j].beta);
        for (std::size_t i = 0; i < sz; ++i)
            rho0.coeff[i] += config.species[j].alpha * uhat[j].coeff[i];
    }

    // predictor: constant-source exponential step for each species
    std::vector<SpectralField> upred(m, SpectralField(config.grid));
    SpectralField rho1(config.grid);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < sz; ++i)
            upred[j].coeff[i] =
                ctx.decay[i] * uhat[j].coeff[i] + ctx.w_phi1[i] * src0[j].coeff[i];
        for (std::size_t i = 0; i < sz; ++i)
            rho1.coeff[i] += config.species[j].alpha * upred[j].coeff[i];
    }

    // wave advanced with the density linear between rho0 and the prediction
    wave_step_spectral(ctx.wave, Vhat.coeff, Vthat.coeff, rho0.coeff, rho1.coeff);

    // corrector: source re-evaluated at the predicted end state
    for (std::size_t j = 0; j < m; ++j) {
        const ScalarField up = to_physical(upred[j]);
        const SpectralField src1 = coupling_source(up, Vhat, config.species[j].beta);
        for (std::size_t i = 0; i < sz; ++i)
            uhat[j].coeff[i] = ctx.decay[i] * uhat[j].coeff[i] +
                               ctx.w_begin[i] * src0[j].coeff[i] +
                               ctx.w_end[i] * src1.coeff[i];
        u[j] = to_physical(uhat[j]);
        check_finite(u[j], "debye step");
    }
    wave.V = to_physical(Vhat);
    wave.Vt = to_physical(Vthat);
    wave.t += ctx.h;
}

double grad_l2_sq(const ScalarField& u) {
    double acc = 0.0;
    for (int ax = 0; ax < u.grid.dim; ++ax) {
        const double c = l2_norm(derivative(u, ax));
        acc += c * c;
    }
    return acc;
}

}  // namespace

std::size_t SolverConfig::n_steps() const {
    return make_times(T, dt).size() - 1;
}

void SolverConfig::validate() const {
    if (!(T > 0.0) || !(dt > 0.0)) throw std::invalid_argument("SolverConfig: T, dt > 0 required");
    make_times(T, dt);  // T/dt integrality
    if (species.empty()) throw std::invalid_argument("SolverConfig: at least one species");
    (void)make_grid(grid.dim, grid.n_per_axis, grid.length);
}

void step(std::vector<ScalarField>& u, WaveState& wave, const SolverConfig& config) {
    config.validate();
    const StepContext ctx = make_step_context(config.grid, config.dt);
    step_impl(u, wave, config, ctx);
}

double support_width(const ScalarField& f) {
    const double cut = 1e-12 * max_norm(f);
    if (f.grid.dim != 1) return f.grid.length;
    std::size_t first = f.samples.size(), last = 0;
    for (std::size_t i = 0; i < f.samples.size(); ++i) {
        if (std::abs(f.samples[i]) > cut) {
            first = std::min(first, i);
            last = std::max(last, i);
        }
    }
    if (first > last) return 0.0;
    return static_cast<double>(last - first) * f.grid.dx;
}

SimResult run(const std::vector<ScalarField>& u0, const ScalarField& V0,
              const ScalarField& V1, const SolverConfig& config) {
    config.validate();
    if (u0.size() != config.species.size())
        throw std::invalid_argument("run: one initial field per species required");
    const std::vector<double> times = make_times(config.T, config.dt);
    const StepContext ctx = make_step_context(config.grid, config.dt);

    double data_width = std::max(support_width(V0), support_width(V1));
    for (const auto& f : u0) data_width = std::max(data_width, support_width(f));
    const bool will_wrap = config.grid.dim == 1 &&
                           data_width + 2.0 * config.T >= config.grid.length;
    if (will_wrap && config.wrap_policy == WrapPolicy::error)
        throw std::runtime_error("run: support + 2T exceeds the box (wrap_policy=error)");

    std::vector<ScalarField> u = u0;
    WaveState wave{V0, V1, 0.0};

    SimResult res;
    res.u.assign(u0.size(), SpaceTimeField{config.grid, times, {}});
    res.V = SpaceTimeField{config.grid, times, {}};
    for (std::size_t j = 0; j < u.size(); ++j) res.u[j].frames.push_back(u[j]);
    res.V.frames.push_back(wave.V);

    for (std::size_t k = 1; k < times.size(); ++k) {
        try {
            step_impl(u, wave, config, ctx);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error("run aborted at t = " + std::to_string(times[k]) + ": " +
                                     e.what());
        }
        for (std::size_t j = 0; j < u.size(); ++j) res.u[j].frames.push_back(u[j]);
        res.V.frames.push_back(wave.V);
    }

    // diagnostics for species 0
    const auto& traj = res.u[0];
    const double dt = config.dt;
    std::vector<double> l2sq(times.size()), gsq(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double l2 = l2_norm(traj.frames[k]);
        l2sq[k] = l2 * l2;
        gsq[k] = grad_l2_sq(traj.frames[k]);
    }
    res.diagnostics.resize(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
        DiagnosticsRow& row = res.diagnostics[k];
        const ScalarField& f = traj.frames[k];
        const double meas = config.grid.dim == 1 ? config.grid.dx
                                                 : config.grid.dx * config.grid.dx;
        double sum = 0.0;
        for (double v : f.samples) sum += v;
        row.t = times[k];
        row.mass = sum * meas;
        row.l1 = l1_norm(f);
        row.l2 = std::sqrt(l2sq[k]);
        row.h1 = sobolev_norm_inhom(f, 1.0);
        row.min_u = min_value(f);
        double ddt;
        if (k == 0)
            ddt = (l2sq[1] - l2sq[0]) / (2.0 * dt);
        else if (k + 1 == times.size())
            ddt = (l2sq[k] - l2sq[k - 1]) / (2.0 * dt);
        else
            ddt = (l2sq[k + 1] - l2sq[k - 1]) / (4.0 * dt);
        row.energy_lhs = ddt + gsq[k];
        const ScalarField du = derivative(f, 0);
        const ScalarField dS = derivative(res.V.frames[k], 0);
        double rhs = 0.0;
        for (std::size_t i = 0; i < f.samples.size(); ++i)
            rhs += f.samples[i] * du.samples[i] * dS.samples[i];
        row.energy_rhs = std::abs(rhs * meas);
        const double l4 = lp_norm(f, 4.0);
        const double denom = row.l1 * row.l1 * gsq[k];
        row.gn_ratio = denom > 0.0 ? l4 * l4 * l4 * l4 / denom : 0.0;
        row.wrapped = config.grid.dim == 1 && data_width + 2.0 * times[k] >= config.grid.length;
    }
    return res;
}

std::vector<EnergyAuditRow> energy_audit(const SpaceTimeField& u, const SpaceTimeField& V,
                                         const SolverConfig& config) {
    u.validate();
    V.validate();
    if (config.grid.dim != 1) throw std::invalid_argument("energy_audit: 1D only");
    const double dt = u.dt();
    std::vector<double> l2sq(u.n_frames());
    for (std::size_t k = 0; k < u.n_frames(); ++k) {
        const double c = l2_norm(u.frames[k]);
        l2sq[k] = c * c;
    }
    std::vector<EnergyAuditRow> rows;
    for (std::size_t k = 1; k + 1 < u.n_frames(); ++k) {
        EnergyAuditRow r;
        r.t = u.times[k];
        const ScalarField du = derivative(u.frames[k], 0);
        const ScalarField dS = derivative(V.frames[k], 0);
        const double gl2 = l2_norm(du);
        r.lhs = (l2sq[k + 1] - l2sq[k - 1]) / (4.0 * dt) + gl2 * gl2;
        double rhs = 0.0;
        for (std::size_t i = 0; i < du.samples.size(); ++i)
            rhs += u.frames[k].samples[i] * du.samples[i] * dS.samples[i];
        r.rhs = std::abs(config.species.at(0).beta * rhs * u.grid.dx);
        r.slack = r.rhs - r.lhs;
        rows.push_back(r);
    }
    return rows;
}

GronwallResult gronwall_audit(const std::vector<DiagnosticsRow>& diag,
                              const SolverConfig& config, double u0_l1, double V0_h2,
                              double V1_h1) {
    if (diag.empty()) throw std::invalid_argument("gronwall_audit: empty diagnostics");
    const double dt = config.dt;
    GronwallResult res;
    res.z.resize(diag.size());
    res.bound_curve.resize(diag.size());
    const double K = std::pow(V0_h2, 4) + std::pow(V1_h1, 4);
    const double M2 = u0_l1 * u0_l1;
    const double z0 = diag[0].l2 * diag[0].l2;
    double grad_int = 0.0;
    double prev_gsq = std::max(diag[0].h1 * diag[0].h1 - diag[0].l2 * diag[0].l2, 0.0);
    res.ok = true;
    for (std::size_t k = 0; k < diag.size(); ++k) {
        const double gsq = std::max(diag[k].h1 * diag[k].h1 - diag[k].l2 * diag[k].l2, 0.0);
        if (k > 0) grad_int += 0.5 * dt * (prev_gsq + gsq);
        prev_gsq = gsq;
        res.z[k] = diag[k].l2 * diag[k].l2 + grad_int;
        const double t = diag[k].t;
        res.bound_curve[k] = (z0 + 2.0 * kGronwallCEta * K * t) *
                             std::exp(0.5 * kGronwallCEta * M2 * t * t * t * t);
        if (res.z[k] > res.bound_curve[k] * (1.0 + 1e-9) + 1e-12) res.ok = false;
    }
    return res;
}

}  // namespace debye
