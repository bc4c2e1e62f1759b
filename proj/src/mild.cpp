#include "debye/mild.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "debye/heat.hpp"
#include "debye/kernels.hpp"
#include "debye/random_fields.hpp"
#include "debye/wave.hpp"

namespace debye {

namespace {

double trapezoid(const std::vector<double>& a, double dt) {
    if (a.size() < 2) return 0.0;
    double s = 0.5 * (a.front() + a.back());
    for (std::size_t k = 1; k + 1 < a.size(); ++k) s += a[k];
    return s * dt;
}

SpaceTimeField zero_like(const Grid& grid, const std::vector<double>& times) {
    SpaceTimeField z;
    z.grid = grid;
    z.times = times;
    z.frames.assign(times.size(), ScalarField(grid));
    return z;
}

/// Frame-wise sum(u_k * grad S_k) put under a divergence, as a source field.
SpaceTimeField transport_source(const SpaceTimeField& u, const SpaceTimeField& S) {
    SpaceTimeField out = zero_like(u.grid, u.times);
    for (std::size_t k = 0; k < u.n_frames(); ++k) {
        SpectralField acc(u.grid);
        for (int ax = 0; ax < u.grid.dim; ++ax) {
            const ScalarField gS = derivative(S.frames[k], ax);
            ScalarField prod(u.grid);
            pointwise_product(u.frames[k].samples, gS.samples, prod.samples);
            const SpectralField d = derivative(to_spectral(prod), ax);
            for (std::size_t i = 0; i < acc.coeff.size(); ++i) acc.coeff[i] += d.coeff[i];
        }
        out.frames[k] = to_physical(acc);
    }
    return out;
}

SpaceTimeField add_scaled(const SpaceTimeField& a, const SpaceTimeField& b, double s) {
    SpaceTimeField out = a;
    for (std::size_t k = 0; k < out.n_frames(); ++k)
        axpy(s, b.frames[k].samples, out.frames[k].samples);
    return out;
}

double data_norm_u0(const ScalarField& u0, const NormSpec& norm) {
    if (norm.kind == NormSpec::Kind::l2t_h1) return l2_norm(u0);
    return detail::hs_norm(to_spectral(u0), norm.s - 2.0);
}

double data_norm_wave(const ScalarField& V0, const ScalarField& V1, const NormSpec& norm) {
    if (norm.kind == NormSpec::Kind::l2t_h1)
        return sobolev_norm_inhom(derivative(V0, 0), 1.0) + sobolev_norm_inhom(V1, 1.0);
    double g2 = 0.0;
    for (int ax = 0; ax < V0.grid.dim; ++ax) {
        const double c = detail::hs_norm(derivative(to_spectral(V0), ax), norm.s);
        g2 += c * c;
    }
    return std::sqrt(g2) + detail::hs_norm(to_spectral(V1), norm.s);
}

/// Restrict a band-limited field to the annulus kmin < |k|_inf <= kmax.
ScalarField annulus_restrict(const ScalarField& f, int kmin) {
    if (kmin < 1) return f;
    SpectralField fh = to_spectral(f);
    const Grid& g = f.grid;
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t rem = i;
        int kinf = 0;
        for (int ax = g.dim - 1; ax >= 0; --ax) {
            const int m = static_cast<int>(rem % g.n_per_axis);
            rem /= g.n_per_axis;
            const int k = m <= g.n_per_axis / 2 ? m : m - g.n_per_axis;
            kinf = std::max(kinf, std::abs(k));
        }
        if (kinf <= kmin) fh.coeff[i] = 0.0;
    }
    return to_physical(fh);
}

/// Random unit-norm space-time probe: annulus-limited spatial profiles with
/// localized time bumps placed early in the interval. The two operator
/// arguments use disjoint annuli ((n/16, n/8] for the transported density,
/// [3n/16 + 1, n/4] for the wave source), so their pointwise products carry
/// no content below mode n/16; those slow infrared modes relax on times
/// longer than any tested horizon and would otherwise make the measured
/// constants horizon-dependent. The bump windows are fixed (scaled down only
/// when T < 0.5), so every wave and heat transient the probe excites is
/// complete well inside the shortest horizon of interest.
SpaceTimeField random_probe(const Grid& grid, const std::vector<double>& times,
                            std::mt19937_64& rng, const NormSpec& norm, int role) {
    const double T = times.back();
    const double sc = std::min(1.0, T / 0.5);
    std::uniform_real_distribution<double> center(sc * (role == 1 ? 0.05 : 0.20),
                                                  sc * (role == 1 ? 0.15 : 0.35));
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const int kmin = role == 1 ? 3 * grid.n_per_axis / 16 : grid.n_per_axis / 16;
    const int kmax = std::max(1, role == 1 ? grid.n_per_axis / 4 : grid.n_per_axis / 8);
    constexpr int n_profiles = 3;
    SpaceTimeField u = zero_like(grid, times);
    for (int i = 0; i < n_profiles; ++i) {
        const ScalarField h = annulus_restrict(random_band_limited(grid, rng, kmax), kmin);
        const double t0 = center(rng);
        const double w = sc * 0.04 * std::pow(2.0, unif(rng));
        for (std::size_t k = 0; k < times.size(); ++k) {
            const double r = times[k] - t0;
            axpy(std::exp(-r * r / (2.0 * w * w)), h.samples, u.frames[k].samples);
        }
    }
    const double nrm = solution_norm(u, norm);
    if (nrm > 0.0)
        for (auto& f : u.frames)
            for (auto& v : f.samples) v /= nrm;
    return u;
}

}  // namespace

double solution_norm(const SpaceTimeField& u, const NormSpec& spec) {
    u.validate();
    if (spec.kind == NormSpec::Kind::l2t_h1) {
        std::vector<double> a(u.n_frames());
        for (std::size_t k = 0; k < u.n_frames(); ++k) {
            const double c = sobolev_norm_inhom(u.frames[k], 1.0);
            a[k] = c * c;
        }
        return std::sqrt(trapezoid(a, u.dt()));
    }
    const DyadicFilterBank bank = build_filter_bank(u.grid);
    return chemin_lerner_norm(u, spec.p, spec.s, bank).total;
}

std::string ContractionReport::to_key_value() const {
    std::ostringstream os;
    os.precision(17);
    os << "norm_L=" << norm_L << "\n"
       << "norm_B=" << norm_B << "\n"
       << "C0=" << C0 << "\n"
       << "C1=" << C1 << "\n"
       << "C2=" << C2 << "\n"
       << "alpha=" << alpha << "\n"
       << "data_norm=" << data_norm << "\n"
       << "guaranteed=" << (guaranteed ? "true" : "false") << "\n"
       << "eta_used=" << eta_used << "\n";
    return os.str();
}

SpaceTimeField bilinear_B(const SpaceTimeField& u, const SpaceTimeField& w,
                          const SolverConfig& config) {
    u.validate();
    w.validate();
    if (!(u.grid == w.grid) || u.times.size() != w.times.size() || !(u.grid == config.grid))
        throw std::invalid_argument("bilinear_B: grid mismatch");
    const ScalarField zero(u.grid);
    const SpaceTimeField S = wave_solve(w, zero, zero);
    return duhamel(zero, transport_source(u, S));
}

SpaceTimeField linear_L(const SpaceTimeField& u, const ScalarField& V0,
                        const ScalarField& V1, const SolverConfig& config) {
    u.validate();
    if (!(u.grid == V0.grid) || !(u.grid == V1.grid) || !(u.grid == config.grid))
        throw std::invalid_argument("linear_L: grid mismatch");
    const ScalarField zero(u.grid);
    const SpaceTimeField S = wave_solve(zero_like(u.grid, u.times), V0, V1);
    return duhamel(zero, transport_source(u, S));
}

ContractionReport estimate_constants(const ScalarField& u0, const ScalarField& V0,
                                     const ScalarField& V1, const SolverConfig& config,
                                     const NormSpec& norm, int trials,
                                     unsigned long long seed) {
    if (trials < 8) throw std::invalid_argument("estimate_constants: trials >= 8 required");
    config.validate();
    const std::vector<double> times = make_times(config.T, config.dt);
    std::mt19937_64 rng(seed);

    const double v_data = data_norm_wave(V0, V1, norm);
    const double u0_data = data_norm_u0(u0, norm);

    ContractionReport rep;
    int attempts = 0;
    const int cap = 10 * trials;
    for (int t = 0; t < trials && attempts < cap; ++t) {
        const SpaceTimeField pu = random_probe(config.grid, times, rng, norm, 0);
        const SpaceTimeField pw = random_probe(config.grid, times, rng, norm, 1);
        if (solution_norm(pu, norm) == 0.0 || solution_norm(pw, norm) == 0.0) {
            ++attempts;
            --t;
            continue;
        }
        rep.C0 = std::max(rep.C0, solution_norm(bilinear_B(pu, pw, config), norm));
        if (v_data > 0.0)
            rep.C1 = std::max(rep.C1,
                              solution_norm(linear_L(pu, V0, V1, config), norm) / v_data);
        const ScalarField p0 =
            random_band_limited(config.grid, rng, std::max(1, config.grid.n_per_axis / 8));
        const double p0n = data_norm_u0(p0, norm);
        if (p0n > 0.0)
            rep.C2 = std::max(rep.C2, solution_norm(heat_flow(p0, times), norm) / p0n);
        ++attempts;
    }

    rep.norm_B = rep.C0;
    rep.norm_L = rep.C1 * v_data;
    rep.alpha = (rep.norm_L < 1.0 && rep.norm_B > 0.0)
                    ? (1.0 - rep.norm_L) * (1.0 - rep.norm_L) / (4.0 * rep.norm_B)
                    : 0.0;
    rep.data_norm = solution_norm(heat_flow(u0, times), norm);
    rep.guaranteed = rep.norm_L < 1.0 && rep.alpha > 0.0 && rep.data_norm <= rep.alpha;
    rep.eta_used = u0_data + v_data;
    return rep;
}

PicardResult picard_solve(const ScalarField& u0, const ScalarField& V0,
                          const ScalarField& V1, const SolverConfig& config,
                          const IterationConfig& iter) {
    config.validate();
    if (iter.max_iters < 1 || !(iter.rel_tol > 0.0))
        throw std::invalid_argument("picard_solve: bad iteration config");
    const std::vector<double> times = make_times(config.T, config.dt);

    PicardResult res;
    res.report = estimate_constants(u0, V0, V1, config, iter.norm_spec,
                                    iter.probe_trials, iter.probe_seed);

    if (max_norm(u0) == 0.0 && max_norm(V0) == 0.0 && max_norm(V1) == 0.0) {
        res.solution = zero_like(config.grid, times);
        res.iterations = 1;
        return res;
    }

    const SpaceTimeField gamma = heat_flow(u0, times);
    SpaceTimeField x = gamma;
    for (int k = 1; k <= iter.max_iters; ++k) {
        SpaceTimeField x_new = add_scaled(gamma, linear_L(x, V0, V1, config), 1.0);
        x_new = add_scaled(x_new, bilinear_B(x, x, config), 1.0);
        const double nn = solution_norm(x_new, iter.norm_spec);
        const double diff = solution_norm(add_scaled(x_new, x, -1.0), iter.norm_spec);
        const double resid = nn > 0.0 ? diff / nn : diff;
        res.residual_history.push_back(resid);
        if (res.report.guaranteed && nn > 2.0 * res.report.alpha * (1.0 + 1e-9))
            throw std::logic_error(
                "picard_solve: iterate escaped the ball of radius 2*alpha despite a "
                "contraction guarantee");
        x = std::move(x_new);
        if (resid <= iter.rel_tol) {
            res.solution = std::move(x);
            res.iterations = k;
            return res;
        }
    }
    throw PicardError("picard_solve: no convergence within max_iters",
                      res.residual_history);
}

}  // namespace debye
