// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned here and are not configurable.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "debye/heat.hpp"
#include "debye/lp.hpp"
#include "debye/mild.hpp"
#include "debye/random_fields.hpp"
#include "debye/sim.hpp"
#include "debye/wave.hpp"

using namespace debye;

namespace {
constexpr double pi = std::numbers::pi;
int failures = 0;

void report(int idx, const char* name, bool ok, const std::string& detail = "") {
    std::printf("C%02d %-38s %s%s%s\n", idx, name, ok ? "PASS" : "FAIL",
                detail.empty() ? "" : "  ", detail.c_str());
    if (!ok) ++failures;
}

std::string fmt(const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s=%.3g", key, v);
    return buf;
}

ScalarField gaussian(const Grid& g, double amp, double center, double width) {
    ScalarField f(g);
    if (g.dim == 1) {
        for (int i = 0; i < g.n_per_axis; ++i) {
            const double r = i * g.dx - center;
            f.samples[i] = amp * std::exp(-r * r / (2.0 * width * width));
        }
    } else {
        for (int ix = 0; ix < g.n_per_axis; ++ix)
            for (int iy = 0; iy < g.n_per_axis; ++iy) {
                const double rx = ix * g.dx - center;
                const double ry = iy * g.dx - center;
                f.samples[static_cast<std::size_t>(ix) * g.n_per_axis + iy] =
                    amp * std::exp(-(rx * rx + ry * ry) / (2.0 * width * width));
            }
    }
    return f;
}

ScalarField dgaussian(const Grid& g, double amp, double center, double width) {
    ScalarField f(g);
    for (int i = 0; i < g.n_per_axis; ++i) {
        const double r = i * g.dx - center;
        f.samples[i] = -amp * r / (width * width) * std::exp(-r * r / (2.0 * width * width));
    }
    return f;
}

ScalarField cosine_mode(const Grid& g, int k, double amp = 1.0) {
    ScalarField f(g);
    for (int i = 0; i < g.n_per_axis; ++i)
        f.samples[i] = amp * std::cos(2.0 * pi * k * i * g.dx / g.length);
    return f;
}

double max_diff(const ScalarField& a, const ScalarField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        m = std::max(m, std::abs(a.samples[i] - b.samples[i]));
    return m;
}

SimResult reference_run(int n, double dt, double T = 1.0) {
    SolverConfig c;
    c.grid = make_grid(1, n, 64.0);
    c.T = T;
    c.dt = dt;
    const ScalarField u0 = gaussian(c.grid, 0.5, 32.0, 2.0);
    const ScalarField V0 = gaussian(c.grid, 0.1, 32.0, 2.0);
    return run({u0}, V0, ScalarField(c.grid), c);
}

// criteria 1-3: invariant monitors on the reference runs
void mass_positivity_l1() {
    const SimResult r = reference_run(512, 1e-3);
    const double m0 = r.diagnostics.front().mass;
    double drift = 0.0, min_u = 0.0;
    for (const auto& row : r.diagnostics) {
        drift = std::max(drift, std::abs(row.mass - m0) / std::abs(m0));
        min_u = std::min(min_u, row.min_u);
    }
    report(1, "mass conservation", drift <= 1e-8, fmt("drift", drift));

    const double umax = 0.5;
    const double viol_coarse = std::max(0.0, -min_u);
    const SimResult r2 = reference_run(1024, 5e-4);
    double min_u2 = 0.0;
    for (const auto& row : r2.diagnostics) min_u2 = std::min(min_u2, row.min_u);
    const double viol_fine = std::max(0.0, -min_u2);
    const bool shrink = viol_coarse == 0.0 ? viol_fine == 0.0
                                           : viol_fine <= viol_coarse / 4.0;
    report(2, "positivity", viol_coarse <= 1e-8 * umax && shrink,
           fmt("viol", viol_coarse) + " " + fmt("refined", viol_fine));

    SolverConfig c;
    c.grid = make_grid(1, 512, 64.0);
    c.T = 1.0;
    c.dt = 1e-3;
    const SimResult rs = run({dgaussian(c.grid, 0.5, 32.0, 2.0)},
                             gaussian(c.grid, 0.1, 32.0, 2.0), ScalarField(c.grid), c);
    double worst_rise = 0.0;
    for (std::size_t k = 1; k < rs.diagnostics.size(); ++k)
        worst_rise = std::max(
            worst_rise, (rs.diagnostics[k].l1 - rs.diagnostics[k - 1].l1) / c.dt);
    report(3, "L1 contraction", worst_rise <= 1e-7, fmt("rise_rate", worst_rise));
}

void heat_exactness() {
    const Grid g = make_grid(1, 128, 8.0);
    const int k = 1;
    const double xi = 2.0 * pi * k / g.length;
    ScalarField expected = cosine_mode(g, k);
    for (auto& v : expected.samples) v *= std::exp(-xi * xi);
    const double decay_err = max_diff(heat_propagate(cosine_mode(g, k), 1.0), expected);

    const ScalarField u0 = gaussian(g, 1.0, 4.0, 0.8);
    auto solve = [&](double dt) {
        SpaceTimeField src;
        src.grid = g;
        src.times = make_times(1.0, dt);
        for (double t : src.times) {
            ScalarField f = cosine_mode(g, 2);
            for (auto& v : f.samples) v *= std::sin(3.0 * t) * std::exp(-t);
            src.frames.push_back(f);
        }
        return duhamel(u0, src).frames.back();
    };
    const ScalarField ref = solve(1.0 / 512.0);
    const double factor = max_diff(solve(1.0 / 16.0), ref) / max_diff(solve(1.0 / 32.0), ref);
    report(4, "heat propagator exactness",
           decay_err <= 1e-12 && factor >= 3.5 && factor <= 4.5,
           fmt("decay_err", decay_err) + " " + fmt("conv_factor", factor));
}

void dalembert() {
    const Grid g = make_grid(1, 512, 64.0);
    SpaceTimeField zero_src;
    zero_src.grid = g;
    zero_src.times = make_times(8.0, 0.05);
    zero_src.frames.assign(zero_src.times.size(), ScalarField(g));

    const double c0 = 32.0, w = 2.0;
    const SpaceTimeField S = wave_solve(zero_src, gaussian(g, 1.0, c0, w), ScalarField(g));
    auto gval = [&](double x) {
        double v = 0.0;
        for (int p = -2; p <= 2; ++p) {
            const double r = x - c0 + p * g.length;
            v += std::exp(-r * r / (2.0 * w * w));
        }
        return v;
    };
    double split_err = 0.0;
    for (std::size_t k = 0; k < S.times.size(); k += 10) {
        const double t = S.times[k];
        for (int i = 0; i < g.n_per_axis; ++i) {
            const double x = i * g.dx;
            split_err = std::max(split_err,
                                 std::abs(S.frames[k].samples[i] -
                                          0.5 * (gval(x + t) + gval(x - t))));
        }
    }

    SpaceTimeField ones = zero_src;
    ones.times = make_times(2.0, 0.01);
    ones.frames.assign(ones.times.size(), ScalarField(g));
    for (auto& f : ones.frames)
        for (auto& v : f.samples) v = 1.0;
    const SpaceTimeField Sq = wave_solve(ones, ScalarField(g), ScalarField(g));
    double src_err = 0.0;
    for (std::size_t k = 0; k < Sq.times.size(); ++k) {
        const double expected = 0.5 * Sq.times[k] * Sq.times[k];
        src_err = std::max(src_err, std::abs(max_norm(Sq.frames[k]) - expected));
        src_err = std::max(src_err, std::abs(min_value(Sq.frames[k]) - expected));
    }
    report(5, "d'Alembert closed forms", split_err <= 1e-8 && src_err <= 1e-8,
           fmt("split_err", split_err) + " " + fmt("src_err", src_err));
}

void wave_energy_drift() {
    std::mt19937_64 rng(5);
    const Grid g = make_grid(1, 256, 32.0);
    const ScalarField V0 = random_band_limited(g, rng, 30);
    const ScalarField V1 = random_band_limited(g, rng, 30);
    const double dt = 0.01, T = 2.0;
    const WaveStepper ws = make_wave_stepper(g, dt);
    auto Vh = to_spectral(V0).coeff;
    auto Vth = to_spectral(V1).coeff;
    const std::vector<std::complex<double>> zero(g.size(), 0.0);
    const double E0 = wave_energy(WaveState{V0, V1, 0.0});
    double drift = 0.0;
    const int steps = static_cast<int>(std::lround(T / dt));
    for (int k = 0; k < steps; ++k) {
        wave_step_spectral(ws, Vh, Vth, zero, zero);
        SpectralField V(g), Vt(g);
        V.coeff = Vh;
        Vt.coeff = Vth;
        const double E = wave_energy(WaveState{to_physical(V), to_physical(Vt), 0.0});
        drift = std::max(drift, std::abs(E - E0) / E0);
    }
    report(6, "free-wave energy conservation", drift <= 1e-10, fmt("drift", drift));
}

// shared by criteria 7 and 12
struct PicardSetup {
    SolverConfig config;
    ScalarField u0;
    PicardResult result;
};

PicardSetup run_picard_reference() {
    PicardSetup s;
    s.config.grid = make_grid(1, 256, 64.0);
    s.config.T = 0.5;
    s.config.dt = 2e-3;
    const ScalarField zero(s.config.grid);
    IterationConfig it;
    it.rel_tol = 1e-10;
    it.max_iters = 25;

    s.u0 = gaussian(s.config.grid, 1.0, 32.0, 2.0);
    const ContractionReport pre =
        estimate_constants(s.u0, zero, zero, s.config, it.norm_spec, 8, 1234);
    const double scale = 0.1 * pre.alpha / pre.data_norm;
    for (auto& v : s.u0.samples) v *= scale;
    s.result = picard_solve(s.u0, zero, zero, s.config, it);
    return s;
}

void fixed_point(const PicardSetup& s) {
    const SolverConfig& c = s.config;
    const ScalarField zero(c.grid);
    const IterationConfig it{25, 1e-10, NormSpec::l2t_h1_norm(), 8, 1234};
    const PicardResult& r = s.result;

    bool monotone = true;
    for (std::size_t k = 2; k < r.residual_history.size(); ++k)
        if (r.residual_history[k] > r.residual_history[k - 1] * (1.0 + 1e-9))
            monotone = false;

    const std::vector<double> times = make_times(c.T, c.dt);
    const SpaceTimeField gamma = heat_flow(s.u0, times);
    SpaceTimeField resid = gamma;
    const SpaceTimeField bx = bilinear_B(r.solution, r.solution, c);
    for (std::size_t k = 0; k < resid.frames.size(); ++k)
        for (std::size_t i = 0; i < resid.frames[k].samples.size(); ++i)
            resid.frames[k].samples[i] +=
                bx.frames[k].samples[i] - r.solution.frames[k].samples[i];
    const double rn = solution_norm(resid, it.norm_spec);
    const double xn = solution_norm(r.solution, it.norm_spec);

    // independent start inside the ball
    SpaceTimeField y = gamma;
    for (auto& f : y.frames)
        for (auto& v : f.samples) v *= 0.5;
    for (int k = 0; k < 40; ++k) {
        SpaceTimeField y_new = gamma;
        const SpaceTimeField by = bilinear_B(y, y, c);
        for (std::size_t m = 0; m < y_new.frames.size(); ++m)
            for (std::size_t i = 0; i < y_new.frames[m].samples.size(); ++i)
                y_new.frames[m].samples[i] += by.frames[m].samples[i];
        y = std::move(y_new);
    }
    SpaceTimeField gap = y;
    for (std::size_t m = 0; m < gap.frames.size(); ++m)
        for (std::size_t i = 0; i < gap.frames[m].samples.size(); ++i)
            gap.frames[m].samples[i] -= r.solution.frames[m].samples[i];
    const double two_starts = solution_norm(gap, it.norm_spec);

    report(7, "Picard fixed point",
           r.iterations <= 25 && monotone && rn <= 2.0 * it.rel_tol * xn &&
               two_starts <= 10.0 * it.rel_tol * xn,
           fmt("iters", r.iterations) + " " + fmt("resid", rn / xn) + " " +
               fmt("two_starts", two_starts / xn));
}

void operator_oracles() {
    SolverConfig c;
    c.grid = make_grid(1, 32, 16.0);
    c.T = 0.5;
    c.dt = 0.005;
    const ScalarField uf = cosine_mode(c.grid, 1, 0.5);
    const ScalarField wf = cosine_mode(c.grid, 2, 0.8);
    const ScalarField V0 = cosine_mode(c.grid, 2, 0.6);
    const ScalarField V1 = cosine_mode(c.grid, 1, 0.25);
    SpaceTimeField u;
    u.grid = c.grid;
    u.times = make_times(c.T, c.dt);
    u.frames.assign(u.times.size(), uf);

    // dense-quadrature brute force at dt/16 for each pipeline stage
    const int refine = 16;
    const double dtf = c.dt / refine;
    const std::size_t n_fine = (u.times.size() - 1) * refine + 1;
    const std::vector<double> xi2 = frequency_sq(c.grid);
    const SpectralField wh = to_spectral(wf);
    const SpectralField v0h = to_spectral(V0);
    const SpectralField v1h = to_spectral(V1);

    auto brute = [&](bool use_wave_data) {
        std::vector<SpectralField> src;
        src.reserve(n_fine);
        for (std::size_t m = 0; m < n_fine; ++m) {
            const double t = static_cast<double>(m) * dtf;
            SpectralField Sh(c.grid);
            for (std::size_t i = 0; i < c.grid.size(); ++i) {
                const double om = std::sqrt(xi2[i]);
                if (use_wave_data) {
                    const double sinc = om == 0.0 ? t : std::sin(om * t) / om;
                    Sh.coeff[i] = std::cos(om * t) * v0h.coeff[i] + sinc * v1h.coeff[i];
                } else {
                    double kernel = 0.0;
                    for (std::size_t q = 0; q <= m; ++q) {
                        const double tau = static_cast<double>(q) * dtf;
                        const double wgt = (q == 0 || q == m) ? 0.5 : 1.0;
                        kernel += wgt * (om == 0.0 ? (t - tau)
                                                   : std::sin(om * (t - tau)) / om);
                    }
                    Sh.coeff[i] = wh.coeff[i] * kernel * dtf;
                }
            }
            const ScalarField gS = to_physical(derivative(Sh, 0));
            ScalarField prod(c.grid);
            for (std::size_t i = 0; i < c.grid.size(); ++i)
                prod.samples[i] = uf.samples[i] * gS.samples[i];
            src.push_back(derivative(to_spectral(prod), 0));
        }
        SpaceTimeField out;
        out.grid = c.grid;
        out.times = u.times;
        for (std::size_t k = 0; k < u.times.size(); ++k) {
            const std::size_t mk = k * refine;
            const double tk = u.times[k];
            SpectralField acc(c.grid);
            for (std::size_t i = 0; i < c.grid.size() && mk > 0; ++i) {
                std::complex<double> sum(0.0, 0.0);
                for (std::size_t q = 0; q <= mk; ++q) {
                    const double tau = static_cast<double>(q) * dtf;
                    const double wgt = (q == 0 || q == mk) ? 0.5 : 1.0;
                    sum += wgt * std::exp(-xi2[i] * (tk - tau)) * src[q].coeff[i];
                }
                acc.coeff[i] = sum * dtf;
            }
            out.frames.push_back(to_physical(acc));
        }
        return out;
    };

    SpaceTimeField w = u;
    w.frames.assign(w.times.size(), wf);
    const SpaceTimeField libB = bilinear_B(u, w, c);
    const SpaceTimeField oraB = brute(false);
    const SpaceTimeField libL = linear_L(u, V0, V1, c);
    const SpaceTimeField oraL = brute(true);
    double errB = 0.0, errL = 0.0;
    for (std::size_t k = 0; k < u.times.size(); ++k) {
        errB = std::max(errB, max_diff(libB.frames[k], oraB.frames[k]));
        errL = std::max(errL, max_diff(libL.frames[k], oraL.frames[k]));
    }
    report(8, "bilinear/linear brute-force oracles", errB <= 1e-6 && errL <= 1e-6,
           fmt("errB", errB) + " " + fmt("errL", errL));
}

void t_independence() {
    SolverConfig c;
    c.grid = make_grid(2, 128, 32.0);
    c.dt = 0.02;
    const NormSpec norm = NormSpec::chemin(1.0, 0.0);  // s = n/2 - 1 = 0
    const ScalarField zero(c.grid);
    const ScalarField u0 = gaussian(c.grid, 0.05, 16.0, 2.0);
    std::vector<double> c0s;
    for (double T : {0.5, 1.0, 2.0}) {
        c.T = T;
        const ContractionReport r = estimate_constants(u0, zero, zero, c, norm, 16, 2024);
        c0s.push_back(r.C0);
    }
    const double lo = std::min({c0s[0], c0s[1], c0s[2]});
    const double hi = std::max({c0s[0], c0s[1], c0s[2]});
    const double variation = (hi - lo) / hi;
    report(9, "T-independence of C0", variation < 0.25, fmt("variation", variation));
}

void strichartz() {
    const Grid g = make_grid(1, 128, 16.0);
    const DyadicFilterBank bank = build_filter_bank(g);
    std::mt19937_64 rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        for (double T : {0.5, 1.0, 2.0}) {
            SpaceTimeField u;
            u.grid = g;
            u.times = make_times(T, 0.02);
            for (std::size_t k = 0; k < u.times.size(); ++k)
                u.frames.push_back(random_band_limited(g, rng, 15));
            const ScalarField V0 = random_band_limited(g, rng, 15);
            const ScalarField V1 = random_band_limited(g, rng, 15);
            worst = std::max(worst, strichartz_energy_probe(u, V0, V1, 0.5, bank));
        }
    }

    SpaceTimeField u;
    u.grid = g;
    u.times = make_times(1.0, 0.02);
    for (std::size_t k = 0; k < u.times.size(); ++k)
        u.frames.push_back(random_band_limited(g, rng, 15));
    ScalarField V0 = random_band_limited(g, rng, 15);
    ScalarField V1 = random_band_limited(g, rng, 15);
    const double r1 = strichartz_energy_probe(u, V0, V1, 0.5, bank);
    for (auto& f : u.frames)
        for (auto& v : f.samples) v *= 7.0;
    for (auto& v : V0.samples) v *= 7.0;
    for (auto& v : V1.samples) v *= 7.0;
    const double r2 = strichartz_energy_probe(u, V0, V1, 0.5, bank);
    const double scale_gap = std::abs(r1 - r2) / r1;
    report(10, "energy-estimate probe", worst < 10.0 && scale_gap <= 1e-12,
           fmt("empirical_C", worst) + " " + fmt("scale_gap", scale_gap));
}

void gn_diagnostic() {
    auto gn_max = [](int n, double dt) {
        SolverConfig c;
        c.grid = make_grid(1, n, 64.0);
        c.T = 1.0;
        c.dt = dt;
        const SimResult r = run({gaussian(c.grid, 0.5, 32.0, 2.0)},
                                gaussian(c.grid, 0.1, 32.0, 2.0), ScalarField(c.grid), c);
        double m = 0.0;
        bool finite = true;
        for (const auto& row : r.diagnostics) {
            if (!std::isfinite(row.gn_ratio)) finite = false;
            m = std::max(m, row.gn_ratio);
        }
        return std::pair<bool, double>{finite, m};
    };
    const auto [f1, m1] = gn_max(512, 1e-3);
    const auto [f2, m2] = gn_max(1024, 5e-4);
    report(11, "Gagliardo-Nirenberg diagnostic",
           f1 && f2 && m2 < 2.0 * m1 && m1 < 2.0 * m2,
           fmt("max", m1) + " " + fmt("refined_max", m2));
}

void picard_vs_stepper(const PicardSetup& s) {
    SolverConfig c = s.config;
    const ScalarField zero(c.grid);
    const SimResult r = run({s.u0}, zero, zero, c);
    const double gap =
        max_diff(r.u[0].frames.back(), s.result.solution.frames.back());
    report(12, "Picard vs time-stepper", gap <= 1e-5, fmt("terminal_gap", gap));
}

void multi_species() {
    SolverConfig c;
    c.grid = make_grid(1, 256, 64.0);
    c.T = 0.5;
    c.dt = 1e-3;
    c.species = {Species{1.0, 1.0}, Species{-1.0, 1.0}};
    const ScalarField u0 = gaussian(c.grid, 0.5, 32.0, 2.0);
    const SimResult r = run({u0, u0}, ScalarField(c.grid), ScalarField(c.grid), c);
    double worst = 0.0;
    for (std::size_t k = 0; k < r.u[0].times.size(); ++k) {
        const ScalarField heat = heat_propagate(u0, r.u[0].times[k]);
        worst = std::max(worst, max_diff(r.u[0].frames[k], heat));
        worst = std::max(worst, max_diff(r.u[1].frames[k], heat));
    }
    report(13, "multi-species cancellation", worst <= 1e-10, fmt("gap", worst));
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    mass_positivity_l1();
    heat_exactness();
    dalembert();
    wave_energy_drift();
    const PicardSetup picard = run_picard_reference();
    fixed_point(picard);
    operator_oracles();
    t_independence();
    strichartz();
    gn_diagnostic();
    picard_vs_stepper(picard);
    multi_species();
    const auto t1 = std::chrono::steady_clock::now();
    std::printf("total %.1f s, %d failure(s)\n",
                std::chrono::duration<double>(t1 - t0).count(), failures);
    return failures == 0 ? 0 : 1;
}
