#include "debye/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "debye/config.hpp"
#include "debye/heat.hpp"
#include "debye/io.hpp"
#include "debye/mild.hpp"
#include "debye/random_fields.hpp"
#include "debye/sim.hpp"
#include "debye/wave.hpp"

namespace debye {

namespace {

namespace fs = std::filesystem;

std::string iso_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string default_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("DEBYE_OUT_DIR"); env && *env) return env;
    return ".";
}

int load_config(const std::string& path, ParsedConfig& out) {
    std::ifstream is(path);
    if (!is) {
        std::cerr << "error: cannot open config file " << path << "\n";
        return 1;
    }
    std::stringstream ss;
    ss << is.rdbuf();
    const ParseResult parsed = parse_config(ss.str());
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) {
            if (e.line > 0)
                std::cerr << path << ":" << e.line << ": " << e.message << "\n";
            else
                std::cerr << path << ": " << e.message << "\n";
        }
        return 1;
    }
    out = parsed.config;
    return 0;
}

NormSpec norm_for_dim(int dim) {
    return dim == 1 ? NormSpec::l2t_h1_norm() : NormSpec::chemin(1.0, 0.5 * dim - 1.0);
}

int do_run(const std::string& config_path, const std::string& out_dir) {
    ParsedConfig cfg;
    if (const int rc = load_config(config_path, cfg)) return rc;

    RunManifest manifest;
    manifest.config_hash = cfg.config_hash;
    manifest.code_version = kCodeVersion;
    manifest.seed = cfg.output.seed;
    manifest.started = iso_now();

    std::vector<ScalarField> u0;
    ScalarField V0, V1;
    try {
        for (const auto& spec : cfg.u0)
            u0.push_back(realize_initial_data(spec, cfg.solver.grid));
        V0 = realize_initial_data(cfg.V0, cfg.solver.grid);
        V1 = realize_initial_data(cfg.V1, cfg.solver.grid);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    SimResult result;
    try {
        result = run(u0, V0, V1, cfg.solver);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    fs::create_directories(out_dir);
    const std::string diag_path = (fs::path(out_dir) / "diagnostics.csv").string();
    write_diagnostics_csv(diag_path, result.diagnostics);
    manifest.outputs.push_back(diag_path);

    if (cfg.output.snapshot_stride > 0) {
        const std::size_t stride = static_cast<std::size_t>(cfg.output.snapshot_stride);
        for (std::size_t k = 0; k < result.V.n_frames(); k += stride) {
            for (std::size_t j = 0; j < result.u.size(); ++j) {
                std::ostringstream name;
                name << "u" << j << "_" << k << ".dbw1";
                const std::string p = (fs::path(out_dir) / name.str()).string();
                write_dbw1(p, result.u[j].frames[k]);
                manifest.outputs.push_back(p);
            }
            std::ostringstream name;
            name << "V_" << k << ".dbw1";
            const std::string p = (fs::path(out_dir) / name.str()).string();
            write_dbw1(p, result.V.frames[k]);
            manifest.outputs.push_back(p);
        }
    }
    manifest.finished = iso_now();
    write_manifest((fs::path(out_dir) / "manifest.json").string(), manifest);
    return 0;
}

int do_probe(const std::string& config_path, const std::string& out_dir, bool constants,
             bool smoothing, bool strichartz, int trials, unsigned long long seed,
             double sigma, const std::string& q_text, double s_flag, bool s_given) {
    ParsedConfig cfg;
    if (const int rc = load_config(config_path, cfg)) return rc;
    const Grid& grid = cfg.solver.grid;

    ScalarField u0, V0, V1;
    try {
        u0 = realize_initial_data(cfg.u0.at(0), grid);
        V0 = realize_initial_data(cfg.V0, grid);
        V1 = realize_initial_data(cfg.V1, grid);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    fs::create_directories(out_dir);
    std::ostringstream report;
    report.precision(17);
    try {
        if (constants) {
            const ContractionReport rep = estimate_constants(
                u0, V0, V1, cfg.solver, norm_for_dim(grid.dim), trials, seed);
            report << rep.to_key_value();
        }
        if (smoothing) {
            double q = 0.0;
            if (q_text == "1")
                q = 1.0;
            else if (q_text == "2")
                q = 2.0;
            else if (q_text == "inf")
                q = std::numeric_limits<double>::infinity();
            else {
                std::cerr << "error: --q must be 1, 2 or inf\n";
                return 1;
            }
            const DyadicFilterBank bank = build_filter_bank(grid);
            report << "smoothing_ratio="
                   << smoothing_probe(u0, sigma, cfg.solver.T, q, bank) << "\n";
        }
        if (strichartz) {
            const double s = s_given ? s_flag : 0.5 * grid.dim - 1.0;
            const DyadicFilterBank bank = build_filter_bank(grid);
            std::mt19937_64 rng(seed);
            const std::vector<double> times = make_times(cfg.solver.T, cfg.solver.dt);
            SpaceTimeField u;
            u.grid = grid;
            u.times = times;
            const ScalarField h = random_band_limited(grid, rng, grid.n_per_axis / 8);
            for (double t : times) {
                ScalarField f = h;
                for (auto& v : f.samples) v *= std::cos(t);
                u.frames.push_back(std::move(f));
            }
            report << "strichartz_ratio=" << strichartz_energy_probe(u, V0, V1, s, bank)
                   << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::ofstream os((fs::path(out_dir) / "report.txt").string());
    os << report.str();
    return 0;
}

int do_norms(const std::string& snapshot, double s, const std::string& out_file) {
    try {
        const ScalarField f = read_dbw1(snapshot);
        const DyadicFilterBank bank = build_filter_bank(f.grid);
        write_besov_csv(out_file, besov_profile(f, s, bank));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int do_convert(const std::string& snapshot, const std::string& diagnostics,
               const std::string& column, const std::string& out_file) {
    try {
        std::ofstream os(out_file);
        if (!os) throw std::runtime_error("cannot open " + out_file);
        os.precision(17);
        if (!snapshot.empty()) {
            const ScalarField f = read_dbw1(snapshot);
            if (f.grid.dim != 1)
                throw std::runtime_error("convert: snapshot rendering supports dim=1 only");
            if (column != "value") throw std::runtime_error("convert: snapshot column must be 'value'");
            os << "x,value\n";
            for (std::size_t i = 0; i < f.samples.size(); ++i)
                os << static_cast<double>(i) * f.grid.dx << ',' << f.samples[i] << '\n';
        } else {
            const auto rows = read_diagnostics_csv(diagnostics);
            os << "t," << column << "\n";
            for (const auto& r : rows) {
                double v;
                if (column == "mass")
                    v = r.mass;
                else if (column == "l1")
                    v = r.l1;
                else if (column == "l2")
                    v = r.l2;
                else if (column == "h1")
                    v = r.h1;
                else if (column == "min_u")
                    v = r.min_u;
                else if (column == "energy_lhs")
                    v = r.energy_lhs;
                else if (column == "energy_rhs")
                    v = r.energy_rhs;
                else if (column == "gn_ratio")
                    v = r.gn_ratio;
                else
                    throw std::runtime_error("convert: unknown column '" + column + "'");
                os << r.t << ',' << v << '\n';
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args) {
    CLI::App app{"Debye transport-diffusion / wave simulator"};
    app.require_subcommand(1);

    auto* run_cmd = app.add_subcommand("run", "execute a simulation config");
    std::vector<std::string> run_configs;
    std::string run_out;
    int jobs = 1;
    run_cmd->add_option("--config", run_configs, "config file(s)")->required();
    run_cmd->add_option("--out", run_out, "output directory");
    run_cmd->add_option("--jobs", jobs, "parallel fan-out over config files");

    auto* probe_cmd = app.add_subcommand("probe", "operator-norm and estimate probes");
    std::string probe_config, probe_out, q_text = "inf";
    bool constants = false, smoothing = false, strichartz = false;
    int trials = 16;
    unsigned long long seed = 0;
    double sigma = 0.0, s_flag = 0.0;
    probe_cmd->add_option("--config", probe_config)->required();
    probe_cmd->add_flag("--constants", constants);
    probe_cmd->add_flag("--smoothing", smoothing);
    probe_cmd->add_flag("--strichartz", strichartz);
    probe_cmd->add_option("--trials", trials);
    probe_cmd->add_option("--seed", seed);
    probe_cmd->add_option("--sigma", sigma);
    probe_cmd->add_option("--q", q_text);
    auto* s_opt = probe_cmd->add_option("--s", s_flag);
    probe_cmd->add_option("--out", probe_out);

    auto* norms_cmd = app.add_subcommand("norms", "Besov profile of a snapshot");
    std::string norms_snapshot, norms_out = "besov.csv";
    double norms_s = 0.0;
    norms_cmd->add_option("--snapshot", norms_snapshot)->required();
    norms_cmd->add_option("--s", norms_s);
    norms_cmd->add_option("--out", norms_out);

    auto* conv_cmd = app.add_subcommand("convert", "render snapshot/diagnostics to plot data");
    std::string conv_snapshot, conv_diag, conv_column = "value", conv_out = "plot.csv";
    conv_cmd->add_option("--snapshot", conv_snapshot);
    conv_cmd->add_option("--diagnostics", conv_diag);
    conv_cmd->add_option("--column", conv_column);
    conv_cmd->add_option("--out", conv_out);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::vector<const char*> dummy;
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (run_cmd->parsed()) {
        const std::string out_root = default_out_dir(run_out);
        int worst = 0;
        if (run_configs.size() == 1) return do_run(run_configs[0], out_root);
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs)) reduction(max : worst)
        for (std::size_t i = 0; i < run_configs.size(); ++i) {
            const std::string stem = fs::path(run_configs[i]).stem().string();
            const int rc = do_run(run_configs[i],
                                  (fs::path(out_root) / stem).string());
            worst = std::max(worst, rc);
        }
        return worst;
    }
    if (probe_cmd->parsed()) {
        if (!constants && !smoothing && !strichartz) {
            std::cerr << "error: probe requires --constants, --smoothing or --strichartz\n";
            return 1;
        }
        return do_probe(probe_config, default_out_dir(probe_out), constants, smoothing,
                        strichartz, trials, seed, sigma, q_text, s_flag, !s_opt->empty());
    }
    if (norms_cmd->parsed()) return do_norms(norms_snapshot, norms_s, norms_out);
    if (conv_cmd->parsed()) {
        if (conv_snapshot.empty() == conv_diag.empty()) {
            std::cerr << "error: convert requires exactly one of --snapshot, --diagnostics\n";
            return 1;
        }
        return do_convert(conv_snapshot, conv_diag, conv_column, conv_out);
    }
    return 1;
}

}  // namespace debye
