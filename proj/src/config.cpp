#include "debye/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "debye/io.hpp"

namespace debye {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

struct RawEntry {
    std::string value;
    int line = 0;
};

/// Split into key=value entries, dropping comments and blank lines.
std::map<std::string, RawEntry> tokenize(const std::string& text,
                                         std::vector<ConfigError>& errors) {
    std::map<std::string, RawEntry> kv;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back({lineno, "expected key=value"});
            continue;
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            errors.push_back({lineno, "empty key or value"});
            continue;
        }
        if (kv.count(key)) {
            errors.push_back({lineno, "duplicate key '" + key + "'"});
            continue;
        }
        kv[key] = {value, lineno};
    }
    return kv;
}

std::optional<double> parse_double(const std::string& s) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

std::optional<long long> parse_int(const std::string& s) {
    try {
        std::size_t pos = 0;
        const long long v = std::stoll(s, &pos);
        if (pos != s.size()) return std::nullopt;
        return v;
    } catch (...) {
        return std::nullopt;
    }
}

class Reader {
  public:
    Reader(std::map<std::string, RawEntry> kv, std::vector<ConfigError>& errors)
        : kv_(std::move(kv)), errors_(errors) {}

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    double number(const std::string& key, double fallback, bool required) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) {
            if (required) errors_.push_back({0, "missing required key '" + key + "'"});
            return fallback;
        }
        consumed_.insert(key);
        const auto v = parse_double(it->second.value);
        if (!v) {
            errors_.push_back({it->second.line, "'" + key + "' must be a number"});
            return fallback;
        }
        return *v;
    }

    long long integer(const std::string& key, long long fallback, bool required) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) {
            if (required) errors_.push_back({0, "missing required key '" + key + "'"});
            return fallback;
        }
        consumed_.insert(key);
        const auto v = parse_int(it->second.value);
        if (!v) {
            errors_.push_back({it->second.line, "'" + key + "' must be an integer"});
            return fallback;
        }
        return *v;
    }

    std::string text(const std::string& key, const std::string& fallback) {
        const auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        consumed_.insert(key);
        return it->second.value;
    }

    int line_of(const std::string& key) const {
        const auto it = kv_.find(key);
        return it == kv_.end() ? 0 : it->second.line;
    }

    void report_unknown() {
        for (const auto& [key, entry] : kv_)
            if (!consumed_.count(key))
                errors_.push_back({entry.line, "unknown key '" + key + "'"});
    }

  private:
    std::map<std::string, RawEntry> kv_;
    std::set<std::string> consumed_;
    std::vector<ConfigError>& errors_;
};

InitialDataSpec read_data_spec(Reader& r, const std::string& prefix,
                               std::vector<ConfigError>& errors) {
    InitialDataSpec spec;
    if (!r.has(prefix + ".kind")) return spec;  // absent -> zero
    const std::string kind = r.text(prefix + ".kind", "");
    if (kind == "zero")
        spec.kind = InitialDataSpec::Kind::zero;
    else if (kind == "gaussian")
        spec.kind = InitialDataSpec::Kind::gaussian;
    else if (kind == "dgaussian")
        spec.kind = InitialDataSpec::Kind::dgaussian;
    else if (kind == "mode")
        spec.kind = InitialDataSpec::Kind::mode;
    else if (kind == "file")
        spec.kind = InitialDataSpec::Kind::file;
    else
        errors.push_back({r.line_of(prefix + ".kind"),
                          "'" + prefix + ".kind' must be one of zero|gaussian|dgaussian|mode|file"});
    spec.amplitude = r.number(prefix + ".amplitude", 1.0, false);
    spec.center = r.number(prefix + ".center", 0.0, false);
    spec.width = r.number(prefix + ".width", 1.0, false);
    spec.wavenumber = static_cast<int>(r.integer(prefix + ".wavenumber", 1, false));
    spec.path = r.text(prefix + ".path", "");
    if ((spec.kind == InitialDataSpec::Kind::gaussian ||
         spec.kind == InitialDataSpec::Kind::dgaussian) &&
        !(spec.width > 0.0))
        errors.push_back({r.line_of(prefix + ".width"),
                          "'" + prefix + ".width' must be positive"});
    if (spec.kind == InitialDataSpec::Kind::file && spec.path.empty())
        errors.push_back({r.line_of(prefix + ".kind"),
                          "'" + prefix + ".path' required for kind=file"});
    return spec;
}

bool is_pow2(long long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

ParseResult parse_config(const std::string& text) {
    ParseResult res;
    auto& errors = res.errors;
    auto kv = tokenize(text, errors);

    // a species block is declared by its u0.kind key; any other species.<i>.*
    // key without a declaration surfaces as an unknown (orphan) key below
    std::set<int> species_idx;
    for (const auto& [key, entry] : kv) {
        if (key.rfind("species.", 0) != 0) continue;
        const auto rest = key.substr(8);
        const auto dot = rest.find('.');
        if (dot == std::string::npos || rest.substr(dot) != ".u0.kind") continue;
        const auto idx = parse_int(rest.substr(0, dot));
        if (!idx || *idx < 1)
            errors.push_back({entry.line, "bad species index in '" + key + "'"});
        else
            species_idx.insert(static_cast<int>(*idx));
    }
    const int m = species_idx.empty() ? 0 : *species_idx.rbegin();
    for (int i = 1; i <= m; ++i)
        if (!species_idx.count(i))
            errors.push_back({0, "species indices must be contiguous from 1; species." +
                                     std::to_string(i) + " is missing"});
    if (m == 0) errors.push_back({0, "at least one species block required"});

    Reader r(std::move(kv), errors);
    const long long dim = r.integer("dim", 1, true);
    const long long n = r.integer("n", 0, true);
    const double length = r.number("length", 0.0, true);
    const double T = r.number("T", 0.0, true);
    const double dt = r.number("dt", 0.0, true);

    if (dim != 1 && dim != 2) errors.push_back({r.line_of("dim"), "dim must be 1 or 2"});
    if (!is_pow2(n) || n < 16)
        errors.push_back({r.line_of("n"), "n must be a power of two >= 16"});
    if (!(length > 0.0)) errors.push_back({r.line_of("length"), "length must be positive"});
    if (!(T > 0.0)) errors.push_back({r.line_of("T"), "T must be positive"});
    if (!(dt > 0.0)) errors.push_back({r.line_of("dt"), "dt must be positive"});
    if (T > 0.0 && dt > 0.0) {
        const double steps = T / dt;
        if (std::abs(steps - std::round(steps)) > 1e-9 * steps)
            errors.push_back({r.line_of("dt"), "T/dt must be an integer"});
    }

    const std::string wrap = r.text("wrap_policy", "warn");
    if (wrap != "warn" && wrap != "error")
        errors.push_back({r.line_of("wrap_policy"), "wrap_policy must be warn or error"});

    res.config.solver.T = T;
    res.config.solver.dt = dt;
    res.config.solver.wrap_policy = wrap == "error" ? WrapPolicy::error : WrapPolicy::warn;
    res.config.solver.species.clear();
    for (int i = 1; i <= m; ++i) {
        const std::string prefix = "species." + std::to_string(i);
        Species sp;
        sp.alpha = r.number(prefix + ".alpha", 1.0, false);
        sp.beta = r.number(prefix + ".beta", 1.0, false);
        res.config.solver.species.push_back(sp);
        res.config.u0.push_back(read_data_spec(r, prefix + ".u0", errors));
    }
    res.config.V0 = read_data_spec(r, "V0", errors);
    res.config.V1 = read_data_spec(r, "V1", errors);

    res.config.output.snapshot_stride =
        static_cast<int>(r.integer("snapshot_stride", 0, false));
    res.config.output.seed =
        static_cast<unsigned long long>(r.integer("seed", 0, false));
    res.config.output.out_dir = r.text("out_dir", "");

    r.report_unknown();

    if (errors.empty()) {
        res.config.solver.grid =
            make_grid(static_cast<int>(dim), static_cast<int>(n), length);
        res.config.config_hash = config_hash(text);
    }
    std::sort(errors.begin(), errors.end(),
              [](const ConfigError& a, const ConfigError& b) { return a.line < b.line; });
    return res;
}

std::uint64_t config_hash(const std::string& text) {
    std::vector<ConfigError> ignored;
    const auto kv = tokenize(text, ignored);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& [key, entry] : kv) {  // std::map: sorted by key
        mix(key);
        mix("=");
        mix(entry.value);
        mix("\n");
    }
    return h;
}

ScalarField realize_initial_data(const InitialDataSpec& spec, const Grid& grid) {
    if (spec.kind == InitialDataSpec::Kind::file) {
        ScalarField f = read_dbw1(spec.path);
        if (!(f.grid == grid))
            throw std::runtime_error("initial data file '" + spec.path +
                                     "' does not match the run's grid");
        return f;
    }
    ScalarField f(grid);
    const int n = grid.n_per_axis;
    auto value_1d = [&](double x) {
        const double r = x - spec.center;
        switch (spec.kind) {
            case InitialDataSpec::Kind::zero:
                return 0.0;
            case InitialDataSpec::Kind::gaussian:
                return spec.amplitude * std::exp(-r * r / (2.0 * spec.width * spec.width));
            case InitialDataSpec::Kind::dgaussian:
                return -spec.amplitude * r / (spec.width * spec.width) *
                       std::exp(-r * r / (2.0 * spec.width * spec.width));
            case InitialDataSpec::Kind::mode:
                return spec.amplitude *
                       std::cos(2.0 * std::numbers::pi * spec.wavenumber * r / grid.length);
            default:
                return 0.0;
        }
    };
    if (grid.dim == 1) {
        for (int i = 0; i < n; ++i) f.samples[i] = value_1d(i * grid.dx);
    } else {
        // product profile per axis, same parameters on both
        std::vector<double> ax(n);
        for (int i = 0; i < n; ++i) ax[i] = value_1d(i * grid.dx);
        const double amp = spec.amplitude;
        for (int ix = 0; ix < n; ++ix)
            for (int iy = 0; iy < n; ++iy)
                f.samples[static_cast<std::size_t>(ix) * n + iy] =
                    amp == 0.0 ? 0.0 : ax[ix] * ax[iy] / amp;
    }
    return f;
}

void write_manifest(const std::string& path, const RunManifest& m) {
    nlohmann::json j;
    char hexbuf[17];
    std::snprintf(hexbuf, sizeof(hexbuf), "%016llx",
                  static_cast<unsigned long long>(m.config_hash));
    j["config_hash"] = std::string(hexbuf);
    j["code_version"] = m.code_version;
    j["started"] = m.started;
    j["finished"] = m.finished;
    j["seed"] = m.seed;
    j["outputs"] = m.outputs;
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_manifest: cannot open " + path);
    os << j.dump(2) << '\n';
}

}  // namespace debye
