#ifndef DEBYE_CONFIG_HPP
#define DEBYE_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "debye/grid.hpp"
#include "debye/sim.hpp"

namespace debye {

/// Initial-data generator description.
struct InitialDataSpec {
    enum class Kind { zero, gaussian, dgaussian, mode, file } kind = Kind::zero;
    double amplitude = 1.0;
    double center = 0.0;
    double width = 1.0;
    int wavenumber = 1;
    std::string path;  // kind == file
};

ScalarField realize_initial_data(const InitialDataSpec& spec, const Grid& grid);

struct OutputOptions {
    std::string out_dir;
    int snapshot_stride = 0;  // 0 = no snapshots
    unsigned long long seed = 0;
};

struct ParsedConfig {
    SolverConfig solver;
    std::vector<InitialDataSpec> u0;  // one per species
    InitialDataSpec V0;
    InitialDataSpec V1;
    OutputOptions output;
    std::uint64_t config_hash = 0;  // of the canonicalized config text
};

struct ConfigError {
    int line = 0;  // 0 when not tied to a single line
    std::string message;
};

/// Flat key=value format with `#` comments and dotted species keys.
/// Returns all errors, not just the first.
struct ParseResult {
    ParsedConfig config;
    std::vector<ConfigError> errors;
    bool ok() const { return errors.empty(); }
};

ParseResult parse_config(const std::string& text);

/// FNV-1a over the canonicalized (sorted, whitespace/comment-free) key=value list.
std::uint64_t config_hash(const std::string& text);

struct RunManifest {
    std::uint64_t config_hash = 0;
    std::string code_version;
    std::string started;
    std::string finished;
    unsigned long long seed = 0;
    std::vector<std::string> outputs;
};

void write_manifest(const std::string& path, const RunManifest& m);

inline constexpr const char* kCodeVersion = "debye 0.1.0";

}  // namespace debye

#endif
