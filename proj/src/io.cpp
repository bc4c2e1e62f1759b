#include "debye/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace debye {

namespace {

void put_u32_le(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    os.write(b, 4);
}

std::uint32_t get_u32_le(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64_le(std::ostream& os, double v) {
    std::uint64_t u;
    std::memcpy(&u, &v, 8);
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((u >> (8 * i)) & 0xff);
    os.write(b, 8);
}

double get_f64_le(std::istream& is) {
    unsigned char b[8];
    is.read(reinterpret_cast<char*>(b), 8);
    std::uint64_t u = 0;
    for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    double v;
    std::memcpy(&v, &u, 8);
    return v;
}

}  // namespace

void write_dbw1(const std::string& path, const ScalarField& f) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("write_dbw1: cannot open " + path);
    os.write("DBW1", 4);
    const char dim = static_cast<char>(f.grid.dim);
    const char zero[3] = {0, 0, 0};
    os.write(&dim, 1);
    os.write(zero, 3);  // u8 reserved + u16 reserved
    put_u32_le(os, static_cast<std::uint32_t>(f.grid.n_per_axis));
    put_f64_le(os, f.grid.length);
    for (double v : f.samples) put_f64_le(os, v);
    if (!os) throw std::runtime_error("write_dbw1: write failed for " + path);
}

ScalarField read_dbw1(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("read_dbw1: cannot open " + path);
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "DBW1", 4) != 0)
        throw std::runtime_error("read_dbw1: bad magic in " + path);
    char dim;
    char reserved[3];
    is.read(&dim, 1);
    is.read(reserved, 3);
    const std::uint32_t n = get_u32_le(is);
    const double length = get_f64_le(is);
    const Grid g = make_grid(static_cast<int>(dim), static_cast<int>(n), length);
    ScalarField f(g);
    for (auto& v : f.samples) v = get_f64_le(is);
    if (!is) throw std::runtime_error("read_dbw1: truncated file " + path);
    return f;
}

void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_diagnostics_csv: cannot open " + path);
    os << "t,mass,l1,l2,h1,min_u,energy_lhs,energy_rhs,gn_ratio,wrapped\n";
    os.precision(17);
    for (const auto& r : rows) {
        os << r.t << ',' << r.mass << ',' << r.l1 << ',' << r.l2 << ',' << r.h1 << ','
           << r.min_u << ',' << r.energy_lhs << ',' << r.energy_rhs << ',' << r.gn_ratio
           << ',' << (r.wrapped ? 1 : 0) << '\n';
    }
}

std::vector<DiagnosticsRow> read_diagnostics_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_diagnostics_csv: cannot open " + path);
    std::string line;
    if (!std::getline(is, line) || line != "t,mass,l1,l2,h1,min_u,energy_lhs,energy_rhs,gn_ratio,wrapped")
        throw std::runtime_error("read_diagnostics_csv: bad header in " + path);
    std::vector<DiagnosticsRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        DiagnosticsRow r;
        char c;
        int wrapped;
        if (!(ls >> r.t >> c >> r.mass >> c >> r.l1 >> c >> r.l2 >> c >> r.h1 >> c >>
              r.min_u >> c >> r.energy_lhs >> c >> r.energy_rhs >> c >> r.gn_ratio >> c >>
              wrapped))
            throw std::runtime_error("read_diagnostics_csv: bad row in " + path);
        r.wrapped = wrapped != 0;
        rows.push_back(r);
    }
    return rows;
}

void write_besov_csv(const std::string& path, const BesovProfile& prof) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_besov_csv: cannot open " + path);
    os << "j,weighted_block_norm\n";
    os.precision(17);
    for (const auto& [j, v] : prof.entries) os << j << ',' << v << '\n';
    os << "TOTAL," << prof.total << '\n';
}

BesovProfile read_besov_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("read_besov_csv: cannot open " + path);
    std::string line;
    if (!std::getline(is, line) || line != "j,weighted_block_norm")
        throw std::runtime_error("read_besov_csv: bad header in " + path);
    BesovProfile prof;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("read_besov_csv: bad row in " + path);
        const std::string key = line.substr(0, comma);
        const double v = std::stod(line.substr(comma + 1));
        if (key == "TOTAL")
            prof.total = v;
        else
            prof.entries.emplace_back(std::stoi(key), v);
    }
    return prof;
}

}  // namespace debye
