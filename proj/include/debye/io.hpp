#ifndef DEBYE_IO_HPP
#define DEBYE_IO_HPP

#include <string>
#include <vector>

#include "debye/grid.hpp"
#include "debye/lp.hpp"
#include "debye/sim.hpp"

namespace debye {

// Binary field snapshot "DBW1": magic `DBW1`, u8 dim, u8 0, u16 0,
// u32 LE n_per_axis, f64 LE length, then n^dim f64 LE samples row-major.
void write_dbw1(const std::string& path, const ScalarField& f);
ScalarField read_dbw1(const std::string& path);

/// Diagnostics CSV, f64 columns printed with 17 significant digits.
void write_diagnostics_csv(const std::string& path, const std::vector<DiagnosticsRow>& rows);
std::vector<DiagnosticsRow> read_diagnostics_csv(const std::string& path);

/// BesovProfile CSV: `j,weighted_block_norm` rows plus a trailing TOTAL row.
void write_besov_csv(const std::string& path, const BesovProfile& prof);
BesovProfile read_besov_csv(const std::string& path);

}  // namespace debye

#endif
