#ifndef DEBYE_RANDOM_FIELDS_HPP
#define DEBYE_RANDOM_FIELDS_HPP

#include <random>

#include "debye/grid.hpp"

namespace debye {

/// Random real field with spectrum supported on 1 <= |k_axis| <= kmax,
/// zero mean. Coefficients are O(1) uniform draws; no normalization.
ScalarField random_band_limited(const Grid& g, std::mt19937_64& rng, int kmax);

}  // namespace debye

#endif
