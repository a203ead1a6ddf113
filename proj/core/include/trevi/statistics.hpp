#pragma once

#include <span>
#include <vector>

#include "trevi/density.hpp"
#include "trevi/series.hpp"
#include "trevi/tick.hpp"

namespace trevi {

/// Volatility increments delta-sigma(t) = sigma_r(t) - sigma_h(t), one sample
/// per tick where both windows fit; sample count = length - 2 * horizon.
std::vector<double> vol_increments(const RegularSeries& prices, const VolSpec& spec);

/// Asymmetry of the return distribution: returns at dt_r are scaled by their
/// sample standard deviation, their density estimated on the symmetric
/// equal-count grid, and the mirror asymmetry averaged over positive nodes
/// below the quantile_bound-th percentile of the scaled |returns|.
double return_density_asymmetry(const RegularSeries& prices, Tick dt_r = ticks::day,
                                int node_count = 41, double quantile_bound = 0.95);

/// Linear-interpolation quantile (sorts a copy of xs).
double quantile(std::span<const double> xs, double q);

} // namespace trevi
