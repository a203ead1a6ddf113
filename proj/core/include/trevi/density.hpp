#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace trevi {

/// Probability density sampled on a non-uniform grid that is exactly
/// mirror-symmetric about 0 (node -g present iff +g is, plus the 0 node).
struct Density {
    std::vector<double> grid;         // strictly increasing node positions
    std::vector<double> node_density; // one non-negative value per node
    std::int64_t sample_count = 0;

    std::size_t node_count() const { return grid.size(); }
    /// Number of strictly positive nodes (= (node_count - 1) / 2).
    std::size_t positive_count() const { return (grid.size() - 1) / 2; }
};

/// a(g) = p(g) - p(-g) evaluated at the positive grid nodes.
struct AsymmetryCurve {
    std::vector<double> positive_nodes;
    std::vector<double> values;
};

/// Equal-count density estimate: positive nodes are midpoint quantiles of
/// |samples|, mirrored about 0; each sample splits its unit weight linearly
/// between the two bracketing nodes, samples beyond the outermost node
/// accumulate there. The trapezoidal integral over the grid is 1 by
/// construction.
///
/// node_count must be odd; requires at least node_count * 10 samples.
Density estimate_density(std::span<const double> samples, int node_count);

/// Mirror asymmetry of a density; exact node pairing, no interpolation.
AsymmetryCurve density_asymmetry(const Density& d);

/// Mean of the asymmetry curve over nodes strictly inside (0, bound).
double integrated_pdf_asymmetry(const AsymmetryCurve& curve, double bound = 0.06);

/// Trapezoidal quadrature of node values over the grid.
double trapezoid_integral(std::span<const double> grid, std::span<const double> values);

} // namespace trevi
