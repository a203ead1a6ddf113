#include "trevi/density.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "trevi/errors.hpp"

namespace trevi {

namespace {

// Linear-interpolation quantile of a sorted vector (R type 7).
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size())
        return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

} // namespace

Density estimate_density(std::span<const double> samples, int node_count) {
    if (node_count < 3 || node_count % 2 == 0)
        throw Error(ErrorCode::InvalidParameter, "node_count must be odd and at least 3");
    const auto n = static_cast<std::int64_t>(samples.size());
    if (n < static_cast<std::int64_t>(node_count) * 10)
        throw Error(ErrorCode::TooFewSamples,
                    "need at least " + std::to_string(node_count * 10) + " samples, have " +
                        std::to_string(n));

    const std::size_t half = static_cast<std::size_t>(node_count - 1) / 2;

    // Pool absolute values; midpoint quantile levels (k - 1/2)/half give
    // roughly equal sample counts per band and keep the top node strictly
    // inside the sample range.
    std::vector<double> abs_sorted(samples.begin(), samples.end());
    for (double& v : abs_sorted)
        v = std::abs(v);
    std::sort(abs_sorted.begin(), abs_sorted.end());

    std::vector<double> positive(half);
    for (std::size_t k = 0; k < half; ++k) {
        const double level = (static_cast<double>(k) + 0.5) / static_cast<double>(half);
        positive[k] = quantile_sorted(abs_sorted, level);
    }

    Density d;
    d.sample_count = n;
    d.grid.resize(static_cast<std::size_t>(node_count));
    d.grid[half] = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        d.grid[half + 1 + k] = positive[k];
        d.grid[half - 1 - k] = -positive[k];
    }
    for (std::size_t k = 0; k + 1 < d.grid.size(); ++k)
        if (!(d.grid[k] < d.grid[k + 1]))
            throw Error(ErrorCode::DegenerateSamples,
                        "quantile grid is not strictly increasing (too many tied samples)");

    // Linear-interpolation binning: unit weight per sample, split between the
    // bracketing nodes; out-of-range samples clamp to the outermost node so
    // total mass is conserved.
    std::vector<double> weight(d.grid.size(), 0.0);
    const double lo = d.grid.front();
    const double hi = d.grid.back();
    for (double s : samples) {
        if (s <= lo) {
            weight.front() += 1.0;
            continue;
        }
        if (s >= hi) {
            weight.back() += 1.0;
            continue;
        }
        const auto it = std::upper_bound(d.grid.begin(), d.grid.end(), s);
        const auto j = static_cast<std::size_t>(it - d.grid.begin()) - 1;
        const double cell = d.grid[j + 1] - d.grid[j];
        const double right = (s - d.grid[j]) / cell;
        weight[j] += 1.0 - right;
        weight[j + 1] += right;
    }

    // Node density = weight / (N * half-width of the adjacent cells); the
    // trapezoid integral then telescopes to (total weight) / N = 1.
    d.node_density.resize(d.grid.size());
    const auto last = d.grid.size() - 1;
    for (std::size_t k = 0; k <= last; ++k) {
        const double left = (k == 0) ? d.grid[0] : d.grid[k - 1];
        const double right = (k == last) ? d.grid[last] : d.grid[k + 1];
        const double width = 0.5 * (right - left);
        d.node_density[k] = weight[k] / (static_cast<double>(n) * width);
    }
    return d;
}

AsymmetryCurve density_asymmetry(const Density& d) {
    const std::size_t half = d.positive_count();
    AsymmetryCurve curve;
    curve.positive_nodes.resize(half);
    curve.values.resize(half);
    for (std::size_t k = 0; k < half; ++k) {
        curve.positive_nodes[k] = d.grid[half + 1 + k];
        curve.values[k] = d.node_density[half + 1 + k] - d.node_density[half - 1 - k];
    }
    return curve;
}

double integrated_pdf_asymmetry(const AsymmetryCurve& curve, double bound) {
    double sum = 0.0;
    std::int64_t count = 0;
    for (std::size_t k = 0; k < curve.positive_nodes.size(); ++k) {
        const double g = curve.positive_nodes[k];
        if (g > 0.0 && g < bound) {
            sum += curve.values[k];
            ++count;
        }
    }
    if (count == 0)
        throw Error(ErrorCode::NoNodesInRange,
                    "no histogram nodes strictly inside (0, " + std::to_string(bound) + ")");
    return sum / static_cast<double>(count);
}

double trapezoid_integral(std::span<const double> grid, std::span<const double> values) {
    if (grid.size() != values.size())
        throw Error(ErrorCode::LengthMismatch, "grid/value size mismatch");
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        total += 0.5 * (values[k] + values[k + 1]) * (grid[k + 1] - grid[k]);
    return total;
}

} // namespace trevi
