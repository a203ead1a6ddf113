#include "trevi/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>

#include "trevi/errors.hpp"

namespace trevi {

std::vector<double> vol_increments(const RegularSeries& prices, const VolSpec& spec) {
    const std::int64_t h = spec.horizon.count;
    if (prices.size() < 2 * h + 1)
        throw Error(ErrorCode::SeriesTooShort,
                    "need at least 2 * horizon + 1 = " + std::to_string(2 * h + 1) +
                        " samples, have " + std::to_string(prices.size()));

    // sigma_h lives on [first + h, last], sigma_r on [first, last - h]; the
    // realized series is the historical one re-anchored, so the common window
    // [first + h, last - h] is an index shift of h between the two.
    const RegularSeries hv = historical_vol(prices, spec);
    const auto shift = static_cast<std::size_t>(h);
    const std::size_t count = hv.values.size() - shift;
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = hv.values[i + shift] - hv.values[i];
    return out;
}

double quantile(std::span<const double> xs, double q) {
    if (xs.empty())
        throw Error(ErrorCode::EmptySample, "quantile of empty vector");
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::max(0.0, pos));
    if (lo + 1 >= sorted.size())
        return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double return_density_asymmetry(const RegularSeries& prices, Tick dt_r, int node_count,
                                double quantile_bound) {
    RegularSeries r = returns(prices, dt_r);
    const double sd = sample_stddev(r.values);
    if (!(sd > 0.0))
        throw Error(ErrorCode::ZeroVariance, "returns have zero variance");
    for (double& v : r.values)
        v /= sd;

    const Density d = estimate_density(r.values, node_count);
    const AsymmetryCurve curve = density_asymmetry(d);

    std::vector<double> abs_scaled(r.values.size());
    for (std::size_t i = 0; i < abs_scaled.size(); ++i)
        abs_scaled[i] = std::abs(r.values[i]);
    const double bound = quantile(abs_scaled, quantile_bound);

    return integrated_pdf_asymmetry(curve, bound);
}

} // namespace trevi
