#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trevi/tick.hpp"

namespace trevi {

enum class SeriesKind { log_price, ret, volatility };

/// Values on the uniform tick grid: sample i sits at tick start_index + i,
/// with no gaps. The universal carrier for prices, returns and volatilities.
struct RegularSeries {
    std::int64_t start_index = 0;
    std::vector<double> values;
    SeriesKind kind = SeriesKind::log_price;

    std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
    std::int64_t first_tick() const { return start_index; }
    std::int64_t last_tick() const { return start_index + size() - 1; }

    /// Value at an absolute tick index. Caller guarantees the tick is covered.
    double at_tick(std::int64_t t) const { return values[static_cast<std::size_t>(t - start_index)]; }

    bool covers(std::int64_t t) const { return t >= first_tick() && t <= last_tick(); }
};

/// r[dt](t) = x(t) - x(t - dt). Output starts dt ticks after the input.
RegularSeries returns(const RegularSeries& prices, Tick dt_r);

/// Annualized past-window volatility:
///   sigma_h(t) = sqrt( (1yr/dt_r) * (1/n) * sum_{t-h+dt_r <= t' <= t} r[dt_r](t')^2 )
/// with t' stepping one tick at a time and n = h - dt_r + 1 terms.
/// Defined for t >= first + horizon.
RegularSeries historical_vol(const RegularSeries& prices, const VolSpec& spec);

/// Future-window volatility: sigma_r(t) = sigma_h(t + horizon), computed by
/// the exact shift so the identity holds bitwise. Defined for t <= last - horizon.
RegularSeries realized_vol(const RegularSeries& prices, const VolSpec& spec);

/// Values reversed in order; start_index preserved. Involution.
RegularSeries reverse(const RegularSeries& series);

/// Product-moment correlation of two equal-length sample vectors.
double pearson(std::span<const double> x, std::span<const double> y);

double sample_mean(std::span<const double> xs);
/// Unbiased (n-1) sample variance.
double sample_variance(std::span<const double> xs);
double sample_stddev(std::span<const double> xs);

} // namespace trevi
