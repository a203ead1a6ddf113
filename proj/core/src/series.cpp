#include "trevi/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "trevi/errors.hpp"

namespace trevi {

RegularSeries returns(const RegularSeries& prices, Tick dt_r) {
    if (dt_r.count < 1)
        throw Error(ErrorCode::InvalidDuration, "return granularity must be at least one tick");
    if (prices.size() <= dt_r.count)
        throw Error(ErrorCode::SeriesTooShort,
                    "need more than " + std::to_string(dt_r.count) + " samples, have " +
                        std::to_string(prices.size()));

    const auto d = static_cast<std::size_t>(dt_r.count);
    RegularSeries out;
    out.start_index = prices.start_index + dt_r.count;
    out.kind = SeriesKind::ret;
    out.values.resize(prices.values.size() - d);
    for (std::size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = prices.values[i + d] - prices.values[i];
    return out;
}

RegularSeries historical_vol(const RegularSeries& prices, const VolSpec& spec) {
    const std::int64_t h = spec.horizon.count;
    const std::int64_t g = spec.granularity.count;
    if (g < 1 || g > h)
        throw Error(ErrorCode::InvalidDuration, "need 1 <= granularity <= horizon");
    if (prices.size() < h + 1)
        throw Error(ErrorCode::SeriesTooShort,
                    "need at least horizon + 1 = " + std::to_string(h + 1) + " samples, have " +
                        std::to_string(prices.size()));

    const RegularSeries r = returns(prices, spec.granularity);

    // Prefix sums of squared returns; the window sum for output tick t covers
    // return ticks [t - h + g, t], i.e. n = h - g + 1 one-tick steps.
    std::vector<double> prefix(r.values.size() + 1, 0.0);
    for (std::size_t i = 0; i < r.values.size(); ++i)
        prefix[i + 1] = prefix[i] + r.values[i] * r.values[i];

    const std::int64_t n = h - g + 1;
    const double annualizer = static_cast<double>(ticks::per_year) / static_cast<double>(g);
    const double norm = annualizer / static_cast<double>(n);

    RegularSeries out;
    out.start_index = prices.start_index + h;
    out.kind = SeriesKind::volatility;
    out.values.resize(static_cast<std::size_t>(prices.size() - h));
    for (std::size_t i = 0; i < out.values.size(); ++i) {
        // Window ends at return-sample index (h - g) + i, spans n samples.
        const std::size_t end = i + static_cast<std::size_t>(h - g) + 1;
        const double ss = prefix[end] - prefix[end - static_cast<std::size_t>(n)];
        out.values[i] = std::sqrt(norm * ss);
    }
    return out;
}

RegularSeries realized_vol(const RegularSeries& prices, const VolSpec& spec) {
    RegularSeries out = historical_vol(prices, spec);
    out.start_index -= spec.horizon.count;
    return out;
}

RegularSeries reverse(const RegularSeries& series) {
    RegularSeries out = series;
    std::reverse(out.values.begin(), out.values.end());
    return out;
}

double sample_mean(std::span<const double> xs) {
    if (xs.empty())
        throw Error(ErrorCode::EmptySample, "mean of empty vector");
    double s = 0.0;
    for (double x : xs)
        s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2)
        throw Error(ErrorCode::TooFewSamples, "variance needs at least two samples");
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double x : xs)
        s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

double sample_stddev(std::span<const double> xs) { return std::sqrt(sample_variance(xs)); }

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error(ErrorCode::LengthMismatch, std::to_string(x.size()) + " vs " + std::to_string(y.size()));
    if (x.size() < 2)
        throw Error(ErrorCode::TooFewSamples, "correlation needs at least two samples");

    const double mx = sample_mean(x);
    const double my = sample_mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error(ErrorCode::ZeroVariance, "constant input to correlation");
    return sxy / std::sqrt(sxx * syy);
}

} // namespace trevi
