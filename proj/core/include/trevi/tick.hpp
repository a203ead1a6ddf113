#pragma once

#include <compare>
#include <cstdint>

namespace trevi {

/// Duration on the base sampling grid. One tick is 3 minutes of business
/// time; all horizons and granularities are exact tick multiples.
struct Tick {
    std::int64_t count = 0;

    constexpr Tick() = default;
    constexpr explicit Tick(std::int64_t n) : count(n) {}

    constexpr auto operator<=>(const Tick&) const = default;

    constexpr Tick operator+(Tick o) const { return Tick{count + o.count}; }
    constexpr Tick operator-(Tick o) const { return Tick{count - o.count}; }
    constexpr Tick operator*(std::int64_t k) const { return Tick{count * k}; }
};

namespace ticks {

// Grid conversion constants. Business time has no weekend gaps, so the
// year is 365 calendar days.
inline constexpr std::int64_t per_hour = 20;
inline constexpr std::int64_t per_day = 480;
inline constexpr std::int64_t per_year = 175'200;

inline constexpr Tick hour{per_hour};
inline constexpr Tick day{per_day};
inline constexpr Tick year{per_year};

} // namespace ticks

/// Volatility estimator window: `horizon` is the span the squared returns
/// are averaged over, `granularity` the span of each return.
struct VolSpec {
    Tick horizon;     // delta-t-sigma
    Tick granularity; // delta-t-r

    /// Standard coupling granularity = horizon / 24, floored at one tick.
    static constexpr VolSpec coupled(Tick horizon, std::int64_t coupling = 24) {
        std::int64_t g = horizon.count / coupling;
        return VolSpec{horizon, Tick{g < 1 ? 1 : g}};
    }
};

} // namespace trevi
