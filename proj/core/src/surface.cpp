#include "trevi/surface.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "trevi/errors.hpp"

namespace trevi {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

// Correlates hist[i] against real[j] over the maximal window where both are
// defined, filling rho/asym/missing. Zero-variance cells become missing.
CorrelationSurface correlate_all(SurfaceKind kind, std::vector<Tick> axis,
                                 const std::vector<RegularSeries>& hist,
                                 const std::vector<RegularSeries>& real) {
    const std::size_t k = axis.size();
    CorrelationSurface s;
    s.kind = kind;
    s.axis = std::move(axis);
    s.rho.assign(k * k, kMissing);
    s.asym.assign(k * k, kMissing);
    s.missing.assign(k * k, 0);

    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const auto& h = hist[i];
            const auto& r = real[j];
            const std::int64_t lo = std::max(h.first_tick(), r.first_tick());
            const std::int64_t hi = std::min(h.last_tick(), r.last_tick());
            if (hi - lo + 1 < 2)
                throw Error(ErrorCode::SeriesTooShort, "fewer than two overlapping ticks for a cell");
            const auto len = static_cast<std::size_t>(hi - lo + 1);
            std::span<const double> xs(h.values.data() + (lo - h.first_tick()), len);
            std::span<const double> ys(r.values.data() + (lo - r.first_tick()), len);
            try {
                s.rho[i * k + j] = pearson(xs, ys);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ZeroVariance)
                    throw;
                s.missing[i * k + j] = 1;
            }
        }
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!s.missing[i * k + j] && !s.missing[j * k + i])
                s.asym[i * k + j] = s.rho[i * k + j] - s.rho[j * k + i];
            else
                s.missing[i * k + j] = s.missing[j * k + i] = 1;
    return s;
}

} // namespace

HorizonGrid HorizonGrid::geometric(Tick first, int count, std::int64_t ratio) {
    if (first.count < 1 || count < 1 || ratio < 2)
        throw Error(ErrorCode::InvalidParameter, "geometric ladder needs first >= 1, count >= 1, ratio >= 2");
    HorizonGrid g;
    g.horizons.reserve(static_cast<std::size_t>(count));
    Tick h = first;
    for (int k = 0; k < count; ++k) {
        g.horizons.push_back(h);
        h = h * ratio;
    }
    return g;
}

HorizonGrid HorizonGrid::default_hist_real() { return geometric(Tick{24}, 11, 2); }

CorrelationSurface hist_real_corr_surface(const RegularSeries& prices, const HorizonGrid& grid,
                                          std::int64_t coupling) {
    if (grid.size() == 0)
        throw Error(ErrorCode::InvalidParameter, "empty horizon grid");
    if (coupling < 1)
        throw Error(ErrorCode::InvalidParameter, "coupling must be at least 1");
    for (std::size_t k = 0; k + 1 < grid.size(); ++k)
        if (!(grid.horizons[k] < grid.horizons[k + 1]))
            throw Error(ErrorCode::InvalidParameter, "horizon grid must be strictly increasing");
    for (Tick h : grid.horizons)
        if (h.count < coupling)
            throw Error(ErrorCode::InvalidDuration,
                        "horizon " + std::to_string(h.count) + " below the coupling " +
                            std::to_string(coupling));

    std::vector<RegularSeries> hist, real;
    hist.reserve(grid.size());
    real.reserve(grid.size());
    for (Tick h : grid.horizons) {
        const VolSpec spec = VolSpec::coupled(h, coupling);
        hist.push_back(historical_vol(prices, spec));
        real.push_back(realized_vol(prices, spec));
    }
    return correlate_all(SurfaceKind::hist_real, grid.horizons, hist, real);
}

CorrelationSurface graining_corr_surface(const RegularSeries& prices, Tick horizon,
                                         const std::vector<Tick>& grain_grid) {
    if (grain_grid.empty())
        throw Error(ErrorCode::InvalidParameter, "empty granularity grid");
    for (std::size_t k = 0; k + 1 < grain_grid.size(); ++k)
        if (!(grain_grid[k] < grain_grid[k + 1]))
            throw Error(ErrorCode::InvalidParameter, "granularity grid must be strictly increasing");
    for (Tick g : grain_grid)
        if (g.count < 1 || g > horizon)
            throw Error(ErrorCode::InvalidDuration,
                        "granularity " + std::to_string(g.count) + " outside [1, horizon]");

    std::vector<RegularSeries> hist, real;
    hist.reserve(grain_grid.size());
    real.reserve(grain_grid.size());
    for (Tick g : grain_grid) {
        const VolSpec spec{horizon, g};
        hist.push_back(historical_vol(prices, spec));
        real.push_back(realized_vol(prices, spec));
    }
    return correlate_all(SurfaceKind::graining, grain_grid, hist, real);
}

std::vector<Tick> default_grain_grid() {
    std::vector<Tick> grains;
    for (int n = 0; n <= 8; ++n)
        grains.push_back(Tick{std::int64_t{1} << n});
    return grains;
}

Tick default_graining_horizon() { return Tick{512}; }

double integrated_corr_asymmetry(const CorrelationSurface& surface, CorrIntegrationMode mode) {
    const std::size_t k = surface.size();
    double sum = 0.0;
    std::int64_t count = 0;
    if (mode == CorrIntegrationMode::tot) {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                if (!(surface.axis[i] > surface.axis[j]))
                    continue;
                if (surface.is_missing(i, j))
                    throw Error(ErrorCode::IncompleteSurface, "missing cell inside the integration region");
                sum += surface.asym_at(i, j);
                ++count;
            }
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = k - 1 - i;
            if (!(surface.axis[i] > surface.axis[j]))
                continue;
            if (surface.is_missing(i, j))
                throw Error(ErrorCode::IncompleteSurface, "missing cell along the cut");
            sum += surface.asym_at(i, j);
            ++count;
        }
    }
    if (count == 0)
        throw Error(ErrorCode::NoNodesInRange, "integration region is empty");
    return sum / static_cast<double>(count);
}

double integrated_graining_asymmetry(const CorrelationSurface& surface) {
    return integrated_corr_asymmetry(surface, CorrIntegrationMode::cut);
}

} // namespace trevi
