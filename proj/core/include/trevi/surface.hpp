#pragma once

#include <cstddef>
#include <vector>

#include "trevi/series.hpp"
#include "trevi/tick.hpp"

namespace trevi {

/// Geometric ladder of estimation horizons with the log-mirror cut pairing
/// k <-> K-1-k (products horizons[k] * horizons[K-1-k] are constant).
struct HorizonGrid {
    std::vector<Tick> horizons;

    static HorizonGrid geometric(Tick first, int count, std::int64_t ratio = 2);
    /// 24 * 2^k ticks for k = 0..10 (1h12 up to ~51 days).
    static HorizonGrid default_hist_real();

    std::size_t size() const { return horizons.size(); }
    std::size_t cut_partner(std::size_t k) const { return horizons.size() - 1 - k; }
};

enum class SurfaceKind { hist_real, graining };

/// Correlations rho[i][j] between a past-window volatility (parameter i) and
/// a future-window volatility (parameter j), with the antisymmetrized matrix
/// asym[i][j] = rho[i][j] - rho[j][i]. Cells whose window has zero variance
/// are flagged missing and excluded from integration only if outside the
/// requested region.
struct CorrelationSurface {
    SurfaceKind kind = SurfaceKind::hist_real;
    std::vector<Tick> axis; // horizons (hist_real) or granularities (graining)
    std::vector<double> rho;
    std::vector<double> asym;
    std::vector<char> missing;

    std::size_t size() const { return axis.size(); }
    double rho_at(std::size_t i, std::size_t j) const { return rho[i * size() + j]; }
    double asym_at(std::size_t i, std::size_t j) const { return asym[i * size() + j]; }
    bool is_missing(std::size_t i, std::size_t j) const { return missing[i * size() + j] != 0; }
};

enum class CorrIntegrationMode { tot, cut };

/// rho[i][j] = pearson( sigma_h[h_i, h_i/c](t), sigma_r[h_j, h_j/c](t) ) over
/// the per-pair maximal common tick window.
CorrelationSurface hist_real_corr_surface(const RegularSeries& prices, const HorizonGrid& grid,
                                          std::int64_t coupling = 24);

/// rho[i][j] = pearson( sigma_h[h, grain_i](t), sigma_r[h, grain_j](t) ) at a
/// single horizon h across granularities.
CorrelationSurface graining_corr_surface(const RegularSeries& prices, Tick horizon,
                                         const std::vector<Tick>& grain_grid);

/// Granularity ladder 2^n ticks for n = 0..8 (3 min up to 12h48).
std::vector<Tick> default_grain_grid();
/// The matching default estimation horizon, 2^9 ticks (1 day 1h36).
Tick default_graining_horizon();

/// tot  -> mean of asym[i][j] over pairs with axis[i] > axis[j];
/// cut  -> mean of asym[k][K-1-k] over k with axis[k] > axis[K-1-k].
double integrated_corr_asymmetry(const CorrelationSurface& surface, CorrIntegrationMode mode);

/// Cut-integrated granularity asymmetry (same log-mirror pairing).
double integrated_graining_asymmetry(const CorrelationSurface& surface);

} // namespace trevi
