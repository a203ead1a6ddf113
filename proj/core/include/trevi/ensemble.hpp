#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trevi/processes.hpp"
#include "trevi/series.hpp"
#include "trevi/surface.hpp"
#include "trevi/tick.hpp"

namespace trevi {

enum class StatKind {
    pdf_asymmetry,    // A_p: integrated volatility-increment density asymmetry
    corr_total,       // A_sigma_tot over the horizon grid
    corr_cut,         // A_sigma_cut along the log-mirror cut
    graining_cut,     // A_gr_cut along the granularity cut
    return_asymmetry, // integrated return-density asymmetry at 1 day
};

const char* stat_name(StatKind kind) noexcept;
StatKind stat_from_name(std::string_view name);
const std::vector<StatKind>& all_stat_kinds();

struct PdfAsymmetryParams {
    Tick horizon = ticks::day;
    std::int64_t coupling = 24;
    int node_count = 41;
    double bound = 0.06;
};

struct CorrSurfaceParams {
    HorizonGrid grid = HorizonGrid::default_hist_real();
    std::int64_t coupling = 24;
};

struct GrainingParams {
    Tick horizon = default_graining_horizon();
    std::vector<Tick> grains = default_grain_grid();
};

struct ReturnAsymmetryParams {
    Tick horizon = ticks::day;
    int node_count = 41;
    double quantile_bound = 0.95;
};

/// Which statistics to evaluate on each path, with their grid parameters.
struct StatRequest {
    std::vector<StatKind> stats;
    PdfAsymmetryParams pdf;
    CorrSurfaceParams corr;
    GrainingParams graining;
    ReturnAsymmetryParams ret;

    static StatRequest all();
    void validate() const;
};

/// Evaluates the requested statistics on one log-price path, in request
/// order. The correlation surface is computed once when both corr statistics
/// are requested.
std::vector<std::pair<StatKind, double>> evaluate_statistics(const RegularSeries& prices,
                                                             const StatRequest& request);

struct StatSummary {
    std::vector<double> samples; // one per run, in run order
    double mean = 0.0;
    double std_dev = 0.0;
    double p_value = 0.0; // fraction of samples <= 0
};

struct EnsembleSummary {
    std::vector<std::pair<StatKind, StatSummary>> stats;
    int run_count = 0;
    std::uint64_t master_seed = 0;
    ProcessSpec process;
};

/// Fraction of samples <= 0 (ties at exactly 0 count).
double p_value(std::span<const double> samples);

/// Fraction of null samples strictly below an observed value.
double empirical_percentile(double observed, std::span<const double> null_samples);

/// n_runs independent paths, each from sub-seed derive_subseed(cfg.seed, run);
/// statistics per path and per-statistic summaries. Deterministic for a given
/// master seed regardless of worker count.
EnsembleSummary run_ensemble(const ProcessSpec& spec, const SimConfig& cfg,
                             const StatRequest& request, int n_runs = 200, int workers = 1);

} // namespace trevi
