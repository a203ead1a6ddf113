#include "trevi/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "trevi/density.hpp"
#include "trevi/errors.hpp"
#include "trevi/rng.hpp"
#include "trevi/statistics.hpp"

namespace trevi {

const char* stat_name(StatKind kind) noexcept {
    switch (kind) {
    case StatKind::pdf_asymmetry: return "A_p";
    case StatKind::corr_total: return "A_sigma_tot";
    case StatKind::corr_cut: return "A_sigma_cut";
    case StatKind::graining_cut: return "A_gr_cut";
    case StatKind::return_asymmetry: return "return_asym";
    }
    return "unknown";
}

StatKind stat_from_name(std::string_view name) {
    for (StatKind kind : all_stat_kinds())
        if (name == stat_name(kind))
            return kind;
    throw Error(ErrorCode::ConfigError, "unknown statistic: " + std::string(name));
}

const std::vector<StatKind>& all_stat_kinds() {
    static const std::vector<StatKind> kinds = {
        StatKind::pdf_asymmetry, StatKind::corr_total, StatKind::corr_cut,
        StatKind::graining_cut, StatKind::return_asymmetry,
    };
    return kinds;
}

StatRequest StatRequest::all() {
    StatRequest r;
    r.stats = all_stat_kinds();
    return r;
}

void StatRequest::validate() const {
    if (stats.empty())
        throw Error(ErrorCode::InvalidParameter, "statistic request is empty");
    for (std::size_t i = 0; i < stats.size(); ++i)
        for (std::size_t j = i + 1; j < stats.size(); ++j)
            if (stats[i] == stats[j])
                throw Error(ErrorCode::InvalidParameter, "duplicate statistic in request");
}

std::vector<std::pair<StatKind, double>> evaluate_statistics(const RegularSeries& prices,
                                                             const StatRequest& request) {
    request.validate();

    const bool want_tot = std::find(request.stats.begin(), request.stats.end(),
                                    StatKind::corr_total) != request.stats.end();
    const bool want_cut = std::find(request.stats.begin(), request.stats.end(),
                                    StatKind::corr_cut) != request.stats.end();
    CorrelationSurface corr_surface;
    if (want_tot || want_cut)
        corr_surface = hist_real_corr_surface(prices, request.corr.grid, request.corr.coupling);

    std::vector<std::pair<StatKind, double>> out;
    out.reserve(request.stats.size());
    for (StatKind kind : request.stats) {
        double value = 0.0;
        switch (kind) {
        case StatKind::pdf_asymmetry: {
            const VolSpec spec = VolSpec::coupled(request.pdf.horizon, request.pdf.coupling);
            const auto increments = vol_increments(prices, spec);
            const Density d = estimate_density(increments, request.pdf.node_count);
            value = integrated_pdf_asymmetry(density_asymmetry(d), request.pdf.bound);
            break;
        }
        case StatKind::corr_total:
            value = integrated_corr_asymmetry(corr_surface, CorrIntegrationMode::tot);
            break;
        case StatKind::corr_cut:
            value = integrated_corr_asymmetry(corr_surface, CorrIntegrationMode::cut);
            break;
        case StatKind::graining_cut: {
            const auto surface =
                graining_corr_surface(prices, request.graining.horizon, request.graining.grains);
            value = integrated_graining_asymmetry(surface);
            break;
        }
        case StatKind::return_asymmetry:
            value = return_density_asymmetry(prices, request.ret.horizon, request.ret.node_count,
                                             request.ret.quantile_bound);
            break;
        }
        out.emplace_back(kind, value);
    }
    return out;
}

double p_value(std::span<const double> samples) {
    if (samples.empty())
        throw Error(ErrorCode::EmptySample, "p-value of empty sample vector");
    std::int64_t at_or_below = 0;
    for (double s : samples)
        if (s <= 0.0)
            ++at_or_below;
    return static_cast<double>(at_or_below) / static_cast<double>(samples.size());
}

double empirical_percentile(double observed, std::span<const double> null_samples) {
    if (null_samples.empty())
        throw Error(ErrorCode::EmptySample, "percentile against empty null sample");
    std::int64_t below = 0;
    for (double s : null_samples)
        if (s < observed)
            ++below;
    return static_cast<double>(below) / static_cast<double>(null_samples.size());
}

EnsembleSummary run_ensemble(const ProcessSpec& spec, const SimConfig& cfg,
                             const StatRequest& request, int n_runs, int workers) {
    request.validate();
    if (n_runs < 2)
        throw Error(ErrorCode::InvalidParameter, "need at least two runs");
    if (workers < 1)
        workers = 1;
    workers = std::min<int>(workers, n_runs);

    const auto n_stats = request.stats.size();
    std::vector<std::vector<double>> per_run(static_cast<std::size_t>(n_runs));

    std::atomic<int> next_run{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    std::int64_t first_error_run = -1;

    auto work = [&]() {
        for (;;) {
            const int run = next_run.fetch_add(1);
            if (run >= n_runs)
                return;
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error)
                    return;
            }
            try {
                SimConfig run_cfg = cfg;
                run_cfg.seed = derive_subseed(cfg.seed, static_cast<std::uint64_t>(run));
                const RegularSeries path = simulate(spec, run_cfg);
                const auto values = evaluate_statistics(path, request);
                auto& slot = per_run[static_cast<std::size_t>(run)];
                slot.resize(n_stats);
                for (std::size_t k = 0; k < n_stats; ++k)
                    slot[k] = values[k].second;
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error || run < first_error_run) {
                    first_error = std::current_exception();
                    first_error_run = run;
                }
            }
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    if (first_error) {
        try {
            std::rethrow_exception(first_error);
        } catch (const Error& e) {
            throw Error(e.code(), "run " + std::to_string(first_error_run) + ": " + e.what());
        } catch (const std::exception& e) {
            throw Error(ErrorCode::InvalidParameter,
                        "run " + std::to_string(first_error_run) + ": " + e.what());
        }
    }

    EnsembleSummary summary;
    summary.run_count = n_runs;
    summary.master_seed = cfg.seed;
    summary.process = spec;
    summary.stats.reserve(n_stats);
    for (std::size_t k = 0; k < n_stats; ++k) {
        StatSummary s;
        s.samples.resize(static_cast<std::size_t>(n_runs));
        for (int run = 0; run < n_runs; ++run)
            s.samples[static_cast<std::size_t>(run)] = per_run[static_cast<std::size_t>(run)][k];
        s.mean = sample_mean(s.samples);
        s.std_dev = sample_stddev(s.samples);
        s.p_value = p_value(s.samples);
        summary.stats.emplace_back(request.stats[k], std::move(s));
    }
    return summary;
}

} // namespace trevi
