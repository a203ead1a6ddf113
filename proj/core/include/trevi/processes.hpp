#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trevi/series.hpp"
#include "trevi/tick.hpp"

namespace trevi {

// Every simulator draws its residual streams from sub-seeds derived with
// derive_subseed(cfg.seed, stream): stream 0 is the return residual stream,
// streams 1.. drive the volatility state (one per component, plus the state
// chain for regime switching). Volatility paths therefore never depend on the
// return residuals, and identical (spec, cfg) give bitwise-identical series.

struct GaussianRwParams {
    double sigma_annual = 0.10;

    void validate() const;
};

struct Garch11Params {
    double omega = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    /// omega chosen so the stationary annualized volatility equals annual_vol.
    static Garch11Params from_annual_vol(double annual_vol, double alpha, double beta);
    static Garch11Params defaults();

    double stationary_variance() const { return omega / (1.0 - alpha - beta); }
    void validate() const;
};

/// Multi-timescale ARCH: component k is an EMA with timescale tau_k of
/// squared aggregated returns over grain_k = max(1, round(tau_k / coupling))
/// ticks (normalized per tick), so the return horizons grow with the
/// volatility horizons. The effective variance is an affine combination of a
/// constant mean level and the components.
struct MultiscaleArchParams {
    enum class WeightProfile { lm_affine, mkt_affine };

    WeightProfile profile = WeightProfile::lm_affine;
    int component_count = 10;
    Tick tau_1{8};
    double ratio = 2.0;
    double coupling = 24.0;
    double affine_weight = 0.10;
    double mean_vol_annual = 0.10;
    /// Optional unnormalized per-component weights overriding the profile.
    std::vector<double> custom_weights;

    static MultiscaleArchParams defaults(WeightProfile profile);

    void validate() const;
    std::vector<std::int64_t> component_taus() const;
    std::vector<std::int64_t> component_grains() const;
    /// Normalized so the component weights sum to 1 - affine_weight.
    std::vector<double> component_weights() const;
};

/// Log-volatility is a sum of independent AR(1) components (discretized
/// Ornstein-Uhlenbeck); one component is the plain exponential SV process,
/// several form the long-memory cascade. No feedback from returns.
struct ExpOuSvParams {
    double mean_log_vol = 0.0; // mean of ln(per-tick sigma)
    std::vector<Tick> reversion_times;
    std::vector<double> noise_amps; // per-step innovation std of each component

    /// K components on a geometric tau ladder with equal stationary variance
    /// per component; total stationary std of ln(sigma) = log_vol_std, and
    /// mean_log_vol set so the rms annualized volatility is annual_vol.
    static ExpOuSvParams cascade(int component_count, Tick tau_1, double ratio,
                                 double log_vol_std, double annual_vol);
    static ExpOuSvParams defaults(int component_count);

    int component_count() const { return static_cast<int>(reversion_times.size()); }
    void validate() const;
    /// AR(1) coefficient exp(-1/tau_k).
    std::vector<double> ar_coefficients() const;
    /// Closed-form stationary variance of each component.
    std::vector<double> stationary_variances() const;
};

/// Sum of square-root diffusion variance components, each discretized with
/// the full-truncation Euler scheme at one tick = 1/175200 year. theta is an
/// annualized variance; per-tick returns use sqrt(v * dt).
struct HestonParams {
    std::vector<double> kappa; // mean-reversion rates, 1/year
    std::vector<double> theta; // long-run annualized variances
    std::vector<double> xi;    // volatility-of-variance, annualized

    static HestonParams defaults(int component_count);

    int component_count() const { return static_cast<int>(kappa.size()); }
    void validate() const;
};

/// Markov-chain state with one annualized volatility per state; returns are
/// a random walk with the state's volatility. Transition probabilities may be
/// asymmetric; the initial state is drawn from the stationary distribution.
struct RegimeSwitchingParams {
    std::vector<double> state_vols;                 // annualized, one per state
    std::vector<std::vector<double>> transition;    // rows are probability vectors

    static RegimeSwitchingParams defaults();

    int state_count() const { return static_cast<int>(state_vols.size()); }
    void validate() const;
    std::vector<double> stationary_distribution() const;
};

using ProcessSpec = std::variant<GaussianRwParams, Garch11Params, MultiscaleArchParams,
                                 ExpOuSvParams, HestonParams, RegimeSwitchingParams>;

struct SimConfig {
    std::int64_t n_ticks = 2'018'400; // 11.5 years of 3-minute business time
    std::int64_t burn_in = -1;        // -1: 4x the longest process timescale
    std::uint64_t seed = 0;
};

RegularSeries sim_gaussian_rw(const GaussianRwParams& spec, const SimConfig& cfg);
RegularSeries sim_garch11(const Garch11Params& spec, const SimConfig& cfg);
RegularSeries sim_multiscale_arch(const MultiscaleArchParams& spec, const SimConfig& cfg);
RegularSeries sim_exp_ou_sv(const ExpOuSvParams& spec, const SimConfig& cfg);
RegularSeries sim_heston(const HestonParams& spec, const SimConfig& cfg);
RegularSeries sim_regime_switching(const RegimeSwitchingParams& spec, const SimConfig& cfg);

/// Dispatch on the spec alternative.
RegularSeries simulate(const ProcessSpec& spec, const SimConfig& cfg);

/// Ticks a process needs to forget its initial state (longest timescale).
std::int64_t process_memory_ticks(const ProcessSpec& spec);
/// Burn-in actually applied for a config (4x memory when cfg.burn_in < 0).
std::int64_t effective_burn_in(const ProcessSpec& spec, const SimConfig& cfg);

/// Canonical short name of a spec ("garch11", "lm_arch", ...).
std::string process_name(const ProcessSpec& spec);
/// Default-parameter spec for a canonical name; ConfigError on unknown names.
ProcessSpec default_process(std::string_view name);
const std::vector<std::string>& known_process_names();

} // namespace trevi
