#include "trevi/processes.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>

#include "trevi/errors.hpp"
#include "trevi/rng.hpp"

namespace trevi {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok)
        throw Error(ErrorCode::InvalidParameter, what);
}

bool finite(double x) { return std::isfinite(x); }

// Discards `burn_in` ticks, then emits n_ticks log-price samples rebased so
// the first one is exactly 0. `step` advances the process one tick and
// returns that tick's return.
RegularSeries run_path(std::int64_t n_ticks, std::int64_t burn_in,
                       const std::function<double()>& step) {
    require(n_ticks >= 1, "n_ticks must be at least 1");
    require(burn_in >= 0, "burn_in must be non-negative");

    for (std::int64_t t = 0; t < burn_in; ++t)
        step();

    RegularSeries out;
    out.start_index = 0;
    out.kind = SeriesKind::log_price;
    out.values.resize(static_cast<std::size_t>(n_ticks));
    double x = 0.0;
    out.values[0] = 0.0;
    for (std::int64_t i = 1; i < n_ticks; ++i) {
        x += step();
        out.values[static_cast<std::size_t>(i)] = x;
    }
    return out;
}

const double kTickStd = std::sqrt(static_cast<double>(ticks::per_year));

} // namespace

// --- Gaussian random walk ---------------------------------------------------

void GaussianRwParams::validate() const {
    require(finite(sigma_annual) && sigma_annual >= 0.0, "sigma_annual must be >= 0");
}

RegularSeries sim_gaussian_rw(const GaussianRwParams& spec, const SimConfig& cfg) {
    spec.validate();
    auto eps = GaussianStream(derive_subseed(cfg.seed, 0));
    const double s = spec.sigma_annual / kTickStd;
    return run_path(cfg.n_ticks, effective_burn_in(spec, cfg), [&] { return s * eps.next(); });
}

// --- GARCH(1,1) ---------------------------------------------------------------

Garch11Params Garch11Params::from_annual_vol(double annual_vol, double alpha, double beta) {
    Garch11Params p;
    p.alpha = alpha;
    p.beta = beta;
    p.omega = (annual_vol * annual_vol / static_cast<double>(ticks::per_year)) * (1.0 - alpha - beta);
    p.validate();
    return p;
}

Garch11Params Garch11Params::defaults() { return from_annual_vol(0.10, 0.02, 0.979); }

void Garch11Params::validate() const {
    require(finite(omega) && omega > 0.0, "omega must be > 0");
    require(finite(alpha) && alpha >= 0.0, "alpha must be >= 0");
    require(finite(beta) && beta >= 0.0, "beta must be >= 0");
    require(alpha + beta < 1.0, "alpha + beta must be < 1 for covariance stationarity");
}

RegularSeries sim_garch11(const Garch11Params& spec, const SimConfig& cfg) {
    spec.validate();
    auto eps = GaussianStream(derive_subseed(cfg.seed, 0));
    double var = spec.stationary_variance();
    return run_path(cfg.n_ticks, effective_burn_in(spec, cfg), [&, var]() mutable {
        const double r = std::sqrt(var) * eps.next();
        var = spec.omega + spec.alpha * r * r + spec.beta * var;
        return r;
    });
}

// --- Multiscale ARCH ----------------------------------------------------------

MultiscaleArchParams MultiscaleArchParams::defaults(WeightProfile profile) {
    MultiscaleArchParams p;
    p.profile = profile;
    return p;
}

void MultiscaleArchParams::validate() const {
    require(component_count >= 1, "need at least one component");
    require(tau_1.count >= 1, "tau_1 must be at least one tick");
    require(finite(ratio) && ratio > 1.0, "ratio must be > 1");
    require(finite(coupling) && coupling >= 1.0, "coupling must be >= 1");
    require(finite(affine_weight) && affine_weight >= 0.0 && affine_weight <= 1.0,
            "affine_weight must lie in [0, 1]");
    require(finite(mean_vol_annual) && mean_vol_annual > 0.0, "mean_vol_annual must be > 0");
    if (!custom_weights.empty()) {
        require(static_cast<int>(custom_weights.size()) == component_count,
                "custom_weights size must equal component_count");
        for (double w : custom_weights)
            require(finite(w) && w >= 0.0, "custom weights must be >= 0");
    }
}

std::vector<std::int64_t> MultiscaleArchParams::component_taus() const {
    std::vector<std::int64_t> taus(static_cast<std::size_t>(component_count));
    double tau = static_cast<double>(tau_1.count);
    for (auto& t : taus) {
        t = std::max<std::int64_t>(1, std::llround(tau));
        tau *= ratio;
    }
    return taus;
}

std::vector<std::int64_t> MultiscaleArchParams::component_grains() const {
    std::vector<std::int64_t> grains;
    grains.reserve(static_cast<std::size_t>(component_count));
    for (std::int64_t tau : component_taus())
        grains.push_back(std::max<std::int64_t>(1, std::llround(static_cast<double>(tau) / coupling)));
    return grains;
}

std::vector<double> MultiscaleArchParams::component_weights() const {
    const auto taus = component_taus();
    std::vector<double> w(taus.size());
    if (!custom_weights.empty()) {
        std::copy(custom_weights.begin(), custom_weights.end(), w.begin());
    } else if (profile == WeightProfile::lm_affine) {
        // Logarithmic decay, zero just beyond the longest timescale.
        const double log_cutoff = std::log(static_cast<double>(taus.back())) + 1.0;
        for (std::size_t k = 0; k < w.size(); ++k)
            w[k] = 1.0 - std::log(static_cast<double>(taus[k])) / log_cutoff;
    } else {
        // Geometric decay across components.
        double v = 1.0;
        for (std::size_t k = 0; k < w.size(); ++k, v *= 0.85)
            w[k] = v;
    }
    double total = 0.0;
    for (double v : w)
        total += v;
    require(total > 0.0, "component weights sum to zero");
    const double scale = (1.0 - affine_weight) / total;
    for (double& v : w)
        v *= scale;
    return w;
}

RegularSeries sim_multiscale_arch(const MultiscaleArchParams& spec, const SimConfig& cfg) {
    spec.validate();
    const auto taus = spec.component_taus();
    const auto grains = spec.component_grains();
    const auto weights = spec.component_weights();
    const auto k_count = taus.size();

    std::vector<double> mu(k_count), one_minus_mu(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        mu[k] = std::exp(-1.0 / static_cast<double>(taus[k]));
        one_minus_mu[k] = 1.0 - mu[k];
    }

    const double mean_var = spec.mean_vol_annual * spec.mean_vol_annual /
                            static_cast<double>(ticks::per_year);
    std::vector<double> comp_var(k_count, mean_var);

    // Ring buffer of recent internal prices; slots never written read as the
    // flat pre-history 0.
    const std::int64_t window = *std::max_element(grains.begin(), grains.end()) + 1;
    std::vector<double> past(static_cast<std::size_t>(window), 0.0);
    double price = 0.0;
    std::int64_t t = 0;

    auto eps = GaussianStream(derive_subseed(cfg.seed, 0));

    auto step = [&]() {
        double var = spec.affine_weight * mean_var;
        for (std::size_t k = 0; k < k_count; ++k)
            var += weights[k] * comp_var[k];
        const double r = std::sqrt(var) * eps.next();
        price += r;
        ++t;
        past[static_cast<std::size_t>(t % window)] = price;
        for (std::size_t k = 0; k < k_count; ++k) {
            const std::int64_t back = t - grains[k];
            const double old = past[static_cast<std::size_t>(((back % window) + window) % window)];
            const double agg = price - old;
            comp_var[k] = mu[k] * comp_var[k] +
                          one_minus_mu[k] * agg * agg / static_cast<double>(grains[k]);
        }
        return r;
    };
    return run_path(cfg.n_ticks, effective_burn_in(spec, cfg), step);
}

// --- Exponential Ornstein-Uhlenbeck stochastic volatility ----------------------

ExpOuSvParams ExpOuSvParams::cascade(int component_count, Tick tau_1, double ratio,
                                     double log_vol_std, double annual_vol) {
    require(component_count >= 1, "need at least one component");
    require(finite(log_vol_std) && log_vol_std >= 0.0, "log_vol_std must be >= 0");
    require(finite(annual_vol) && annual_vol > 0.0, "annual_vol must be > 0");
    ExpOuSvParams p;
    double tau = static_cast<double>(tau_1.count);
    const double var_per_comp = log_vol_std * log_vol_std / component_count;
    for (int k = 0; k < component_count; ++k) {
        const auto t = std::max<std::int64_t>(1, std::llround(tau));
        p.reversion_times.push_back(Tick{t});
        const double a = std::exp(-1.0 / static_cast<double>(t));
        p.noise_amps.push_back(std::sqrt(var_per_comp * (1.0 - a * a)));
        tau *= ratio;
    }
    // rms volatility of the lognormal equals annual_vol:
    // E[sigma^2] = exp(2 mu + 2 s^2) => mu = ln(annual_vol / sqrt(1yr)) - s^2.
    p.mean_log_vol = std::log(annual_vol / kTickStd) - log_vol_std * log_vol_std;
    p.validate();
    return p;
}

ExpOuSvParams ExpOuSvParams::defaults(int component_count) {
    if (component_count <= 1)
        return cascade(1, Tick{2400}, 4.0, 0.5, 0.10);
    return cascade(component_count, Tick{8}, 4.0, 0.5, 0.10);
}

void ExpOuSvParams::validate() const {
    require(!reversion_times.empty(), "need at least one component");
    require(reversion_times.size() == noise_amps.size(),
            "reversion_times and noise_amps must have equal size");
    require(finite(mean_log_vol), "mean_log_vol must be finite");
    for (Tick t : reversion_times)
        require(t.count >= 1, "reversion times must be at least one tick");
    for (double a : noise_amps)
        require(finite(a) && a >= 0.0, "noise amplitudes must be >= 0");
}

std::vector<double> ExpOuSvParams::ar_coefficients() const {
    std::vector<double> a;
    a.reserve(reversion_times.size());
    for (Tick t : reversion_times)
        a.push_back(std::exp(-1.0 / static_cast<double>(t.count)));
    return a;
}

std::vector<double> ExpOuSvParams::stationary_variances() const {
    const auto a = ar_coefficients();
    std::vector<double> v(a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        v[k] = noise_amps[k] * noise_amps[k] / (1.0 - a[k] * a[k]);
    return v;
}

RegularSeries sim_exp_ou_sv(const ExpOuSvParams& spec, const SimConfig& cfg) {
    spec.validate();
    const auto a = spec.ar_coefficients();
    const auto stat_var = spec.stationary_variances();
    const auto k_count = a.size();

    auto eps = GaussianStream(derive_subseed(cfg.seed, 0));
    std::vector<GaussianStream> eta;
    eta.reserve(k_count);
    for (std::size_t k = 0; k < k_count; ++k)
        eta.emplace_back(derive_subseed(cfg.seed, k + 1));

    // Start each component in its stationary law.
    std::vector<double> y(k_count);
    for (std::size_t k = 0; k < k_count; ++k)
        y[k] = std::sqrt(stat_var[k]) * eta[k].next();

    auto step = [&]() {
        double log_sigma = spec.mean_log_vol;
        for (std::size_t k = 0; k < k_count; ++k) {
            y[k] = a[k] * y[k] + spec.noise_amps[k] * eta[k].next();
            log_sigma += y[k];
        }
        return std::exp(log_sigma) * eps.next();
    };
    return run_path(cfg.n_ticks, effective_burn_in(spec, cfg), step);
}

// --- Heston -------------------------------------------------------------------

HestonParams HestonParams::defaults(int component_count) {
    HestonParams p;
    if (component_count <= 1) {
        p.kappa = {73.0};
        p.theta = {0.01};
        p.xi = {0.6};
        return p;
    }
    // Cascade with equal long-run variance per component and timescales
    // 1, 5, 27 days; xi keeps the Feller ratio 2*kappa*theta/xi^2 = 2.
    p.kappa = {365.0, 69.0, 13.0};
    p.theta = {0.01 / 3.0, 0.01 / 3.0, 0.01 / 3.0};
    p.xi.resize(3);
    for (int k = 0; k < 3; ++k)
        p.xi[static_cast<std::size_t>(k)] =
            std::sqrt(p.kappa[static_cast<std::size_t>(k)] * p.theta[static_cast<std::size_t>(k)]);
    return p;
}

void HestonParams::validate() const {
    require(!kappa.empty(), "need at least one component");
    require(kappa.size() == theta.size() && kappa.size() == xi.size(),
            "kappa, theta, xi must have equal size");
    for (std::size_t k = 0; k < kappa.size(); ++k) {
        require(finite(kappa[k]) && kappa[k] > 0.0, "kappa must be > 0");
        require(finite(theta[k]) && theta[k] > 0.0, "theta must be > 0");
        require(finite(xi[k]) && xi[k] >= 0.0, "xi must be >= 0");
    }
}

RegularSeries sim_heston(const HestonParams& spec, const SimConfig& cfg) {
    spec.validate();
    const auto k_count = spec.kappa.size();
    const double dt = 1.0 / static_cast<double>(ticks::per_year);
    const double sqrt_dt = std::sqrt(dt);

    auto eps = GaussianStream(derive_subseed(cfg.seed, 0));
    std::vector<GaussianStream> eta;
    eta.reserve(k_count);
    for (std::size_t k = 0; k < k_count; ++k)
        eta.emplace_back(derive_subseed(cfg.seed, k + 1));

    std::vector<double> v(spec.theta);

    auto step = [&]() {
        double var_annual = 0.0;
        for (std::size_t k = 0; k < k_count; ++k) {
            const double vp = std::max(v[k], 0.0);
            v[k] = v[k] + spec.kappa[k] * (spec.theta[k] - vp) * dt +
                   spec.xi[k] * std::sqrt(vp) * sqrt_dt * eta[k].next();
            var_annual += std::max(v[k], 0.0);
        }
        return std::sqrt(var_annual * dt) * eps.next();
    };
    return run_path(cfg.n_ticks, effective_burn_in(spec, cfg), step);
}

// --- Regime switching -----------------------------------------------------------

RegimeSwitchingParams RegimeSwitchingParams::defaults() {
    RegimeSwitchingParams p;
    p.state_vols = {0.05, 0.10, 0.25};
    // Upward jumps are direct (quiet can shock), relaxation is one step at a
    // time; dwell times are about 5d / 2d / 1d.
    p.transition = {
        {1.0 - 4.2e-4, 2.5e-4, 1.7e-4},
        {8.0e-4, 1.0 - 1.04e-3, 2.4e-4},
        {0.0, 2.1e-3, 1.0 - 2.1e-3},
    };
    return p;
}

void RegimeSwitchingParams::validate() const {
    const auto n = state_vols.size();
    require(n >= 1, "need at least one state");
    require(transition.size() == n, "transition matrix must be square with one row per state");
    for (double v : state_vols)
        require(finite(v) && v > 0.0, "state volatilities must be > 0");
    for (const auto& row : transition) {
        require(row.size() == n, "transition matrix must be square");
        double sum = 0.0;
        for (double pr : row) {
            require(finite(pr) && pr >= 0.0, "transition probabilities must be >= 0");
            sum += pr;
        }
        require(std::abs(sum - 1.0) <= 1e-12, "transition rows must sum to 1");
    }
    const auto pi = stationary_distribution();
    for (std::size_t i = 0; i < pi.size(); ++i)
        require(pi[i] > 1e-12, "state " + std::to_string(i) + " is unreachable");
}

std::vector<double> RegimeSwitchingParams::stationary_distribution() const {
    const auto n = state_vols.size();
    std::vector<double> pi(n, 1.0 / static_cast<double>(n));
    std::vector<double> next(n);
    for (int iter = 0; iter < 100000; ++iter) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                next[j] += pi[i] * transition[i][j];
        double delta = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            delta += std::abs(next[j] - pi[j]);
        pi.swap(next);
        if (delta < 1e-15)
            break;
    }
    return pi;
}

RegularSeries sim_regime_switching(const RegimeSwitchingParams& spec, const SimConfig& cfg) {
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.state_count());

    std::vector<std::vector<double>> cdf(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        double run = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            run += spec.transition[i][j];
            cdf[i][j] = run;
        }
        cdf[i][n - 1] = 1.0;
    }

    auto eps = GaussianStream(derive_subseed(cfg.seed, 0));
    auto chain = UniformStream(derive_subseed(cfg.seed, 1));

    const auto pick = [n](const std::vector<double>& row_cdf, double u) {
        for (std::size_t j = 0; j + 1 < n; ++j)
            if (u < row_cdf[j])
                return j;
        return n - 1;
    };

    // Initial state from the stationary distribution.
    const auto pi = spec.stationary_distribution();
    std::vector<double> pi_cdf(n);
    double run = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        run += pi[j];
        pi_cdf[j] = run;
    }
    pi_cdf[n - 1] = 1.0;
    std::size_t state = pick(pi_cdf, chain.next_halfopen());

    std::vector<double> tick_vols(n);
    for (std::size_t j = 0; j < n; ++j)
        tick_vols[j] = spec.state_vols[j] / kTickStd;

    auto step = [&]() {
        state = pick(cdf[state], chain.next_halfopen());
        return tick_vols[state] * eps.next();
    };
    return run_path(cfg.n_ticks, effective_burn_in(spec, cfg), step);
}

// --- Dispatch and registry -------------------------------------------------------

RegularSeries simulate(const ProcessSpec& spec, const SimConfig& cfg) {
    return std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianRwParams>)
                return sim_gaussian_rw(p, cfg);
            else if constexpr (std::is_same_v<T, Garch11Params>)
                return sim_garch11(p, cfg);
            else if constexpr (std::is_same_v<T, MultiscaleArchParams>)
                return sim_multiscale_arch(p, cfg);
            else if constexpr (std::is_same_v<T, ExpOuSvParams>)
                return sim_exp_ou_sv(p, cfg);
            else if constexpr (std::is_same_v<T, HestonParams>)
                return sim_heston(p, cfg);
            else
                return sim_regime_switching(p, cfg);
        },
        spec);
}

std::int64_t process_memory_ticks(const ProcessSpec& spec) {
    return std::visit(
        [](const auto& p) -> std::int64_t {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianRwParams>) {
                return 1;
            } else if constexpr (std::is_same_v<T, Garch11Params>) {
                return static_cast<std::int64_t>(std::ceil(1.0 / (1.0 - p.alpha - p.beta)));
            } else if constexpr (std::is_same_v<T, MultiscaleArchParams>) {
                const auto taus = p.component_taus();
                const auto grains = p.component_grains();
                return std::max(taus.back(), grains.back());
            } else if constexpr (std::is_same_v<T, ExpOuSvParams>) {
                std::int64_t m = 1;
                for (Tick t : p.reversion_times)
                    m = std::max(m, t.count);
                return m;
            } else if constexpr (std::is_same_v<T, HestonParams>) {
                double m = 1.0;
                for (double k : p.kappa)
                    m = std::max(m, static_cast<double>(ticks::per_year) / k);
                return static_cast<std::int64_t>(std::ceil(m));
            } else {
                std::int64_t m = 1;
                for (std::size_t i = 0; i < p.transition.size(); ++i) {
                    const double exit = 1.0 - p.transition[i][i];
                    if (exit > 0.0)
                        m = std::max(m, static_cast<std::int64_t>(std::ceil(1.0 / exit)));
                }
                return m;
            }
        },
        spec);
}

std::int64_t effective_burn_in(const ProcessSpec& spec, const SimConfig& cfg) {
    if (cfg.burn_in >= 0)
        return cfg.burn_in;
    return 4 * process_memory_ticks(spec);
}

std::string process_name(const ProcessSpec& spec) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, GaussianRwParams>) {
                return "gaussian_rw";
            } else if constexpr (std::is_same_v<T, Garch11Params>) {
                return "garch11";
            } else if constexpr (std::is_same_v<T, MultiscaleArchParams>) {
                return p.profile == MultiscaleArchParams::WeightProfile::lm_affine ? "lm_arch"
                                                                                   : "mkt_arch";
            } else if constexpr (std::is_same_v<T, ExpOuSvParams>) {
                return p.component_count() > 1 ? "lm_exp_sv" : "exp_sv";
            } else if constexpr (std::is_same_v<T, HestonParams>) {
                return p.component_count() > 1 ? "lm_heston" : "heston";
            } else {
                return "regime";
            }
        },
        spec);
}

const std::vector<std::string>& known_process_names() {
    static const std::vector<std::string> names = {
        "gaussian_rw", "garch11", "lm_arch", "mkt_arch",
        "exp_sv",      "lm_exp_sv", "heston",  "lm_heston", "regime",
    };
    return names;
}

ProcessSpec default_process(std::string_view name) {
    if (name == "gaussian_rw")
        return GaussianRwParams{};
    if (name == "garch11" || name == "garch")
        return Garch11Params::defaults();
    if (name == "lm_arch")
        return MultiscaleArchParams::defaults(MultiscaleArchParams::WeightProfile::lm_affine);
    if (name == "mkt_arch")
        return MultiscaleArchParams::defaults(MultiscaleArchParams::WeightProfile::mkt_affine);
    if (name == "exp_sv")
        return ExpOuSvParams::defaults(1);
    if (name == "lm_exp_sv")
        return ExpOuSvParams::defaults(6);
    if (name == "heston")
        return HestonParams::defaults(1);
    if (name == "lm_heston")
        return HestonParams::defaults(3);
    if (name == "regime" || name == "regime_switching")
        return RegimeSwitchingParams::defaults();
    throw Error(ErrorCode::ConfigError, "unknown process name: " + std::string(name));
}

} // namespace trevi
