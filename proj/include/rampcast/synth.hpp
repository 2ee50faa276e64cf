#pragma once

#include "rampcast/ramping.hpp"

namespace rampcast::synth {

// Hidden regimes driving the generated power. Calm drift stays below the s1
// threshold; the critical drifts sit above s2 so every class actually occurs.
enum class Regime { Calm, Up, Down, UpCritical, DownCritical };

inline constexpr std::size_t kRegimeCount = 5;

struct SynthConfig {
    double capacity_mw = 669.0;
    std::size_t n_samples = 28800;
    double period_minutes = 15.0;
    // row-stochastic transition matrix over {calm, up, down, up-crit, down-crit}
    std::array<std::array<double, kRegimeCount>, kRegimeCount> transitions{};
    std::array<double, kRegimeCount> drift_mw_per_min{};  // signed
    std::array<double, kRegimeCount> noise_mw{};          // per-step Gaussian scale
    double start_power_mw = -1.0;                         // <0: capacity / 2
    double sda_epsilon_mw = -1.0;                         // <0: 1% of capacity
    double omega = 0.2;
    std::uint64_t seed = 1;

    void validate() const {
        if (!(capacity_mw > 0)) throw ValidationError("capacity must be positive");
        if (n_samples < 2) throw ValidationError("need at least 2 samples");
        if (!(period_minutes > 0)) throw ValidationError("period must be positive");
        for (const auto& row : transitions) {
            double sum = 0.0;
            for (double p : row) {
                if (p < 0.0) throw ValidationError("negative transition probability");
                sum += p;
            }
            if (std::abs(sum - 1.0) > 1e-9) {
                throw ValidationError("transition rows must sum to 1");
            }
        }
        const double s1 = 0.1 * capacity_mw / 60.0;
        const double s2 = 0.2 * capacity_mw / 60.0;
        if (std::abs(drift_mw_per_min[0]) >= s1) {
            throw ValidationError("calm drift must stay below the s1 threshold");
        }
        if (std::abs(drift_mw_per_min[3]) < s2 || std::abs(drift_mw_per_min[4]) < s2) {
            throw ValidationError("critical drifts must reach the s2 threshold");
        }
    }
};

// Defaults shaped to the target regime: ~15-minute sampling, bounded power,
// a dominant calm state and occasional ramps of both severities.
inline SynthConfig default_config(std::uint64_t seed = 1) {
    SynthConfig cfg;
    cfg.seed = seed;
    const double s1 = 0.1 * cfg.capacity_mw / 60.0;  // 1.115 MW/min at 669 MW
    cfg.drift_mw_per_min = {0.0, 1.45 * s1, -1.45 * s1, 2.9 * s1, -2.9 * s1};
    cfg.noise_mw = {2.0, 3.0, 3.0, 4.0, 4.0};
    cfg.transitions = {{
        {0.960, 0.012, 0.012, 0.008, 0.008},  // calm
        {0.300, 0.700, 0.000, 0.000, 0.000},  // up
        {0.300, 0.000, 0.700, 0.000, 0.000},  // down
        {0.350, 0.000, 0.000, 0.650, 0.000},  // up-critical
        {0.350, 0.000, 0.000, 0.000, 0.650},  // down-critical
    }};
    return cfg;
}

// Simulates the regime chain, integrates drift + noise into a clipped power
// trace, then labels it with the pipeline's own segmentation so the ground
// truth is exactly what the detector can observe.
inline ramping::LabeledSeries generate(const SynthConfig& cfg) {
    cfg.validate();
    Rng rng(derive_seed(cfg.seed, "synth"));

    BivariateSeries series;
    series.period_minutes = cfg.period_minutes;
    series.capacity_mw = cfg.capacity_mw;
    series.samples.reserve(cfg.n_samples);

    double power = cfg.start_power_mw >= 0.0 ? cfg.start_power_mw : cfg.capacity_mw / 2.0;
    std::size_t regime = 0;  // calm
    for (std::size_t t = 0; t < cfg.n_samples; ++t) {
        series.samples.push_back({static_cast<std::int64_t>(t), power, RampClass::Unknown});

        double u = rng.uniform();
        double cum = 0.0;
        for (std::size_t r = 0; r < kRegimeCount; ++r) {
            cum += cfg.transitions[regime][r];
            if (u < cum) {
                regime = r;
                break;
            }
        }
        power += cfg.drift_mw_per_min[regime] * cfg.period_minutes +
                 rng.gaussian() * cfg.noise_mw[regime];
        power = std::clamp(power, 0.0, cfg.capacity_mw);
    }

    double epsilon = cfg.sda_epsilon_mw > 0.0 ? cfg.sda_epsilon_mw : 0.01 * cfg.capacity_mw;
    return ramping::label_series(series, ramping::SdaConfig{epsilon},
                                 ramping::make_thresholds(cfg.capacity_mw, cfg.omega));
}

}  // namespace rampcast::synth
