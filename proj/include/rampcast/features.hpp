#pragma once

#include <algorithm>
#include <array>

#include "rampcast/core.hpp"

namespace rampcast::features {

// Derived features of one power window, in the fixed column order given by
// names(). Turning-point counts are stored as doubles so the vector flattens
// straight into a numeric row.
struct FeatureVector {
    double max = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double variance = 0.0;
    double signal_distance = 0.0;
    double shannon_entropy = 0.0;
    double iqr = 0.0;
    double lz_complexity = 0.0;
    double mean_abs_dev = 0.0;
    double median_abs_dev = 0.0;
    double mean_abs_diff = 0.0;
    double mean_diff = 0.0;
    double median_abs_diff = 0.0;
    double median_diff = 0.0;
    double neg_turning_points = 0.0;
    double pos_turning_points = 0.0;
    double petrosian_fd = 0.0;
    double rms = 0.0;
    double slope = 0.0;
    double last_event_code = -1.0;

    static constexpr std::size_t kCount = 21;

    static std::span<const std::string_view> names() {
        static constexpr std::array<std::string_view, kCount> kNames = {
            "max", "mean", "median", "min", "variance", "signal_distance",
            "shannon_entropy", "iqr", "lz_complexity", "mean_abs_dev", "median_abs_dev",
            "mean_abs_diff", "mean_diff", "median_abs_diff", "median_diff",
            "neg_turning_points", "pos_turning_points", "petrosian_fd", "rms", "slope",
            "last_event_code"};
        return {kNames.data(), kNames.size()};
    }

    std::array<double, kCount> values() const {
        return {max, mean, median, min, variance, signal_distance, shannon_entropy, iqr,
                lz_complexity, mean_abs_dev, median_abs_dev, mean_abs_diff, mean_diff,
                median_abs_diff, median_diff, neg_turning_points, pos_turning_points,
                petrosian_fd, rms, slope, last_event_code};
    }

    static FeatureVector from_values(std::span<const double> v) {
        if (v.size() != kCount) throw ValidationError("feature vector needs 21 values");
        FeatureVector f;
        f.max = v[0];
        f.mean = v[1];
        f.median = v[2];
        f.min = v[3];
        f.variance = v[4];
        f.signal_distance = v[5];
        f.shannon_entropy = v[6];
        f.iqr = v[7];
        f.lz_complexity = v[8];
        f.mean_abs_dev = v[9];
        f.median_abs_dev = v[10];
        f.mean_abs_diff = v[11];
        f.mean_diff = v[12];
        f.median_abs_diff = v[13];
        f.median_diff = v[14];
        f.neg_turning_points = v[15];
        f.pos_turning_points = v[16];
        f.petrosian_fd = v[17];
        f.rms = v[18];
        f.slope = v[19];
        f.last_event_code = v[20];
        return f;
    }
};

namespace detail {

inline double mean_of(std::span<const double> v) {
    double sum = 0.0;
    for (double x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

inline double median_sorted(std::span<const double> sorted) {
    std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
}

inline double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return median_sorted(v);
}

// Linear-interpolated quantile over sorted values (index h = (n-1)p).
inline double quantile_sorted(std::span<const double> sorted, double p) {
    double h = static_cast<double>(sorted.size() - 1) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline std::vector<double> first_differences(std::span<const double> v) {
    std::vector<double> d;
    d.reserve(v.size() - 1);
    for (std::size_t i = 0; i + 1 < v.size(); ++i) d.push_back(v[i + 1] - v[i]);
    return d;
}

}  // namespace detail

// -sum p log2 p over the empirical frequencies of exact distinct values.
inline double shannon_entropy(std::span<const double> window) {
    if (window.empty()) throw ValidationError("entropy of an empty window");
    std::vector<double> sorted(window.begin(), window.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double h = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        double p = static_cast<double>(j - i) / n;
        h -= p * std::log2(p);
        i = j;
    }
    return h < 0.0 ? 0.0 : h;
}

// LZ76 phrase count of a binary string (Kaspar-Schuster scan).
inline std::size_t lz76_phrase_count(std::span<const char> bits) {
    const std::size_t n = bits.size();
    if (n == 0) return 0;
    if (n == 1) return 1;
    std::size_t c = 1, l = 1, i = 0, k = 1, k_max = 1;
    while (true) {
        if (bits[i + k - 1] == bits[l + k - 1]) {
            ++k;
            if (l + k > n) {
                ++c;
                break;
            }
        } else {
            k_max = std::max(k, k_max);
            ++i;
            if (i == l) {
                ++c;
                l += k_max;
                if (l + 1 > n) break;
                i = 0;
                k = 1;
                k_max = 1;
            } else {
                k = 1;
            }
        }
    }
    return c;
}

// Binarizes against the window median (x > median -> 1) and returns the LZ76
// phrase count divided by the window length. Always in (0, 1].
inline double lz_complexity(std::span<const double> window) {
    if (window.empty()) throw ValidationError("lz_complexity of an empty window");
    double med = detail::median_of({window.begin(), window.end()});
    std::vector<char> bits(window.size());
    for (std::size_t i = 0; i < window.size(); ++i) bits[i] = window[i] > med ? 1 : 0;
    return static_cast<double>(lz76_phrase_count(bits)) / static_cast<double>(window.size());
}

// Petrosian fractal dimension: log10(n) / (log10(n) + log10(n / (n + 0.4 Nd)))
// with Nd the number of sign changes in the first difference.
inline double petrosian_fd(std::span<const double> window) {
    if (window.size() < 3) throw ValidationError("petrosian_fd needs at least 3 samples");
    auto diffs = detail::first_differences(window);
    std::size_t sign_changes = 0;
    for (std::size_t i = 1; i < diffs.size(); ++i) {
        if (diffs[i] * diffs[i - 1] < 0.0) ++sign_changes;
    }
    const double n = static_cast<double>(window.size());
    const double nd = static_cast<double>(sign_changes);
    return std::log10(n) / (std::log10(n) + std::log10(n / (n + 0.4 * nd)));
}

// Counts of strict local extrema; plateaus contribute none.
inline std::pair<std::size_t, std::size_t> turning_points(std::span<const double> window) {
    if (window.size() < 3) throw ValidationError("turning_points needs at least 3 samples");
    std::size_t neg = 0, pos = 0;
    for (std::size_t i = 1; i + 1 < window.size(); ++i) {
        if (window[i] > window[i - 1] && window[i] > window[i + 1]) ++pos;
        if (window[i] < window[i - 1] && window[i] < window[i + 1]) ++neg;
    }
    return {neg, pos};
}

// Ordinary-least-squares slope against abscissa 0..l-1.
inline double slope(std::span<const double> window) {
    if (window.size() < 2) throw ValidationError("slope needs at least 2 samples");
    const double n = static_cast<double>(window.size());
    const double t_mean = (n - 1.0) / 2.0;
    const double y_mean = detail::mean_of(window);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < window.size(); ++i) {
        double dt = static_cast<double>(i) - t_mean;
        sxy += dt * (window[i] - y_mean);
        sxx += dt * dt;
    }
    return sxy / sxx;
}

// Computes all window features. The window must have length >= 2; for length
// 2 the extremum-based features take their degenerate values (no turning
// points, fractal dimension 1).
inline FeatureVector extract_features(std::span<const double> window, RampClass last_event,
                                      ClassScheme scheme) {
    const std::size_t l = window.size();
    if (l < 2) throw ValidationError("feature extraction needs at least 2 samples");

    FeatureVector f;
    std::vector<double> sorted(window.begin(), window.end());
    std::sort(sorted.begin(), sorted.end());

    f.min = sorted.front();
    f.max = sorted.back();
    f.mean = detail::mean_of(window);
    f.median = detail::median_sorted(sorted);
    f.iqr = detail::quantile_sorted(sorted, 0.75) - detail::quantile_sorted(sorted, 0.25);

    double var = 0.0, abs_dev = 0.0, sq = 0.0;
    std::vector<double> devs(l);
    for (std::size_t i = 0; i < l; ++i) {
        double d = window[i] - f.mean;
        var += d * d;
        abs_dev += std::abs(d);
        devs[i] = std::abs(d);
        sq += window[i] * window[i];
    }
    f.variance = var / static_cast<double>(l);
    f.mean_abs_dev = abs_dev / static_cast<double>(l);
    f.median_abs_dev = detail::median_of(std::move(devs));
    f.rms = std::sqrt(sq / static_cast<double>(l));

    auto diffs = detail::first_differences(window);
    double sum_d = 0.0, sum_ad = 0.0, dist = 0.0;
    std::vector<double> abs_diffs(diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        sum_d += diffs[i];
        sum_ad += std::abs(diffs[i]);
        abs_diffs[i] = std::abs(diffs[i]);
        dist += std::sqrt(1.0 + diffs[i] * diffs[i]);
    }
    f.mean_diff = sum_d / static_cast<double>(diffs.size());
    f.mean_abs_diff = sum_ad / static_cast<double>(diffs.size());
    f.median_diff = detail::median_of(diffs);
    f.median_abs_diff = detail::median_of(std::move(abs_diffs));
    f.signal_distance = dist;

    f.shannon_entropy = shannon_entropy(window);
    f.lz_complexity = lz_complexity(window);
    f.slope = slope(window);

    if (l >= 3) {
        auto [neg, pos] = turning_points(window);
        f.neg_turning_points = static_cast<double>(neg);
        f.pos_turning_points = static_cast<double>(pos);
        f.petrosian_fd = petrosian_fd(window);
    } else {
        f.neg_turning_points = 0.0;
        f.pos_turning_points = 0.0;
        f.petrosian_fd = 1.0;
    }

    f.last_event_code = static_cast<double>(class_code(scheme, last_event));
    return f;
}

}  // namespace rampcast::features
