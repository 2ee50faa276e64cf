#pragma once

#include "rampcast/features.hpp"

namespace rampcast::preprocess {

// Lagged window shape. Consecutive windows advance by stride = l + h so no
// two instances share a lagged observation or a target.
struct WindowSpec {
    std::size_t lag = 4;      // l: past steps fed to the model
    std::size_t horizon = 1;  // h: steps ahead of the window end being forecast

    std::size_t stride() const { return lag + horizon; }

    void validate() const {
        if (lag < 1) throw ValidationError("lag must be >= 1");
        if (horizon < 1) throw ValidationError("horizon must be >= 1");
    }
};

// One training instance: l powers, l (possibly masked) labels, derived
// features and the forecast target.
struct Instance {
    std::vector<double> powers;
    std::vector<RampClass> labels;  // masked positions form a suffix run
    features::FeatureVector feature_vector;
    RampClass target = RampClass::Unknown;
    std::size_t origin_idx = 0;  // ordinal of the window start
};

// Masks the maximal equal-label suffix of a window when that label matches
// the lookahead, i.e. when the event at the window end has not terminated.
inline std::vector<RampClass> mask_window(std::span<const RampClass> window_labels,
                                          RampClass lookahead_label) {
    std::vector<RampClass> out(window_labels.begin(), window_labels.end());
    if (out.empty()) return out;
    std::size_t run_start = out.size() - 1;
    while (run_start > 0 && out[run_start - 1] == out.back()) --run_start;
    if (out.back() == lookahead_label) {
        for (std::size_t i = run_start; i < out.size(); ++i) out[i] = RampClass::Unknown;
    }
    return out;
}

inline std::vector<std::string> make_column_names(std::size_t lag) {
    std::vector<std::string> names;
    names.reserve(2 * lag + features::FeatureVector::kCount);
    for (std::size_t i = 0; i < lag; ++i) names.push_back("x" + std::to_string(i));
    for (std::size_t i = 0; i < lag; ++i) names.push_back("r" + std::to_string(i));
    for (std::string_view n : features::FeatureVector::names()) names.emplace_back(n);
    return names;
}

// Row layout: [power lags, label codes, derived features]; Unknown codes as -1.
inline std::vector<double> flatten(const Instance& inst, ClassScheme scheme) {
    std::vector<double> row;
    row.reserve(2 * inst.powers.size() + features::FeatureVector::kCount);
    for (double p : inst.powers) row.push_back(p);
    for (RampClass c : inst.labels) row.push_back(static_cast<double>(class_code(scheme, c)));
    for (double v : inst.feature_vector.values()) row.push_back(v);
    return row;
}

// The model input matrix: flattened masked windows plus the column manifest.
struct InstanceMatrix {
    std::vector<Instance> rows;
    std::vector<std::string> column_names;
    ClassScheme scheme = ClassScheme::ThreeClass;
    std::size_t lag = 4;
    std::size_t horizon = 1;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return column_names.size(); }

    std::vector<double> flat_row(std::size_t i) const { return flatten(rows[i], scheme); }
    int target_code(std::size_t i) const { return class_code(scheme, rows[i].target); }

    InstanceMatrix subset(std::span<const std::size_t> indices) const {
        InstanceMatrix out;
        out.column_names = column_names;
        out.scheme = scheme;
        out.lag = lag;
        out.horizon = horizon;
        out.rows.reserve(indices.size());
        for (std::size_t i : indices) out.rows.push_back(rows[i]);
        return out;
    }
};

namespace detail {

// Ordinal e ends an event iff the label changes at e+1. The search never
// needs the final sample, so e+1 is always in bounds.
inline std::ptrdiff_t last_event_end_before(const BivariateSeries& series,
                                            std::size_t mask_start) {
    std::ptrdiff_t e = static_cast<std::ptrdiff_t>(mask_start) - 1;
    while (e >= 0 && series.label(static_cast<std::size_t>(e) + 1) ==
                         series.label(static_cast<std::size_t>(e))) {
        --e;
    }
    return e;
}

}  // namespace detail

// Extracts fixed-stride instances from a fully labeled series. Windows start
// at 0, l+h, 2(l+h), ...; the target is the label at window_start + l + h - 1.
// Windows that precede the end of the first recorded event are dropped since
// no "last known event" exists for them yet.
inline InstanceMatrix extract_instances(const BivariateSeries& series, const WindowSpec& spec,
                                        ClassScheme scheme) {
    spec.validate();
    if (spec.lag < 2) throw ValidationError("feature extraction needs lag >= 2");
    const std::size_t l = spec.lag;
    const std::size_t h = spec.horizon;
    if (series.size() < l + h) throw ValidationError("series shorter than lag + horizon");

    InstanceMatrix matrix;
    matrix.column_names = make_column_names(l);
    matrix.scheme = scheme;
    matrix.lag = l;
    matrix.horizon = h;

    for (std::size_t w = 0; w + l + h <= series.size(); w += spec.stride()) {
        const std::size_t target_idx = w + l + h - 1;
        for (std::size_t i = w; i <= target_idx; ++i) {
            if (series.label(i) == RampClass::Unknown) {
                throw ValidationError("unlabeled sample at ordinal " + std::to_string(i));
            }
            if (!in_scheme(scheme, series.label(i))) {
                throw ValidationError("label " + std::string(label_name(series.label(i))) +
                                      " at ordinal " + std::to_string(i) +
                                      " is not in the active scheme");
            }
        }

        Instance inst;
        inst.origin_idx = w;
        inst.powers.reserve(l);
        std::vector<RampClass> window_labels;
        window_labels.reserve(l);
        for (std::size_t i = w; i < w + l; ++i) {
            inst.powers.push_back(series.power(i));
            window_labels.push_back(series.label(i));
        }
        const RampClass lookahead = series.label(target_idx);
        inst.labels = mask_window(window_labels, lookahead);
        inst.target = lookahead;

        // first masked ordinal; w + l when nothing is masked
        std::size_t mask_start = w + l;
        for (std::size_t i = 0; i < l; ++i) {
            if (inst.labels[i] == RampClass::Unknown) {
                mask_start = w + i;
                break;
            }
        }
        std::ptrdiff_t last_end = detail::last_event_end_before(series, mask_start);
        if (last_end < 0) continue;  // window still inside the first event
        const RampClass last_event = series.label(static_cast<std::size_t>(last_end));

        inst.feature_vector = features::extract_features(inst.powers, last_event, scheme);
        matrix.rows.push_back(std::move(inst));
    }
    return matrix;
}

}  // namespace rampcast::preprocess
