#pragma once

#include "rampcast/eval.hpp"
#include "rampcast/model_io.hpp"
#include "rampcast/ramping.hpp"

namespace rampcast::stream {

// One step's output. closed carries the segment finished at this step, if
// any. last_event_known flags forecasts made before the first event closes,
// when the last-event feature is still the -1 sentinel.
struct ForecastRecord {
    std::size_t step = 0;
    bool has_forecast = false;
    RampClass predicted = RampClass::Unknown;
    std::vector<double> scores;
    bool last_event_known = false;
    bool closed_event = false;
    ramping::TrendSegment closed;
};

// Running state of one stream. Samples after last_event_end carry Unknown
// until their trend breaks; back-filled labels are final.
struct StreamState {
    BivariateSeries history;
    ramping::DoorState door;
    std::ptrdiff_t last_event_end = -1;
    RampClass last_event_class = RampClass::Unknown;
    const imbalance::EnsembleModel* model = nullptr;
    ramping::RampThresholds thresholds;
    ramping::SdaConfig sda;
    std::vector<ramping::TrendSegment> closed_segments;
};

inline StreamState make_stream(const imbalance::EnsembleModel& model,
                               const ramping::RampThresholds& thresholds,
                               const ramping::SdaConfig& sda, double period_minutes = 15.0) {
    thresholds.validate();
    sda.validate();
    StreamState state;
    state.model = &model;
    state.thresholds = thresholds;
    state.sda = sda;
    state.history.period_minutes = period_minutes;
    state.history.capacity_mw = thresholds.capacity_mw;
    return state;
}

// Ingests one reading: closes the running trend if the reading breaks it
// (classifying and back-filling the finished event), appends the sample as
// part of the still-unknown current event, and forecasts the next label once
// enough history exists.
inline ForecastRecord step(StreamState& state, double new_power) {
    if (state.model == nullptr) throw ValidationError("stream has no model");
    if (new_power < 0.0) throw ValidationError("negative power reading");

    const std::size_t j = state.history.size();
    ForecastRecord record;
    record.step = j;

    if (j == 0) {
        state.door = ramping::open_door(0, new_power, state.sda);
    } else if (!ramping::sda_belongs(state.door, new_power)) {
        ramping::TrendSegment seg;
        seg.start_idx = state.door.pivot_idx;
        seg.end_idx = j - 1;
        seg.ramp_ratio_mw_per_min =
            seg.length() > 1 ? ramping::ramp_ratio(state.history, seg) : 0.0;
        seg.assigned_class = ramping::classify_ramp(seg.ramp_ratio_mw_per_min, state.thresholds);
        if (state.model->scheme == ClassScheme::ThreeClass) {
            seg.assigned_class = group_to_three(seg.assigned_class);
        }
        for (std::size_t i = seg.start_idx; i <= seg.end_idx; ++i) {
            state.history.samples[i].label = seg.assigned_class;
        }
        state.last_event_end = static_cast<std::ptrdiff_t>(seg.end_idx);
        state.last_event_class = seg.assigned_class;
        state.closed_segments.push_back(seg);
        record.closed_event = true;
        record.closed = seg;
        state.door = ramping::open_door(j, new_power, state.sda);
    }
    state.history.samples.push_back(
        {static_cast<std::int64_t>(j), new_power, RampClass::Unknown});

    const std::size_t l = state.model->lag;
    if (state.history.size() < l) return record;  // warm-up

    preprocess::Instance inst;
    inst.origin_idx = j + 1 - l;
    inst.powers.reserve(l);
    inst.labels.reserve(l);
    for (std::size_t i = j + 1 - l; i <= j; ++i) {
        inst.powers.push_back(state.history.power(i));
        inst.labels.push_back(state.history.label(i));
    }
    inst.feature_vector =
        features::extract_features(inst.powers, state.last_event_class, state.model->scheme);

    auto [cls, scores] = imbalance::predict_easy(*state.model, inst);
    record.has_forecast = true;
    record.predicted = cls;
    record.scores = std::move(scores);
    record.last_event_known = state.last_event_class != RampClass::Unknown;
    return record;
}

struct ReplayResult {
    std::vector<ForecastRecord> records;  // one per step from the first full window
    eval::MetricsReport metrics;
    bool has_metrics = false;
    std::vector<ramping::TrendSegment> closed_segments;
};

// Feeds a whole series through step(). Input labels are never shown to the
// stream; where they exist and fit the model's scheme they score the
// forecasts against the next-step reference.
inline ReplayResult replay(const BivariateSeries& series, const imbalance::EnsembleModel& model,
                           const ramping::RampThresholds& thresholds,
                           const ramping::SdaConfig& sda) {
    const std::size_t l = model.lag;
    const std::size_t h = model.horizon;
    if (series.size() < l + h) throw ValidationError("series shorter than lag + horizon");

    StreamState state = make_stream(model, thresholds, sda, series.period_minutes);
    ReplayResult result;
    result.records.reserve(series.size() - (l - 1));
    for (std::size_t t = 0; t < series.size(); ++t) {
        ForecastRecord record = step(state, series.power(t));
        if (record.has_forecast) result.records.push_back(std::move(record));
    }
    result.closed_segments = state.closed_segments;

    std::vector<RampClass> truth, pred;
    for (const ForecastRecord& record : result.records) {
        std::size_t target = record.step + h;
        if (target >= series.size()) continue;
        RampClass reference = series.label(target);
        if (reference == RampClass::Unknown || !in_scheme(model.scheme, reference)) continue;
        truth.push_back(reference);
        pred.push_back(record.predicted);
    }
    if (!truth.empty()) {
        result.metrics = eval::compute_metrics(truth, pred, model.scheme);
        result.has_metrics = true;
    }
    return result;
}

}  // namespace rampcast::stream
