#pragma once

#include "rampcast/core.hpp"

namespace rampcast::ramping {

struct SdaConfig {
    double epsilon_mw = 6.69;  // deviation tolerance, MW

    void validate() const {
        if (!(epsilon_mw > 0)) throw ValidationError("SDA epsilon must be positive");
    }
};

inline SdaConfig default_sda(double capacity_mw) {
    return SdaConfig{0.01 * capacity_mw};
}

// An SDA-detected monotone trend over inclusive sample ordinals.
struct TrendSegment {
    std::size_t start_idx = 0;
    std::size_t end_idx = 0;
    double ramp_ratio_mw_per_min = 0.0;
    RampClass assigned_class = RampClass::Unknown;

    std::size_t length() const { return end_idx - start_idx + 1; }
};

// Ramp-ratio thresholds in MW/min plus the event-definition fraction omega.
struct RampThresholds {
    double s1 = 0.0;
    double s2 = 0.0;
    double capacity_mw = 0.0;
    double omega = 0.2;

    void validate() const {
        if (!(s1 > 0 && s1 < s2)) throw ValidationError("thresholds require 0 < s1 < s2");
        if (!(capacity_mw > 0)) throw ValidationError("capacity must be positive");
        if (!(omega > 0 && omega <= 1)) throw ValidationError("omega must be in (0, 1]");
    }
};

// s1 = 0.1 * capacity / 60 and s2 = 0.2 * capacity / 60 (MW/min).
inline RampThresholds make_thresholds(double capacity_mw, double omega = 0.2) {
    RampThresholds th;
    th.s1 = 0.1 * capacity_mw / 60.0;
    th.s2 = 0.2 * capacity_mw / 60.0;
    th.capacity_mw = capacity_mw;
    th.omega = omega;
    th.validate();
    return th;
}

// Running swinging-door state for one trend. The corridor [slope_low,
// slope_high] tracks, in MW per sample, every line through the pivot that
// stays within epsilon of all admitted samples. A new sample belongs while
// the chord from the pivot to it lies inside the corridor; that keeps the
// straight line between the segment endpoints within epsilon of every
// interior sample.
struct DoorState {
    std::size_t pivot_idx = 0;
    double pivot_power = 0.0;
    std::size_t last_idx = 0;
    double slope_low = -std::numeric_limits<double>::infinity();
    double slope_high = std::numeric_limits<double>::infinity();
    double epsilon_mw = 0.0;
};

inline DoorState open_door(std::size_t pivot_idx, double pivot_power, const SdaConfig& cfg) {
    cfg.validate();
    DoorState st;
    st.pivot_idx = pivot_idx;
    st.pivot_power = pivot_power;
    st.last_idx = pivot_idx;
    st.epsilon_mw = cfg.epsilon_mw;
    return st;
}

// Tests the next sample (ordinal state.last_idx + 1) against the current
// trend. Door slopes are committed only when the sample is admitted.
inline bool sda_belongs(DoorState& state, double new_power) {
    const double dt = static_cast<double>(state.last_idx + 1 - state.pivot_idx);
    const double dy = new_power - state.pivot_power;
    const double low = std::max(state.slope_low, (dy - state.epsilon_mw) / dt);
    const double high = std::min(state.slope_high, (dy + state.epsilon_mw) / dt);
    const double chord = dy / dt;
    if (chord < low || chord > high) return false;
    state.slope_low = low;
    state.slope_high = high;
    ++state.last_idx;
    return true;
}

// Signed MW/min over an inclusive segment.
inline double ramp_ratio(const BivariateSeries& series, const TrendSegment& seg) {
    if (seg.end_idx >= series.size() || seg.start_idx > seg.end_idx) {
        throw ValidationError("segment out of series bounds");
    }
    if (seg.end_idx == seg.start_idx) {
        throw ValidationError("ramp ratio undefined for a zero-length segment");
    }
    const double dp = series.power(seg.end_idx) - series.power(seg.start_idx);
    const double minutes =
        static_cast<double>(seg.end_idx - seg.start_idx) * series.period_minutes;
    return dp / minutes;
}

// Decision rule over the ramp ratio. Both +/-s1 and +/-s2 boundaries belong
// to the more severe side.
inline RampClass classify_ramp(double rr, const RampThresholds& th) {
    if (rr <= -th.s2) return RampClass::RampDownCritical;
    if (rr <= -th.s1) return RampClass::RampDown;
    if (rr < th.s1) return RampClass::NoRamp;
    if (rr < th.s2) return RampClass::RampUp;
    return RampClass::RampUpCritical;
}

// Event test: max - min over [t, t+dt] reaches omega * capacity, with the
// window capped at 4 hours.
inline bool is_ramp_event(const BivariateSeries& series, std::size_t t, std::size_t dt,
                          const RampThresholds& th) {
    th.validate();
    if (t + dt >= series.size()) throw ValidationError("event window out of bounds");
    if (static_cast<double>(dt) * series.period_minutes > 240.0) {
        throw ValidationError("event window exceeds 4 hours");
    }
    double lo = series.power(t);
    double hi = lo;
    for (std::size_t i = t; i <= t + dt; ++i) {
        lo = std::min(lo, series.power(i));
        hi = std::max(hi, series.power(i));
    }
    return (hi - lo) >= th.capacity_mw * th.omega;
}

// Splits the series into trend segments. Segments partition [0, T-1]; the
// sample that breaks a trend becomes the pivot of the next segment. The tail
// segment may be a single sample, in which case its ratio is 0.
inline std::vector<TrendSegment> segment_series(const BivariateSeries& series,
                                                const SdaConfig& cfg) {
    cfg.validate();
    if (series.size() < 2) throw ValidationError("segmentation needs at least 2 samples");

    std::vector<TrendSegment> segments;
    DoorState door = open_door(0, series.power(0), cfg);
    for (std::size_t t = 1; t < series.size(); ++t) {
        if (sda_belongs(door, series.power(t))) continue;
        TrendSegment seg;
        seg.start_idx = door.pivot_idx;
        seg.end_idx = t - 1;
        seg.ramp_ratio_mw_per_min = seg.length() > 1 ? ramp_ratio(series, seg) : 0.0;
        segments.push_back(seg);
        door = open_door(t, series.power(t), cfg);
    }
    TrendSegment tail;
    tail.start_idx = door.pivot_idx;
    tail.end_idx = series.size() - 1;
    tail.ramp_ratio_mw_per_min = tail.length() > 1 ? ramp_ratio(series, tail) : 0.0;
    segments.push_back(tail);
    return segments;
}

// Segments the series and assigns each sample its segment's ramp class.
// Prior labels are ignored, so relabeling is a fixed point.
struct LabeledSeries {
    BivariateSeries series;
    std::vector<TrendSegment> segments;
};

inline LabeledSeries label_series(const BivariateSeries& input, const SdaConfig& cfg,
                                  const RampThresholds& th) {
    th.validate();
    LabeledSeries out;
    out.series = input;
    out.segments = segment_series(input, cfg);
    for (TrendSegment& seg : out.segments) {
        seg.assigned_class = classify_ramp(seg.ramp_ratio_mw_per_min, th);
        for (std::size_t i = seg.start_idx; i <= seg.end_idx; ++i) {
            out.series.samples[i].label = seg.assigned_class;
        }
    }
    return out;
}

}  // namespace rampcast::ramping
