#pragma once

#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <string>

#include "rampcast/common.hpp"

namespace rampcast {

// Ramp event classes. Star variants exist only in the grouped three-class
// scheme, critical variants only in the five-class scheme. Unknown is the
// mask sentinel: it may appear as a masked feature value but never as a
// training target.
enum class RampClass : std::int8_t {
    RampDownCritical,
    RampDown,
    NoRamp,
    RampUp,
    RampUpCritical,
    RampDownStar,
    RampUpStar,
    Unknown,
};

inline std::string_view label_name(RampClass c) {
    switch (c) {
        case RampClass::RampDownCritical: return "ramp_down_critical";
        case RampClass::RampDown: return "ramp_down";
        case RampClass::NoRamp: return "no_ramp";
        case RampClass::RampUp: return "ramp_up";
        case RampClass::RampUpCritical: return "ramp_up_critical";
        case RampClass::RampDownStar: return "ramp_down_star";
        case RampClass::RampUpStar: return "ramp_up_star";
        case RampClass::Unknown: return "unknown";
    }
    return "unknown";
}

inline std::optional<RampClass> label_from_name(std::string_view name) {
    for (RampClass c : {RampClass::RampDownCritical, RampClass::RampDown, RampClass::NoRamp,
                        RampClass::RampUp, RampClass::RampUpCritical, RampClass::RampDownStar,
                        RampClass::RampUpStar, RampClass::Unknown}) {
        if (label_name(c) == name) return c;
    }
    return std::nullopt;
}

enum class ClassScheme { FiveClass, ThreeClass };

// Class order is fixed: most severe down first, most severe up last.
inline std::span<const RampClass> scheme_classes(ClassScheme scheme) {
    static constexpr std::array<RampClass, 5> five = {
        RampClass::RampDownCritical, RampClass::RampDown, RampClass::NoRamp,
        RampClass::RampUp, RampClass::RampUpCritical};
    static constexpr std::array<RampClass, 3> three = {
        RampClass::RampDownStar, RampClass::NoRamp, RampClass::RampUpStar};
    if (scheme == ClassScheme::FiveClass) return {five.data(), five.size()};
    return {three.data(), three.size()};
}

inline int scheme_size(ClassScheme scheme) {
    return scheme == ClassScheme::FiveClass ? 5 : 3;
}

inline std::string_view scheme_name(ClassScheme scheme) {
    return scheme == ClassScheme::FiveClass ? "five_class" : "three_class";
}

inline std::optional<ClassScheme> scheme_from_name(std::string_view name) {
    if (name == "five_class" || name == "five" || name == "5") return ClassScheme::FiveClass;
    if (name == "three_class" || name == "three" || name == "3") return ClassScheme::ThreeClass;
    return std::nullopt;
}

inline bool in_scheme(ClassScheme scheme, RampClass c) {
    for (RampClass s : scheme_classes(scheme)) {
        if (s == c) return true;
    }
    return false;
}

// Integer codes consumed by the trees. Unknown maps to -1, a constant outside
// every valid code domain, so "still unknown" is itself learnable.
inline int class_code(ClassScheme scheme, RampClass c) {
    if (c == RampClass::Unknown) return -1;
    auto classes = scheme_classes(scheme);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i] == c) return static_cast<int>(i);
    }
    throw ValidationError(std::string("label ") + std::string(label_name(c)) +
                          " is not a member of scheme " + std::string(scheme_name(scheme)));
}

inline RampClass class_from_code(ClassScheme scheme, int code) {
    if (code == -1) return RampClass::Unknown;
    auto classes = scheme_classes(scheme);
    if (code < 0 || code >= static_cast<int>(classes.size())) {
        throw ValidationError("class code " + std::to_string(code) + " out of range for scheme " +
                              std::string(scheme_name(scheme)));
    }
    return classes[static_cast<std::size_t>(code)];
}

// Five-class -> three-class grouping. Unknown passes through; star inputs
// are an error.
inline RampClass group_to_three(RampClass c) {
    switch (c) {
        case RampClass::RampDownCritical:
        case RampClass::RampDown: return RampClass::RampDownStar;
        case RampClass::RampUp:
        case RampClass::RampUpCritical: return RampClass::RampUpStar;
        case RampClass::NoRamp: return RampClass::NoRamp;
        case RampClass::Unknown: return RampClass::Unknown;
        case RampClass::RampDownStar:
        case RampClass::RampUpStar:
            throw ValidationError("grouping expects five-class labels, got " +
                                  std::string(label_name(c)));
    }
    return RampClass::Unknown;
}

struct PowerSample {
    std::int64_t index = 0;  // sample ordinal, 0-based and consecutive
    double power = 0.0;      // MW
    RampClass label = RampClass::Unknown;
};

// Generated power paired with ramp labels at a fixed sampling period.
// Immutable by convention after construction; safe to share across threads.
struct BivariateSeries {
    std::vector<PowerSample> samples;
    double period_minutes = 15.0;
    double capacity_mw = 0.0;  // 0 = undeclared

    std::size_t size() const { return samples.size(); }
    double power(std::size_t i) const { return samples[i].power; }
    RampClass label(std::size_t i) const { return samples[i].label; }
};

inline void validate_series(const BivariateSeries& series) {
    if (series.samples.empty()) throw ValidationError("series is empty");
    if (series.period_minutes <= 0) throw ValidationError("sampling period must be positive");
    for (std::size_t i = 0; i < series.samples.size(); ++i) {
        const PowerSample& s = series.samples[i];
        if (s.index != static_cast<std::int64_t>(i)) {
            throw ValidationError("sample indices must start at 0 and increase by 1 (position " +
                                  std::to_string(i) + " has index " + std::to_string(s.index) + ")");
        }
        if (s.power < 0.0) {
            throw ValidationError("negative power at index " + std::to_string(i));
        }
        if (series.capacity_mw > 0.0 && s.power > series.capacity_mw) {
            throw ValidationError("power exceeds declared capacity at index " + std::to_string(i));
        }
    }
}

namespace detail {

// Power values travel as decimals with up to 12 significant digits.
inline std::string format_power(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline bool parse_double(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

inline bool parse_int64(std::string_view s, std::int64_t& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

inline std::vector<std::string_view> split_csv_line(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace detail

// Reads `index,power[,label]` CSV with a header line. Rows without a label
// (or with an empty label field) get Unknown.
inline BivariateSeries read_series(const std::string& path, bool has_labels = true) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);

    BivariateSeries series;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!header_seen) {
            header_seen = true;
            if (line.rfind("index,power", 0) != 0) {
                throw ParseError(path + " line 1: expected header starting with 'index,power'");
            }
            continue;
        }
        auto fields = detail::split_csv_line(line);
        auto fail = [&](const std::string& what) {
            return ParseError(path + " line " + std::to_string(line_no) + ": " + what);
        };
        if (fields.size() < 2) throw fail("expected at least index,power");

        PowerSample sample;
        if (!detail::parse_int64(fields[0], sample.index)) {
            throw fail("bad index '" + std::string(fields[0]) + "'");
        }
        if (!detail::parse_double(fields[1], sample.power)) {
            throw fail("bad power '" + std::string(fields[1]) + "'");
        }
        if (sample.power < 0.0) throw fail("negative power");
        std::int64_t expected = static_cast<std::int64_t>(series.samples.size());
        if (sample.index != expected) {
            throw fail("index must be " + std::to_string(expected) + ", got " +
                       std::to_string(sample.index));
        }
        if (has_labels && fields.size() >= 3 && !fields[2].empty()) {
            auto label = label_from_name(fields[2]);
            if (!label) throw fail("unknown label '" + std::string(fields[2]) + "'");
            sample.label = *label;
        }
        series.samples.push_back(sample);
    }
    if (series.samples.empty()) {
        throw ParseError(path + ": no data rows");
    }
    return series;
}

inline void write_series(const BivariateSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings everywhere
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << "index,power,label\n";
    for (const PowerSample& s : series.samples) {
        out << s.index << ',' << detail::format_power(s.power) << ',' << label_name(s.label)
            << '\n';
    }
    if (!out) throw IoError("write failed for " + path);
}

struct MinMaxScaling {
    BivariateSeries series;  // powers mapped to [0, 1]
    double min_mw = 0.0;
    double max_mw = 0.0;
};

// Maps power to (x - min) / (max - min); labels untouched. The returned
// parameters invert the transform.
inline MinMaxScaling minmax_scale(const BivariateSeries& series) {
    if (series.samples.empty()) throw ValidationError("cannot scale an empty series");
    double lo = series.samples.front().power;
    double hi = lo;
    for (const PowerSample& s : series.samples) {
        lo = std::min(lo, s.power);
        hi = std::max(hi, s.power);
    }
    if (hi == lo) {
        throw ValidationError("degenerate range: series is constant at " +
                              detail::format_power(lo));
    }
    MinMaxScaling result;
    result.min_mw = lo;
    result.max_mw = hi;
    result.series = series;
    for (PowerSample& s : result.series.samples) {
        s.power = (s.power - lo) / (hi - lo);
    }
    return result;
}

inline BivariateSeries minmax_invert(const BivariateSeries& scaled, double min_mw, double max_mw) {
    BivariateSeries result = scaled;
    for (PowerSample& s : result.samples) {
        s.power = min_mw + s.power * (max_mw - min_mw);
    }
    return result;
}

}  // namespace rampcast
