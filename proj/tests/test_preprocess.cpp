#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "rampcast/preprocess.hpp"

using namespace rampcast;
using namespace rampcast::preprocess;

namespace {

BivariateSeries labeled_series(const std::vector<RampClass>& labels, double base = 100.0) {
    BivariateSeries s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        s.samples.push_back({static_cast<std::int64_t>(i), base + static_cast<double>(i),
                             labels[i]});
    }
    return s;
}

constexpr RampClass kNo = RampClass::NoRamp;
constexpr RampClass kUp = RampClass::RampUpStar;
constexpr RampClass kDown = RampClass::RampDownStar;
constexpr RampClass kUnk = RampClass::Unknown;

std::vector<RampClass> from_codes(const std::vector<int>& codes) {
    std::vector<RampClass> out;
    for (int c : codes) out.push_back(class_from_code(ClassScheme::ThreeClass, c));
    return out;
}

std::vector<int> to_codes(const std::vector<RampClass>& labels) {
    std::vector<int> out;
    for (RampClass c : labels) out.push_back(class_code(ClassScheme::ThreeClass, c));
    return out;
}

}  // namespace

TEST_CASE("mask_window masks a fully ongoing window") {
    std::vector<RampClass> w{kUp, kUp, kUp, kUp};
    auto masked = mask_window(w, kUp);
    for (RampClass c : masked) CHECK(c == kUnk);
}

TEST_CASE("mask_window leaves a terminated event unmasked") {
    std::vector<RampClass> w{kUp, kUp, kUp, kUp};
    auto masked = mask_window(w, kDown);
    CHECK(masked == w);
}

TEST_CASE("mask_window masks only the suffix run") {
    std::vector<RampClass> w{kNo, kNo, kUp, kUp};
    auto masked = mask_window(w, kUp);
    CHECK(masked[0] == kNo);
    CHECK(masked[1] == kNo);
    CHECK(masked[2] == kUnk);
    CHECK(masked[3] == kUnk);
}

TEST_CASE("mask_window agrees with the brute-force scanner on random windows") {
    Rng rng(31415);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t l = 2 + rng.index(11);  // l in [2, 12]
        std::vector<int> codes(l);
        for (int& c : codes) c = static_cast<int>(rng.index(3));
        int lookahead = static_cast<int>(rng.index(3));

        auto expected = oracle::mask_scanner(codes, lookahead, -1);
        auto got = mask_window(from_codes(codes),
                               class_from_code(ClassScheme::ThreeClass, lookahead));
        CHECK(to_codes(got) == expected);
    }
}

TEST_CASE("window starts follow the stride") {
    // T=15, l=4, h=1 -> starts {0, 5, 10}
    std::vector<RampClass> labels(15, kNo);
    labels[0] = kUp;  // ensure a first event ends so nothing is dropped
    labels[1] = kUp;
    BivariateSeries s = labeled_series(labels);
    auto m = extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass);
    REQUIRE(m.n_rows() == 3);
    CHECK(m.rows[0].origin_idx == 0);
    CHECK(m.rows[1].origin_idx == 5);
    CHECK(m.rows[2].origin_idx == 10);
}

TEST_CASE("minimal-length series yields exactly one instance") {
    std::vector<RampClass> labels{kUp, kNo, kNo, kNo, kNo};
    BivariateSeries s = labeled_series(labels);
    auto m = extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass);
    CHECK(m.n_rows() == 1);
}

TEST_CASE("rows never share source ordinals") {
    Rng rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t l = 2 + rng.index(8);
        std::size_t h = 1 + rng.index(2);
        std::size_t T = l + h + rng.index(80);
        std::vector<RampClass> labels(T);
        for (auto& c : labels) c = class_from_code(ClassScheme::ThreeClass,
                                                   static_cast<int>(rng.index(3)));
        BivariateSeries s = labeled_series(labels);
        auto m = extract_instances(s, WindowSpec{l, h}, ClassScheme::ThreeClass);

        std::set<std::size_t> seen;
        for (const Instance& inst : m.rows) {
            // source ordinals: the window plus the target ordinal
            for (std::size_t i = inst.origin_idx; i < inst.origin_idx + l; ++i) {
                CHECK(seen.insert(i).second);
            }
            CHECK(seen.insert(inst.origin_idx + l + h - 1).second);
        }
    }
}

TEST_CASE("unlabeled sample inside a window is an error") {
    std::vector<RampClass> labels{kUp, kNo, kUnk, kNo, kNo};
    BivariateSeries s = labeled_series(labels);
    CHECK_THROWS_AS(extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass),
                    ValidationError);
}

TEST_CASE("too-short series is an error") {
    std::vector<RampClass> labels{kNo, kNo, kNo};
    BivariateSeries s = labeled_series(labels);
    CHECK_THROWS_AS(extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass),
                    ValidationError);
}

TEST_CASE("windows inside the first event are dropped") {
    // one long first event covering everything: no instance survives
    std::vector<RampClass> labels(12, kNo);
    BivariateSeries s = labeled_series(labels);
    auto m = extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass);
    CHECK(m.n_rows() == 0);

    // second event begins at ordinal 6: the second window (start 5) survives
    std::vector<RampClass> two(12, kNo);
    for (std::size_t i = 6; i < 12; ++i) two[i] = kUp;
    BivariateSeries s2 = labeled_series(two);
    auto m2 = extract_instances(s2, WindowSpec{4, 1}, ClassScheme::ThreeClass);
    REQUIRE(m2.n_rows() == 1);
    CHECK(m2.rows[0].origin_idx == 5);
}

TEST_CASE("last event feature resolves to the most recent finished event") {
    // ordinals: 0..3 down, 4..6 no, 7.. up (ongoing from window's view)
    std::vector<RampClass> labels{kDown, kDown, kDown, kDown, kNo, kNo, kNo,
                                  kUp, kUp, kUp, kUp, kUp};
    BivariateSeries s = labeled_series(labels);
    auto m = extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass);
    REQUIRE(m.n_rows() == 2);

    // window [0..3]: suffix run "down" x4, lookahead label(4)=no -> unmasked;
    // the down event ended at ordinal 3, so it is the last known event.
    CHECK(m.rows[0].labels == std::vector<RampClass>{kDown, kDown, kDown, kDown});
    CHECK(m.rows[0].feature_vector.last_event_code == 0.0);
    CHECK(m.rows[0].target == kNo);

    // window [5..8]: labels no,no,up,up; lookahead label(9)=up -> masked suffix;
    // the most recent event finished before the mask is the no-ramp run.
    CHECK(m.rows[1].labels == std::vector<RampClass>{kNo, kNo, kUnk, kUnk});
    CHECK(m.rows[1].feature_vector.last_event_code == 1.0);
    CHECK(m.rows[1].target == kUp);
}

TEST_CASE("fully masked window resolves last event across the window edge") {
    // 0..1 down, 2..9 no (ongoing well past the second window)
    std::vector<RampClass> labels{kDown, kDown, kNo, kNo, kNo, kNo, kNo, kNo, kNo, kNo, kNo};
    BivariateSeries s = labeled_series(labels);
    auto m = extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass);
    REQUIRE(m.n_rows() == 2);

    // window [5..8] is all "no" and continuing: fully masked; walking left
    // through the ongoing run reaches the down event ending at ordinal 1.
    CHECK(m.rows[1].labels == std::vector<RampClass>{kUnk, kUnk, kUnk, kUnk});
    CHECK(m.rows[1].feature_vector.last_event_code == 0.0);
}

TEST_CASE("flatten layout for l=2") {
    Instance inst;
    inst.powers = {1.0, 2.0};
    inst.labels = {kNo, kUnk};
    inst.feature_vector = features::extract_features(inst.powers, kNo,
                                                     ClassScheme::ThreeClass);
    auto row = flatten(inst, ClassScheme::ThreeClass);
    REQUIRE(row.size() == 2 * 2 + features::FeatureVector::kCount);
    CHECK(row[0] == 1.0);
    CHECK(row[1] == 2.0);
    CHECK(row[2] == 1.0);   // no_ramp code
    CHECK(row[3] == -1.0);  // Unknown sentinel
}

TEST_CASE("column count is 2l + m") {
    for (std::size_t l : {2u, 4u, 8u, 12u}) {
        auto names = make_column_names(l);
        CHECK(names.size() == 2 * l + features::FeatureVector::kCount);
    }
}

TEST_CASE("flatten distinguishes instances with different powers") {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t l = 2 + rng.index(6);
        Instance a, b;
        for (std::size_t i = 0; i < l; ++i) {
            a.powers.push_back(rng.uniform() * 100);
            b.powers.push_back(rng.uniform() * 100);
            a.labels.push_back(kNo);
            b.labels.push_back(kNo);
        }
        if (a.powers == b.powers) continue;
        a.feature_vector = features::extract_features(a.powers, kNo, ClassScheme::ThreeClass);
        b.feature_vector = features::extract_features(b.powers, kNo, ClassScheme::ThreeClass);
        CHECK(flatten(a, ClassScheme::ThreeClass) != flatten(b, ClassScheme::ThreeClass));
    }
}

TEST_CASE("targets are valid classes of the active scheme") {
    Rng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t T = 20 + rng.index(60);
        std::vector<RampClass> labels(T);
        for (auto& c : labels) c = class_from_code(ClassScheme::ThreeClass,
                                                   static_cast<int>(rng.index(3)));
        BivariateSeries s = labeled_series(labels);
        auto m = extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass);
        for (const Instance& inst : m.rows) {
            CHECK(inst.target != kUnk);
            CHECK(in_scheme(ClassScheme::ThreeClass, inst.target));
            // masked positions form a suffix run
            bool seen_mask = false;
            for (RampClass c : inst.labels) {
                if (c == kUnk) seen_mask = true;
                else CHECK(!seen_mask);
            }
        }
    }
}

TEST_CASE("five-class labels are rejected under the three-class scheme") {
    std::vector<RampClass> labels{RampClass::RampUp, kNo, kNo, kNo, kNo};
    BivariateSeries s = labeled_series(labels);
    CHECK_THROWS_AS(extract_instances(s, WindowSpec{4, 1}, ClassScheme::ThreeClass),
                    ValidationError);
}
