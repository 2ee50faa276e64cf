#pragma once

#include <atomic>
#include <mutex>
#include <thread>

#include "rampcast/learners.hpp"
#include "rampcast/preprocess.hpp"

namespace rampcast::imbalance {

// Meta-learner configuration: L balanced majority undersamples, each boosted
// into S weak trees.
struct EasyConfig {
    int num_subsets = 50;      // L
    int weak_learners = 10;    // S
    learners::TreeConfig tree;
    double learning_rate = 1.0;
    std::uint64_t seed = 0;

    void validate() const {
        if (num_subsets < 1) throw ValidationError("need at least one subset");
        if (weak_learners < 1) throw ValidationError("need at least one weak learner");
        if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be positive");
        tree.validate();
    }
};

struct MemberStats {
    std::size_t majority_rows = 0;
    std::size_t minority_rows = 0;
};

// The trained model: all members plus the metadata needed to build and check
// prediction rows. majority_draws records each member's sampled majority row
// indices for diagnostics; it is reproducible from the seed and not persisted.
struct EnsembleModel {
    std::vector<learners::BoostedEnsemble> members;
    ClassScheme scheme = ClassScheme::ThreeClass;
    std::size_t lag = 4;
    std::size_t horizon = 1;
    std::vector<std::string> column_names;
    RampClass majority_class = RampClass::NoRamp;
    EasyConfig config;
    std::vector<MemberStats> member_stats;
    std::vector<std::vector<std::uint32_t>> majority_draws;

    int num_classes() const { return scheme_size(scheme); }
};

inline RampClass majority_class_of(const preprocess::InstanceMatrix& matrix) {
    if (matrix.rows.empty()) throw ValidationError("empty instance matrix");
    std::vector<std::size_t> counts(static_cast<std::size_t>(scheme_size(matrix.scheme)), 0);
    for (const auto& row : matrix.rows) {
        counts[static_cast<std::size_t>(class_code(matrix.scheme, row.target))]++;
    }
    std::size_t best = 0;
    for (std::size_t c = 1; c < counts.size(); ++c) {
        if (counts[c] > counts[best]) best = c;
    }
    return class_from_code(matrix.scheme, static_cast<int>(best));
}

namespace detail {

// Draws k distinct values from pool (partial Fisher-Yates), preserving
// determinism across platforms.
inline std::vector<std::uint32_t> sample_without_replacement(std::vector<std::uint32_t> pool,
                                                             std::size_t k, Rng& rng) {
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t j = i + rng.index(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

struct NumericView {
    learners::Matrix x;
    std::vector<int> y;
};

inline NumericView to_numeric(const preprocess::InstanceMatrix& matrix) {
    NumericView v;
    std::vector<std::vector<double>> rows;
    rows.reserve(matrix.n_rows());
    v.y.reserve(matrix.n_rows());
    for (std::size_t i = 0; i < matrix.n_rows(); ++i) {
        rows.push_back(matrix.flat_row(i));
        v.y.push_back(matrix.target_code(i));
    }
    v.x = learners::Matrix::from_rows(rows);
    return v;
}

// Runs fn(i) for i in [0, count) across `jobs` threads. Work items are
// independent and indexed, so the result does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> threads;
    int n_threads = std::min<int>(jobs, static_cast<int>(count));
    threads.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace detail

// Trains L boosted ensembles, each on all non-majority rows plus a fresh
// majority undersample of matching size, and pools every weak learner.
// Per-member seeds derive from the master seed by index, so training is
// bit-identical regardless of the job count.
inline EnsembleModel fit_easy_ensemble(const preprocess::InstanceMatrix& matrix,
                                       const EasyConfig& cfg, int jobs = 1) {
    cfg.validate();
    if (matrix.rows.empty()) throw ValidationError("empty instance matrix");

    detail::NumericView data = detail::to_numeric(matrix);
    const int C = scheme_size(matrix.scheme);
    const RampClass majority = majority_class_of(matrix);
    const int majority_code = class_code(matrix.scheme, majority);

    std::vector<std::uint32_t> majority_rows, minority_rows;
    for (std::size_t i = 0; i < data.y.size(); ++i) {
        if (data.y[i] == majority_code) {
            majority_rows.push_back(static_cast<std::uint32_t>(i));
        } else {
            minority_rows.push_back(static_cast<std::uint32_t>(i));
        }
    }
    if (minority_rows.empty()) {
        throw ValidationError("all rows share one class; nothing to balance");
    }

    const std::size_t subset_size = std::min(majority_rows.size(), minority_rows.size());
    const std::size_t L = static_cast<std::size_t>(cfg.num_subsets);

    EnsembleModel model;
    model.scheme = matrix.scheme;
    model.lag = matrix.lag;
    model.horizon = matrix.horizon;
    model.column_names = matrix.column_names;
    model.majority_class = majority;
    model.config = cfg;
    model.members.resize(L);
    model.member_stats.resize(L);
    model.majority_draws.resize(L);

    const std::vector<std::uint32_t> parent_order = learners::detail::sorted_orders(data.x);

    detail::parallel_for(L, jobs, [&](std::size_t i) {
        Rng rng(derive_seed(cfg.seed, "easy-subset", i));
        std::vector<std::uint32_t> draw =
            detail::sample_without_replacement(majority_rows, subset_size, rng);

        std::vector<std::uint32_t> subset = minority_rows;
        subset.insert(subset.end(), draw.begin(), draw.end());
        std::sort(subset.begin(), subset.end());

        std::vector<std::int32_t> parent_to_local(data.x.n_rows, -1);
        for (std::size_t k = 0; k < subset.size(); ++k) {
            parent_to_local[subset[k]] = static_cast<std::int32_t>(k);
        }

        learners::Matrix member_x = data.x.gather_rows(subset);
        std::vector<int> member_y(subset.size());
        for (std::size_t k = 0; k < subset.size(); ++k) member_y[k] = data.y[subset[k]];

        std::vector<std::uint32_t> member_order = learners::detail::filter_orders(
            parent_order, data.x.n_cols, data.x.n_rows, subset.size(), parent_to_local);

        learners::TreeConfig tree_cfg = cfg.tree;
        tree_cfg.seed = derive_seed(cfg.seed, "easy-tree", i);

        learners::detail::TreeBuilder builder(std::move(member_x), std::move(member_y), C,
                                              std::move(member_order));
        model.members[i] =
            learners::detail::boost_trees(builder, tree_cfg, cfg.weak_learners,
                                          cfg.learning_rate);
        model.member_stats[i] = {draw.size(), minority_rows.size()};
        model.majority_draws[i] = std::move(draw);
    });
    return model;
}

// Pooled vote over all L x S weak learners; ties resolve to the lowest code.
inline std::pair<RampClass, std::vector<double>> predict_easy(const EnsembleModel& model,
                                                              std::span<const double> row) {
    if (row.size() != model.column_names.size()) {
        throw ValidationError("row has " + std::to_string(row.size()) + " columns, model expects " +
                              std::to_string(model.column_names.size()));
    }
    std::vector<double> scores(static_cast<std::size_t>(model.num_classes()), 0.0);
    for (const auto& member : model.members) {
        for (std::size_t j = 0; j < member.trees.size(); ++j) {
            scores[static_cast<std::size_t>(member.trees[j].predict_class(row))] +=
                member.alphas[j];
        }
    }
    RampClass cls = class_from_code(model.scheme, static_cast<int>(argmax_lowest(scores)));
    return {cls, std::move(scores)};
}

inline std::pair<RampClass, std::vector<double>> predict_easy(const EnsembleModel& model,
                                                              const preprocess::Instance& inst) {
    return predict_easy(model, preprocess::flatten(inst, model.scheme));
}

enum class BaselineMode { Sample, Argmax };

// Event-to-event transition table P(next | current) with a seeded sampler.
struct TransitionBaseline {
    ClassScheme scheme = ClassScheme::ThreeClass;
    std::vector<std::vector<double>> matrix;
    Rng rng{0};
};

inline TransitionBaseline fit_transition_pairs(
    std::span<const std::pair<RampClass, RampClass>> pairs, ClassScheme scheme,
    std::uint64_t seed) {
    const std::size_t C = static_cast<std::size_t>(scheme_size(scheme));
    std::vector<std::vector<double>> counts(C, std::vector<double>(C, 0.0));
    for (const auto& [from, to] : pairs) {
        counts[static_cast<std::size_t>(class_code(scheme, from))]
              [static_cast<std::size_t>(class_code(scheme, to))] += 1.0;
    }
    for (auto& row : counts) {
        double sum = 0.0;
        for (double v : row) sum += v;
        if (sum > 0.0) {
            for (double& v : row) v /= sum;
        } else {
            for (double& v : row) v = 1.0 / static_cast<double>(C);  // unseen: uniform
        }
    }
    TransitionBaseline b;
    b.scheme = scheme;
    b.matrix = std::move(counts);
    b.rng = Rng(derive_seed(seed, "baseline-sampler"));
    return b;
}

// Row-normalized bigram counts over consecutive event types.
inline TransitionBaseline fit_transition_baseline(std::span<const RampClass> events,
                                                  ClassScheme scheme, std::uint64_t seed) {
    if (events.size() < 2) throw ValidationError("need at least two events");
    std::vector<std::pair<RampClass, RampClass>> pairs;
    pairs.reserve(events.size() - 1);
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        pairs.emplace_back(events[i], events[i + 1]);
    }
    return fit_transition_pairs(pairs, scheme, seed);
}

// (last known event -> target) pairs of an instance matrix; these are the
// consecutive-event transitions the naive baseline conditions on.
inline std::vector<std::pair<RampClass, RampClass>> transition_pairs(
    const preprocess::InstanceMatrix& matrix) {
    std::vector<std::pair<RampClass, RampClass>> pairs;
    pairs.reserve(matrix.n_rows());
    for (const auto& inst : matrix.rows) {
        int code = static_cast<int>(inst.feature_vector.last_event_code);
        if (code < 0) continue;
        pairs.emplace_back(class_from_code(matrix.scheme, code), inst.target);
    }
    return pairs;
}

inline RampClass predict_baseline(TransitionBaseline& baseline, RampClass current,
                                  BaselineMode mode) {
    if (current == RampClass::Unknown) {
        throw ValidationError("baseline cannot condition on an unknown event");
    }
    const auto& row =
        baseline.matrix[static_cast<std::size_t>(class_code(baseline.scheme, current))];
    if (mode == BaselineMode::Argmax) {
        return class_from_code(baseline.scheme, static_cast<int>(argmax_lowest(row)));
    }
    double u = baseline.rng.uniform();
    double cum = 0.0;
    for (std::size_t c = 0; c < row.size(); ++c) {
        cum += row[c];
        if (u < cum) return class_from_code(baseline.scheme, static_cast<int>(c));
    }
    return class_from_code(baseline.scheme, static_cast<int>(row.size()) - 1);
}

}  // namespace rampcast::imbalance
