#pragma once

#include "rampcast/imbalance.hpp"

namespace rampcast::eval {

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

struct MetricsReport {
    double accuracy = 0.0;
    double balanced_accuracy = 0.0;
    double kappa = 0.0;
    double weighted_f1 = 0.0;
    std::vector<ClassMetrics> per_class;
    double train_seconds = 0.0;
    double predict_seconds = 0.0;
};

// Truth on rows, predictions on columns.
struct ConfusionMatrix {
    ClassScheme scheme = ClassScheme::ThreeClass;
    std::vector<std::vector<std::int64_t>> counts;

    std::vector<std::vector<double>> normalized() const {
        std::vector<std::vector<double>> out(counts.size(),
                                             std::vector<double>(counts.size(), 0.0));
        for (std::size_t r = 0; r < counts.size(); ++r) {
            std::int64_t sum = 0;
            for (std::int64_t v : counts[r]) sum += v;
            if (sum == 0) continue;
            for (std::size_t c = 0; c < counts.size(); ++c) {
                out[r][c] = static_cast<double>(counts[r][c]) / static_cast<double>(sum);
            }
        }
        return out;
    }

    std::int64_t trace() const {
        std::int64_t t = 0;
        for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
        return t;
    }

    std::int64_t total() const {
        std::int64_t t = 0;
        for (const auto& row : counts) {
            for (std::int64_t v : row) t += v;
        }
        return t;
    }
};

inline ConfusionMatrix confusion(std::span<const RampClass> truth,
                                 std::span<const RampClass> pred, ClassScheme scheme) {
    if (truth.size() != pred.size()) throw ValidationError("truth/prediction length mismatch");
    const std::size_t C = static_cast<std::size_t>(scheme_size(scheme));
    ConfusionMatrix m;
    m.scheme = scheme;
    m.counts.assign(C, std::vector<std::int64_t>(C, 0));
    for (std::size_t i = 0; i < truth.size(); ++i) {
        m.counts[static_cast<std::size_t>(class_code(scheme, truth[i]))]
                [static_cast<std::size_t>(class_code(scheme, pred[i]))] += 1;
    }
    return m;
}

// Multi-class metrics from one-vs-rest counts. Balanced accuracy averages
// recall over classes present in the truth vector; chance agreement for kappa
// is the product of truth and prediction marginals. A degenerate chance
// agreement of 1 (both marginals a point mass on one class) reports kappa 0.
inline MetricsReport compute_metrics(std::span<const RampClass> truth,
                                     std::span<const RampClass> pred, ClassScheme scheme) {
    if (truth.empty()) throw ValidationError("cannot compute metrics on empty input");
    if (truth.size() != pred.size()) throw ValidationError("truth/prediction length mismatch");

    const std::size_t C = static_cast<std::size_t>(scheme_size(scheme));
    const double n = static_cast<double>(truth.size());
    std::vector<double> tp(C, 0.0), fp(C, 0.0), fn(C, 0.0), support(C, 0.0), predicted(C, 0.0);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        auto t = static_cast<std::size_t>(class_code(scheme, truth[i]));
        auto p = static_cast<std::size_t>(class_code(scheme, pred[i]));
        support[t] += 1.0;
        predicted[p] += 1.0;
        if (t == p) {
            tp[t] += 1.0;
        } else {
            fn[t] += 1.0;
            fp[p] += 1.0;
        }
    }

    MetricsReport report;
    report.per_class.resize(C);
    double correct = 0.0, recall_sum = 0.0, chance = 0.0, wf1 = 0.0;
    int present = 0;
    for (std::size_t c = 0; c < C; ++c) {
        ClassMetrics& pc = report.per_class[c];
        pc.support = static_cast<std::size_t>(support[c]);
        pc.precision = (tp[c] + fp[c]) > 0.0 ? tp[c] / (tp[c] + fp[c]) : 0.0;
        pc.recall = support[c] > 0.0 ? tp[c] / support[c] : 0.0;
        pc.f1 = (pc.precision + pc.recall) > 0.0
                    ? 2.0 * pc.precision * pc.recall / (pc.precision + pc.recall)
                    : 0.0;
        correct += tp[c];
        chance += (support[c] / n) * (predicted[c] / n);
        if (support[c] > 0.0) {
            recall_sum += pc.recall;
            ++present;
            wf1 += (support[c] / n) * pc.f1;
        }
    }
    report.accuracy = correct / n;
    report.balanced_accuracy = recall_sum / static_cast<double>(present);
    report.kappa = std::abs(1.0 - chance) < 1e-12 ? 0.0
                                                  : (report.accuracy - chance) / (1.0 - chance);
    report.weighted_f1 = wf1;
    return report;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> rows_by_class(
    const preprocess::InstanceMatrix& matrix) {
    std::vector<std::vector<std::size_t>> groups(
        static_cast<std::size_t>(scheme_size(matrix.scheme)));
    for (std::size_t i = 0; i < matrix.n_rows(); ++i) {
        groups[static_cast<std::size_t>(matrix.target_code(i))].push_back(i);
    }
    return groups;
}

}  // namespace detail

// Stratified random hold-out. Per-class train counts follow the largest
// remainder of train_frac * n_c, so every class lands within one row of its
// exact proportion; every class needs at least 2 rows.
inline std::pair<preprocess::InstanceMatrix, preprocess::InstanceMatrix> holdout_split(
    const preprocess::InstanceMatrix& matrix, double train_frac, std::uint64_t seed) {
    if (matrix.n_rows() < 5) throw ValidationError("need at least 5 rows to split");
    if (!(train_frac > 0.0 && train_frac < 1.0)) {
        throw ValidationError("train fraction must be in (0, 1)");
    }

    auto groups = detail::rows_by_class(matrix);
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (!groups[c].empty() && groups[c].size() < 2) {
            throw ValidationError("class " +
                                  std::string(label_name(class_from_code(
                                      matrix.scheme, static_cast<int>(c)))) +
                                  " has fewer than 2 rows");
        }
    }

    const auto total_train =
        static_cast<std::size_t>(std::llround(train_frac * static_cast<double>(matrix.n_rows())));
    std::vector<std::size_t> take(groups.size(), 0);
    std::vector<std::pair<double, std::size_t>> remainders;
    std::size_t allocated = 0;
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (groups[c].empty()) continue;
        double ideal = train_frac * static_cast<double>(groups[c].size());
        take[c] = static_cast<std::size_t>(ideal);
        allocated += take[c];
        remainders.push_back({ideal - static_cast<double>(take[c]), c});
    }
    std::sort(remainders.begin(), remainders.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    for (const auto& [rem, c] : remainders) {
        if (allocated >= total_train) break;
        (void)rem;
        ++take[c];
        ++allocated;
    }
    // both sides keep at least one row per class
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (groups[c].empty()) continue;
        take[c] = std::clamp<std::size_t>(take[c], 1, groups[c].size() - 1);
    }

    std::vector<std::size_t> train_idx, test_idx;
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (groups[c].empty()) continue;
        auto rows = groups[c];
        Rng rng(derive_seed(seed, "holdout-class", c));
        shuffle(rows, rng);
        train_idx.insert(train_idx.end(), rows.begin(), rows.begin() + take[c]);
        test_idx.insert(test_idx.end(), rows.begin() + take[c], rows.end());
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
    return {matrix.subset(train_idx), matrix.subset(test_idx)};
}

// Chronological alternative to the stratified split: the earliest rows by
// origin ordinal train, the rest test. No per-class guarantees.
inline std::pair<preprocess::InstanceMatrix, preprocess::InstanceMatrix>
chronological_split(const preprocess::InstanceMatrix& matrix, double train_frac) {
    if (matrix.n_rows() < 5) throw ValidationError("need at least 5 rows to split");
    if (!(train_frac > 0.0 && train_frac < 1.0)) {
        throw ValidationError("train fraction must be in (0, 1)");
    }
    std::vector<std::size_t> order(matrix.n_rows());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return matrix.rows[a].origin_idx < matrix.rows[b].origin_idx;
    });
    auto cut = static_cast<std::size_t>(
        std::llround(train_frac * static_cast<double>(matrix.n_rows())));
    cut = std::clamp<std::size_t>(cut, 1, matrix.n_rows() - 1);
    std::vector<std::size_t> train_idx(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(cut));
    std::vector<std::size_t> test_idx(order.begin() + static_cast<std::ptrdiff_t>(cut), order.end());
    return {matrix.subset(train_idx), matrix.subset(test_idx)};
}

struct FoldIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> validation;
};

// Stratified k folds: per-class shuffled rows dealt round-robin, so per-fold
// class counts stay within one of n_c / k.
inline std::vector<FoldIndices> stratified_kfold(const preprocess::InstanceMatrix& matrix, int k,
                                                 std::uint64_t seed) {
    if (k < 2) throw ValidationError("k must be at least 2");
    auto groups = detail::rows_by_class(matrix);
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (!groups[c].empty() && groups[c].size() < static_cast<std::size_t>(k)) {
            throw ValidationError("class " +
                                  std::string(label_name(class_from_code(
                                      matrix.scheme, static_cast<int>(c)))) +
                                  " has fewer rows than folds");
        }
    }

    // Each class deals its shuffled rows cyclically; the dealing offset
    // rotates by the class remainder so the leftover rows spread across
    // different folds and total fold sizes stay within one of each other.
    std::vector<std::vector<std::size_t>> folds(static_cast<std::size_t>(k));
    std::size_t offset = 0;
    for (std::size_t c = 0; c < groups.size(); ++c) {
        if (groups[c].empty()) continue;
        auto rows = groups[c];
        Rng rng(derive_seed(seed, "kfold-class", c));
        shuffle(rows, rng);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            folds[(offset + i) % static_cast<std::size_t>(k)].push_back(rows[i]);
        }
        offset = (offset + rows.size()) % static_cast<std::size_t>(k);
    }

    std::vector<FoldIndices> out(static_cast<std::size_t>(k));
    for (std::size_t f = 0; f < folds.size(); ++f) {
        std::sort(folds[f].begin(), folds[f].end());
        out[f].validation = folds[f];
        for (std::size_t g = 0; g < folds.size(); ++g) {
            if (g == f) continue;
            out[f].train.insert(out[f].train.end(), folds[g].begin(), folds[g].end());
        }
        std::sort(out[f].train.begin(), out[f].train.end());
    }
    return out;
}

inline std::vector<RampClass> predict_matrix(const imbalance::EnsembleModel& model,
                                             const preprocess::InstanceMatrix& matrix) {
    std::vector<RampClass> preds;
    preds.reserve(matrix.n_rows());
    for (std::size_t i = 0; i < matrix.n_rows(); ++i) {
        preds.push_back(imbalance::predict_easy(model, matrix.flat_row(i)).first);
    }
    return preds;
}

// Shannon entropy of the target distribution as a percentage of log C.
inline double class_entropy_percent(const preprocess::InstanceMatrix& matrix) {
    if (matrix.rows.empty()) throw ValidationError("empty instance matrix");
    const std::size_t C = static_cast<std::size_t>(scheme_size(matrix.scheme));
    std::vector<double> counts(C, 0.0);
    for (std::size_t i = 0; i < matrix.n_rows(); ++i) {
        counts[static_cast<std::size_t>(matrix.target_code(i))] += 1.0;
    }
    double h = 0.0;
    for (double c : counts) {
        if (c > 0.0) {
            double p = c / static_cast<double>(matrix.n_rows());
            h -= p * std::log(p);
        }
    }
    return 100.0 * h / std::log(static_cast<double>(C));
}

// Hyperparameter domains for the random search.
struct SearchSpace {
    int max_depth_min = 1;
    int max_depth_max = 10;
    int estimators_min = 1;    // sampled value becomes the subset count L
    int estimators_max = 200;
    std::vector<learners::Criterion> criteria = {learners::Criterion::LogLoss,
                                                 learners::Criterion::Gini,
                                                 learners::Criterion::Entropy};
    double learning_rate_min = 1.0;
    double learning_rate_max = 5.0;
    int iterations = 75;

    void validate() const {
        if (iterations < 1) throw ValidationError("need at least one search iteration");
        if (max_depth_min < 1 || max_depth_min > max_depth_max) {
            throw ValidationError("bad max_depth domain");
        }
        if (estimators_min < 1 || estimators_min > estimators_max) {
            throw ValidationError("bad estimators domain");
        }
        if (criteria.empty()) throw ValidationError("criterion domain is empty");
        if (!(learning_rate_min > 0.0) || learning_rate_min > learning_rate_max) {
            throw ValidationError("bad learning rate domain");
        }
    }
};

struct Trial {
    imbalance::EasyConfig config;
    double mean_weighted_f1 = 0.0;
};

struct SearchResult {
    imbalance::EasyConfig best_config;
    double best_score = 0.0;
    std::vector<Trial> trials;
};

// Seeded uniform random search: candidates are sampled up front, each scored
// by mean weighted F1 over shared stratified folds. Ties keep the earliest
// trial.
inline SearchResult random_search(const preprocess::InstanceMatrix& matrix,
                                  const SearchSpace& space,
                                  const imbalance::EasyConfig& cfg_template, std::uint64_t seed,
                                  int k = 5, int jobs = 1) {
    space.validate();
    auto folds = stratified_kfold(matrix, k, derive_seed(seed, "search-folds"));

    std::vector<std::pair<preprocess::InstanceMatrix, preprocess::InstanceMatrix>> fold_data;
    fold_data.reserve(folds.size());
    for (const auto& fold : folds) {
        fold_data.emplace_back(matrix.subset(fold.train), matrix.subset(fold.validation));
    }

    Rng rng(derive_seed(seed, "search-params"));
    std::vector<imbalance::EasyConfig> candidates;
    candidates.reserve(static_cast<std::size_t>(space.iterations));
    for (int t = 0; t < space.iterations; ++t) {
        imbalance::EasyConfig cfg = cfg_template;
        cfg.tree.max_depth = rng.uniform_int(space.max_depth_min, space.max_depth_max);
        cfg.num_subsets = rng.uniform_int(space.estimators_min, space.estimators_max);
        cfg.tree.criterion = space.criteria[rng.index(space.criteria.size())];
        cfg.tree.min_samples_split = 1.0 - rng.uniform();  // (0, 1]
        cfg.tree.min_samples_leaf = std::clamp(rng.uniform(), 1e-9, 1.0 - 1e-9);
        cfg.learning_rate = rng.uniform_real(space.learning_rate_min, space.learning_rate_max);
        cfg.seed = derive_seed(seed, "search-trial", static_cast<std::uint64_t>(t));
        candidates.push_back(cfg);
    }

    SearchResult result;
    result.trials.reserve(candidates.size());
    for (std::size_t t = 0; t < candidates.size(); ++t) {
        double sum = 0.0;
        for (const auto& [train, val] : fold_data) {
            imbalance::EnsembleModel model = imbalance::fit_easy_ensemble(train, candidates[t],
                                                                          jobs);
            std::vector<RampClass> truth;
            truth.reserve(val.n_rows());
            for (const auto& row : val.rows) truth.push_back(row.target);
            std::vector<RampClass> pred = predict_matrix(model, val);
            sum += compute_metrics(truth, pred, matrix.scheme).weighted_f1;
        }
        Trial trial{candidates[t], sum / static_cast<double>(fold_data.size())};
        if (result.trials.empty() || trial.mean_weighted_f1 > result.best_score) {
            result.best_score = trial.mean_weighted_f1;
            result.best_config = trial.config;
        }
        result.trials.push_back(std::move(trial));
    }
    return result;
}

}  // namespace rampcast::eval
