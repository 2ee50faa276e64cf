#pragma once

#include <algorithm>
#include <cstring>
#include <numeric>
#include <optional>

#include "rampcast/common.hpp"

namespace rampcast::learners {

enum class Criterion { Gini, Entropy, LogLoss };

inline std::string_view criterion_name(Criterion c) {
    switch (c) {
        case Criterion::Gini: return "gini";
        case Criterion::Entropy: return "entropy";
        case Criterion::LogLoss: return "log_loss";
    }
    return "gini";
}

inline std::optional<Criterion> criterion_from_name(std::string_view name) {
    if (name == "gini") return Criterion::Gini;
    if (name == "entropy") return Criterion::Entropy;
    if (name == "log_loss") return Criterion::LogLoss;
    return std::nullopt;
}

// Weak-learner configuration. The min-sample parameters are fractions of the
// rows handed to the fit.
struct TreeConfig {
    int max_depth = 7;
    Criterion criterion = Criterion::Entropy;
    double min_samples_split = 0.159;  // (0, 1]
    double min_samples_leaf = 0.03;    // (0, 1)
    std::uint64_t seed = 0;

    void validate() const {
        if (max_depth < 1) throw ValidationError("max_depth must be >= 1");
        if (!(min_samples_split > 0.0 && min_samples_split <= 1.0)) {
            throw ValidationError("min_samples_split must be in (0, 1]");
        }
        if (!(min_samples_leaf > 0.0 && min_samples_leaf < 1.0)) {
            throw ValidationError("min_samples_leaf must be in (0, 1)");
        }
    }
};

// Column-major numeric matrix.
struct Matrix {
    std::size_t n_rows = 0;
    std::size_t n_cols = 0;
    std::vector<double> cells;  // column-major: cells[c * n_rows + r]

    static Matrix from_rows(const std::vector<std::vector<double>>& rows) {
        Matrix m;
        m.n_rows = rows.size();
        m.n_cols = rows.empty() ? 0 : rows.front().size();
        m.cells.resize(m.n_rows * m.n_cols);
        for (std::size_t r = 0; r < m.n_rows; ++r) {
            if (rows[r].size() != m.n_cols) {
                throw ValidationError("ragged rows in matrix");
            }
            for (std::size_t c = 0; c < m.n_cols; ++c) {
                m.cells[c * m.n_rows + r] = rows[r][c];
            }
        }
        return m;
    }

    double at(std::size_t r, std::size_t c) const { return cells[c * n_rows + r]; }
    const double* col(std::size_t c) const { return cells.data() + c * n_rows; }

    Matrix gather_rows(std::span<const std::uint32_t> rows) const {
        Matrix m;
        m.n_rows = rows.size();
        m.n_cols = n_cols;
        m.cells.resize(m.n_rows * m.n_cols);
        for (std::size_t c = 0; c < n_cols; ++c) {
            const double* src = col(c);
            double* dst = m.cells.data() + c * m.n_rows;
            for (std::size_t i = 0; i < rows.size(); ++i) dst[i] = src[rows[i]];
        }
        return m;
    }
};

// Binary decision tree stored as parallel node arrays; feature -1 marks a
// leaf. Rows go left when row[feature] <= threshold.
struct DecisionTree {
    std::vector<std::int32_t> feature;
    std::vector<double> threshold;
    std::vector<std::int32_t> left;
    std::vector<std::int32_t> right;
    std::vector<std::int32_t> n_samples;
    std::vector<std::vector<double>> probs;  // leaf class distributions
    std::vector<double> importances;         // per column, sums to 1 unless no splits
    int num_classes = 0;

    std::size_t node_count() const { return feature.size(); }
    bool is_leaf(std::size_t id) const { return feature[id] < 0; }

    std::size_t leaf_for(std::span<const double> row) const {
        std::size_t id = 0;
        while (!is_leaf(id)) {
            id = row[static_cast<std::size_t>(feature[id])] <= threshold[id]
                     ? static_cast<std::size_t>(left[id])
                     : static_cast<std::size_t>(right[id]);
        }
        return id;
    }

    int predict_class(std::span<const double> row) const {
        const auto& p = probs[leaf_for(row)];
        return static_cast<int>(argmax_lowest(p));
    }

    int max_depth() const {
        int deepest = 0;
        walk(0, 0, deepest);
        return deepest;
    }

    std::size_t min_leaf_samples() const {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t id = 0; id < node_count(); ++id) {
            if (is_leaf(id)) best = std::min(best, static_cast<std::size_t>(n_samples[id]));
        }
        return best;
    }

    std::size_t min_internal_samples() const {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t id = 0; id < node_count(); ++id) {
            if (!is_leaf(id)) best = std::min(best, static_cast<std::size_t>(n_samples[id]));
        }
        return best;
    }

private:
    void walk(std::size_t id, int depth, int& deepest) const {
        deepest = std::max(deepest, depth);
        if (is_leaf(id)) return;
        walk(static_cast<std::size_t>(left[id]), depth + 1, deepest);
        walk(static_cast<std::size_t>(right[id]), depth + 1, deepest);
    }
};

namespace detail {

inline constexpr int kMaxClasses = 8;
inline constexpr double kMinGain = 1e-12;

inline double impurity(const double* wc, double wsum, int C, Criterion crit) {
    if (wsum <= 0.0) return 0.0;
    switch (crit) {
        case Criterion::Gini: {
            double s = 0.0;
            for (int c = 0; c < C; ++c) {
                double p = wc[c] / wsum;
                s += p * p;
            }
            return 1.0 - s;
        }
        case Criterion::Entropy:
        case Criterion::LogLoss: {
            // log_loss is the natural-log rendering of the same impurity; it
            // is treated as an alias so both criteria choose identical splits
            double h = 0.0;
            for (int c = 0; c < C; ++c) {
                if (wc[c] > 0.0) {
                    double p = wc[c] / wsum;
                    h -= p * std::log2(p);
                }
            }
            return h;
        }
    }
    return 0.0;
}

// Per-feature row orders sorted by value (ties by row id), feature-major.
inline std::vector<std::uint32_t> sorted_orders(const Matrix& x) {
    std::vector<std::uint32_t> order(x.n_cols * x.n_rows);
    for (std::size_t f = 0; f < x.n_cols; ++f) {
        std::uint32_t* ids = order.data() + f * x.n_rows;
        std::iota(ids, ids + x.n_rows, 0u);
        const double* col = x.col(f);
        std::sort(ids, ids + x.n_rows, [col](std::uint32_t a, std::uint32_t b) {
            if (col[a] != col[b]) return col[a] < col[b];
            return a < b;
        });
    }
    return order;
}

// Projects a parent's sorted orders onto a row subset, remapping ids to the
// subset's local numbering. parent_to_local[r] is -1 for excluded rows.
inline std::vector<std::uint32_t> filter_orders(const std::vector<std::uint32_t>& parent_order,
                                                std::size_t n_cols, std::size_t parent_rows,
                                                std::size_t subset_size,
                                                std::span<const std::int32_t> parent_to_local) {
    std::vector<std::uint32_t> out(n_cols * subset_size);
    for (std::size_t f = 0; f < n_cols; ++f) {
        const std::uint32_t* src = parent_order.data() + f * parent_rows;
        std::uint32_t* dst = out.data() + f * subset_size;
        std::size_t k = 0;
        for (std::size_t i = 0; i < parent_rows; ++i) {
            std::int32_t local = parent_to_local[src[i]];
            if (local >= 0) dst[k++] = static_cast<std::uint32_t>(local);
        }
    }
    return out;
}

// Greedy CART builder over presorted per-feature row orders. The orders are
// partitioned in place down the tree, so every node scans its rows in sorted
// order without re-sorting. One builder serves many fits on the same rows
// (boosting rounds differ only in weights).
class TreeBuilder {
public:
    TreeBuilder(Matrix x, std::vector<int> y, int num_classes)
        : x_(std::move(x)), y_(std::move(y)), C_(num_classes) {
        check();
        base_order_ = sorted_orders(x_);
    }

    TreeBuilder(Matrix x, std::vector<int> y, int num_classes,
                std::vector<std::uint32_t> precomputed_order)
        : x_(std::move(x)), y_(std::move(y)), C_(num_classes),
          base_order_(std::move(precomputed_order)) {
        check();
    }

    const std::vector<int>& targets() const { return y_; }
    int num_classes() const { return C_; }
    std::size_t n_rows() const { return x_.n_rows; }

    DecisionTree build(std::span<const double> weights, const TreeConfig& cfg,
                       std::vector<int>* train_predictions = nullptr) {
        cfg.validate();
        const std::size_t n = x_.n_rows;
        if (weights.size() != n) throw ValidationError("weight count != row count");
        double wtot = 0.0;
        for (double w : weights) {
            if (w < 0.0) throw ValidationError("negative sample weight");
            wtot += w;
        }
        if (wtot <= 0.0) throw ValidationError("sample weights are all zero");

        w_ = weights;
        cfg_ = &cfg;
        mss_count_ = std::max<std::size_t>(
            2, static_cast<std::size_t>(std::ceil(cfg.min_samples_split * n)));
        msl_count_ = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(cfg.min_samples_leaf * n)));

        work_ = base_order_;
        scratch_.resize(n);
        goes_left_.resize(n);

        tree_ = DecisionTree{};
        tree_.num_classes = C_;
        tree_.importances.assign(x_.n_cols, 0.0);
        train_pred_ = train_predictions;
        if (train_pred_) train_pred_->assign(n, 0);

        build_node(0, n, 0);

        double total = 0.0;
        for (double v : tree_.importances) total += v;
        if (total > 0.0) {
            for (double& v : tree_.importances) v /= total;
        }
        return std::move(tree_);
    }

private:
    void check() const {
        if (x_.n_rows == 0) throw ValidationError("cannot fit a tree on zero rows");
        if (y_.size() != x_.n_rows) throw ValidationError("target count != row count");
        if (C_ < 2 || C_ > kMaxClasses) throw ValidationError("unsupported class count");
        for (int c : y_) {
            if (c < 0 || c >= C_) throw ValidationError("target code out of range");
        }
    }

    std::uint32_t* order_of(std::size_t f) { return work_.data() + f * x_.n_rows; }

    std::int32_t build_node(std::size_t lo, std::size_t hi, int depth) {
        const std::size_t n_node = hi - lo;
        double wc[kMaxClasses] = {0};
        double wsum = 0.0;
        {
            const std::uint32_t* ids = order_of(0) + lo;
            for (std::size_t i = 0; i < n_node; ++i) {
                std::uint32_t r = ids[i];
                wc[y_[r]] += w_[r];
                wsum += w_[r];
            }
        }
        const double node_impurity = impurity(wc, wsum, C_, cfg_->criterion);

        std::int32_t id = static_cast<std::int32_t>(tree_.feature.size());
        tree_.feature.push_back(-1);
        tree_.threshold.push_back(0.0);
        tree_.left.push_back(-1);
        tree_.right.push_back(-1);
        tree_.n_samples.push_back(static_cast<std::int32_t>(n_node));
        tree_.probs.emplace_back();

        bool splittable = depth < cfg_->max_depth && n_node >= mss_count_ &&
                          n_node >= 2 * msl_count_ && node_impurity > 0.0;

        std::int32_t best_f = -1;
        double best_thr = 0.0;
        double best_gain = kMinGain;
        std::size_t best_left = 0;
        if (splittable) {
            const double parent_cost = wsum * node_impurity;
            for (std::size_t f = 0; f < x_.n_cols; ++f) {
                const double* col = x_.col(f);
                const std::uint32_t* ids = order_of(f) + lo;

                double lw[kMaxClasses] = {0};
                double lsum = 0.0;

                auto evaluate = [&](double thr, const double* left_w, double left_sum,
                                    std::size_t lcount) {
                    double rw[kMaxClasses];
                    for (int c = 0; c < C_; ++c) rw[c] = wc[c] - left_w[c];
                    double rsum = wsum - left_sum;
                    double gain = parent_cost -
                                  left_sum * impurity(left_w, left_sum, C_, cfg_->criterion) -
                                  rsum * impurity(rw, rsum, C_, cfg_->criterion);
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_f = static_cast<std::int32_t>(f);
                        best_thr = thr;
                        best_left = lcount;
                    }
                };

                if (cfg_->criterion == Criterion::Gini) {
                    // gini evaluations are cheap; scan every value boundary
                    for (std::size_t i = 0; i + 1 < n_node; ++i) {
                        std::uint32_t r = ids[i];
                        lw[y_[r]] += w_[r];
                        lsum += w_[r];
                        double v = col[r];
                        double vn = col[ids[i + 1]];
                        if (v == vn) continue;
                        std::size_t lcount = i + 1;
                        if (lcount < msl_count_ || n_node - lcount < msl_count_) continue;
                        double thr = v + 0.5 * (vn - v);
                        if (!(thr > v) || !(thr < vn)) thr = v;
                        evaluate(thr, lw, lsum, lcount);
                    }
                    continue;
                }

                // Entropy-family evaluations pay for logs, so exploit that the
                // weighted child impurity is concave along a run of pure
                // same-class value groups: cuts strictly inside such a run are
                // dominated by the run's endpoint cuts. Each boundary is held
                // pending until the purity of the group after it is known; the
                // first and last admissible cuts are always evaluated since
                // min-leaf clipping can land inside a run.
                bool has_pending = false;
                bool forced_first = true;
                double p_thr = 0.0, p_lsum = 0.0;
                double p_lw[kMaxClasses] = {0};
                std::size_t p_lcount = 0;
                bool p_prev_pure = true;
                int p_prev_class = -1;

                int group_class = y_[ids[0]];
                bool group_pure = true;
                for (std::size_t i = 0; i + 1 < n_node; ++i) {
                    std::uint32_t r = ids[i];
                    std::uint32_t rn = ids[i + 1];
                    lw[y_[r]] += w_[r];
                    lsum += w_[r];
                    double v = col[r];
                    double vn = col[rn];
                    if (v == vn) {
                        if (y_[rn] != group_class) group_pure = false;
                        continue;
                    }
                    if (has_pending) {
                        bool skip = p_prev_pure && group_pure && p_prev_class == group_class;
                        if (!skip) evaluate(p_thr, p_lw, p_lsum, p_lcount);
                        has_pending = false;
                    }
                    std::size_t lcount = i + 1;
                    if (lcount >= msl_count_ && n_node - lcount >= msl_count_) {
                        double thr = v + 0.5 * (vn - v);
                        if (!(thr > v) || !(thr < vn)) thr = v;
                        if (forced_first) {
                            evaluate(thr, lw, lsum, lcount);
                            forced_first = false;
                        } else {
                            p_thr = thr;
                            p_lsum = lsum;
                            for (int c = 0; c < C_; ++c) p_lw[c] = lw[c];
                            p_lcount = lcount;
                            p_prev_pure = group_pure;
                            p_prev_class = group_class;
                            has_pending = true;
                        }
                    }
                    group_class = y_[rn];
                    group_pure = true;
                }
                if (has_pending) evaluate(p_thr, p_lw, p_lsum, p_lcount);
            }
        }

        if (best_f < 0) {
            auto& probs = tree_.probs[static_cast<std::size_t>(id)];
            probs.assign(C_, 0.0);
            if (wsum > 0.0) {
                for (int c = 0; c < C_; ++c) probs[c] = wc[c] / wsum;
            } else {
                for (int c = 0; c < C_; ++c) probs[c] = 1.0 / C_;
            }
            if (train_pred_) {
                int cls = static_cast<int>(argmax_lowest(probs));
                const std::uint32_t* ids = order_of(0) + lo;
                for (std::size_t i = 0; i < n_node; ++i) (*train_pred_)[ids[i]] = cls;
            }
            return id;
        }

        tree_.importances[static_cast<std::size_t>(best_f)] += best_gain;

        // route rows, then stably partition every feature's slice
        {
            const double* col = x_.col(static_cast<std::size_t>(best_f));
            const std::uint32_t* ids = order_of(0) + lo;
            for (std::size_t i = 0; i < n_node; ++i) {
                goes_left_[ids[i]] = col[ids[i]] <= best_thr ? 1 : 0;
            }
        }
        for (std::size_t f = 0; f < x_.n_cols; ++f) {
            std::uint32_t* ids = order_of(f) + lo;
            std::size_t nl = 0, nr = 0;
            for (std::size_t i = 0; i < n_node; ++i) {
                std::uint32_t r = ids[i];
                if (goes_left_[r]) {
                    ids[nl++] = r;
                } else {
                    scratch_[nr++] = r;
                }
            }
            std::memcpy(ids + nl, scratch_.data(), nr * sizeof(std::uint32_t));
        }

        std::int32_t left_id = build_node(lo, lo + best_left, depth + 1);
        std::int32_t right_id = build_node(lo + best_left, hi, depth + 1);
        tree_.feature[static_cast<std::size_t>(id)] = best_f;
        tree_.threshold[static_cast<std::size_t>(id)] = best_thr;
        tree_.left[static_cast<std::size_t>(id)] = left_id;
        tree_.right[static_cast<std::size_t>(id)] = right_id;
        return id;
    }

    Matrix x_;
    std::vector<int> y_;
    int C_;
    std::vector<std::uint32_t> base_order_;

    std::span<const double> w_;
    const TreeConfig* cfg_ = nullptr;
    std::size_t mss_count_ = 2;
    std::size_t msl_count_ = 1;
    std::vector<std::uint32_t> work_;
    std::vector<std::uint32_t> scratch_;
    std::vector<char> goes_left_;
    DecisionTree tree_;
    std::vector<int>* train_pred_ = nullptr;
};

}  // namespace detail

inline DecisionTree fit_tree(const Matrix& x, std::span<const int> y,
                             std::span<const double> weights, const TreeConfig& cfg,
                             int num_classes) {
    detail::TreeBuilder builder(x, std::vector<int>(y.begin(), y.end()), num_classes);
    std::vector<double> w;
    if (weights.empty()) {
        w.assign(x.n_rows, 1.0 / static_cast<double>(x.n_rows));
        weights = w;
    }
    return builder.build(weights, cfg);
}

// Boosted stack of trees with their vote weights. weight_sums records the
// post-normalization sample-weight total after each completed round; it is a
// training diagnostic and is not persisted.
struct BoostedEnsemble {
    std::vector<DecisionTree> trees;
    std::vector<double> alphas;
    double learning_rate = 1.0;
    int num_classes = 0;
    std::vector<double> weight_sums;
};

// Multi-class weak-learner weight: learning_rate * (ln((1-e)/e) + ln(C-1)).
// A perfect round is capped by clamping e upward to 1e-10.
inline double samme_alpha(double weak_error, int num_classes, double learning_rate) {
    double e = std::clamp(weak_error, 1e-10, 1.0 - 1e-10);
    return learning_rate * (std::log((1.0 - e) / e) + std::log(static_cast<double>(num_classes - 1)));
}

namespace detail {

inline BoostedEnsemble boost_trees(TreeBuilder& builder, const TreeConfig& cfg, int rounds,
                                   double learning_rate) {
    if (rounds < 1) throw ValidationError("need at least one boosting round");
    if (!(learning_rate > 0.0)) throw ValidationError("learning rate must be positive");
    const auto& y = builder.targets();
    const std::size_t n = y.size();
    const int C = builder.num_classes();
    {
        int first = y.front();
        bool multi = false;
        for (int c : y) {
            if (c != first) {
                multi = true;
                break;
            }
        }
        if (!multi) throw ValidationError("boosting needs at least two classes present");
    }

    BoostedEnsemble ens;
    ens.learning_rate = learning_rate;
    ens.num_classes = C;

    std::vector<double> w(n, 1.0 / static_cast<double>(n));
    std::vector<int> preds;
    const double random_error = 1.0 - 1.0 / static_cast<double>(C);
    for (int j = 0; j < rounds; ++j) {
        DecisionTree tree = builder.build(w, cfg, &preds);
        double eps = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (preds[i] != y[i]) eps += w[i];
        }
        if (eps >= random_error - 1e-12) break;  // worse than random: drop and halt

        double alpha = samme_alpha(eps, C, learning_rate);
        ens.trees.push_back(std::move(tree));
        ens.alphas.push_back(alpha);
        if (eps <= 1e-12) break;  // perfect weak learner, nothing left to reweight

        double sum = 0.0;
        double scale = std::exp(alpha);
        for (std::size_t i = 0; i < n; ++i) {
            if (preds[i] != y[i]) w[i] *= scale;
            sum += w[i];
        }
        for (double& wi : w) wi /= sum;
        double check = 0.0;
        for (double wi : w) check += wi;
        ens.weight_sums.push_back(check);
    }
    return ens;
}

}  // namespace detail

inline BoostedEnsemble fit_adaboost(const Matrix& x, std::span<const int> y,
                                    const TreeConfig& cfg, int weak_learners,
                                    double learning_rate, int num_classes) {
    detail::TreeBuilder builder(x, std::vector<int>(y.begin(), y.end()), num_classes);
    return detail::boost_trees(builder, cfg, weak_learners, learning_rate);
}

// Weighted plurality over the weak learners' votes; ties resolve to the
// lowest class code. An empty ensemble scores every class zero.
inline std::pair<int, std::vector<double>> predict(const BoostedEnsemble& ens,
                                                   std::span<const double> row) {
    if (!ens.trees.empty() && row.size() != ens.trees.front().importances.size()) {
        throw ValidationError("row has " + std::to_string(row.size()) +
                              " columns, ensemble was trained on " +
                              std::to_string(ens.trees.front().importances.size()));
    }
    std::vector<double> scores(static_cast<std::size_t>(ens.num_classes), 0.0);
    for (std::size_t j = 0; j < ens.trees.size(); ++j) {
        scores[static_cast<std::size_t>(ens.trees[j].predict_class(row))] += ens.alphas[j];
    }
    return {static_cast<int>(argmax_lowest(scores)), std::move(scores)};
}

// Mean decrease in impurity pooled over the stack: per-tree normalized
// importances averaged with the alpha weights, renormalized to sum 1.
inline std::vector<double> mdi_importance(const BoostedEnsemble& ens) {
    if (ens.trees.empty()) return {};
    std::vector<double> total(ens.trees.front().importances.size(), 0.0);
    for (std::size_t j = 0; j < ens.trees.size(); ++j) {
        const auto& imp = ens.trees[j].importances;
        for (std::size_t f = 0; f < imp.size(); ++f) total[f] += ens.alphas[j] * imp[f];
    }
    double sum = 0.0;
    for (double v : total) sum += v;
    if (sum > 0.0) {
        for (double& v : total) v /= sum;
    }
    return total;
}

}  // namespace rampcast::learners
