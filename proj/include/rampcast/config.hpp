#pragma once

#include <fstream>

#include "json.hpp"
#include "rampcast/eval.hpp"

namespace rampcast::config {

// Pipeline settings shared by the CLI subcommands. A JSON config file may set
// any field; command-line flags override file values. The one master seed
// derives every sub-seed (subset sampling, splits, search, baselines) by
// labeled hashing.
struct RunConfig {
    std::string scheme = "three_class";
    std::size_t lag = 4;
    std::size_t horizon = 1;
    double capacity_mw = 669.0;
    double omega = 0.2;
    double epsilon_mw = 6.69;  // SDA tolerance, MW
    double period_minutes = 15.0;

    int subsets = 199;       // L
    int weak_learners = 10;  // S
    int max_depth = 7;
    std::string criterion = "entropy";
    double min_samples_split = 0.159;
    double min_samples_leaf = 0.03;
    double learning_rate = 1.035;

    double train_frac = 0.8;
    bool chronological = false;
    int cv_folds = 5;
    int trials = 75;

    std::uint64_t seed = 1;
    int jobs = 1;

    ClassScheme class_scheme() const {
        auto s = scheme_from_name(scheme);
        if (!s) throw ValidationError("unknown scheme '" + scheme + "'");
        return *s;
    }

    learners::TreeConfig tree_config() const {
        learners::TreeConfig tree;
        tree.max_depth = max_depth;
        auto crit = learners::criterion_from_name(criterion);
        if (!crit) throw ValidationError("unknown criterion '" + criterion + "'");
        tree.criterion = *crit;
        tree.min_samples_split = min_samples_split;
        tree.min_samples_leaf = min_samples_leaf;
        return tree;
    }

    imbalance::EasyConfig easy_config() const {
        imbalance::EasyConfig cfg;
        cfg.num_subsets = subsets;
        cfg.weak_learners = weak_learners;
        cfg.tree = tree_config();
        cfg.learning_rate = learning_rate;
        cfg.seed = seed;
        return cfg;
    }
};

inline void apply_json(RunConfig& cfg, const nlohmann::json& j) {
    auto get = [&](const char* key, auto& field) {
        if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
    };
    get("scheme", cfg.scheme);
    get("lag", cfg.lag);
    get("horizon", cfg.horizon);
    get("capacity_mw", cfg.capacity_mw);
    get("omega", cfg.omega);
    get("epsilon_mw", cfg.epsilon_mw);
    get("period_minutes", cfg.period_minutes);
    get("subsets", cfg.subsets);
    get("weak_learners", cfg.weak_learners);
    get("max_depth", cfg.max_depth);
    get("criterion", cfg.criterion);
    get("min_samples_split", cfg.min_samples_split);
    get("min_samples_leaf", cfg.min_samples_leaf);
    get("learning_rate", cfg.learning_rate);
    get("train_frac", cfg.train_frac);
    get("chronological", cfg.chronological);
    get("cv_folds", cfg.cv_folds);
    get("trials", cfg.trials);
    get("seed", cfg.seed);
    get("jobs", cfg.jobs);
}

inline RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    RunConfig cfg;
    apply_json(cfg, j);
    return cfg;
}

inline nlohmann::ordered_json easy_config_to_json(const imbalance::EasyConfig& cfg) {
    nlohmann::ordered_json j;
    j["subsets"] = cfg.num_subsets;
    j["weak_learners"] = cfg.weak_learners;
    j["max_depth"] = cfg.tree.max_depth;
    j["criterion"] = learners::criterion_name(cfg.tree.criterion);
    j["min_samples_split"] = cfg.tree.min_samples_split;
    j["min_samples_leaf"] = cfg.tree.min_samples_leaf;
    j["learning_rate"] = cfg.learning_rate;
    return j;
}

}  // namespace rampcast::config
