#pragma once

#include <fstream>

#include "json.hpp"
#include "rampcast/imbalance.hpp"

namespace rampcast::model_io {

using OrderedJson = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

namespace detail {

inline OrderedJson tree_to_json(const learners::DecisionTree& tree) {
    OrderedJson j;
    j["feature"] = tree.feature;
    j["threshold"] = tree.threshold;
    j["left"] = tree.left;
    j["right"] = tree.right;
    j["n_samples"] = tree.n_samples;
    j["probs"] = tree.probs;
    j["importances"] = tree.importances;
    return j;
}

inline learners::DecisionTree tree_from_json(const OrderedJson& j, int num_classes) {
    learners::DecisionTree tree;
    tree.num_classes = num_classes;
    tree.feature = j.at("feature").get<std::vector<std::int32_t>>();
    tree.threshold = j.at("threshold").get<std::vector<double>>();
    tree.left = j.at("left").get<std::vector<std::int32_t>>();
    tree.right = j.at("right").get<std::vector<std::int32_t>>();
    tree.n_samples = j.at("n_samples").get<std::vector<std::int32_t>>();
    tree.probs = j.at("probs").get<std::vector<std::vector<double>>>();
    tree.importances = j.at("importances").get<std::vector<double>>();
    return tree;
}

}  // namespace detail

inline OrderedJson to_json(const imbalance::EnsembleModel& model) {
    OrderedJson j;
    j["format"] = "rampcast-model";
    j["version"] = kFormatVersion;
    j["scheme"] = scheme_name(model.scheme);
    j["lag"] = model.lag;
    j["horizon"] = model.horizon;
    j["columns"] = model.column_names;
    j["majority_class"] = label_name(model.majority_class);

    OrderedJson cfg;
    cfg["subsets"] = model.config.num_subsets;
    cfg["weak_learners"] = model.config.weak_learners;
    cfg["learning_rate"] = model.config.learning_rate;
    cfg["seed"] = model.config.seed;
    cfg["max_depth"] = model.config.tree.max_depth;
    cfg["criterion"] = learners::criterion_name(model.config.tree.criterion);
    cfg["min_samples_split"] = model.config.tree.min_samples_split;
    cfg["min_samples_leaf"] = model.config.tree.min_samples_leaf;
    j["config"] = cfg;

    OrderedJson stats = OrderedJson::array();
    for (const auto& s : model.member_stats) {
        stats.push_back({{"majority_rows", s.majority_rows}, {"minority_rows", s.minority_rows}});
    }
    j["member_stats"] = stats;

    OrderedJson members = OrderedJson::array();
    for (const auto& member : model.members) {
        OrderedJson m;
        m["alphas"] = member.alphas;
        OrderedJson trees = OrderedJson::array();
        for (const auto& tree : member.trees) trees.push_back(detail::tree_to_json(tree));
        m["trees"] = trees;
        members.push_back(std::move(m));
    }
    j["members"] = members;
    return j;
}

inline imbalance::EnsembleModel from_json(const OrderedJson& j) {
    if (j.value("format", "") != "rampcast-model") {
        throw ParseError("not a rampcast model document");
    }
    if (j.value("version", 0) != kFormatVersion) {
        throw ParseError("unsupported model version");
    }
    imbalance::EnsembleModel model;
    auto scheme = scheme_from_name(j.at("scheme").get<std::string>());
    if (!scheme) throw ParseError("unknown scheme in model document");
    model.scheme = *scheme;
    model.lag = j.at("lag").get<std::size_t>();
    model.horizon = j.at("horizon").get<std::size_t>();
    model.column_names = j.at("columns").get<std::vector<std::string>>();
    auto majority = label_from_name(j.at("majority_class").get<std::string>());
    if (!majority) throw ParseError("unknown majority class in model document");
    model.majority_class = *majority;

    const auto& cfg = j.at("config");
    model.config.num_subsets = cfg.at("subsets").get<int>();
    model.config.weak_learners = cfg.at("weak_learners").get<int>();
    model.config.learning_rate = cfg.at("learning_rate").get<double>();
    model.config.seed = cfg.at("seed").get<std::uint64_t>();
    model.config.tree.max_depth = cfg.at("max_depth").get<int>();
    auto crit = learners::criterion_from_name(cfg.at("criterion").get<std::string>());
    if (!crit) throw ParseError("unknown criterion in model document");
    model.config.tree.criterion = *crit;
    model.config.tree.min_samples_split = cfg.at("min_samples_split").get<double>();
    model.config.tree.min_samples_leaf = cfg.at("min_samples_leaf").get<double>();

    for (const auto& s : j.at("member_stats")) {
        model.member_stats.push_back({s.at("majority_rows").get<std::size_t>(),
                                      s.at("minority_rows").get<std::size_t>()});
    }

    const int C = model.num_classes();
    for (const auto& m : j.at("members")) {
        learners::BoostedEnsemble member;
        member.num_classes = C;
        member.learning_rate = model.config.learning_rate;
        member.alphas = m.at("alphas").get<std::vector<double>>();
        for (const auto& t : m.at("trees")) {
            member.trees.push_back(detail::tree_from_json(t, C));
        }
        if (member.trees.size() != member.alphas.size()) {
            throw ParseError("tree/alpha count mismatch in model document");
        }
        model.members.push_back(std::move(member));
    }
    return model;
}

inline std::string to_string(const imbalance::EnsembleModel& model) {
    return to_json(model).dump(2) + "\n";
}

inline void save_model(const imbalance::EnsembleModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << to_string(model);
    if (!out) throw IoError("write failed for " + path);
}

inline imbalance::EnsembleModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    OrderedJson j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return from_json(j);
}

}  // namespace rampcast::model_io
