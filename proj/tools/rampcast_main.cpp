// Command-line frontend for the ramp-event forecasting pipeline:
// synth -> label -> prepare -> train/tune -> eval, plus a streaming loop.
#include <chrono>
#include <iostream>

#include "CLI11.hpp"
#include "rampcast/rampcast.hpp"

namespace {

using namespace rampcast;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void warn_uncommon_lag(std::size_t lag) {
    if (lag != 4 && lag != 8 && lag != 12) {
        std::cerr << "notice: lag " << lag << " is outside the benchmarked grid {4, 8, 12}\n";
    }
}

nlohmann::ordered_json metrics_json(const eval::MetricsReport& report, ClassScheme scheme) {
    nlohmann::ordered_json j;
    j["accuracy"] = report.accuracy;
    j["balanced_accuracy"] = report.balanced_accuracy;
    j["kappa"] = report.kappa;
    j["weighted_f1"] = report.weighted_f1;
    nlohmann::ordered_json per_class = nlohmann::ordered_json::array();
    auto classes = scheme_classes(scheme);
    for (std::size_t c = 0; c < report.per_class.size(); ++c) {
        const auto& pc = report.per_class[c];
        per_class.push_back({{"label", label_name(classes[c])},
                             {"precision", pc.precision},
                             {"recall", pc.recall},
                             {"f1", pc.f1},
                             {"support", pc.support}});
    }
    j["per_class"] = per_class;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed for " + path);
}

void write_confusion_csv(const eval::ConfusionMatrix& cm, const std::string& path) {
    std::string text = "truth\\prediction";
    for (RampClass c : scheme_classes(cm.scheme)) {
        text += ',';
        text += label_name(c);
    }
    text += '\n';
    auto norm = cm.normalized();
    auto classes = scheme_classes(cm.scheme);
    for (std::size_t r = 0; r < norm.size(); ++r) {
        text += label_name(classes[r]);
        for (double v : norm[r]) {
            text += ',';
            text += fmt(v);
        }
        text += '\n';
    }
    write_text_file(path, text);
}

// file values first, then flags override
config::RunConfig preload_config(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string_view(argv[i]) == "--config") {
            return config::load_run_config(argv[i + 1]);
        }
    }
    return config::RunConfig{};
}

struct SynthFlags {
    std::string out;
    double ramp_onset = 0.012;
    double critical_onset = 0.008;
    double ramp_hold = 0.70;
    double critical_hold = 0.65;
    double drift_ramp = -1.0;      // MW/min; <0 means derive from capacity
    double drift_critical = -1.0;  // MW/min
    double noise_calm = 2.0;
    double noise_ramp = 3.0;
    double noise_critical = 4.0;
    double start_power = -1.0;
    std::size_t samples = 28800;
};

synth::SynthConfig build_synth_config(const config::RunConfig& cfg, const SynthFlags& f) {
    synth::SynthConfig scfg;
    scfg.capacity_mw = cfg.capacity_mw;
    scfg.n_samples = f.samples;
    scfg.period_minutes = cfg.period_minutes;
    scfg.seed = cfg.seed;
    scfg.omega = cfg.omega;
    scfg.sda_epsilon_mw = cfg.epsilon_mw;
    scfg.start_power_mw = f.start_power;

    const double s1 = 0.1 * cfg.capacity_mw / 60.0;
    double ramp_drift = f.drift_ramp > 0 ? f.drift_ramp : 1.45 * s1;
    double critical_drift = f.drift_critical > 0 ? f.drift_critical : 2.9 * s1;
    scfg.drift_mw_per_min = {0.0, ramp_drift, -ramp_drift, critical_drift, -critical_drift};
    scfg.noise_mw = {f.noise_calm, f.noise_ramp, f.noise_ramp, f.noise_critical,
                     f.noise_critical};

    double calm_hold = 1.0 - 2.0 * f.ramp_onset - 2.0 * f.critical_onset;
    if (calm_hold < 0.0) throw ValidationError("onset probabilities exceed 1");
    scfg.transitions = {{
        {calm_hold, f.ramp_onset, f.ramp_onset, f.critical_onset, f.critical_onset},
        {1.0 - f.ramp_hold, f.ramp_hold, 0.0, 0.0, 0.0},
        {1.0 - f.ramp_hold, 0.0, f.ramp_hold, 0.0, 0.0},
        {1.0 - f.critical_hold, 0.0, 0.0, f.critical_hold, 0.0},
        {1.0 - f.critical_hold, 0.0, 0.0, 0.0, f.critical_hold},
    }};
    return scfg;
}

int run_synth(const config::RunConfig& cfg, const SynthFlags& flags) {
    auto labeled = synth::generate(build_synth_config(cfg, flags));
    write_series(labeled.series, flags.out);
    std::cerr << "synth: wrote " << labeled.series.size() << " samples, "
              << labeled.segments.size() << " trend segments to " << flags.out << "\n";
    return 0;
}

int run_label(const config::RunConfig& cfg, const std::string& in, const std::string& out) {
    BivariateSeries series = read_series(in, false);
    series.period_minutes = cfg.period_minutes;
    series.capacity_mw = cfg.capacity_mw;
    auto labeled = ramping::label_series(series, ramping::SdaConfig{cfg.epsilon_mw},
                                         ramping::make_thresholds(cfg.capacity_mw, cfg.omega));
    write_series(labeled.series, out);
    std::cerr << "label: " << labeled.segments.size() << " trend segments over "
              << labeled.series.size() << " samples\n";
    return 0;
}

int run_prepare(const config::RunConfig& cfg, const std::string& in, const std::string& out) {
    warn_uncommon_lag(cfg.lag);
    BivariateSeries series = read_series(in, true);
    series.period_minutes = cfg.period_minutes;
    ClassScheme scheme = cfg.class_scheme();
    if (scheme == ClassScheme::ThreeClass) {
        for (auto& s : series.samples) s.label = group_to_three(s.label);
    }
    auto matrix = preprocess::extract_instances(
        series, preprocess::WindowSpec{cfg.lag, cfg.horizon}, scheme);
    matrix_io::write_matrix(matrix, out);
    std::cerr << "prepare: " << matrix.n_rows() << " instances, " << matrix.n_cols()
              << " columns, class entropy " << fmt(eval::class_entropy_percent(matrix))
              << "% of log C\n";
    return 0;
}

int run_features(const config::RunConfig& cfg, const std::string& window_csv,
                 const std::string& last_event_name) {
    std::vector<double> window;
    for (std::string_view field : detail::split_csv_line(window_csv)) {
        double v = 0.0;
        if (!detail::parse_double(field, v)) {
            throw ValidationError("bad window value '" + std::string(field) + "'");
        }
        window.push_back(v);
    }
    auto last_event = label_from_name(last_event_name);
    if (!last_event) throw ValidationError("unknown label '" + last_event_name + "'");
    auto vec = features::extract_features(window, *last_event, cfg.class_scheme());
    auto names = features::FeatureVector::names();
    auto values = vec.values();
    for (std::size_t i = 0; i < names.size(); ++i) {
        std::cout << names[i] << ' ' << fmt(values[i]) << '\n';
    }
    return 0;
}

std::pair<preprocess::InstanceMatrix, preprocess::InstanceMatrix> split_matrix(
    const config::RunConfig& cfg, const preprocess::InstanceMatrix& matrix) {
    if (cfg.chronological) return eval::chronological_split(matrix, cfg.train_frac);
    return eval::holdout_split(matrix, cfg.train_frac, derive_seed(cfg.seed, "holdout"));
}

int run_train(const config::RunConfig& cfg, const std::string& in, const std::string& out) {
    auto matrix = matrix_io::read_matrix(in);
    warn_uncommon_lag(matrix.lag);

    preprocess::InstanceMatrix train = matrix;
    if (cfg.train_frac > 0.0) {
        auto [tr, te] = split_matrix(cfg, matrix);
        train = std::move(tr);
        std::cerr << "train: holding out " << te.n_rows() << " rows for evaluation\n";
    }

    auto start = Clock::now();
    auto model = imbalance::fit_easy_ensemble(train, cfg.easy_config(), cfg.jobs);
    double elapsed = seconds_since(start);
    model_io::save_model(model, out);

    std::size_t trees = 0;
    for (const auto& member : model.members) trees += member.trees.size();
    std::cerr << "train: " << train.n_rows() << " rows, " << model.members.size()
              << " members, " << trees << " trees, " << fmt(elapsed) << " s\n";
    return 0;
}

int run_tune(const config::RunConfig& cfg, const std::string& in, const std::string& log_out,
             const std::string& best_out) {
    auto matrix = matrix_io::read_matrix(in);
    preprocess::InstanceMatrix train = matrix;
    if (cfg.train_frac > 0.0) {
        train = split_matrix(cfg, matrix).first;
    }

    eval::SearchSpace space;
    space.iterations = cfg.trials;
    imbalance::EasyConfig base = cfg.easy_config();

    auto start = Clock::now();
    eval::SearchResult result =
        eval::random_search(train, space, base, cfg.seed, cfg.cv_folds, cfg.jobs);
    double elapsed = seconds_since(start);

    std::string log = "trial,subsets,weak_learners,max_depth,criterion,min_samples_split,"
                      "min_samples_leaf,learning_rate,mean_weighted_f1\n";
    for (std::size_t t = 0; t < result.trials.size(); ++t) {
        const auto& trial = result.trials[t];
        log += std::to_string(t) + ',' + std::to_string(trial.config.num_subsets) + ',' +
               std::to_string(trial.config.weak_learners) + ',' +
               std::to_string(trial.config.tree.max_depth) + ',' +
               std::string(learners::criterion_name(trial.config.tree.criterion)) + ',' +
               fmt(trial.config.tree.min_samples_split) + ',' +
               fmt(trial.config.tree.min_samples_leaf) + ',' +
               fmt(trial.config.learning_rate) + ',' + fmt(trial.mean_weighted_f1) + '\n';
    }
    write_text_file(log_out, log);

    if (!best_out.empty()) {
        write_text_file(best_out, config::easy_config_to_json(result.best_config).dump(2) + "\n");
    }
    std::cout << "best mean weighted F1 " << fmt(result.best_score) << " with subsets="
              << result.best_config.num_subsets
              << " max_depth=" << result.best_config.tree.max_depth << " criterion="
              << learners::criterion_name(result.best_config.tree.criterion) << "\n";
    std::cerr << "tune: " << result.trials.size() << " trials in " << fmt(elapsed) << " s\n";
    return 0;
}

int run_eval(const config::RunConfig& cfg, const std::string& model_path, const std::string& in,
             const std::string& report_out, const std::string& confusion_out, bool baselines) {
    auto model = model_io::load_model(model_path);
    auto matrix = matrix_io::read_matrix(in);
    if (matrix.scheme != model.scheme || matrix.column_names != model.column_names) {
        throw ValidationError("matrix layout does not match the model");
    }

    preprocess::InstanceMatrix train = matrix;
    preprocess::InstanceMatrix test = matrix;
    if (cfg.train_frac > 0.0) {
        auto [tr, te] = split_matrix(cfg, matrix);
        train = std::move(tr);
        test = std::move(te);
    }

    std::vector<RampClass> truth;
    truth.reserve(test.n_rows());
    for (const auto& row : test.rows) truth.push_back(row.target);

    auto start = Clock::now();
    std::vector<RampClass> pred = eval::predict_matrix(model, test);
    double predict_seconds = seconds_since(start);

    eval::MetricsReport report = eval::compute_metrics(truth, pred, model.scheme);
    nlohmann::ordered_json j;
    j["scheme"] = scheme_name(model.scheme);
    j["lag"] = model.lag;
    j["rows_evaluated"] = test.n_rows();
    j["class_entropy_percent"] = eval::class_entropy_percent(test);
    j["metrics"] = metrics_json(report, model.scheme);

    if (baselines) {
        auto pairs = imbalance::transition_pairs(train);
        auto baseline = imbalance::fit_transition_pairs(pairs, model.scheme,
                                                        derive_seed(cfg.seed, "baseline"));
        std::vector<RampClass> pr_pred, mj_pred;
        pr_pred.reserve(test.n_rows());
        RampClass majority = imbalance::majority_class_of(train);
        for (const auto& row : test.rows) {
            int code = static_cast<int>(row.feature_vector.last_event_code);
            RampClass current = class_from_code(model.scheme, code);
            pr_pred.push_back(imbalance::predict_baseline(baseline, current,
                                                          imbalance::BaselineMode::Sample));
            mj_pred.push_back(majority);
        }
        nlohmann::ordered_json b;
        b["transition"] = metrics_json(eval::compute_metrics(truth, pr_pred, model.scheme),
                                       model.scheme);
        b["majority"] = metrics_json(eval::compute_metrics(truth, mj_pred, model.scheme),
                                     model.scheme);
        j["baselines"] = b;
    }

    std::string text = j.dump(2) + "\n";
    if (report_out.empty() || report_out == "-") {
        std::cout << text;
    } else {
        write_text_file(report_out, text);
    }
    if (!confusion_out.empty()) {
        write_confusion_csv(eval::confusion(truth, pred, model.scheme), confusion_out);
    }
    std::cerr << "eval: " << test.n_rows() << " rows in " << fmt(predict_seconds) << " s\n";
    return 0;
}

void print_record(const stream::ForecastRecord& record) {
    std::string line = std::to_string(record.step) + ',' +
                       std::string(label_name(record.predicted));
    for (double s : record.scores) {
        line += ',';
        line += fmt(s);
    }
    if (record.closed_event) {
        line += ',';
        line += label_name(record.closed.assigned_class);
    }
    std::cout << line << '\n';
}

int run_stream(const config::RunConfig& cfg, const std::string& model_path,
               const std::string& in, const std::string& report_out) {
    auto model = model_io::load_model(model_path);
    auto thresholds = ramping::make_thresholds(cfg.capacity_mw, cfg.omega);
    ramping::SdaConfig sda{cfg.epsilon_mw};

    if (in == "-") {
        // live mode: one decimal per line, forecast emitted as each arrives
        stream::StreamState state =
            stream::make_stream(model, thresholds, sda, cfg.period_minutes);
        std::string line;
        while (std::getline(std::cin, line)) {
            if (line.empty()) continue;
            double power = 0.0;
            if (!detail::parse_double(line, power)) {
                throw ValidationError("bad power value '" + line + "'");
            }
            stream::ForecastRecord record = stream::step(state, power);
            if (record.has_forecast) print_record(record);
        }
        return 0;
    }

    BivariateSeries series = read_series(in, true);
    series.period_minutes = cfg.period_minutes;
    if (model.scheme == ClassScheme::ThreeClass) {
        for (auto& s : series.samples) {
            if (s.label != RampClass::Unknown && in_scheme(ClassScheme::FiveClass, s.label)) {
                s.label = group_to_three(s.label);
            }
        }
    }
    auto result = stream::replay(series, model, thresholds, sda);
    for (const auto& record : result.records) print_record(record);
    if (result.has_metrics) {
        nlohmann::ordered_json j;
        j["scheme"] = scheme_name(model.scheme);
        j["records"] = result.records.size();
        j["metrics"] = metrics_json(result.metrics, model.scheme);
        std::string text = j.dump(2) + "\n";
        if (report_out.empty()) {
            std::cerr << text;
        } else {
            write_text_file(report_out, text);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    config::RunConfig cfg;
    try {
        cfg = preload_config(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"wind power ramp event forecasting under class imbalance"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "JSON config file; flags override its values");

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", cfg.seed, "master seed; all sub-seeds derive from it");
    };
    auto add_jobs = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", cfg.jobs, "worker threads; results identical for any value");
    };
    auto add_detector = [&](CLI::App* cmd) {
        cmd->add_option("--capacity", cfg.capacity_mw, "installed capacity (MW)");
        cmd->add_option("--omega", cfg.omega, "event threshold as a fraction of capacity");
        cmd->add_option("--epsilon", cfg.epsilon_mw, "SDA deviation tolerance (MW)");
        cmd->add_option("--period", cfg.period_minutes, "sampling period (minutes)");
    };

    // synth
    SynthFlags synth_flags;
    auto* synth_cmd = app.add_subcommand("synth", "generate a labeled synthetic series");
    synth_cmd->add_option("--out", synth_flags.out, "output CSV path")->required();
    synth_cmd->add_option("--samples", synth_flags.samples, "number of samples");
    synth_cmd->add_option("--ramp-onset", synth_flags.ramp_onset,
                          "per-step probability calm -> ramp (each direction)");
    synth_cmd->add_option("--critical-onset", synth_flags.critical_onset,
                          "per-step probability calm -> critical ramp (each direction)");
    synth_cmd->add_option("--ramp-hold", synth_flags.ramp_hold,
                          "per-step probability a ramp regime persists");
    synth_cmd->add_option("--critical-hold", synth_flags.critical_hold,
                          "per-step probability a critical regime persists");
    synth_cmd->add_option("--drift-ramp", synth_flags.drift_ramp,
                          "ramp regime drift (MW/min); default 1.45*s1");
    synth_cmd->add_option("--drift-critical", synth_flags.drift_critical,
                          "critical regime drift (MW/min); default 2.9*s1");
    synth_cmd->add_option("--noise-calm", synth_flags.noise_calm, "calm noise scale (MW/step)");
    synth_cmd->add_option("--noise-ramp", synth_flags.noise_ramp, "ramp noise scale (MW/step)");
    synth_cmd->add_option("--noise-critical", synth_flags.noise_critical,
                          "critical noise scale (MW/step)");
    synth_cmd->add_option("--start-power", synth_flags.start_power,
                          "initial power (MW); default capacity/2");
    add_detector(synth_cmd);
    add_seed(synth_cmd);
    add_config(synth_cmd);
    synth_cmd->callback([&] { run_synth(cfg, synth_flags); });

    // label
    std::string in_path, out_path;
    auto* label_cmd = app.add_subcommand("label", "segment a series and assign ramp classes");
    label_cmd->add_option("--in", in_path, "input CSV (index,power[,label])")->required();
    label_cmd->add_option("--out", out_path, "output labeled CSV")->required();
    add_detector(label_cmd);
    add_seed(label_cmd);
    add_config(label_cmd);
    label_cmd->callback([&] { run_label(cfg, in_path, out_path); });

    // prepare
    auto* prepare_cmd =
        app.add_subcommand("prepare", "extract masked training instances from a labeled series");
    prepare_cmd->add_option("--in", in_path, "labeled series CSV")->required();
    prepare_cmd->add_option("--out", out_path, "instance matrix CSV (manifest written alongside)")
        ->required();
    prepare_cmd->add_option("--scheme", cfg.scheme, "class scheme: three_class or five_class");
    prepare_cmd->add_option("--lag,--l,-l", cfg.lag, "window length (samples)");
    prepare_cmd->add_option("--horizon", cfg.horizon, "forecast horizon (samples)");
    prepare_cmd->add_option("--period", cfg.period_minutes, "sampling period (minutes)");
    add_seed(prepare_cmd);
    add_config(prepare_cmd);
    prepare_cmd->callback([&] { run_prepare(cfg, in_path, out_path); });

    // features
    std::string window_csv, last_event_name = "unknown";
    auto* features_cmd =
        app.add_subcommand("features", "print the feature vector of one power window");
    features_cmd->add_option("--window", window_csv, "comma-separated power values (MW)")
        ->required();
    features_cmd->add_option("--last-event", last_event_name, "last known event label");
    features_cmd->add_option("--scheme", cfg.scheme, "class scheme for the event code");
    add_seed(features_cmd);
    add_config(features_cmd);
    features_cmd->callback([&] { run_features(cfg, window_csv, last_event_name); });

    // train
    auto* train_cmd = app.add_subcommand("train", "fit the undersampled boosted ensemble");
    train_cmd->add_option("--in", in_path, "instance matrix CSV")->required();
    train_cmd->add_option("--out", out_path, "model JSON path")->required();
    train_cmd->add_option("--subsets", cfg.subsets, "majority undersamples (L)");
    train_cmd->add_option("--weak", cfg.weak_learners, "weak learners per subset (S)");
    train_cmd->add_option("--max-depth", cfg.max_depth, "tree depth limit");
    train_cmd->add_option("--criterion", cfg.criterion, "split criterion: gini|entropy|log_loss");
    train_cmd->add_option("--min-split", cfg.min_samples_split,
                          "min fraction of rows to split a node");
    train_cmd->add_option("--min-leaf", cfg.min_samples_leaf, "min fraction of rows in a leaf");
    train_cmd->add_option("--learning-rate", cfg.learning_rate, "boosting learning rate");
    train_cmd->add_option("--train-frac", cfg.train_frac,
                          "stratified training fraction; 0 trains on all rows");
    train_cmd->add_flag("--chronological", cfg.chronological,
                        "split by origin ordinal instead of stratified random");
    add_seed(train_cmd);
    add_jobs(train_cmd);
    add_config(train_cmd);
    train_cmd->callback([&] { run_train(cfg, in_path, out_path); });

    // tune
    std::string best_out;
    auto* tune_cmd =
        app.add_subcommand("tune", "random hyperparameter search with stratified CV");
    tune_cmd->add_option("--in", in_path, "instance matrix CSV")->required();
    tune_cmd->add_option("--out", out_path, "trial log CSV path")->required();
    tune_cmd->add_option("--best-out", best_out, "write the best configuration as JSON");
    tune_cmd->add_option("--trials", cfg.trials, "search iterations");
    tune_cmd->add_option("--folds", cfg.cv_folds, "cross-validation folds (k)");
    tune_cmd->add_option("--weak", cfg.weak_learners, "weak learners per subset (S)");
    tune_cmd->add_option("--train-frac", cfg.train_frac,
                         "stratified training fraction; 0 searches on all rows");
    tune_cmd->add_flag("--chronological", cfg.chronological,
                       "split by origin ordinal instead of stratified random");
    add_seed(tune_cmd);
    add_jobs(tune_cmd);
    add_config(tune_cmd);
    tune_cmd->callback([&] { run_tune(cfg, in_path, out_path, best_out); });

    // eval
    std::string model_path, report_out, confusion_out;
    bool baselines = false;
    auto* eval_cmd = app.add_subcommand("eval", "score a model on the held-out rows");
    eval_cmd->add_option("--model", model_path, "model JSON path")->required();
    eval_cmd->add_option("--in", in_path, "instance matrix CSV")->required();
    eval_cmd->add_option("--report", report_out, "metrics JSON path; '-' or empty for stdout");
    eval_cmd->add_option("--confusion", confusion_out, "normalized confusion matrix CSV path");
    eval_cmd->add_option("--train-frac", cfg.train_frac,
                         "same fraction and seed as training reproduce its held-out rows");
    eval_cmd->add_flag("--chronological", cfg.chronological,
                       "split by origin ordinal instead of stratified random");
    eval_cmd->add_flag("--baselines", baselines,
                       "also score the event-transition and majority-class baselines");
    add_seed(eval_cmd);
    add_config(eval_cmd);
    eval_cmd->callback(
        [&] { run_eval(cfg, model_path, in_path, report_out, confusion_out, baselines); });

    // stream
    auto* stream_cmd =
        app.add_subcommand("stream", "forecast a power stream one reading at a time");
    stream_cmd->add_option("--model", model_path, "model JSON path")->required();
    stream_cmd->add_option("--in", in_path, "series CSV, or '-' for one decimal per line on stdin")
        ->required();
    stream_cmd->add_option("--report", report_out,
                           "metrics JSON path when reference labels exist (default stderr)");
    add_detector(stream_cmd);
    add_seed(stream_cmd);
    add_config(stream_cmd);
    stream_cmd->callback([&] { run_stream(cfg, model_path, in_path, report_out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
