#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "movelets/discovery.hpp"
#include "movelets/distance.hpp"
#include "movelets/features.hpp"
#include "movelets/model.hpp"
#include "movelets/movelet_io.hpp"
#include "movelets/synth.hpp"

namespace {

using namespace movelets;

struct DiscoverArgs {
    std::string train, schema, out, report;
    int max_length = 0;
    int threads = 0;
};

struct TransformArgs {
    std::string data, schema, movelets, out;
    std::string mode = "binary";
};

struct ClassifyArgs {
    std::string train_features, test_features, report;
    int k = 1;
};

struct SynthArgs {
    std::string out, truth, schema;
    SynthConfig config;
    std::vector<int> vocab = {5};
};

int run_discover(const DiscoverArgs& args) {
    Schema schema = load_schema(args.schema);
    check_schema_distances(schema);
    Dataset ds = load_dataset(args.train, schema);

    ValidationReport validation = validate_dataset(ds);
    if (!validation.ok()) {
        for (const auto& v : validation.violations) std::cerr << "error: " << v << '\n';
        return 2;
    }

    DiscoveryOptions options;
    options.max_length = args.max_length;
    options.threads = args.threads;

    auto start = std::chrono::steady_clock::now();
    DiscoveryResult result = discover(ds, options);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    save_movelets_json(result.movelets, schema, args.out);

    std::size_t total_candidates = 0;
    for (const auto& s : result.stats) total_candidates += s.candidates_evaluated;
    std::map<std::string, std::size_t> per_class;
    for (const auto& m : result.movelets) ++per_class[ds.trajectories[m.traj_index].label];

    std::cout << "trajectories: " << ds.size() << ", classes: " << ds.class_labels().size()
              << '\n';
    std::cout << "candidates evaluated: " << total_candidates << '\n';
    std::cout << "movelets: " << result.movelets.size();
    for (const auto& [label, count] : per_class) std::cout << "  " << label << "=" << count;
    std::cout << '\n';
    std::cout << "wall time: " << seconds << " s\n";
    std::cout << "wrote " << args.out << '\n';

    if (!args.report.empty()) {
        nlohmann::json report;
        report["threads"] = args.threads;
        report["max_length"] = args.max_length;
        report["wall_time_seconds"] = seconds;
        report["candidates_evaluated"] = total_candidates;
        report["movelets"] = result.movelets.size();
        report["movelets_per_class"] = per_class;
        report["trajectories"] = nlohmann::json::array();
        for (const auto& s : result.stats) {
            report["trajectories"].push_back({{"tid", s.tid},
                                              {"length", s.length},
                                              {"candidates_evaluated", s.candidates_evaluated},
                                              {"movelets_kept", s.movelets_kept}});
        }
        std::ofstream out(args.report);
        if (!out) throw DataError("cannot write report file: " + args.report);
        out << report.dump(2) << '\n';
    }
    return 0;
}

int run_transform(const TransformArgs& args) {
    Schema schema = load_schema(args.schema);
    check_schema_distances(schema);
    Dataset ds = load_dataset(args.data, schema);
    std::vector<Movelet> movelets = load_movelets_json(args.movelets, schema);

    FeatureMode mode;
    if (args.mode == "binary") {
        mode = FeatureMode::Binary;
    } else if (args.mode == "raw") {
        mode = FeatureMode::Raw;
    } else {
        throw DataError("mode must be 'binary' or 'raw', got '" + args.mode + "'");
    }

    FeatureMatrix fm = transform(ds, movelets, mode);
    save_features_csv(fm, args.out);
    std::cout << "feature matrix: " << fm.values.size() << " rows x " << fm.columns.size()
              << " columns (" << args.mode << ")\n";
    std::cout << "wrote " << args.out << '\n';
    return 0;
}

int run_classify(const ClassifyArgs& args) {
    FeatureMatrix train = load_features_csv(args.train_features);
    FeatureMatrix test = load_features_csv(args.test_features);
    KnnResult result = knn_classify(train, test, args.k);

    std::cout << "k=" << args.k << " accuracy: " << result.accuracy << '\n';
    for (const auto& [label, acc] : result.per_class_accuracy) {
        std::cout << "  " << label << ": " << acc << '\n';
    }
    if (!args.report.empty()) {
        nlohmann::json report;
        report["k"] = args.k;
        report["accuracy"] = result.accuracy;
        report["per_class_accuracy"] = result.per_class_accuracy;
        report["n_train"] = train.values.size();
        report["n_test"] = test.values.size();
        std::ofstream out(args.report);
        if (!out) throw DataError("cannot write report file: " + args.report);
        out << report.dump(2) << '\n';
    }
    return 0;
}

int run_synth(SynthArgs& args) {
    args.config.vocab_sizes = args.vocab;
    SynthResult result = synth_dataset(args.config);
    save_dataset(result.dataset, args.out);
    if (!args.truth.empty()) save_truth_json(result, result.dataset.schema, args.truth);
    if (!args.schema.empty()) save_schema(result.dataset.schema, args.schema);

    std::cout << "generated " << result.dataset.size() << " trajectories ("
              << args.config.classes << " classes x " << args.config.per_class << ", length "
              << args.config.length << ", " << args.config.dims << " dims, seed "
              << args.config.seed << ")\n";
    std::cout << "wrote " << args.out << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"movelets: discriminative subsequence discovery for labeled multidimensional trajectories"};
    app.require_subcommand(1);

    DiscoverArgs discover_args;
    auto* cmd_discover = app.add_subcommand("discover", "mine movelets from a training dataset");
    cmd_discover->add_option("--train", discover_args.train, "training dataset CSV")->required();
    cmd_discover->add_option("--schema", discover_args.schema, "schema JSON")->required();
    cmd_discover->add_option("--out", discover_args.out, "movelet JSON output path")->required();
    cmd_discover->add_option("--max-length", discover_args.max_length,
                             "cap on subtrajectory length (0 = up to each trajectory's length)");
    cmd_discover->add_option("--threads", discover_args.threads,
                             "worker threads (0 = available parallelism)");
    cmd_discover->add_option("--report", discover_args.report, "run report JSON output path");

    TransformArgs transform_args;
    auto* cmd_transform =
        app.add_subcommand("transform", "build a movelet feature matrix for a dataset");
    cmd_transform->add_option("--data", transform_args.data, "dataset CSV")->required();
    cmd_transform->add_option("--schema", transform_args.schema, "schema JSON")->required();
    cmd_transform->add_option("--movelets", transform_args.movelets, "movelet JSON")->required();
    cmd_transform->add_option("--out", transform_args.out, "feature CSV output path")->required();
    cmd_transform->add_option("--mode", transform_args.mode, "binary | raw (default binary)");

    ClassifyArgs classify_args;
    auto* cmd_classify =
        app.add_subcommand("classify", "k-nearest-neighbor classification on feature matrices");
    cmd_classify->add_option("--train-features", classify_args.train_features, "training feature CSV")
        ->required();
    cmd_classify->add_option("--test-features", classify_args.test_features, "test feature CSV")
        ->required();
    cmd_classify->add_option("-k,--k", classify_args.k, "neighbor count (default 1)");
    cmd_classify->add_option("--report", classify_args.report, "accuracy report JSON output path");

    SynthArgs synth_args;
    auto* cmd_synth = app.add_subcommand("synth", "generate a planted-pattern synthetic dataset");
    cmd_synth->add_option("--out", synth_args.out, "dataset CSV output path")->required();
    cmd_synth->add_option("--truth", synth_args.truth, "ground-truth JSON output path");
    cmd_synth->add_option("--schema", synth_args.schema, "schema JSON output path");
    cmd_synth->add_option("--classes", synth_args.config.classes, "class count (default 2)");
    cmd_synth->add_option("--per-class", synth_args.config.per_class,
                          "trajectories per class (default 20)");
    cmd_synth->add_option("--length", synth_args.config.length, "trajectory length (default 20)");
    cmd_synth->add_option("--dims", synth_args.config.dims, "dimension count (default 4)");
    cmd_synth->add_option("--pattern-length", synth_args.config.pattern_length,
                          "planted pattern length (default 3)");
    cmd_synth->add_option("--pattern-dims", synth_args.config.pattern_dims,
                          "planted dimension subset size (default 2)");
    cmd_synth->add_option("--vocab", synth_args.vocab,
                          "vocabulary size(s), one value or one per dimension (default 5)")
        ->delimiter(',');
    cmd_synth->add_option("--seed", synth_args.config.seed, "random seed (default 42)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_discover) return run_discover(discover_args);
        if (*cmd_transform) return run_transform(transform_args);
        if (*cmd_classify) return run_classify(classify_args);
        if (*cmd_synth) return run_synth(synth_args);
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
