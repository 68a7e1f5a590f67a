#include "miscluster/cli.hpp"

#include <cstdio>
#include <fstream>

#include <CLI11.hpp>

#include "miscluster/engine.hpp"
#include "miscluster/error.hpp"
#include "miscluster/eval.hpp"
#include "miscluster/ingest.hpp"
#include "miscluster/kmodes.hpp"
#include "miscluster/manifest.hpp"
#include "miscluster/result_io.hpp"
#include "miscluster/summarize.hpp"
#include "miscluster/synth.hpp"

namespace miscluster {

namespace {

constexpr const char* kVersion = "miscluster 1.0.0";

// Structured key=value logging to stderr; reports go to stdout or files only.
void log_line(std::initializer_list<std::pair<const char*, std::string>> fields) {
    std::string line;
    for (const auto& [key, value] : fields) {
        if (!line.empty()) line += ' ';
        line += key;
        line += '=';
        line += value;
    }
    std::fprintf(stderr, "%s\n", line.c_str());
}

struct ArgState {
    std::string class_col = "none";
    std::string delimiter = ",";
};

void add_dataset_options(CLI::App* cmd, RunConfig& config, ArgState& state,
                         bool input_required = true) {
    auto* input = cmd->add_option("--input", config.input, "delimited data file");
    if (input_required) input->required();
    cmd->add_option("--name", config.dataset_name, "dataset name used in outputs");
    cmd->add_option("--delimiter", state.delimiter, "field delimiter (single character)")
        ->default_val(",");
    cmd->add_flag("--header", config.header, "first line is a header row");
    cmd->add_option("--class-col", state.class_col,
                    "raw column index of the class label, or 'none'")
        ->default_val("none");
    cmd->add_option("--ignore-cols", config.ignore_cols,
                    "raw column indices to drop (comma separated)")
        ->delimiter(',');
}

void finish_dataset_options(RunConfig& config, const ArgState& state) {
    if (state.delimiter.size() != 1) {
        throw InputError("--delimiter must be a single character, got '" + state.delimiter + "'");
    }
    config.delimiter = state.delimiter[0];
    if (state.class_col == "none") {
        config.class_col.reset();
    } else {
        try {
            std::size_t pos = 0;
            const long v = std::stol(state.class_col, &pos);
            if (pos != state.class_col.size() || v < 0) throw std::invalid_argument("");
            config.class_col = static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            throw InputError("--class-col expects a nonnegative integer or 'none', got '" +
                             state.class_col + "'");
        }
    }
}

IngestOptions ingest_options_from(const RunConfig& config) {
    IngestOptions opt;
    opt.delimiter = config.delimiter;
    opt.has_header = config.header;
    opt.class_col = config.class_col;
    opt.ignore_cols = config.ignore_cols;
    opt.dataset_name = config.dataset_name;
    return opt;
}

std::unique_ptr<CLI::App> build_app(RunConfig& config, ArgState& state) {
    auto app = std::make_unique<CLI::App>(
        "mutual-information-score clustering for categorical data");
    app->set_version_flag("--version", kVersion);
    app->set_config("--config", "", "read options from a config file");
    app->require_subcommand(0, 1);

    auto* cl = app->add_subcommand("cluster", "cluster a dataset and write the result document");
    cl->fallthrough();  // parent options (--config) stay usable after the subcommand
    add_dataset_options(cl, config, state);
    auto* opt_k = cl->add_option("--k", config.k, "number of clusters (fixed-k mode)");
    auto* opt_auto = cl->add_flag("--auto", config.auto_mode, "choose the cluster count automatically");
    opt_k->excludes(opt_auto);
    opt_auto->excludes(opt_k);
    cl->add_option("--theta", config.theta,
                   "auto mode stopping ratio: stop when min partition entropy / working entropy exceeds this")
        ->default_val(0.9);
    cl->add_option("--min-cluster-fraction", config.min_cluster_fraction,
                   "auto mode: stop when the residual falls below this fraction of all rows")
        ->default_val(0.0);
    cl->add_option("--threads", config.threads, "parallelism degree (0 = all cores)")
        ->default_val(0);
    cl->add_option("--out", config.out, "result document path (default: stdout)");

    auto* su = app->add_subcommand("summarize", "profile clusters against the global distribution");
    su->fallthrough();
    add_dataset_options(su, config, state);
    su->add_option("--result", config.result_path, "result document from 'cluster'")->required();
    su->add_option("--top", config.top_n, "attributes shown per cluster")->default_val(5);
    su->add_option("--out", config.out, "text report path (default: stdout)");
    su->add_option("--machine-out", config.machine_out, "CSV report path");

    auto* ev = app->add_subcommand("evaluate", "compute purity of a result against class labels");
    ev->fallthrough();
    add_dataset_options(ev, config, state, false);
    ev->add_option("--result", config.result_path, "result document from 'cluster'")->required();
    ev->add_option("--labels-from", config.labels_from, "delimited file holding the class column")
        ->required();

    auto* be = app->add_subcommand("bench", "reproduce the benchmark table over a dataset manifest");
    be->fallthrough();
    be->add_option("--manifest", config.manifest_path, "dataset manifest (JSON)")->required();
    be->add_option("--algorithms", config.algorithms, "subset of mis,mis-auto,kmodes")
        ->delimiter(',');
    be->add_option("--theta", config.theta, "auto mode stopping ratio")->default_val(0.9);
    be->add_option("--seed", config.kmodes_seed, "k-modes restart seed")->default_val(42);
    be->add_option("--n-init", config.kmodes_n_init, "k-modes restarts")->default_val(16);
    be->add_option("--threads", config.threads, "parallel benchmark rows (0 = all cores)")
        ->default_val(0);
    be->add_option("--out", config.out, "JSON report path");

    auto* sy = app->add_subcommand("synth", "generate a planted-missingness synthetic dataset");
    sy->fallthrough();
    sy->add_option("--spec", config.spec_path, "generator spec (JSON)")->required();
    sy->add_option("--seed", config.seed, "random seed")->default_val(0);
    sy->add_option("--out", config.out, "output data file")->required();
    sy->add_option("--delimiter", state.delimiter, "field delimiter for the output")
        ->default_val(",");
    sy->add_flag("--header", config.header, "write a header row");

    return app;
}

Command command_of(const CLI::App& app) {
    if (app.got_subcommand("cluster")) return Command::Cluster;
    if (app.got_subcommand("summarize")) return Command::Summarize;
    if (app.got_subcommand("evaluate")) return Command::Evaluate;
    if (app.got_subcommand("bench")) return Command::Bench;
    if (app.got_subcommand("synth")) return Command::Synth;
    return Command::None;
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
    if (!out) throw InputError("failed while writing '" + path + "'");
}

// Output paths are checked before any computation starts. The append-mode
// probe creates a missing file without touching existing contents.
void validate_output_path(const std::string& path) {
    if (path.empty()) return;
    std::ofstream probe(path, std::ios::app);
    if (!probe) throw InputError("cannot write '" + path + "'");
}

int execute(const RunConfig& config) {
    switch (config.command) {
        case Command::Cluster: {
            validate_output_path(config.out);
            const CategoricalDataset ds = load_delimited(config.input, ingest_options_from(config));
            log_line({{"event", "loaded"},
                      {"dataset", ds.name},
                      {"rows", std::to_string(ds.n_rows)},
                      {"attributes", std::to_string(ds.n_attributes())}});
            EngineConfig engine;
            engine.mode = config.auto_mode ? ClusterMode::Auto : ClusterMode::FixedK;
            if (!config.auto_mode) engine.k = config.k.value();
            engine.auto_stop_ratio = config.theta;
            engine.min_cluster_fraction = config.min_cluster_fraction;
            engine.threads = config.threads;
            const ClusteringResult result = cluster(ds, engine);
            if (result.shortfall) {
                log_line({{"event", "warning"},
                          {"detail", "residual became unsplittable before reaching k clusters"},
                          {"clusters", std::to_string(result.clusters.size())}});
            }
            log_line({{"event", "clustered"},
                      {"clusters", std::to_string(result.clusters.size())},
                      {"splits", std::to_string(result.splits.size())}});
            write_or_print(result_to_text(ds, result), config.out);
            return 0;
        }
        case Command::Summarize: {
            validate_output_path(config.out);
            validate_output_path(config.machine_out);
            const CategoricalDataset ds = load_delimited(config.input, ingest_options_from(config));
            const ClusteringResult result = load_result(ds, config.result_path);
            const auto summaries = summarize_clusters(ds, result);
            ReportOptions options;
            options.top_n = config.top_n;
            write_or_print(render_text_report(ds, summaries, options), config.out);
            if (!config.machine_out.empty()) {
                write_or_print(render_machine_report(ds, summaries), config.machine_out);
            }
            return 0;
        }
        case Command::Evaluate: {
            RunConfig with_labels = config;
            with_labels.input = config.labels_from;
            if (!config.class_col) {
                throw InputError("evaluate: --class-col is required to locate the labels");
            }
            const CategoricalDataset ds =
                load_delimited(config.labels_from, ingest_options_from(with_labels));
            if (!ds.labels) throw InputError("evaluate: no class column loaded");
            const ClusteringResult result = load_result(ds, config.result_path);
            const double p = purity(result, *ds.labels);
            std::printf("purity=%.6f clusters=%zu\n", p, result.clusters.size());
            return 0;
        }
        case Command::Bench: {
            validate_output_path(config.out);
            const Manifest manifest = load_manifest(config.manifest_path);
            BenchmarkOptions options;
            options.algorithms = config.algorithms;
            options.theta = config.theta;
            options.kmodes_seed = config.kmodes_seed;
            options.kmodes_n_init = config.kmodes_n_init;
            options.threads = config.threads;
            const BenchmarkReport report = run_benchmark(manifest, options);
            for (const auto& row : report.rows) {
                log_line({{"event", "bench_row"},
                          {"dataset", row.dataset},
                          {"algorithm", row.algorithm},
                          {"status", row.error.empty() ? "ok" : "error"}});
            }
            std::fputs(render_benchmark_text(report).c_str(), stdout);
            if (!config.out.empty()) write_or_print(render_benchmark_json(report), config.out);
            return 0;
        }
        case Command::Synth: {
            validate_output_path(config.out);
            const PlantedMissingnessSpec spec = load_synth_spec(config.spec_path);
            const CategoricalDataset ds = synth_missingness(spec, config.seed);
            write_delimited(ds, config.out, config.delimiter, config.header);
            log_line({{"event", "synthesized"},
                      {"rows", std::to_string(ds.n_rows)},
                      {"attributes", std::to_string(ds.n_attributes())},
                      {"out", config.out}});
            return 0;
        }
        case Command::Help:
        case Command::Version:
            std::fputs(config.help_message.c_str(), stdout);
            return 0;
        case Command::None:
            throw InputError("no subcommand given; try --help");
    }
    return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig config;
    ArgState state;
    auto app = build_app(config, state);

    // CLI11 parses argv-style vectors in reverse.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app->parse(reversed);
    } catch (const CLI::CallForHelp&) {
        config.command = Command::Help;
        const auto subs = app->get_subcommands();
        config.help_message = subs.empty() ? app->help() : subs.front()->help();
        return config;
    } catch (const CLI::CallForVersion&) {
        config.command = Command::Version;
        config.help_message = std::string(kVersion) + "\n";
        return config;
    } catch (const CLI::ParseError& e) {
        throw InputError(e.what());
    }

    config.command = command_of(*app);
    if (config.command == Command::Cluster || config.command == Command::Summarize ||
        config.command == Command::Evaluate || config.command == Command::Synth) {
        finish_dataset_options(config, state);
    }
    if (config.command == Command::Cluster && !config.auto_mode && !config.k) {
        throw InputError("cluster: one of --k or --auto is required");
    }
    if (config.command == Command::Cluster && config.k && *config.k < 2) {
        throw InputError("cluster: --k must be at least 2");
    }
    for (const auto& algo : config.algorithms) {
        if (algo != "mis" && algo != "mis-auto" && algo != "kmodes") {
            throw InputError("unknown algorithm '" + algo + "' (expected mis, mis-auto, kmodes)");
        }
    }
    return config;
}

std::string help_text(const std::string& subcommand) {
    RunConfig config;
    ArgState state;
    auto app = build_app(config, state);
    if (subcommand.empty()) return app->help();
    const CLI::App* sub = app->get_subcommand(subcommand);
    return sub->help();
}

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);

    try {
        const RunConfig config = parse_args(args);
        return execute(config);
    } catch (const InputError& e) {
        log_line({{"event", "error"}, {"kind", "input"}, {"detail", e.what()}});
        return 1;
    } catch (const AlgorithmError& e) {
        log_line({{"event", "error"}, {"kind", "algorithm"}, {"detail", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        log_line({{"event", "error"}, {"kind", "internal"}, {"detail", e.what()}});
        return 2;
    }
}

}  // namespace miscluster
