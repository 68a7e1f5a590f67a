#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace miscluster {

enum class Command { None, Cluster, Summarize, Evaluate, Bench, Synth, Help, Version };

// Parsed union of every subcommand's options. Config-file values are
// overridden by flags; --k and --auto are mutually exclusive.
struct RunConfig {
    Command command = Command::None;
    std::string help_message;  // filled when --help/--version short-circuits

    // shared dataset options
    std::string input;
    std::string dataset_name;
    char delimiter = ',';
    bool header = false;
    std::optional<std::size_t> class_col;
    std::vector<std::size_t> ignore_cols;

    // cluster
    std::optional<std::size_t> k;
    bool auto_mode = false;
    double theta = 0.9;
    double min_cluster_fraction = 0.0;
    std::size_t threads = 0;
    std::string out;

    // summarize
    std::string result_path;
    std::size_t top_n = 5;
    std::string machine_out;

    // evaluate
    std::string labels_from;

    // bench
    std::string manifest_path;
    std::vector<std::string> algorithms = {"mis", "mis-auto", "kmodes"};
    uint64_t kmodes_seed = 42;
    std::size_t kmodes_n_init = 16;

    // synth
    std::string spec_path;
    uint64_t seed = 0;
};

// Parses argv (without the program name). Usage problems raise InputError
// naming the offending flag; --help and --version short-circuit into a
// RunConfig carrying the message.
RunConfig parse_args(const std::vector<std::string>& args);

// Help text for the whole tool or one subcommand.
std::string help_text(const std::string& subcommand = "");

// Full entry point: parse, execute, map errors to exit codes
// (0 success, 1 input error, 2 algorithm error).
int run_cli(int argc, const char* const* argv);

}  // namespace miscluster
