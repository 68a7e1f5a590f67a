#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "miscluster/dataset.hpp"
#include "miscluster/engine.hpp"
#include "miscluster/manifest.hpp"

namespace miscluster {

// Fraction of samples belonging to their cluster's majority class; 1 iff every
// cluster is class-pure.
double purity(const ClusteringResult& result, const std::vector<uint32_t>& labels);

struct BenchmarkRow {
    std::string dataset;
    std::string algorithm;  // mis | mis-auto | kmodes
    std::optional<double> purity;
    std::size_t clusters = 0;
    double millis = 0.0;
    std::string error;  // non-empty when the row failed (e.g. missing file)
};

struct BenchmarkReport {
    std::vector<BenchmarkRow> rows;
    std::map<std::string, std::string> manifest_hashes;  // dataset -> FNV-1a 64 of file bytes
    std::vector<std::string> check_failures;             // manifest mismatches, informational
};

struct BenchmarkOptions {
    std::vector<std::string> algorithms = {"mis", "mis-auto", "kmodes"};
    double theta = 0.9;
    uint64_t kmodes_seed = 42;
    std::size_t kmodes_n_init = 16;
    std::size_t threads = 0;  // parallelism across (dataset x algorithm) rows
};

// Runs every selected algorithm on every manifest dataset with k set to the
// declared class count, computing purity per run. Rows are independent and may
// run in parallel; the report is gathered in manifest order. A missing or
// unreadable dataset records a per-row error and the run continues.
BenchmarkReport run_benchmark(const Manifest& manifest, const BenchmarkOptions& options);

// Purity values published for these benchmarks by the original studies, kept
// as cited reference constants for side-by-side comparison; these algorithms
// are not reimplemented here.
struct PublishedRow {
    std::string algorithm;
    std::map<std::string, double> purity;  // dataset -> value
};
const std::vector<PublishedRow>& published_reference_purity();

std::string render_benchmark_text(const BenchmarkReport& report);
std::string render_benchmark_json(const BenchmarkReport& report);

// FNV-1a 64 content hash, hex-encoded; empty optional when unreadable.
std::optional<std::string> file_fnv1a64(const std::string& path);

}  // namespace miscluster
