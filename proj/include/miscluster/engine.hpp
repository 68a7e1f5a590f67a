#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "miscluster/dataset.hpp"

namespace miscluster {

// One extraction step: which attribute was split, which of its categories was
// peeled off, and the full score vectors behind both choices.
struct SplitRecord {
    std::size_t significant_attribute = 0;
    uint32_t chosen_category = 0;
    // (category index, partition entropy) for every category realized in the
    // working set, in dictionary order.
    std::vector<std::pair<uint32_t, double>> partition_entropies;
    // (attribute index, MIS) for every active attribute. Attributes constant
    // within the working set score 0 and are never chosen.
    std::vector<std::pair<std::size_t, double>> mis_scores;
    // Partition entropy of the whole working set before the split; the
    // denominator of the auto stopping rule.
    double working_entropy = 0.0;
};

enum class ClusterMode { FixedK, Auto };

struct EngineConfig {
    ClusterMode mode = ClusterMode::FixedK;
    std::size_t k = 2;            // fixed-k mode only, must be >= 2
    double auto_stop_ratio = 0.9; // theta: stop when min partition entropy / working entropy > theta
    double min_cluster_fraction = 0.0;  // auto mode: stop when the residual falls below this share
    std::size_t threads = 0;      // 0 = MISCLUSTER_THREADS env or hardware concurrency
};

struct ClusteringResult {
    std::vector<SampleSet> clusters;  // extraction order; the residual is last
    std::vector<SplitRecord> splits;  // one per extraction
    EngineConfig config;
    std::string algorithm = "mis";
    // Fixed-k mode ran out of splittable data before reaching k clusters.
    bool shortfall = false;

    std::size_t total_rows() const;
    // Per-row cluster index over all clustered rows.
    std::vector<uint32_t> assignments() const;
};

// Argmax of mis_score over `active`, skipping attributes constant within
// `working`; ties break toward the lowest attribute index. Throws
// AlgorithmError when every active attribute is constant.
std::size_t select_significant_attribute(const SampleSet& working,
                                         const std::vector<std::size_t>& active,
                                         std::size_t threads = 1);

// Splits `working` by the categories of `attr`, evaluates each partition's
// entropy over `active`, and peels off the minimizer. Ties break toward the
// lowest category index. The returned record carries the partition entropies;
// MIS scores are filled by the engine loop.
struct Extraction {
    SampleSet cluster;
    SampleSet residual;
    SplitRecord record;
};
Extraction extract_min_entropy_partition(const SampleSet& working, std::size_t attr,
                                         const std::vector<std::size_t>& active);

// The full recursive procedure: pick the significant attribute by MIS, peel
// off the minimum-entropy partition, recurse on the residual. Fixed-k performs
// k-1 extractions (fewer, with a shortfall flag, if the residual becomes
// unsplittable); auto mode stops when peeling no longer pays per the
// stopping-ratio rule. Fully deterministic.
ClusteringResult cluster(const CategoricalDataset& ds, const EngineConfig& config);

// Routes a raw token row down the recorded split sequence. Unknown categories
// never match and fall through to the residual cluster.
std::size_t assign(const CategoricalDataset& ds, const ClusteringResult& result,
                   const std::vector<std::string>& row_tokens);

}  // namespace miscluster
