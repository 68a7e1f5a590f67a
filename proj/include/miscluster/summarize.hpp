#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "miscluster/dataset.hpp"
#include "miscluster/engine.hpp"

namespace miscluster {

struct CategoryDelta {
    uint32_t category = 0;
    double q = 0.0;      // share within the cluster
    double p = 0.0;      // share over the whole dataset
    double delta = 0.0;  // q - p
};

struct AttributeDivergence {
    std::size_t attribute = 0;
    double divergence = 0.0;  // D(q || p) in bits
};

// What makes one cluster distinctive: per-attribute KL divergence of its
// category distribution against the global one, plus the per-category deltas
// behind each divergence.
struct ClusterSummary {
    std::size_t cluster_index = 0;
    std::size_t cluster_size = 0;
    double size_fraction = 0.0;
    // Sorted by descending divergence; ties break by attribute name.
    std::vector<AttributeDivergence> attribute_divergences;
    // Indexed by attribute (original order), one delta per category.
    std::vector<std::vector<CategoryDelta>> category_deltas;
};

ClusterSummary summarize_cluster(const CategoricalDataset& ds, const SampleSet& cluster,
                                 std::size_t cluster_index = 0);

std::vector<ClusterSummary> summarize_clusters(const CategoricalDataset& ds,
                                               const ClusteringResult& result);

struct ReportOptions {
    std::size_t top_n = 5;  // attributes shown per cluster
};

// Deterministic plain-text profile: top-N divergent attributes per cluster
// with category shares rendered against their base rates.
std::string render_text_report(const CategoricalDataset& ds,
                               const std::vector<ClusterSummary>& summaries,
                               const ReportOptions& options);

// Machine-readable rendering: one CSV record per (cluster, attribute,
// category) with q, p, delta and the attribute divergence to six decimals.
std::string render_machine_report(const CategoricalDataset& ds,
                                  const std::vector<ClusterSummary>& summaries);

}  // namespace miscluster
