#pragma once

#include <cstdint>

#include "miscluster/dataset.hpp"
#include "miscluster/engine.hpp"

namespace miscluster {

// Classic k-modes baseline: Hamming dissimilarity, per-cluster column modes,
// random distinct rows as initial modes, best-of-n_init restarts by
// within-cluster cost. Deterministic for a fixed seed. Returned in the common
// result shape with no split records and a baseline marker.
ClusteringResult kmodes_cluster(const CategoricalDataset& ds, std::size_t k, uint64_t seed,
                                std::size_t n_init);

// Total Hamming distance of every row to its cluster's column modes; the cost
// k-modes minimizes, recomputable for any clustering.
int64_t hamming_mode_cost(const CategoricalDataset& ds, const ClusteringResult& result);

}  // namespace miscluster
