#pragma once

#include <iosfwd>
#include <string>

#include "miscluster/dataset.hpp"
#include "miscluster/engine.hpp"

namespace miscluster {

// Serializes a clustering result as a structured text document: config echo,
// per-step split records with attribute/category names and all scores to nine
// decimal places, and per-cluster row indices. Output is byte-stable for a
// given result.
std::string result_to_text(const CategoricalDataset& ds, const ClusteringResult& result);
void save_result(const CategoricalDataset& ds, const ClusteringResult& result,
                 const std::string& path);

// Parses a result document back against the dataset it was produced from.
// Attribute and category names are resolved to indices; structural mismatches
// raise InputError.
ClusteringResult load_result(const CategoricalDataset& ds, const std::string& path);
ClusteringResult result_from_text(const CategoricalDataset& ds, const std::string& text);

}  // namespace miscluster
