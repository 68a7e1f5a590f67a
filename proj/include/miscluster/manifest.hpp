#pragma once

#include <optional>
#include <string>
#include <vector>

#include "miscluster/dataset.hpp"
#include "miscluster/ingest.hpp"

namespace miscluster {

// One benchmark dataset: where it lives, how to parse it, and the declared
// shape used for integrity checking.
struct ManifestEntry {
    std::string name;
    std::string file;  // relative to the manifest's directory
    char delimiter = ',';
    bool has_header = false;
    std::optional<std::size_t> class_col;
    std::vector<std::size_t> ignore_cols;
    std::vector<std::string> column_names;
    std::size_t expect_rows = 0;
    std::size_t expect_attributes = 0;
    std::size_t expect_classes = 0;
    std::string url;
};

struct Manifest {
    std::string base_dir;
    std::vector<ManifestEntry> datasets;
};

Manifest load_manifest(const std::string& path);

IngestOptions ingest_options(const ManifestEntry& entry);

// Absolute-ish path of the entry's data file.
std::string data_path(const Manifest& manifest, const ManifestEntry& entry);

struct CheckReport {
    bool passed = true;
    std::vector<std::string> mismatches;
};

// Compares the loaded dataset against the declared row/attribute/class counts.
// Mismatches are report content, not errors.
CheckReport dataset_manifest_check(const CategoricalDataset& ds, const ManifestEntry& entry);

}  // namespace miscluster
