#pragma once

#include <optional>
#include <string>
#include <vector>

#include "miscluster/dataset.hpp"

namespace miscluster {

struct IngestOptions {
    char delimiter = ',';
    bool has_header = false;
    // Raw (pre-exclusion) column index holding the class label, if any.
    std::optional<std::size_t> class_col;
    // Raw column indices dropped entirely (identifiers, row names).
    std::vector<std::size_t> ignore_cols;
    // Raw tokens unified into the reserved "?" category.
    std::vector<std::string> missing_tokens = {"?", ""};
    // Column names used when the file carries no header.
    std::vector<std::string> column_names;
    std::string dataset_name;
};

// Loads a delimited text file into an integer-encoded dataset. Category
// dictionaries are built in first-appearance order; every missing token maps
// to the single reserved "?" category. Fully empty lines are skipped. Rows
// whose field count differs from the first row raise an error naming the line.
CategoricalDataset load_delimited(const std::string& path, const IngestOptions& options);

// Encodes already-tokenized rows; the building block shared by the file loader
// and the synthetic generator. `class_col`/`ignore_cols` in `options` refer to
// indices within each token row.
CategoricalDataset encode_rows(const std::vector<std::vector<std::string>>& rows,
                               const IngestOptions& options);

// Writes attributes (and the label column last, when present) back to
// delimited text. Reloading with matching options reproduces the dataset.
void write_delimited(const CategoricalDataset& ds, const std::string& path, char delimiter,
                     bool write_header);

}  // namespace miscluster
