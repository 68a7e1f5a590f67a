#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace miscluster {

// Reserved category absorbing every raw missing token.
inline constexpr std::string_view kMissingCategory = "?";

// One categorical column: a dictionary of category strings (in first-appearance
// order) and one dictionary index per row.
struct AttributeColumn {
    std::string name;
    std::vector<std::string> categories;
    std::vector<uint32_t> values;
    std::optional<uint32_t> missing_index;

    std::size_t domain_size() const { return categories.size(); }
};

// Column-oriented table of integer-encoded categorical data, immutable after
// construction. Labels are kept out of `attributes` and used only by evaluation.
struct CategoricalDataset {
    std::string name;
    std::size_t n_rows = 0;
    std::vector<AttributeColumn> attributes;
    std::vector<std::string> class_names;
    std::optional<std::vector<uint32_t>> labels;

    std::size_t n_attributes() const { return attributes.size(); }

    // Index of the attribute with the given name, or -1.
    int attribute_index(std::string_view attr_name) const;

    // Throws InputError if any structural invariant is broken.
    void validate() const;
};

// A subset of dataset rows (a working cluster or partition). Row indices are
// unique and kept sorted ascending.
struct SampleSet {
    const CategoricalDataset* dataset = nullptr;
    std::vector<uint32_t> rows;

    static SampleSet whole(const CategoricalDataset& ds);

    std::size_t size() const { return rows.size(); }
    bool empty() const { return rows.empty(); }
};

}  // namespace miscluster
