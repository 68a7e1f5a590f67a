#include "miscluster/dataset.hpp"

#include <numeric>
#include <unordered_set>

#include "miscluster/error.hpp"

namespace miscluster {

int CategoricalDataset::attribute_index(std::string_view attr_name) const {
    for (std::size_t i = 0; i < attributes.size(); ++i) {
        if (attributes[i].name == attr_name) return static_cast<int>(i);
    }
    return -1;
}

void CategoricalDataset::validate() const {
    for (const auto& col : attributes) {
        if (col.values.size() != n_rows) {
            throw InputError("attribute '" + col.name + "' has " +
                             std::to_string(col.values.size()) + " values, expected " +
                             std::to_string(n_rows));
        }
        if (col.categories.empty()) {
            throw InputError("attribute '" + col.name + "' has an empty category dictionary");
        }
        std::unordered_set<std::string> seen;
        for (const auto& cat : col.categories) {
            if (!seen.insert(cat).second) {
                throw InputError("attribute '" + col.name + "' has duplicate category '" + cat + "'");
            }
        }
        for (uint32_t v : col.values) {
            if (v >= col.categories.size()) {
                throw InputError("attribute '" + col.name + "' has out-of-range value index " +
                                 std::to_string(v));
            }
        }
        if (col.missing_index && *col.missing_index >= col.categories.size()) {
            throw InputError("attribute '" + col.name + "' has out-of-range missing_index");
        }
    }
    if (labels) {
        if (labels->size() != n_rows) {
            throw InputError("label column has " + std::to_string(labels->size()) +
                             " entries, expected " + std::to_string(n_rows));
        }
        for (uint32_t l : *labels) {
            if (l >= class_names.size()) {
                throw InputError("label value " + std::to_string(l) +
                                 " exceeds the class dictionary");
            }
        }
    }
}

SampleSet SampleSet::whole(const CategoricalDataset& ds) {
    SampleSet s;
    s.dataset = &ds;
    s.rows.resize(ds.n_rows);
    std::iota(s.rows.begin(), s.rows.end(), 0u);
    return s;
}

}  // namespace miscluster
