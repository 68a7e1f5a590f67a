#include "miscluster/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "miscluster/error.hpp"

namespace miscluster {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> out;
    std::string field;
    for (char ch : line) {
        if (ch == delimiter) {
            out.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(ch);
        }
    }
    out.push_back(std::move(field));
    return out;
}

bool is_missing(const std::string& token, const std::vector<std::string>& missing_tokens) {
    return std::find(missing_tokens.begin(), missing_tokens.end(), token) != missing_tokens.end();
}

}  // namespace

CategoricalDataset encode_rows(const std::vector<std::vector<std::string>>& rows,
                               const IngestOptions& options) {
    if (rows.empty()) throw InputError("encode_rows: no data rows");
    const std::size_t n_cols = rows.front().size();
    if (n_cols == 0) throw InputError("encode_rows: rows have no fields");
    if (options.class_col && *options.class_col >= n_cols) {
        throw InputError("class column index " + std::to_string(*options.class_col) +
                         " out of range for " + std::to_string(n_cols) + " columns");
    }
    for (std::size_t ig : options.ignore_cols) {
        if (ig >= n_cols) {
            throw InputError("ignored column index " + std::to_string(ig) + " out of range for " +
                             std::to_string(n_cols) + " columns");
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < n_cols; ++c) {
        if (options.class_col && *options.class_col == c) continue;
        if (std::find(options.ignore_cols.begin(), options.ignore_cols.end(), c) !=
            options.ignore_cols.end()) {
            continue;
        }
        kept.push_back(c);
    }
    if (kept.empty()) throw InputError("encode_rows: no attribute columns left after exclusions");

    CategoricalDataset ds;
    ds.name = options.dataset_name;
    ds.n_rows = rows.size();
    ds.attributes.reserve(kept.size());

    for (std::size_t c : kept) {
        AttributeColumn col;
        col.name = c < options.column_names.size() ? options.column_names[c]
                                                   : "c" + std::to_string(c);
        col.values.reserve(rows.size());
        std::unordered_map<std::string, uint32_t> dict;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != n_cols) {
                throw InputError("row " + std::to_string(r + 1) + " has " +
                                 std::to_string(rows[r].size()) + " fields, expected " +
                                 std::to_string(n_cols));
            }
            const std::string& raw = rows[r][c];
            const bool missing = is_missing(raw, options.missing_tokens);
            const std::string& token = missing ? std::string(kMissingCategory) : raw;
            auto [it, inserted] = dict.emplace(token, static_cast<uint32_t>(col.categories.size()));
            if (inserted) col.categories.push_back(token);
            if (missing) col.missing_index = it->second;
            col.values.push_back(it->second);
        }
        ds.attributes.push_back(std::move(col));
    }

    if (options.class_col) {
        std::vector<uint32_t> labels;
        labels.reserve(rows.size());
        std::unordered_map<std::string, uint32_t> dict;
        for (const auto& row : rows) {
            const std::string& token = row[*options.class_col];
            auto [it, inserted] = dict.emplace(token, static_cast<uint32_t>(ds.class_names.size()));
            if (inserted) ds.class_names.push_back(token);
            labels.push_back(it->second);
        }
        ds.labels = std::move(labels);
    }

    ds.validate();
    return ds;
}

CategoricalDataset load_delimited(const std::string& path, const IngestOptions& options) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header;
    std::string line;
    std::size_t line_no = 0;
    std::size_t expected_fields = 0;
    bool header_pending = options.has_header;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_fields(line, options.delimiter);
        if (header_pending) {
            header = std::move(fields);
            expected_fields = header.size();
            header_pending = false;
            continue;
        }
        if (rows.empty() && expected_fields == 0) expected_fields = fields.size();
        if (fields.size() != expected_fields) {
            throw InputError("'" + path + "' line " + std::to_string(line_no) + ": " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(expected_fields));
        }
        rows.push_back(std::move(fields));
    }
    if (rows.empty()) throw InputError("'" + path + "' contains no data rows");

    IngestOptions effective = options;
    if (!header.empty() && effective.column_names.empty()) effective.column_names = header;
    if (effective.dataset_name.empty()) {
        effective.dataset_name = std::filesystem::path(path).stem().string();
    }
    return encode_rows(rows, effective);
}

void write_delimited(const CategoricalDataset& ds, const std::string& path, char delimiter,
                     bool write_header) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    if (write_header) {
        for (std::size_t a = 0; a < ds.attributes.size(); ++a) {
            if (a) out << delimiter;
            out << ds.attributes[a].name;
        }
        if (ds.labels) out << delimiter << "class";
        out << '\n';
    }
    for (std::size_t r = 0; r < ds.n_rows; ++r) {
        for (std::size_t a = 0; a < ds.attributes.size(); ++a) {
            if (a) out << delimiter;
            const auto& col = ds.attributes[a];
            out << col.categories[col.values[r]];
        }
        if (ds.labels) out << delimiter << ds.class_names[(*ds.labels)[r]];
        out << '\n';
    }
    if (!out) throw InputError("failed while writing '" + path + "'");
}

}  // namespace miscluster
