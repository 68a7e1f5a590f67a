#include "miscluster/manifest.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "miscluster/error.hpp"

namespace miscluster {

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open manifest '" + path + "'");

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("manifest '" + path + "': " + e.what());
    }

    Manifest m;
    m.base_dir = std::filesystem::path(path).parent_path().string();
    if (!doc.contains("datasets") || !doc["datasets"].is_array()) {
        throw InputError("manifest '" + path + "': missing 'datasets' array");
    }
    for (const auto& d : doc["datasets"]) {
        ManifestEntry e;
        try {
            e.name = d.at("name").get<std::string>();
            e.file = d.at("file").get<std::string>();
            if (d.contains("delimiter")) {
                const auto s = d["delimiter"].get<std::string>();
                if (s.size() != 1) throw InputError("delimiter must be a single character");
                e.delimiter = s[0];
            }
            if (d.contains("header")) e.has_header = d["header"].get<bool>();
            if (d.contains("class_col") && !d["class_col"].is_null()) {
                e.class_col = d["class_col"].get<std::size_t>();
            }
            if (d.contains("ignore_cols")) {
                e.ignore_cols = d["ignore_cols"].get<std::vector<std::size_t>>();
            }
            if (d.contains("columns")) {
                e.column_names = d["columns"].get<std::vector<std::string>>();
            }
            e.expect_rows = d.at("rows").get<std::size_t>();
            e.expect_attributes = d.at("attributes").get<std::size_t>();
            e.expect_classes = d.at("classes").get<std::size_t>();
            if (d.contains("url")) e.url = d["url"].get<std::string>();
        } catch (const nlohmann::json::exception& ex) {
            throw InputError("manifest '" + path + "', dataset '" + e.name + "': " + ex.what());
        }
        m.datasets.push_back(std::move(e));
    }
    return m;
}

IngestOptions ingest_options(const ManifestEntry& entry) {
    IngestOptions opt;
    opt.delimiter = entry.delimiter;
    opt.has_header = entry.has_header;
    opt.class_col = entry.class_col;
    opt.ignore_cols = entry.ignore_cols;
    opt.column_names = entry.column_names;
    opt.dataset_name = entry.name;
    return opt;
}

std::string data_path(const Manifest& manifest, const ManifestEntry& entry) {
    std::filesystem::path p(entry.file);
    if (p.is_absolute() || manifest.base_dir.empty()) return entry.file;
    return (std::filesystem::path(manifest.base_dir) / p).string();
}

CheckReport dataset_manifest_check(const CategoricalDataset& ds, const ManifestEntry& entry) {
    CheckReport report;
    auto mismatch = [&](const std::string& what, std::size_t got, std::size_t want) {
        report.passed = false;
        report.mismatches.push_back(entry.name + ": " + what + " is " + std::to_string(got) +
                                    ", manifest declares " + std::to_string(want));
    };
    if (ds.n_rows != entry.expect_rows) mismatch("row count", ds.n_rows, entry.expect_rows);
    if (ds.n_attributes() != entry.expect_attributes) {
        mismatch("attribute count", ds.n_attributes(), entry.expect_attributes);
    }
    if (entry.expect_classes > 0) {
        if (!ds.labels) {
            report.passed = false;
            report.mismatches.push_back(entry.name + ": no class column loaded, manifest declares " +
                                        std::to_string(entry.expect_classes) + " classes");
        } else if (ds.class_names.size() != entry.expect_classes) {
            mismatch("class count", ds.class_names.size(), entry.expect_classes);
        }
    }
    return report;
}

}  // namespace miscluster
