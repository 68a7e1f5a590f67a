#include "miscluster/result_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "miscluster/error.hpp"

namespace miscluster {

namespace {

using ordered_json = nlohmann::ordered_json;

// Scores are stored to nine decimal places.
double round9(double x) { return std::round(x * 1e9) / 1e9; }

std::string mode_name(const EngineConfig& config) {
    return config.mode == ClusterMode::Auto ? "auto" : "fixed-k";
}

}  // namespace

std::string result_to_text(const CategoricalDataset& ds, const ClusteringResult& result) {
    ordered_json doc;
    doc["dataset"] = ds.name;
    doc["n_rows"] = ds.n_rows;
    doc["algorithm"] = result.algorithm;
    doc["config"] = {{"mode", mode_name(result.config)},
                     {"k", result.config.k},
                     {"theta", result.config.auto_stop_ratio},
                     {"min_cluster_fraction", result.config.min_cluster_fraction}};
    doc["shortfall"] = result.shortfall;

    doc["splits"] = ordered_json::array();
    for (std::size_t s = 0; s < result.splits.size(); ++s) {
        const SplitRecord& split = result.splits[s];
        const auto& col = ds.attributes.at(split.significant_attribute);
        ordered_json js;
        js["step"] = s;
        js["attribute"] = col.name;
        js["category"] = col.categories.at(split.chosen_category);
        js["working_entropy"] = round9(split.working_entropy);
        ordered_json mis = ordered_json::object();
        for (const auto& [attr, score] : split.mis_scores) {
            mis[ds.attributes.at(attr).name] = round9(score);
        }
        js["mis_scores"] = std::move(mis);
        ordered_json ents = ordered_json::object();
        for (const auto& [cat, h] : split.partition_entropies) {
            ents[col.categories.at(cat)] = round9(h);
        }
        js["partition_entropies"] = std::move(ents);
        doc["splits"].push_back(std::move(js));
    }

    doc["clusters"] = ordered_json::array();
    for (std::size_t c = 0; c < result.clusters.size(); ++c) {
        ordered_json jc;
        jc["index"] = c;
        jc["size"] = result.clusters[c].size();
        jc["rows"] = result.clusters[c].rows;
        doc["clusters"].push_back(std::move(jc));
    }
    return doc.dump(2) + "\n";
}

void save_result(const CategoricalDataset& ds, const ClusteringResult& result,
                 const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write result to '" + path + "'");
    out << result_to_text(ds, result);
    if (!out) throw InputError("failed while writing '" + path + "'");
}

ClusteringResult result_from_text(const CategoricalDataset& ds, const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("result document: ") + e.what());
    }

    ClusteringResult result;
    try {
        if (doc.at("n_rows").get<std::size_t>() != ds.n_rows) {
            throw InputError("result document was produced from a dataset with " +
                             std::to_string(doc["n_rows"].get<std::size_t>()) +
                             " rows, this dataset has " + std::to_string(ds.n_rows));
        }
        result.algorithm = doc.at("algorithm").get<std::string>();
        const auto& jc = doc.at("config");
        result.config.mode =
            jc.at("mode").get<std::string>() == "auto" ? ClusterMode::Auto : ClusterMode::FixedK;
        result.config.k = jc.at("k").get<std::size_t>();
        result.config.auto_stop_ratio = jc.at("theta").get<double>();
        result.config.min_cluster_fraction = jc.at("min_cluster_fraction").get<double>();
        result.shortfall = doc.at("shortfall").get<bool>();

        for (const auto& js : doc.at("splits")) {
            SplitRecord split;
            const std::string attr_name = js.at("attribute").get<std::string>();
            const int attr = ds.attribute_index(attr_name);
            if (attr < 0) throw InputError("result references unknown attribute '" + attr_name + "'");
            split.significant_attribute = static_cast<std::size_t>(attr);
            const auto& col = ds.attributes[split.significant_attribute];

            auto category_index = [&](const std::string& cat) -> uint32_t {
                for (std::size_t c = 0; c < col.categories.size(); ++c) {
                    if (col.categories[c] == cat) return static_cast<uint32_t>(c);
                }
                throw InputError("result references unknown category '" + cat + "' of '" +
                                 attr_name + "'");
            };
            split.chosen_category = category_index(js.at("category").get<std::string>());
            split.working_entropy = js.at("working_entropy").get<double>();
            // Score vectors are diagnostics; a reader working from a narrower
            // attribute frame (say, labels only) may not know every name.
            for (const auto& [name, score] : js.at("mis_scores").items()) {
                const int a = ds.attribute_index(name);
                if (a >= 0) {
                    split.mis_scores.emplace_back(static_cast<std::size_t>(a), score.get<double>());
                }
            }
            for (const auto& [cat, h] : js.at("partition_entropies").items()) {
                split.partition_entropies.emplace_back(category_index(cat), h.get<double>());
            }
            result.splits.push_back(std::move(split));
        }

        for (const auto& cj : doc.at("clusters")) {
            SampleSet cluster;
            cluster.dataset = &ds;
            cluster.rows = cj.at("rows").get<std::vector<uint32_t>>();
            for (uint32_t row : cluster.rows) {
                if (row >= ds.n_rows) {
                    throw InputError("result contains out-of-range row index " +
                                     std::to_string(row));
                }
            }
            result.clusters.push_back(std::move(cluster));
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("result document: ") + e.what());
    }
    if (result.clusters.empty()) throw InputError("result document has no clusters");
    return result;
}

ClusteringResult load_result(const CategoricalDataset& ds, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open result '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return result_from_text(ds, buf.str());
}

}  // namespace miscluster
