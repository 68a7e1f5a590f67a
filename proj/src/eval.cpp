#include "miscluster/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "miscluster/error.hpp"
#include "miscluster/kmodes.hpp"
#include "miscluster/parallel.hpp"

namespace miscluster {

double purity(const ClusteringResult& result, const std::vector<uint32_t>& labels) {
    const std::size_t n = result.total_rows();
    if (labels.size() != n) {
        throw InputError("purity: " + std::to_string(labels.size()) + " labels for " +
                         std::to_string(n) + " clustered rows");
    }
    uint32_t n_classes = 0;
    for (uint32_t l : labels) n_classes = std::max(n_classes, l + 1);

    int64_t majority_sum = 0;
    std::vector<int64_t> counts(n_classes, 0);
    for (const auto& cluster : result.clusters) {
        std::fill(counts.begin(), counts.end(), 0);
        for (uint32_t row : cluster.rows) {
            if (row >= labels.size()) {
                throw InputError("purity: row index " + std::to_string(row) + " out of range");
            }
            ++counts[labels[row]];
        }
        majority_sum += counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
    }
    return static_cast<double>(majority_sum) / static_cast<double>(n);
}

std::optional<std::string> file_fnv1a64(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    uint64_t hash = 1469598103934665603ull;
    char buf[1 << 14];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (got < static_cast<std::streamsize>(sizeof(buf))) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(hex);
}

const std::vector<PublishedRow>& published_reference_purity() {
    static const std::vector<PublishedRow> rows = {
        {"MGR", {{"zoo", 0.930}, {"vote", 0.827}, {"cancer", 0.864}, {"mushroom", 0.677}, {"balance", 0.635}, {"chess", 0.533}}},
        {"MMR", {{"zoo", 0.911}, {"vote", 0.687}, {"cancer", 0.669}, {"mushroom", 0.518}, {"balance", 0.635}, {"chess", 0.523}}},
        {"K-MODES", {{"zoo", 0.860}, {"vote", 0.852}, {"cancer", 0.651}, {"mushroom", 0.560}, {"balance", 0.587}, {"chess", 0.503}}},
        {"k-ANMI", {{"zoo", 0.733}, {"vote", 0.869}, {"cancer", 0.978}, {"mushroom", 0.587}, {"balance", 0.506}, {"chess", 0.547}}},
        {"G-ANMI", {{"zoo", 0.874}, {"vote", 0.871}, {"cancer", 0.966}, {"mushroom", 0.547}, {"balance", 0.518}, {"chess", 0.543}}},
        {"COOLCAT", {{"zoo", 0.785}, {"vote", 0.839}, {"cancer", 0.650}, {"mushroom", 0.531}, {"balance", 0.506}, {"chess", 0.533}}},
        {"MIS", {{"zoo", 0.891}, {"vote", 0.828}, {"cancer", 0.882}, {"mushroom", 0.743}, {"balance", 0.635}, {"chess", 0.533}}},
        {"MIS-auto", {{"zoo", 0.891}, {"vote", 0.949}, {"cancer", 0.927}, {"mushroom", 0.828}, {"balance", 0.635}, {"chess", 0.558}}},
    };
    return rows;
}

BenchmarkReport run_benchmark(const Manifest& manifest, const BenchmarkOptions& options) {
    BenchmarkReport report;

    // Serial pre-pass: load and shape-check each dataset once. The loaded
    // datasets are immutable, so the algorithm rows can share them.
    struct Loaded {
        const ManifestEntry* entry = nullptr;
        std::optional<CategoricalDataset> ds;
        std::string error;
    };
    std::vector<Loaded> loaded;
    loaded.reserve(manifest.datasets.size());
    for (const auto& entry : manifest.datasets) {
        Loaded l;
        l.entry = &entry;
        const auto path = data_path(manifest, entry);
        if (auto hash = file_fnv1a64(path)) report.manifest_hashes[entry.name] = *hash;
        try {
            l.ds = load_delimited(path, ingest_options(entry));
            const CheckReport check = dataset_manifest_check(*l.ds, entry);
            for (const auto& m : check.mismatches) report.check_failures.push_back(m);
            if (!l.ds->labels) l.error = entry.name + ": manifest declares no class column";
        } catch (const std::exception& e) {
            l.error = e.what();
        }
        loaded.push_back(std::move(l));
    }

    struct Task {
        const Loaded* source;
        std::string algorithm;
    };
    std::vector<Task> tasks;
    for (const auto& l : loaded) {
        for (const auto& algo : options.algorithms) tasks.push_back({&l, algo});
    }
    report.rows.resize(tasks.size());

    const std::size_t threads = resolve_thread_count(options.threads);
    parallel_for(tasks.size(), threads, [&](std::size_t t) {
        const Task& task = tasks[t];
        BenchmarkRow row;
        row.dataset = task.source->entry->name;
        row.algorithm = task.algorithm;
        try {
            if (!task.source->error.empty()) throw InputError(task.source->error);
            const CategoricalDataset& ds = *task.source->ds;
            const std::size_t k = ds.class_names.size();

            const auto started = std::chrono::steady_clock::now();
            ClusteringResult result;
            if (task.algorithm == "mis") {
                EngineConfig config;
                config.mode = ClusterMode::FixedK;
                config.k = k;
                config.threads = 1;  // rows already run in parallel
                result = cluster(ds, config);
            } else if (task.algorithm == "mis-auto") {
                EngineConfig config;
                config.mode = ClusterMode::Auto;
                config.auto_stop_ratio = options.theta;
                config.threads = 1;
                result = cluster(ds, config);
            } else if (task.algorithm == "kmodes") {
                result = kmodes_cluster(ds, k, options.kmodes_seed, options.kmodes_n_init);
            } else {
                throw InputError("unknown algorithm '" + task.algorithm + "'");
            }
            const auto finished = std::chrono::steady_clock::now();

            row.purity = purity(result, *ds.labels);
            row.clusters = result.clusters.size();
            row.millis = std::chrono::duration<double, std::milli>(finished - started).count();
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        report.rows[t] = std::move(row);
    });
    return report;
}

std::string render_benchmark_text(const BenchmarkReport& report) {
    std::ostringstream out;
    char line[256];
    out << "dataset      algorithm   purity  clusters     ms\n";
    for (const auto& row : report.rows) {
        if (!row.error.empty()) {
            std::snprintf(line, sizeof(line), "%-12s %-10s  ERROR: %s\n", row.dataset.c_str(),
                          row.algorithm.c_str(), row.error.c_str());
        } else {
            std::snprintf(line, sizeof(line), "%-12s %-10s  %6.4f  %8zu %6.0f\n",
                          row.dataset.c_str(), row.algorithm.c_str(), row.purity.value_or(0.0),
                          row.clusters, row.millis);
        }
        out << line;
    }
    if (!report.check_failures.empty()) {
        out << "\nmanifest check failures:\n";
        for (const auto& f : report.check_failures) out << "  " << f << '\n';
    }
    out << "\npublished reference purity:\n";
    out << "algorithm    zoo    vote   cancer mushroom balance chess\n";
    for (const auto& pub : published_reference_purity()) {
        std::snprintf(line, sizeof(line), "%-10s", pub.algorithm.c_str());
        out << line;
        for (const char* name : {"zoo", "vote", "cancer", "mushroom", "balance", "chess"}) {
            auto it = pub.purity.find(name);
            if (it == pub.purity.end()) {
                out << "      -";
            } else {
                std::snprintf(line, sizeof(line), "  %5.3f", it->second);
                out << line;
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string render_benchmark_json(const BenchmarkReport& report) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json jr;
        jr["dataset"] = row.dataset;
        jr["algorithm"] = row.algorithm;
        if (row.error.empty()) {
            jr["purity"] = std::round(*row.purity * 1e6) / 1e6;
            jr["clusters"] = row.clusters;
            jr["millis"] = std::round(row.millis * 1e3) / 1e3;
        } else {
            jr["error"] = row.error;
        }
        doc["rows"].push_back(std::move(jr));
    }
    doc["manifest_hashes"] = report.manifest_hashes;
    doc["check_failures"] = report.check_failures;
    doc["published"] = nlohmann::ordered_json::array();
    for (const auto& pub : published_reference_purity()) {
        nlohmann::ordered_json jp;
        jp["algorithm"] = pub.algorithm;
        jp["purity"] = pub.purity;
        doc["published"].push_back(std::move(jp));
    }
    return doc.dump(2) + "\n";
}

}  // namespace miscluster
