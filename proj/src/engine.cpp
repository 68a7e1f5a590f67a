#include "miscluster/engine.hpp"

#include <algorithm>
#include <limits>

#include "miscluster/error.hpp"
#include "miscluster/info.hpp"
#include "miscluster/parallel.hpp"

namespace miscluster {

namespace {

struct StepScores {
    std::vector<std::pair<std::size_t, double>> mis;  // per active attribute
    int best = -1;                                    // -1: unsplittable
};

// MIS for every active attribute over `working`. The pairwise MI fan-out is
// the hot loop; pairs are computed independently and gathered in a canonical
// order, so results are identical for any worker count.
StepScores compute_step_scores(const SampleSet& working, const std::vector<std::size_t>& active,
                               std::size_t threads) {
    const std::size_t m = active.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(m * (m - 1) / 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    }

    std::vector<double> pair_mi(pairs.size(), 0.0);
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        pair_mi[p] = mutual_information(working, active[pairs[p].first], active[pairs[p].second]);
    });

    std::vector<double> mi_sum(m, 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        mi_sum[pairs[p].first] += pair_mi[p];
        mi_sum[pairs[p].second] += pair_mi[p];
    }

    StepScores out;
    out.mis.reserve(m);
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t l = realized_categories(working, active[i]);
        const double score = mi_sum[i] / static_cast<double>(l);
        out.mis.emplace_back(active[i], score);
        if (l < 2) continue;  // constant within the working set: defines no split
        if (score > best_score) {
            best_score = score;
            out.best = static_cast<int>(i);
        }
    }
    return out;
}

}  // namespace

std::size_t ClusteringResult::total_rows() const {
    std::size_t n = 0;
    for (const auto& c : clusters) n += c.size();
    return n;
}

std::vector<uint32_t> ClusteringResult::assignments() const {
    std::vector<uint32_t> out(total_rows(), 0);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
        for (uint32_t row : clusters[c].rows) out[row] = static_cast<uint32_t>(c);
    }
    return out;
}

std::size_t select_significant_attribute(const SampleSet& working,
                                         const std::vector<std::size_t>& active,
                                         std::size_t threads) {
    if (working.empty()) throw InputError("select_significant_attribute: empty working set");
    if (active.size() < 2) {
        throw AlgorithmError("select_significant_attribute: need at least 2 active attributes");
    }
    const StepScores scores = compute_step_scores(working, active, threads);
    if (scores.best < 0) {
        throw AlgorithmError("unsplittable working set: every active attribute is constant across " +
                             std::to_string(working.size()) + " rows");
    }
    return active[static_cast<std::size_t>(scores.best)];
}

Extraction extract_min_entropy_partition(const SampleSet& working, std::size_t attr,
                                         const std::vector<std::size_t>& active) {
    if (working.empty()) throw InputError("extract_min_entropy_partition: empty working set");
    const auto& col = working.dataset->attributes.at(attr);

    std::vector<std::vector<uint32_t>> partitions(col.domain_size());
    for (uint32_t row : working.rows) partitions[col.values[row]].push_back(row);

    Extraction ex;
    ex.record.significant_attribute = attr;
    double best = std::numeric_limits<double>::infinity();
    int best_cat = -1;
    std::size_t realized = 0;
    for (std::size_t c = 0; c < partitions.size(); ++c) {
        if (partitions[c].empty()) continue;
        ++realized;
        SampleSet part{working.dataset, partitions[c]};
        const double h = partition_entropy(part, active);
        ex.record.partition_entropies.emplace_back(static_cast<uint32_t>(c), h);
        if (h < best) {
            best = h;
            best_cat = static_cast<int>(c);
        }
    }
    if (realized < 2) {
        throw AlgorithmError("attribute '" + col.name + "' is constant within the working set");
    }

    ex.record.chosen_category = static_cast<uint32_t>(best_cat);
    ex.cluster.dataset = working.dataset;
    ex.cluster.rows = std::move(partitions[static_cast<std::size_t>(best_cat)]);
    ex.residual.dataset = working.dataset;
    ex.residual.rows.reserve(working.size() - ex.cluster.size());
    for (uint32_t row : working.rows) {
        if (col.values[row] != ex.record.chosen_category) ex.residual.rows.push_back(row);
    }
    return ex;
}

ClusteringResult cluster(const CategoricalDataset& ds, const EngineConfig& config) {
    ds.validate();
    if (ds.n_rows < 2) throw InputError("cluster: need at least 2 rows");
    if (ds.n_attributes() < 2) throw InputError("cluster: need at least 2 attributes");
    if (config.mode == ClusterMode::FixedK && config.k < 2) {
        throw InputError("cluster: fixed-k mode needs k >= 2");
    }
    if (config.mode == ClusterMode::Auto && !(config.auto_stop_ratio > 0.0)) {
        throw InputError("cluster: auto stopping ratio must be positive");
    }

    const std::size_t threads = resolve_thread_count(config.threads);
    std::vector<std::size_t> active(ds.n_attributes());
    for (std::size_t a = 0; a < active.size(); ++a) active[a] = a;

    ClusteringResult result;
    result.config = config;
    result.algorithm = config.mode == ClusterMode::Auto ? "mis-auto" : "mis";

    SampleSet working = SampleSet::whole(ds);
    while (true) {
        if (config.mode == ClusterMode::FixedK && result.splits.size() + 1 >= config.k) break;

        const StepScores scores = compute_step_scores(working, active, threads);
        if (scores.best < 0) {
            if (config.mode == ClusterMode::FixedK) result.shortfall = true;
            break;
        }
        const std::size_t attr = active[static_cast<std::size_t>(scores.best)];
        const double working_entropy = partition_entropy(working, active);

        Extraction ex = extract_min_entropy_partition(working, attr, active);
        ex.record.mis_scores = scores.mis;
        ex.record.working_entropy = working_entropy;

        if (config.mode == ClusterMode::Auto) {
            double min_part = std::numeric_limits<double>::infinity();
            for (const auto& [cat, h] : ex.record.partition_entropies) min_part = std::min(min_part, h);
            // Peeling the best partition no longer meaningfully reduces disorder.
            if (working_entropy <= 0.0 || min_part / working_entropy > config.auto_stop_ratio) break;
        }

        result.clusters.push_back(std::move(ex.cluster));
        result.splits.push_back(std::move(ex.record));
        working = std::move(ex.residual);

        if (config.mode == ClusterMode::Auto && config.min_cluster_fraction > 0.0 &&
            static_cast<double>(working.size()) <
                config.min_cluster_fraction * static_cast<double>(ds.n_rows)) {
            break;
        }
    }
    result.clusters.push_back(std::move(working));
    return result;
}

std::size_t assign(const CategoricalDataset& ds, const ClusteringResult& result,
                   const std::vector<std::string>& row_tokens) {
    if (row_tokens.size() != ds.n_attributes()) {
        throw InputError("assign: row has " + std::to_string(row_tokens.size()) +
                         " values, expected " + std::to_string(ds.n_attributes()));
    }
    for (std::size_t s = 0; s < result.splits.size(); ++s) {
        const SplitRecord& split = result.splits[s];
        const auto& col = ds.attributes[split.significant_attribute];
        if (row_tokens[split.significant_attribute] == col.categories[split.chosen_category]) {
            return s;
        }
    }
    return result.clusters.size() - 1;
}

}  // namespace miscluster
