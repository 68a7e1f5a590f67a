#include "miscluster/kmodes.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "miscluster/error.hpp"

namespace miscluster {

namespace {

using Mode = std::vector<uint32_t>;  // one category index per attribute

int hamming(const CategoricalDataset& ds, uint32_t row, const Mode& mode) {
    int d = 0;
    for (std::size_t a = 0; a < ds.n_attributes(); ++a) {
        if (ds.attributes[a].values[row] != mode[a]) ++d;
    }
    return d;
}

// Most frequent category per attribute within the member rows; ties break
// toward the lowest category index.
Mode compute_mode(const CategoricalDataset& ds, const std::vector<uint32_t>& members) {
    Mode mode(ds.n_attributes(), 0);
    for (std::size_t a = 0; a < ds.n_attributes(); ++a) {
        const auto& col = ds.attributes[a];
        std::vector<int64_t> counts(col.domain_size(), 0);
        for (uint32_t row : members) ++counts[col.values[row]];
        mode[a] = static_cast<uint32_t>(
            std::max_element(counts.begin(), counts.end()) - counts.begin());
    }
    return mode;
}

struct Run {
    std::vector<uint32_t> assignment;
    int64_t cost = std::numeric_limits<int64_t>::max();
};

Run single_run(const CategoricalDataset& ds, std::size_t k, std::mt19937_64& rng,
               std::size_t max_iter) {
    const std::size_t n = ds.n_rows;

    // Huang-style init: k distinct rows as initial modes.
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng() % (n - i));
        std::swap(order[i], order[j]);
    }
    std::vector<Mode> modes(k);
    for (std::size_t c = 0; c < k; ++c) {
        modes[c].resize(ds.n_attributes());
        for (std::size_t a = 0; a < ds.n_attributes(); ++a) {
            modes[c][a] = ds.attributes[a].values[order[c]];
        }
    }

    Run run;
    run.assignment.assign(n, 0);
    std::vector<uint32_t> previous;

    for (std::size_t iter = 0; iter < max_iter; ++iter) {
        // Assign every row to the nearest mode; ties go to the lowest cluster.
        int64_t cost = 0;
        for (uint32_t row = 0; row < n; ++row) {
            int best_d = std::numeric_limits<int>::max();
            uint32_t best_c = 0;
            for (std::size_t c = 0; c < k; ++c) {
                const int d = hamming(ds, row, modes[c]);
                if (d < best_d) {
                    best_d = d;
                    best_c = static_cast<uint32_t>(c);
                }
            }
            run.assignment[row] = best_c;
            cost += best_d;
        }
        run.cost = cost;

        std::vector<std::vector<uint32_t>> members(k);
        for (uint32_t row = 0; row < n; ++row) members[run.assignment[row]].push_back(row);

        // An emptied cluster is reseeded with the row farthest from its own
        // mode; farthest-first keeps the repair deterministic.
        for (std::size_t c = 0; c < k; ++c) {
            if (!members[c].empty()) continue;
            int worst_d = -1;
            uint32_t worst_row = 0;
            for (uint32_t row = 0; row < n; ++row) {
                if (members[run.assignment[row]].size() <= 1) continue;
                const int d = hamming(ds, row, modes[run.assignment[row]]);
                if (d > worst_d) {
                    worst_d = d;
                    worst_row = row;
                }
            }
            auto& from = members[run.assignment[worst_row]];
            from.erase(std::find(from.begin(), from.end(), worst_row));
            members[c].push_back(worst_row);
            run.assignment[worst_row] = static_cast<uint32_t>(c);
        }

        for (std::size_t c = 0; c < k; ++c) {
            if (!members[c].empty()) modes[c] = compute_mode(ds, members[c]);
        }

        if (run.assignment == previous) break;
        previous = run.assignment;
    }

    // Final cost against the converged modes.
    int64_t cost = 0;
    for (uint32_t row = 0; row < n; ++row) cost += hamming(ds, row, modes[run.assignment[row]]);
    run.cost = cost;
    return run;
}

}  // namespace

ClusteringResult kmodes_cluster(const CategoricalDataset& ds, std::size_t k, uint64_t seed,
                                std::size_t n_init) {
    ds.validate();
    if (k == 0) throw InputError("kmodes: k must be positive");
    if (k > ds.n_rows) {
        throw InputError("kmodes: k=" + std::to_string(k) + " exceeds " +
                         std::to_string(ds.n_rows) + " rows");
    }
    if (n_init == 0) throw InputError("kmodes: n_init must be positive");

    std::mt19937_64 rng(seed);
    Run best;
    for (std::size_t i = 0; i < n_init; ++i) {
        Run run = single_run(ds, k, rng, 100);
        if (run.cost < best.cost) best = std::move(run);
    }

    ClusteringResult result;
    result.algorithm = "kmodes";
    result.config.mode = ClusterMode::FixedK;
    result.config.k = k;
    result.clusters.assign(k, SampleSet{&ds, {}});
    for (uint32_t row = 0; row < ds.n_rows; ++row) {
        result.clusters[best.assignment[row]].rows.push_back(row);
    }
    return result;
}

int64_t hamming_mode_cost(const CategoricalDataset& ds, const ClusteringResult& result) {
    int64_t cost = 0;
    for (const auto& cluster : result.clusters) {
        if (cluster.empty()) continue;
        const Mode mode = compute_mode(ds, cluster.rows);
        for (uint32_t row : cluster.rows) cost += hamming(ds, row, mode);
    }
    return cost;
}

}  // namespace miscluster
