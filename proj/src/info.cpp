#include "miscluster/info.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "miscluster/error.hpp"

namespace miscluster {

namespace {

void require_samples(const SampleSet& samples, const char* op) {
    if (samples.dataset == nullptr) throw InputError(std::string(op) + ": sample set has no dataset");
    if (samples.empty()) throw InputError(std::string(op) + ": empty sample set");
}

void require_attr(const SampleSet& samples, std::size_t attr, const char* op) {
    if (attr >= samples.dataset->n_attributes()) {
        throw InputError(std::string(op) + ": attribute index " + std::to_string(attr) +
                         " out of range");
    }
}

}  // namespace

ContingencyTable contingency_table(const SampleSet& samples, std::size_t attr_a,
                                   std::size_t attr_b) {
    require_samples(samples, "contingency_table");
    require_attr(samples, attr_a, "contingency_table");
    require_attr(samples, attr_b, "contingency_table");

    const auto& col_a = samples.dataset->attributes[attr_a];
    const auto& col_b = samples.dataset->attributes[attr_b];

    ContingencyTable t;
    t.n_a = col_a.domain_size();
    t.n_b = col_b.domain_size();
    t.counts.assign(t.n_a * t.n_b, 0);
    t.a_marginals.assign(t.n_a, 0);
    t.b_marginals.assign(t.n_b, 0);
    for (uint32_t row : samples.rows) {
        const uint32_t va = col_a.values[row];
        const uint32_t vb = col_b.values[row];
        ++t.counts[static_cast<std::size_t>(va) * t.n_b + vb];
        ++t.a_marginals[va];
        ++t.b_marginals[vb];
    }
    t.total = static_cast<int64_t>(samples.size());
    return t;
}

std::size_t realized_categories(const SampleSet& samples, std::size_t attr) {
    require_samples(samples, "realized_categories");
    require_attr(samples, attr, "realized_categories");
    const auto& col = samples.dataset->attributes[attr];
    std::vector<bool> seen(col.domain_size(), false);
    std::size_t n = 0;
    for (uint32_t row : samples.rows) {
        if (!seen[col.values[row]]) {
            seen[col.values[row]] = true;
            ++n;
        }
    }
    return n;
}

std::vector<double> category_distribution(const SampleSet& samples, std::size_t attr) {
    require_samples(samples, "category_distribution");
    require_attr(samples, attr, "category_distribution");
    const auto& col = samples.dataset->attributes[attr];
    std::vector<int64_t> counts(col.domain_size(), 0);
    for (uint32_t row : samples.rows) ++counts[col.values[row]];
    std::vector<double> dist(col.domain_size(), 0.0);
    const double n = static_cast<double>(samples.size());
    for (std::size_t c = 0; c < counts.size(); ++c) {
        dist[c] = static_cast<double>(counts[c]) / n;
    }
    return dist;
}

double entropy(const SampleSet& samples, std::size_t attr) {
    require_samples(samples, "entropy");
    require_attr(samples, attr, "entropy");
    const auto& col = samples.dataset->attributes[attr];
    std::vector<int64_t> counts(col.domain_size(), 0);
    for (uint32_t row : samples.rows) ++counts[col.values[row]];
    const double n = static_cast<double>(samples.size());
    double h = 0.0;
    for (int64_t c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double mutual_information(const SampleSet& samples, std::size_t attr_a, std::size_t attr_b) {
    require_samples(samples, "mutual_information");
    require_attr(samples, attr_a, "mutual_information");
    require_attr(samples, attr_b, "mutual_information");

    // Canonical argument order makes symmetry exact, not just approximate.
    const std::size_t lo = std::min(attr_a, attr_b);
    const std::size_t hi = std::max(attr_a, attr_b);
    const ContingencyTable t = contingency_table(samples, lo, hi);

    const double n = static_cast<double>(t.total);
    double mi = 0.0;
    for (std::size_t s = 0; s < t.n_a; ++s) {
        if (t.a_marginals[s] == 0) continue;
        for (std::size_t u = 0; u < t.n_b; ++u) {
            const int64_t joint = t.at(s, u);
            if (joint == 0) continue;
            const double ratio = (static_cast<double>(joint) * n) /
                                 (static_cast<double>(t.a_marginals[s]) *
                                  static_cast<double>(t.b_marginals[u]));
            mi += (static_cast<double>(joint) / n) * std::log2(ratio);
        }
    }
    return mi;
}

double mis_score(const SampleSet& samples, std::size_t attr,
                 const std::vector<std::size_t>& active) {
    require_samples(samples, "mis_score");
    require_attr(samples, attr, "mis_score");
    if (active.size() < 2) {
        throw AlgorithmError("mis_score: need at least 2 active attributes, got " +
                             std::to_string(active.size()));
    }
    if (std::find(active.begin(), active.end(), attr) == active.end()) {
        throw InputError("mis_score: attribute " + std::to_string(attr) + " not in active set");
    }
    double sum = 0.0;
    for (std::size_t other : active) {
        if (other == attr) continue;
        sum += mutual_information(samples, other, attr);
    }
    const double l = static_cast<double>(realized_categories(samples, attr));
    return sum / l;
}

double partition_entropy(const SampleSet& partition, const std::vector<std::size_t>& active) {
    require_samples(partition, "partition_entropy");
    double h = 0.0;
    for (std::size_t attr : active) h += entropy(partition, attr);
    return h;
}

double kl_divergence(std::span<const double> q, std::span<const double> p) {
    if (q.size() != p.size()) {
        throw InputError("kl_divergence: distributions have different sizes (" +
                         std::to_string(q.size()) + " vs " + std::to_string(p.size()) + ")");
    }
    if (q.empty()) throw InputError("kl_divergence: empty distributions");
    double d = 0.0;
    for (std::size_t x = 0; x < q.size(); ++x) {
        if (q[x] == 0.0) continue;
        if (p[x] == 0.0) {
            throw InputError("kl_divergence: q has mass on category " + std::to_string(x) +
                             " where p is zero");
        }
        d += q[x] * std::log2(q[x] / p[x]);
    }
    return d;
}

}  // namespace miscluster
