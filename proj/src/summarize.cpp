#include "miscluster/summarize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "miscluster/error.hpp"
#include "miscluster/info.hpp"

namespace miscluster {

namespace {

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, value);
    return buf;
}

std::string pct(double share) { return fmt("%.1f%%", share * 100.0); }

}  // namespace

ClusterSummary summarize_cluster(const CategoricalDataset& ds, const SampleSet& cluster,
                                 std::size_t cluster_index) {
    if (cluster.empty()) throw InputError("summarize_cluster: empty cluster");
    for (uint32_t row : cluster.rows) {
        if (row >= ds.n_rows) {
            throw InputError("summarize_cluster: row index " + std::to_string(row) +
                             " out of range");
        }
    }

    const SampleSet all_rows = SampleSet::whole(ds);
    ClusterSummary summary;
    summary.cluster_index = cluster_index;
    summary.cluster_size = cluster.size();
    summary.size_fraction = static_cast<double>(cluster.size()) / static_cast<double>(ds.n_rows);
    summary.category_deltas.resize(ds.n_attributes());

    for (std::size_t a = 0; a < ds.n_attributes(); ++a) {
        const std::vector<double> q = category_distribution(cluster, a);
        const std::vector<double> p = category_distribution(all_rows, a);
        summary.attribute_divergences.push_back({a, kl_divergence(q, p)});
        auto& deltas = summary.category_deltas[a];
        deltas.reserve(q.size());
        for (std::size_t c = 0; c < q.size(); ++c) {
            deltas.push_back({static_cast<uint32_t>(c), q[c], p[c], q[c] - p[c]});
        }
    }

    std::sort(summary.attribute_divergences.begin(), summary.attribute_divergences.end(),
              [&](const AttributeDivergence& x, const AttributeDivergence& y) {
                  if (x.divergence != y.divergence) return x.divergence > y.divergence;
                  return ds.attributes[x.attribute].name < ds.attributes[y.attribute].name;
              });
    return summary;
}

std::vector<ClusterSummary> summarize_clusters(const CategoricalDataset& ds,
                                               const ClusteringResult& result) {
    std::vector<ClusterSummary> out;
    out.reserve(result.clusters.size());
    for (std::size_t c = 0; c < result.clusters.size(); ++c) {
        out.push_back(summarize_cluster(ds, result.clusters[c], c));
    }
    return out;
}

std::string render_text_report(const CategoricalDataset& ds,
                               const std::vector<ClusterSummary>& summaries,
                               const ReportOptions& options) {
    if (summaries.empty()) throw InputError("render_text_report: no summaries");
    std::ostringstream out;
    for (const auto& summary : summaries) {
        out << "cluster " << summary.cluster_index << "  size " << summary.cluster_size << " ("
            << pct(summary.size_fraction) << " of data)\n";
        const std::size_t shown = std::min(options.top_n, summary.attribute_divergences.size());
        for (std::size_t i = 0; i < shown; ++i) {
            const auto& ad = summary.attribute_divergences[i];
            const auto& col = ds.attributes[ad.attribute];
            out << "  " << col.name << "  divergence " << fmt("%.6f", ad.divergence) << " bits\n";
            // Over-represented categories first.
            std::vector<CategoryDelta> deltas = summary.category_deltas[ad.attribute];
            std::sort(deltas.begin(), deltas.end(),
                      [&](const CategoryDelta& x, const CategoryDelta& y) {
                          if (x.delta != y.delta) return x.delta > y.delta;
                          return col.categories[x.category] < col.categories[y.category];
                      });
            for (const auto& d : deltas) {
                out << "    " << col.categories[d.category] << ": " << pct(d.q) << " (base "
                    << pct(d.p) << ") delta " << (d.delta >= 0 ? "+" : "")
                    << fmt("%.1f", d.delta * 100.0) << "pp\n";
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string render_machine_report(const CategoricalDataset& ds,
                                  const std::vector<ClusterSummary>& summaries) {
    if (summaries.empty()) throw InputError("render_machine_report: no summaries");
    std::ostringstream out;
    out << "cluster,attribute,category,q,p,delta,divergence\n";
    for (const auto& summary : summaries) {
        // Machine output keeps the divergence ranking order.
        for (const auto& ad : summary.attribute_divergences) {
            const auto& col = ds.attributes[ad.attribute];
            for (const auto& d : summary.category_deltas[ad.attribute]) {
                out << summary.cluster_index << ',' << col.name << ','
                    << col.categories[d.category] << ',' << fmt("%.6f", d.q) << ','
                    << fmt("%.6f", d.p) << ',' << fmt("%.6f", d.delta) << ','
                    << fmt("%.6f", ad.divergence) << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace miscluster
