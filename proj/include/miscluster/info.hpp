#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "miscluster/dataset.hpp"

namespace miscluster {

// Co-occurrence counts of an ordered attribute pair over a sample set.
// Dimensions follow the global category dictionaries; unrealized categories
// simply hold zero counts. Counts are exact integers, probabilities are formed
// only at the final division.
struct ContingencyTable {
    std::size_t n_a = 0;  // categories of the first attribute
    std::size_t n_b = 0;  // categories of the second attribute
    std::vector<int64_t> counts;  // row-major n_a x n_b
    std::vector<int64_t> a_marginals;
    std::vector<int64_t> b_marginals;
    int64_t total = 0;

    int64_t at(std::size_t a, std::size_t b) const { return counts[a * n_b + b]; }
};

ContingencyTable contingency_table(const SampleSet& samples, std::size_t attr_a,
                                   std::size_t attr_b);

// Number of categories of `attr` actually occurring within `samples`.
std::size_t realized_categories(const SampleSet& samples, std::size_t attr);

// Empirical category distribution of `attr` over `samples`, indexed by the
// global dictionary (unrealized categories get probability 0).
std::vector<double> category_distribution(const SampleSet& samples, std::size_t attr);

// Shannon entropy in bits of the empirical distribution of `attr` restricted
// to `samples`. Zero-probability categories contribute nothing.
double entropy(const SampleSet& samples, std::size_t attr);

// Plug-in mutual information in bits between two attributes over `samples`.
// Exactly symmetric in its arguments; MI(a, a) equals the entropy of a.
double mutual_information(const SampleSet& samples, std::size_t attr_a, std::size_t attr_b);

// Mutual information score of `attr`: the sum of its pairwise MI against every
// other attribute in `active`, divided by the number of categories `attr`
// realizes within `samples`. The division offsets the MI bias toward
// large-domain attributes.
double mis_score(const SampleSet& samples, std::size_t attr,
                 const std::vector<std::size_t>& active);

// Disorder of a partition under the attribute-independence approximation:
// the sum over `active` of per-attribute entropies within `partition`.
double partition_entropy(const SampleSet& partition, const std::vector<std::size_t>& active);

// Kullback-Leibler divergence D(q || p) in bits over a shared category
// dictionary. Terms with q(x) = 0 contribute nothing; q(x) > 0 where p(x) = 0
// is an error naming the offending category index. Identical inputs give an
// exact 0.0.
double kl_divergence(std::span<const double> q, std::span<const double> p);

}  // namespace miscluster
