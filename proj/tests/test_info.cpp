#include <doctest.h>

#include <algorithm>
#include <random>

#include "miscluster/error.hpp"
#include "miscluster/info.hpp"
#include "oracle.hpp"

using namespace miscluster;

namespace {

SampleSet all_rows(const CategoricalDataset& ds) { return SampleSet::whole(ds); }

}  // namespace

TEST_CASE("entropy: uniform binary column over 4 rows is exactly 1 bit") {
    auto ds = oracle::make_dataset({{0, 1, 0, 1}}, 2);
    CHECK(entropy(all_rows(ds), 0) == 1.0);
}

TEST_CASE("entropy: constant column is exactly zero") {
    auto ds = oracle::make_dataset({{1, 1, 1, 1, 1}}, 2);
    CHECK(entropy(all_rows(ds), 0) == 0.0);
}

TEST_CASE("entropy: (3/4, 1/4) distribution") {
    auto ds = oracle::make_dataset({{0, 0, 0, 1}}, 2);
    const double h = entropy(all_rows(ds), 0);
    CHECK(h == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(h == doctest::Approx(oracle::entropy_bits({0, 0, 0, 1})).epsilon(1e-14));
}

TEST_CASE("entropy: empty sample set is an error") {
    auto ds = oracle::make_dataset({{0, 1}}, 2);
    SampleSet empty{&ds, {}};
    CHECK_THROWS_AS(entropy(empty, 0), InputError);
}

TEST_CASE("mutual information: identical uniform binary columns give 1 bit") {
    auto ds = oracle::make_dataset({{0, 1, 0, 1}, {0, 1, 0, 1}}, 2);
    CHECK(mutual_information(all_rows(ds), 0, 1) == 1.0);
    CHECK(mutual_information(all_rows(ds), 0, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mutual information: exactly independent columns give exactly 0") {
    // 4 rows realizing the full product of two uniform binary attributes.
    auto ds = oracle::make_dataset({{0, 0, 1, 1}, {0, 1, 0, 1}}, 2);
    CHECK(mutual_information(all_rows(ds), 0, 1) == 0.0);
}

TEST_CASE("mutual information: pairs (x,p),(x,p),(y,q),(y,r) carry 1 bit") {
    auto ds = oracle::make_dataset({{0, 0, 1, 1}, {0, 0, 1, 2}}, 3);
    const double mi = mutual_information(all_rows(ds), 0, 1);
    CHECK(mi == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mi == doctest::Approx(oracle::mutual_information_bits({0, 0, 1, 1}, {0, 0, 1, 2}))
                    .epsilon(1e-14));
}

TEST_CASE("mutual information: exhaustive agreement with the map oracle") {
    // Every pair of columns over <= 4 rows and 3 categories; the n=5 sweep
    // lives in the acceptance suite.
    for (std::size_t n = 1; n <= 4; ++n) {
        std::size_t combos = 1;
        for (std::size_t i = 0; i < n; ++i) combos *= 3;
        for (std::size_t ca = 0; ca < combos; ++ca) {
            std::vector<uint32_t> col_a(n);
            std::size_t rest = ca;
            for (std::size_t i = 0; i < n; ++i) {
                col_a[i] = rest % 3;
                rest /= 3;
            }
            for (std::size_t cb = 0; cb < combos; ++cb) {
                std::vector<uint32_t> col_b(n);
                rest = cb;
                for (std::size_t i = 0; i < n; ++i) {
                    col_b[i] = rest % 3;
                    rest /= 3;
                }
                auto ds = oracle::make_dataset({col_a, col_b}, 3);
                const double got = mutual_information(all_rows(ds), 0, 1);
                const double want = oracle::mutual_information_bits(col_a, col_b);
                REQUIRE(std::abs(got - want) <= 1e-12);
            }
        }
    }
}

TEST_CASE("mutual information properties over randomized fixtures") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 40;
        const std::size_t cats = 1 + rng() % 4;
        std::vector<uint32_t> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng() % cats;
            b[i] = rng() % cats;
        }
        auto ds = oracle::make_dataset({a, b}, cats);
        const SampleSet s = all_rows(ds);

        const double mi_ab = mutual_information(s, 0, 1);
        const double mi_ba = mutual_information(s, 1, 0);
        CHECK(mi_ab == mi_ba);  // exact, same table transposed

        const double ha = entropy(s, 0);
        const double hb = entropy(s, 1);
        CHECK(mi_ab >= 0.0);
        CHECK(mi_ab <= std::min(ha, hb) + 1e-9);
        CHECK(std::abs(mutual_information(s, 0, 0) - ha) <= 1e-9);
    }
}

TEST_CASE("contingency table: totals and marginals are consistent") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 30;
        std::vector<uint32_t> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng() % 3;
            b[i] = rng() % 4;
        }
        auto ds = oracle::make_dataset({a, b}, 4);
        const ContingencyTable t = contingency_table(all_rows(ds), 0, 1);
        CHECK(t.total == static_cast<int64_t>(n));
        for (std::size_t r = 0; r < t.n_a; ++r) {
            int64_t sum = 0;
            for (std::size_t c = 0; c < t.n_b; ++c) sum += t.at(r, c);
            CHECK(sum == t.a_marginals[r]);
        }
        for (std::size_t c = 0; c < t.n_b; ++c) {
            int64_t sum = 0;
            for (std::size_t r = 0; r < t.n_a; ++r) sum += t.at(r, c);
            CHECK(sum == t.b_marginals[c]);
        }
    }
}

TEST_CASE("mis_score: constant attribute scores zero") {
    auto ds = oracle::make_dataset({{0, 0, 0, 0}, {0, 1, 0, 1}}, 2);
    CHECK(mis_score(all_rows(ds), 0, {0, 1}) == 0.0);
}

TEST_CASE("mis_score: identical pair plus independent attribute") {
    // a0 == a1 uniform binary, a2 independent binary: the full 8-row product.
    std::vector<uint32_t> a0, a1, a2;
    for (uint32_t x : {0u, 1u}) {
        for (uint32_t z : {0u, 1u}) {
            for (int copy = 0; copy < 2; ++copy) {
                a0.push_back(x);
                a1.push_back(x);
                a2.push_back(z);
            }
        }
    }
    auto ds = oracle::make_dataset({a0, a1, a2}, 2);
    const SampleSet s = all_rows(ds);
    CHECK(mis_score(s, 0, {0, 1, 2}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mis_score(s, 1, {0, 1, 2}) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mis_score(s, 2, {0, 1, 2}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("mis_score: divides by the locally realized domain size") {
    // Dictionary has 4 categories but only 2 appear in the sample subset.
    auto ds = oracle::make_dataset({{0, 3, 0, 3, 1, 2}, {0, 1, 0, 1, 0, 1}}, 4);
    SampleSet sub{&ds, {0, 1, 2, 3}};
    const double mi = mutual_information(sub, 0, 1);
    CHECK(mis_score(sub, 0, {0, 1}) == doctest::Approx(mi / 2.0).epsilon(1e-12));
}

TEST_CASE("mis_score: fewer than two active attributes is an error") {
    auto ds = oracle::make_dataset({{0, 1}, {0, 1}}, 2);
    CHECK_THROWS_AS(mis_score(all_rows(ds), 0, {0}), AlgorithmError);
}

TEST_CASE("partition_entropy: constants sum to zero, two uniform binaries to 2 bits") {
    auto ds = oracle::make_dataset({{1, 1, 1, 1}, {0, 0, 0, 0}}, 2);
    CHECK(partition_entropy(all_rows(ds), {0, 1}) == 0.0);

    auto ds2 = oracle::make_dataset({{0, 1, 0, 1}, {0, 0, 1, 1}}, 2);
    CHECK(partition_entropy(all_rows(ds2), {0, 1}) == 2.0);
}

TEST_CASE("partition_entropy: (1/2,1/2) plus (3/4,1/4)") {
    auto ds = oracle::make_dataset({{0, 1, 0, 1}, {0, 0, 0, 1}}, 2);
    CHECK(partition_entropy(all_rows(ds), {0, 1}) ==
          doctest::Approx(1.8112781244591328).epsilon(1e-12));
}

TEST_CASE("partition_entropy equals the sum of per-attribute entropies exactly") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        std::vector<std::vector<uint32_t>> cols(3, std::vector<uint32_t>(n));
        for (auto& col : cols) {
            for (auto& v : col) v = rng() % 3;
        }
        auto ds = oracle::make_dataset(cols, 3);
        const SampleSet s = all_rows(ds);
        const double direct = partition_entropy(s, {0, 1, 2});
        const double summed = entropy(s, 0) + entropy(s, 1) + entropy(s, 2);
        CHECK(direct == summed);
    }
}

TEST_CASE("kl_divergence: spec'd point values") {
    CHECK(kl_divergence(std::vector<double>{0.5, 0.5}, std::vector<double>{0.5, 0.5}) == 0.0);
    CHECK(kl_divergence(std::vector<double>{1.0, 0.0}, std::vector<double>{0.5, 0.5}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kl_divergence(std::vector<double>{0.75, 0.25}, std::vector<double>{0.5, 0.5}) ==
          doctest::Approx(0.18872187554086717).epsilon(1e-12));
}

TEST_CASE("kl_divergence: support violation names the category") {
    std::vector<double> q{0.5, 0.5};
    std::vector<double> p{1.0, 0.0};
    bool threw = false;
    try {
        kl_divergence(q, p);
    } catch (const InputError& e) {
        threw = true;
        CHECK(std::string(e.what()).find("category 1") != std::string::npos);
    }
    CHECK(threw);
    CHECK_THROWS_AS(kl_divergence(std::vector<double>{0.5, 0.5}, std::vector<double>{1.0}),
                    InputError);
}

TEST_CASE("kl_divergence: Gibbs' inequality on random valid pairs") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 + rng() % 5;
        std::vector<double> q(m), p(m);
        double qs = 0.0, ps = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            q[i] = 1 + rng() % 100;
            p[i] = 1 + rng() % 100;
            qs += q[i];
            ps += p[i];
        }
        for (std::size_t i = 0; i < m; ++i) {
            q[i] /= qs;
            p[i] /= ps;
        }
        CHECK(kl_divergence(q, p) >= 0.0);
        CHECK(kl_divergence(q, q) == 0.0);  // identical distributions, exact zero
        CHECK(kl_divergence(q, p) == doctest::Approx(oracle::kl_bits(q, p)).epsilon(1e-12));
    }
}
