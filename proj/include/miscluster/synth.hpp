#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "miscluster/dataset.hpp"

namespace miscluster {

struct SynthAttribute {
    std::string name;
    std::vector<std::string> categories;
    std::vector<double> probs;  // one per category, sums to 1
};

// Makes the missingness of `target` depend on the category of `given`.
struct MissingnessRule {
    std::string target;
    std::string given;
    std::vector<double> rates;  // P(target missing | given = category i)
};

struct PlantedMissingnessSpec {
    std::string name = "synthetic";
    std::size_t n_rows = 0;
    std::vector<SynthAttribute> attributes;
    std::vector<MissingnessRule> rules;
};

PlantedMissingnessSpec load_synth_spec(const std::string& path);

// Draws a dataset with the given base distributions, then plants conditional
// missingness per the rules. Deterministic for a fixed seed.
CategoricalDataset synth_missingness(const PlantedMissingnessSpec& spec, uint64_t seed);

}  // namespace miscluster
