#include "miscluster/synth.hpp"

#include <cmath>
#include <fstream>
#include <random>

#include <json.hpp>

#include "miscluster/error.hpp"
#include "miscluster/ingest.hpp"

namespace miscluster {

namespace {

void validate_spec(const PlantedMissingnessSpec& spec) {
    if (spec.n_rows == 0) throw InputError("synth spec: n_rows must be positive");
    if (spec.attributes.empty()) throw InputError("synth spec: no attributes");
    for (const auto& attr : spec.attributes) {
        if (attr.categories.empty()) {
            throw InputError("synth spec: attribute '" + attr.name + "' has no categories");
        }
        if (attr.probs.size() != attr.categories.size()) {
            throw InputError("synth spec: attribute '" + attr.name +
                             "' has mismatched probs/categories");
        }
        double sum = 0.0;
        for (double p : attr.probs) {
            if (p < 0.0 || p > 1.0) {
                throw InputError("synth spec: attribute '" + attr.name +
                                 "' has probability outside [0,1]");
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw InputError("synth spec: attribute '" + attr.name + "' probabilities sum to " +
                             std::to_string(sum) + ", expected 1");
        }
    }
    for (const auto& rule : spec.rules) {
        if (rule.target == rule.given) {
            throw InputError("synth spec: rule target and given are both '" + rule.target + "'");
        }
        for (double r : rule.rates) {
            if (r < 0.0 || r > 1.0) {
                throw InputError("synth spec: rule for '" + rule.target +
                                 "' has rate outside [0,1]");
            }
        }
    }
}

int find_attr(const PlantedMissingnessSpec& spec, const std::string& name) {
    for (std::size_t i = 0; i < spec.attributes.size(); ++i) {
        if (spec.attributes[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

// Uniform double in [0,1) from the top 53 bits; identical across platforms,
// unlike std::uniform_real_distribution.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t draw_category(std::mt19937_64& rng, const std::vector<double>& probs) {
    const double u = next_uniform(rng);
    double cum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        cum += probs[i];
        if (u < cum) return i;
    }
    return probs.size() - 1;
}

}  // namespace

PlantedMissingnessSpec load_synth_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open synth spec '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("synth spec '" + path + "': " + e.what());
    }

    PlantedMissingnessSpec spec;
    try {
        if (doc.contains("name")) spec.name = doc["name"].get<std::string>();
        spec.n_rows = doc.at("n_rows").get<std::size_t>();
        for (const auto& a : doc.at("attributes")) {
            SynthAttribute attr;
            attr.name = a.at("name").get<std::string>();
            attr.categories = a.at("categories").get<std::vector<std::string>>();
            attr.probs = a.at("probs").get<std::vector<double>>();
            spec.attributes.push_back(std::move(attr));
        }
        if (doc.contains("missingness")) {
            for (const auto& r : doc["missingness"]) {
                MissingnessRule rule;
                rule.target = r.at("target").get<std::string>();
                rule.given = r.at("given").get<std::string>();
                const int given_idx = find_attr(spec, rule.given);
                if (given_idx < 0) {
                    throw InputError("synth spec: rule references unknown attribute '" +
                                     rule.given + "'");
                }
                const auto& cats = spec.attributes[given_idx].categories;
                rule.rates.assign(cats.size(), 0.0);
                const auto& rates = r.at("rates");
                for (auto it = rates.begin(); it != rates.end(); ++it) {
                    bool found = false;
                    for (std::size_t c = 0; c < cats.size(); ++c) {
                        if (cats[c] == it.key()) {
                            rule.rates[c] = it.value().get<double>();
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        throw InputError("synth spec: rule rate for unknown category '" +
                                         it.key() + "' of '" + rule.given + "'");
                    }
                }
                spec.rules.push_back(std::move(rule));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw InputError("synth spec '" + path + "': " + e.what());
    }
    return spec;
}

CategoricalDataset synth_missingness(const PlantedMissingnessSpec& spec, uint64_t seed) {
    validate_spec(spec);
    for (const auto& rule : spec.rules) {
        if (find_attr(spec, rule.target) < 0) {
            throw InputError("synth spec: rule targets unknown attribute '" + rule.target + "'");
        }
        const int given_idx = find_attr(spec, rule.given);
        if (given_idx < 0) {
            throw InputError("synth spec: rule references unknown attribute '" + rule.given + "'");
        }
        if (rule.rates.size() != spec.attributes[given_idx].categories.size()) {
            throw InputError("synth spec: rule for '" + rule.target +
                             "' has wrong number of rates");
        }
    }

    std::mt19937_64 rng(seed);
    const std::size_t n_attrs = spec.attributes.size();
    std::vector<std::vector<std::string>> rows(spec.n_rows,
                                               std::vector<std::string>(n_attrs));
    std::vector<std::size_t> drawn(n_attrs);

    for (std::size_t r = 0; r < spec.n_rows; ++r) {
        for (std::size_t a = 0; a < n_attrs; ++a) {
            drawn[a] = draw_category(rng, spec.attributes[a].probs);
            rows[r][a] = spec.attributes[a].categories[drawn[a]];
        }
        for (const auto& rule : spec.rules) {
            const auto target = static_cast<std::size_t>(find_attr(spec, rule.target));
            const auto given = static_cast<std::size_t>(find_attr(spec, rule.given));
            const double rate = rule.rates[drawn[given]];
            if (next_uniform(rng) < rate) rows[r][target] = std::string(kMissingCategory);
        }
    }

    IngestOptions opt;
    opt.dataset_name = spec.name;
    opt.column_names.reserve(n_attrs);
    for (const auto& attr : spec.attributes) opt.column_names.push_back(attr.name);
    return encode_rows(rows, opt);
}

}  // namespace miscluster
