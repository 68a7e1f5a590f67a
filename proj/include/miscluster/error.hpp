#pragma once

#include <stdexcept>
#include <string>

namespace miscluster {

// Bad files, malformed options, contract violations by the caller. CLI exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Failures inside an algorithm run, e.g. an unsplittable working set. CLI exit code 2.
class AlgorithmError : public std::runtime_error {
public:
    explicit AlgorithmError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace miscluster
