#pragma once

#include <stdexcept>
#include <string>

namespace extremis {

// Precondition violations (length mismatches, bad labels, bad edges).
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

class EmptyCorpusError : public std::runtime_error {
public:
    EmptyCorpusError() : std::runtime_error("corpus is empty") {}
};

// A corpus whose mean anger, |polarity| or subjectivity is zero cannot
// be normalized.
class DegenerateCorpusError : public std::runtime_error {
public:
    explicit DegenerateCorpusError(const std::string& component)
        : std::runtime_error("degenerate corpus: mean " + component + " is zero"),
          component_(component) {}
    const std::string& component() const { return component_; }

private:
    std::string component_;
};

class UndefinedCorrelationError : public std::runtime_error {
public:
    UndefinedCorrelationError()
        : std::runtime_error("correlation undefined: zero variance input") {}
};

}  // namespace extremis
