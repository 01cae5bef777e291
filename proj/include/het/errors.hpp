#pragma once

#include <stdexcept>
#include <string>

namespace het {

// An enumeration would exceed its configured state cap. Distinct from a
// negative answer: the caller learns nothing about existence.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// (c, k, mu) falls outside every case of the admissibility threshold.
class UncoveredParametersError : public std::domain_error {
 public:
  explicit UncoveredParametersError(const std::string& what) : std::domain_error(what) {}
};

// A pipeline stage received inputs outside its structural hypotheses.
class HypothesesViolatedError : public std::runtime_error {
 public:
  explicit HypothesesViolatedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace het
