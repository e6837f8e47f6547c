#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pellspace {

struct NotUnimodularError : std::runtime_error {
  explicit NotUnimodularError(const std::string& what) : std::runtime_error(what) {}
};

struct DependentGeneratorsError : std::runtime_error {
  explicit DependentGeneratorsError(const std::string& what) : std::runtime_error(what) {}
};

struct RayOnExistingRayError : std::runtime_error {
  explicit RayOnExistingRayError(const std::string& what) : std::runtime_error(what) {}
};

struct NotAConeError : std::runtime_error {
  explicit NotAConeError(const std::string& what) : std::runtime_error(what) {}
};

struct AmbiguousVertexError : std::runtime_error {
  int cone_index;
  AmbiguousVertexError(const std::string& what, int cone)
      : std::runtime_error(what), cone_index(cone) {}
};

struct NotFlagError : std::runtime_error {
  std::vector<int> witness_clique;
  NotFlagError(const std::string& what, std::vector<int> clique)
      : std::runtime_error(what), witness_clique(std::move(clique)) {}
};

struct FactorMatchFailedError : std::runtime_error {
  explicit FactorMatchFailedError(const std::string& what) : std::runtime_error(what) {}
};

struct PointNotOnVarietyError : std::runtime_error {
  explicit PointNotOnVarietyError(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateConfigError : std::runtime_error {
  explicit DegenerateConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct PNegativeExponentError : std::runtime_error {
  explicit PNegativeExponentError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pellspace
