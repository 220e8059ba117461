#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cascnet {

// Infection time of a node that never becomes infected. Dense time vectors
// use this sentinel; sparse cascade storage and file formats simply omit the
// node instead.
constexpr int kNever = -1;

inline bool is_finite_time(int t) { return t >= 0; }

// Parameter / configuration problems (bad probabilities, size guards,
// infeasible generator requests, malformed files).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Observations inconsistent with the model or the super-graph, e.g. an
// infection that no candidate parent can account for.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cascnet
