#pragma once

#include <algorithm>

#include "sparsekit/generate.hpp"

namespace fixtures {

// Clause sizes clamped to the variable count.
inline sparsekit::CnfParams cnf(int n, int count, int minSize, int maxSize) {
  const int hi = std::min(maxSize, n);
  return {n, count, std::min(minSize, hi), hi};
}

inline sparsekit::HypergraphParams hypergraph(int n, int count, int minSize, int maxSize) {
  const int hi = std::min(maxSize, n);
  return {n, count, std::min(minSize, hi), hi};
}

}  // namespace fixtures
