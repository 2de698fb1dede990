#pragma once

// One-line instance summaries: vertex, edge and clause counts per size and,
// for hypergraphs and formulas, headroom against the kernel bounds.

#include <cstdint>
#include <optional>
#include <string>

#include "sparsekit/model.hpp"

namespace sparsekit {

// Hypergraphs: "hypergraph: n=4, edges: r=2:6 (bound 4); total 6 (bound 8)".
// Formulas use the bounds of the NAE encoding on 2n vertices.
std::string instanceStats(const AnyInstance& instance, std::optional<std::int64_t> budget = {});

}  // namespace sparsekit
