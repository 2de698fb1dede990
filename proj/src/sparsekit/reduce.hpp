#pragma once

// Stand-alone polynomial-time transformations between problems. Each returns
// the transformed instance together with a trace naming every output vertex or
// variable.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sparsekit/model.hpp"

namespace sparsekit {

struct ReductionTrace {
  std::string name;
  // Free-form size summaries, e.g. {"vertices", 9}.
  std::vector<std::pair<std::string, std::int64_t>> inputSize;
  std::vector<std::pair<std::string, std::int64_t>> outputSize;
  // Output index -> symbolic name, in index order.
  std::vector<std::pair<std::string, int>> names;

  nlohmann::json toJson() const;
};

// Literal vertex of the NAE encoding: x_i -> 2i-1, not x_i -> 2i.
inline Vertex literalVertex(const Literal& l) {
  return l.isPositive() ? 2 * l.variable - 1 : 2 * l.variable;
}

// 2n vertices; one edge per clause (same order) followed by the n pair edges
// {x_i, not x_i}.
std::pair<Hypergraph, ReductionTrace> naesatToHypergraph(const CnfFormula& f);

// Appends the fresh positive literal x_{n+1} to every clause.
CnfFormula cnfsatToNaesat(const CnfFormula& f);

// NAE-3-SAT to 2-3-coloring with a triangle split decomposition.
// Throws std::invalid_argument when a clause has more than 3 literals.
std::pair<TsdInstance, ReductionTrace> naesat3ToTsd(const CnfFormula& f);

// The NO instance emitted for formulas with a clause of size at most 1.
TsdInstance canonicalNoTsd();

// Vertex v becomes the path v_in - v_mid - v_out (3v-2, 3v-1, 3v); arc (u,v)
// becomes the edge {u_out, v_in}.
std::pair<Graph, ReductionTrace> directedHcToUndirected(const Digraph& g);

}  // namespace sparsekit
