#pragma once

// Seeded random instance generators. Output depends only on (params, seed)
// through CounterRng, so corpora are reproducible across platforms.

#include <cstdint>
#include <string>

#include "sparsekit/model.hpp"
#include "sparsekit/rng.hpp"

namespace sparsekit {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Planted outcome: `yes` hides a solution, `no` adds a small local
// obstruction, `none` leaves the verdict to chance.
enum class Plant { none, yes, no };

struct CnfParams {
  int numVars = 8;
  int numClauses = 20;
  int minClauseSize = 1;
  int maxClauseSize = 3;
};
CnfFormula generateCnf(const CnfParams& p, CounterRng& rng);

struct HypergraphParams {
  int numVertices = 10;
  int numEdges = 30;
  int minEdgeSize = 2;
  int maxEdgeSize = 3;
};
Hypergraph generateHypergraph(const HypergraphParams& p, CounterRng& rng);

struct DigraphParams {
  int numVertices = 6;
  double arcProbability = 0.3;
  bool plantCycle = false;
};
Digraph generateDigraph(const DigraphParams& p, CounterRng& rng);

// X = vertices 1..m, triangles on m+1..m+3n in order.
struct TsdParams {
  int independentSize = 3;
  int numTriangles = 2;
  double edgeProbability = 0.5;
  // yes: only edges compatible with a hidden coloring; no: some x sees a whole triangle.
  Plant plant = Plant::none;
};
TsdInstance generateTsd(const TsdParams& p, CounterRng& rng);

// A = 1..m, B = m+1..m+n with s = m+1 and t = m+n.
struct BipartiteHamParams {
  int sideA = 2;
  int sideB = 3;
  double edgeProbability = 0.4;
  // yes: a Hamiltonian s-t path under the noise; no: s and t share their A-neighbor
  // (needs sideA >= 2, as every instance with sideA = 1 is a yes-instance).
  Plant plant = Plant::none;
};
BipartiteHamInstance generateBipartiteHam(const BipartiteHamParams& p, CounterRng& rng);

// Classes R_1..R_k (each of classSize vertices) followed by the blue
// vertices. Each class draws a random number of active vertices and is padded
// with isolated ones. Every blue vertex gets at least one neighbor.
struct EqColRbdsParams {
  int k = 2;
  int classSize = 2;
  int numBlue = 3;
  double edgeProbability = 0.3;
  // yes: one vertex per class dominates the blue set; no: two blue vertices
  // each see a single, distinct vertex of the same class (needs classSize >= 2
  // and numBlue >= 2).
  Plant plant = Plant::none;
};
EqColRbdsInstance generateEqColRbds(const EqColRbdsParams& p, CounterRng& rng);

}  // namespace sparsekit
