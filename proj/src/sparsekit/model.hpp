#pragma once

// Core value types: formulas, hypergraphs, graphs, structured instances and
// certificates. All vertices and variables are 1-indexed. Every type
// validates its invariants on construction and is immutable afterwards.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sparsekit {

using Vertex = int;

class InvalidInstance : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Polarity : std::uint8_t { positive, negative };

struct Literal {
  int variable = 1;
  Polarity polarity = Polarity::positive;

  static Literal fromDimacs(int code);
  int toDimacs() const { return polarity == Polarity::positive ? variable : -variable; }
  Literal negated() const {
    return {variable, polarity == Polarity::positive ? Polarity::negative : Polarity::positive};
  }
  bool isPositive() const { return polarity == Polarity::positive; }

  auto operator<=>(const Literal&) const = default;
};

using Clause = std::vector<Literal>;

class CnfFormula {
 public:
  CnfFormula() = default;
  // Clauses are deduplicated and sorted by (variable, polarity); empty clauses
  // are kept (they make the formula unsatisfiable in every sense).
  CnfFormula(int numVars, std::vector<Clause> clauses);

  int numVars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t numClauses() const { return clauses_.size(); }
  int maxClauseSize() const;
  bool hasEmptyClause() const;

  bool operator==(const CnfFormula&) const = default;

 private:
  int num_vars_ = 0;
  std::vector<Clause> clauses_;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  // Each edge is sorted and deduplicated; edge order is preserved exactly.
  Hypergraph(int numVertices, std::vector<std::vector<Vertex>> edges);

  int numVertices() const { return n_; }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }
  std::size_t numEdges() const { return edges_.size(); }
  int maxEdgeSize() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> edges_;
};

using Edge = std::pair<Vertex, Vertex>;

class Graph {
 public:
  Graph() = default;
  // Pairs are normalized to (smaller, larger), sorted and deduplicated.
  // Self-loops are rejected.
  Graph(int numVertices, std::vector<Edge> edges);

  int numVertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t numEdges() const { return edges_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v - 1]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v - 1].size()); }
  bool hasEdge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

using Arc = std::pair<Vertex, Vertex>;

class Digraph {
 public:
  Digraph() = default;
  Digraph(int numVertices, std::vector<Arc> arcs);

  int numVertices() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t numArcs() const { return arcs_.size(); }
  const std::vector<Vertex>& successors(Vertex v) const { return out_[v - 1]; }
  const std::vector<Vertex>& predecessors(Vertex v) const { return in_[v - 1]; }
  bool hasArc(Vertex u, Vertex v) const;

  bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

using Triangle = std::array<Vertex, 3>;

// 2-3-coloring instance: X independent, V \ X partitioned into triangles.
class TsdInstance {
 public:
  TsdInstance() = default;
  TsdInstance(Graph graph, std::vector<Vertex> independent, std::vector<Triangle> triangles);

  const Graph& graph() const { return graph_; }
  // Sorted ascending.
  const std::vector<Vertex>& independent() const { return independent_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }

  bool operator==(const TsdInstance&) const = default;

 private:
  Graph graph_;
  std::vector<Vertex> independent_;
  std::vector<Triangle> triangles_;
};

// Hamiltonian s-t path on a bipartite graph with |B| = |A| + 1 and
// degree-1 endpoints s, t in B.
class BipartiteHamInstance {
 public:
  BipartiteHamInstance() = default;
  BipartiteHamInstance(Graph graph, std::vector<Vertex> sideA, std::vector<Vertex> sideB, Vertex s,
                       Vertex t);

  const Graph& graph() const { return graph_; }
  const std::vector<Vertex>& sideA() const { return a_; }
  const std::vector<Vertex>& sideB() const { return b_; }
  Vertex s() const { return s_; }
  Vertex t() const { return t_; }
  // B relabeled b_1..b_n with b_1 = s and b_n = t; other vertices keep stored order.
  std::vector<Vertex> orderedB() const;

  bool operator==(const BipartiteHamInstance&) const = default;

 private:
  Graph graph_;
  std::vector<Vertex> a_;
  std::vector<Vertex> b_;
  Vertex s_ = 0;
  Vertex t_ = 0;
};

// Equal-sized colored red/blue dominating set. Red vertices are the union of
// the color classes; every edge joins a red and a blue vertex.
class EqColRbdsInstance {
 public:
  EqColRbdsInstance() = default;
  EqColRbdsInstance(Graph graph, std::vector<std::vector<Vertex>> colorClasses,
                    std::vector<Vertex> blue);

  const Graph& graph() const { return graph_; }
  const std::vector<std::vector<Vertex>>& colorClasses() const { return classes_; }
  const std::vector<Vertex>& blue() const { return blue_; }
  int k() const { return static_cast<int>(classes_.size()); }
  std::size_t classSize() const { return classes_.empty() ? 0 : classes_.front().size(); }
  std::size_t numRed() const { return classSize() * classes_.size(); }
  bool hasIsolatedBlue() const;

  bool operator==(const EqColRbdsInstance&) const = default;

 private:
  Graph graph_;
  std::vector<std::vector<Vertex>> classes_;
  std::vector<Vertex> blue_;
};

// Colors are 1..paletteSize; a list is a bitmask with bit (c-1) set when c is allowed.
using ColorMask = std::uint8_t;
inline constexpr int kMaxPalette = 8;

inline constexpr ColorMask colorBit(int color) { return static_cast<ColorMask>(1u << (color - 1)); }

class ListColoringInstance {
 public:
  ListColoringInstance() = default;
  ListColoringInstance(Graph graph, std::vector<ColorMask> lists, int paletteSize = 4);

  const Graph& graph() const { return graph_; }
  ColorMask list(Vertex v) const { return lists_[v - 1]; }
  const std::vector<ColorMask>& lists() const { return lists_; }
  int paletteSize() const { return palette_; }

  bool operator==(const ListColoringInstance&) const = default;

 private:
  Graph graph_;
  std::vector<ColorMask> lists_;
  int palette_ = 4;
};

// Certificates.
struct Assignment {
  std::vector<bool> values;  // values[i] is variable i+1
  bool operator==(const Assignment&) const = default;
};
struct Coloring {
  std::vector<int> colors;  // colors[v-1]
  bool operator==(const Coloring&) const = default;
};
struct HamCycle {
  std::vector<Vertex> order;  // cyclic order, or the s..t order for path problems
  bool operator==(const HamCycle&) const = default;
};
struct DomSet {
  std::vector<Vertex> vertices;
  bool operator==(const DomSet&) const = default;
};
using Certificate = std::variant<Assignment, Coloring, HamCycle, DomSet>;

using AnyInstance = std::variant<CnfFormula, Hypergraph, Graph, Digraph, TsdInstance,
                                 BipartiteHamInstance, EqColRbdsInstance, ListColoringInstance>;

enum class Problem {
  sat,
  nae,
  hypergraph2col,
  fourColoring,
  hamCycle,
  directedHamCycle,
  domSet,
  connectedDomSet,
  tsd,
  hamPathST,
  colRbds,
  listColoring,
};

std::string problemName(Problem p);
std::optional<Problem> problemFromName(std::string_view name);

// A concrete yes/no question: an instance plus the problem it is asked under.
class DecisionInstance {
 public:
  DecisionInstance(Problem problem, AnyInstance instance, std::optional<std::int64_t> budget = {});

  Problem problem() const { return problem_; }
  const AnyInstance& instance() const { return instance_; }
  std::optional<std::int64_t> budget() const { return budget_; }

 private:
  Problem problem_;
  AnyInstance instance_;
  std::optional<std::int64_t> budget_;
};

class CertificateMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Polynomial-time certificate validation. Throws CertificateMismatch when the
// certificate variant does not fit the problem.
bool checkCertificate(const DecisionInstance& instance, const Certificate& cert);

// Problem-level checkers used by the oracles and constructions.
bool isSatisfying(const CnfFormula& f, const Assignment& a);
bool isNaeSatisfying(const CnfFormula& f, const Assignment& a);
bool isProper2Coloring(const Hypergraph& h, const Coloring& c);
bool isProperColoring(const Graph& g, const Coloring& c, int paletteSize);
bool isProperListColoring(const ListColoringInstance& inst, const Coloring& c);
bool isTsdColoring(const TsdInstance& inst, const Coloring& c);
bool isHamiltonianCycle(const Graph& g, const HamCycle& cycle);
bool isHamiltonianCycle(const Digraph& g, const HamCycle& cycle);
bool isHamiltonianPathST(const BipartiteHamInstance& inst, const HamCycle& path);
bool isDominatingSet(const Graph& g, std::span<const Vertex> set);
bool inducesConnectedSubgraph(const Graph& g, std::span<const Vertex> set);
bool isColRbdsSolution(const EqColRbdsInstance& inst, const DomSet& s);

std::string instanceKindName(const AnyInstance& instance);

}  // namespace sparsekit
