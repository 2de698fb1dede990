#include "sparsekit/model.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace sparsekit {
namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidInstance(message);
}

void checkVertex(Vertex v, int n, const char* what) {
  require(v >= 1 && v <= n,
          std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(n));
}

// Checks that `parts` partition [1..n] exactly.
void requirePartition(int n, const std::vector<const std::vector<Vertex>*>& parts,
                      const std::string& what) {
  std::vector<char> seen(n, 0);
  std::size_t total = 0;
  for (const auto* part : parts) {
    for (Vertex v : *part) {
      checkVertex(v, n, "vertex");
      require(!seen[v - 1], what + ": vertex " + std::to_string(v) + " appears twice");
      seen[v - 1] = 1;
      ++total;
    }
  }
  require(total == static_cast<std::size_t>(n), what + ": does not cover every vertex");
}

}  // namespace

Literal Literal::fromDimacs(int code) {
  if (code == 0) throw InvalidInstance("literal 0 is not a variable");
  return {code > 0 ? code : -code, code > 0 ? Polarity::positive : Polarity::negative};
}

CnfFormula::CnfFormula(int numVars, std::vector<Clause> clauses)
    : num_vars_(numVars), clauses_(std::move(clauses)) {
  require(numVars >= 0, "negative variable count");
  for (auto& clause : clauses_) {
    std::sort(clause.begin(), clause.end());
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    for (const Literal& lit : clause) checkVertex(lit.variable, num_vars_, "variable");
  }
}

int CnfFormula::maxClauseSize() const {
  std::size_t d = 0;
  for (const auto& c : clauses_) d = std::max(d, c.size());
  return static_cast<int>(d);
}

bool CnfFormula::hasEmptyClause() const {
  return std::any_of(clauses_.begin(), clauses_.end(), [](const Clause& c) { return c.empty(); });
}

Hypergraph::Hypergraph(int numVertices, std::vector<std::vector<Vertex>> edges)
    : n_(numVertices), edges_(std::move(edges)) {
  require(numVertices >= 0, "negative vertex count");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (Vertex v : e) checkVertex(v, n_, "vertex");
  }
}

int Hypergraph::maxEdgeSize() const {
  std::size_t d = 0;
  for (const auto& e : edges_) d = std::max(d, e.size());
  return static_cast<int>(d);
}

Graph::Graph(int numVertices, std::vector<Edge> edges) : n_(numVertices), edges_(std::move(edges)) {
  require(numVertices >= 0, "negative vertex count");
  for (auto& [u, v] : edges_) {
    checkVertex(u, n_, "vertex");
    checkVertex(v, n_, "vertex");
    require(u != v, "self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adjacency_.assign(n_, {});
  for (const auto& [u, v] : edges_) {
    adjacency_[u - 1].push_back(v);
    adjacency_[v - 1].push_back(u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::hasEdge(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  const auto& list = adjacency_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

Digraph::Digraph(int numVertices, std::vector<Arc> arcs) : n_(numVertices), arcs_(std::move(arcs)) {
  require(numVertices >= 0, "negative vertex count");
  for (const auto& [u, v] : arcs_) {
    checkVertex(u, n_, "vertex");
    checkVertex(v, n_, "vertex");
    require(u != v, "self-loop on vertex " + std::to_string(u));
  }
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const auto& [u, v] : arcs_) {
    out_[u - 1].push_back(v);
    in_[v - 1].push_back(u);
  }
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

bool Digraph::hasArc(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_) return false;
  const auto& list = out_[u - 1];
  return std::binary_search(list.begin(), list.end(), v);
}

TsdInstance::TsdInstance(Graph graph, std::vector<Vertex> independent,
                         std::vector<Triangle> triangles)
    : graph_(std::move(graph)), independent_(std::move(independent)),
      triangles_(std::move(triangles)) {
  std::sort(independent_.begin(), independent_.end());
  std::vector<Vertex> covered;
  for (const auto& tri : triangles_) {
    covered.insert(covered.end(), tri.begin(), tri.end());
  }
  requirePartition(graph_.numVertices(), {&independent_, &covered}, "triangle split decomposition");
  for (std::size_t i = 0; i < independent_.size(); ++i) {
    for (std::size_t j = i + 1; j < independent_.size(); ++j) {
      require(!graph_.hasEdge(independent_[i], independent_[j]),
              "independent set contains edge " + std::to_string(independent_[i]) + "-" +
                  std::to_string(independent_[j]));
    }
  }
  std::vector<int> triangleOf(graph_.numVertices() + 1, -1);
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const auto& tri = triangles_[t];
    require(graph_.hasEdge(tri[0], tri[1]) && graph_.hasEdge(tri[1], tri[2]) &&
                graph_.hasEdge(tri[0], tri[2]),
            "triple " + std::to_string(t + 1) + " does not induce a triangle");
    for (Vertex v : tri) triangleOf[v] = static_cast<int>(t);
  }
  for (const auto& [u, v] : graph_.edges()) {
    if (triangleOf[u] >= 0 && triangleOf[v] >= 0) {
      require(triangleOf[u] == triangleOf[v], "edge " + std::to_string(u) + "-" +
                                                  std::to_string(v) + " joins two triangles");
    }
  }
}

BipartiteHamInstance::BipartiteHamInstance(Graph graph, std::vector<Vertex> sideA,
                                           std::vector<Vertex> sideB, Vertex s, Vertex t)
    : graph_(std::move(graph)), a_(std::move(sideA)), b_(std::move(sideB)), s_(s), t_(t) {
  requirePartition(graph_.numVertices(), {&a_, &b_}, "bipartition");
  require(b_.size() == a_.size() + 1, "bipartite Hamiltonian instance needs |B| = |A| + 1");
  std::vector<char> inA(graph_.numVertices() + 1, 0);
  for (Vertex v : a_) inA[v] = 1;
  for (const auto& [u, v] : graph_.edges()) {
    require(inA[u] != inA[v], "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " does not cross the bipartition");
  }
  require(std::find(b_.begin(), b_.end(), s_) != b_.end(), "s must lie in B");
  require(std::find(b_.begin(), b_.end(), t_) != b_.end(), "t must lie in B");
  require(s_ != t_, "s and t must differ");
  require(graph_.degree(s_) == 1, "s must have degree 1");
  require(graph_.degree(t_) == 1, "t must have degree 1");
}

std::vector<Vertex> BipartiteHamInstance::orderedB() const {
  std::vector<Vertex> ordered{s_};
  for (Vertex v : b_) {
    if (v != s_ && v != t_) ordered.push_back(v);
  }
  ordered.push_back(t_);
  return ordered;
}

EqColRbdsInstance::EqColRbdsInstance(Graph graph, std::vector<std::vector<Vertex>> colorClasses,
                                     std::vector<Vertex> blue)
    : graph_(std::move(graph)), classes_(std::move(colorClasses)), blue_(std::move(blue)) {
  require(!classes_.empty(), "at least one color class is required");
  std::vector<const std::vector<Vertex>*> parts;
  for (const auto& cls : classes_) {
    require(cls.size() == classes_.front().size(), "color classes must have equal size");
    parts.push_back(&cls);
  }
  parts.push_back(&blue_);
  requirePartition(graph_.numVertices(), parts, "red/blue partition");
  std::vector<char> isBlue(graph_.numVertices() + 1, 0);
  for (Vertex v : blue_) isBlue[v] = 1;
  for (const auto& [u, v] : graph_.edges()) {
    require(isBlue[u] != isBlue[v], "edge " + std::to_string(u) + "-" + std::to_string(v) +
                                        " does not join red to blue");
  }
}

bool EqColRbdsInstance::hasIsolatedBlue() const {
  return std::any_of(blue_.begin(), blue_.end(), [&](Vertex b) { return graph_.degree(b) == 0; });
}

ListColoringInstance::ListColoringInstance(Graph graph, std::vector<ColorMask> lists,
                                           int paletteSize)
    : graph_(std::move(graph)), lists_(std::move(lists)), palette_(paletteSize) {
  require(paletteSize >= 1 && paletteSize <= kMaxPalette, "palette size out of range");
  require(lists_.size() == static_cast<std::size_t>(graph_.numVertices()),
          "one list per vertex is required");
  const unsigned full = (1u << paletteSize) - 1u;
  for (std::size_t v = 0; v < lists_.size(); ++v) {
    require(lists_[v] != 0, "empty list at vertex " + std::to_string(v + 1));
    require((lists_[v] & ~full) == 0, "list at vertex " + std::to_string(v + 1) +
                                          " uses colors outside the palette");
  }
}

std::string problemName(Problem p) {
  switch (p) {
    case Problem::sat: return "sat";
    case Problem::nae: return "nae";
    case Problem::hypergraph2col: return "2col";
    case Problem::fourColoring: return "4col";
    case Problem::hamCycle: return "hc";
    case Problem::directedHamCycle: return "dhc";
    case Problem::domSet: return "ds";
    case Problem::connectedDomSet: return "cds";
    case Problem::tsd: return "tsd";
    case Problem::hamPathST: return "hampath";
    case Problem::colRbds: return "colrbds";
    case Problem::listColoring: return "listcol";
  }
  return "?";
}

std::optional<Problem> problemFromName(std::string_view name) {
  for (Problem p : {Problem::sat, Problem::nae, Problem::hypergraph2col, Problem::fourColoring,
                    Problem::hamCycle, Problem::directedHamCycle, Problem::domSet,
                    Problem::connectedDomSet, Problem::tsd, Problem::hamPathST, Problem::colRbds,
                    Problem::listColoring}) {
    if (problemName(p) == name) return p;
  }
  return std::nullopt;
}

namespace {

bool instanceFitsProblem(Problem p, const AnyInstance& inst) {
  switch (p) {
    case Problem::sat:
    case Problem::nae: return std::holds_alternative<CnfFormula>(inst);
    case Problem::hypergraph2col: return std::holds_alternative<Hypergraph>(inst);
    case Problem::fourColoring:
    case Problem::hamCycle:
    case Problem::domSet:
    case Problem::connectedDomSet: return std::holds_alternative<Graph>(inst);
    case Problem::directedHamCycle: return std::holds_alternative<Digraph>(inst);
    case Problem::tsd: return std::holds_alternative<TsdInstance>(inst);
    case Problem::hamPathST: return std::holds_alternative<BipartiteHamInstance>(inst);
    case Problem::colRbds: return std::holds_alternative<EqColRbdsInstance>(inst);
    case Problem::listColoring: return std::holds_alternative<ListColoringInstance>(inst);
  }
  return false;
}

}  // namespace

DecisionInstance::DecisionInstance(Problem problem, AnyInstance instance,
                                   std::optional<std::int64_t> budget)
    : problem_(problem), instance_(std::move(instance)), budget_(budget) {
  if (!instanceFitsProblem(problem_, instance_)) {
    throw CertificateMismatch("problem " + problemName(problem_) + " cannot be asked of a " +
                              instanceKindName(instance_));
  }
  const bool wantsBudget = problem_ == Problem::domSet || problem_ == Problem::connectedDomSet;
  if (wantsBudget != budget_.has_value()) {
    throw std::invalid_argument(wantsBudget ? "dominating set problems need a budget"
                                            : "budget given for a problem without one");
  }
}

// ---- checkers ---------------------------------------------------------------

namespace {

bool literalValue(const Literal& lit, const Assignment& a) {
  bool v = a.values[lit.variable - 1];
  return lit.isPositive() ? v : !v;
}

bool colorsInRange(const Coloring& c, int n, int palette) {
  if (c.colors.size() != static_cast<std::size_t>(n)) return false;
  return std::all_of(c.colors.begin(), c.colors.end(),
                     [&](int col) { return col >= 1 && col <= palette; });
}

template <class Adjacent>
bool isPermutationCycle(int n, const HamCycle& cycle, Adjacent adjacent) {
  if (cycle.order.size() != static_cast<std::size_t>(n)) return false;
  std::vector<char> seen(n + 1, 0);
  for (Vertex v : cycle.order) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.order.size(); ++i) {
    if (!adjacent(cycle.order[i], cycle.order[(i + 1) % cycle.order.size()])) return false;
  }
  return true;
}

}  // namespace

bool isSatisfying(const CnfFormula& f, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(f.numVars())) return false;
  return std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) {
    return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return literalValue(l, a); });
  });
}

bool isNaeSatisfying(const CnfFormula& f, const Assignment& a) {
  if (a.values.size() != static_cast<std::size_t>(f.numVars())) return false;
  for (const Clause& c : f.clauses()) {
    bool seenTrue = false, seenFalse = false;
    for (const Literal& l : c) (literalValue(l, a) ? seenTrue : seenFalse) = true;
    if (!(seenTrue && seenFalse)) return false;
  }
  return true;
}

bool isProper2Coloring(const Hypergraph& h, const Coloring& c) {
  if (!colorsInRange(c, h.numVertices(), 2)) return false;
  for (const auto& e : h.edges()) {
    if (e.empty()) return false;
    bool mono = std::all_of(e.begin(), e.end(),
                            [&](Vertex v) { return c.colors[v - 1] == c.colors[e.front() - 1]; });
    if (mono) return false;
  }
  return true;
}

bool isProperColoring(const Graph& g, const Coloring& c, int paletteSize) {
  if (!colorsInRange(c, g.numVertices(), paletteSize)) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return c.colors[e.first - 1] != c.colors[e.second - 1]; });
}

bool isProperListColoring(const ListColoringInstance& inst, const Coloring& c) {
  if (!isProperColoring(inst.graph(), c, inst.paletteSize())) return false;
  for (Vertex v = 1; v <= inst.graph().numVertices(); ++v) {
    if ((inst.list(v) & colorBit(c.colors[v - 1])) == 0) return false;
  }
  return true;
}

bool isTsdColoring(const TsdInstance& inst, const Coloring& c) {
  if (!isProperColoring(inst.graph(), c, 3)) return false;
  return std::all_of(inst.independent().begin(), inst.independent().end(),
                     [&](Vertex x) { return c.colors[x - 1] <= 2; });
}

bool isHamiltonianCycle(const Graph& g, const HamCycle& cycle) {
  if (g.numVertices() < 3) return false;
  return isPermutationCycle(g.numVertices(), cycle,
                            [&](Vertex u, Vertex v) { return g.hasEdge(u, v); });
}

bool isHamiltonianCycle(const Digraph& g, const HamCycle& cycle) {
  if (g.numVertices() < 2) return false;
  return isPermutationCycle(g.numVertices(), cycle,
                            [&](Vertex u, Vertex v) { return g.hasArc(u, v); });
}

bool isHamiltonianPathST(const BipartiteHamInstance& inst, const HamCycle& path) {
  const Graph& g = inst.graph();
  const auto& order = path.order;
  if (order.size() != static_cast<std::size_t>(g.numVertices())) return false;
  if (order.front() != inst.s() || order.back() != inst.t()) return false;
  std::vector<char> seen(g.numVertices() + 1, 0);
  for (Vertex v : order) {
    if (v < 1 || v > g.numVertices() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.hasEdge(order[i], order[i + 1])) return false;
  }
  return true;
}

bool isDominatingSet(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> dominated(g.numVertices() + 1, 0);
  for (Vertex v : set) {
    if (v < 1 || v > g.numVertices()) return false;
    dominated[v] = 1;
    for (Vertex u : g.neighbors(v)) dominated[u] = 1;
  }
  return std::all_of(dominated.begin() + 1, dominated.end(), [](char d) { return d != 0; });
}

bool inducesConnectedSubgraph(const Graph& g, std::span<const Vertex> set) {
  if (set.empty()) return true;
  std::vector<char> inSet(g.numVertices() + 1, 0), reached(g.numVertices() + 1, 0);
  for (Vertex v : set) {
    if (v < 1 || v > g.numVertices()) return false;
    inSet[v] = 1;
  }
  std::queue<Vertex> frontier;
  frontier.push(set.front());
  reached[set.front()] = 1;
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex u : g.neighbors(v)) {
      if (inSet[u] && !reached[u]) {
        reached[u] = 1;
        frontier.push(u);
      }
    }
  }
  return std::all_of(set.begin(), set.end(), [&](Vertex v) { return reached[v] != 0; });
}

bool isColRbdsSolution(const EqColRbdsInstance& inst, const DomSet& s) {
  const Graph& g = inst.graph();
  std::vector<int> classOf(g.numVertices() + 1, -1);
  for (std::size_t c = 0; c < inst.colorClasses().size(); ++c) {
    for (Vertex v : inst.colorClasses()[c]) classOf[v] = static_cast<int>(c);
  }
  std::vector<int> picked(inst.colorClasses().size(), 0);
  for (Vertex v : s.vertices) {
    if (v < 1 || v > g.numVertices() || classOf[v] < 0) return false;
    ++picked[classOf[v]];
  }
  if (!std::all_of(picked.begin(), picked.end(), [](int n) { return n == 1; })) return false;
  std::vector<char> dominated(g.numVertices() + 1, 0);
  for (Vertex v : s.vertices) {
    for (Vertex u : g.neighbors(v)) dominated[u] = 1;
  }
  return std::all_of(inst.blue().begin(), inst.blue().end(),
                     [&](Vertex b) { return dominated[b] != 0; });
}

bool checkCertificate(const DecisionInstance& di, const Certificate& cert) {
  auto expect = [&]<class C>(std::type_identity<C>) -> const C& {
    if (const auto* c = std::get_if<C>(&cert)) return *c;
    throw CertificateMismatch("certificate type does not match problem " +
                              problemName(di.problem()));
  };
  const AnyInstance& inst = di.instance();
  switch (di.problem()) {
    case Problem::sat:
      return isSatisfying(std::get<CnfFormula>(inst), expect(std::type_identity<Assignment>{}));
    case Problem::nae:
      return isNaeSatisfying(std::get<CnfFormula>(inst), expect(std::type_identity<Assignment>{}));
    case Problem::hypergraph2col:
      return isProper2Coloring(std::get<Hypergraph>(inst), expect(std::type_identity<Coloring>{}));
    case Problem::fourColoring:
      return isProperColoring(std::get<Graph>(inst), expect(std::type_identity<Coloring>{}), 4);
    case Problem::listColoring:
      return isProperListColoring(std::get<ListColoringInstance>(inst),
                                  expect(std::type_identity<Coloring>{}));
    case Problem::tsd:
      return isTsdColoring(std::get<TsdInstance>(inst), expect(std::type_identity<Coloring>{}));
    case Problem::hamCycle:
      return isHamiltonianCycle(std::get<Graph>(inst), expect(std::type_identity<HamCycle>{}));
    case Problem::directedHamCycle:
      return isHamiltonianCycle(std::get<Digraph>(inst), expect(std::type_identity<HamCycle>{}));
    case Problem::hamPathST:
      return isHamiltonianPathST(std::get<BipartiteHamInstance>(inst),
                                 expect(std::type_identity<HamCycle>{}));
    case Problem::domSet:
    case Problem::connectedDomSet: {
      const auto& set = expect(std::type_identity<DomSet>{}).vertices;
      const Graph& g = std::get<Graph>(inst);
      std::set<Vertex> distinct(set.begin(), set.end());
      if (distinct.size() != set.size()) return false;
      if (static_cast<std::int64_t>(set.size()) > *di.budget()) return false;
      if (!isDominatingSet(g, set)) return false;
      return di.problem() == Problem::domSet || inducesConnectedSubgraph(g, set);
    }
    case Problem::colRbds:
      return isColRbdsSolution(std::get<EqColRbdsInstance>(inst),
                               expect(std::type_identity<DomSet>{}));
  }
  return false;
}

std::string instanceKindName(const AnyInstance& instance) {
  static constexpr const char* kNames[] = {"cnf",  "hypergraph",     "graph",       "digraph",
                                           "tsd",  "bipartite-ham",  "eq-col-rbds", "list-coloring"};
  return kNames[instance.index()];
}

}  // namespace sparsekit
