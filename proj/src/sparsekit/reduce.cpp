#include "sparsekit/reduce.hpp"

#include <stdexcept>

namespace sparsekit {

nlohmann::json ReductionTrace::toJson() const {
  nlohmann::json doc;
  doc["name"] = name;
  doc["input"] = nlohmann::json::object();
  for (const auto& [key, value] : inputSize) doc["input"][key] = value;
  doc["output"] = nlohmann::json::object();
  for (const auto& [key, value] : outputSize) doc["output"][key] = value;
  doc["names"] = nlohmann::json::array();
  for (const auto& [label, index] : names) doc["names"].push_back({{"name", label}, {"index", index}});
  return doc;
}

namespace {

std::string literalName(int variable, bool positive) {
  return (positive ? "x" : "~x") + std::to_string(variable);
}

void nameLiteralVertices(ReductionTrace& trace, int numVars) {
  for (int i = 1; i <= numVars; ++i) {
    trace.names.emplace_back(literalName(i, true), 2 * i - 1);
    trace.names.emplace_back(literalName(i, false), 2 * i);
  }
}

bool hasComplementaryPair(const Clause& c) {
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    if (c[i].variable == c[i + 1].variable) return true;
  }
  return false;
}

}  // namespace

std::pair<Hypergraph, ReductionTrace> naesatToHypergraph(const CnfFormula& f) {
  const int n = f.numVars();
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(f.numClauses() + static_cast<std::size_t>(n));
  for (const Clause& c : f.clauses()) {
    std::vector<Vertex> e;
    for (const Literal& l : c) e.push_back(literalVertex(l));
    edges.push_back(std::move(e));
  }
  for (int i = 1; i <= n; ++i) edges.push_back({2 * i - 1, 2 * i});

  ReductionTrace trace;
  trace.name = "nae-to-hypergraph";
  trace.inputSize = {{"variables", n}, {"clauses", static_cast<std::int64_t>(f.numClauses())}};
  trace.outputSize = {{"vertices", 2 * n}, {"edges", static_cast<std::int64_t>(edges.size())}};
  nameLiteralVertices(trace, n);
  return {Hypergraph(2 * n, std::move(edges)), std::move(trace)};
}

CnfFormula cnfsatToNaesat(const CnfFormula& f) {
  const int fresh = f.numVars() + 1;
  std::vector<Clause> clauses = f.clauses();
  for (Clause& c : clauses) c.push_back(Literal{fresh, Polarity::positive});
  return CnfFormula(fresh, std::move(clauses));
}

TsdInstance canonicalNoTsd() {
  Graph g(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  return TsdInstance(std::move(g), {1}, {Triangle{2, 3, 4}});
}

std::pair<TsdInstance, ReductionTrace> naesat3ToTsd(const CnfFormula& f) {
  if (f.maxClauseSize() > 3) {
    throw std::invalid_argument("naesat3ToTsd needs clauses of size at most 3, got " +
                                std::to_string(f.maxClauseSize()));
  }
  const int n = f.numVars();
  ReductionTrace trace;
  trace.name = "nae3-to-tsd";
  trace.inputSize = {{"variables", n}, {"clauses", static_cast<std::int64_t>(f.numClauses())}};

  std::vector<const Clause*> kept;
  bool trivialNo = false;
  for (const Clause& c : f.clauses()) {
    if (hasComplementaryPair(c)) continue;
    if (c.size() <= 1) trivialNo = true;
    kept.push_back(&c);
  }
  if (trivialNo) {
    TsdInstance no = canonicalNoTsd();
    trace.outputSize = {{"vertices", 4}, {"independent", 1}, {"triangles", 1}};
    trace.names = {{"x", 1}, {"t1", 2}, {"t2", 3}, {"t3", 4}};
    return {std::move(no), std::move(trace)};
  }

  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  std::vector<Vertex> independent;
  for (Vertex v = 1; v <= 2 * n; ++v) independent.push_back(v);
  nameLiteralVertices(trace, n);
  Vertex next = 2 * n + 1;

  auto addTriangle = [&](const std::string& prefix) {
    Triangle t{next, next + 1, next + 2};
    next += 3;
    edges.push_back({t[0], t[1]});
    edges.push_back({t[1], t[2]});
    edges.push_back({t[0], t[2]});
    triangles.push_back(t);
    trace.names.emplace_back(prefix + ".a", t[0]);
    trace.names.emplace_back(prefix + ".b", t[1]);
    trace.names.emplace_back(prefix + ".c", t[2]);
    return t;
  };
  // Inequality triangle: forces c(u) != c(w) for u, w colored from {1,2}.
  auto inequality = [&](Vertex u, Vertex w, const std::string& prefix) {
    Triangle t = addTriangle(prefix);
    edges.push_back({u, t[0]});
    edges.push_back({u, t[2]});
    edges.push_back({w, t[1]});
  };

  for (int i = 1; i <= n; ++i) inequality(2 * i - 1, 2 * i, "var" + std::to_string(i));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    const Clause& c = *kept[j];
    const std::string prefix = "clause" + std::to_string(j + 1);
    if (c.size() == 2) {
      inequality(literalVertex(c[0]), literalVertex(c[1]), prefix);
    } else {
      Triangle t = addTriangle(prefix);
      for (int k = 0; k < 3; ++k) edges.push_back({literalVertex(c[k]), t[k]});
    }
  }
  const int numVertices = next - 1;
  trace.outputSize = {{"vertices", numVertices},
                      {"independent", static_cast<std::int64_t>(independent.size())},
                      {"triangles", static_cast<std::int64_t>(triangles.size())}};
  TsdInstance inst(Graph(numVertices, std::move(edges)), std::move(independent),
                   std::move(triangles));
  return {std::move(inst), std::move(trace)};
}

std::pair<Graph, ReductionTrace> directedHcToUndirected(const Digraph& g) {
  const int n = g.numVertices();
  std::vector<Edge> edges;
  ReductionTrace trace;
  trace.name = "karp-directed-to-undirected";
  trace.inputSize = {{"vertices", n}, {"arcs", static_cast<std::int64_t>(g.numArcs())}};
  for (Vertex v = 1; v <= n; ++v) {
    edges.push_back({3 * v - 2, 3 * v - 1});
    edges.push_back({3 * v - 1, 3 * v});
    const std::string base = "v" + std::to_string(v);
    trace.names.emplace_back(base + ".in", 3 * v - 2);
    trace.names.emplace_back(base + ".mid", 3 * v - 1);
    trace.names.emplace_back(base + ".out", 3 * v);
  }
  for (const auto& [u, v] : g.arcs()) edges.push_back({3 * u, 3 * v - 2});
  Graph out(3 * n, std::move(edges));
  trace.outputSize = {{"vertices", 3 * n}, {"edges", static_cast<std::int64_t>(out.numEdges())}};
  return {std::move(out), std::move(trace)};
}

}  // namespace sparsekit
