#include "sparsekit/generate.hpp"

#include <algorithm>
#include <numeric>

namespace sparsekit {

namespace {

// k distinct values from 1..n in random order.
std::vector<int> sample(int n, int k, CounterRng& rng) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(n - i));
    std::swap(all[static_cast<std::size_t>(i)], all[j]);
  }
  all.resize(static_cast<std::size_t>(k));
  return all;
}

void requireParam(bool ok, const std::string& message) {
  if (!ok) throw GeneratorError(message);
}

}  // namespace

CnfFormula generateCnf(const CnfParams& p, CounterRng& rng) {
  requireParam(p.numVars >= 0 && p.numClauses >= 0, "negative size");
  requireParam(p.minClauseSize >= 1 && p.minClauseSize <= p.maxClauseSize,
               "clause sizes need 1 <= min <= max");
  requireParam(p.numClauses == 0 || p.maxClauseSize <= p.numVars, "clause size exceeds variable count");
  std::vector<Clause> clauses;
  for (int c = 0; c < p.numClauses; ++c) {
    const int size = rng.between(p.minClauseSize, p.maxClauseSize);
    Clause clause;
    for (int v : sample(p.numVars, size, rng)) {
      clause.push_back(Literal{v, rng.chance(1, 2) ? Polarity::positive : Polarity::negative});
    }
    clauses.push_back(std::move(clause));
  }
  return CnfFormula(p.numVars, std::move(clauses));
}

Hypergraph generateHypergraph(const HypergraphParams& p, CounterRng& rng) {
  requireParam(p.numVertices >= 0 && p.numEdges >= 0, "negative size");
  requireParam(p.minEdgeSize >= 1 && p.minEdgeSize <= p.maxEdgeSize, "edge sizes need 1 <= min <= max");
  requireParam(p.numEdges == 0 || p.maxEdgeSize <= p.numVertices, "edge size exceeds vertex count");
  std::vector<std::vector<Vertex>> edges;
  for (int e = 0; e < p.numEdges; ++e) {
    edges.push_back(sample(p.numVertices, rng.between(p.minEdgeSize, p.maxEdgeSize), rng));
  }
  return Hypergraph(p.numVertices, std::move(edges));
}

Digraph generateDigraph(const DigraphParams& p, CounterRng& rng) {
  requireParam(p.numVertices >= 1, "a digraph needs at least one vertex");
  std::vector<Arc> arcs;
  const int n = p.numVertices;
  if (p.plantCycle && n >= 2) {
    auto order = sample(n, n, rng);
    for (int i = 0; i < n; ++i) {
      arcs.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>((i + 1) % n)]});
    }
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v && rng.bernoulli(p.arcProbability)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

TsdInstance generateTsd(const TsdParams& p, CounterRng& rng) {
  requireParam(p.independentSize >= 0 && p.numTriangles >= 0, "negative size");
  requireParam(p.plant != Plant::no || (p.independentSize >= 1 && p.numTriangles >= 1),
               "a planted no-instance needs a vertex in X and a triangle");
  const int m = p.independentSize;
  const int n = m + 3 * p.numTriangles;
  std::vector<int> hidden(static_cast<std::size_t>(n) + 1, 0);
  for (int x = 1; x <= m; ++x) hidden[static_cast<std::size_t>(x)] = rng.between(1, 2);
  std::vector<Edge> edges;
  std::vector<Triangle> triangles;
  for (int t = 0; t < p.numTriangles; ++t) {
    const Vertex base = m + 3 * t + 1;
    Triangle tri{base, base + 1, base + 2};
    triangles.push_back(tri);
    edges.insert(edges.end(), {{tri[0], tri[1]}, {tri[1], tri[2]}, {tri[0], tri[2]}});
    std::vector<int> colors{1, 2, 3};
    rng.shuffle(colors);
    for (int i = 0; i < 3; ++i) hidden[static_cast<std::size_t>(tri[static_cast<std::size_t>(i)])] = colors[static_cast<std::size_t>(i)];
  }
  for (Vertex x = 1; x <= m; ++x) {
    for (Vertex y = m + 1; y <= n; ++y) {
      const bool compatible = hidden[static_cast<std::size_t>(x)] != hidden[static_cast<std::size_t>(y)];
      if (rng.bernoulli(p.edgeProbability) && (p.plant != Plant::yes || compatible)) edges.push_back({x, y});
    }
  }
  if (p.plant == Plant::no) {
    const Vertex x = rng.between(1, m);
    for (Vertex y : triangles[rng.below(triangles.size())]) edges.push_back({x, y});
  }
  std::vector<Vertex> independent(static_cast<std::size_t>(m));
  std::iota(independent.begin(), independent.end(), 1);
  return TsdInstance(Graph(n, std::move(edges)), std::move(independent), std::move(triangles));
}

BipartiteHamInstance generateBipartiteHam(const BipartiteHamParams& p, CounterRng& rng) {
  requireParam(p.sideA >= 1, "side A needs at least one vertex");
  requireParam(p.sideB == p.sideA + 1, "bipartite Hamiltonian instances need |B| = |A| + 1");
  requireParam(p.plant != Plant::no || p.sideA >= 2,
               "every instance with |A| = 1 is a yes-instance");
  const int m = p.sideA, n = p.sideB;
  const Vertex s = m + 1, t = m + n;
  std::vector<Edge> edges;
  if (p.plant == Plant::yes) {
    auto as = sample(m, m, rng);
    std::vector<Vertex> inner;
    for (Vertex b = m + 2; b < t; ++b) inner.push_back(b);
    rng.shuffle(inner);
    std::vector<Vertex> path{s};
    for (int i = 0; i < m; ++i) {
      path.push_back(as[static_cast<std::size_t>(i)]);
      path.push_back(i + 1 < m ? inner[static_cast<std::size_t>(i)] : t);
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.push_back({path[i], path[i + 1]});
  } else if (p.plant == Plant::no) {
    const Vertex a = rng.between(1, m);
    edges.push_back({s, a});
    edges.push_back({t, a});
  } else {
    edges.push_back({s, rng.between(1, m)});
    edges.push_back({t, rng.between(1, m)});
  }
  for (Vertex a = 1; a <= m; ++a) {
    for (Vertex b = m + 2; b < t; ++b) {
      if (rng.bernoulli(p.edgeProbability)) edges.push_back({a, b});
    }
  }
  std::vector<Vertex> A(static_cast<std::size_t>(m)), B(static_cast<std::size_t>(n));
  std::iota(A.begin(), A.end(), 1);
  std::iota(B.begin(), B.end(), m + 1);
  return BipartiteHamInstance(Graph(m + n, std::move(edges)), std::move(A), std::move(B), s, t);
}

EqColRbdsInstance generateEqColRbds(const EqColRbdsParams& p, CounterRng& rng) {
  requireParam(p.k >= 1 && p.classSize >= 1 && p.numBlue >= 0, "need k >= 1 and classSize >= 1");
  requireParam(p.plant != Plant::no || (p.classSize >= 2 && p.numBlue >= 2),
               "a planted no-instance needs classSize >= 2 and two blue vertices");
  const int red = p.k * p.classSize;
  std::vector<std::vector<Vertex>> classes;
  std::vector<std::vector<Vertex>> active;
  for (int c = 0; c < p.k; ++c) {
    std::vector<Vertex> cls;
    for (int i = 0; i < p.classSize; ++i) cls.push_back(c * p.classSize + i + 1);
    const int live = rng.between(p.plant == Plant::no && c == 0 ? 2 : 1, p.classSize);
    active.emplace_back(cls.begin(), cls.begin() + live);
    classes.push_back(std::move(cls));
  }
  std::vector<Vertex> blue;
  for (int b = 1; b <= p.numBlue; ++b) blue.push_back(red + b);

  std::vector<Edge> edges;
  std::vector<Vertex> chosen;
  std::size_t firstNoisy = 0;
  if (p.plant == Plant::yes) {
    for (const auto& cls : active) chosen.push_back(cls[rng.below(cls.size())]);
    for (Vertex b : blue) edges.push_back({chosen[rng.below(chosen.size())], b});
  } else if (p.plant == Plant::no) {
    edges.push_back({active[0][0], blue[0]});
    edges.push_back({active[0][1], blue[1]});
    firstNoisy = 2;
  }
  for (const auto& cls : active) {
    for (Vertex r : cls) {
      for (std::size_t i = firstNoisy; i < blue.size(); ++i) {
        if (rng.bernoulli(p.edgeProbability)) edges.push_back({r, blue[i]});
      }
    }
  }
  // No isolated blue vertices.
  std::vector<char> covered(static_cast<std::size_t>(red + p.numBlue) + 1, 0);
  for (const auto& [u, v] : edges) covered[static_cast<std::size_t>(v)] = 1;
  for (Vertex b : blue) {
    if (covered[static_cast<std::size_t>(b)]) continue;
    const auto& cls = active[rng.below(active.size())];
    edges.push_back({cls[rng.below(cls.size())], b});
  }
  return EqColRbdsInstance(Graph(red + p.numBlue, std::move(edges)), std::move(classes), std::move(blue));
}

}  // namespace sparsekit
