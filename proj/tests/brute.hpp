#pragma once

// Naive reference procedures used only by the tests. They share no code with
// the library beyond the value types, so agreement is independent evidence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "sparsekit/model.hpp"

namespace brute {

using namespace sparsekit;

inline bool litTrue(const Literal& l, std::uint32_t mask) {
  const bool v = ((mask >> (l.variable - 1)) & 1u) != 0;
  return l.isPositive() ? v : !v;
}

inline bool sat(const CnfFormula& f) {
  for (std::uint32_t mask = 0; mask < (1u << f.numVars()); ++mask) {
    bool all = true;
    for (const auto& c : f.clauses()) {
      if (std::none_of(c.begin(), c.end(), [&](const Literal& l) { return litTrue(l, mask); })) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline bool nae(const CnfFormula& f) {
  for (std::uint32_t mask = 0; mask < (1u << f.numVars()); ++mask) {
    bool all = true;
    for (const auto& c : f.clauses()) {
      const bool someTrue = std::any_of(c.begin(), c.end(), [&](const Literal& l) { return litTrue(l, mask); });
      const bool someFalse = std::any_of(c.begin(), c.end(), [&](const Literal& l) { return !litTrue(l, mask); });
      if (!someTrue || !someFalse) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline bool twoColorable(const Hypergraph& h) {
  for (std::uint32_t mask = 0; mask < (1u << h.numVertices()); ++mask) {
    bool all = true;
    for (const auto& e : h.edges()) {
      const bool red = std::any_of(e.begin(), e.end(), [&](Vertex v) { return ((mask >> (v - 1)) & 1u) != 0; });
      const bool blue = std::any_of(e.begin(), e.end(), [&](Vertex v) { return ((mask >> (v - 1)) & 1u) == 0; });
      if (!red || !blue) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// Plain backtracking in vertex order; allowed(v) is a bitmask over colors 1..palette.
inline bool listColorable(const Graph& g, int palette, const std::function<unsigned(Vertex)>& allowed) {
  const int n = g.numVertices();
  std::vector<int> color(static_cast<std::size_t>(n) + 1, 0);
  std::function<bool(Vertex)> go = [&](Vertex v) {
    if (v > n) return true;
    for (int c = 1; c <= palette; ++c) {
      if ((allowed(v) & (1u << (c - 1))) == 0) continue;
      bool clash = false;
      for (Vertex u : g.neighbors(v)) {
        if (u < v && color[static_cast<std::size_t>(u)] == c) clash = true;
      }
      if (clash) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (go(v + 1)) return true;
    }
    color[static_cast<std::size_t>(v)] = 0;
    return false;
  };
  return go(1);
}

inline bool colorable(const Graph& g, int palette) {
  return listColorable(g, palette, [&](Vertex) { return (1u << palette) - 1; });
}

inline bool tsd(const TsdInstance& inst) {
  std::vector<char> inX(static_cast<std::size_t>(inst.graph().numVertices()) + 1, 0);
  for (Vertex x : inst.independent()) inX[static_cast<std::size_t>(x)] = 1;
  return listColorable(inst.graph(), 3, [&](Vertex v) { return inX[static_cast<std::size_t>(v)] ? 3u : 7u; });
}

inline bool hamCycle(int n, const std::function<bool(Vertex, Vertex)>& adjacent) {
  if (n < 2) return false;
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  do {
    bool ok = true;
    for (int i = 0; ok && i < n; ++i) ok = adjacent(order[i], order[(i + 1) % n]);
    if (ok) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

inline bool hamCycle(const Digraph& g) {
  return hamCycle(g.numVertices(), [&](Vertex u, Vertex v) { return g.hasArc(u, v); });
}

inline bool hamCycle(const Graph& g) {
  return g.numVertices() >= 3 && hamCycle(g.numVertices(), [&](Vertex u, Vertex v) { return g.hasEdge(u, v); });
}

inline bool hamPathST(const BipartiteHamInstance& inst) {
  const Graph& g = inst.graph();
  std::vector<Vertex> middle;
  for (Vertex v = 1; v <= g.numVertices(); ++v) {
    if (v != inst.s() && v != inst.t()) middle.push_back(v);
  }
  std::sort(middle.begin(), middle.end());
  do {
    std::vector<Vertex> path{inst.s()};
    path.insert(path.end(), middle.begin(), middle.end());
    path.push_back(inst.t());
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) ok = g.hasEdge(path[i], path[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(middle.begin(), middle.end()));
  return false;
}

inline bool connectedSubset(const Graph& g, std::uint32_t set) {
  if (set == 0) return false;
  const int first = __builtin_ctz(set) + 1;
  std::uint32_t seen = 1u << (first - 1);
  std::vector<Vertex> stack{first};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      const std::uint32_t bit = 1u << (u - 1);
      if ((set & bit) && !(seen & bit)) {
        seen |= bit;
        stack.push_back(u);
      }
    }
  }
  return seen == set;
}

// Subsets of at most `budget` vertices; n <= 24.
inline bool domSet(const Graph& g, std::int64_t budget, bool connected) {
  const int n = g.numVertices();
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    if (__builtin_popcount(set) > budget) continue;
    std::uint32_t dominated = set;
    for (Vertex v = 1; v <= n; ++v) {
      if (set & (1u << (v - 1))) {
        for (Vertex u : g.neighbors(v)) dominated |= 1u << (u - 1);
      }
    }
    if (dominated != (1u << n) - 1) continue;
    if (connected && !connectedSubset(g, set)) continue;
    return true;
  }
  return false;
}

inline bool colRbds(const EqColRbdsInstance& inst) {
  const auto& classes = inst.colorClasses();
  std::vector<std::size_t> pick(classes.size(), 0);
  for (;;) {
    bool all = true;
    for (Vertex b : inst.blue()) {
      bool hit = false;
      for (std::size_t c = 0; c < classes.size(); ++c) hit = hit || inst.graph().hasEdge(classes[c][pick[c]], b);
      all = all && hit;
    }
    if (all) return true;
    std::size_t c = 0;
    while (c < classes.size() && ++pick[c] == classes[c].size()) pick[c++] = 0;
    if (c == classes.size()) return false;
  }
}

// Rank of a dense rational matrix given by columns.
inline std::size_t rank(std::vector<std::vector<mpq_class>> cols) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols.front().size();
  std::size_t r = 0;
  for (std::size_t row = 0; row < rows && r < cols.size(); ++row) {
    std::size_t pivot = r;
    while (pivot < cols.size() && cols[pivot][row] == 0) ++pivot;
    if (pivot == cols.size()) continue;
    std::swap(cols[r], cols[pivot]);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (c == r || cols[c][row] == 0) continue;
      const mpq_class factor = cols[c][row] / cols[r][row];
      for (std::size_t i = 0; i < rows; ++i) cols[c][i] -= factor * cols[r][i];
    }
    ++r;
  }
  return r;
}

}  // namespace brute
