#include "sparsekit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace sparsekit {

std::string verdictName(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::timeout: return "timeout";
    case Verdict::refused: return "refused";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

// Node and wall-clock accounting shared by all engines.
class SearchBudget {
 public:
  explicit SearchBudget(const OracleLimits& limits) : limits_(limits), start_(Clock::now()) {}

  // Counts one node; false once a limit is exceeded.
  bool tick() {
    ++nodes_;
    if (exhausted_) return false;
    if (nodes_ > limits_.nodeBudget) {
      exhausted_ = true;
      reason_ = "node budget of " + std::to_string(limits_.nodeBudget) + " exceeded";
    } else if ((nodes_ & 1023) == 0 && elapsed() > limits_.seconds) {
      exhausted_ = true;
      reason_ = "time limit exceeded";
    }
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }

  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  OracleAnswer finish(Verdict v, std::optional<Certificate> cert = {}) const {
    OracleAnswer a;
    a.verdict = exhausted_ ? Verdict::timeout : v;
    if (a.verdict == Verdict::yes) a.certificate = std::move(cert);
    a.stats.nodes = nodes_;
    a.stats.elapsedSeconds = elapsed();
    a.detail = reason_;
    return a;
  }

 private:
  OracleLimits limits_;
  Clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::string reason_;
};

OracleAnswer refuse(const std::string& why) {
  OracleAnswer a;
  a.verdict = Verdict::refused;
  a.detail = why;
  return a;
}

OracleAnswer certified(OracleAnswer a, const DecisionInstance& di) {
  if (a.verdict == Verdict::yes) {
    if (!a.certificate || !checkCertificate(di, *a.certificate)) {
      throw std::logic_error("oracle produced an invalid certificate for " + problemName(di.problem()));
    }
  }
  return a;
}

// ---- boolean search (SAT, NAE, hypergraph 2-coloring) ------------------------

// Each constraint is a list of (index, wanted) pairs, checked as soon as its
// largest index is assigned: some pair must match, and in NAE mode some pair
// must also mismatch.
class BooleanSearch {
 public:
  BooleanSearch(int n, std::vector<std::vector<std::pair<int, bool>>> constraints, bool nae,
                SearchBudget& budget)
      : n_(n), nae_(nae), budget_(budget), value_(static_cast<std::size_t>(n) + 1, false) {
    byMax_.assign(static_cast<std::size_t>(n) + 1, {});
    for (auto& c : constraints) {
      int mx = 0;
      for (const auto& [i, wanted] : c) mx = std::max(mx, i);
      byMax_[static_cast<std::size_t>(mx)].push_back(std::move(c));
    }
  }

  std::optional<std::vector<bool>> run() {
    if (!satisfied(0)) return std::nullopt;
    if (!assign(1)) return std::nullopt;
    return std::vector<bool>(value_.begin() + 1, value_.end());
  }

 private:
  bool satisfied(int index) const {
    for (const auto& c : byMax_[static_cast<std::size_t>(index)]) {
      bool anyTrue = false, anyFalse = false;
      for (const auto& [i, wanted] : c) {
        (value_[static_cast<std::size_t>(i)] == wanted ? anyTrue : anyFalse) = true;
      }
      if (nae_ ? !(anyTrue && anyFalse) : !anyTrue) return false;
    }
    return true;
  }

  bool assign(int index) {
    if (index > n_) return true;
    // Complementing a NAE solution gives another one, so index 1 is fixed.
    const int options = nae_ && index == 1 ? 1 : 2;
    for (int o = 0; o < options; ++o) {
      if (!budget_.tick()) return false;
      value_[static_cast<std::size_t>(index)] = o == 1;
      if (satisfied(index) && assign(index + 1)) return true;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  int n_;
  bool nae_;
  SearchBudget& budget_;
  std::vector<bool> value_;
  std::vector<std::vector<std::vector<std::pair<int, bool>>>> byMax_;
};

std::vector<std::vector<std::pair<int, bool>>> literalConstraints(const CnfFormula& f) {
  std::vector<std::vector<std::pair<int, bool>>> out;
  for (const Clause& c : f.clauses()) {
    std::vector<std::pair<int, bool>> con;
    for (const Literal& l : c) con.emplace_back(l.variable, l.isPositive());
    out.push_back(std::move(con));
  }
  return out;
}

OracleAnswer solveCnf(const CnfFormula& f, bool nae, const OracleLimits& limits) {
  if (f.numVars() > limits.variableCap) {
    return refuse(std::to_string(f.numVars()) + " variables exceed the cap of " +
                  std::to_string(limits.variableCap));
  }
  SearchBudget budget(limits);
  BooleanSearch search(f.numVars(), literalConstraints(f), nae, budget);
  auto values = search.run();
  if (!values) return budget.finish(Verdict::no);
  return budget.finish(Verdict::yes, Assignment{std::move(*values)});
}

// ---- list coloring -----------------------------------------------------------

// Set of search depths, used for conflict sets.
class DepthSet {
 public:
  explicit DepthSet(std::size_t capacity = 0) : words_((capacity + 63) / 64, 0) {}

  void insert(std::size_t d) { words_[d / 64] |= std::uint64_t{1} << (d % 64); }
  void erase(std::size_t d) { words_[d / 64] &= ~(std::uint64_t{1} << (d % 64)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void unite(const DepthSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  // Largest member, or -1 when empty.
  long highest() const {
    for (std::size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != 0) return static_cast<long>(i * 64 + 63 - std::countl_zero(words_[i]));
    }
    return -1;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Forward checking with conflict-directed backjumping and dynamic ordering
// (fewest remaining colors, then highest degree, then lowest index). Singleton
// domains therefore always get assigned before any real branching. In
// symmetric mode only one so-far-unused color is tried per vertex; a skipped
// unused color would fail with the same conflict set, since no earlier
// assignment tells the two apart.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::vector<ColorMask> domains, bool symmetric,
                 SearchBudget& budget)
      : g_(g),
        n_(static_cast<std::size_t>(g.numVertices())),
        symmetric_(symmetric),
        budget_(budget),
        domain_(std::move(domains)),
        color_(n_, 0),
        used_(kMaxPalette + 1, 0),
        pruners_(n_),
        order_(n_, 0),
        remaining_(n_, 0),
        triedFresh_(n_, 0),
        conflicts_(n_, DepthSet(n_)) {}

  std::optional<std::vector<int>> run() {
    for (Vertex v = 1; v <= g_.numVertices(); ++v) {
      if (domain(v) == 0) return std::nullopt;
    }
    std::size_t depth = 0;
    bool descend = true;
    for (;;) {
      if (descend) {
        if (depth == n_) return color_;
        const Vertex v = pickVertex();
        order_[depth] = v;
        remaining_[depth] = domain(v);
        triedFresh_[depth] = 0;
        conflicts_[depth].clear();
      }
      if (tryNextValue(depth)) {
        ++depth;
        descend = true;
        continue;
      }
      if (budget_.exhausted()) return std::nullopt;
      // Every value of the vertex at `depth` failed: jump to the most recent
      // depth involved in the failure.
      const Vertex v = order_[depth];
      DepthSet culprits = conflicts_[depth];
      for (std::size_t d : pruners_[static_cast<std::size_t>(v - 1)]) culprits.insert(d);
      const long target = culprits.highest();
      if (target < 0) return std::nullopt;
      const auto h = static_cast<std::size_t>(target);
      culprits.erase(h);
      conflicts_[h].unite(culprits);
      while (depth > h) {
        --depth;
        unassign(depth);
      }
      descend = false;
    }
  }

 private:
  struct Pruning {
    Vertex v;
    ColorMask removed;
  };

  ColorMask& domain(Vertex v) { return domain_[static_cast<std::size_t>(v - 1)]; }
  int& color(Vertex v) { return color_[static_cast<std::size_t>(v - 1)]; }

  // Assigns the next viable value at `depth`; false when none is left.
  bool tryNextValue(std::size_t depth) {
    const Vertex v = order_[depth];
    while (remaining_[depth] != 0) {
      const int c = std::countr_zero(static_cast<unsigned>(remaining_[depth])) + 1;
      remaining_[depth] = static_cast<ColorMask>(remaining_[depth] & ~colorBit(c));
      if (symmetric_ && used_[static_cast<std::size_t>(c)] == 0) {
        if (triedFresh_[depth]) continue;
        triedFresh_[depth] = 1;
      }
      if (!budget_.tick()) return false;
      if (assign(depth, v, c)) return true;
    }
    return false;
  }

  // Colors v and prunes c from its uncolored neighbors. On a wipe-out the
  // pruning is undone, the explanation of the emptied domain joins the
  // conflict set at `depth`, and false is returned.
  bool assign(std::size_t depth, Vertex v, int c) {
    color(v) = c;
    ++used_[static_cast<std::size_t>(c)];
    const std::size_t mark = trail_.size();
    for (Vertex w : g_.neighbors(v)) {
      if (color(w) != 0 || !(domain(w) & colorBit(c))) continue;
      domain(w) = static_cast<ColorMask>(domain(w) & ~colorBit(c));
      trail_.push_back({w, colorBit(c)});
      pruners_[static_cast<std::size_t>(w - 1)].push_back(depth);
      if (domain(w) == 0) {
        for (std::size_t d : pruners_[static_cast<std::size_t>(w - 1)]) {
          if (d != depth) conflicts_[depth].insert(d);
        }
        undoPruning(mark);
        --used_[static_cast<std::size_t>(c)];
        color(v) = 0;
        return false;
      }
    }
    marks_.push_back(mark);
    return true;
  }

  void undoPruning(std::size_t mark) {
    while (trail_.size() > mark) {
      const Pruning p = trail_.back();
      trail_.pop_back();
      domain(p.v) = static_cast<ColorMask>(domain(p.v) | p.removed);
      pruners_[static_cast<std::size_t>(p.v - 1)].pop_back();
    }
  }

  void unassign(std::size_t depth) {
    const Vertex v = order_[depth];
    undoPruning(marks_.back());
    marks_.pop_back();
    --used_[static_cast<std::size_t>(color(v))];
    color(v) = 0;
  }

  Vertex pickVertex() {
    Vertex best = 0;
    int bestSize = 0, bestDegree = 0;
    for (Vertex v = 1; v <= g_.numVertices(); ++v) {
      if (color(v) != 0) continue;
      const int size = std::popcount(static_cast<unsigned>(domain(v)));
      const int degree = g_.degree(v);
      if (best == 0 || size < bestSize || (size == bestSize && degree > bestDegree)) {
        best = v;
        bestSize = size;
        bestDegree = degree;
      }
    }
    return best;
  }

  const Graph& g_;
  std::size_t n_;
  bool symmetric_;
  SearchBudget& budget_;
  std::vector<ColorMask> domain_;
  std::vector<int> color_;
  std::vector<int> used_;
  // Depths that removed colors from each vertex's domain, oldest first.
  std::vector<std::vector<std::size_t>> pruners_;
  std::vector<Vertex> order_;
  std::vector<ColorMask> remaining_;
  std::vector<char> triedFresh_;
  std::vector<DepthSet> conflicts_;
  std::vector<Pruning> trail_;
  std::vector<std::size_t> marks_;
};

OracleAnswer solveColoringCore(const Graph& g, std::vector<ColorMask> domains, bool symmetric,
                               const OracleLimits& limits) {
  SearchBudget budget(limits);
  ColoringSearch search(g, std::move(domains), symmetric, budget);
  auto colors = search.run();
  if (!colors) return budget.finish(Verdict::no);
  return budget.finish(Verdict::yes, Coloring{std::move(*colors)});
}

// ---- Hamiltonian cycles --------------------------------------------------------

class HamBacktrack {
 public:
  HamBacktrack(const Digraph& g, SearchBudget& budget)
      : g_(g), n_(g.numVertices()), budget_(budget), visited_(static_cast<std::size_t>(n_) + 1, 0) {}

  std::optional<std::vector<Vertex>> run() {
    if (n_ < 2) return std::nullopt;
    path_.push_back(1);
    visited_[1] = 1;
    if (extend(1)) return path_;
    return std::nullopt;
  }

 private:
  // Prunes the state and reports the successors worth trying from `cur`.
  bool candidates(Vertex cur, std::vector<Vertex>& out) {
    Vertex forced = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      if (visited_[static_cast<std::size_t>(v)]) continue;
      int inAvail = 0;
      bool fromCur = false;
      for (Vertex p : g_.predecessors(v)) {
        if (!visited_[static_cast<std::size_t>(p)] || p == cur) {
          ++inAvail;
          if (p == cur) fromCur = true;
        }
      }
      if (inAvail == 0) return false;
      bool outAvail = false;
      for (Vertex w : g_.successors(v)) {
        if (!visited_[static_cast<std::size_t>(w)] || w == 1) {
          outAvail = true;
          break;
        }
      }
      if (!outAvail) return false;
      if (inAvail == 1 && fromCur) {
        if (forced != 0) return false;
        forced = v;
      }
    }
    // Every unvisited vertex must be reachable from cur through unvisited ones.
    std::vector<Vertex> stack{cur};
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    seen[static_cast<std::size_t>(cur)] = 1;
    int reached = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g_.successors(u)) {
        if (visited_[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached != n_ - static_cast<int>(path_.size())) return false;
    if (forced != 0) {
      out.push_back(forced);
      return true;
    }
    for (Vertex w : g_.successors(cur)) {
      if (!visited_[static_cast<std::size_t>(w)]) out.push_back(w);
    }
    return true;
  }

  bool extend(Vertex cur) {
    if (static_cast<int>(path_.size()) == n_) return g_.hasArc(cur, 1);
    std::vector<Vertex> next;
    if (!candidates(cur, next)) return false;
    for (Vertex w : next) {
      if (!budget_.tick()) return false;
      visited_[static_cast<std::size_t>(w)] = 1;
      path_.push_back(w);
      if (extend(w)) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(w)] = 0;
      if (budget_.exhausted()) return false;
    }
    return false;
  }

  const Digraph& g_;
  int n_;
  SearchBudget& budget_;
  std::vector<char> visited_;
  std::vector<Vertex> path_;
};

Digraph symmetricDigraph(const Graph& g) {
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.edges()) {
    arcs.push_back({u, v});
    arcs.push_back({v, u});
  }
  return Digraph(g.numVertices(), std::move(arcs));
}

// ---- dominating sets -----------------------------------------------------------

class DomSetSearch {
 public:
  DomSetSearch(const Graph& g, bool connected, SearchBudget& budget)
      : g_(g),
        n_(g.numVertices()),
        connected_(connected),
        budget_(budget),
        coverCount_(static_cast<std::size_t>(n_) + 1, 0),
        inSet_(static_cast<std::size_t>(n_) + 1, 0),
        excluded_(static_cast<std::size_t>(n_) + 1, 0) {}

  std::optional<std::vector<Vertex>> run(std::int64_t limit) {
    limit_ = limit;
    if (search()) {
      std::vector<Vertex> out = set_;
      std::sort(out.begin(), out.end());
      return out;
    }
    return std::nullopt;
  }

 private:
  void add(Vertex v) {
    inSet_[static_cast<std::size_t>(v)] = 1;
    set_.push_back(v);
    ++coverCount_[static_cast<std::size_t>(v)];
    for (Vertex u : g_.neighbors(v)) ++coverCount_[static_cast<std::size_t>(u)];
  }
  void remove(Vertex v) {
    inSet_[static_cast<std::size_t>(v)] = 0;
    set_.pop_back();
    --coverCount_[static_cast<std::size_t>(v)];
    for (Vertex u : g_.neighbors(v)) --coverCount_[static_cast<std::size_t>(u)];
  }

  // Neighbors outside the set of the component of set_ containing its
  // smallest vertex; empty when the set is connected.
  std::vector<Vertex> componentFrontier() {
    if (set_.empty()) return {};
    const Vertex root = *std::min_element(set_.begin(), set_.end());
    std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
    std::vector<Vertex> stack{root};
    seen[static_cast<std::size_t>(root)] = 1;
    std::size_t size = 1;
    std::vector<char> frontier(static_cast<std::size_t>(n_) + 1, 0);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g_.neighbors(u)) {
        if (!inSet_[static_cast<std::size_t>(w)]) {
          frontier[static_cast<std::size_t>(w)] = 1;
        } else if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++size;
          stack.push_back(w);
        }
      }
    }
    if (size == set_.size()) return {};
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v) {
      if (frontier[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    if (out.empty()) out.push_back(0);  // disconnected with no way to join
    return out;
  }

  bool branch(const std::vector<Vertex>& candidates) {
    if (static_cast<std::int64_t>(set_.size()) >= limit_) return false;
    std::vector<Vertex> newlyExcluded;
    bool found = false;
    for (Vertex w : candidates) {
      if (w == 0 || inSet_[static_cast<std::size_t>(w)] || excluded_[static_cast<std::size_t>(w)]) continue;
      if (!budget_.tick()) break;
      add(w);
      found = search();
      if (found) break;
      remove(w);
      if (budget_.exhausted()) break;
      excluded_[static_cast<std::size_t>(w)] = 1;
      newlyExcluded.push_back(w);
    }
    for (Vertex w : newlyExcluded) excluded_[static_cast<std::size_t>(w)] = 0;
    return found;
  }

  bool search() {
    Vertex undominated = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      if (coverCount_[static_cast<std::size_t>(v)] == 0) {
        undominated = v;
        break;
      }
    }
    if (undominated == 0) {
      if (!connected_) return true;
      std::vector<Vertex> frontier = componentFrontier();
      if (frontier.empty()) return true;
      return branch(frontier);
    }
    std::vector<Vertex> closed{undominated};
    for (Vertex u : g_.neighbors(undominated)) closed.push_back(u);
    std::sort(closed.begin(), closed.end());
    return branch(closed);
  }

  const Graph& g_;
  int n_;
  bool connected_;
  SearchBudget& budget_;
  std::int64_t limit_ = 0;
  std::vector<int> coverCount_;
  std::vector<char> inSet_;
  std::vector<char> excluded_;
  std::vector<Vertex> set_;
};

}  // namespace

OracleAnswer solveSat(const CnfFormula& f, const OracleLimits& limits) {
  return certified(solveCnf(f, false, limits), DecisionInstance(Problem::sat, f));
}

OracleAnswer solveNae(const CnfFormula& f, const OracleLimits& limits) {
  return certified(solveCnf(f, true, limits), DecisionInstance(Problem::nae, f));
}

OracleAnswer solveHypergraph2Col(const Hypergraph& h, const OracleLimits& limits) {
  if (h.numVertices() > limits.variableCap) {
    return refuse(std::to_string(h.numVertices()) + " vertices exceed the cap of " +
                  std::to_string(limits.variableCap));
  }
  std::vector<std::vector<std::pair<int, bool>>> constraints;
  for (const auto& e : h.edges()) {
    std::vector<std::pair<int, bool>> con;
    for (Vertex v : e) con.emplace_back(v, true);
    constraints.push_back(std::move(con));
  }
  SearchBudget budget(limits);
  BooleanSearch search(h.numVertices(), std::move(constraints), true, budget);
  auto values = search.run();
  OracleAnswer a;
  if (!values) {
    a = budget.finish(Verdict::no);
  } else {
    std::vector<int> colors;
    for (bool b : *values) colors.push_back(b ? 2 : 1);
    a = budget.finish(Verdict::yes, Coloring{std::move(colors)});
  }
  return certified(std::move(a), DecisionInstance(Problem::hypergraph2col, h));
}

OracleAnswer solveListColoring(const ListColoringInstance& inst, const OracleLimits& limits) {
  return certified(solveColoringCore(inst.graph(), inst.lists(), false, limits),
                   DecisionInstance(Problem::listColoring, inst));
}

OracleAnswer solveTsd(const TsdInstance& inst, const OracleLimits& limits) {
  const Graph& g = inst.graph();
  std::vector<ColorMask> domains(static_cast<std::size_t>(g.numVertices()),
                                 colorBit(1) | colorBit(2) | colorBit(3));
  for (Vertex v : inst.independent()) domains[static_cast<std::size_t>(v - 1)] = colorBit(1) | colorBit(2);
  return certified(solveColoringCore(g, std::move(domains), false, limits),
                   DecisionInstance(Problem::tsd, inst));
}

OracleAnswer solveColoring(const Graph& g, int paletteSize, const OracleLimits& limits) {
  if (paletteSize < 1 || paletteSize > kMaxPalette) throw std::invalid_argument("palette size out of range");
  const ColorMask full = static_cast<ColorMask>((1u << paletteSize) - 1);
  OracleAnswer a = solveColoringCore(
      g, std::vector<ColorMask>(static_cast<std::size_t>(g.numVertices()), full), true, limits);
  if (a.yes()) {
    const auto& c = std::get<Coloring>(*a.certificate);
    if (!isProperColoring(g, c, paletteSize)) throw std::logic_error("oracle produced an improper coloring");
  }
  return a;
}

OracleAnswer solveHamCycleDp(const Digraph& g, const OracleLimits& limits) {
  const int n = g.numVertices();
  if (n > kHamDpMaxVertices) {
    return refuse("subset DP handles at most " + std::to_string(kHamDpMaxVertices) + " vertices");
  }
  SearchBudget budget(limits);
  if (n < 2) return certified(budget.finish(Verdict::no), DecisionInstance(Problem::directedHamCycle, g));
  std::vector<std::uint32_t> succ(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.arcs()) succ[static_cast<std::size_t>(u - 1)] |= 1u << (v - 1);
  const std::uint32_t full = (1u << n) - 1;
  // ends[mask]: vertices at which a path from vertex 1 covering mask can end.
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    std::uint32_t e = ends[mask];
    while (e) {
      const int v = std::countr_zero(e);
      e &= e - 1;
      if (!budget.tick()) {
        return certified(budget.finish(Verdict::no), DecisionInstance(Problem::directedHamCycle, g));
      }
      std::uint32_t out = succ[static_cast<std::size_t>(v)] & ~mask;
      while (out) {
        const int w = std::countr_zero(out);
        out &= out - 1;
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  int last = -1;
  for (int v = 0; v < n; ++v) {
    if ((ends[full] >> v & 1) && (succ[static_cast<std::size_t>(v)] & 1u)) {
      last = v;
      break;
    }
  }
  OracleAnswer a;
  if (last < 0) {
    a = budget.finish(Verdict::no);
  } else {
    std::vector<Vertex> order;
    std::uint32_t mask = full;
    int cur = last;
    while (cur != 0) {
      order.push_back(cur + 1);
      const std::uint32_t prevMask = mask & ~(1u << cur);
      int prev = -1;
      for (int p = 0; p < n; ++p) {
        if ((ends[prevMask] >> p & 1) && (succ[static_cast<std::size_t>(p)] >> cur & 1)) {
          prev = p;
          break;
        }
      }
      mask = prevMask;
      cur = prev;
    }
    order.push_back(1);
    std::reverse(order.begin(), order.end());
    a = budget.finish(Verdict::yes, HamCycle{std::move(order)});
  }
  return certified(std::move(a), DecisionInstance(Problem::directedHamCycle, g));
}

OracleAnswer solveHamCycleBacktrack(const Digraph& g, const OracleLimits& limits) {
  SearchBudget budget(limits);
  HamBacktrack search(g, budget);
  auto path = search.run();
  OracleAnswer a = path ? budget.finish(Verdict::yes, HamCycle{std::move(*path)})
                        : budget.finish(Verdict::no);
  return certified(std::move(a), DecisionInstance(Problem::directedHamCycle, g));
}

OracleAnswer solveHamCycle(const Digraph& g, const OracleLimits& limits) {
  return g.numVertices() <= kHamDpMaxVertices ? solveHamCycleDp(g, limits)
                                              : solveHamCycleBacktrack(g, limits);
}

OracleAnswer solveHamCycle(const Graph& g, const OracleLimits& limits) {
  OracleAnswer a;
  if (g.numVertices() < 3) {
    a.verdict = Verdict::no;
  } else {
    a = solveHamCycleBacktrack(symmetricDigraph(g), limits);
  }
  return certified(std::move(a), DecisionInstance(Problem::hamCycle, g));
}

OracleAnswer solveHamPathST(const BipartiteHamInstance& inst, const OracleLimits& limits) {
  // Hamiltonian s-t paths correspond to Hamiltonian cycles of the digraph with
  // arcs into s and out of t removed and the arc t -> s added.
  const Graph& g = inst.graph();
  const Vertex s = inst.s(), t = inst.t();
  std::vector<Arc> arcs{{t, s}};
  for (const auto& [u, v] : g.edges()) {
    for (const auto& [a, b] : {Arc{u, v}, Arc{v, u}}) {
      if (b != s && a != t) arcs.push_back({a, b});
    }
  }
  // Relabel so that the cycle search starts at s.
  const int n = g.numVertices();
  auto relabel = [&](Vertex v) { return v == s ? 1 : (v == 1 ? s : v); };
  for (auto& [a, b] : arcs) {
    a = relabel(a);
    b = relabel(b);
  }
  OracleAnswer a = solveHamCycle(Digraph(n, std::move(arcs)), limits);
  if (a.yes()) {
    std::vector<Vertex> order = std::get<HamCycle>(*a.certificate).order;
    for (Vertex& v : order) v = relabel(v);
    a.certificate = HamCycle{std::move(order)};
  }
  return certified(std::move(a), DecisionInstance(Problem::hamPathST, inst));
}

OracleAnswer solveDomSet(const Graph& g, std::int64_t budgetSize, bool connected,
                         const OracleLimits& limits) {
  const Problem p = connected ? Problem::connectedDomSet : Problem::domSet;
  if (budgetSize > limits.budgetCap && budgetSize < g.numVertices()) {
    return refuse("budget " + std::to_string(budgetSize) + " exceeds the cap of " +
                  std::to_string(limits.budgetCap));
  }
  SearchBudget budget(limits);
  DomSetSearch search(g, connected, budget);
  OracleAnswer a;
  a = budget.finish(Verdict::no);
  // Iterative deepening returns a minimum-size set.
  const std::int64_t maxSize = std::min<std::int64_t>(budgetSize, g.numVertices());
  for (std::int64_t size = 0; size <= maxSize; ++size) {
    auto set = search.run(size);
    if (set) {
      a = budget.finish(Verdict::yes, DomSet{std::move(*set)});
      break;
    }
    if (budget.exhausted()) {
      a = budget.finish(Verdict::no);
      break;
    }
  }
  return certified(std::move(a), DecisionInstance(p, g, budgetSize));
}

OracleAnswer solveColRbds(const EqColRbdsInstance& inst, const OracleLimits& limits) {
  SearchBudget budget(limits);
  const Graph& g = inst.graph();
  const auto& classes = inst.colorClasses();
  std::vector<int> covered(static_cast<std::size_t>(g.numVertices()) + 1, 0);
  std::vector<Vertex> chosen;
  auto allBlueCovered = [&] {
    return std::all_of(inst.blue().begin(), inst.blue().end(),
                       [&](Vertex b) { return covered[static_cast<std::size_t>(b)] > 0; });
  };
  auto pick = [&](auto&& self, std::size_t cls) -> bool {
    if (cls == classes.size()) return allBlueCovered();
    for (Vertex r : classes[cls]) {
      if (!budget.tick()) return false;
      chosen.push_back(r);
      for (Vertex b : g.neighbors(r)) ++covered[static_cast<std::size_t>(b)];
      if (self(self, cls + 1)) return true;
      for (Vertex b : g.neighbors(r)) --covered[static_cast<std::size_t>(b)];
      chosen.pop_back();
      if (budget.exhausted()) return false;
    }
    return false;
  };
  OracleAnswer a = pick(pick, 0) ? budget.finish(Verdict::yes, DomSet{chosen}) : budget.finish(Verdict::no);
  return certified(std::move(a), DecisionInstance(Problem::colRbds, inst));
}

OracleAnswer solve(const DecisionInstance& di, const OracleLimits& limits) {
  const AnyInstance& inst = di.instance();
  switch (di.problem()) {
    case Problem::sat: return solveSat(std::get<CnfFormula>(inst), limits);
    case Problem::nae: return solveNae(std::get<CnfFormula>(inst), limits);
    case Problem::hypergraph2col: return solveHypergraph2Col(std::get<Hypergraph>(inst), limits);
    case Problem::fourColoring:
      return certified(solveColoring(std::get<Graph>(inst), 4, limits), di);
    case Problem::hamCycle: return solveHamCycle(std::get<Graph>(inst), limits);
    case Problem::directedHamCycle: return solveHamCycle(std::get<Digraph>(inst), limits);
    case Problem::domSet: return solveDomSet(std::get<Graph>(inst), *di.budget(), false, limits);
    case Problem::connectedDomSet:
      return solveDomSet(std::get<Graph>(inst), *di.budget(), true, limits);
    case Problem::tsd: return solveTsd(std::get<TsdInstance>(inst), limits);
    case Problem::hamPathST: return solveHamPathST(std::get<BipartiteHamInstance>(inst), limits);
    case Problem::colRbds: return solveColRbds(std::get<EqColRbdsInstance>(inst), limits);
    case Problem::listColoring: return solveListColoring(std::get<ListColoringInstance>(inst), limits);
  }
  throw std::logic_error("unknown problem");
}

}  // namespace sparsekit
