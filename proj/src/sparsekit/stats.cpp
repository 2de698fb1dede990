#include "sparsekit/stats.hpp"

#include <map>
#include <sstream>

#include "sparsekit/kernel.hpp"

namespace sparsekit {

namespace {

// "r=2:6 (bound 4), r=3:1 (bound 16); total 7 (bound 32)" for sets of sizes
// over a ground set of n elements.
std::string sizeProfile(const std::map<int, std::size_t>& bySize, std::uint64_t n) {
  std::ostringstream out;
  if (bySize.empty()) {
    out << "none; total 0 (bound 0)";
    return out.str();
  }
  std::size_t total = 0;
  bool first = true;
  for (const auto& [r, count] : bySize) {
    out << (first ? "" : ", ") << "r=" << r << ':' << count;
    if (r >= 1) out << " (bound " << saturatingPower(n, r - 1) << ')';
    first = false;
    total += count;
  }
  const int d = bySize.rbegin()->first;
  const std::uint64_t bound = d >= 1 ? 2 * saturatingPower(n, d - 1) : 0;
  out << "; total " << total << " (bound " << bound << ')';
  return out.str();
}

struct Summarizer {
  std::optional<std::int64_t> budget;

  std::string operator()(const CnfFormula& f) const {
    std::map<int, std::size_t> bySize;
    for (const Clause& c : f.clauses()) ++bySize[static_cast<int>(c.size())];
    return "cnf: n=" + std::to_string(f.numVars()) + ", clauses: " +
           sizeProfile(bySize, 2 * static_cast<std::uint64_t>(f.numVars()));
  }
  std::string operator()(const Hypergraph& h) const {
    std::map<int, std::size_t> bySize;
    for (const auto& e : h.edges()) ++bySize[static_cast<int>(e.size())];
    return "hypergraph: n=" + std::to_string(h.numVertices()) + ", edges: " +
           sizeProfile(bySize, static_cast<std::uint64_t>(h.numVertices()));
  }
  std::string operator()(const Graph& g) const {
    std::string s = "graph: n=" + std::to_string(g.numVertices()) + ", edges=" + std::to_string(g.numEdges());
    if (budget) s += ", budget=" + std::to_string(*budget);
    return s;
  }
  std::string operator()(const Digraph& g) const {
    return "digraph: n=" + std::to_string(g.numVertices()) + ", arcs=" + std::to_string(g.numArcs());
  }
  std::string operator()(const TsdInstance& t) const {
    return "tsd: n=" + std::to_string(t.graph().numVertices()) + ", edges=" +
           std::to_string(t.graph().numEdges()) + ", |X|=" + std::to_string(t.independent().size()) +
           ", triangles=" + std::to_string(t.triangles().size());
  }
  std::string operator()(const BipartiteHamInstance& b) const {
    return "bipartite-ham: n=" + std::to_string(b.graph().numVertices()) + ", edges=" +
           std::to_string(b.graph().numEdges()) + ", |A|=" + std::to_string(b.sideA().size()) +
           ", |B|=" + std::to_string(b.sideB().size()) + ", s=" + std::to_string(b.s()) +
           ", t=" + std::to_string(b.t());
  }
  std::string operator()(const EqColRbdsInstance& r) const {
    return "eq-col-rbds: k=" + std::to_string(r.k()) + ", class size=" + std::to_string(r.classSize()) +
           ", |B|=" + std::to_string(r.blue().size()) + ", edges=" + std::to_string(r.graph().numEdges());
  }
  std::string operator()(const ListColoringInstance& l) const {
    return "list-coloring: n=" + std::to_string(l.graph().numVertices()) + ", edges=" +
           std::to_string(l.graph().numEdges()) + ", palette=" + std::to_string(l.paletteSize());
  }
};

}  // namespace

std::string instanceStats(const AnyInstance& instance, std::optional<std::int64_t> budget) {
  return std::visit(Summarizer{budget}, instance);
}

}  // namespace sparsekit
