#include "sparsekit/kernel.hpp"

#include <algorithm>
#include <limits>

#include "sparsekit/reduce.hpp"

namespace sparsekit {

std::uint64_t saturatingPower(std::uint64_t n, int e) {
  std::uint64_t result = 1;
  for (int i = 0; i < e; ++i) {
    if (n != 0 && result > std::numeric_limits<std::uint64_t>::max() / n) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= n;
  }
  return result;
}

bool KernelReport::boundsHold() const {
  if (canonicalNo) return true;
  std::uint64_t total = 0;
  for (const SizeCount& s : perSize) {
    if (s.output > s.input || s.output > s.bound) return false;
    total += s.output;
  }
  return maxEdgeSize == 0 || total <= totalBound;
}

nlohmann::json KernelReport::toJson() const {
  nlohmann::json doc;
  doc["mode"] = mode;
  if (prime) doc["prime"] = *prime;
  doc["n"] = numVertices;
  doc["d"] = maxEdgeSize;
  doc["canonical_no"] = canonicalNo;
  doc["input_edges"] = inputEdges;
  doc["output_edges"] = outputEdges;
  doc["total_bound"] = totalBound;
  doc["per_size"] = nlohmann::json::array();
  for (const SizeCount& s : perSize) {
    doc["per_size"].push_back(
        {{"r", s.r}, {"input", s.input}, {"output", s.output}, {"bound", s.bound}});
  }
  if (inputClauses) doc["input_clauses"] = *inputClauses;
  if (outputClauses) doc["output_clauses"] = *outputClauses;
  doc["bounds_hold"] = boundsHold();
  return doc;
}

HypergraphKernel sparsifyHypergraph(const Hypergraph& h, RankMode mode) {
  HypergraphKernel result;
  KernelReport& report = result.report;
  const int n = h.numVertices();
  report.mode = mode.name();
  report.numVertices = n;
  report.inputEdges = h.numEdges();

  const bool hasEmpty = std::any_of(h.edges().begin(), h.edges().end(),
                                    [](const auto& e) { return e.empty(); });
  if (hasEmpty) {
    report.canonicalNo = true;
    report.outputEdges = 1;
    result.output = Hypergraph(n, {{}});
    for (std::size_t i = 0; i < h.numEdges(); ++i) {
      if (h.edges()[i].empty()) {
        result.keptEdges.push_back(i);
        break;
      }
    }
    return result;
  }

  const int d = h.maxEdgeSize();
  report.maxEdgeSize = d;
  report.totalBound = d == 0 ? 0 : 2 * saturatingPower(static_cast<std::uint64_t>(n), d - 1);
  if (d > 0 && report.totalBound < saturatingPower(static_cast<std::uint64_t>(n), d - 1)) {
    report.totalBound = std::numeric_limits<std::uint64_t>::max();
  }
  for (int r = 1; r <= d; ++r) {
    SizeClassBasis cls{buildInclusionMatrix(h, r), {}};
    cls.basis = columnBasis(cls.matrix, mode);
    if (cls.basis.prime) report.prime = cls.basis.prime;
    SizeCount count;
    count.r = r;
    count.input = cls.matrix.numColumns();
    count.output = cls.basis.rank();
    count.bound = saturatingPower(static_cast<std::uint64_t>(n), r - 1);
    report.perSize.push_back(count);
    for (std::size_t column : cls.basis.kept) result.keptEdges.push_back(cls.matrix.columns[column]);
    result.classes.push_back(std::move(cls));
  }
  std::sort(result.keptEdges.begin(), result.keptEdges.end());
  std::vector<std::vector<Vertex>> kept;
  kept.reserve(result.keptEdges.size());
  for (std::size_t i : result.keptEdges) kept.push_back(h.edges()[i]);
  report.outputEdges = kept.size();
  result.output = Hypergraph(n, std::move(kept));
  return result;
}

NaeKernel sparsifyNaeSat(const CnfFormula& f, RankMode mode) {
  NaeKernel result;
  auto [encoded, trace] = naesatToHypergraph(f);
  result.encoded = sparsifyHypergraph(encoded, mode);
  result.report = result.encoded.report;
  result.report.inputClauses = f.numClauses();

  if (f.hasEmptyClause()) {
    result.output = CnfFormula(f.numVars(), {Clause{}});
    for (std::size_t i = 0; i < f.numClauses(); ++i) {
      if (f.clauses()[i].empty()) {
        result.keptClauses.push_back(i);
        break;
      }
    }
    result.report.outputClauses = 1;
    return result;
  }

  std::vector<Clause> kept;
  for (std::size_t i : result.encoded.keptEdges) {
    if (i >= f.numClauses()) break;  // pair edges come last
    result.keptClauses.push_back(i);
    kept.push_back(f.clauses()[i]);
  }
  result.report.outputClauses = kept.size();
  result.output = CnfFormula(f.numVars(), std::move(kept));
  return result;
}

}  // namespace sparsekit
