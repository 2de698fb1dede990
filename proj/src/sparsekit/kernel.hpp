#pragma once

// Edge sparsification for hypergraph 2-coloring and NAE-SAT. For every edge
// size r the kept edges are the greedy-leftmost column basis of the inclusion
// matrix M_r; a dropped edge is a rational combination of kept ones and is
// therefore bichromatic under every coloring that is proper on the kept edges.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sparsekit/exactrank.hpp"
#include "sparsekit/model.hpp"

namespace sparsekit {

struct SizeCount {
  int r = 0;
  std::size_t input = 0;
  std::size_t output = 0;
  std::uint64_t bound = 0;  // n^{r-1}, saturating
};

struct KernelReport {
  std::string mode;
  std::optional<std::uint64_t> prime;
  int numVertices = 0;
  int maxEdgeSize = 0;
  std::vector<SizeCount> perSize;  // r = 1..d, including sizes with no edges
  std::uint64_t totalBound = 0;    // 2 n^{d-1}, saturating; 0 when there are no edges
  std::size_t inputEdges = 0;
  std::size_t outputEdges = 0;
  bool canonicalNo = false;
  // Set by sparsifyNaeSat.
  std::optional<std::size_t> inputClauses;
  std::optional<std::size_t> outputClauses;

  bool boundsHold() const;
  nlohmann::json toJson() const;
};

// Per-size matrix and basis, kept for certificate extraction.
struct SizeClassBasis {
  InclusionMatrix matrix;
  ColumnBasis basis;
};

struct HypergraphKernel {
  Hypergraph output;
  KernelReport report;
  std::vector<std::size_t> keptEdges;  // input edge indices, ascending
  std::vector<SizeClassBasis> classes;
};

struct NaeKernel {
  CnfFormula output;
  KernelReport report;
  std::vector<std::size_t> keptClauses;  // input clause indices, ascending
  HypergraphKernel encoded;              // run on the NAE encoding
};

// Saturating n^e.
std::uint64_t saturatingPower(std::uint64_t n, int e);

HypergraphKernel sparsifyHypergraph(const Hypergraph& h, RankMode mode);

// An empty clause yields the canonical NO formula: the same variables and one
// empty clause.
NaeKernel sparsifyNaeSat(const CnfFormula& f, RankMode mode);

}  // namespace sparsekit
