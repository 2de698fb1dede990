#pragma once

// Exact exponential-time decision procedures. Every YES answer carries a
// certificate that has been validated by checkCertificate before returning.
// Search orders are fixed, so the same instance always yields the same
// certificate and node count.

#include <cstdint>
#include <optional>
#include <string>

#include "sparsekit/model.hpp"

namespace sparsekit {

struct OracleLimits {
  std::uint64_t nodeBudget = 100'000'000;
  double seconds = 60.0;
  int variableCap = 24;  // variables (SAT/NAE) or vertices (2-coloring)
  int budgetCap = 6;     // dominating-set budget
};

enum class Verdict { yes, no, timeout, refused };

std::string verdictName(Verdict v);

struct OracleStats {
  std::uint64_t nodes = 0;
  double elapsedSeconds = 0.0;
};

struct OracleAnswer {
  Verdict verdict = Verdict::no;
  std::optional<Certificate> certificate;
  OracleStats stats;
  std::string detail;  // reason for refusal or timeout

  bool yes() const { return verdict == Verdict::yes; }
  bool decided() const { return verdict == Verdict::yes || verdict == Verdict::no; }
};

OracleAnswer solveSat(const CnfFormula& f, const OracleLimits& limits = {});
OracleAnswer solveNae(const CnfFormula& f, const OracleLimits& limits = {});
OracleAnswer solveHypergraph2Col(const Hypergraph& h, const OracleLimits& limits = {});

OracleAnswer solveListColoring(const ListColoringInstance& inst, const OracleLimits& limits = {});
OracleAnswer solveTsd(const TsdInstance& inst, const OracleLimits& limits = {});
// Plain k-coloring; interchangeable colors are branched on only once.
OracleAnswer solveColoring(const Graph& g, int paletteSize, const OracleLimits& limits = {});

// Picks subset DP for digraphs with at most kHamDpMaxVertices vertices and
// pruned backtracking otherwise.
inline constexpr int kHamDpMaxVertices = 20;
OracleAnswer solveHamCycle(const Digraph& g, const OracleLimits& limits = {});
OracleAnswer solveHamCycle(const Graph& g, const OracleLimits& limits = {});
OracleAnswer solveHamCycleDp(const Digraph& g, const OracleLimits& limits = {});
OracleAnswer solveHamCycleBacktrack(const Digraph& g, const OracleLimits& limits = {});
OracleAnswer solveHamPathST(const BipartiteHamInstance& inst, const OracleLimits& limits = {});

OracleAnswer solveDomSet(const Graph& g, std::int64_t budget, bool connected,
                         const OracleLimits& limits = {});
OracleAnswer solveColRbds(const EqColRbdsInstance& inst, const OracleLimits& limits = {});

// Dispatches on the problem of `instance`.
OracleAnswer solve(const DecisionInstance& instance, const OracleLimits& limits = {});

}  // namespace sparsekit
