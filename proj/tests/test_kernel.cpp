#include "doctest.h"

#include "brute.hpp"
#include "fixtures.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/kernel.hpp"
#include "sparsekit/stats.hpp"

using namespace sparsekit;

namespace {

std::uint64_t power(std::uint64_t n, int e) {
  std::uint64_t x = 1;
  while (e-- > 0) x *= n;
  return x;
}

void checkBounds(const Hypergraph& in, const Hypergraph& out) {
  const int d = in.maxEdgeSize();
  const auto n = static_cast<std::uint64_t>(in.numVertices());
  for (int r = 1; r <= d; ++r) {
    std::uint64_t count = 0;
    for (const auto& e : out.edges()) count += static_cast<int>(e.size()) == r ? 1 : 0;
    CHECK(count <= power(n, r - 1));
  }
  if (d > 0) CHECK(out.numEdges() <= 2 * power(n, d - 1));
}

}  // namespace

TEST_CASE("saturating power") {
  CHECK(saturatingPower(10, 2) == 100);
  CHECK(saturatingPower(2, 0) == 1);
  CHECK(saturatingPower(1000, 10) == UINT64_MAX);
}

TEST_CASE("K4 sparsifies to four edges") {
  const Hypergraph h(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const HypergraphKernel kern = sparsifyHypergraph(h, RankMode::exact());
  CHECK(kern.keptEdges == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(kern.output.numEdges() == 4);
  CHECK(kern.report.boundsHold());
  CHECK(kern.report.totalBound == 8);
  CHECK(instanceStats(kern.output) == "hypergraph: n=4, edges: r=2:4 (bound 4); total 4 (bound 8)");
  CHECK(kern.report.toJson().at("mode") == "exact");
}

TEST_CASE("kernel of random hypergraphs") {
  CounterRng rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    const Hypergraph h = generateHypergraph(fixtures::hypergraph(rng.between(3, 10), rng.between(1, 40), 2, 3), rng);
    const bool exact = trial % 2 == 0;
    const HypergraphKernel kern = sparsifyHypergraph(h, exact ? RankMode::exact() : RankMode::modular(rng.next()));
    checkBounds(h, kern.output);
    CHECK(kern.report.boundsHold());
    REQUIRE(kern.keptEdges.size() == kern.output.numEdges());
    for (std::size_t i = 0; i < kern.keptEdges.size(); ++i) CHECK(kern.output.edges()[i] == h.edges()[kern.keptEdges[i]]);
    CHECK(brute::twoColorable(kern.output) == brute::twoColorable(h));
  }
}

TEST_CASE("kernel preserves NAE satisfiability") {
  CounterRng rng(12);
  for (int trial = 0; trial < 80; ++trial) {
    const CnfFormula f = generateCnf(fixtures::cnf(rng.between(2, 8), rng.between(0, 30), 2, 4), rng);
    const NaeKernel kern = sparsifyNaeSat(f, RankMode::exact());
    CHECK(kern.output.numVars() == f.numVars());
    CHECK(kern.output.numClauses() <= f.numClauses());
    for (std::size_t i = 0; i < kern.keptClauses.size(); ++i) CHECK(kern.output.clauses()[i] == f.clauses()[kern.keptClauses[i]]);
    CHECK(brute::nae(kern.output) == brute::nae(f));
  }
}

TEST_CASE("empty clause gives the canonical NO formula") {
  const CnfFormula f(3, {{Literal::fromDimacs(1), Literal::fromDimacs(2)}, {}});
  const NaeKernel kern = sparsifyNaeSat(f, RankMode::exact());
  CHECK(kern.report.canonicalNo);
  CHECK(kern.output == CnfFormula(3, {{}}));
}

TEST_CASE("empty inputs") {
  const HypergraphKernel kern = sparsifyHypergraph(Hypergraph(5, {}), RankMode::exact());
  CHECK(kern.output.numEdges() == 0);
  CHECK(kern.report.totalBound == 0);
  CHECK(instanceStats(CnfFormula(0, {})) == "cnf: n=0, clauses: none; total 0 (bound 0)");
}

TEST_CASE("dense hypergraph meets the bound exactly") {
  // All 3-subsets of [6]: the rank of the inclusion matrix is C(6,2) = 15 <= 6^2.
  std::vector<std::vector<Vertex>> edges;
  for (Vertex a = 1; a <= 6; ++a)
    for (Vertex b = a + 1; b <= 6; ++b)
      for (Vertex c = b + 1; c <= 6; ++c) edges.push_back({a, b, c});
  const HypergraphKernel kern = sparsifyHypergraph(Hypergraph(6, edges), RankMode::exact());
  CHECK(kern.output.numEdges() == 15);
}

TEST_CASE("an empty edge gives the canonical NO hypergraph") {
  const HypergraphKernel kern = sparsifyHypergraph(Hypergraph(3, {{1, 2}, {}}), RankMode::exact());
  CHECK(kern.report.canonicalNo);
  CHECK(kern.output == Hypergraph(3, {{}}));
  CHECK_FALSE(brute::twoColorable(kern.output));
}

TEST_CASE("all sign patterns on three variables") {
  std::vector<Clause> clauses;
  for (int mask = 0; mask < 8; ++mask) {
    Clause c;
    for (int v = 1; v <= 3; ++v) c.push_back(Literal::fromDimacs((mask >> (v - 1)) & 1 ? -v : v));
    clauses.push_back(c);
  }
  const CnfFormula f(3, clauses);
  const NaeKernel kern = sparsifyNaeSat(f, RankMode::exact());
  CHECK_FALSE(brute::nae(f));
  CHECK_FALSE(brute::nae(kern.output));
}

TEST_CASE("a single clause is kept") {
  const CnfFormula f(2, {{Literal::fromDimacs(1), Literal::fromDimacs(2)}});
  CHECK(sparsifyNaeSat(f, RankMode::exact()).output == f);
}

TEST_CASE("exact sparsification is idempotent") {
  CounterRng rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph h = generateHypergraph(fixtures::hypergraph(rng.between(3, 9), rng.between(1, 40), 2, 4), rng);
    const Hypergraph once = sparsifyHypergraph(h, RankMode::exact()).output;
    CHECK(sparsifyHypergraph(once, RankMode::exact()).output == once);
  }
}
