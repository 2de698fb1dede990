#include "doctest.h"

#include "brute.hpp"
#include "fixtures.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/oracle.hpp"

using namespace sparsekit;

namespace {

Graph randomGraph(int n, double p, CounterRng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (rng.bernoulli(p)) edges.push_back({u, v});
  return Graph(n, edges);
}

// A decided answer that matches the reference and, for YES, carries a valid certificate.
void expectAnswer(const DecisionInstance& di, const OracleAnswer& a, bool expected) {
  REQUIRE(a.decided());
  CHECK(a.yes() == expected);
  if (a.yes()) {
    REQUIRE(a.certificate.has_value());
    CHECK(checkCertificate(di, *a.certificate));
  }
}

}  // namespace

TEST_CASE("SAT and NAE-SAT") {
  CounterRng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const CnfFormula f = generateCnf(fixtures::cnf(rng.between(1, 10), rng.between(0, 40), 1, 4), rng);
    expectAnswer(DecisionInstance(Problem::sat, f), solveSat(f), brute::sat(f));
    expectAnswer(DecisionInstance(Problem::nae, f), solveNae(f), brute::nae(f));
  }
}

TEST_CASE("hypergraph 2-coloring") {
  CounterRng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = generateHypergraph(fixtures::hypergraph(rng.between(2, 10), rng.between(1, 30), 2, 4), rng);
    expectAnswer(DecisionInstance(Problem::hypergraph2col, h), solveHypergraph2Col(h), brute::twoColorable(h));
  }
}

TEST_CASE("coloring, list coloring and 2-3-coloring") {
  CounterRng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = randomGraph(rng.between(1, 10), 0.55, rng);
    const OracleAnswer four = solveColoring(g, 4);
    expectAnswer(DecisionInstance(Problem::fourColoring, g), four, brute::colorable(g, 4));
    const OracleAnswer three = solveColoring(g, 3);
    REQUIRE(three.decided());
    CHECK(three.yes() == brute::colorable(g, 3));

    std::vector<ColorMask> lists;
    for (Vertex v = 1; v <= g.numVertices(); ++v) lists.push_back(static_cast<ColorMask>(1 + rng.below(15)));
    const ListColoringInstance li(g, lists, 4);
    expectAnswer(DecisionInstance(Problem::listColoring, li), solveListColoring(li),
                 brute::listColorable(g, 4, [&](Vertex v) { return static_cast<unsigned>(lists[v - 1]); }));

    const TsdInstance t = generateTsd({rng.between(1, 4), rng.between(1, 3), 0.5}, rng);
    expectAnswer(DecisionInstance(Problem::tsd, t), solveTsd(t), brute::tsd(t));
  }
}

TEST_CASE("Hamiltonian cycles") {
  CounterRng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const Digraph d = generateDigraph({rng.between(1, 8), 0.4, trial % 3 == 0}, rng);
    const bool expected = brute::hamCycle(d);
    expectAnswer(DecisionInstance(Problem::directedHamCycle, d), solveHamCycle(d), expected);
    CHECK(solveHamCycleDp(d).yes() == expected);
    CHECK(solveHamCycleBacktrack(d).yes() == expected);

    const Graph g = randomGraph(rng.between(1, 8), 0.5, rng);
    expectAnswer(DecisionInstance(Problem::hamCycle, g), solveHamCycle(g), brute::hamCycle(g));
  }
  CHECK_FALSE(solveHamCycle(Digraph(1, {})).yes());
  CHECK(solveHamCycle(Digraph(2, {{1, 2}, {2, 1}})).yes());
}

TEST_CASE("bipartite Hamiltonian s-t paths") {
  CounterRng rng(35);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = rng.between(1, 3);
    const BipartiteHamInstance inst = generateBipartiteHam({m, m + 1, 0.5}, rng);
    expectAnswer(DecisionInstance(Problem::hamPathST, inst), solveHamPathST(inst), brute::hamPathST(inst));
  }
}

TEST_CASE("dominating sets") {
  CounterRng rng(36);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = randomGraph(rng.between(1, 12), 0.3, rng);
    const std::int64_t budget = rng.between(0, 4);
    expectAnswer(DecisionInstance(Problem::domSet, g, budget), solveDomSet(g, budget, false),
                 brute::domSet(g, budget, false));
    expectAnswer(DecisionInstance(Problem::connectedDomSet, g, budget), solveDomSet(g, budget, true),
                 brute::domSet(g, budget, true));
  }
}

TEST_CASE("colored red-blue dominating set") {
  CounterRng rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const EqColRbdsInstance inst = generateEqColRbds({rng.between(1, 3), rng.between(1, 3), rng.between(1, 5), 0.4}, rng);
    expectAnswer(DecisionInstance(Problem::colRbds, inst), solveColRbds(inst), brute::colRbds(inst));
  }
}

TEST_CASE("limits") {
  OracleLimits tiny;
  tiny.nodeBudget = 3;
  CounterRng dense(1);
  const Graph k9 = randomGraph(9, 1.0, dense);
  CHECK(solveColoring(k9, 4, tiny).verdict == Verdict::timeout);

  OracleLimits capped;
  capped.variableCap = 3;
  CounterRng rng(38);
  CHECK(solveNae(generateCnf({6, 5, 2, 3}, rng), capped).verdict == Verdict::refused);

  capped.budgetCap = 2;
  CHECK(solveDomSet(Graph(8, {}), 5, false, capped).verdict == Verdict::refused);
  CHECK(solveDomSet(Graph(5, {}), 5, false, capped).yes());
  CHECK(verdictName(Verdict::timeout) == "timeout");
}

TEST_CASE("oracles are deterministic") {
  CounterRng rng(39);
  const TsdInstance t = generateTsd({4, 3, 0.5, Plant::yes}, rng);
  const OracleAnswer a = solveTsd(t), b = solveTsd(t);
  CHECK(a.yes());
  CHECK(a.certificate == b.certificate);
  CHECK(a.stats.nodes == b.stats.nodes);
}
