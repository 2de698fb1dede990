#include "doctest.h"

#include "brute.hpp"
#include "fixtures.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/oracle.hpp"
#include "sparsekit/reduce.hpp"

using namespace sparsekit;

TEST_CASE("cnf to nae appends one fresh literal") {
  const CnfFormula f(2, {{Literal::fromDimacs(1), Literal::fromDimacs(-2)}, {Literal::fromDimacs(2)}});
  const CnfFormula g = cnfsatToNaesat(f);
  CHECK(g.numVars() == 3);
  REQUIRE(g.numClauses() == 2);
  CHECK(g.clauses()[0].back().toDimacs() == 3);
  CHECK(g.clauses()[1].size() == 2);

  CounterRng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const CnfFormula x = generateCnf(fixtures::cnf(rng.between(1, 8), rng.between(0, 20), 1, 3), rng);
    CHECK(brute::nae(cnfsatToNaesat(x)) == brute::sat(x));
  }
}

TEST_CASE("nae to hypergraph") {
  const CnfFormula f(2, {{Literal::fromDimacs(1), Literal::fromDimacs(-2)}});
  const auto [h, trace] = naesatToHypergraph(f);
  CHECK(h.numVertices() == 4);
  REQUIRE(h.numEdges() == 3);
  CHECK(h.edges()[0] == std::vector<Vertex>{1, 4});
  CHECK(h.edges()[1] == std::vector<Vertex>{1, 2});
  CHECK(h.edges()[2] == std::vector<Vertex>{3, 4});
  CHECK(trace.names.size() == 4);
  CHECK(trace.names[1].first == "~x1");

  CounterRng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const CnfFormula x = generateCnf(fixtures::cnf(rng.between(1, 7), rng.between(0, 16), 1, 4), rng);
    const auto [y, t] = naesatToHypergraph(x);
    CHECK(y.numVertices() == 2 * x.numVars());
    CHECK(brute::twoColorable(y) == brute::nae(x));
  }
}

TEST_CASE("nae-3 to 2-3-coloring") {
  CHECK_THROWS_AS(naesat3ToTsd(CnfFormula(4, {{Literal::fromDimacs(1), Literal::fromDimacs(2), Literal::fromDimacs(3),
                                                Literal::fromDimacs(4)}})),
                  std::invalid_argument);
  CHECK_FALSE(brute::tsd(canonicalNoTsd()));

  CounterRng rng(23);
  int yes = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const CnfFormula x = generateCnf(fixtures::cnf(rng.between(1, 4), rng.between(0, 5), 2, 3), rng);
    const auto [tsd, trace] = naesat3ToTsd(x);
    const bool expected = brute::nae(x);
    yes += expected ? 1 : 0;
    if (tsd.graph().numVertices() <= 20) CHECK(brute::tsd(tsd) == expected);
    const OracleAnswer a = solveTsd(tsd);
    REQUIRE(a.decided());
    CHECK(a.yes() == expected);
  }
  CHECK(yes > 0);
  CHECK(yes < 120);
}

TEST_CASE("Karp: directed to undirected Hamiltonicity") {
  const Digraph d(3, {{1, 2}, {2, 3}, {3, 1}});
  const auto [g, trace] = directedHcToUndirected(d);
  CHECK(g.numVertices() == 9);
  CHECK(g.numEdges() == 9);
  CHECK(g.hasEdge(3, 4));  // 1_out - 2_in
  CHECK(trace.names.front().first == "v1.in");

  CounterRng rng(24);
  for (int trial = 0; trial < 60; ++trial) {
    const Digraph x = generateDigraph({rng.between(1, 6), 0.35, trial % 2 == 0}, rng);
    const auto [y, t] = directedHcToUndirected(x);
    CHECK(y.numVertices() == 3 * x.numVertices());
    const bool expected = brute::hamCycle(x);
    const OracleAnswer a = solveHamCycle(y);
    REQUIRE(a.decided());
    CHECK(a.yes() == expected);
  }
}

TEST_CASE("2-3-coloring gadgets: exhaustive literal patterns") {
  // Every coloring of the literal vertices from {1,2} extends iff each variable
  // pair differs and the clause literals are not all equal.
  for (const Clause& c : {Clause{Literal::fromDimacs(1), Literal::fromDimacs(2), Literal::fromDimacs(3)},
                          Clause{Literal::fromDimacs(1), Literal::fromDimacs(-2)}}) {
    const int n = static_cast<int>(c.size());
    const auto [tsd, trace] = naesat3ToTsd(CnfFormula(n, {c}));
    int extendable = 0;
    for (std::uint32_t mask = 0; mask < (1u << (2 * n)); ++mask) {
      const auto colorOf = [&](Vertex v) { return ((mask >> (v - 1)) & 1u) != 0 ? 2 : 1; };
      bool expected = true;
      for (int i = 1; i <= n; ++i) expected = expected && colorOf(2 * i - 1) != colorOf(2 * i);
      bool allEqual = true;
      for (const Literal& l : c) allEqual = allEqual && colorOf(literalVertex(l)) == colorOf(literalVertex(c.front()));
      expected = expected && !allEqual;
      const bool extends = brute::listColorable(tsd.graph(), 3, [&](Vertex v) -> unsigned {
        return v <= 2 * n ? 1u << (colorOf(v) - 1) : 7u;
      });
      CHECK(extends == expected);
      extendable += extends ? 1 : 0;
    }
    CHECK(extendable == (n == 3 ? 6 : 2));
  }
}
