#include "doctest.h"

#include "sparsekit/formats.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/model.hpp"
#include "sparsekit/rng.hpp"
#include "sparsekit/stats.hpp"

using namespace sparsekit;

namespace {

Hypergraph k4() { return Hypergraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

}  // namespace

TEST_CASE("splitmix64 reference outputs") {
  // First outputs of the published splitmix64 generator with state 0.
  CounterRng rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);

  CounterRng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(7) == b.below(7));
  CounterRng c(5);
  for (int i = 0; i < 1000; ++i) {
    const int x = c.between(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
}

TEST_CASE("literals and formulas normalize") {
  CHECK(Literal::fromDimacs(-3).variable == 3);
  CHECK_FALSE(Literal::fromDimacs(-3).isPositive());
  CHECK(Literal::fromDimacs(4).negated().toDimacs() == -4);
  CHECK_THROWS(Literal::fromDimacs(0));

  const CnfFormula f(3, {{Literal::fromDimacs(2), Literal::fromDimacs(-1), Literal::fromDimacs(2)}, {}});
  CHECK(f.clauses()[0].size() == 2);
  CHECK(f.clauses()[0][0].toDimacs() == -1);
  CHECK(f.hasEmptyClause());
  CHECK(f.maxClauseSize() == 2);
  CHECK_THROWS_AS(CnfFormula(2, {{Literal::fromDimacs(3)}}), InvalidInstance);
}

TEST_CASE("graph invariants") {
  const Graph g(4, {{2, 1}, {1, 2}, {3, 4}});
  CHECK(g.numEdges() == 2);
  CHECK(g.edges()[0] == Edge{1, 2});
  CHECK(g.hasEdge(2, 1));
  CHECK(g.degree(3) == 1);
  CHECK_THROWS_AS(Graph(3, {{2, 2}}), InvalidInstance);
  CHECK_THROWS_AS(Graph(3, {{1, 4}}), InvalidInstance);

  const Digraph d(3, {{1, 2}, {2, 3}});
  CHECK(d.hasArc(1, 2));
  CHECK_FALSE(d.hasArc(2, 1));
}

TEST_CASE("hypergraph keeps edge order") {
  const Hypergraph h(4, {{3, 1}, {2, 4, 2}});
  CHECK(h.edges()[0] == std::vector<Vertex>{1, 3});
  CHECK(h.edges()[1] == std::vector<Vertex>{2, 4});
  CHECK(h.maxEdgeSize() == 2);
}

TEST_CASE("certificate checkers") {
  const CnfFormula f(2, {{Literal::fromDimacs(1), Literal::fromDimacs(2)}});
  CHECK(isSatisfying(f, {{true, false}}));
  CHECK_FALSE(isSatisfying(f, {{false, false}}));
  CHECK(isNaeSatisfying(f, {{true, false}}));
  CHECK_FALSE(isNaeSatisfying(f, {{true, true}}));

  const Graph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(isProperColoring(triangle, {{1, 2, 3}}, 3));
  CHECK_FALSE(isProperColoring(triangle, {{1, 2, 3}}, 2));
  CHECK(isHamiltonianCycle(triangle, HamCycle{{1, 3, 2}}));
  const std::vector<Vertex> one{2};
  CHECK(isDominatingSet(triangle, one));

  const DecisionInstance di(Problem::sat, f);
  CHECK(checkCertificate(di, Assignment{{false, true}}));
  CHECK_THROWS_AS(checkCertificate(di, Coloring{{1, 2}}), CertificateMismatch);
}

TEST_CASE("problem names round-trip") {
  for (Problem p : {Problem::sat, Problem::nae, Problem::hypergraph2col, Problem::fourColoring, Problem::hamCycle,
                    Problem::directedHamCycle, Problem::domSet, Problem::connectedDomSet, Problem::tsd,
                    Problem::hamPathST, Problem::colRbds, Problem::listColoring}) {
    CHECK(problemFromName(problemName(p)) == p);
  }
  CHECK_FALSE(problemFromName("nope").has_value());
}

TEST_CASE("text formats round-trip") {
  const CnfFormula f = parseCnf("c comment\np cnf 3 2\n1 -2 0\n3 0\n");
  CHECK(f.numVars() == 3);
  CHECK(f.numClauses() == 2);
  CHECK(parseCnf(serializeCnf(f)) == f);

  const Hypergraph h = k4();
  CHECK(parseHypergraph(serializeHypergraph(h)) == h);

  const Graph g(5, {{1, 2}, {4, 5}});
  const GraphDocument doc = parseGraphDocument(serializeGraph(g, 3));
  CHECK(doc.graph == g);
  CHECK(doc.budget == 3);

  const Digraph d(3, {{1, 2}, {3, 1}});
  CHECK(parseDigraph(serializeDigraph(d)) == d);

  CounterRng rng(7);
  const TsdInstance t = generateTsd({4, 2, 0.5}, rng);
  CHECK(tsdFromJson(toJson(t)) == t);
  const BipartiteHamInstance b = generateBipartiteHam({2, 3, 0.5}, rng);
  CHECK(bipartiteHamFromJson(toJson(b)) == b);
  const EqColRbdsInstance e = generateEqColRbds({2, 3, 4, 0.3}, rng);
  CHECK(eqColRbdsFromJson(toJson(e)) == e);

  const Certificate cert = Coloring{{1, 2, 1}};
  CHECK(parseCertificate(serializeCertificate(cert)) == cert);

  for (const AnyInstance& any : {AnyInstance(f), AnyInstance(h), AnyInstance(g), AnyInstance(d), AnyInstance(t)}) {
    const InstanceDocument back = parseInstance(serializeInstance(any));
    CHECK(back.instance == any);
  }
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parseCnf("p cnf 2 1\n1 5 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parseCnf("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parseCnf("p cnf 2 2\n1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parseGraph("p edge 3 1\ne 2 2\n"), ParseError);
  CHECK_THROWS_AS(parseInstance("{\"type\": \"mystery\"}"), ParseError);
  CHECK_THROWS_AS(parseInstance("p what 1 1\n"), ParseError);
}

TEST_CASE("stats lines") {
  CHECK(instanceStats(k4()) == "hypergraph: n=4, edges: r=2:6 (bound 4); total 6 (bound 8)");
  CHECK(instanceStats(Hypergraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})) ==
        "hypergraph: n=4, edges: r=2:4 (bound 4); total 4 (bound 8)");
  CHECK(instanceStats(CnfFormula(0, {})) == "cnf: n=0, clauses: none; total 0 (bound 0)");
  CHECK(instanceStats(Graph(39, {{1, 2}}), 4) == "graph: n=39, edges=1, budget=4");
}
