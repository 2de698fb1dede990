#include "doctest.h"

#include "sparsekit/harness.hpp"

using namespace sparsekit;

namespace {

HarnessConfig config(Transformation t, int trials, std::uint64_t seed = 0) {
  HarnessConfig c;
  c.transformation = t;
  c.trials = trials;
  c.seed = seed;
  return c;
}

// Drops the edge between s' and s of the dominating-set layout (k=2, m=4, n=3, q=2).
void dropSPrimeEdge(AnyInstance& any) {
  const Graph& g = std::get<Graph>(any);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (e != Edge{15, 16}) edges.push_back(e);
  }
  any = Graph(g.numVertices(), edges);
}

}  // namespace

TEST_CASE("transformation names") {
  CHECK(allTransformations().size() == 9);
  for (Transformation t : allTransformations()) CHECK(transformationFromName(transformationName(t)) == t);
  CHECK(transformationName(Transformation::composeDomSet) == "compose-domset");
  CHECK_FALSE(transformationFromName("compose-everything").has_value());
}

TEST_CASE("parameter defaults") {
  const HarnessParams p = resolveParams(Transformation::composeFourColoring, {});
  CHECK(p.t == 4);
  CHECK(p.m == 3);
  CHECK(p.n == 2);
  const HarnessParams h = resolveParams(Transformation::composeHam, {.m = 2});
  CHECK(h.n == 3);
  CHECK_THROWS_AS(resolveParams(Transformation::composeHam, {.t = 8}), std::invalid_argument);
}

TEST_CASE("every transformation agrees on a short run") {
  for (Transformation t : allTransformations()) {
    HarnessConfig c = config(t, 6, 99);
    if (t == Transformation::kernelHypergraph) c.partitions = 2;
    const HarnessReport r = runHarness(c);
    INFO(r.summary());
    CHECK(r.trials == 6);
    CHECK(r.agreements == 6);
    CHECK(r.exitCode() == 0);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("reports are reproducible") {
  const HarnessConfig c = config(Transformation::composeDomSet, 8, 5);
  CHECK(runHarness(c).toJson().dump() == runHarness(c).toJson().dump());
  CHECK(runHarness(c).toJson().dump() != runHarness(config(Transformation::composeDomSet, 8, 6)).toJson().dump());
}

TEST_CASE("config JSON round-trip") {
  HarnessConfig c = config(Transformation::reduceKarp, 17, 3);
  c.trialSeed = 12;
  c.exact = true;
  c.params.n = 5;
  const HarnessConfig back = HarnessConfig::fromJson(c.toJson());
  CHECK(back.toJson() == c.toJson());
  CHECK_THROWS_AS(HarnessConfig::fromJson({{"transformation", "reduce-karp"}, {"colour", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(HarnessConfig::fromJson({{"transformation", "nope"}}), std::invalid_argument);
}

TEST_CASE("single-trial replay matches the batch run") {
  HarnessConfig c = config(Transformation::composeFourColoring, 5, 40);
  const HarnessReport batch = runHarness(c);
  c.trialSeed = 40 ^ 3;
  const HarnessReport one = runHarness(c);
  CHECK(one.trials == 1);
  CHECK(one.agreements == 1);
  CHECK(batch.agreements == 5);
  CHECK(replayCommand(c, 43).find("sparsekit verify compose-4col --trial-seed 43") == 0);
}

TEST_CASE("a corrupted composition is caught") {
  HarnessConfig c = config(Transformation::composeDomSet, 20, 1);
  c.tamper = dropSPrimeEdge;
  const HarnessReport r = runHarness(c);
  CHECK(r.disagreements >= 1);
  CHECK(r.exitCode() == 1);
  REQUIRE_FALSE(r.failures.empty());
  CHECK(r.failures.front().replay.find("--trial-seed") != std::string::npos);
}

TEST_CASE("oracle budget exhaustion is reported as undecided") {
  HarnessConfig c = config(Transformation::composeFourColoring, 3, 2);
  c.limits.nodeBudget = 10;
  const HarnessReport r = runHarness(c);
  CHECK(r.timeouts > 0);
  CHECK(r.exitCode() == 3);
}
