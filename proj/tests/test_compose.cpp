#include "doctest.h"

#include <algorithm>

#include "brute.hpp"
#include "sparsekit/compose.hpp"
#include "sparsekit/generate.hpp"
#include "sparsekit/oracle.hpp"

using namespace sparsekit;

namespace {

Plant pickPlant(CounterRng& rng) {
  switch (rng.below(3)) {
    case 0:
      return Plant::yes;
    case 1:
      return Plant::no;
    default:
      return Plant::none;
  }
}

}  // namespace

TEST_CASE("vertex count formulas") {
  CHECK(fourColoringVertexCount(2, 3, 2) == 70);
  CHECK(hamVertexCount(2, 1, 2) == 27);
  CHECK(hamVertexCount(2, 2, 3) == 39);
  CHECK(domSetVertexCount(2, 4, 3, 2) == 39);
}

TEST_CASE("batch padding") {
  CounterRng rng(51);
  std::vector<TsdInstance> three;
  for (int i = 0; i < 3; ++i) three.push_back(generateTsd({3, 2, 0.5}, rng));
  const auto batch = padBatch(three);
  CHECK(batch.paddedCount == 4);
  CHECK(batch.originalCount == 3);
  CHECK(batch.q == 2);
  CHECK(batch.logQ == 1);
  CHECK(batch.at(2, 2) == three[0]);
  CHECK(batch.at(1, 2) == three[1]);

  std::vector<TsdInstance> five(5, three[0]);
  CHECK(padBatch(five).paddedCount == 16);
  CHECK(padBatch(std::vector<TsdInstance>{three[0]}).paddedCount == 4);
  CHECK_THROWS_AS(padBatch(std::vector<TsdInstance>{}), std::invalid_argument);
  CHECK_THROWS_AS(padBatch(std::vector<TsdInstance>{three[0], generateTsd({4, 2, 0.5}, rng)}), ClassMismatchError);
}

TEST_CASE("4-coloring composition") {
  CounterRng rng(52);
  int yes = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<TsdInstance> inputs;
    for (int i = 0; i < 4; ++i) inputs.push_back(generateTsd({3, 2, 0.6, trial % 2 == 0 ? pickPlant(rng) : Plant::no}, rng));
    const auto batch = padBatch(inputs);
    const FourColoringComposition comp = composeFourColoring(batch);
    CHECK(comp.graph.numVertices() == 70);

    std::optional<std::size_t> yesPosition;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!yesPosition && brute::tsd(inputs[i])) yesPosition = i;
    }
    const OracleAnswer a = solveColoring(comp.graph, 4);
    REQUIRE(a.decided());
    CHECK(a.yes() == yesPosition.has_value());
    if (yesPosition) {
      ++yes;
      const OracleAnswer input = solveTsd(inputs[*yesPosition]);
      const Coloring w = fourColoringWitness(comp, batch, *yesPosition, std::get<Coloring>(*input.certificate));
      CHECK(isProperColoring(comp.graph, w, 4));
      Coloring listPart = w;
      listPart.colors.resize(static_cast<std::size_t>(comp.listInstance.graph().numVertices()));
      CHECK(isProperListColoring(comp.listInstance, listPart));
    }
  }
  CHECK(yes > 0);
  CHECK(yes < 12);
}

TEST_CASE("Hamiltonicity composition") {
  CounterRng rng(53);
  int yes = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<BipartiteHamInstance> inputs;
    for (int i = 0; i < 4; ++i) inputs.push_back(generateBipartiteHam({2, 3, 0.5, trial % 2 == 0 ? pickPlant(rng) : Plant::no}, rng));
    const auto batch = padBatch(inputs);
    const HamComposition comp = composeHamiltonicity(batch);
    CHECK(comp.graph.numVertices() == 39);
    CHECK(comp.layout.allGadgets().size() == 2 * (2 + 3));

    std::optional<std::size_t> yesPosition;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!yesPosition && brute::hamPathST(inputs[i])) yesPosition = i;
    }
    const OracleAnswer a = solveHamCycle(comp.graph);
    REQUIRE(a.decided());
    CHECK(a.yes() == yesPosition.has_value());
    if (a.yes()) CHECK(traversesPathGadgets(comp.layout, std::get<HamCycle>(*a.certificate)));
    if (yesPosition) {
      ++yes;
      const OracleAnswer input = solveHamPathST(inputs[*yesPosition]);
      const HamCycle w = hamCycleWitness(comp, batch, *yesPosition, std::get<HamCycle>(*input.certificate));
      CHECK(isHamiltonianCycle(comp.graph, w));
      CHECK(traversesPathGadgets(comp.layout, w));
    }
  }
  CHECK(yes > 0);
  CHECK(yes < 12);
}

TEST_CASE("path-gadget traversal detects a broken order") {
  CounterRng rng(54);
  std::vector<BipartiteHamInstance> inputs;
  for (int i = 0; i < 4; ++i) inputs.push_back(generateBipartiteHam({1, 2, 0.5}, rng));
  const auto batch = padBatch(inputs);
  const HamComposition comp = composeHamiltonicity(batch);
  const OracleAnswer a = solveHamCycle(comp.graph);
  REQUIRE(a.yes());
  HamCycle cycle = std::get<HamCycle>(*a.certificate);
  CHECK(traversesPathGadgets(comp.layout, cycle));
  const PathGadget g = comp.layout.allGadgets().front();
  const auto mid = std::find(cycle.order.begin(), cycle.order.end(), g.mid);
  const auto other = std::find(cycle.order.begin(), cycle.order.end(), comp.layout.start);
  std::iter_swap(mid, other);
  CHECK_FALSE(traversesPathGadgets(comp.layout, cycle));
}

TEST_CASE("dominating-set composition") {
  CounterRng rng(55);
  int yes = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<EqColRbdsInstance> inputs;
    for (int i = 0; i < 4; ++i) inputs.push_back(generateEqColRbds({2, 2, 3, 0.3, trial % 2 == 0 ? pickPlant(rng) : Plant::no}, rng));
    const auto batch = padBatch(inputs);
    const DomSetComposition comp = composeDominatingSet(batch);
    if (comp.layout.canonicalNo) {
      CHECK(comp.graph.numVertices() == 2);
      CHECK(comp.budget == 1);
      continue;
    }
    CHECK(comp.graph.numVertices() == 39);
    CHECK(comp.budget == 4);
    CHECK(comp.layout.sPrime == 15);
    CHECK(comp.layout.s == 16);

    std::optional<std::size_t> yesPosition;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!yesPosition && brute::colRbds(inputs[i])) yesPosition = i;
    }
    for (bool connected : {false, true}) {
      const OracleAnswer a = solveDomSet(comp.graph, comp.budget, connected);
      REQUIRE(a.decided());
      CHECK(a.yes() == yesPosition.has_value());
    }
    if (yesPosition) {
      ++yes;
      const OracleAnswer input = solveColRbds(inputs[*yesPosition]);
      const DomSet w = domSetWitness(comp, batch, *yesPosition, std::get<DomSet>(*input.certificate));
      CHECK(static_cast<std::int64_t>(w.vertices.size()) == comp.budget);
      CHECK(isDominatingSet(comp.graph, w.vertices));
      CHECK(inducesConnectedSubgraph(comp.graph, w.vertices));
    }
  }
  CHECK(yes > 0);
  CHECK(yes < 12);
}
