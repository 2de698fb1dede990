#include "doctest.h"

#include <set>

#include "sparsekit/gadgets.hpp"
#include "sparsekit/oracle.hpp"
#include "sparsekit/rng.hpp"

using namespace sparsekit;

namespace {

constexpr ColorMask kPalette = colorBit(1) | colorBit(2) | colorBit(3);

// Feasible root colors of a treegadget by bottom-up DP over triangles.
ColorMask feasibleRoots(const TreeGadget& g, const std::vector<int>& leafColors) {
  const int numNodes = static_cast<int>(g.nodes.size());
  const int firstLeafNode = g.leafCount / 2 - 1;
  std::vector<ColorMask> roots(static_cast<std::size_t>(numNodes), 0);
  for (int i = numNodes - 1; i >= 0; --i) {
    std::array<ColorMask, 2> side{};
    for (int s = 0; s < 2; ++s) {
      if (i >= firstLeafNode) {
        side[s] = colorBit(leafColors[static_cast<std::size_t>(2 * (i - firstLeafNode) + s)]);
      } else {
        // A side vertex needs a color differing from some feasible child root color.
        const ColorMask child = roots[static_cast<std::size_t>(2 * i + 1 + s)];
        for (int c = 1; c <= 3; ++c) {
          if ((child & ~colorBit(c)) != 0) side[s] |= colorBit(c);
        }
      }
    }
    for (int r = 1; r <= 3; ++r)
      for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
          if (r != x && r != y && x != y && (side[0] & colorBit(x)) && (side[1] & colorBit(y)))
            roots[static_cast<std::size_t>(i)] |= colorBit(r);
  }
  return roots[0];
}

ListColoringInstance gadgetInstance(const TreeGadget& g, const std::vector<ColorMask>& leafLists, ColorMask rootList) {
  std::vector<ColorMask> lists(static_cast<std::size_t>(g.numVertices()), kPalette);
  for (std::size_t i = 0; i < g.leaves.size(); ++i) lists[static_cast<std::size_t>(g.leaves[i] - 1)] = leafLists[i];
  lists[static_cast<std::size_t>(g.root - 1)] = rootList;
  return ListColoringInstance(Graph(g.numVertices(), g.edges), lists, 4);
}

}  // namespace

TEST_CASE("treegadget shape") {
  const TreeGadget g = buildTreeGadget(8, 1);
  CHECK(g.nodes.size() == 7);
  CHECK(g.numVertices() == 21);
  CHECK(g.leaves.size() == 8);
  CHECK(g.height() == 2);
  CHECK(g.edges.size() == 7 * 3 + 6);
  CHECK(buildTreeGadget(2, 5).height() == 0);
  CHECK(buildTreeGadget(16, 1).height() == 3);
  CHECK_THROWS_AS(buildTreeGadget(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(buildTreeGadget(1, 1), std::invalid_argument);
}

TEST_CASE("treegadget: all leaves and the root avoid color k") {
  for (int leaves : {2, 4, 8, 16}) {
    const TreeGadget g = buildTreeGadget(leaves, 1);
    for (int k = 1; k <= 3; ++k) {
      const ColorMask without = kPalette & ~colorBit(k);
      const OracleAnswer a = solveListColoring(gadgetInstance(g, std::vector<ColorMask>(g.leaves.size(), without), without));
      REQUIRE(a.decided());
      CHECK_FALSE(a.yes());
    }
  }
}

TEST_CASE("treegadget: a leaf colored i lets the root avoid i") {
  CounterRng rng(41);
  for (int leaves : {2, 4, 8, 16}) {
    const TreeGadget g = buildTreeGadget(leaves, 1);
    int checked = 0;
    while (checked < 60) {
      std::vector<int> colors;
      for (std::size_t i = 0; i < g.leaves.size(); i += 2) {
        const int a = rng.between(1, 3);
        int b = rng.between(1, 2);
        if (b >= a) ++b;
        colors.push_back(a);
        colors.push_back(b);
      }
      const int color = colors[rng.below(colors.size())];
      ++checked;
      CHECK((feasibleRoots(g, colors) & ~colorBit(color)) != 0);
      const auto ext = extendTreeGadget(g, colors, kPalette, kPalette & ~colorBit(color));
      REQUIRE(ext.has_value());
      std::vector<int> full(ext->begin(), ext->end());
      CHECK(isProperColoring(Graph(g.numVertices(), g.edges), Coloring{full}, 3));
      CHECK(full[static_cast<std::size_t>(g.root - 1)] != color);
      for (std::size_t i = 0; i < g.leaves.size(); ++i) CHECK(full[static_cast<std::size_t>(g.leaves[i] - 1)] == colors[i]);
    }
  }
}

TEST_CASE("treegadget extension agrees with the DP") {
  CounterRng rng(42);
  const TreeGadget g = buildTreeGadget(8, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> colors;
    for (int i = 0; i < 8; ++i) colors.push_back(rng.between(1, 3));
    const ColorMask roots = feasibleRoots(g, colors);
    for (int c = 1; c <= 3; ++c) {
      CHECK(extendTreeGadget(g, colors, kPalette, colorBit(c)).has_value() == ((roots & colorBit(c)) != 0));
    }
  }
}

TEST_CASE("triangular gadget: exhaustive 3-colorings") {
  const TriangularGadget t = buildTriangularGadget(1);
  const Graph g(TriangularGadget::kVertices, t.edges);
  std::uint64_t proper = 0;
  bool rainbow = true;
  std::set<std::array<int, 3>> cornerPatterns;
  std::vector<int> c(12, 1);
  for (int code = 0; code < 531441; ++code) {
    int x = code;
    for (int i = 0; i < 12; ++i) {
      c[static_cast<std::size_t>(i)] = 1 + x % 3;
      x /= 3;
    }
    if (!isProperColoring(g, Coloring{c}, 3)) continue;
    ++proper;
    const std::array<int, 3> corners{c[static_cast<std::size_t>(t.corners[0] - 1)],
                                     c[static_cast<std::size_t>(t.corners[1] - 1)],
                                     c[static_cast<std::size_t>(t.corners[2] - 1)]};
    rainbow = rainbow && corners[0] != corners[1] && corners[1] != corners[2] && corners[0] != corners[2];
    cornerPatterns.insert(corners);
  }
  // Six rainbow corner patterns, each with a unique inner completion.
  CHECK(proper == 6);
  CHECK(rainbow);
  CHECK(cornerPatterns.size() == 6);

  const GadgetCertification& cert = certifyTriangularGadget();
  CHECK(cert.passed());
  CHECK(cert.coloringsChecked == 531441);
  CHECK(cert.properColorings == proper);
}

TEST_CASE("triangular inner colors") {
  const TriangularGadget t = buildTriangularGadget(1);
  const auto inner = triangularInnerColors({1, 2, 3}, {2, 3, 4});
  std::vector<int> colors(12, 0);
  for (int i = 0; i < 3; ++i) colors[static_cast<std::size_t>(t.corners[i] - 1)] = i + 1;
  for (int i = 0; i < 9; ++i) colors[static_cast<std::size_t>(t.inner[i] - 1)] = inner[static_cast<std::size_t>(i)];
  CHECK(isProperColoring(Graph(12, t.edges), Coloring{colors}, 3));

  // Equal corners need the fourth color inside.
  const auto mono = triangularInnerColors({1, 1, 1}, {2, 3, 4});
  for (int i = 0; i < 3; ++i) colors[static_cast<std::size_t>(t.corners[i] - 1)] = 1;
  for (int i = 0; i < 9; ++i) colors[static_cast<std::size_t>(t.inner[i] - 1)] = mono[static_cast<std::size_t>(i)];
  CHECK(isProperColoring(Graph(12, t.edges), Coloring{colors}, 4));
}

TEST_CASE("ID sets") {
  const IdAssignment ids = assignIds(4, 2, 1);
  CHECK(ids.K == 5);
  REQUIRE(ids.ids.size() == 4);
  CHECK(ids.ids[0] == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(ids.ids[1] == std::vector<int>{1, 2, 3, 4, 6});
  CHECK(ids.ids[3] == std::vector<int>{1, 2, 3, 4, 8});
  CHECK(ids.contains(1, 6));
  CHECK_FALSE(ids.contains(0, 6));
}

TEST_CASE("path gadget arcs") {
  std::vector<Arc> arcs;
  const PathGadget p = buildPathGadget(10, arcs);
  CHECK(p.in0 == 10);
  CHECK(p.mid == 11);
  CHECK(p.in1 == 12);
  CHECK(arcs.size() == 4);
}
