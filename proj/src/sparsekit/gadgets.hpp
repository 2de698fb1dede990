#pragma once

// Building blocks of the cross-compositions: treegadgets, triangular gadgets,
// path gadgets and the ID sets of the dominating-set construction. Builders
// take the first vertex index to use and return absolute vertex numbers.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sparsekit/model.hpp"

namespace sparsekit {

// Complete binary tree with leafCount/2 leaf nodes, every node replaced by a
// triangle (r, x, y). Nodes use heap order: node i has children 2i+1, 2i+2;
// x_i is joined to r of the left child and y_i to r of the right child.
// leafCount = 2 gives a single triangle.
struct TreeGadget {
  struct Node {
    Vertex r = 0;
    Vertex x = 0;
    Vertex y = 0;
  };
  int leafCount = 0;
  std::vector<Node> nodes;
  Vertex root = 0;
  std::vector<Vertex> leaves;  // left to right
  std::vector<Edge> edges;

  int numVertices() const { return 3 * static_cast<int>(nodes.size()); }
  Vertex firstVertex() const { return nodes.front().r; }
  int height() const;
};

// leafCount must be a power of two, at least 2.
TreeGadget buildTreeGadget(int leafCount, Vertex base);

// Extends a leaf coloring of a treegadget using colors from `palette` (three
// colors). Leaf i gets leafColors[i]; the root must take a color in
// rootAllowed. Returns colors of all gadget vertices, indexed from
// firstVertex(), or nullopt when no extension exists.
std::optional<std::vector<int>> extendTreeGadget(const TreeGadget& g,
                                                 const std::vector<int>& leafColors,
                                                 ColorMask palette, ColorMask rootAllowed);

// 12 vertices: corners u, v, w and three inner triangles (p, q, s) with
// u-q, u-s, v-p, v-s, w-p, w-q. A proper 3-coloring forces c(p) = c(u),
// c(q) = c(v), c(s) = c(w), hence rainbow corners.
struct TriangularGadget {
  std::array<Vertex, 3> corners{};
  std::array<Vertex, 9> inner{};
  std::vector<Edge> edges;

  static constexpr int kVertices = 12;
};

TriangularGadget buildTriangularGadget(Vertex base);

// Colors of the nine inner vertices given corner colors that are either
// pairwise distinct (the forced pattern) or all equal to one color, in which
// case `spare` lists the three other colors to use.
std::array<int, 9> triangularInnerColors(const std::array<int, 3>& cornerColors,
                                         const std::array<int, 3>& spare);

struct GadgetCertification {
  bool cornersAlwaysRainbow = false;
  bool rainbowAlwaysExtends = false;
  std::uint64_t coloringsChecked = 0;
  std::uint64_t properColorings = 0;
  bool passed() const { return cornersAlwaysRainbow && rainbowAlwaysExtends; }
};

// Exhaustive check over all 3^12 colorings; computed once per process.
const GadgetCertification& certifyTriangularGadget();

struct PathGadget {
  Vertex in0 = 0;
  Vertex mid = 0;
  Vertex in1 = 0;
};

// in0 -> mid -> in1 and back.
PathGadget buildPathGadget(Vertex base, std::vector<Arc>& arcs);

struct IdAssignment {
  int K = 0;
  std::vector<std::vector<int>> ids;  // ids[i] is a sorted K-subset of [2K]

  bool contains(std::size_t group, int x) const;
};

// The lexicographically first `groups` K-subsets of [2K] with K = 2 + k + logQ.
IdAssignment assignIds(std::size_t groups, int k, int logQ);

}  // namespace sparsekit
