#include "sparsekit/gadgets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sparsekit {

int TreeGadget::height() const {
  int h = 0;
  for (std::size_t levelSize = 1, seen = 1; seen < nodes.size(); levelSize *= 2) {
    seen += levelSize * 2;
    ++h;
  }
  return h;
}

TreeGadget buildTreeGadget(int leafCount, Vertex base) {
  if (leafCount < 2 || !std::has_single_bit(static_cast<unsigned>(leafCount))) {
    throw std::invalid_argument("treegadget leaf count must be a power of two >= 2");
  }
  TreeGadget g;
  g.leafCount = leafCount;
  const int numNodes = leafCount - 1;
  for (int i = 0; i < numNodes; ++i) {
    TreeGadget::Node node{base + 3 * i, base + 3 * i + 1, base + 3 * i + 2};
    g.nodes.push_back(node);
    g.edges.push_back({node.r, node.x});
    g.edges.push_back({node.r, node.y});
    g.edges.push_back({node.x, node.y});
  }
  const int firstLeafNode = leafCount / 2 - 1;
  for (int i = 0; i < firstLeafNode; ++i) {
    g.edges.push_back({g.nodes[i].x, g.nodes[2 * i + 1].r});
    g.edges.push_back({g.nodes[i].y, g.nodes[2 * i + 2].r});
  }
  for (int i = firstLeafNode; i < numNodes; ++i) {
    g.leaves.push_back(g.nodes[i].x);
    g.leaves.push_back(g.nodes[i].y);
  }
  g.root = g.nodes.front().r;
  return g;
}

std::optional<std::vector<int>> extendTreeGadget(const TreeGadget& g,
                                                 const std::vector<int>& leafColors,
                                                 ColorMask palette, ColorMask rootAllowed) {
  if (leafColors.size() != g.leaves.size()) {
    throw std::invalid_argument("leaf color count does not match the treegadget");
  }
  const int numNodes = static_cast<int>(g.nodes.size());
  const int firstLeafNode = g.leafCount / 2 - 1;
  std::vector<int> colors(static_cast<std::size_t>(3 * numNodes), 0);

  // Allowed colors for x (side 0) and y (side 1) of node i given the
  // feasible root colors of the child subtrees.
  std::vector<ColorMask> feasible(static_cast<std::size_t>(numNodes), 0);
  auto sideOptions = [&](int i, int side) -> ColorMask {
    if (i >= firstLeafNode) {
      return colorBit(leafColors[static_cast<std::size_t>(2 * (i - firstLeafNode) + side)]);
    }
    const ColorMask child = feasible[static_cast<std::size_t>(2 * i + 1 + side)];
    ColorMask out = 0;
    for (int c = 1; c <= kMaxPalette; ++c) {
      if ((palette & colorBit(c)) && (child & ~colorBit(c))) out |= colorBit(c);
    }
    return out;
  };
  auto triangleChoice = [&](int i, int cr) -> std::optional<std::pair<int, int>> {
    const ColorMask xs = sideOptions(i, 0);
    const ColorMask ys = sideOptions(i, 1);
    for (int cx = 1; cx <= kMaxPalette; ++cx) {
      if (!(xs & colorBit(cx)) || cx == cr) continue;
      for (int cy = 1; cy <= kMaxPalette; ++cy) {
        if ((ys & colorBit(cy)) && cy != cr && cy != cx) return std::make_pair(cx, cy);
      }
    }
    return std::nullopt;
  };

  for (int i = numNodes - 1; i >= 0; --i) {
    ColorMask allowed = i == 0 ? static_cast<ColorMask>(palette & rootAllowed) : palette;
    for (int cr = 1; cr <= kMaxPalette; ++cr) {
      if ((allowed & colorBit(cr)) && triangleChoice(i, cr)) {
        feasible[static_cast<std::size_t>(i)] |= colorBit(cr);
      }
    }
  }
  if (feasible[0] == 0) return std::nullopt;

  auto lowest = [](ColorMask m) { return std::countr_zero(static_cast<unsigned>(m)) + 1; };
  colors[0] = lowest(feasible[0]);
  for (int i = 0; i < numNodes; ++i) {
    const int cr = colors[static_cast<std::size_t>(3 * i)];
    auto [cx, cy] = *triangleChoice(i, cr);
    colors[static_cast<std::size_t>(3 * i + 1)] = cx;
    colors[static_cast<std::size_t>(3 * i + 2)] = cy;
    if (i < firstLeafNode) {
      colors[static_cast<std::size_t>(3 * (2 * i + 1))] =
          lowest(feasible[static_cast<std::size_t>(2 * i + 1)] & ~colorBit(cx));
      colors[static_cast<std::size_t>(3 * (2 * i + 2))] =
          lowest(feasible[static_cast<std::size_t>(2 * i + 2)] & ~colorBit(cy));
    }
  }
  return colors;
}

TriangularGadget buildTriangularGadget(Vertex base) {
  TriangularGadget g;
  const Vertex u = base, v = base + 1, w = base + 2;
  g.corners = {u, v, w};
  for (int k = 0; k < 3; ++k) {
    const Vertex p = base + 3 + 3 * k, q = p + 1, s = p + 2;
    g.inner[static_cast<std::size_t>(3 * k)] = p;
    g.inner[static_cast<std::size_t>(3 * k + 1)] = q;
    g.inner[static_cast<std::size_t>(3 * k + 2)] = s;
    g.edges.insert(g.edges.end(), {{p, q}, {q, s}, {p, s}, {u, q}, {u, s}, {v, p}, {v, s},
                                   {w, p}, {w, q}});
  }
  return g;
}

std::array<int, 9> triangularInnerColors(const std::array<int, 3>& cornerColors,
                                         const std::array<int, 3>& spare) {
  const bool allEqual = cornerColors[0] == cornerColors[1] && cornerColors[1] == cornerColors[2];
  const std::array<int, 3>& pattern = allEqual ? spare : cornerColors;
  std::array<int, 9> out{};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t j = 0; j < 3; ++j) out[3 * k + j] = pattern[j];
  }
  return out;
}

const GadgetCertification& certifyTriangularGadget() {
  static const GadgetCertification result = [] {
    GadgetCertification cert;
    const TriangularGadget g = buildTriangularGadget(0);
    std::array<int, TriangularGadget::kVertices> c{};
    bool rainbowOnly = true;
    bool extended[3][3][3] = {};
    for (;;) {
      ++cert.coloringsChecked;
      bool proper = std::all_of(g.edges.begin(), g.edges.end(),
                                [&](const Edge& e) { return c[e.first] != c[e.second]; });
      if (proper) {
        ++cert.properColorings;
        if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2]) rainbowOnly = false;
        extended[c[0]][c[1]][c[2]] = true;
      }
      std::size_t i = 0;
      while (i < c.size() && c[i] == 2) c[i++] = 0;
      if (i == c.size()) break;
      ++c[i];
    }
    cert.cornersAlwaysRainbow = rainbowOnly;
    cert.rainbowAlwaysExtends = true;
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int d = 0; d < 3; ++d) {
          if (a != b && b != d && a != d && !extended[a][b][d]) cert.rainbowAlwaysExtends = false;
        }
      }
    }
    return cert;
  }();
  return result;
}

PathGadget buildPathGadget(Vertex base, std::vector<Arc>& arcs) {
  PathGadget p{base, base + 1, base + 2};
  arcs.insert(arcs.end(), {{p.in0, p.mid}, {p.mid, p.in1}, {p.in1, p.mid}, {p.mid, p.in0}});
  return p;
}

bool IdAssignment::contains(std::size_t group, int x) const {
  const auto& id = ids.at(group);
  return std::binary_search(id.begin(), id.end(), x);
}

IdAssignment assignIds(std::size_t groups, int k, int logQ) {
  IdAssignment a;
  a.K = 2 + k + logQ;
  const int universe = 2 * a.K;
  std::vector<int> current(static_cast<std::size_t>(a.K));
  for (int i = 0; i < a.K; ++i) current[static_cast<std::size_t>(i)] = i + 1;
  while (a.ids.size() < groups) {
    a.ids.push_back(current);
    // Next K-subset in lexicographic order.
    int i = a.K - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == universe - a.K + i + 1) --i;
    if (i < 0) {
      if (a.ids.size() < groups) throw std::logic_error("not enough distinct ids");
      break;
    }
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < a.K; ++j) {
      current[static_cast<std::size_t>(j)] = current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return a;
}

}  // namespace sparsekit
