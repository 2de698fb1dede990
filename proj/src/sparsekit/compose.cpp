#include "sparsekit/compose.hpp"

#include <algorithm>
#include <unordered_map>

namespace sparsekit {

std::vector<std::int64_t> classSignature(const TsdInstance& inst) {
  return {static_cast<std::int64_t>(inst.triangles().size()),
          static_cast<std::int64_t>(inst.independent().size())};
}

std::vector<std::int64_t> classSignature(const BipartiteHamInstance& inst) {
  return {static_cast<std::int64_t>(inst.sideA().size()),
          static_cast<std::int64_t>(inst.sideB().size())};
}

std::vector<std::int64_t> classSignature(const EqColRbdsInstance& inst) {
  if (inst.hasIsolatedBlue()) return {-1};
  return {static_cast<std::int64_t>(inst.numRed()), static_cast<std::int64_t>(inst.blue().size()),
          inst.k()};
}

namespace {

std::string idx(int i) { return std::to_string(i); }

// Position of each vertex within a list.
std::unordered_map<Vertex, int> indexOf(const std::vector<Vertex>& vs) {
  std::unordered_map<Vertex, int> out;
  for (std::size_t i = 0; i < vs.size(); ++i) out.emplace(vs[i], static_cast<int>(i));
  return out;
}

std::pair<int, int> gridPosition(std::size_t position, int q) {
  return {static_cast<int>(position) / q + 1, static_cast<int>(position) % q + 1};
}

}  // namespace

// ---- 4-coloring ----------------------------------------------------------

std::int64_t fourColoringVertexCount(int q, int m, int n) {
  return static_cast<std::int64_t>(m) * q + 12LL * n * q + 3LL * (q - 1) + 3LL * (2 * q - 1) + 4;
}

FourColoringComposition composeFourColoring(const PaddedBatch<TsdInstance>& batch) {
  const int q = batch.q;
  const TsdInstance& first = batch.instances.front();
  FourColoringLayout L;
  L.q = q;
  L.m = static_cast<int>(first.independent().size());
  L.n = static_cast<int>(first.triangles().size());

  ReductionTrace trace;
  trace.name = "compose-4col";
  trace.inputSize = {{"t", static_cast<std::int64_t>(batch.paddedCount)},
                     {"original", static_cast<std::int64_t>(batch.originalCount)},
                     {"q", q},
                     {"m", L.m},
                     {"n", L.n}};

  std::vector<Edge> edges;
  std::vector<ColorMask> lists;
  const ColorMask xya = colorBit(kColorX) | colorBit(kColorY) | colorBit(kColorA);
  const ColorMask xyz = colorBit(kColorX) | colorBit(kColorY) | colorBit(kColorZ);
  const ColorMask yza = colorBit(kColorY) | colorBit(kColorZ) | colorBit(kColorA);
  const ColorMask all4 = xyz | colorBit(kColorA);
  Vertex next = 1;
  auto addVertex = [&](ColorMask list, std::string name) {
    lists.push_back(list);
    trace.names.emplace_back(std::move(name), next);
    return next++;
  };

  L.S.assign(static_cast<std::size_t>(q), {});
  for (int i = 1; i <= q; ++i) {
    for (int k = 1; k <= L.m; ++k) {
      L.S[static_cast<std::size_t>(i - 1)].push_back(addVertex(xya, "s" + idx(i) + "." + idx(k)));
    }
  }
  L.T.assign(static_cast<std::size_t>(q), {});
  for (int j = 1; j <= q; ++j) {
    for (int l = 1; l <= L.n; ++l) {
      TriangularGadget g = buildTriangularGadget(next);
      const std::string base = "T" + idx(j) + ".g" + idx(l);
      for (int c = 0; c < 3; ++c) addVertex(xyz, base + ".corner" + idx(c + 1));
      for (int c = 0; c < 9; ++c) addVertex(all4, base + ".inner" + idx(c + 1));
      edges.insert(edges.end(), g.edges.begin(), g.edges.end());
      L.T[static_cast<std::size_t>(j - 1)].push_back(std::move(g));
    }
  }

  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      const TsdInstance& X = batch.at(i, j);
      auto uIndex = indexOf(X.independent());
      std::unordered_map<Vertex, int> vIndex;
      for (std::size_t l = 0; l < X.triangles().size(); ++l) {
        for (std::size_t c = 0; c < 3; ++c) {
          vIndex.emplace(X.triangles()[l][c], static_cast<int>(3 * l + c));
        }
      }
      for (const auto& [a, b] : X.graph().edges()) {
        Vertex u = a, v = b;
        if (!uIndex.count(u)) std::swap(u, v);
        if (!uIndex.count(u)) continue;  // edge inside a triangle
        const int k = uIndex.at(u);
        const int l = vIndex.at(v);
        const TriangularGadget& g = L.T[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l / 3)];
        edges.push_back({L.S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)],
                         g.corners[static_cast<std::size_t>(l % 3)]});
      }
    }
  }

  L.selectorS = buildTreeGadget(q, next);
  for (std::size_t v = 0; v < L.selectorS.nodes.size(); ++v) {
    addVertex(v == 0 ? static_cast<ColorMask>(colorBit(kColorX) | colorBit(kColorY)) : xya,
              "GS.n" + idx(static_cast<int>(v)) + ".r");
    addVertex(xya, "GS.n" + idx(static_cast<int>(v)) + ".x");
    addVertex(xya, "GS.n" + idx(static_cast<int>(v)) + ".y");
  }
  edges.insert(edges.end(), L.selectorS.edges.begin(), L.selectorS.edges.end());
  for (int i = 1; i <= q; ++i) {
    for (Vertex s : L.S[static_cast<std::size_t>(i - 1)]) {
      edges.push_back({L.selectorS.leaves[static_cast<std::size_t>(i - 1)], s});
    }
  }

  L.selectorT = buildTreeGadget(2 * q, next);
  for (std::size_t v = 0; v < L.selectorT.nodes.size(); ++v) {
    const std::string base = "GT.n" + idx(static_cast<int>(v));
    addVertex(v == 0 ? static_cast<ColorMask>(colorBit(kColorY) | colorBit(kColorZ)) : yza,
              base + ".r");
    addVertex(yza, base + ".x");
    addVertex(yza, base + ".y");
  }
  edges.insert(edges.end(), L.selectorT.edges.begin(), L.selectorT.edges.end());
  for (std::size_t leaf = 1; leaf < L.selectorT.leaves.size(); leaf += 2) {
    lists[static_cast<std::size_t>(L.selectorT.leaves[leaf] - 1)] =
        colorBit(kColorY) | colorBit(kColorZ);
  }
  for (int j = 1; j <= q; ++j) {
    const Vertex leaf = L.selectorT.leaves[static_cast<std::size_t>(2 * j - 2)];
    for (const TriangularGadget& g : L.T[static_cast<std::size_t>(j - 1)]) {
      for (Vertex v : g.inner) edges.push_back({leaf, v});
    }
  }

  L.listVertices = next - 1;
  ListColoringInstance listInstance(Graph(L.listVertices, edges), lists, 4);

  const char* colorNames[] = {"x", "y", "z", "a"};
  for (int c = 1; c <= 4; ++c) {
    L.palette[static_cast<std::size_t>(c - 1)] = next;
    trace.names.emplace_back(std::string("palette.") + colorNames[c - 1], next);
    ++next;
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) edges.push_back({L.palette[a], L.palette[b]});
  }
  for (Vertex v = 1; v <= L.listVertices; ++v) {
    for (int c = 1; c <= 4; ++c) {
      if (!(lists[static_cast<std::size_t>(v - 1)] & colorBit(c))) {
        edges.push_back({v, L.palette[static_cast<std::size_t>(c - 1)]});
      }
    }
  }
  const int total = next - 1;
  if (total != fourColoringVertexCount(q, L.m, L.n)) {
    throw std::logic_error("4-coloring composition produced an unexpected vertex count");
  }
  FourColoringComposition out;
  out.graph = Graph(total, std::move(edges));
  trace.outputSize = {{"vertices", total},
                      {"edges", static_cast<std::int64_t>(out.graph.numEdges())},
                      {"list_vertices", L.listVertices}};
  out.listInstance = std::move(listInstance);
  out.layout = std::move(L);
  out.trace = std::move(trace);
  return out;
}

Coloring fourColoringWitness(const FourColoringComposition& comp,
                             const PaddedBatch<TsdInstance>& batch, std::size_t position,
                             const Coloring& tsdColoring) {
  const TsdInstance& X = batch.instances.at(position);
  if (!isTsdColoring(X, tsdColoring)) throw std::invalid_argument("not a 2-3-coloring of the input");
  const FourColoringLayout& L = comp.layout;
  const auto [iStar, jStar] = gridPosition(position, L.q);
  std::vector<int> c(static_cast<std::size_t>(comp.graph.numVertices()), 0);
  auto set = [&](Vertex v, int color) { c[static_cast<std::size_t>(v - 1)] = color; };
  // Input colors 1, 2, 3 are x, y, z.
  auto input = [&](Vertex v) { return tsdColoring.colors[static_cast<std::size_t>(v - 1)]; };

  for (int i = 1; i <= L.q; ++i) {
    for (int k = 0; k < L.m; ++k) {
      set(L.S[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(k)],
          i == iStar ? input(X.independent()[static_cast<std::size_t>(k)]) : kColorA);
    }
  }
  for (int j = 1; j <= L.q; ++j) {
    for (int l = 0; l < L.n; ++l) {
      const TriangularGadget& g = L.T[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(l)];
      std::array<int, 3> corners{kColorZ, kColorZ, kColorZ};
      if (j == jStar) {
        for (std::size_t t = 0; t < 3; ++t) corners[t] = input(X.triangles()[static_cast<std::size_t>(l)][t]);
      }
      const auto inner = triangularInnerColors(corners, {kColorX, kColorY, kColorA});
      for (std::size_t t = 0; t < 3; ++t) set(g.corners[t], corners[t]);
      for (std::size_t t = 0; t < 9; ++t) set(g.inner[t], inner[t]);
    }
  }

  std::vector<int> leafS;
  for (int i = 1; i <= L.q; ++i) leafS.push_back(i == iStar ? kColorA : (i % 2 ? kColorX : kColorY));
  auto gs = extendTreeGadget(L.selectorS, leafS,
                             colorBit(kColorX) | colorBit(kColorY) | colorBit(kColorA),
                             colorBit(kColorX) | colorBit(kColorY));
  std::vector<int> leafT;
  for (int j = 1; j <= L.q; ++j) {
    leafT.push_back(j == jStar ? kColorA : kColorZ);
    leafT.push_back(kColorY);
  }
  auto gt = extendTreeGadget(L.selectorT, leafT,
                             colorBit(kColorY) | colorBit(kColorZ) | colorBit(kColorA),
                             colorBit(kColorY) | colorBit(kColorZ));
  if (!gs || !gt) throw std::logic_error("selector treegadget has no extension");
  for (std::size_t t = 0; t < gs->size(); ++t) {
    set(L.selectorS.firstVertex() + static_cast<Vertex>(t), (*gs)[t]);
  }
  for (std::size_t t = 0; t < gt->size(); ++t) {
    set(L.selectorT.firstVertex() + static_cast<Vertex>(t), (*gt)[t]);
  }
  for (int color = 1; color <= 4; ++color) set(L.palette[static_cast<std::size_t>(color - 1)], color);
  return Coloring{std::move(c)};
}

// ---- Hamiltonicity -------------------------------------------------------

std::int64_t hamVertexCount(int q, int m, int n) {
  return 3LL * (m + n) * q + 6LL * (q - 1) + 3;
}

std::vector<PathGadget> HamLayout::allGadgets() const {
  std::vector<PathGadget> out;
  for (const auto& group : A) out.insert(out.end(), group.begin(), group.end());
  for (const auto& group : B) out.insert(out.end(), group.begin(), group.end());
  return out;
}

HamComposition composeHamiltonicity(const PaddedBatch<BipartiteHamInstance>& batch) {
  const int q = batch.q;
  const BipartiteHamInstance& first = batch.instances.front();
  HamLayout L;
  L.q = q;
  L.m = static_cast<int>(first.sideA().size());
  L.n = static_cast<int>(first.sideB().size());

  ReductionTrace trace;
  trace.name = "compose-hamcycle";
  trace.inputSize = {{"t", static_cast<std::int64_t>(batch.paddedCount)},
                     {"original", static_cast<std::int64_t>(batch.originalCount)},
                     {"q", q},
                     {"m", L.m},
                     {"n", L.n}};

  std::vector<Arc> arcs;
  Vertex next = 1;
  auto gadget = [&](const std::string& name) {
    PathGadget p = buildPathGadget(next, arcs);
    trace.names.emplace_back(name + ".in0", p.in0);
    trace.names.emplace_back(name + ".mid", p.mid);
    trace.names.emplace_back(name + ".in1", p.in1);
    next += 3;
    return p;
  };
  auto vertex = [&](const std::string& name) {
    trace.names.emplace_back(name, next);
    return next++;
  };

  L.A.assign(static_cast<std::size_t>(q), {});
  L.B.assign(static_cast<std::size_t>(q), {});
  for (int i = 1; i <= q; ++i) {
    for (int k = 1; k <= L.m; ++k) L.A[static_cast<std::size_t>(i - 1)].push_back(gadget("a" + idx(i) + "." + idx(k)));
  }
  for (int j = 1; j <= q; ++j) {
    for (int l = 1; l <= L.n; ++l) L.B[static_cast<std::size_t>(j - 1)].push_back(gadget("b" + idx(j) + "." + idx(l)));
  }

  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      const BipartiteHamInstance& X = batch.at(i, j);
      auto aIndex = indexOf(X.sideA());
      auto bIndex = indexOf(X.orderedB());
      for (const auto& [u0, v0] : X.graph().edges()) {
        Vertex a = u0, b = v0;
        if (!aIndex.count(a)) std::swap(a, b);
        const PathGadget& ga = L.A[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(aIndex.at(a))];
        const PathGadget& gb = L.B[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(bIndex.at(b))];
        arcs.push_back({ga.in0, gb.in1});
        arcs.push_back({gb.in0, ga.in1});
      }
    }
  }
  for (const auto* groups : {&L.A, &L.B}) {
    for (const auto& group : *groups) {
      for (std::size_t l = 0; l + 1 < group.size(); ++l) arcs.push_back({group[l].in1, group[l + 1].in0});
    }
  }

  const int r = q - 1;
  L.start = vertex("start");
  for (int i = 1; i <= 2 * r; ++i) {
    L.x.push_back(vertex("x" + idx(i)));
    L.y.push_back(vertex("y" + idx(i)));
    L.z.push_back(vertex("z" + idx(i)));
  }
  L.next = vertex("next");
  L.end = vertex("end");

  arcs.push_back({L.end, L.start});
  arcs.push_back({L.start, L.x.front()});
  for (int i = 1; i <= 2 * r; ++i) {
    const std::size_t s = static_cast<std::size_t>(i - 1);
    arcs.push_back({L.y[s], L.z[s]});
    arcs.push_back({L.z[s], i < 2 * r ? L.x[s + 1] : L.next});
    const auto& groups = i <= r ? L.A : L.B;
    for (const auto& group : groups) {
      arcs.push_back({L.x[s], group.front().in0});
      arcs.push_back({group.back().in1, L.y[s]});
    }
  }
  for (const auto& group : L.B) {
    arcs.push_back({L.next, group.front().in1});
    arcs.push_back({group.back().in0, L.end});
  }

  const int total = next - 1;
  if (total != hamVertexCount(q, L.m, L.n)) {
    throw std::logic_error("Hamiltonicity composition produced an unexpected vertex count");
  }
  HamComposition out;
  out.graph = Digraph(total, std::move(arcs));
  trace.outputSize = {{"vertices", total}, {"arcs", static_cast<std::int64_t>(out.graph.numArcs())}};
  out.layout = std::move(L);
  out.trace = std::move(trace);
  return out;
}

HamCycle hamCycleWitness(const HamComposition& comp, const PaddedBatch<BipartiteHamInstance>& batch,
                         std::size_t position, const HamCycle& stPath) {
  const BipartiteHamInstance& X = batch.instances.at(position);
  if (!isHamiltonianPathST(X, stPath)) throw std::invalid_argument("not a Hamiltonian s-t path of the input");
  const HamLayout& L = comp.layout;
  const auto [iStar, jStar] = gridPosition(position, L.q);
  const int r = L.q - 1;
  std::vector<Vertex> order{L.start};

  auto forward = [&](const std::vector<PathGadget>& group) {
    for (const PathGadget& p : group) order.insert(order.end(), {p.in0, p.mid, p.in1});
  };
  int nextA = 1, nextB = 1;
  for (int i = 1; i <= 2 * r; ++i) {
    const std::size_t s = static_cast<std::size_t>(i - 1);
    order.push_back(L.x[s]);
    if (i <= r) {
      if (nextA == iStar) ++nextA;
      forward(L.A[static_cast<std::size_t>(nextA++ - 1)]);
    } else {
      if (nextB == jStar) ++nextB;
      forward(L.B[static_cast<std::size_t>(nextB++ - 1)]);
    }
    order.push_back(L.y[s]);
    order.push_back(L.z[s]);
  }
  order.push_back(L.next);

  auto aIndex = indexOf(X.sideA());
  auto bIndex = indexOf(X.orderedB());
  for (Vertex v : stPath.order) {
    const PathGadget& p = aIndex.count(v)
                              ? L.A[static_cast<std::size_t>(iStar - 1)][static_cast<std::size_t>(aIndex.at(v))]
                              : L.B[static_cast<std::size_t>(jStar - 1)][static_cast<std::size_t>(bIndex.at(v))];
    order.insert(order.end(), {p.in1, p.mid, p.in0});
  }
  order.push_back(L.end);
  return HamCycle{std::move(order)};
}

bool traversesPathGadgets(const HamLayout& layout, const HamCycle& cycle) {
  const std::size_t N = cycle.order.size();
  std::unordered_map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < N; ++i) pos.emplace(cycle.order[i], i);
  auto follows = [&](Vertex a, Vertex b) {
    return pos.count(a) && pos.count(b) && (pos.at(a) + 1) % N == pos.at(b);
  };
  for (const PathGadget& p : layout.allGadgets()) {
    const bool path0 = follows(p.in0, p.mid) && follows(p.mid, p.in1);
    const bool path1 = follows(p.in1, p.mid) && follows(p.mid, p.in0);
    if (!path0 && !path1) return false;
  }
  return true;
}

// ---- Dominating set ------------------------------------------------------

std::int64_t domSetVertexCount(int q, int m, int n, int k) {
  int logQ = 0;
  while ((1 << logQ) < q) ++logQ;
  const int K = 2 + k + logQ;
  return static_cast<std::int64_t>(n) * q + static_cast<std::int64_t>(m) * q + 2 + 3LL * logQ +
         static_cast<std::int64_t>(k) * (k - 1) * 2 * K;
}

DomSetComposition composeDominatingSet(const PaddedBatch<EqColRbdsInstance>& batch) {
  const int q = batch.q;
  const EqColRbdsInstance& first = batch.instances.front();
  DomSetComposition out;
  DomSetLayout& L = out.layout;
  ReductionTrace& trace = out.trace;
  trace.name = "compose-domset";
  trace.inputSize = {{"t", static_cast<std::int64_t>(batch.paddedCount)},
                     {"original", static_cast<std::int64_t>(batch.originalCount)},
                     {"q", q}};

  if (first.hasIsolatedBlue()) {
    L.canonicalNo = true;
    out.graph = Graph(2, {});
    out.budget = 1;
    trace.names = {{"isolated1", 1}, {"isolated2", 2}};
    trace.outputSize = {{"vertices", 2}, {"edges", 0}, {"budget", 1}};
    return out;
  }

  const int k = first.k();
  const int perClass = static_cast<int>(first.classSize());
  const int m = static_cast<int>(first.numRed());
  const int n = static_cast<int>(first.blue().size());
  L.q = q;
  L.k = k;
  L.logQ = batch.logQ;
  L.ids = assignIds(static_cast<std::size_t>(q), k, L.logQ);
  trace.inputSize.insert(trace.inputSize.end(), {{"m", m}, {"n", n}, {"k", k}});

  std::vector<Edge> edges;
  Vertex next = 1;
  auto vertex = [&](const std::string& name) {
    trace.names.emplace_back(name, next);
    return next++;
  };

  L.R.assign(static_cast<std::size_t>(q), {});
  for (int i = 1; i <= q; ++i) {
    auto& Ri = L.R[static_cast<std::size_t>(i - 1)];
    Ri.assign(static_cast<std::size_t>(k), {});
    for (int p = 1; p <= k; ++p) {
      for (int c = 1; c <= perClass; ++c) {
        Ri[static_cast<std::size_t>(p - 1)].push_back(vertex("r" + idx(i) + "." + idx(p) + "." + idx(c)));
      }
    }
  }
  L.B.assign(static_cast<std::size_t>(q), {});
  for (int j = 1; j <= q; ++j) {
    for (int l = 1; l <= n; ++l) L.B[static_cast<std::size_t>(j - 1)].push_back(vertex("b" + idx(j) + "." + idx(l)));
  }

  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= q; ++j) {
      const EqColRbdsInstance& X = batch.at(i, j);
      std::unordered_map<Vertex, std::pair<int, int>> redIndex;
      for (int p = 0; p < k; ++p) {
        const auto& cls = X.colorClasses()[static_cast<std::size_t>(p)];
        for (std::size_t c = 0; c < cls.size(); ++c) redIndex.emplace(cls[c], std::make_pair(p, static_cast<int>(c)));
      }
      auto blueIndex = indexOf(X.blue());
      for (const auto& [u0, v0] : X.graph().edges()) {
        Vertex red = u0, blue = v0;
        if (!redIndex.count(red)) std::swap(red, blue);
        const auto [p, c] = redIndex.at(red);
        edges.push_back({L.R[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(p)][static_cast<std::size_t>(c)],
                         L.B[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(blueIndex.at(blue))]});
      }
    }
  }

  L.sPrime = vertex("s'");
  L.s = vertex("s");
  edges.push_back({L.sPrime, L.s});
  for (const auto& Ri : L.R) {
    for (const auto& cls : Ri) {
      for (Vertex v : cls) edges.push_back({L.s, v});
    }
  }

  for (int c1 = 1; c1 <= k; ++c1) {
    for (int c2 = 1; c2 <= k; ++c2) {
      if (c1 == c2) continue;
      auto& W = L.W[{c1, c2}];
      for (int x = 1; x <= 2 * L.ids.K; ++x) {
        const Vertex w = vertex("w(" + idx(c1) + "," + idx(c2) + ")." + idx(x));
        W.push_back(w);
        for (int i = 1; i <= q; ++i) {
          const int color = L.ids.contains(static_cast<std::size_t>(i - 1), x) ? c1 : c2;
          for (Vertex v : L.R[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(color - 1)]) {
            edges.push_back({w, v});
          }
        }
      }
    }
  }

  for (int l = 0; l < L.logQ; ++l) {
    std::array<Vertex, 3> t{};
    for (int b = 0; b < 3; ++b) t[static_cast<std::size_t>(b)] = vertex("t" + idx(l + 1) + "^" + idx(b));
    edges.insert(edges.end(), {{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}});
    for (int j = 1; j <= q; ++j) {
      const int bit = ((j - 1) >> l) & 1;
      for (Vertex v : L.B[static_cast<std::size_t>(j - 1)]) edges.push_back({t[static_cast<std::size_t>(bit)], v});
    }
    edges.push_back({L.s, t[0]});
    edges.push_back({L.s, t[1]});
    L.T.push_back(t);
  }

  const int total = next - 1;
  if (total != domSetVertexCount(q, m, n, k)) {
    throw std::logic_error("dominating-set composition produced an unexpected vertex count");
  }
  out.graph = Graph(total, std::move(edges));
  out.budget = k + 1 + L.logQ;
  trace.outputSize = {{"vertices", total},
                      {"edges", static_cast<std::int64_t>(out.graph.numEdges())},
                      {"budget", out.budget},
                      {"K", L.ids.K}};
  return out;
}

DomSet domSetWitness(const DomSetComposition& comp, const PaddedBatch<EqColRbdsInstance>& batch,
                     std::size_t position, const DomSet& solution) {
  const EqColRbdsInstance& X = batch.instances.at(position);
  if (!isColRbdsSolution(X, solution)) throw std::invalid_argument("not a col-RBDS solution of the input");
  const DomSetLayout& L = comp.layout;
  if (L.canonicalNo) throw std::logic_error("the canonical NO instance has no dominating set");
  const auto [iStar, jStar] = gridPosition(position, L.q);
  std::vector<Vertex> chosen;
  for (Vertex v : solution.vertices) {
    for (int p = 0; p < L.k; ++p) {
      const auto& cls = X.colorClasses()[static_cast<std::size_t>(p)];
      auto it = std::find(cls.begin(), cls.end(), v);
      if (it != cls.end()) {
        chosen.push_back(L.R[static_cast<std::size_t>(iStar - 1)][static_cast<std::size_t>(p)]
                            [static_cast<std::size_t>(it - cls.begin())]);
      }
    }
  }
  chosen.push_back(L.s);
  for (int l = 0; l < L.logQ; ++l) {
    const int bit = ((jStar - 1) >> l) & 1;
    chosen.push_back(L.T[static_cast<std::size_t>(l)][bit ? 0 : 1]);
  }
  std::sort(chosen.begin(), chosen.end());
  return DomSet{std::move(chosen)};
}

}  // namespace sparsekit
