#pragma once

// Cross-compositions: t instances of one source problem become a single
// instance of the target problem that is a YES instance iff some input is.
// Inputs are arranged as X_{i,j}, i, j in [q], q = sqrt(t); batch position of
// X_{i,j} is (i-1)*q + (j-1).

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sparsekit/gadgets.hpp"
#include "sparsekit/model.hpp"
#include "sparsekit/reduce.hpp"

namespace sparsekit {

class ClassMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Equivalence-class signatures: instances may be composed together only if
// their signatures are equal.
std::vector<std::int64_t> classSignature(const TsdInstance& inst);
std::vector<std::int64_t> classSignature(const BipartiteHamInstance& inst);
// Instances with an isolated blue vertex all share one class.
std::vector<std::int64_t> classSignature(const EqColRbdsInstance& inst);

template <class T>
struct PaddedBatch {
  std::vector<T> instances;
  std::size_t originalCount = 0;
  std::size_t paddedCount = 0;  // t, a power of 4
  int q = 0;                    // sqrt(t)
  int logQ = 0;

  const T& at(int i, int j) const {
    return instances[static_cast<std::size_t>((i - 1) * q + (j - 1))];
  }
};

inline constexpr std::size_t kMinBatch = 4;

// Pads with copies of instance 0 up to the next power of 4 (at least 4).
template <class T>
PaddedBatch<T> padBatch(std::vector<T> instances) {
  if (instances.empty()) throw std::invalid_argument("cannot compose an empty batch");
  const auto signature = classSignature(instances.front());
  for (std::size_t i = 1; i < instances.size(); ++i) {
    if (classSignature(instances[i]) != signature) {
      throw ClassMismatchError("instance " + std::to_string(i) +
                               " is not in the equivalence class of instance 0");
    }
  }
  PaddedBatch<T> batch;
  batch.originalCount = instances.size();
  std::size_t t = kMinBatch;
  int logQ = 1;
  while (t < instances.size()) {
    t *= 4;
    ++logQ;
  }
  const T first = instances.front();
  instances.resize(t, first);
  batch.instances = std::move(instances);
  batch.paddedCount = t;
  batch.q = 1 << logQ;
  batch.logQ = logQ;
  return batch;
}

// ---- 4-coloring ----------------------------------------------------------

// Palette colors.
inline constexpr int kColorX = 1;
inline constexpr int kColorY = 2;
inline constexpr int kColorZ = 3;
inline constexpr int kColorA = 4;

struct FourColoringLayout {
  int q = 0;
  int m = 0;  // |X| per input
  int n = 0;  // triangles per input
  std::vector<std::vector<Vertex>> S;                  // S[i-1][k-1] = s^i_k
  std::vector<std::vector<TriangularGadget>> T;        // T[j-1][l-1]
  TreeGadget selectorS;                                // q leaves
  TreeGadget selectorT;                                // 2q leaves
  std::array<Vertex, 4> palette{};                     // clique vertices for x, y, z, a
  int listVertices = 0;                                // vertices before the palette clique
};

struct FourColoringComposition {
  ListColoringInstance listInstance;  // the 4-list-coloring instance
  Graph graph;                        // listInstance plus the palette clique
  FourColoringLayout layout;
  ReductionTrace trace;
};

FourColoringComposition composeFourColoring(const PaddedBatch<TsdInstance>& batch);

// Expected vertex count: mq + 12nq + 3(q-1) + 3(2q-1) + 4.
std::int64_t fourColoringVertexCount(int q, int m, int n);

// Builds the 4-coloring of the composed graph from a 2-3-coloring of input
// `position`. Throws std::invalid_argument if `tsdColoring` is not valid.
Coloring fourColoringWitness(const FourColoringComposition& comp,
                             const PaddedBatch<TsdInstance>& batch, std::size_t position,
                             const Coloring& tsdColoring);

// ---- Hamiltonicity -------------------------------------------------------

struct HamLayout {
  int q = 0;
  int m = 0;
  int n = 0;
  std::vector<std::vector<PathGadget>> A;  // A[i-1][k-1] = a^i_k
  std::vector<std::vector<PathGadget>> B;  // B[j-1][l-1] = b^j_l
  Vertex start = 0;
  Vertex end = 0;
  Vertex next = 0;
  std::vector<Vertex> x, y, z;  // index i-1 for i in [2r]; z_i subdivides the arc leaving y_i

  std::vector<PathGadget> allGadgets() const;
};

struct HamComposition {
  Digraph graph;
  HamLayout layout;
  ReductionTrace trace;
};

HamComposition composeHamiltonicity(const PaddedBatch<BipartiteHamInstance>& batch);

// 3(m+n)q + 6(q-1) + 3.
std::int64_t hamVertexCount(int q, int m, int n);

// Builds the directed Hamiltonian cycle from a Hamiltonian s-t path of input
// `position` (vertex order from s to t in input labels).
HamCycle hamCycleWitness(const HamComposition& comp, const PaddedBatch<BipartiteHamInstance>& batch,
                         std::size_t position, const HamCycle& stPath);

// True iff every path gadget's vertices occur consecutively in the cycle as
// in0, mid, in1 or in1, mid, in0.
bool traversesPathGadgets(const HamLayout& layout, const HamCycle& cycle);

// ---- Dominating set ------------------------------------------------------

struct DomSetLayout {
  bool canonicalNo = false;
  int q = 0;
  int k = 0;
  int logQ = 0;
  IdAssignment ids;
  std::vector<std::vector<std::vector<Vertex>>> R;  // R[i-1][p-1][idx]
  std::vector<std::vector<Vertex>> B;               // B[j-1][l-1]
  Vertex sPrime = 0;
  Vertex s = 0;
  std::map<std::pair<int, int>, std::vector<Vertex>> W;  // (c1, c2) -> w_1..w_2K
  std::vector<std::array<Vertex, 3>> T;                 // T[l] = (t^0_l, t^1_l, t^2_l)
};

struct DomSetComposition {
  Graph graph;
  std::int64_t budget = 0;
  DomSetLayout layout;
  ReductionTrace trace;
};

DomSetComposition composeDominatingSet(const PaddedBatch<EqColRbdsInstance>& batch);

// nq + mq + 2 + 3 log q + k(k-1) 2K.
std::int64_t domSetVertexCount(int q, int m, int n, int k);

// Builds the connected dominating set of size k + 1 + log q from a col-RBDS
// solution of input `position`.
DomSet domSetWitness(const DomSetComposition& comp, const PaddedBatch<EqColRbdsInstance>& batch,
                     std::size_t position, const DomSet& solution);

}  // namespace sparsekit
