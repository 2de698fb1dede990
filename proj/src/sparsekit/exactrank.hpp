#pragma once

// Subset-inclusion matrices and their greedy-leftmost column bases over the
// rationals.
//
// For a hypergraph and an edge size r, the inclusion matrix has one column per
// size-r edge (in edge order) and one row per (r-1)-subset of vertices that is
// contained in at least one such edge; entry (A, e) is 1 iff A is a subset of e.
// Rows that would be all zero are never materialized since they cannot change
// the column space.
//
// Two elimination engines are provided:
//   * exact: fraction-free integer elimination over GMP integers, error-free;
//   * modular: elimination modulo a random prime p >= 2^61. Reduction mod p
//     can only lower ranks, so the modular basis is always a subset of the
//     exact one; a column is wrongly dropped only if p divides a nonzero
//     minor, which happens with probability at most (#columns * log2(max
//     minor)) / 2^61.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sparsekit/model.hpp"

namespace sparsekit {

struct InclusionMatrix {
  int r = 0;
  int numVertices = 0;
  // (r-1)-subsets in colexicographic order; only realized rows.
  std::vector<std::vector<Vertex>> rowKeys;
  // Edge index (into the parent hypergraph) of each column.
  std::vector<std::size_t> columns;
  // Sorted row indices holding a 1, per column.
  std::vector<std::vector<std::size_t>> columnRows;

  std::size_t numRows() const { return rowKeys.size(); }
  std::size_t numColumns() const { return columns.size(); }
  bool entry(std::size_t row, std::size_t column) const;
  std::string toText() const;
};

// Colexicographic "less than" on equal-size sorted subsets.
bool colexLess(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

// Throws std::out_of_range unless 1 <= r <= numVertices.
InclusionMatrix buildInclusionMatrix(const Hypergraph& h, int r);

class RankMode {
 public:
  enum class Kind { modular, exact };

  static RankMode exact() { return RankMode(Kind::exact, 0); }
  static RankMode modular(std::uint64_t seed) { return RankMode(Kind::modular, seed); }

  Kind kind() const { return kind_; }
  bool isExact() const { return kind_ == Kind::exact; }
  std::uint64_t seed() const { return seed_; }
  std::string name() const { return isExact() ? "exact" : "modular"; }

 private:
  RankMode(Kind kind, std::uint64_t seed) : kind_(kind), seed_(seed) {}
  Kind kind_;
  std::uint64_t seed_;
};

struct ColumnBasis {
  int r = 0;
  std::vector<std::size_t> kept;  // sorted matrix column positions
  RankMode mode = RankMode::exact();
  std::optional<std::uint64_t> prime;  // modulus used in modular mode

  std::size_t rank() const { return kept.size(); }
  bool contains(std::size_t column) const;
};

ColumnBasis columnBasis(const InclusionMatrix& m, RankMode mode);

// Uniformly random prime in [2^61, 2^62) drawn from a stream seeded by `seed`.
std::uint64_t randomPrime(std::uint64_t seed);
bool isPrime64(std::uint64_t n);

// Linear dependency witnessing that a dropped column lies in the span of the
// basis: sum_i beta_i * m_i = 0 with beta_target = -1.
struct DependencyCertificate {
  std::size_t target = 0;
  // (column position, coefficient); sorted by column, zero coefficients omitted,
  // the target itself included with coefficient -1.
  std::vector<std::pair<std::size_t, mpq_class>> coefficients;

  mpq_class beta(std::size_t column) const;
};

class IndependentColumnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves for the dependency exactly. Throws IndependentColumnError if `dropped`
// is not in the rational span of the kept columns (only possible when the basis
// came from an unlucky modular run) and std::invalid_argument if `dropped` is
// itself a kept column.
DependencyCertificate dependencyCertificate(const InclusionMatrix& m, const ColumnBasis& basis,
                                            std::size_t dropped);

}  // namespace sparsekit
