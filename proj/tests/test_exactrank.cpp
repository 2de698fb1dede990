#include "doctest.h"

#include <map>

#include "brute.hpp"
#include "sparsekit/exactrank.hpp"
#include "sparsekit/generate.hpp"

using namespace sparsekit;

namespace {

Hypergraph k4() { return Hypergraph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// Dense inclusion vectors of the size-r edges over every (r-1)-subset that occurs.
std::vector<std::vector<mpq_class>> denseColumns(const Hypergraph& h, int r, std::vector<std::size_t>& edgeIndex) {
  std::map<std::vector<Vertex>, std::size_t> rows;
  std::vector<std::vector<std::vector<Vertex>>> subsets;
  for (std::size_t i = 0; i < h.numEdges(); ++i) {
    const auto& e = h.edges()[i];
    if (static_cast<int>(e.size()) != r) continue;
    edgeIndex.push_back(i);
    std::vector<std::vector<Vertex>> mine;
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      std::vector<Vertex> a;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != skip) a.push_back(e[j]);
      }
      rows.emplace(a, 0);
      mine.push_back(a);
    }
    subsets.push_back(mine);
  }
  std::size_t next = 0;
  for (auto& [key, index] : rows) index = next++;
  std::vector<std::vector<mpq_class>> cols;
  for (const auto& mine : subsets) {
    std::vector<mpq_class> col(rows.size(), 0);
    for (const auto& a : mine) col[rows.at(a)] = 1;
    cols.push_back(col);
  }
  return cols;
}

// Greedy leftmost basis by repeated rank tests.
std::vector<std::size_t> referenceBasis(const std::vector<std::vector<mpq_class>>& cols) {
  std::vector<std::size_t> kept;
  std::vector<std::vector<mpq_class>> chosen;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    chosen.push_back(cols[j]);
    if (brute::rank(chosen) == chosen.size()) {
      kept.push_back(j);
    } else {
      chosen.pop_back();
    }
  }
  return kept;
}

}  // namespace

TEST_CASE("colex order") {
  CHECK(colexLess({1, 3}, {2, 3}));
  CHECK(colexLess({2, 3}, {1, 4}));
  CHECK_FALSE(colexLess({1, 4}, {1, 4}));
}

TEST_CASE("K4 inclusion matrix") {
  const InclusionMatrix m = buildInclusionMatrix(k4(), 2);
  CHECK(m.numRows() == 4);
  CHECK(m.numColumns() == 6);
  CHECK(m.entry(0, 0));
  CHECK_FALSE(m.entry(2, 0));
  CHECK_THROWS_AS(buildInclusionMatrix(k4(), 5), std::out_of_range);

  const ColumnBasis exact = columnBasis(m, RankMode::exact());
  CHECK(exact.kept == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK_FALSE(exact.prime.has_value());
  const ColumnBasis modular = columnBasis(m, RankMode::modular(1));
  CHECK(modular.kept == exact.kept);
  REQUIRE(modular.prime.has_value());
  CHECK(*modular.prime >= (1ull << 61));
  CHECK(isPrime64(*modular.prime));
}

TEST_CASE("K4 dependency certificate") {
  // {3,4} = {1,4} - {1,2} + {2,3} as incidence vectors.
  const InclusionMatrix m = buildInclusionMatrix(k4(), 2);
  const ColumnBasis basis = columnBasis(m, RankMode::exact());
  const DependencyCertificate cert = dependencyCertificate(m, basis, 5);
  REQUIRE(cert.coefficients.size() == 4);
  CHECK(cert.beta(0) == -1);
  CHECK(cert.beta(1) == 0);
  CHECK(cert.beta(2) == 1);
  CHECK(cert.beta(3) == 1);
  CHECK(cert.beta(5) == -1);
  CHECK_THROWS_AS(dependencyCertificate(m, basis, 0), std::invalid_argument);
}

TEST_CASE("primality") {
  CHECK(isPrime64(2));
  CHECK(isPrime64(2305843009213693951ull));  // 2^61 - 1
  CHECK_FALSE(isPrime64(1));
  CHECK_FALSE(isPrime64(2305843009213693953ull));
  CHECK(randomPrime(9) == randomPrime(9));
  CHECK(randomPrime(9) != randomPrime(10));
}

TEST_CASE("bases match dense rational elimination") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.between(3, 7);
    const Hypergraph h = generateHypergraph({n, rng.between(1, 25), 2, std::min(4, n)}, rng);
    for (int r = 2; r <= h.maxEdgeSize(); ++r) {
      std::vector<std::size_t> edgeIndex;
      const auto cols = denseColumns(h, r, edgeIndex);
      const InclusionMatrix m = buildInclusionMatrix(h, r);
      REQUIRE(m.columns == edgeIndex);
      const auto expected = referenceBasis(cols);
      CHECK(columnBasis(m, RankMode::exact()).kept == expected);
      CHECK(columnBasis(m, RankMode::modular(rng.next())).kept == expected);

      const ColumnBasis basis = columnBasis(m, RankMode::exact());
      for (std::size_t j = 0; j < m.numColumns(); ++j) {
        if (basis.contains(j)) continue;
        const DependencyCertificate cert = dependencyCertificate(m, basis, j);
        CHECK(cert.beta(j) == -1);
        std::vector<mpq_class> sum(cols.front().size(), 0);
        for (const auto& [column, beta] : cert.coefficients) {
          CHECK((column == j || basis.contains(column)));
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += beta * cols[column][i];
        }
        for (const auto& x : sum) CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("small inclusion matrices") {
  const Hypergraph triangle(3, {{1, 2}, {2, 3}, {1, 3}});
  const InclusionMatrix t = buildInclusionMatrix(triangle, 2);
  CHECK(t.numRows() == 3);
  CHECK(t.numColumns() == 3);
  CHECK(columnBasis(t, RankMode::exact()).rank() == 3);

  const InclusionMatrix single = buildInclusionMatrix(Hypergraph(3, {{1, 2, 3}}), 3);
  CHECK(single.numRows() == 3);
  REQUIRE(single.numColumns() == 1);
  for (std::size_t row = 0; row < 3; ++row) CHECK(single.entry(row, 0));
  CHECK(single.rowKeys[0] == std::vector<Vertex>{1, 2});
  CHECK(single.rowKeys[2] == std::vector<Vertex>{2, 3});

  CHECK(buildInclusionMatrix(Hypergraph(3, {{1, 2}}), 3).numColumns() == 0);

  const InclusionMatrix dup = buildInclusionMatrix(Hypergraph(2, {{1, 2}, {1, 2}}), 2);
  CHECK(columnBasis(dup, RankMode::exact()).kept == std::vector<std::size_t>{0});
  CHECK(columnBasis(dup, RankMode::modular(3)).kept == std::vector<std::size_t>{0});
}
