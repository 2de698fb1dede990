#include "sparsekit/exactrank.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sparsekit/rng.hpp"

namespace sparsekit {

bool colexLess(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

bool InclusionMatrix::entry(std::size_t row, std::size_t column) const {
  const auto& rows = columnRows.at(column);
  return std::binary_search(rows.begin(), rows.end(), row);
}

std::string InclusionMatrix::toText() const {
  std::ostringstream out;
  out << "M_" << r << ": " << numRows() << " x " << numColumns() << '\n';
  for (std::size_t i = 0; i < numRows(); ++i) {
    out << '{';
    for (std::size_t k = 0; k < rowKeys[i].size(); ++k) out << (k ? "," : "") << rowKeys[i][k];
    out << "}\t";
    for (std::size_t j = 0; j < numColumns(); ++j) out << (entry(i, j) ? '1' : '0');
    out << '\n';
  }
  return out.str();
}

InclusionMatrix buildInclusionMatrix(const Hypergraph& h, int r) {
  if (r < 1 || r > h.numVertices()) {
    throw std::out_of_range("edge size r=" + std::to_string(r) + " outside 1.." +
                            std::to_string(h.numVertices()));
  }
  InclusionMatrix m;
  m.r = r;
  m.numVertices = h.numVertices();

  // Each size-r edge contributes its r subsets obtained by dropping one vertex.
  auto faces = [](const std::vector<Vertex>& e) {
    std::vector<std::vector<Vertex>> out;
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != skip) face.push_back(e[i]);
      }
      out.push_back(std::move(face));
    }
    return out;
  };

  std::map<std::vector<Vertex>, std::size_t, decltype(&colexLess)> rowIndex(&colexLess);
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const auto& e = h.edges()[i];
    if (static_cast<int>(e.size()) != r) continue;
    m.columns.push_back(i);
    for (auto& face : faces(e)) rowIndex.emplace(std::move(face), 0);
  }
  std::size_t next = 0;
  for (auto& [key, index] : rowIndex) {
    index = next++;
    m.rowKeys.push_back(key);
  }
  for (std::size_t i : m.columns) {
    std::vector<std::size_t> rows;
    for (const auto& face : faces(h.edges()[i])) rows.push_back(rowIndex.at(face));
    std::sort(rows.begin(), rows.end());
    m.columnRows.push_back(std::move(rows));
  }
  return m;
}

bool ColumnBasis::contains(std::size_t column) const {
  return std::binary_search(kept.begin(), kept.end(), column);
}

mpq_class DependencyCertificate::beta(std::size_t column) const {
  for (const auto& [col, value] : coefficients) {
    if (col == column) return value;
  }
  return 0;
}

// ---- primes -----------------------------------------------------------------

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulMod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
}

std::uint64_t powMod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mulMod(result, base, p);
    base = mulMod(base, base, p);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool isPrime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                              31ull, 37ull}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all n < 3.3 * 10^24.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull,
                          37ull}) {
    std::uint64_t x = powMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t randomPrime(std::uint64_t seed) {
  CounterRng rng(seed);
  constexpr std::uint64_t kLow = 1ull << 61;
  for (;;) {
    std::uint64_t candidate = kLow + rng.below(kLow);
    if (isPrime64(candidate)) return candidate;
  }
}

// ---- elimination engines ----------------------------------------------------

namespace {

struct SparseEntry {
  std::size_t index;
  mpz_class value;
};

// Incremental fraction-free column elimination. Stored columns are kept in
// echelon form: stored column i has zeros at the pivots of columns 0..i-1, so
// reducing a new column against the stored ones in insertion order leaves it
// zero at every existing pivot. Optionally tracks each vector as an integer
// combination of the inserted input columns.
class ExactEliminator {
 public:
  ExactEliminator(std::size_t rows, std::size_t maxInputs, bool track)
      : rows_(rows), max_inputs_(maxInputs), track_(track) {}

  // Inserts input column `slot`. Returns an empty vector when the column was
  // independent; otherwise (tracking only) the dense integer combination c with
  // sum_j c_j * input_j = 0 and c_slot != 0.
  std::optional<std::vector<mpz_class>> insert(std::size_t slot,
                                               const std::vector<std::size_t>& ones) {
    std::vector<mpz_class> v(rows_);
    for (std::size_t row : ones) v[row] = 1;
    std::vector<mpz_class> comb;
    if (track_) {
      comb.assign(max_inputs_, 0);
      comb[slot] = 1;
    }
    for (const Stored& u : stored_) {
      if (sgn(v[u.pivot]) == 0) continue;
      mpz_class a = u.pivotValue;
      mpz_class b = v[u.pivot];
      mpz_class g = gcd(a, b);
      a /= g;
      b /= g;
      if (a != 1) {
        for (auto& x : v) {
          if (sgn(x) != 0) x *= a;
        }
        for (auto& x : comb) {
          if (sgn(x) != 0) x *= a;
        }
      }
      for (const auto& [row, value] : u.entries) v[row] -= b * value;
      for (const auto& [idx, value] : u.comb) comb[idx] -= b * value;
      if (a != 1) removeContent(v, comb);
    }
    auto pivot = std::find_if(v.begin(), v.end(), [](const mpz_class& x) { return sgn(x) != 0; });
    if (pivot == v.end()) return comb;
    removeContent(v, comb);
    if (sgn(*pivot) < 0) {
      for (auto& x : v) x = -x;
      for (auto& x : comb) x = -x;
    }
    Stored s;
    s.pivot = static_cast<std::size_t>(pivot - v.begin());
    s.pivotValue = v[s.pivot];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) != 0) s.entries.push_back({i, v[i]});
    }
    for (std::size_t i = 0; i < comb.size(); ++i) {
      if (sgn(comb[i]) != 0) s.comb.push_back({i, comb[i]});
    }
    stored_.push_back(std::move(s));
    return std::nullopt;
  }

 private:
  struct Stored {
    std::size_t pivot = 0;
    mpz_class pivotValue;
    std::vector<SparseEntry> entries;
    std::vector<SparseEntry> comb;
  };

  static void removeContent(std::vector<mpz_class>& v, std::vector<mpz_class>& comb) {
    mpz_class g = 0;
    for (const auto& x : v) {
      if (sgn(x) != 0) g = gcd(g, x);
    }
    for (const auto& x : comb) {
      if (sgn(x) != 0) g = gcd(g, x);
    }
    if (g <= 1) return;
    for (auto& x : v) {
      if (sgn(x) != 0) x /= g;
    }
    for (auto& x : comb) {
      if (sgn(x) != 0) x /= g;
    }
  }

  std::size_t rows_;
  std::size_t max_inputs_;
  bool track_;
  std::vector<Stored> stored_;
};

// Same scheme over Z/pZ with pivots scaled to 1.
class ModularEliminator {
 public:
  ModularEliminator(std::size_t rows, std::uint64_t prime) : rows_(rows), p_(prime) {}

  bool insert(const std::vector<std::size_t>& ones) {
    std::vector<std::uint64_t> v(rows_, 0);
    for (std::size_t row : ones) v[row] = 1;
    for (const Stored& u : stored_) {
      const std::uint64_t b = v[u.pivot];
      if (b == 0) continue;
      for (const auto& [row, value] : u.entries) {
        std::uint64_t sub = mulMod(b, value, p_);
        v[row] = v[row] >= sub ? v[row] - sub : v[row] + (p_ - sub);
      }
    }
    auto pivot = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
    if (pivot == v.end()) return false;
    const std::uint64_t inv = powMod(*pivot, p_ - 2, p_);
    Stored s;
    s.pivot = static_cast<std::size_t>(pivot - v.begin());
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] != 0) s.entries.emplace_back(i, mulMod(v[i], inv, p_));
    }
    stored_.push_back(std::move(s));
    return true;
  }

 private:
  struct Stored {
    std::size_t pivot = 0;
    std::vector<std::pair<std::size_t, std::uint64_t>> entries;
  };
  std::size_t rows_;
  std::uint64_t p_;
  std::vector<Stored> stored_;
};

}  // namespace

ColumnBasis columnBasis(const InclusionMatrix& m, RankMode mode) {
  ColumnBasis basis;
  basis.r = m.r;
  basis.mode = mode;
  if (mode.isExact()) {
    ExactEliminator elim(m.numRows(), 0, false);
    for (std::size_t j = 0; j < m.numColumns(); ++j) {
      if (!elim.insert(j, m.columnRows[j])) basis.kept.push_back(j);
    }
  } else {
    basis.prime = randomPrime(mode.seed());
    ModularEliminator elim(m.numRows(), *basis.prime);
    for (std::size_t j = 0; j < m.numColumns(); ++j) {
      if (elim.insert(m.columnRows[j])) basis.kept.push_back(j);
    }
  }
  return basis;
}

DependencyCertificate dependencyCertificate(const InclusionMatrix& m, const ColumnBasis& basis,
                                            std::size_t dropped) {
  if (dropped >= m.numColumns()) throw std::out_of_range("column index out of range");
  if (basis.contains(dropped)) {
    throw std::invalid_argument("column " + std::to_string(dropped) + " is a basis column");
  }
  const std::size_t slots = basis.kept.size() + 1;
  ExactEliminator elim(m.numRows(), slots, true);
  for (std::size_t i = 0; i < basis.kept.size(); ++i) {
    if (elim.insert(i, m.columnRows[basis.kept[i]])) {
      throw std::logic_error("basis columns are linearly dependent");
    }
  }
  auto relation = elim.insert(basis.kept.size(), m.columnRows[dropped]);
  if (!relation) {
    throw IndependentColumnError("column " + std::to_string(dropped) +
                                 " is independent of the basis; recompute the basis exactly");
  }
  const mpz_class& targetCoefficient = (*relation)[basis.kept.size()];
  DependencyCertificate cert;
  cert.target = dropped;
  for (std::size_t i = 0; i < basis.kept.size(); ++i) {
    if (sgn((*relation)[i]) == 0) continue;
    mpq_class beta((*relation)[i], targetCoefficient);
    beta.canonicalize();
    cert.coefficients.emplace_back(basis.kept[i], -beta);
  }
  cert.coefficients.emplace_back(dropped, mpq_class(-1));
  std::sort(cert.coefficients.begin(), cert.coefficients.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return cert;
}

}  // namespace sparsekit
