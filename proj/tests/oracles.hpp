#pragma once

// Slow, independent reference computations used only by the tests.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "nbjordan/graph.hpp"
#include "nbjordan/matrix.hpp"
#include "nbjordan/polynomial.hpp"

namespace oracle {

using nbj::Integer;
using nbj::IntMatrix;
using nbj::IntPolynomial;
using nbj::Rational;

/// det(xI - m) by Laplace expansion along the first row, entries in Z[x].
inline IntPolynomial cofactor_charpoly(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = i == j ? IntPolynomial{Integer(-m(i, j)), Integer(1)} : IntPolynomial{Integer(-m(i, j))};
  auto rec = [&](auto&& self, std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> IntPolynomial {
    if (rows.empty()) return IntPolynomial{1};
    IntPolynomial sum;
    const std::size_t r = rows.front();
    std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (a[r][cols[k]].is_zero()) continue;
      std::vector<std::size_t> sub = cols;
      sub.erase(sub.begin() + static_cast<long>(k));
      IntPolynomial term = a[r][cols[k]] * self(self, rest, sub);
      if (k % 2 == 0)
        sum += term;
      else
        sum -= term;
    }
    return sum;
  };
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  return rec(rec, idx, idx);
}

/// Rank by textbook Gaussian elimination over Q.
inline std::size_t gauss_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

/// Q(α) with α^2 + p α + q = 0, elements a + b α.
struct Quad {
  Rational a, b;
};

struct QuadField {
  Rational p, q;

  Quad add(const Quad& x, const Quad& y) const { return {x.a + y.a, x.b + y.b}; }
  Quad sub(const Quad& x, const Quad& y) const { return {x.a - y.a, x.b - y.b}; }
  Quad mul(const Quad& x, const Quad& y) const {
    const Rational bd = x.b * y.b;
    return {x.a * y.a - q * bd, x.a * y.b + x.b * y.a - p * bd};
  }
  Quad inv(const Quad& x) const {
    // conjugate a + b α' with α' = -p - α
    const Quad conj{x.a - x.b * p, -x.b};
    const Rational norm = x.a * x.a - x.a * x.b * p + x.b * x.b * q;
    return {conj.a / norm, conj.b / norm};
  }
  static bool zero(const Quad& x) { return x.a == 0 && x.b == 0; }
};

using QuadMatrix = std::vector<std::vector<Quad>>;

inline QuadMatrix shifted(const IntMatrix& m, const Quad& lambda) {
  QuadMatrix out(m.rows(), std::vector<Quad>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = {Rational(m(i, j)), Rational(0)};
  for (std::size_t i = 0; i < m.rows(); ++i) out[i][i] = {out[i][i].a - lambda.a, out[i][i].b - lambda.b};
  return out;
}

inline QuadMatrix multiply(const QuadField& f, const QuadMatrix& x, const QuadMatrix& y) {
  const std::size_t n = x.size(), k = y.size(), m = y.empty() ? 0 : y[0].size();
  QuadMatrix out(n, std::vector<Quad>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (QuadField::zero(x[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = f.add(out[i][j], f.mul(x[i][l], y[l][j]));
    }
  return out;
}

inline std::size_t quad_rank(const QuadField& f, QuadMatrix a) {
  const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && QuadField::zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Quad inv = f.inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (QuadField::zero(a[i][c])) continue;
      const Quad fac = f.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = f.sub(a[i][j], f.mul(fac, a[r][j]));
    }
    ++r;
  }
  return r;
}

/// Jordan block sizes at a root α of the monic quadratic x^2 + p x + q,
/// from the ranks of (m - α I)^j for j = 1..dim.
inline std::vector<std::size_t> quad_blocks(const IntMatrix& m, long p, long q) {
  const QuadField f{Rational(p), Rational(q)};
  const QuadMatrix n = shifted(m, Quad{Rational(0), Rational(1)});
  std::vector<std::size_t> nul{0};
  QuadMatrix pw = n;
  for (std::size_t j = 1; j <= m.rows(); ++j) {
    nul.push_back(m.rows() - quad_rank(f, pw));
    if (nul.back() == nul[nul.size() - 2]) break;
    pw = multiply(f, pw, n);
  }
  // blocks of size >= j: nul[j] - nul[j-1]
  std::vector<std::size_t> blocks;
  for (std::size_t j = 1; j < nul.size(); ++j) {
    const std::size_t ge = nul[j] - nul[j - 1];
    const std::size_t ge_next = j + 1 < nul.size() ? nul[j + 1] - nul[j] : 0;
    for (std::size_t c = ge_next; c < ge; ++c) blocks.push_back(j);
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

/// Number of labeled connected graphs on n vertices with minimum degree >= 2.
inline std::size_t labeled_count(std::size_t n) {
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::size_t count = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    nbj::Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1) g.add_edge(pairs[e].first, pairs[e].second);
    if (g.min_degree() >= 2 && nbj::is_connected(g)) ++count;
  }
  return count;
}

/// Automorphism count by trying every permutation.
inline std::size_t automorphisms(const nbj::Graph& g) {
  std::vector<int> perm(g.n());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!g.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
