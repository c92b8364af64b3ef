#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "nbjordan/arith.hpp"
#include "nbjordan/errors.hpp"
#include "nbjordan/matrix.hpp"
#include "nbjordan/number_field.hpp"
#include "nbjordan/polynomial.hpp"

namespace nbj {

// ---------------------------------------------------------------------------
// Fraction-free elimination over Z

namespace detail {

/// In-place Bareiss elimination. Returns the rank; on return the leading
/// `rank` rows are in echelon form and, for square input of full rank, the
/// last pivot is the determinant up to the returned row-swap sign.
inline std::size_t bareiss(IntMatrix& a, int* swap_sign = nullptr) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      sign = -sign;
    }
    const Integer p = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = p * a(i, j) - f * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  if (swap_sign) *swap_sign = sign;
  return r;
}

}  // namespace detail

inline Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  std::size_t r = detail::bareiss(a, &sign);
  if (r < n) return 0;
  return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

/// Exact rank over Q.
inline std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  return detail::bareiss(a);
}

/// Exact rank over Q; each row is scaled to integers first.
inline std::size_t rank(const RatMatrix& m) {
  IntMatrix a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return rank(a);
}

/// Rank of the reduction modulo a prime p < 2^63.
inline std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) a[i] = mod_u64(m(i / cols, i % cols), p);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const std::uint64_t inv = invmod(a[r * cols + c], p);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = a[i * cols + c];
      if (f == 0) continue;
      f = mulmod(f, inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        std::uint64_t sub = mulmod(f, a[r * cols + j], p);
        std::uint64_t& x = a[i * cols + j];
        x = x >= sub ? x - sub : x + (p - sub);
      }
    }
    ++r;
  }
  return r;
}

inline constexpr std::uint64_t kDefaultPrimeSeed = 0x9e3779b97f4a7c15ULL;

/// `count` distinct primes just above random 60-bit integers drawn from a
/// generator seeded with `seed`.
inline std::vector<std::uint64_t> modular_primes(std::uint64_t seed = kDefaultPrimeSeed,
                                                 std::size_t count = 3) {
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> out;
  while (out.size() < count) {
    std::uint64_t start = (gen() >> 4) | (std::uint64_t{1} << 59);
    Integer z(static_cast<unsigned long>(start)), pz;
    mpz_nextprime(pz.get_mpz_t(), z.get_mpz_t());
    std::uint64_t p = pz.get_ui();
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

enum class RankMode { Exact, ModularConsensus };

/// Rank via Bareiss (Exact) or as the maximum of the ranks modulo three
/// fixed 60-bit primes (ModularConsensus). A reduction mod p can only lose
/// rank, so the consensus value is a lower bound that is exact unless all
/// three primes divide the same nonzero minors.
inline std::size_t rank(const IntMatrix& m, RankMode mode) {
  if (mode == RankMode::Exact) return rank(m);
  static const std::vector<std::uint64_t> primes = modular_primes();
  std::size_t best = 0;
  for (std::uint64_t p : primes) best = std::max(best, rank_mod_p(m, p));
  return best;
}

// ---------------------------------------------------------------------------
// Elimination over a field (Rational or NfElement)

/// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && is_zero(a(piv, c))) ++piv;
    if (piv == rows) continue;
    a.swap_rows(piv, r);
    const T inv = inverse(a(r, c));
    for (std::size_t j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const T f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class T>
std::size_t field_rank(Matrix<T> a) {
  return rref(a).size();
}

/// Basis of the right null space read off the RREF: one vector per free
/// column, with a 1 in that column.
template <class T>
std::vector<Vector<T>> field_kernel(Matrix<T> a) {
  const std::vector<std::size_t> pivots = rref(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<Vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector<T> v(cols, T(0));
    v[f] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One particular solution of a x = b, or nullopt when inconsistent.
template <class T>
std::optional<Vector<T>> field_solve(const Matrix<T>& a, const Vector<T>& b) {
  if (a.rows() != b.size()) throw DomainError("linear solve: right-hand side length differs from row count");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t r = 0; r < a.rows(); ++r) aug(r, a.cols()) = b[r];
  const std::vector<std::size_t> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vector<T> x(a.cols(), T(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, a.cols());
  return x;
}

/// Null-space basis scaled to primitive integer vectors (content 1, first
/// nonzero entry positive).
inline std::vector<Vector<Integer>> kernel_basis(const RatMatrix& m) {
  std::vector<Vector<Integer>> out;
  for (const auto& v : field_kernel(m)) out.push_back(primitive_integer_vector(v));
  return out;
}

inline std::vector<Vector<Integer>> kernel_basis(const IntMatrix& m) { return kernel_basis(to_rational(m)); }

inline std::optional<Vector<Rational>> solve_linear(const RatMatrix& m, const Vector<Rational>& b) {
  return field_solve(m, b);
}

/// Linear solve over Q[x]/(f). Every entry must belong to `field` or be a
/// rational constant.
inline std::optional<Vector<NfElement>> nf_solve(const NumberField& field, const Matrix<NfElement>& m,
                                                 const Vector<NfElement>& b) {
  auto check = [&](const NfElement& e) {
    if (e.has_field() && !(*e.modulus() == field.modulus()))
      throw DomainError("nf_solve: entry belongs to a different number field");
  };
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) check(m(r, c));
  for (const auto& e : b) check(e);
  return field_solve(m, b);
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and polynomial evaluation

/// det(xI - m) by evaluating det(kI - m) at k = 0..dim with Bareiss and
/// interpolating through Newton divided differences.
inline IntPolynomial charpoly(const IntMatrix& m) {
  if (!m.square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPolynomial{1};
  std::vector<Rational> dd(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix a = -m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<unsigned long>(k);
    dd[k] = determinant(a);
  }
  // Divided differences on nodes 0..n: dd[k] becomes f[0..k].
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = n; k >= j; --k) dd[k] = (dd[k] - dd[k - 1]) / static_cast<unsigned long>(j);
  // Newton form to monomial basis: p = dd[n]; p = p*(x - k) + dd[k].
  RatPolynomial p{dd[n]};
  for (std::size_t k = n; k-- > 0;)
    p = p * RatPolynomial{Rational(-static_cast<long>(k)), Rational(1)} + RatPolynomial{dd[k]};
  std::vector<Integer> c;
  for (const auto& x : p.coeffs()) {
    if (!is_integral(x)) throw StructuralError("charpoly interpolation produced a non-integer coefficient");
    c.push_back(x.get_num());
  }
  return IntPolynomial(std::move(c));
}

/// p(m) by Horner's rule.
inline IntMatrix eval_poly_at_matrix(const IntPolynomial& p, const IntMatrix& m) {
  if (!m.square()) throw DomainError("polynomial evaluation at a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix acc(n, n);
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[k];
  }
  return acc;
}

/// Matrix power by repeated squaring.
template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, std::size_t e) {
  Matrix<T> r = Matrix<T>::identity(m.rows());
  Matrix<T> b = m;
  while (e != 0) {
    if (e & 1U) r = r * b;
    e >>= 1U;
    if (e != 0) b = b * b;
  }
  return r;
}

/// Entrywise embedding of an integer matrix into a number field.
inline Matrix<NfElement> to_field(const IntMatrix& m) {
  return m.map<NfElement>([](const Integer& x) { return NfElement(x); });
}

}  // namespace nbj
