#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nbjordan/arith.hpp"
#include "nbjordan/errors.hpp"

namespace nbj {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has an empty coefficient vector and degree -1; otherwise the
/// leading coefficient is nonzero.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial monomial(const T& c, std::size_t deg) {
    std::vector<T> v(deg + 1);
    v[deg] = c;
    return Polynomial(std::move(v));
  }
  /// The polynomial x - r.
  static Polynomial linear_root(const T& r) { return Polynomial({T(-r), T(1)}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coeffs() const noexcept { return c_; }

  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Polynomial(std::move(d));
  }

  /// Horner evaluation at any ring element that accepts products with T.
  template <class S>
  S evaluate(const S& x) const {
    S acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + S(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (sgn(a.c_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const T& s, Polynomial a) {
    for (auto& x : a.c_) x *= s;
    a.trim();
    return a;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  Polynomial pow(std::size_t e) const {
    Polynomial r = constant(T(1));
    Polynomial b = *this;
    while (e != 0) {
      if (e & 1U) r *= b;
      e >>= 1U;
      if (e != 0) b *= b;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Human-readable form in the variable x, highest degree first: "x^2+x+2",
/// "x-1", "2*x^3-x".
template <class T>
std::string to_string(const Polynomial<T>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const T& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    T mag = abs(c);
    bool neg = sgn(c) < 0;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? '-' : '+';
    }
    bool unit = (mag == 1);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Polynomial<T>& p) {
  return os << to_string(p);
}

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  return RatPolynomial(std::move(c));
}

/// Total order used for deterministic reports: degree first, then the
/// ascending coefficient list lexicographically.
inline bool factor_order(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

inline Integer content(const IntPolynomial& p) {
  Integer g = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// p / content(p), sign chosen so the leading coefficient is positive.
inline IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (sgn(p.lead()) < 0) g = -g;
  std::vector<Integer> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

/// Primitive integer polynomial proportional to a rational one.
inline IntPolynomial primitive_from_rational(const RatPolynomial& p) {
  std::vector<Rational> c = p.coeffs();
  auto ints = primitive_integer_vector(c);
  IntPolynomial q(std::move(ints));
  return primitive_part(q);
}

/// Quotient and remainder over Q.
inline std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                                      const RatPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rational> q(r.size() - db);
  const Rational& lb = b.lead();
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] / lb;
    q[k - db] = f;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
  }
  return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

/// Exact quotient a / b in Z[x], or nullopt when b does not divide a there.
inline std::optional<IntPolynomial> exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return IntPolynomial{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Integer> q(r.size() - db);
  const Integer& lb = b.lead();
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer f = r[k] / lb;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= f * b.coeffs()[i];
    q[k - db] = std::move(f);
  }
  for (std::size_t i = 0; i < db; ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  return IntPolynomial(std::move(q));
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[x].
inline IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const auto db = static_cast<std::size_t>(b.degree());
  const Integer& lb = b.lead();
  for (std::size_t k = r.size(); k-- > db;) {
    Integer top = r[k];
    for (auto& x : r) x *= lb;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= top * b.coeffs()[i];
    r.resize(k);
  }
  return IntPolynomial(std::move(r));
}

/// Greatest common divisor in Z[x] via the primitive remainder sequence;
/// primitive with positive leading coefficient (gcd(0, 0) = 0).
inline IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
  if (a0.is_zero()) return primitive_part(b0);
  if (b0.is_zero()) return primitive_part(a0);
  IntPolynomial a = primitive_part(a0);
  IntPolynomial b = primitive_part(b0);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.is_zero() ? r : primitive_part(r);
  }
  return primitive_part(a);
}

inline RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  return Rational(1) / p.lead() * p;
}

/// Extended Euclid over Q: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<RatPolynomial, RatPolynomial, RatPolynomial> extended_gcd(const RatPolynomial& a,
                                                                            const RatPolynomial& b) {
  RatPolynomial r0 = a, r1 = b;
  RatPolynomial s0 = RatPolynomial::constant(1), s1{};
  RatPolynomial t0{}, t1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = Rational(1) / r0.lead();
  return {inv * r0, inv * s0, inv * t0};
}

struct SquarefreeFactor {
  IntPolynomial factor;  // primitive, squarefree, positive leading coefficient
  std::size_t multiplicity = 0;
};

/// p = constant * prod factor_i ^ multiplicity_i.
struct SquarefreeDecomposition {
  Integer constant;
  std::vector<SquarefreeFactor> factors;  // ascending multiplicity, no constants
};

/// Yun's algorithm in Z[x]. Exact divisions are licensed by Gauss's lemma
/// since every divisor along the way is primitive.
inline SquarefreeDecomposition squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("squarefree decomposition of the zero polynomial");
  SquarefreeDecomposition out;
  out.constant = content(p);
  if (sgn(p.lead()) < 0) out.constant = -out.constant;
  IntPolynomial f = primitive_part(p);
  if (f.degree() == 0) return out;

  auto div = [](const IntPolynomial& a, const IntPolynomial& b) {
    auto q = exact_divide(a, b);
    if (!q) throw StructuralError("squarefree decomposition: inexact division");
    return *q;
  };

  IntPolynomial fp = f.derivative();
  IntPolynomial g = gcd(f, fp);
  IntPolynomial b = div(f, g);
  IntPolynomial c = div(fp, g);
  IntPolynomial d = c - b.derivative();
  for (std::size_t i = 1; b.degree() > 0; ++i) {
    IntPolynomial a = gcd(b, d);
    b = div(b, a);
    c = div(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.factors.push_back({primitive_part(a), i});
  }
  return out;
}

namespace detail {

/// ceil(r^(1/k)) for a nonnegative rational r.
inline Integer ceil_root(const Rational& r, unsigned long k) {
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Integer root;
  int exact = mpz_root(root.get_mpz_t(), c.get_mpz_t(), k);
  if (!exact) root += 1;
  return root;
}

inline std::vector<Integer> positive_divisors(const Integer& n0) {
  Integer n = abs(n0);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Integer e = n / d;
      if (e != d) large.push_back(e);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Integer B with |z| <= B for every complex root z of p (deg p >= 1): the
/// smaller of the Cauchy and Fujiwara bounds.
inline Integer root_bound(const IntPolynomial& p) {
  if (p.degree() < 1) throw DomainError("root bound of a constant polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  Rational an = abs(Rational(p.lead()));
  Rational cauchy_max = 0;
  Integer fujiwara = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Rational r = abs(Rational(p.coeffs()[n - k])) / an;
    if (r > cauchy_max) cauchy_max = r;
    if (k == n) r /= 2;
    Integer t = detail::ceil_root(r, k);
    if (t > fujiwara) fujiwara = t;
  }
  Integer cauchy;
  mpz_cdiv_q(cauchy.get_mpz_t(), cauchy_max.get_num_mpz_t(), cauchy_max.get_den_mpz_t());
  cauchy += 1;
  fujiwara *= 2;
  return std::min(cauchy, fujiwara);
}

struct RefinedPiece {
  IntPolynomial poly;
  bool irreducible = true;  // false: degree >= 3 remainder without split
};

/// Splits a squarefree primitive polynomial into its rational linear factors
/// and irreducible quadratic factors. Whatever is left (degree >= 3, no
/// factor of degree <= 2) is returned as a single piece, flagged unrefined
/// when its degree leaves room for a split into higher-degree factors.
/// Output is sorted by factor_order.
inline std::vector<RefinedPiece> refine_factor(const IntPolynomial& q0) {
  std::vector<RefinedPiece> out;
  if (q0.degree() < 1) return out;
  IntPolynomial q = primitive_part(q0);
  if (q.degree() == 1) {
    out.push_back({q, true});
    return out;
  }

  while (q.degree() >= 1 && sgn(q.coeffs()[0]) == 0) {
    out.push_back({IntPolynomial{0, 1}, true});
    q = *exact_divide(q, IntPolynomial{0, 1});
  }

  // Rational roots p/s: s | lead, p | constant, |p/s| <= bound.
  if (q.degree() >= 2) {
    Integer bound = root_bound(q);
    for (const Integer& s : detail::positive_divisors(q.lead())) {
      Integer lim = bound * s;
      for (Integer p = -lim; p <= lim && q.degree() >= 1; ++p) {
        if (sgn(p) == 0) continue;
        if (!mpz_divisible_p(q.coeffs()[0].get_mpz_t(), p.get_mpz_t())) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), s.get_mpz_t());
        if (g != 1) continue;
        IntPolynomial lin{-p, s};
        while (q.degree() >= 1) {
          auto quot = exact_divide(q, lin);
          if (!quot) break;
          out.push_back({lin, true});
          q = *quot;
        }
      }
    }
  }

  // Quadratics a x^2 + b x + c: a | lead, c | constant, |c| <= a B^2,
  // |b| <= 2 a B. Candidates are filtered by f(k) | q(k) at k = 1, -1, 2.
  if (q.degree() >= 4) {
    Integer bound = root_bound(q);
    bool found = true;
    while (found && q.degree() >= 4) {
      found = false;
      const Integer q1 = q.evaluate(Integer(1));
      const Integer qm1 = q.evaluate(Integer(-1));
      const Integer q2 = q.evaluate(Integer(2));
      auto divides = [](const Integer& d, const Integer& v) {
        return sgn(d) != 0 && mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t());
      };
      for (const Integer& a : detail::positive_divisors(q.lead())) {
        Integer clim = a * bound * bound;
        Integer blim = 2 * a * bound;
        for (Integer c = -clim; c <= clim && !found; ++c) {
          if (sgn(c) == 0 || !mpz_divisible_p(q.coeffs()[0].get_mpz_t(), c.get_mpz_t())) continue;
          for (Integer b = -blim; b <= blim; ++b) {
            Integer disc = b * b - 4 * a * c;
            if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t())) continue;
            Integer g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue;
            if (!divides(a + b + c, q1) || !divides(a - b + c, qm1) ||
                !divides(4 * a + 2 * b + c, q2))
              continue;
            IntPolynomial quad{c, b, a};
            auto quot = exact_divide(q, quad);
            if (!quot) continue;
            out.push_back({quad, true});
            q = *quot;
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
  }

  if (q.degree() >= 1) {
    // No factor of degree <= 2 remains, so a leftover of degree <= 5 is
    // irreducible; degree >= 6 may still split into cubics or higher.
    out.push_back({primitive_part(q), q.degree() <= 5});
  }
  std::sort(out.begin(), out.end(),
            [](const RefinedPiece& a, const RefinedPiece& b) { return factor_order(a.poly, b.poly); });
  return out;
}

}  // namespace nbj
