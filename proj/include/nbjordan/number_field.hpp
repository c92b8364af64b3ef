#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "nbjordan/arith.hpp"
#include "nbjordan/errors.hpp"
#include "nbjordan/polynomial.hpp"

namespace nbj {

class NfElement;

/// The field Q[x]/(f) for a monic irreducible integer polynomial f. Cheap to
/// copy; copies share the modulus. Irreducibility is checked for degree <= 2
/// and is the caller's responsibility above that.
class NumberField {
 public:
  explicit NumberField(IntPolynomial modulus) {
    if (modulus.degree() < 1) throw DomainError("number field modulus must have degree >= 1");
    if (modulus.lead() != 1) throw DomainError("number field modulus must be monic");
    if (modulus.degree() == 2) {
      Integer disc = modulus.coeff(1) * modulus.coeff(1) - 4 * modulus.coeff(0);
      if (sgn(disc) >= 0 && mpz_perfect_square_p(disc.get_mpz_t()))
        throw DomainError("modulus " + nbj::to_string(modulus) + " is reducible over Q");
    }
    mod_ = std::make_shared<const IntPolynomial>(std::move(modulus));
  }

  const IntPolynomial& modulus() const { return *mod_; }
  std::size_t degree() const { return static_cast<std::size_t>(mod_->degree()); }

  /// Residue class of x.
  NfElement generator() const;
  NfElement element(std::vector<Rational> coeffs) const;

  friend bool operator==(const NumberField& a, const NumberField& b) {
    return a.mod_ == b.mod_ || *a.mod_ == *b.mod_;
  }

 private:
  friend class NfElement;
  std::shared_ptr<const IntPolynomial> mod_;
};

/// Element of a number field, stored as the reduced polynomial in the
/// generator (coefficients lowest degree first, trailing zeros trimmed).
/// A default or rational-constructed element carries no field and acts as a
/// rational constant; it adopts the field of whatever it is combined with.
class NfElement {
 public:
  NfElement() = default;
  NfElement(int v) : NfElement(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  NfElement(const Integer& v) : NfElement(Rational(v)) {}  // NOLINT
  NfElement(const Rational& v) {  // NOLINT
    if (sgn(v) != 0) c_.push_back(v);
    if (!c_.empty()) c_[0].canonicalize();
  }
  NfElement(const NumberField& f, std::vector<Rational> coeffs) : mod_(f.mod_), c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();
    reduce();
  }

  bool is_zero() const noexcept { return c_.empty(); }
  bool is_rational() const noexcept { return c_.size() <= 1; }
  Rational rational_value() const {
    if (!is_rational()) throw DomainError("number field element is not rational");
    return c_.empty() ? Rational(0) : c_[0];
  }
  /// Coefficient of generator^i.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  bool has_field() const noexcept { return mod_ != nullptr; }
  const IntPolynomial* modulus() const noexcept { return mod_.get(); }

  NfElement& operator+=(const NfElement& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  NfElement& operator-=(const NfElement& o) {
    adopt(o);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  NfElement& operator*=(const NfElement& o) {
    adopt(o);
    if (is_zero() || o.is_zero()) {
      c_.clear();
      return *this;
    }
    std::vector<Rational> prod(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    c_ = std::move(prod);
    reduce();
    return *this;
  }
  NfElement& operator/=(const NfElement& o) { return *this *= o.inverse(); }

  friend NfElement operator+(NfElement a, const NfElement& b) { return a += b; }
  friend NfElement operator-(NfElement a, const NfElement& b) { return a -= b; }
  friend NfElement operator*(NfElement a, const NfElement& b) { return a *= b; }
  friend NfElement operator/(NfElement a, const NfElement& b) { return a /= b; }
  friend NfElement operator-(NfElement a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  /// Multiplicative inverse via extended Euclid against the modulus.
  NfElement inverse() const {
    if (is_zero()) throw NonInvertibleError("division by zero in number field");
    if (is_rational()) {
      NfElement r(Rational(1) / c_[0]);
      r.mod_ = mod_;
      return r;
    }
    auto [g, s, t] = extended_gcd(RatPolynomial(c_), to_rational(*mod_));
    if (g.degree() != 0)
      throw NonInvertibleError("element not invertible modulo " + nbj::to_string(*mod_) +
                               "; modulus is not irreducible");
    NfElement r;
    r.mod_ = mod_;
    r.c_ = s.coeffs();
    r.reduce();
    return r;
  }

  /// Image under the nontrivial automorphism of a quadratic field
  /// (generator a -> -b - a for modulus x^2 + b x + c). Identity on Q.
  NfElement conjugate() const {
    if (is_rational()) return *this;
    if (!mod_ || mod_->degree() != 2) throw UnsupportedError("conjugation needs a quadratic field");
    const Integer& b = mod_->coeffs()[1];
    NfElement r;
    r.mod_ = mod_;
    r.c_ = {c_[0] - Rational(b) * c_[1], -c_[1]};
    r.trim();
    return r;
  }

  friend bool operator==(const NfElement& a, const NfElement& b) {
    if (a.mod_ && b.mod_ && a.mod_ != b.mod_ && !(*a.mod_ == *b.mod_))
      return false;
    return a.c_ == b.c_;
  }

  /// Readable form in the generator name, e.g. "-1/2*a+3".
  std::string to_string(const std::string& gen = "a") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      const Rational& c = c_[k];
      if (sgn(c) == 0) continue;
      Rational mag = abs(c);
      if (!out.empty() || sgn(c) < 0) out += sgn(c) < 0 ? "-" : "+";
      if (k == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += gen;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const NfElement& x) { return os << x.to_string(); }

 private:
  void adopt(const NfElement& o) {
    if (!mod_) {
      mod_ = o.mod_;
      if (mod_ && c_.size() > static_cast<std::size_t>(mod_->degree())) reduce();
    } else if (o.mod_ && o.mod_ != mod_ && !(*o.mod_ == *mod_)) {
      throw DomainError("mixing elements of different number fields");
    }
  }

  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }

  void reduce() {
    trim();
    if (!mod_) return;
    const auto d = static_cast<std::size_t>(mod_->degree());
    const auto& f = mod_->coeffs();
    for (std::size_t k = c_.size(); k-- > d;) {
      if (sgn(c_[k]) == 0) continue;
      Rational top = c_[k];
      for (std::size_t i = 0; i <= d; ++i) c_[k - d + i] -= top * f[i];
    }
    if (c_.size() > d) c_.resize(d);
    trim();
  }

  std::shared_ptr<const IntPolynomial> mod_;
  std::vector<Rational> c_;
};

inline bool is_zero(const NfElement& x) { return x.is_zero(); }
inline NfElement inverse(const NfElement& x) { return x.inverse(); }

inline NfElement NumberField::generator() const { return NfElement(*this, {Rational(0), Rational(1)}); }
inline NfElement NumberField::element(std::vector<Rational> coeffs) const {
  return NfElement(*this, std::move(coeffs));
}

/// Element-wise embedding of a rational vector.
inline std::vector<NfElement> to_field_vector(const std::vector<Rational>& v) {
  return {v.begin(), v.end()};
}

}  // namespace nbj
