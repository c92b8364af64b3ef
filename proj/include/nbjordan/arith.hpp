#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace nbj {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline Rational inverse(const Rational& x) { return Rational(1) / x; }

/// a / b in lowest terms; the two-argument mpq constructor does not reduce.
inline Rational ratio(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw DomainError("zero denominator");
  Rational r(a, b);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& x) { return x.get_str(); }
inline std::string to_string(const Rational& x) { return x.get_str(); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

/// Residue of x modulo p in [0, p).
inline std::uint64_t mod_u64(const Integer& x, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == 8, "unsigned long must be 64-bit");
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

/// Inverse modulo a prime p via Fermat.
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

/// Scale a rational vector to the primitive integer vector on the same ray
/// with its first nonzero entry positive. Zero vectors come back as zeros.
inline std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v) {
  Integer den_lcm = 1;
  for (const auto& x : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer s = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
    out.push_back(std::move(s));
  }
  if (g == 0) return out;
  int first_sign = 0;
  for (const auto& x : out) {
    if (sgn(x) != 0) {
      first_sign = sgn(x);
      break;
    }
  }
  if (first_sign < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

}  // namespace nbj
