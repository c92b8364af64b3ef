#include <catch_amalgamated.hpp>

#include <random>

#include "nbjordan/jordan.hpp"
#include "nbjordan/number_field.hpp"
#include "oracles.hpp"

using namespace nbj;

namespace {

NfElement random_element(const NumberField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  return f.element({Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
}

// The same element in the oracle's representation.
oracle::Quad as_quad(const NfElement& x) { return {x.coeff(0), x.coeff(1)}; }

bool same(const NfElement& x, const oracle::Quad& q) { return x.coeff(0) == q.a && x.coeff(1) == q.b; }

}  // namespace

TEST_CASE("field construction rejects bad moduli", "[nf]") {
  CHECK_THROWS_AS(NumberField(IntPolynomial{1}), DomainError);
  CHECK_THROWS_AS(NumberField(IntPolynomial{1, 0, 2}), DomainError);
  CHECK_THROWS_AS(NumberField(IntPolynomial{-1, 0, 1}), DomainError);  // (x-1)(x+1)
  CHECK_NOTHROW(NumberField(IntPolynomial{2, 1, 1}));
}

TEST_CASE("arithmetic in Q(sqrt(-2))", "[nf]") {
  NumberField f(IntPolynomial{2, 0, 1});
  const NfElement a = f.generator();
  CHECK(a * a == NfElement(-2));
  CHECK(a.inverse() == NfElement(Rational(-1, 2)) * a);
  CHECK(a.conjugate() == -a);
  CHECK((a + 1) * (a - 1) == NfElement(-3));
  CHECK(NfElement(Rational(1, 2)).is_rational());
  CHECK_FALSE(a.is_rational());
  CHECK_THROWS_AS(NfElement().inverse(), NonInvertibleError);
}

TEST_CASE("field operations agree with the pair-of-rationals oracle", "[nf][oracle]") {
  std::mt19937_64 rng(21);
  for (auto [p, q] : {std::pair<long, long>{1, 2}, {0, 2}, {0, 3}, {1, 1}, {3, 5}}) {
    NumberField f(IntPolynomial{q, p, 1});
    const oracle::QuadField qf{Rational(p), Rational(q)};
    for (int t = 0; t < 40; ++t) {
      const NfElement x = random_element(f, rng), y = random_element(f, rng);
      CHECK(same(x + y, qf.add(as_quad(x), as_quad(y))));
      CHECK(same(x * y, qf.mul(as_quad(x), as_quad(y))));
      if (!y.is_zero()) {
        CHECK(same(y.inverse(), qf.inv(as_quad(y))));
        CHECK(x / y * y == x);
      }
    }
  }
}

TEST_CASE("field axioms", "[nf][property]") {
  std::mt19937_64 rng(22);
  NumberField f(IntPolynomial{2, 1, 1});
  for (int t = 0; t < 50; ++t) {
    const NfElement x = random_element(f, rng), y = random_element(f, rng), z = random_element(f, rng);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x - x == NfElement());
    // The conjugate is a ring map, and x + conj(x) is rational.
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + x.conjugate()).is_rational());
  }
}

TEST_CASE("roots of integer factors", "[nf]") {
  auto [f1, l1] = root_of(IntPolynomial{-3, 2});
  CHECK_FALSE(f1.has_value());
  CHECK(l1 == NfElement(Rational(3, 2)));
  // 2x^2 + x + 1: a non-monic quadratic.
  const IntPolynomial q{1, 1, 2};
  auto [f2, l2] = root_of(q);
  REQUIRE(f2.has_value());
  CHECK(q.evaluate(l2).is_zero());
  CHECK_THROWS_AS(root_of(IntPolynomial{1, 0, 0, 1}), UnsupportedError);
}

TEST_CASE("mixing fields is rejected", "[nf]") {
  NumberField f(IntPolynomial{2, 0, 1}), g(IntPolynomial{3, 0, 1});
  CHECK_THROWS_AS(f.generator() + g.generator(), DomainError);
}

TEST_CASE("element formatting", "[nf]") {
  NumberField f(IntPolynomial{2, 0, 1});
  CHECK(NfElement(Rational(-3, 2)).to_string() == "-3/2");
  CHECK(NfElement().to_string() == "0");
  CHECK(f.generator().to_string() == "a");
}
