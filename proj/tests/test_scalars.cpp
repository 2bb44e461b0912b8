#include <doctest.h>

#include <complex>
#include <numbers>

#include "gen.hpp"
#include "locpoly/cyclotomic.hpp"
#include "locpoly/rational.hpp"

using namespace locpoly;

namespace {

// Floating image of an element of Q(zeta_m); a loose independent check.
std::complex<double> approx(const Cyclotomic& x) {
  std::complex<double> z = std::polar(1.0, 2 * std::numbers::pi / x.conductor()), s = 0, w = 1;
  for (const Rational& c : x.coeffs()) {
    s += w * (static_cast<double>(c.num().convert_to<long double>()) / static_cast<double>(c.den().convert_to<long double>()));
    w *= z;
  }
  return s;
}

}  // namespace

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("6/4") == Rational(3) / Rational(2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational::parse("3/-6") == Rational(-1) / Rational(2));
  CHECK((Rational(1) / Rational(3)).fraction_str() == "1/3");
  CHECK(Rational(5).fraction_str() == "5/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("x"), SchemaError);
}

TEST_CASE("valuations and powers") {
  CHECK(valuation(Rational(18), 3) == 2);
  CHECK(valuation(Rational(1) / Rational(9), 3) == -2);
  CHECK(valuation(Rational(0), 3) == kInfiniteValuation);
  CHECK(power(3, -2) == Rational(1) / Rational(9));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("rational field laws on generated triples") {
  gen::Source s(11);
  for (int i = 0; i < 300; ++i) {
    Rational a = s.rational(), b = s.rational(), c = s.rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(a.floor() <= a);
    CHECK(a < a.floor() + Rational(1));
  }
}

TEST_CASE("roots of unity") {
  for (int m : {1, 2, 3, 4, 5, 6, 8, 12}) {
    Cyclotomic z = Cyclotomic::zeta(m);
    Cyclotomic p = 1, s = 0;
    for (int k = 0; k < m; ++k) {
      s += p;
      p *= z;
    }
    CHECK(p == Cyclotomic(1));
    CHECK(s == Cyclotomic(m == 1 ? 1 : 0));
    CHECK(z * z.conj() == Cyclotomic(1));
  }
  // zeta_4 = i, zeta_3 + zeta_3^2 = -1
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(4) == Cyclotomic(-1));
  CHECK(Cyclotomic::zeta(3) + Cyclotomic::zeta(3, 2) == Cyclotomic(-1));
  // mixed conductors meet in the common field
  CHECK(Cyclotomic::zeta(4) * Cyclotomic::zeta(3) == Cyclotomic::zeta(12, 7));
  CHECK(Cyclotomic::zeta(6, 3) == Cyclotomic(-1));
}

TEST_CASE("cyclotomic phi and polynomials") {
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(7) == 6);
  CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long long>{1, 0, 1});
}

TEST_CASE("cyclotomic arithmetic against a floating oracle") {
  gen::Source s(5);
  for (int m : {3, 4, 5, 8, 12}) {
    for (int i = 0; i < 40; ++i) {
      Cyclotomic a = s.cyclotomic(m), b = s.cyclotomic(m), c = s.cyclotomic(m);
      CHECK(std::abs(approx(a * b) - approx(a) * approx(b)) < 1e-9);
      CHECK(std::abs(approx(a.conj()) - std::conj(approx(a))) < 1e-9);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("canonical form collapses to the rationals") {
  Cyclotomic z = Cyclotomic::zeta(8);
  Cyclotomic r = z * z.conj();
  CHECK(r.is_rational());
  CHECK(r.conductor() == 1);
  CHECK(Cyclotomic::zeta(8, 2) == Cyclotomic::zeta(4));
  CHECK(Cyclotomic::zeta(4).promoted(12) == Cyclotomic::zeta(4));
}
