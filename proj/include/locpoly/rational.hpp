#ifndef LOCPOLY_RATIONAL_HPP
#define LOCPOLY_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace locpoly {

using BigInt = boost::multiprecision::cpp_int;

// Library errors.  SchemaError is raised for malformed external input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SchemaError : Error {
  using Error::Error;
};

class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(n) {}  // NOLINT(implicit)
  Rational(const BigInt& num, const BigInt& den);

  static Rational parse(std::string_view text);

  BigInt num() const;
  BigInt den() const;

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const;
  int sign() const { return v_.sign(); }

  // Exact conversions; throw when the value does not fit.
  long long to_int() const;

  Rational floor() const;

  // "p" for integers, "p/q" otherwise.
  std::string str() const;
  // Always "p/q".
  std::string fraction_str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
  boost::multiprecision::cpp_rational v_;
};

// p^k for any integer k.
Rational power(long long p, long long k);

// p-adic valuation; zero has valuation kInfiniteValuation.
constexpr long long kInfiniteValuation = (1LL << 40);
long long valuation(const Rational& x, long long p);

// Integer helpers.
bool is_prime(long long p);
long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace locpoly

#endif
