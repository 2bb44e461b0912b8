#include "locpoly/rational.hpp"

#include <limits>
#include <numeric>

namespace locpoly {

using boost::multiprecision::cpp_rational;

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) -> BigInt {
    if (part.empty()) throw SchemaError("empty integer in rational '" + s + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw SchemaError("bad rational '" + s + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw SchemaError("bad rational '" + s + "'");
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return Rational(parse_int(s), BigInt(1));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw SchemaError("zero denominator in '" + s + "'");
  BigInt num = parse_int(s.substr(0, slash));
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

BigInt Rational::num() const { return boost::multiprecision::numerator(v_); }
BigInt Rational::den() const { return boost::multiprecision::denominator(v_); }

bool Rational::is_integer() const { return den() == 1; }

long long Rational::to_int() const {
  if (!is_integer()) throw Error("rational " + str() + " is not an integer");
  BigInt n = num();
  if (n > BigInt(std::numeric_limits<long long>::max()) ||
      n < BigInt(std::numeric_limits<long long>::min()))
    throw Error("integer " + str() + " out of range");
  return n.convert_to<long long>();
}

Rational Rational::floor() const {
  BigInt n = num(), d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return Rational(q, BigInt(1));
}

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

std::string Rational::fraction_str() const { return num().str() + "/" + den().str(); }

Rational Rational::operator-() const { return Rational(cpp_rational(-v_)); }
Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.v_ < b.v_) return std::strong_ordering::less;
  if (b.v_ < a.v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational power(long long p, long long k) {
  BigInt b = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(k < 0 ? -k : k));
  return k >= 0 ? Rational(b, BigInt(1)) : Rational(BigInt(1), b);
}

namespace {
long long int_valuation(BigInt n, long long p) {
  long long v = 0;
  BigInt bp(p);
  while (n % bp == 0) {
    n /= bp;
    ++v;
  }
  return v;
}
}  // namespace

long long valuation(const Rational& x, long long p) {
  if (x.is_zero()) return kInfiniteValuation;
  return int_valuation(x.num(), p) - int_valuation(x.den(), p);
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

}  // namespace locpoly
