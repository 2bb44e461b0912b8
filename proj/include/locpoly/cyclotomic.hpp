#ifndef LOCPOLY_CYCLOTOMIC_HPP
#define LOCPOLY_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "locpoly/rational.hpp"

namespace locpoly {

int euler_phi(int m);

// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<long long>& cyclotomic_polynomial(int m);

// Element of Q(zeta_m) stored as a residue modulo Phi_m in the power basis
// 1, x, ..., x^(phi(m)-1).  Results of arithmetic collapse to conductor 1
// whenever the value is rational, so rationals have a single representation.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_{Rational(0)} {}
  Cyclotomic(const Rational& r) : m_(1), c_{r} {}  // NOLINT(implicit)
  Cyclotomic(long long n) : m_(1), c_{Rational(n)} {}  // NOLINT(implicit)

  static Cyclotomic from_coeffs(int m, std::vector<Rational> coeffs);
  // zeta_m^k
  static Cyclotomic zeta(int m, long long k = 1);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return m_ == 1; }
  const Rational& rational() const;

  // Same value expressed in Q(zeta_M); requires m | M.
  Cyclotomic promoted(int M) const;

  Cyclotomic conj() const;
  Cyclotomic inverse() const;

  std::string str() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int m, std::vector<Rational> c) : m_(m), c_(std::move(c)) {}
  void collapse();

  int m_;
  std::vector<Rational> c_;
};

using Scalar = Cyclotomic;

// Conductors above this bound are refused rather than silently expanded.
constexpr int kMaxConductor = 5040;

}  // namespace locpoly

#endif
