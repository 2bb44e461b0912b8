#ifndef LOCPOLY_ALGEBRA_HPP
#define LOCPOLY_ALGEBRA_HPP

#include <optional>
#include <string>
#include <utility>

#include "locpoly/polynomial.hpp"

namespace locpoly {

// Convolution on a group with its left Haar measure (counting measure on
// discrete groups) and modular function mu(S g) = delta(g) mu(S).
struct ConvolutionContext {
  Group group;
  Rational haar(const Cell& c) const { return group.haar(c); }
  Rational modular(const Point& p) const { return group.modular(p); }
};

// 1_a * 1_b, exactly.
Func convolve_cells(const Group& g, const Cell& a, const Cell& b);
// (f*g)(p) = int f(q) g(q^-1 p) dq.
Func convolve(const ConvolutionContext& ctx, const Func& f, const Func& g);
// f*(p) = delta(p)^-1 conj f(p^-1).
Func convolution_star(const ConvolutionContext& ctx, const Func& f);
// p -> f(p^-1).
Func invert_argument(const Group& g, const Func& f);

// p -> (1/mu(G0)) int_G0 f(p h) phi(h) dh.
Func average_over_subgroup(const ConvolutionContext& ctx, const Func& f, const Subgroup& g0, const Func& phi);

struct LocalUnit {
  Func left;           // left * f = f
  Func right;          // f * right = f
  Subgroup left_g0;    // left is the normalized indicator of this subgroup
  Subgroup right_g0;
  PolynomialCertificate certificate;  // f under right translation
};
// Throws when f has no certificate under right translation.
LocalUnit local_unit(const ConvolutionContext& ctx, const Func& f);

struct EigenReport {
  bool applicable = false;   // f * xi == xi
  std::optional<PolynomialCertificate> certificate;
  bool holds() const { return !applicable || certificate.has_value(); }
};
EigenReport eigen_polynomial_check(const ConvolutionContext& ctx, const Func& f, const Func& xi);

// Polynomial for right translation on the group, canonical chain deep
// enough for the finest cell of f.
PolynomialResult group_polynomial(const Group& g, const Func& f);

}  // namespace locpoly

#endif
