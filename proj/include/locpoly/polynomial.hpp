#ifndef LOCPOLY_POLYNOMIAL_HPP
#define LOCPOLY_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "locpoly/vf.hpp"

namespace locpoly {

constexpr std::size_t kSaturationBound = 4096;

struct Saturation {
  std::optional<OpenSet> set;  // C with C.G0 = C, when it exists
  Subgroup g1;                 // subgroup fixing every cell of C
  std::vector<Point> transversal;
  std::string diagnostic;
};

// Smallest union of cells containing s that is carried onto itself by g0.
Saturation saturate(const Action& a, const OpenSet& s, const Subgroup& g0, std::size_t bound = kSaturationBound);

// Level subgroup of g0 fixing each of the given cells under the action, if
// one exists within a few levels of the cells.
std::optional<Subgroup> stabilizing_subgroup(const Action& a, const std::vector<Cell>& cells, const Subgroup& g0);

struct TranslateSpan {
  Subgroup g1;
  std::vector<Point> transversal;  // G0/G1
  std::vector<Func> translates;    // t.f for t in the transversal
  std::vector<Func> basis;         // independent translates, sorted
  std::vector<Vec> coords;         // coords[t] expresses translates[t] in the basis
};

// Basis of span{u.f : u in G0}.  Throws when G0 is not inside V_f or f has no
// stabilizing level.
TranslateSpan translate_span(const Action& a, const Func& f, const Subgroup& g0);

struct PolynomialCertificate {
  Subgroup g0;
  Subgroup g1;
  OpenSet c;
  std::vector<Func> basis;
  std::vector<Point> transversal;
  std::vector<Vec> coords;  // per transversal element
  Vec f_coords;             // f itself in the basis
  std::size_t dim() const { return basis.size(); }
};

struct PolynomialResult {
  std::optional<PolynomialCertificate> certificate;
  std::vector<std::string> attempts;  // one line per subgroup tried
};

PolynomialResult is_polynomial(const Action& a, const Func& f, const std::vector<Subgroup>& chain);
// Shorthand with the group's canonical chain.
PolynomialResult is_polynomial(const Action& a, const Func& f);

// Re-derives the certificate's claims by point evaluation: supports inside C,
// C.G0 = C on a finer grid, every translate over a deeper transversal lies in
// the span with coordinates solved afresh.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  std::size_t points = 0;
  std::size_t elements = 0;
};
ValidationReport validate_certificate(const Action& a, const Func& f, const PolynomialCertificate& cert);

struct DualPoints {
  std::vector<Point> points;
  Mat coeffs;  // sum_j coeffs[j][k] f_i(points[j]) = delta_ik
};
DualPoints dual_points(const std::vector<Func>& basis);

struct CoefficientFunctions {
  std::vector<Func> basis;
  std::vector<Func> phi;  // functions on the group supported in G0
};
CoefficientFunctions coefficient_functions(const Action& a, const Func& f, const PolynomialCertificate& cert);

struct ClosedSystem {
  std::vector<Point> transversal;
  std::vector<Mat> psi;  // u.f_j = sum_i psi[u][i][j] f_i
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
ClosedSystem closed_system(const Action& a, const PolynomialCertificate& cert);

// Indicator of the saturation of c: a polynomial equal to 1 on c.
Func build_plateau(const Action& a, const OpenSet& c, const Subgroup& g0);

}  // namespace locpoly

#endif
