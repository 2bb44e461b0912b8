#ifndef LOCPOLY_LIFT_HPP
#define LOCPOLY_LIFT_HPP

#include <optional>
#include <string>
#include <vector>

#include "locpoly/isotypic.hpp"

namespace locpoly {

// Search for f polynomial under the restriction of a to the subgroup h,
// using chain members intersected with h.
PolynomialResult subgroup_polynomiality(const Action& a, const Subgroup& h, const Func& f);

struct LiftResult {
  std::optional<PolynomialCertificate> certificate;  // for the whole group
  std::optional<PolynomialCertificate> subgroup_certificate;
  std::optional<Subgroup> g0;
  std::size_t components = 0;  // nonzero isotypic parts of f over the quotient, when a table is known
  std::vector<std::string> notes;
  std::string diagnostic;      // reason for declining
};

// Polynomial for the restriction to h, and that restriction locally
// homeomorphic on the support: then polynomial for the whole group.
LiftResult lift_subgroup_polynomiality(const Action& a, const Subgroup& h, const Func& f);

// Certificate for the commuting product built from the two factor
// certificates: span{v.f'_j} with f'_j from the first factor and v over the
// second factor's transversal.  Throws when a factor certificate is stale.
PolynomialCertificate joint_polynomiality(const Action& product, const Func& f, const PolynomialCertificate& first,
                                          const PolynomialCertificate& second);

// Right factor locally homeomorphic on supp f and f polynomial for it: then
// f is polynomial for the commuting left factor.
struct CommutingLeftReport {
  bool hypothesis = false;  // witnesses found and f certified for the right factor
  std::optional<PolynomialCertificate> right;
  std::optional<PolynomialCertificate> left;
  std::string diagnostic;
  bool ok() const { return !hypothesis || left.has_value(); }
};
CommutingLeftReport commuting_left_polynomiality(const Action& product, const Func& f);

}  // namespace locpoly

#endif
