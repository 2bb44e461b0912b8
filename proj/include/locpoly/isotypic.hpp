#ifndef LOCPOLY_ISOTYPIC_HPP
#define LOCPOLY_ISOTYPIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "locpoly/polynomial.hpp"
#include "locpoly/representation.hpp"

namespace locpoly {

// G0/G1 as a finite group: element i is the coset transversal[i] G1.
struct FiniteQuotient {
  Subgroup g0;
  Subgroup g1;
  std::vector<Point> transversal;
  Group group;
};
FiniteQuotient finite_quotient(const Group& g, const Subgroup& g0, const Subgroup& g1);
// Index of the coset containing u, for u in G0.
std::size_t coset_index(const Group& g, const FiniteQuotient& q, const Point& u);

// Quotient of g0 on which r lives and whose subgroup fixes the support of f:
// the first level below the stabilizing level with the right table.
FiniteQuotient quotient_for(const Action& a, const Func& f, const Representation& r, const Subgroup& g0);

// f_ij(x) = (1/|Q|) sum_t (t.f)(x) r_ij(t^-1) over the quotient transversal.
struct MatrixComponents {
  FiniteQuotient quotient;
  std::vector<std::vector<Func>> f;  // f[i][j]
};
MatrixComponents matrix_components(const Action& a, const Func& f, const Representation& r, const Subgroup& g0);

struct Projection {
  Func value;
  Scalar kappa;        // adopted constant: n_gamma
  Scalar printed_kappa;  // printed constant: 1/n_gamma
  bool printed_agrees = false;
};
// kappa (1/|Q|) sum_t (t.f) chi(t^-1).
Projection isotypic_projection(const Action& a, const Func& f, const Representation& r, const Subgroup& g0);

struct IsotypicComponent {
  std::string name;
  std::size_t dim = 0;
  Mat projector;              // on the working family, column convention
  Rational multiplicity;      // trace / dim
  std::size_t bound = 0;      // orbits x dim
  std::vector<Func> images;   // projections of the family
};
struct IsotypicDecomposition {
  FiniteQuotient quotient;
  std::vector<Cell> family;   // cells whose indicators span the working space
  std::vector<Mat> pi;        // pi(t) on the family
  std::size_t orbits = 0;
  std::vector<IsotypicComponent> components;
  bool complete = false;      // sum of projectors is the identity
  bool idempotent = false;
  bool orthogonal = false;    // P_a P_b = 0 for a != b
  bool commuting = false;     // P pi(t) = pi(t) P
  std::vector<std::string> failures;
};
// Working space: indicators of the cells of c at the given level.
IsotypicDecomposition decompose_isotypic(const Action& a, const OpenSet& c, const Subgroup& g0,
                                         const std::vector<Representation>& irreps, std::int64_t level);

// Irreducible tables matching the quotient's table, when it is cyclic or a
// catalog group with a shipped table.
std::optional<std::vector<Representation>> quotient_irreps(const FiniteQuotient& q);

}  // namespace locpoly

#endif
