#ifndef LOCPOLY_REPRESENTATION_HPP
#define LOCPOLY_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "locpoly/group.hpp"
#include "locpoly/linalg.hpp"

namespace locpoly {

// Matrix representation of a finite group, rho[i] for element i.  Products
// follow the group table: rho(a*b) = rho(a) rho(b).
struct Representation {
  std::string name;
  Group group;
  std::size_t dim = 0;
  std::vector<Mat> rho;

  Scalar character(std::size_t i) const { return trace(rho.at(i)); }
};

// Extends generator images along the group table.  Throws when the images
// are inconsistent with the relations.
Representation from_generators(std::string name, const Group& g, const std::vector<int>& gens,
                               const std::vector<Mat>& images);

Representation regular_representation(const Group& g);

// Irreducible tables for the catalog groups Z/n (n <= 12), S3, D4 and Q8,
// for the element order of catalog_group().
std::vector<Representation> cyclic_characters(int n);
std::vector<Representation> catalog_irreps(const std::string& group_name);

struct RepresentationReport {
  bool homomorphism = true;
  bool irreducible = false;
  Scalar norm;  // (1/|G|) sum chi(u) chi(u^-1)
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
RepresentationReport verify_representation(const Representation& r);

// (1/|G|) sum_u a_ij(u) b_kl(u^-1), indexed [i][j][k][l] flattened.
struct SchurReport {
  bool equivalent = false;
  Scalar constant;         // measured c in c delta_il delta_jk
  bool pattern = false;    // the tensor has the stated shape
  Scalar printed_constant;   // the printed constant n_gamma
  bool agrees_with_printed = false;
  std::vector<Scalar> tensor;
};
SchurReport schur_orthogonality(const Representation& a, const Representation& b);

// The constant k making k (1/|G|) sum chi(u^-1) rho_reg(u) idempotent, found
// on the regular representation.
Scalar idempotent_normalization(const Representation& r);

}  // namespace locpoly

#endif
