#ifndef LOCPOLY_CATALOG_HPP
#define LOCPOLY_CATALOG_HPP

#include <string>
#include <vector>

#include "locpoly/group.hpp"
#include "locpoly/linalg.hpp"

namespace locpoly {

// Small finite groups by name: "Z/n" (1 <= n <= 24), "Z2xZ2", "Z3xZ3",
// "Z2xZ4", "S3", "D4", "Q8", "S4", "D6".
Group catalog_group(const std::string& name);
std::vector<std::string> catalog_group_names();

// Sorted closure of a set of permutations (identity first).
std::vector<std::vector<int>> permutation_closure(const std::vector<std::vector<int>>& gens);
// Element i of the named permutation group is closure[i].
std::vector<std::vector<int>> catalog_permutations(const std::string& name);
// Q8 as 2x2 matrices over Q(i), in element order.
std::vector<Mat> quaternion_matrices();

std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> direct_product_table(const std::vector<std::vector<int>>& a,
                                                   const std::vector<std::vector<int>>& b);

}  // namespace locpoly

#endif
