#include "locpoly/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace locpoly {

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  // (a*b)(i) = b(a(i)): apply a first, matching right actions.
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

std::vector<std::vector<int>> table_of(const std::vector<Perm>& elts) {
  std::map<Perm, int> index;
  for (std::size_t i = 0; i < elts.size(); ++i) index[elts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> t(elts.size(), std::vector<int>(elts.size()));
  for (std::size_t i = 0; i < elts.size(); ++i)
    for (std::size_t j = 0; j < elts.size(); ++j) t[i][j] = index.at(compose(elts[i], elts[j]));
  return t;
}

Perm cycle(int n, int shift) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + shift) % n;
  return p;
}

Perm reflection(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (n - i) % n;
  return p;
}

std::vector<Perm> generators(const std::string& name) {
  if (name == "S3") return {{1, 0, 2}, {1, 2, 0}};
  if (name == "S4") return {{1, 0, 2, 3}, {1, 2, 3, 0}};
  if (name == "D4") return {cycle(4, 1), reflection(4)};
  if (name == "D6") return {cycle(6, 1), reflection(6)};
  throw Error("no permutation model for " + name);
}

}  // namespace

std::vector<std::vector<int>> permutation_closure(const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw Error("permutation closure needs generators");
  Perm id(gens[0].size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> catalog_permutations(const std::string& name) { return permutation_closure(generators(name)); }

std::vector<Mat> quaternion_matrices() {
  Scalar i = Scalar::zeta(4, 1);
  Mat one{{1, 0}, {0, 1}};
  Mat qi{{i, 0}, {0, -i}};
  Mat qj{{0, 1}, {-1, 0}};
  Mat qk = matmul(qi, qj);
  auto neg = [](Mat m) {
    for (auto& row : m)
      for (auto& x : row) x = -x;
    return m;
  };
  return {one, neg(one), qi, neg(qi), qj, neg(qj), qk, neg(qk)};
}

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return t;
}

std::vector<std::vector<int>> direct_product_table(const std::vector<std::vector<int>>& a,
                                                   const std::vector<std::vector<int>>& b) {
  std::size_t na = a.size(), nb = b.size();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
  for (std::size_t x = 0; x < na * nb; ++x)
    for (std::size_t y = 0; y < na * nb; ++y)
      t[x][y] = a[x / nb][y / nb] * static_cast<int>(nb) + b[x % nb][y % nb];
  return t;
}

Group catalog_group(const std::string& name) {
  if (name.rfind("Z/", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(2));
    } catch (const std::exception&) {
      throw SchemaError("bad cyclic group name " + name);
    }
    if (n < 1 || n > 24) throw SchemaError("cyclic group order out of range: " + name);
    return Group::finite(name, cyclic_table(n));
  }
  if (name == "Z2xZ2") return Group::finite(name, direct_product_table(cyclic_table(2), cyclic_table(2)));
  if (name == "Z3xZ3") return Group::finite(name, direct_product_table(cyclic_table(3), cyclic_table(3)));
  if (name == "Z2xZ4") return Group::finite(name, direct_product_table(cyclic_table(2), cyclic_table(4)));
  if (name == "Q8") {
    std::vector<Mat> m = quaternion_matrices();
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (std::size_t a = 0; a < 8; ++a)
      for (std::size_t b = 0; b < 8; ++b) {
        Mat c = matmul(m[a], m[b]);
        auto it = std::find(m.begin(), m.end(), c);
        t[a][b] = static_cast<int>(it - m.begin());
      }
    return Group::finite(name, std::move(t));
  }
  if (name == "S3" || name == "S4" || name == "D4" || name == "D6")
    return Group::finite(name, table_of(catalog_permutations(name)));
  throw SchemaError("unknown finite group " + name);
}

std::vector<std::string> catalog_group_names() {
  std::vector<std::string> out;
  for (int n = 1; n <= 12; ++n) out.push_back("Z/" + std::to_string(n));
  for (const char* s : {"Z2xZ2", "S3", "D4", "Q8", "S4", "D6", "Z3xZ3", "Z2xZ4"}) out.push_back(s);
  return out;
}

}  // namespace locpoly
