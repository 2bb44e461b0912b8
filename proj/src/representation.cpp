#include "locpoly/representation.hpp"

#include <deque>
#include <map>
#include <optional>

#include "locpoly/catalog.hpp"

namespace locpoly {

namespace {

std::size_t order_of(const Group& g) {
  if (g.kind() != GroupKind::Finite) throw Error("representations need a finite group");
  return static_cast<std::size_t>(g.order());
}

std::size_t mul_index(const Group& g, std::size_t a, std::size_t b) {
  return static_cast<std::size_t>(g.table()[a][b]);
}

std::size_t inv_index(const Group& g, std::size_t a) {
  return static_cast<std::size_t>(g.inv(Point::at(static_cast<std::int64_t>(a))).index);
}

Mat scaled(const Mat& m, const Scalar& c) {
  Mat out = m;
  for (auto& row : out)
    for (auto& x : row) x *= c;
  return out;
}

Mat added(Mat a, const Mat& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
  return a;
}

Mat one_by_one(const Scalar& x) { return Mat{{x}}; }

int find_perm(const std::vector<std::vector<int>>& elts, const std::vector<int>& p) {
  for (std::size_t i = 0; i < elts.size(); ++i)
    if (elts[i] == p) return static_cast<int>(i);
  throw Error("permutation not in the group");
}

// Sum-zero subspace of the permutation representation, with basis
// e_i - e_last, for a permutation group in catalog order.
Representation standard_of_permutations(const std::string& name, const Group& g,
                                        const std::vector<std::vector<int>>& perms) {
  const std::size_t n = perms.front().size();
  Representation r{name, g, n - 1, {}};
  for (const auto& s : perms) {
    Mat m(n - 1, Vec(n - 1));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      // (e_i - e_last) maps to e_s(i) - e_s(last)
      Vec u(n);
      u[static_cast<std::size_t>(s[i])] += 1;
      u[static_cast<std::size_t>(s[n - 1])] -= 1;
      for (std::size_t k = 0; k + 1 < n; ++k) m[i][k] = u[k];
    }
    r.rho.push_back(std::move(m));
  }
  return r;
}

}  // namespace

Representation from_generators(std::string name, const Group& g, const std::vector<int>& gens,
                               const std::vector<Mat>& images) {
  const std::size_t n = order_of(g);
  if (gens.size() != images.size() || images.empty()) throw Error("generator images do not match the generators");
  const std::size_t d = images.front().size();
  std::vector<std::optional<Mat>> rho(n);
  std::size_t e = static_cast<std::size_t>(g.identity().index);
  rho[e] = identity_matrix(d);
  std::deque<std::size_t> todo{e};
  while (!todo.empty()) {
    std::size_t x = todo.front();
    todo.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t y = mul_index(g, x, static_cast<std::size_t>(gens[k]));
      Mat m = matmul(*rho[x], images[k]);
      if (!rho[y]) {
        rho[y] = std::move(m);
        todo.push_back(y);
      } else if (!(*rho[y] == m)) {
        throw Error("generator images for " + name + " violate a relation");
      }
    }
  }
  Representation r{std::move(name), g, d, {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (!rho[i]) throw Error("generators do not generate " + g.name());
    r.rho.push_back(std::move(*rho[i]));
  }
  return r;
}

Representation regular_representation(const Group& g) {
  const std::size_t n = order_of(g);
  Representation r{"regular", g, n, {}};
  // row convention: e_x rho(a) = e_{x a}
  for (std::size_t a = 0; a < n; ++a) {
    Mat m(n, Vec(n));
    for (std::size_t x = 0; x < n; ++x) m[x][mul_index(g, x, a)] = 1;
    r.rho.push_back(std::move(m));
  }
  return r;
}

std::vector<Representation> cyclic_characters(int n) {
  if (n < 1 || n > 24) throw Error("cyclic characters need 1 <= n <= 24");
  Group g = catalog_group("Z/" + std::to_string(n));
  std::vector<Representation> out;
  for (int j = 0; j < n; ++j) {
    Representation r{"chi" + std::to_string(j), g, 1, {}};
    for (int i = 0; i < n; ++i) r.rho.push_back(one_by_one(Scalar::zeta(n, static_cast<long long>(i) * j % n)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Representation> catalog_irreps(const std::string& name) {
  if (name.rfind("Z/", 0) == 0) {
    int n = std::stoi(name.substr(2));
    if (n > 12) throw Error("irreducible tables are shipped for Z/n with n <= 12");
    return cyclic_characters(n);
  }
  Group g = catalog_group(name);
  std::vector<Representation> out;
  if (name == "S3") {
    auto perms = catalog_permutations("S3");
    int t = find_perm(perms, {1, 0, 2}), c = find_perm(perms, {1, 2, 0});
    out.push_back(from_generators("trivial", g, {t, c}, {one_by_one(1), one_by_one(1)}));
    out.push_back(from_generators("sign", g, {t, c}, {one_by_one(-1), one_by_one(1)}));
    out.push_back(standard_of_permutations("standard", g, perms));
    return out;
  }
  if (name == "D4") {
    auto perms = catalog_permutations("D4");
    int r = find_perm(perms, {1, 2, 3, 0}), s = find_perm(perms, {0, 3, 2, 1});
    for (int a : {1, -1})
      for (int b : {1, -1})
        out.push_back(from_generators("chi(" + std::to_string(a) + "," + std::to_string(b) + ")", g, {r, s},
                                      {one_by_one(a), one_by_one(b)}));
    // vertex i of the square at angle i pi/2; rows are images of (1,0), (0,1)
    Mat rot{{0, 1}, {-1, 0}};
    Mat ref{{1, 0}, {0, -1}};
    out.push_back(from_generators("standard", g, {r, s}, {rot, ref}));
    return out;
  }
  if (name == "Q8") {
    for (int a : {1, -1})
      for (int b : {1, -1})
        out.push_back(from_generators("chi(" + std::to_string(a) + "," + std::to_string(b) + ")", g, {2, 4},
                                      {one_by_one(a), one_by_one(b)}));
    out.push_back(Representation{"quaternion", g, 2, quaternion_matrices()});
    return out;
  }
  throw Error("no irreducible table for " + name);
}

RepresentationReport verify_representation(const Representation& r) {
  RepresentationReport rep;
  const Group& g = r.group;
  const std::size_t n = order_of(g);
  if (r.rho.size() != n) {
    rep.homomorphism = false;
    rep.failures.push_back("expected " + std::to_string(n) + " matrices, got " + std::to_string(r.rho.size()));
    return rep;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool square = r.rho[i].size() == r.dim;
    for (const Vec& row : r.rho[i]) square = square && row.size() == r.dim;
    if (!square) {
      rep.homomorphism = false;
      rep.failures.push_back("matrix " + std::to_string(i) + " is not " + std::to_string(r.dim) + "x" + std::to_string(r.dim));
      return rep;
    }
  }
  std::size_t e = static_cast<std::size_t>(g.identity().index);
  if (!(r.rho[e] == identity_matrix(r.dim))) {
    rep.homomorphism = false;
    rep.failures.push_back("rho(e) is not the identity");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!(r.rho[mul_index(g, a, b)] == matmul(r.rho[a], r.rho[b]))) {
        rep.homomorphism = false;
        if (rep.failures.size() < 10)
          rep.failures.push_back("rho(" + std::to_string(a) + "*" + std::to_string(b) + ") != rho(" + std::to_string(a) +
                                 ") rho(" + std::to_string(b) + ")");
      }
  Scalar s;
  for (std::size_t u = 0; u < n; ++u) s += r.character(u) * r.character(inv_index(g, u));
  rep.norm = s / Scalar(static_cast<long long>(n));
  rep.irreducible = rep.homomorphism && rep.norm == Scalar(1);
  return rep;
}

SchurReport schur_orthogonality(const Representation& a, const Representation& b) {
  if (!(a.group == b.group)) throw Error("representations live on different groups");
  if (!verify_representation(a).irreducible) throw Error(a.name + " is not irreducible");
  if (!verify_representation(b).irreducible) throw Error(b.name + " is not irreducible");
  const Group& g = a.group;
  const std::size_t n = order_of(g);
  SchurReport rep;
  rep.equivalent = true;
  for (std::size_t u = 0; u < n && rep.equivalent; ++u) rep.equivalent = a.character(u) == b.character(u);
  const std::size_t da = a.dim, db = b.dim;
  rep.tensor.assign(da * da * db * db, Scalar(0));
  Scalar inv_n = Scalar(1) / Scalar(static_cast<long long>(n));
  auto at = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> Scalar& {
    return rep.tensor[((i * da + j) * db + k) * db + l];
  };
  for (std::size_t u = 0; u < n; ++u) {
    const Mat& x = a.rho[u];
    const Mat& y = b.rho[inv_index(g, u)];
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        if (x[i][j].is_zero()) continue;
        for (std::size_t k = 0; k < db; ++k)
          for (std::size_t l = 0; l < db; ++l) at(i, j, k, l) += x[i][j] * y[k][l];
      }
  }
  for (auto& v : rep.tensor) v *= inv_n;
  if (rep.equivalent && da == db) {
    rep.constant = at(0, 0, 0, 0);
    rep.pattern = true;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j)
        for (std::size_t k = 0; k < db; ++k)
          for (std::size_t l = 0; l < db; ++l) {
            Scalar want = (i == l && j == k) ? rep.constant : Scalar(0);
            rep.pattern = rep.pattern && at(i, j, k, l) == want;
          }
    rep.printed_constant = Scalar(static_cast<long long>(da));
  } else {
    rep.constant = Scalar(0);
    rep.pattern = true;
    for (const auto& v : rep.tensor) rep.pattern = rep.pattern && v.is_zero();
    rep.printed_constant = Scalar(0);
  }
  rep.agrees_with_printed = rep.pattern && rep.constant == rep.printed_constant;
  return rep;
}

Scalar idempotent_normalization(const Representation& r) {
  const Group& g = r.group;
  const std::size_t n = order_of(g);
  Representation reg = regular_representation(g);
  Mat raw(n, Vec(n));
  Scalar inv_n = Scalar(1) / Scalar(static_cast<long long>(n));
  for (std::size_t u = 0; u < n; ++u) raw = added(raw, scaled(reg.rho[u], r.character(inv_index(g, u)) * inv_n));
  // raw^2 = lambda raw, so (raw / lambda) is idempotent
  Mat sq = matmul(raw, raw);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!raw[i][j].is_zero()) {
        Scalar lambda = sq[i][j] / raw[i][j];
        if (!(sq == scaled(raw, lambda))) throw Error("character projector of " + r.name + " is not a multiple of an idempotent");
        return Scalar(1) / lambda;
      }
  throw Error("character projector of " + r.name + " vanishes on the regular representation");
}

}  // namespace locpoly
