#include "locpoly/isotypic.hpp"

#include <algorithm>
#include <map>

#include "locpoly/catalog.hpp"

namespace locpoly {

namespace {

constexpr std::size_t kMaxQuotient = 729;

std::size_t inv_index(const Group& q, std::size_t a) {
  return static_cast<std::size_t>(q.inv(Point::at(static_cast<std::int64_t>(a))).index);
}

Mat zero_matrix(std::size_t n) { return Mat(n, Vec(n)); }

void add_scaled(Mat& acc, const Mat& m, const Scalar& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    for (std::size_t j = 0; j < acc[i].size(); ++j)
      if (!m[i][j].is_zero()) acc[i][j] += c * m[i][j];
}

// The quotient of g0 matching r whose subgroup fixes every cell.
FiniteQuotient matching_quotient(const Action& a, const std::vector<Cell>& cells, const Representation& r,
                                 const Subgroup& g0) {
  const Group& g = a.group();
  auto s = stabilizing_subgroup(a, cells, g0);
  if (!s) throw Error("no level subgroup of " + describe_subgroup(g, g0) + " fixes the cells");
  const std::size_t want = static_cast<std::size_t>(r.group.order());
  std::vector<Subgroup> candidates{*s};
  std::int64_t lvl = subgroup_level(g, *s);
  if (lvl != kWholeLevel)
    for (std::int64_t k = 1; k <= 8; ++k) candidates.push_back(level_subgroup(g, g0, lvl + k));
  for (const Subgroup& g1 : candidates) {
    std::vector<Point> t = coset_transversal(g, g0, g1);
    if (t.size() > want) break;
    if (t.size() < want) continue;
    FiniteQuotient q = finite_quotient(g, g0, g1);
    if (q.group.table() == r.group.table()) return q;
    throw Error("quotient " + describe_subgroup(g, g0) + "/" + describe_subgroup(g, g1) + " does not match the table of " + r.name);
  }
  throw Error("no quotient of " + describe_subgroup(g, g0) + " has order " + std::to_string(want));
}

std::vector<Func> translates_of(const Action& a, const Func& f, const FiniteQuotient& q) {
  std::vector<Func> out;
  for (const Point& t : q.transversal) out.push_back(induced_act(a, t, f));
  return out;
}

void require_saturated(const Action& a, const Func& f, const Subgroup& g0) {
  Saturation sat = saturate(a, f.support(), g0);
  if (!sat.set) throw Error("support does not saturate: " + sat.diagnostic);
}

}  // namespace

std::size_t coset_index(const Group& g, const FiniteQuotient& q, const Point& u) {
  for (std::size_t k = 0; k < q.transversal.size(); ++k)
    if (subgroup_contains(g, q.g1, g.mul(g.inv(q.transversal[k]), u))) return k;
  throw Error(describe_point(g.space(), u) + " is not in " + describe_subgroup(g, q.g0));
}

FiniteQuotient finite_quotient(const Group& g, const Subgroup& g0, const Subgroup& g1) {
  std::vector<Point> t = coset_transversal(g, g0, g1);
  if (t.size() > kMaxQuotient) throw Error("quotient too large: " + std::to_string(t.size()));
  FiniteQuotient q{g0, g1, t, Group::finite("Z/1", {{0}})};
  const std::size_t n = t.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<int>(coset_index(g, q, g.mul(t[i], t[j])));
  // cosets multiply consistently only for a normal subgroup; check what can be enumerated
  if (g1.kind == SubgroupKind::FiniteSet)
    for (std::size_t i = 0; i < n; ++i)
      for (const Point& h : g1.elements)
        for (std::size_t j = 0; j < n; ++j)
          if (coset_index(g, q, g.mul(g.mul(t[i], h), t[j])) != static_cast<std::size_t>(table[i][j]))
            throw Error(describe_subgroup(g, g1) + " is not normal in " + describe_subgroup(g, g0));
  q.group = Group::finite(describe_subgroup(g, g0) + "/" + describe_subgroup(g, g1), std::move(table));
  return q;
}

FiniteQuotient quotient_for(const Action& a, const Func& f, const Representation& r, const Subgroup& g0) {
  return matching_quotient(a, f.support_cells(), r, g0);
}

MatrixComponents matrix_components(const Action& a, const Func& f, const Representation& r, const Subgroup& g0) {
  require_saturated(a, f, g0);
  MatrixComponents out{quotient_for(a, f, r, g0), {}};
  const FiniteQuotient& q = out.quotient;
  std::vector<Func> tr = translates_of(a, f, q);
  const std::size_t n = q.transversal.size();
  Scalar inv_n = Scalar(1) / Scalar(static_cast<long long>(n));
  out.f.assign(r.dim, std::vector<Func>(r.dim, Func(a.space())));
  for (std::size_t i = 0; i < r.dim; ++i)
    for (std::size_t j = 0; j < r.dim; ++j) {
      Vec c(n);
      for (std::size_t t = 0; t < n; ++t) c[t] = r.rho[inv_index(q.group, t)][i][j] * inv_n;
      out.f[i][j] = linear_combination(a.space(), tr, c);
    }
  return out;
}

Projection isotypic_projection(const Action& a, const Func& f, const Representation& r, const Subgroup& g0) {
  require_saturated(a, f, g0);
  FiniteQuotient q = quotient_for(a, f, r, g0);
  std::vector<Func> tr = translates_of(a, f, q);
  const std::size_t n = q.transversal.size();
  Projection out{Func(a.space()), Scalar(static_cast<long long>(r.dim)), Scalar(1) / Scalar(static_cast<long long>(r.dim)), false};
  out.printed_agrees = out.kappa == out.printed_kappa;
  Scalar scale = out.kappa / Scalar(static_cast<long long>(n));
  Vec c(n);
  for (std::size_t t = 0; t < n; ++t) c[t] = r.character(inv_index(q.group, t)) * scale;
  out.value = linear_combination(a.space(), tr, c);
  return out;
}

IsotypicDecomposition decompose_isotypic(const Action& a, const OpenSet& c, const Subgroup& g0,
                                         const std::vector<Representation>& irreps, std::int64_t level) {
  if (irreps.empty()) throw Error("no irreducible representations given");
  const Space& s = a.space();
  const Group& g = a.group();
  std::vector<Cell> family;
  for (const Cell& x : c.cells())
    for (Cell& y : cells_at_level(s, x, level)) family.push_back(std::move(y));
  std::sort(family.begin(), family.end());
  IsotypicDecomposition out{matching_quotient(a, family, irreps.front(), g0), family, {}, 0, {}, false, false, false, false, {}};
  const std::size_t m = out.family.size();
  std::map<Cell, std::size_t> where;
  for (std::size_t i = 0; i < m; ++i) where[out.family[i]] = i;

  const FiniteQuotient& q = out.quotient;
  const std::size_t n = q.transversal.size();
  for (const Representation& r : irreps) {
    if (!(r.group.table() == irreps.front().group.table())) throw Error("irreducible tables live on different groups");
    if (!verify_representation(r).irreducible) throw Error(r.name + " is not irreducible");
  }

  // pi(t) 1_d = 1_{d.t^-1}
  for (const Point& t : q.transversal) {
    Cell tinv = point_cell(g.space(), g.inv(t));
    Mat p = zero_matrix(m);
    for (std::size_t d = 0; d < m; ++d) {
      if (a.cover(out.family[d], tinv) != Tri::All) throw Error("the working space is not carried onto itself");
      auto it = where.find(a.image(out.family[d], tinv));
      if (it == where.end()) throw Error("translate of " + describe_cell(s, out.family[d]) + " leaves the working family");
      p[it->second][d] = 1;
    }
    out.pi.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(matmul(out.pi[i], out.pi[j]) == out.pi[static_cast<std::size_t>(q.group.table()[i][j])]))
        out.failures.push_back("pi is not a representation of the quotient at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  std::vector<bool> seen(m, false);
  for (std::size_t d = 0; d < m; ++d) {
    if (seen[d]) continue;
    ++out.orbits;
    for (const Mat& p : out.pi)
      for (std::size_t e = 0; e < m; ++e)
        if (!p[e][d].is_zero()) seen[e] = true;
  }

  Mat total = zero_matrix(m);
  Scalar inv_n = Scalar(1) / Scalar(static_cast<long long>(n));
  for (const Representation& r : irreps) {
    IsotypicComponent comp;
    comp.name = r.name;
    comp.dim = r.dim;
    Scalar kappa(static_cast<long long>(r.dim));
    if (!(idempotent_normalization(r) == kappa)) out.failures.push_back("normalization of " + r.name + " is not its dimension");
    comp.projector = zero_matrix(m);
    for (std::size_t t = 0; t < n; ++t) add_scaled(comp.projector, out.pi[t], kappa * inv_n * r.character(inv_index(q.group, t)));
    Scalar tr = trace(comp.projector) / kappa;
    if (!tr.is_rational() || !tr.rational().is_integer() || tr.rational().sign() < 0)
      out.failures.push_back("multiplicity of " + r.name + " is not a nonnegative integer: " + tr.str());
    else
      comp.multiplicity = tr.rational();
    comp.bound = out.orbits * r.dim;
    for (std::size_t d = 0; d < m; ++d) {
      std::vector<Func::Term> terms;
      for (std::size_t e = 0; e < m; ++e)
        if (!comp.projector[e][d].is_zero()) terms.push_back({out.family[e], comp.projector[e][d]});
      comp.images.push_back(Func::from_disjoint(s, std::move(terms)));
    }
    add_scaled(total, comp.projector, 1);
    out.components.push_back(std::move(comp));
  }
  out.complete = total == identity_matrix(m);
  if (!out.complete) {
    Mat diff = total;
    add_scaled(diff, identity_matrix(m), -1);
    out.failures.push_back("projectors do not sum to the identity: rank deficit " + std::to_string(rank(diff)));
  }
  out.idempotent = out.orthogonal = out.commuting = true;
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const Mat& p = out.components[i].projector;
    out.idempotent = out.idempotent && matmul(p, p) == p;
    for (std::size_t j = 0; j < out.components.size(); ++j)
      if (i != j) out.orthogonal = out.orthogonal && matmul(p, out.components[j].projector) == zero_matrix(m);
    for (const Mat& t : out.pi) out.commuting = out.commuting && matmul(p, t) == matmul(t, p);
  }
  if (!out.idempotent) out.failures.push_back("a projector is not idempotent");
  if (!out.orthogonal) out.failures.push_back("projectors of different components do not annihilate");
  if (!out.commuting) out.failures.push_back("a projector does not commute with the action");
  return out;
}

std::optional<std::vector<Representation>> quotient_irreps(const FiniteQuotient& q) {
  const int n = static_cast<int>(q.transversal.size());
  if (n <= 24 && q.group.table() == cyclic_table(n)) return cyclic_characters(n);
  for (const char* name : {"S3", "D4", "Q8"}) {
    Group c = catalog_group(name);
    if (c.order() == n && c.table() == q.group.table()) return catalog_irreps(name);
  }
  return std::nullopt;
}

}  // namespace locpoly
