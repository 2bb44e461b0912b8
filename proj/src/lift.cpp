#include "locpoly/lift.hpp"

#include <algorithm>

namespace locpoly {

namespace {

std::vector<Cell> supports_of(const std::vector<Func>& fs) {
  std::vector<Cell> out;
  for (const Func& f : fs)
    for (const Cell& c : f.support_cells()) out.push_back(c);
  return out;
}

// Every support cell has a local homeomorphism witness at its representative.
bool witnesses(const Action& a, const Func& f, std::string* why) {
  for (const Cell& c : f.support_cells()) {
    Point x = representative(a.space(), c);
    LocalHomeoResult w = locally_homeomorphic_witness(a, x);
    if (!w.witness) {
      *why = "not locally homeomorphic at " + describe_point(a.space(), x) + ": " + w.diagnostic;
      return false;
    }
  }
  return true;
}

}  // namespace

PolynomialResult subgroup_polynomiality(const Action& a, const Subgroup& h, const Func& f) {
  const Group& g = a.group();
  std::vector<Subgroup> chain;
  for (const Subgroup& g0 : canonical_chain(g)) {
    Subgroup x = subgroup_intersection(g, g0, h);
    if (std::find(chain.begin(), chain.end(), x) == chain.end()) chain.push_back(x);
  }
  return is_polynomial(Action::restrict_subgroup(a, h), f, chain);
}

LiftResult lift_subgroup_polynomiality(const Action& a, const Subgroup& h, const Func& f) {
  const Group& g = a.group();
  LiftResult out;
  Action ah = Action::restrict_subgroup(a, h);
  std::string why;
  if (!witnesses(ah, f, &why)) {
    out.diagnostic = "restriction to " + describe_subgroup(g, h) + " is " + why;
    return out;
  }
  PolynomialResult ph = subgroup_polynomiality(a, h, f);
  if (!ph.certificate) {
    out.diagnostic = "f is not certified polynomial for " + describe_subgroup(g, h);
    return out;
  }
  out.subgroup_certificate = ph.certificate;
  const OpenSet& c = ph.certificate->c;

  // An open subgroup G0 with C.G0 = C.
  std::vector<Subgroup> chain = canonical_chain(g);
  std::size_t at = chain.size();
  for (std::size_t i = 0; i < chain.size() && at == chain.size(); ++i) {
    if (!is_compact_open(g, chain[i])) continue;
    Saturation sat = saturate(a, c, chain[i]);
    if (sat.set && *sat.set == c) at = i;
  }
  if (at == chain.size()) {
    out.diagnostic = "no compact open subgroup of the chain carries " + c.describe() + " onto itself";
    return out;
  }
  out.g0 = chain[at];

  // Isotypic parts of f over G0; finitely many are nonzero.
  if (auto g1 = stabilizing_subgroup(a, f.support_cells(), *out.g0)) {
    FiniteQuotient q = finite_quotient(g, *out.g0, *g1);
    if (auto irreps = quotient_irreps(q)) {
      Func sum(a.space());
      for (const Representation& r : *irreps) {
        Projection p = isotypic_projection(a, f, r, *out.g0);
        if (!p.value.is_zero()) ++out.components;
        sum = sum + p.value;
      }
      out.notes.push_back(std::to_string(out.components) + " of " + std::to_string(irreps->size()) +
                          " isotypic parts are nonzero" + (sum == f ? "" : "; they do not sum to f"));
    } else {
      out.notes.push_back("no irreducible table for " + q.group.name());
    }
  }

  std::vector<Subgroup> rest(chain.begin() + static_cast<std::ptrdiff_t>(at), chain.end());
  PolynomialResult pg = is_polynomial(a, f, rest);
  if (!pg.certificate) {
    out.diagnostic = "no certificate below " + describe_subgroup(g, *out.g0);
    return out;
  }
  ValidationReport vr = validate_certificate(a, f, *pg.certificate);
  if (!vr.ok) {
    out.diagnostic = "certificate fails validation: " + vr.failures.front();
    return out;
  }
  out.certificate = pg.certificate;
  return out;
}

PolynomialCertificate joint_polynomiality(const Action& product, const Func& f, const PolynomialCertificate& first,
                                          const PolynomialCertificate& second) {
  if (product.kind() != ActionKind::CommutingProduct) throw Error("joint polynomiality needs a commuting product");
  const Action& ah = product.base();
  const Action& ak = product.second_factor();
  ValidationReport vh = validate_certificate(ah, f, first);
  if (!vh.ok) throw Error("first certificate is stale: " + vh.failures.front());
  ValidationReport vk = validate_certificate(ak, f, second);
  if (!vk.ok) throw Error("second certificate is stale: " + vk.failures.front());

  const Group& pg = product.group();
  const Space& s = product.space();
  Subgroup g0 = Subgroup::product(first.g0, second.g0);

  // span{v.f'_j}: f'_j spans the first factor's translates, v runs over the
  // second factor's transversal
  std::vector<Func> family{f};
  for (const Func& fj : first.basis)
    for (const Point& v : second.transversal) family.push_back(induced_act(ak, v, fj));
  auto g1 = stabilizing_subgroup(product, supports_of(family), g0);
  if (!g1) throw Error("no level subgroup fixes the joint span");
  std::vector<Point> transversal = coset_transversal(pg, g0, *g1);
  std::vector<Func> translates;
  for (const Point& t : transversal) translates.push_back(induced_act(product, t, f));

  std::vector<Func> all = family;
  all.insert(all.end(), translates.begin(), translates.end());
  std::vector<Cell> grid = common_grid(s, all);
  Mat rows;
  for (const Func& x : family) rows.push_back(values_on(x, grid));
  std::vector<Func> basis;
  RowBasis rb(grid.size());
  for (std::size_t i : independent_rows(rows)) {
    rb.add(rows[i]);
    basis.push_back(family[i]);
  }
  std::vector<Vec> coords;
  for (std::size_t t = 0; t < transversal.size(); ++t) {
    auto c = rb.express(values_on(translates[t], grid));
    if (!c) throw Error("translate by " + describe_point(pg.space(), transversal[t]) + " leaves the joint span");
    coords.push_back(*c);
  }
  Saturation sat = saturate(product, OpenSet::of(s, supports_of(basis)), g0);
  if (!sat.set) throw Error("joint span does not saturate: " + sat.diagnostic);
  PolynomialCertificate cert{g0, *g1, *sat.set, basis, transversal, coords, *rb.express(rows[0])};
  ValidationReport vr = validate_certificate(product, f, cert);
  if (!vr.ok) throw Error("joint certificate fails validation: " + vr.failures.front());
  return cert;
}

CommutingLeftReport commuting_left_polynomiality(const Action& product, const Func& f) {
  if (product.kind() != ActionKind::CommutingProduct) throw Error("needs a commuting product");
  const Action& ak = product.second_factor();
  CommutingLeftReport out;
  std::string why;
  if (!witnesses(ak, f, &why)) {
    out.diagnostic = "right factor is " + why;
    return out;
  }
  PolynomialResult pk = is_polynomial(ak, f);
  if (!pk.certificate) {
    out.diagnostic = "f is not certified polynomial for the right factor";
    return out;
  }
  out.right = pk.certificate;
  out.hypothesis = true;
  PolynomialResult ph = is_polynomial(product.base(), f);
  if (ph.certificate && validate_certificate(product.base(), f, *ph.certificate).ok) out.left = ph.certificate;
  else out.diagnostic = "no certificate for the left factor";
  return out;
}

}  // namespace locpoly
