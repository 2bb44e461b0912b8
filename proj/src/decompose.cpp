#include "locpoly/decompose.hpp"

#include <algorithm>

namespace locpoly {

namespace {

// A subgroup fixing every support cell of f, from the canonical chain.
Subgroup support_stabilizer(const Action& a, const Func& f) {
  const Group& g = a.group();
  for (const Subgroup& g0 : canonical_chain(g)) {
    if (!is_compact_open(g, g0)) continue;
    if (auto g1 = stabilizing_subgroup(a, f.support_cells(), g0)) return *g1;
  }
  throw Error("no compact open subgroup fixes the support cells of " + f.describe());
}

// Pieces of a cell, each inside a single left coset of g1.
void coset_pieces(const Group& g, const Subgroup& g1, const Cell& q, int depth, std::vector<Cell>& out) {
  const Space& s = g.space();
  Point r = representative(s, q);
  for (const Cell& c : coset_cells(g, r, g1))
    if (subset(s, q, c)) {
      out.push_back(q);
      return;
    }
  if (depth <= 0 || !refinable(s, q)) throw Error("cannot fit " + describe_cell(s, q) + " into a coset");
  for (const Cell& c : split(s, q)) coset_pieces(g, g1, c, depth - 1, out);
}

std::vector<Cell> pieces_of(const Group& g, const Subgroup& g1, const Func& phi) {
  std::vector<Cell> out;
  for (const Cell& c : phi.support_cells()) coset_pieces(g, g1, c, 24, out);
  return out;
}

void require_inside_Vf(const Action& a, const Func& f, const Func& g) {
  VfSet vf = compute_Vf(a, f);
  for (const Cell& c : g.support_cells())
    if (vf.set.classify(c) != Tri::All)
      throw Error("support of g is not inside V_f: " + describe_cell(a.group().space(), c) + " vs " + vf.describe());
}

bool same_values(const Space& s, const Func& x, const Func& y, std::size_t* cells = nullptr) {
  std::vector<Cell> grid = common_grid(s, {x, y});
  if (cells) *cells = grid.size();
  return values_on(x, grid) == values_on(y, grid);
}

Func sum_of_products(const Space& xg, const std::vector<Func>& fs, const std::vector<Func>& gs) {
  Func out(xg);
  for (std::size_t i = 0; i < fs.size() && i < gs.size(); ++i) out = out + tensor(fs[i], gs[i]);
  return out;
}

}  // namespace

Func product_function(const Action& a, const Func& f, const Func& g) {
  const Group& grp = a.group();
  Space xg = Space::product(a.space(), grp.space());
  if (f.is_zero() || g.is_zero()) return Func(xg);
  require_inside_Vf(a, f, g);
  Subgroup g1 = support_stabilizer(a, f);
  std::vector<Func::Term> terms;
  for (const Cell& q : pieces_of(grp, g1, g)) {
    // every p in q is r u with u in g1, and c.p^-1 = c.r^-1
    Cell rinv = point_cell(grp.space(), grp.inv(representative(grp.space(), q)));
    Scalar gv = g.value_on(q);
    for (const auto& [c, v] : f.terms()) terms.push_back({make_pair_cell(a.image(c, rinv), q), v * gv});
  }
  return Func::from_disjoint(xg, std::move(terms));
}

ProductDecomposition decompose_product(const Action& a, const Func& f, const Func& g) {
  const Group& grp = a.group();
  Space xg = Space::product(a.space(), grp.space());
  ProductDecomposition out{Func(xg), {}, {}, {}, Subgroup::trivial(), 0, true};
  if (f.is_zero() || g.is_zero()) return out;
  require_inside_Vf(a, f, g);
  PolynomialResult pr = is_polynomial(a, f);
  if (!pr.certificate) throw Error("f is not certified polynomial: " + pr.attempts.back());
  out.g1 = pr.certificate->g1;
  out.F = product_function(a, f, g);

  std::vector<Func> fk, gk;
  for (const Cell& q : pieces_of(grp, out.g1, g)) {
    Point r = representative(grp.space(), q);
    out.centers.push_back(r);
    fk.push_back(induced_act(a, r, f));
    gk.push_back(Func::indicator(grp.space(), {q}, g.value_on(q)));
  }
  std::vector<Cell> grid = common_grid(a.space(), fk);
  Mat rows;
  for (const Func& h : fk) rows.push_back(values_on(h, grid));
  std::vector<std::size_t> keep = independent_rows(rows);
  RowBasis rb(grid.size());
  for (std::size_t i : keep) {
    rb.add(rows[i]);
    out.f_parts.push_back(fk[i]);
    out.g_parts.push_back(Func(grp.space()));
  }
  for (std::size_t k = 0; k < fk.size(); ++k) {
    Vec c = *rb.express(rows[k]);
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) out.g_parts[i] = out.g_parts[i] + c[i] * gk[k];
  }
  out.reconstructs = same_values(xg, out.F, sum_of_products(xg, out.f_parts, out.g_parts), &out.grid);
  return out;
}

ConverseVerdict converse_polynomiality(const Action& a, const Func& f, const std::vector<Func>& f_parts,
                                       const std::vector<Func>& g_parts, const Func& g) {
  if (g.is_zero()) throw Error("converse needs a nonzero g");
  if (f_parts.size() != g_parts.size()) throw Error("decomposition has unequal numbers of factors");
  const Group& grp = a.group();
  const Space& gs = grp.space();
  Space xg = Space::product(a.space(), gs);
  ConverseVerdict out;
  try {
    require_inside_Vf(a, f, g);
  } catch (const Error& e) {
    out.notes.push_back(e.what());
    return out;
  }
  if (!same_values(xg, product_function(a, f, g), sum_of_products(xg, f_parts, g_parts))) {
    out.notes.push_back("the pairs do not reproduce f(x.p)g(p)");
    return out;
  }

  Cell q0cell = g.support_cells().front();
  Point q0 = representative(gs, q0cell);
  out.q0 = q0;
  for (const Subgroup& v : canonical_chain(grp)) {
    if (!is_compact_open(grp, v)) continue;
    bool inside = true;
    for (const Cell& c : subgroup_cells(grp, v))
      inside = inside && subset(gs, grp.mul_cells(c, point_cell(gs, q0)), q0cell);
    if (inside) {
      out.v = v;
      break;
    }
  }
  if (!out.v) {
    out.notes.push_back("no subgroup V of the chain keeps V q0 inside one cell of g");
    return out;
  }

  // Division: (v q0).f = sum_i g_i(v q0) / g(v q0) f_i for v in V.
  Func h = induced_act(a, q0, f);
  std::vector<Func> family = f_parts;
  family.push_back(h);
  std::vector<Cell> supp;
  for (const Func& fi : family)
    for (const Cell& c : fi.support_cells()) supp.push_back(c);
  auto v1 = stabilizing_subgroup(a, supp, *out.v);
  if (!v1) {
    out.notes.push_back("no level subgroup fixes the supports of the factors");
    return out;
  }
  std::vector<Point> transversal = coset_transversal(grp, *out.v, *v1);
  std::vector<Func> translates;
  for (const Point& v : transversal) translates.push_back(induced_act(a, grp.mul(v, q0), f));
  std::vector<Func> all = family;
  all.insert(all.end(), translates.begin(), translates.end());
  std::vector<Cell> grid = common_grid(a.space(), all);
  Mat rows;
  for (const Func& fi : f_parts) rows.push_back(values_on(fi, grid));
  std::vector<std::size_t> keep = independent_rows(rows);
  RowBasis rb(grid.size());
  std::vector<Func> basis;
  for (std::size_t i : keep) {
    rb.add(rows[i]);
    basis.push_back(f_parts[i]);
  }
  auto divided = [&](const Point& p) {
    Vec w(f_parts.size());
    Scalar gp = g.evaluate(p);
    for (std::size_t i = 0; i < f_parts.size(); ++i) w[i] = g_parts[i].evaluate(p) / gp;
    Vec combo(grid.size());
    for (std::size_t i = 0; i < f_parts.size(); ++i)
      for (std::size_t j = 0; j < grid.size(); ++j) combo[j] += w[i] * rows[i][j];
    return combo;
  };
  std::vector<Vec> coords;
  for (std::size_t t = 0; t < transversal.size(); ++t) {
    Point p = grp.mul(transversal[t], q0);
    Vec combo = divided(p);
    if (values_on(translates[t], grid) != combo) {
      out.notes.push_back("division fails at " + describe_point(gs, p));
      return out;
    }
    coords.push_back(*rb.express(combo));
  }
  out.notes.push_back("(v q0).f lies in a span of dimension " + std::to_string(basis.size()) + " for " +
                      std::to_string(transversal.size()) + " cosets v");

  Saturation sat = saturate(a, OpenSet::of(a.space(), supp), *out.v);
  if (!sat.set) {
    out.notes.push_back("span does not saturate: " + sat.diagnostic);
    return out;
  }
  auto hc = rb.express(values_on(h, grid));
  PolynomialCertificate shifted{*out.v, *v1, *sat.set, basis, transversal, coords, *hc};
  ValidationReport vr = validate_certificate(a, h, shifted);
  if (!vr.ok) {
    out.notes.push_back("certificate for q0.f fails: " + vr.failures.front());
    return out;
  }
  out.shifted = shifted;

  // f is the translate of q0.f by q0^-1.
  PolynomialResult pr = is_polynomial(a, f);
  if (!pr.certificate) {
    out.notes.push_back("no certificate for f: " + pr.attempts.back());
    return out;
  }
  ValidationReport fr = validate_certificate(a, f, *pr.certificate);
  if (!fr.ok) {
    out.notes.push_back("certificate for f fails: " + fr.failures.front());
    return out;
  }
  out.certificate = pr.certificate;
  out.polynomial = true;
  return out;
}

ProductPolynomiality product_polynomiality(const Action& a, const Func& F, bool check_second) {
  ProductPolynomiality out;
  Action first = Action::extend_first(a, a.group().space());
  out.first = is_polynomial(first, F);
  if (check_second) {
    Action second = Action::extend_second(a.space(), Action::right_translation(a.group()));
    out.second = is_polynomial(second, F);
  }
  return out;
}

}  // namespace locpoly
