#include "locpoly/vf.hpp"

#include <algorithm>

namespace locpoly {

bool refinable(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return false;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: return c.level != kPointLevel && c.level != kWholeLevel;
    case SpaceKind::Product: return refinable(s.first(), c.parts[0]) || refinable(s.second(), c.parts[1]);
  }
  return false;
}

std::vector<Cell> split(const Space& s, const Cell& c) {
  if (s.kind() == SpaceKind::Product) {
    std::vector<Cell> out;
    for (const Cell& a : split(s.first(), c.parts[0]))
      for (const Cell& b : split(s.second(), c.parts[1])) out.push_back(make_pair_cell(a, b));
    return out;
  }
  if (!refinable(s, c)) return {c};
  return children(s, c);
}

namespace {

// Classification of support x {q} against Gamma, refining the support
// until it is decided.  Returns the first offending cell through bad.
Tri support_cover(const Action& a, const std::vector<Cell>& support, const Cell& q, int depth, Cell* bad) {
  Tri out = Tri::All;
  for (const Cell& s : support) {
    Tri t = a.cover(s, q);
    if (t == Tri::Mixed) {
      if (depth <= 0 || !refinable(a.space(), s)) throw Error("cannot decide the domain on " + describe_cell(a.space(), s));
      t = support_cover(a, split(a.space(), s), q, depth - 1, bad);
    }
    if (t != Tri::All) {
      if (bad && out == Tri::All) *bad = s;
      out = Tri::Mixed;
    }
  }
  return out;
}

void search(const Action& a, const std::vector<Cell>& support, const Cell& q, int depth, std::vector<Cell>& out) {
  std::vector<Cell> mixed;
  for (const Cell& s : support) {
    Tri t = a.cover(s, q);
    if (t == Tri::None) return;
    if (t == Tri::Mixed) mixed.push_back(s);
  }
  if (mixed.empty()) {
    out.push_back(q);
    return;
  }
  const Space& gs = a.group().space();
  bool any = refinable(gs, q);
  std::vector<Cell> next;
  for (const Cell& s : mixed) {
    any = any || refinable(a.space(), s);
    for (Cell& c : split(a.space(), s)) next.push_back(std::move(c));
  }
  if (!any || depth <= 0) throw Error("neighborhood search did not settle at " + describe_cell(gs, q));
  for (const Cell& qc : split(gs, q)) search(a, next, qc, depth - 1, out);
}

}  // namespace

OpenSet domain_slice(const Action& a, const Point& g, const std::vector<Cell>& region, int max_depth) {
  Cell gc = point_cell(a.group().space(), g);
  std::vector<Cell> out;
  std::vector<Cell> todo = region;
  for (int depth = 0; !todo.empty(); ++depth) {
    std::vector<Cell> next;
    for (const Cell& d : todo) {
      Tri t = tri_and(a.space_cover(d), a.cover(d, gc));
      if (t == Tri::All) out.push_back(d);
      if (t != Tri::Mixed) continue;
      if (depth >= max_depth || !refinable(a.space(), d)) throw Error("cannot decide the domain on " + describe_cell(a.space(), d));
      for (Cell& c : split(a.space(), d)) next.push_back(std::move(c));
    }
    todo = std::move(next);
  }
  return OpenSet::of(a.space(), std::move(out));
}

VfSet compute_Vf(const Action& a, const Func& f, int max_depth) {
  const Group& g = a.group();
  if (a.is_global() || f.is_zero()) return {g, OpenSet::all(g.space())};
  std::vector<Cell> support = f.support_cells();
  std::optional<std::vector<Cell>> start;
  for (const Cell& s : support) {
    auto b = a.group_bound(s);
    if (!b) continue;
    if (!start) {
      start = *b;
      continue;
    }
    std::vector<Cell> both;
    for (const Cell& x : *start)
      for (const Cell& y : *b)
        if (auto i = intersect(g.space(), x, y)) both.push_back(*i);
    start = both;
  }
  if (!start) throw Error("no finite bound for the neighborhood of " + f.describe());
  std::sort(start->begin(), start->end());
  start->erase(std::unique(start->begin(), start->end()), start->end());
  std::vector<Cell> w;
  for (const Cell& q : *start) search(a, support, q, max_depth, w);
  std::vector<Cell> v;
  for (const Cell& c : w) v.push_back(g.inv_cell(c));
  return {g, OpenSet::of(g.space(), std::move(v))};
}

bool in_Vf(const Action& a, const Func& f, const Point& p, std::string* why) {
  Cell q = point_cell(a.group().space(), a.group().inv(p));
  Cell bad;
  Tri t = support_cover(a, f.support_cells(), q, 24, &bad);
  if (t != Tri::All && why)
    *why = "x." + describe_point(a.group().space(), a.group().inv(p)) + " is undefined on " + describe_cell(a.space(), bad);
  return t == Tri::All;
}

Func induced_act(const Action& a, const Point& g, const Func& f) {
  std::string why;
  if (!in_Vf(a, f, g, &why)) throw Error(describe_point(a.group().space(), g) + " is not in V_f: " + why);
  Cell ginv = point_cell(a.group().space(), a.group().inv(g));
  std::vector<Func::Term> terms;
  for (const auto& [c, v] : f.terms()) terms.push_back({a.image(c, ginv), v});
  return Func::from_disjoint(a.space(), std::move(terms));
}

CompositionReport composition_law_check(const Action& a, const Func& f, const Point& p, const Point& q) {
  CompositionReport r;
  Func g = induced_act(a, p, f);
  Point qp = a.group().mul(q, p);
  r.q_in_Vg = in_Vf(a, g, q);
  r.qp_in_Vf = in_Vf(a, f, qp);
  r.iff_holds = r.q_in_Vg == r.qp_in_Vf;
  if (r.q_in_Vg && r.qp_in_Vf) r.equal = induced_act(a, qp, f) == induced_act(a, q, g);
  return r;
}

Func two_sided_act(const Action& product, const Point& h, const Point& k, const Func& f) {
  if (product.kind() != ActionKind::CommutingProduct) throw Error("two-sided action needs a commuting product");
  const Action& ah = product.base();
  const Action& ak = product.second_factor();
  Cell hinv = point_cell(ah.group().space(), ah.group().inv(h));
  Cell kinv = point_cell(ak.group().space(), ak.group().inv(k));
  std::vector<Func::Term> terms;
  for (const auto& [c, v] : f.terms()) {
    // y = h.x.k lies in c exactly when x = h^-1.(y.k^-1)
    if (ak.cover(c, kinv) != Tri::All) throw Error("k^-1 is undefined on " + describe_cell(ak.space(), c));
    Cell mid = ak.image(c, kinv);
    if (ah.cover(mid, hinv) != Tri::All) throw Error("h^-1 is undefined on " + describe_cell(ah.space(), mid));
    terms.push_back({ah.image(mid, hinv), v});
  }
  return Func::from_disjoint(product.space(), std::move(terms));
}

}  // namespace locpoly
