#include "locpoly/action.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace locpoly {

namespace {

std::int64_t shift_level(std::int64_t level, std::int64_t k) {
  if (level == kPointLevel || level == kWholeLevel) return level;
  return level + k;
}

using Bound = std::optional<std::vector<Cell>>;

Bound intersect_bounds(const Space& s, const Bound& a, const Bound& b) {
  if (!a) return b;
  if (!b) return a;
  std::vector<Cell> out;
  for (const Cell& x : *a)
    for (const Cell& y : *b)
      if (auto i = intersect(s, x, y)) out.push_back(*i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Bound union_bounds(const std::vector<Bound>& parts) {
  std::vector<Cell> out;
  for (const Bound& b : parts) {
    if (!b) return std::nullopt;
    out.insert(out.end(), b->begin(), b->end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_finite_group(const Group& g) {
  switch (g.kind()) {
    case GroupKind::Finite: return true;
    case GroupKind::Product: return is_finite_group(g.first()) && is_finite_group(g.second());
    case GroupKind::Opposite: return is_finite_group(g.base());
    default: return false;
  }
}

std::string arrow_str(const Action& a, const Point& x, const Point& g) {
  return "(" + describe_point(a.space(), x) + ", " + describe_point(a.group().space(), g) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructors

Action Action::right_translation(const Group& g) {
  return Action(std::make_shared<const Node>(Node{ActionKind::RightTranslation, g.space(), g, {}, {}, {}, {}, "right"}));
}

Action Action::left_translation(const Group& g) {
  Group op = g.kind() == GroupKind::Opposite ? g.base() : Group::opposite(g);
  return Action(std::make_shared<const Node>(Node{ActionKind::RightTranslation, g.space(), op, {}, {}, {}, {}, "left"}));
}

Action Action::finite_table(const Space& x, const Group& g, std::vector<std::vector<int>> table, std::string name) {
  if (x.kind() != SpaceKind::Finite) throw Error("table actions need a finite space");
  if (g.kind() != GroupKind::Finite) throw Error("table actions need a finite group");
  if (static_cast<std::int64_t>(table.size()) != x.size()) throw Error("action table needs one row per point");
  for (const auto& row : table) {
    if (static_cast<std::int64_t>(row.size()) != g.order()) throw Error("action table needs one column per group element");
    for (int v : row)
      if (v < -1 || v >= x.size()) throw Error("action table entry out of range: " + std::to_string(v));
  }
  return Action(std::make_shared<const Node>(Node{ActionKind::FiniteTable, x, g, {}, {}, {}, std::move(table), std::move(name)}));
}

Action Action::trivial(const Space& x, const Group& g) {
  return Action(std::make_shared<const Node>(Node{ActionKind::Trivial, x, g, {}, {}, {}, {}, "trivial"}));
}

Action Action::affine_on_line(std::int64_t p) {
  return Action(std::make_shared<const Node>(
      Node{ActionKind::AffineOnLine, Space::padic_line(p), Group::padic_affine(p), {}, {}, {}, {}, "affine"}));
}

Action Action::restrict_open(const Action& a, const OpenSet& y) {
  if (!(y.space() == a.space())) throw Error("open set lives on " + y.space().describe() + ", not on " + a.space().describe());
  return Action(std::make_shared<const Node>(Node{ActionKind::RestrictOpen, a.space(), a.group(), {a}, y, {}, {}, ""}));
}

Action Action::restrict_subgroup(const Action& a, const Subgroup& h) {
  validate_subgroup(a.group(), h);
  return Action(std::make_shared<const Node>(Node{ActionKind::RestrictSubgroup, a.space(), a.group(), {a}, {}, h, {}, ""}));
}

Action Action::derived1(const Action& a) {
  Space s = Space::product(a.space(), a.group().space());
  return Action(std::make_shared<const Node>(Node{ActionKind::Derived1, s, a.group(), {a}, {}, {}, {}, ""}));
}

Action Action::derived2(const Action& a) {
  Space s = Space::product(a.space(), a.group().space());
  return Action(std::make_shared<const Node>(Node{ActionKind::Derived2, s, a.group(), {a}, {}, {}, {}, ""}));
}

Action Action::commuting_product(const Action& h, const Action& k) {
  if (!(h.space() == k.space())) throw Error("commuting actions must act on the same space");
  Report r = check_commuting(h, k, Probes{probe_points(h.space(), 27), {}}, probe_elements(h.group(), 9), probe_elements(k.group(), 9));
  if (!r.ok()) throw Error("actions do not commute: " + r.violations.front().witness);
  Group g = Group::product(h.group(), k.group());
  return Action(std::make_shared<const Node>(Node{ActionKind::CommutingProduct, h.space(), g, {h, k}, {}, {}, {}, ""}));
}

Action Action::extend_first(const Action& a, const Space& z) {
  return Action(std::make_shared<const Node>(
      Node{ActionKind::ExtendFirst, Space::product(a.space(), z), a.group(), {a}, {}, {}, {}, ""}));
}

Action Action::extend_second(const Space& z, const Action& a) {
  return Action(std::make_shared<const Node>(
      Node{ActionKind::ExtendSecond, Space::product(z, a.space()), a.group(), {a}, {}, {}, {}, ""}));
}

const Action& Action::base() const {
  if (node_->children.empty()) throw Error("action has no base");
  return node_->children[0];
}

const Action& Action::second_factor() const {
  if (kind() != ActionKind::CommutingProduct) throw Error("not a commuting product");
  return node_->children[1];
}

const OpenSet& Action::open_set() const {
  if (!node_->open) throw Error("not an open restriction");
  return *node_->open;
}

const Subgroup& Action::subgroup() const {
  if (kind() != ActionKind::RestrictSubgroup) throw Error("not a subgroup restriction");
  return node_->sub;
}

std::string Action::describe() const {
  switch (kind()) {
    case ActionKind::RightTranslation:
      if (name() == "left") return "left translation on " + group().base().describe();
      return "right translation on " + group().describe();
    case ActionKind::FiniteTable: return name() + " action of " + group().describe() + " on " + space().describe();
    case ActionKind::Trivial: return "trivial action of " + group().describe() + " on " + space().describe();
    case ActionKind::AffineOnLine: return "affine maps on Q" + std::to_string(space().prime());
    case ActionKind::RestrictOpen: return base().describe() + " restricted to " + open_set().describe();
    case ActionKind::RestrictSubgroup:
      return base().describe() + " restricted to subgroup " + describe_subgroup(group(), subgroup());
    case ActionKind::Derived1: return "first derived action of " + base().describe();
    case ActionKind::Derived2: return "second derived action of " + base().describe();
    case ActionKind::CommutingProduct: return "product of " + base().describe() + " and " + second_factor().describe();
    case ActionKind::ExtendFirst: return base().describe() + " on the first factor";
    case ActionKind::ExtendSecond: return base().describe() + " on the second factor";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Point level

bool Action::in_space(const Point& x) const {
  switch (kind()) {
    case ActionKind::RightTranslation:
    case ActionKind::Trivial:
    case ActionKind::AffineOnLine: return true;
    case ActionKind::FiniteTable: return x.index >= 0 && x.index < space().size();
    case ActionKind::RestrictOpen: return base().in_space(x) && open_set().contains(x);
    case ActionKind::RestrictSubgroup:
    case ActionKind::CommutingProduct: return base().in_space(x);
    case ActionKind::Derived1:
    case ActionKind::Derived2: return base().in_domain(x.parts.at(0), x.parts.at(1));
    case ActionKind::ExtendFirst: return base().in_space(x.parts.at(0));
    case ActionKind::ExtendSecond: return base().in_space(x.parts.at(1));
  }
  return false;
}

std::optional<Point> Action::act(const Point& x, const Point& g) const {
  switch (kind()) {
    case ActionKind::RightTranslation: return group().mul(x, g);
    case ActionKind::FiniteTable: {
      if (!in_space(x)) return std::nullopt;
      int v = node_->table[static_cast<std::size_t>(x.index)].at(static_cast<std::size_t>(g.index));
      if (v < 0) return std::nullopt;
      return Point::at(v);
    }
    case ActionKind::Trivial: return x;
    case ActionKind::AffineOnLine: return Point::padic(power(space().prime(), g.index) * x.value + g.value);
    case ActionKind::RestrictOpen: {
      if (!open_set().contains(x)) return std::nullopt;
      auto y = base().act(x, g);
      if (!y || !open_set().contains(*y)) return std::nullopt;
      return y;
    }
    case ActionKind::RestrictSubgroup:
      if (!subgroup_contains(group(), subgroup(), g)) return std::nullopt;
      return base().act(x, g);
    case ActionKind::Derived1: {
      const Point &xb = x.parts.at(0), &p = x.parts.at(1);
      if (!base().in_domain(xb, p)) return std::nullopt;
      auto y = base().act(xb, g);
      if (!y) return std::nullopt;
      return Point::pair(*y, group().mul(group().inv(g), p));
    }
    case ActionKind::Derived2: {
      const Point &xb = x.parts.at(0), &p = x.parts.at(1);
      if (!base().in_domain(xb, p)) return std::nullopt;
      Point r = group().mul(p, g);
      if (!base().in_domain(xb, r)) return std::nullopt;
      return Point::pair(xb, r);
    }
    case ActionKind::CommutingProduct: {
      const Point &h = g.parts.at(0), &k = g.parts.at(1);
      auto y = base().act(x, h);
      if (!y || !second_factor().in_domain(x, k)) return std::nullopt;
      return second_factor().act(*y, k);
    }
    case ActionKind::ExtendFirst: {
      auto y = base().act(x.parts.at(0), g);
      if (!y) return std::nullopt;
      return Point::pair(*y, x.parts.at(1));
    }
    case ActionKind::ExtendSecond: {
      auto y = base().act(x.parts.at(1), g);
      if (!y) return std::nullopt;
      return Point::pair(x.parts.at(0), *y);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cell level

Tri Action::space_cover(const Cell& d) const {
  switch (kind()) {
    case ActionKind::RightTranslation:
    case ActionKind::Trivial:
    case ActionKind::AffineOnLine:
    case ActionKind::FiniteTable: return Tri::All;
    case ActionKind::RestrictOpen: return tri_and(base().space_cover(d), open_set().classify(d));
    case ActionKind::RestrictSubgroup:
    case ActionKind::CommutingProduct: return base().space_cover(d);
    case ActionKind::Derived1:
    case ActionKind::Derived2: return base().cover(d.parts.at(0), d.parts.at(1));
    case ActionKind::ExtendFirst: return base().space_cover(d.parts.at(0));
    case ActionKind::ExtendSecond: return base().space_cover(d.parts.at(1));
  }
  return Tri::Mixed;
}

Tri Action::cover(const Cell& d, const Cell& dg) const {
  switch (kind()) {
    case ActionKind::RightTranslation:
    case ActionKind::Trivial:
    case ActionKind::AffineOnLine: return Tri::All;
    case ActionKind::FiniteTable:
      return node_->table.at(static_cast<std::size_t>(d.index)).at(static_cast<std::size_t>(dg.index)) >= 0 ? Tri::All
                                                                                                          : Tri::None;
    case ActionKind::RestrictOpen: {
      Tri t = tri_and(open_set().classify(d), base().cover(d, dg));
      if (t == Tri::None) return t;
      return tri_and(t, open_set().classify(base().image(d, dg)));
    }
    case ActionKind::RestrictSubgroup: {
      Tri t = subgroup_set(group(), subgroup()).classify(dg);
      if (t == Tri::None) return t;
      return tri_and(t, base().cover(d, dg));
    }
    case ActionKind::Derived1: {
      Tri t = base().cover(d.parts.at(0), d.parts.at(1));
      if (t == Tri::None) return t;
      return tri_and(t, base().cover(d.parts.at(0), dg));
    }
    case ActionKind::Derived2: {
      Tri t = base().cover(d.parts.at(0), d.parts.at(1));
      if (t == Tri::None) return t;
      return tri_and(t, base().cover(d.parts.at(0), group().mul_cells(d.parts.at(1), dg)));
    }
    case ActionKind::CommutingProduct: {
      const Cell &dh = dg.parts.at(0), &dk = dg.parts.at(1);
      Tri t = tri_and(base().cover(d, dh), second_factor().cover(d, dk));
      if (t == Tri::None) return t;
      return tri_and(t, second_factor().cover(base().image(d, dh), dk));
    }
    case ActionKind::ExtendFirst: return base().cover(d.parts.at(0), dg);
    case ActionKind::ExtendSecond: return base().cover(d.parts.at(1), dg);
  }
  return Tri::Mixed;
}

Cell Action::image(const Cell& d, const Cell& dg) const {
  switch (kind()) {
    case ActionKind::RightTranslation: return group().mul_cells(d, dg);
    case ActionKind::FiniteTable: {
      int v = node_->table.at(static_cast<std::size_t>(d.index)).at(static_cast<std::size_t>(dg.index));
      return v >= 0 ? make_point_cell(v) : d;
    }
    case ActionKind::Trivial: return d;
    case ActionKind::AffineOnLine: {
      std::int64_t p = space().prime();
      std::int64_t level = std::min(shift_level(d.level, dg.index), dg.level);
      return make_ball(p, power(p, dg.index) * d.center + dg.center, level);
    }
    case ActionKind::RestrictOpen:
    case ActionKind::RestrictSubgroup: return base().image(d, dg);
    case ActionKind::Derived1:
      return make_pair_cell(base().image(d.parts.at(0), dg), group().mul_cells(group().inv_cell(dg), d.parts.at(1)));
    case ActionKind::Derived2: return make_pair_cell(d.parts.at(0), group().mul_cells(d.parts.at(1), dg));
    case ActionKind::CommutingProduct:
      return second_factor().image(base().image(d, dg.parts.at(0)), dg.parts.at(1));
    case ActionKind::ExtendFirst: return make_pair_cell(base().image(d.parts.at(0), dg), d.parts.at(1));
    case ActionKind::ExtendSecond: return make_pair_cell(d.parts.at(0), base().image(d.parts.at(1), dg));
  }
  return d;
}

std::optional<std::vector<Cell>> Action::group_bound(const Cell& d) const {
  const Space& gs = group().space();
  switch (kind()) {
    case ActionKind::RightTranslation:
    case ActionKind::Trivial:
    case ActionKind::AffineOnLine: return group().whole_cells();
    case ActionKind::FiniteTable: {
      std::vector<Cell> out;
      const auto& row = node_->table.at(static_cast<std::size_t>(d.index));
      for (std::size_t g = 0; g < row.size(); ++g)
        if (row[g] >= 0) out.push_back(make_point_cell(static_cast<std::int64_t>(g)));
      return out;
    }
    case ActionKind::RestrictOpen: {
      Bound b = base().group_bound(d);
      if (open_set().is_all()) return b;
      return intersect_bounds(gs, b, base().solve(d, open_set().cells()));
    }
    case ActionKind::RestrictSubgroup: {
      Bound b = base().group_bound(d);
      if (subgroup().kind == SubgroupKind::Whole) return b;
      return intersect_bounds(gs, b, subgroup_cells(group(), subgroup()));
    }
    case ActionKind::Derived1: return base().group_bound(d.parts.at(0));
    case ActionKind::Derived2: {
      Bound b = base().group_bound(d.parts.at(0));
      if (!b) return group().whole_cells();
      std::vector<Cell> out;
      Cell inv = group().inv_cell(d.parts.at(1));
      for (const Cell& c : *b) out.push_back(group().mul_cells(inv, c));
      return union_bounds({out});
    }
    case ActionKind::CommutingProduct: {
      Bound bh = base().group_bound(d), bk = second_factor().group_bound(d);
      if (!bh || !bk) return std::nullopt;
      std::vector<Cell> out;
      for (const Cell& a : *bh)
        for (const Cell& b : *bk) out.push_back(make_pair_cell(a, b));
      return out;
    }
    case ActionKind::ExtendFirst: return base().group_bound(d.parts.at(0));
    case ActionKind::ExtendSecond: return base().group_bound(d.parts.at(1));
  }
  return std::nullopt;
}

std::optional<std::vector<Cell>> Action::solve(const Cell& d, const std::vector<Cell>& targets) const {
  const Space& gs = group().space();
  switch (kind()) {
    case ActionKind::RightTranslation: {
      std::vector<Cell> out;
      Cell inv = group().inv_cell(d);
      for (const Cell& t : targets) out.push_back(group().mul_cells(inv, t));
      return union_bounds({out});
    }
    case ActionKind::Trivial:
      for (const Cell& t : targets)
        if (intersect(space(), d, t)) return group().whole_cells();
      return std::vector<Cell>{};
    case ActionKind::AffineOnLine: return std::nullopt;
    case ActionKind::FiniteTable: {
      std::vector<Cell> out;
      const auto& row = node_->table.at(static_cast<std::size_t>(d.index));
      for (std::size_t g = 0; g < row.size(); ++g)
        for (const Cell& t : targets)
          if (row[g] >= 0 && row[g] == t.index) out.push_back(make_point_cell(static_cast<std::int64_t>(g)));
      return union_bounds({out});
    }
    case ActionKind::RestrictOpen:
    case ActionKind::RestrictSubgroup: return intersect_bounds(gs, base().solve(d, targets), group_bound(d));
    case ActionKind::Derived1: {
      std::vector<Bound> parts;
      for (const Cell& t : targets) {
        Bound s1 = base().solve(d.parts.at(0), {t.parts.at(0)});
        std::vector<Cell> s2{group().mul_cells(d.parts.at(1), group().inv_cell(t.parts.at(1)))};
        parts.push_back(intersect_bounds(gs, s1, s2));
      }
      return intersect_bounds(gs, union_bounds(parts), group_bound(d));
    }
    case ActionKind::Derived2: {
      std::vector<Cell> out;
      Cell inv = group().inv_cell(d.parts.at(1));
      for (const Cell& t : targets)
        if (intersect(base().space(), d.parts.at(0), t.parts.at(0))) out.push_back(group().mul_cells(inv, t.parts.at(1)));
      return intersect_bounds(gs, union_bounds({out}), group_bound(d));
    }
    case ActionKind::CommutingProduct: return group_bound(d);
    case ActionKind::ExtendFirst:
    case ActionKind::ExtendSecond: {
      std::size_t mine = kind() == ActionKind::ExtendFirst ? 0 : 1, other = 1 - mine;
      const Space& zs = kind() == ActionKind::ExtendFirst ? space().second() : space().first();
      std::vector<Bound> parts;
      for (const Cell& t : targets)
        if (intersect(zs, d.parts.at(other), t.parts.at(other))) parts.push_back(base().solve(d.parts.at(mine), {t.parts.at(mine)}));
      return union_bounds(parts);
    }
  }
  return std::nullopt;
}

bool Action::is_global() const {
  switch (kind()) {
    case ActionKind::RightTranslation:
    case ActionKind::Trivial:
    case ActionKind::AffineOnLine: return true;
    case ActionKind::FiniteTable:
      for (const auto& row : node_->table)
        for (int v : row)
          if (v < 0) return false;
      return true;
    case ActionKind::RestrictOpen: return open_set().is_all() && base().is_global();
    case ActionKind::RestrictSubgroup: return subgroup().kind == SubgroupKind::Whole && base().is_global();
    case ActionKind::CommutingProduct: return base().is_global() && second_factor().is_global();
    default: return base().is_global();
  }
}

// ---------------------------------------------------------------------------

std::optional<std::vector<Point>> finite_points(const Space& s) {
  if (s.kind() == SpaceKind::Finite) {
    std::vector<Point> out;
    for (std::int64_t i = 0; i < s.size(); ++i) out.push_back(Point::at(i));
    return out;
  }
  if (s.kind() == SpaceKind::Product) {
    auto a = finite_points(s.first()), b = finite_points(s.second());
    if (!a || !b) return std::nullopt;
    std::vector<Point> out;
    for (const Point& x : *a)
      for (const Point& y : *b) out.push_back(Point::pair(x, y));
    return out;
  }
  return std::nullopt;
}

bool is_open_cell(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return true;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: return c.level != kPointLevel;
    case SpaceKind::Product: return is_open_cell(s.first(), c.parts.at(0)) && is_open_cell(s.second(), c.parts.at(1));
  }
  return false;
}

void Report::merge(const Report& o) {
  checked += o.checked;
  violations.insert(violations.end(), o.violations.begin(), o.violations.end());
}

// ---------------------------------------------------------------------------
// Probes

namespace {

std::vector<Point> ball_probes(const Space& s, std::size_t budget, std::int64_t k) {
  std::int64_t p = s.prime();
  std::int64_t digits = 1;
  for (std::size_t n = static_cast<std::size_t>(p); n * static_cast<std::size_t>(p) <= budget; n *= static_cast<std::size_t>(p)) ++digits;
  std::int64_t region = digits >= 2 ? -1 : 0;
  Cell root = s.kind() == SpaceKind::Affine ? make_affine_cell(p, k, Rational(0), region) : make_ball(p, Rational(0), region);
  std::vector<Point> out;
  for (const Cell& c : cells_at_level(s, root, region + digits)) out.push_back(representative(s, c));
  return out;
}

}  // namespace

std::vector<Point> probe_points(const Space& s, std::size_t budget) {
  budget = std::max<std::size_t>(budget, 2);
  switch (s.kind()) {
    case SpaceKind::Finite: return *finite_points(s);
    case SpaceKind::Integers: {
      std::vector<Point> out;
      for (std::int64_t i = -3; i <= 3; ++i) out.push_back(Point::at(i));
      return out;
    }
    case SpaceKind::PAdicLine: return ball_probes(s, budget, 0);
    case SpaceKind::Affine: {
      std::vector<Point> out;
      for (std::int64_t k = -1; k <= 1; ++k)
        for (Point& x : ball_probes(s, std::max<std::size_t>(budget / 3, 2), k)) out.push_back(std::move(x));
      return out;
    }
    case SpaceKind::Product: {
      std::vector<Point> a, b;
      if (auto fa = finite_points(s.first())) {
        a = *fa;
        b = probe_points(s.second(), std::max<std::size_t>(budget / std::max<std::size_t>(a.size(), 1), 2));
      } else if (auto fb = finite_points(s.second())) {
        b = *fb;
        a = probe_points(s.first(), std::max<std::size_t>(budget / std::max<std::size_t>(b.size(), 1), 2));
      } else {
        auto half = static_cast<std::size_t>(std::sqrt(static_cast<double>(budget)));
        a = probe_points(s.first(), half);
        b = probe_points(s.second(), half);
      }
      std::vector<Point> out;
      for (const Point& x : a)
        for (const Point& y : b) out.push_back(Point::pair(x, y));
      return out;
    }
  }
  return {};
}

std::vector<Point> probe_elements(const Group& g, std::size_t budget) {
  if (is_finite_group(g)) return g.elements();
  return probe_points(g.space(), budget);
}

namespace {

// Points and elements that land inside the restrictions of the tree, so that
// probes exercise the interesting part of the domain.
void collect_probes(const Action& a, Probes& out, std::size_t budget) {
  switch (a.kind()) {
    case ActionKind::RestrictOpen: {
      const OpenSet& y = a.open_set();
      for (const Cell& c : y.cells()) {
        if (!is_compact(a.space(), c)) continue;
        std::int64_t L = finest_level(a.space(), c);
        std::int64_t target = L == kWholeLevel ? 0 : L + 1;
        std::vector<Cell> fine = cells_at_level(a.space(), c, target);
        std::size_t step = std::max<std::size_t>(1, fine.size() / budget);
        for (std::size_t i = 0; i < fine.size(); i += step) out.points.push_back(representative(a.space(), fine[i]));
      }
      collect_probes(a.base(), out, budget);
      break;
    }
    case ActionKind::RestrictSubgroup: {
      if (is_compact_open(a.group(), a.subgroup())) {
        for (const Cell& c : subgroup_cells(a.group(), a.subgroup())) {
          std::int64_t L = finest_level(a.group().space(), c);
          std::int64_t target = L == kWholeLevel ? 0 : L + 2;
          for (const Cell& f : cells_at_level(a.group().space(), c, target))
            out.elements.push_back(representative(a.group().space(), f));
        }
      } else {
        for (const Point& g : probe_elements(a.group(), budget))
          if (subgroup_contains(a.group(), a.subgroup(), g)) out.elements.push_back(g);
      }
      collect_probes(a.base(), out, budget);
      break;
    }
    default: break;
  }
}

void sort_unique(std::vector<Point>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Probes default_probes(const Action& a, std::size_t budget) {
  Probes out{probe_points(a.space(), budget), probe_elements(a.group(), budget)};
  collect_probes(a, out, budget);
  sort_unique(out.points);
  sort_unique(out.elements);
  return out;
}

// ---------------------------------------------------------------------------
// Verification.  Each point is checked independently; the per-point reports
// are merged in point order so the output does not depend on scheduling.

namespace {

template <class Body>
Report per_point(const std::vector<Point>& points, Body body) {
  std::vector<Report> parts(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) body(points[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
  Report out;
  for (const Report& r : parts) out.merge(r);
  return out;
}

}  // namespace

Report check_axioms(const Action& a, const Probes& probes) {
  const Group& g = a.group();
  const Point e = g.identity();
  return per_point(probes.points, [&](const Point& x, Report& r) {
    if (!a.in_space(x)) return;
    ++r.checked;
    auto xe = a.act(x, e);
    if (!xe || !(*xe == x)) r.violations.push_back({"identity", arrow_str(a, x, e)});
    for (const Point& p : probes.elements) {
      auto xp = a.act(x, p);
      if (!xp) continue;
      for (const Point& q : probes.elements) {
        ++r.checked;
        auto lhs = a.act(x, g.mul(p, q));
        auto rhs = a.act(*xp, q);
        std::string w = "x=" + describe_point(a.space(), x) + " p=" + describe_point(g.space(), p) +
                        " q=" + describe_point(g.space(), q);
        if (lhs.has_value() != rhs.has_value())
          r.violations.push_back({"compatibility", w});
        else if (lhs && !(*lhs == *rhs))
          r.violations.push_back({"composition", w});
      }
    }
  });
}

Report check_commuting(const Action& h, const Action& k, const Probes& probes_x, const std::vector<Point>& hs,
                       const std::vector<Point>& ks) {
  return per_point(probes_x.points, [&](const Point& x, Report& r) {
    if (!h.in_space(x) || !k.in_space(x)) return;
    for (const Point& a : hs) {
      auto xa = h.act(x, a);
      for (const Point& b : ks) {
        auto xb = k.act(x, b);
        if (!xa || !xb) continue;
        ++r.checked;
        auto lhs = k.act(*xa, b);
        auto rhs = h.act(*xb, a);
        std::string w = "x=" + describe_point(h.space(), x) + " h=" + describe_point(h.group().space(), a) +
                        " k=" + describe_point(k.group().space(), b);
        if (lhs.has_value() != rhs.has_value())
          r.violations.push_back({"commuting domain", w});
        else if (lhs && !(*lhs == *rhs))
          r.violations.push_back({"commuting value", w});
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Groupoid

namespace {

void require_arrow(const Action& a, const Arrow& arrow) {
  if (!a.in_space(arrow.first) || !a.in_domain(arrow.first, arrow.second))
    throw Error("pair " + arrow_str(a, arrow.first, arrow.second) + " is not in the domain");
}

}  // namespace

std::optional<Arrow> groupoid_compose(const Action& a, const Arrow& first, const Arrow& second) {
  require_arrow(a, first);
  require_arrow(a, second);
  if (!(*a.act(first.first, first.second) == second.first)) return std::nullopt;
  return Arrow{first.first, a.group().mul(first.second, second.second)};
}

Arrow groupoid_inverse(const Action& a, const Arrow& arrow) {
  require_arrow(a, arrow);
  return Arrow{*a.act(arrow.first, arrow.second), a.group().inv(arrow.second)};
}

Arrow gamma_map(const Action& a, const Arrow& arrow) { return groupoid_inverse(a, arrow); }

Report check_groupoid(const Action& a, const Probes& probes) {
  const Group& g = a.group();
  const Point e = g.identity();
  Action d1 = Action::derived1(a), d2 = Action::derived2(a);
  const std::size_t inner = std::min<std::size_t>(probes.elements.size(), 12);
  std::vector<Point> small(probes.elements.begin(), probes.elements.begin() + static_cast<std::ptrdiff_t>(inner));
  auto in_gamma = [&](const Arrow& w) { return a.in_space(w.first) && a.in_domain(w.first, w.second); };
  return per_point(probes.points, [&](const Point& x, Report& r) {
    if (!a.in_space(x)) return;
    for (const Point& p : probes.elements) {
      if (!a.in_domain(x, p)) continue;
      Arrow u{x, p};
      std::string w = arrow_str(a, x, p);
      ++r.checked;
      Arrow inv = groupoid_inverse(a, u);
      if (!in_gamma(inv)) {
        r.violations.push_back({"inverse", w});
        continue;
      }
      if (!(gamma_map(a, inv) == u)) r.violations.push_back({"gamma involution", w});
      auto left = groupoid_compose(a, u, inv);
      auto right = groupoid_compose(a, inv, u);
      if (!left || !(*left == Arrow{x, e})) r.violations.push_back({"left unit", w});
      if (!right || !(*right == Arrow{inv.first, e})) r.violations.push_back({"right unit", w});
      auto ue = groupoid_compose(a, u, Arrow{inv.first, e});
      if (!ue || !(*ue == u)) r.violations.push_back({"unit", w});
      const Point& y = inv.first;
      for (const Point& q : small) {
        if (!a.in_domain(y, q)) continue;
        Arrow v{y, q};
        Point z = *a.act(y, q);
        auto uv = groupoid_compose(a, u, v);
        if (!uv || !in_gamma(*uv)) {
          r.violations.push_back({"composition", w});
          continue;
        }
        for (const Point& s : small) {
          if (!a.in_domain(z, s)) continue;
          ++r.checked;
          Arrow t{z, s};
          auto l = groupoid_compose(a, *uv, t);
          auto vt = groupoid_compose(a, v, t);
          auto rr = vt ? groupoid_compose(a, u, *vt) : std::nullopt;
          if (!l || !rr || !(*l == *rr)) r.violations.push_back({"associativity", w + " " + arrow_str(a, y, q)});
        }
      }
      // gamma intertwines the two derived actions
      Point xp = Point::pair(x, p);
      Point gx = Point::pair(inv.first, inv.second);
      for (const Point& q : probes.elements) {
        auto lhs = d1.act(xp, q);
        if (!lhs) continue;
        ++r.checked;
        Arrow glhs = gamma_map(a, Arrow{lhs->parts[0], lhs->parts[1]});
        auto rhs = d2.act(gx, q);
        if (!rhs || !(Point::pair(glhs.first, glhs.second) == *rhs))
          r.violations.push_back({"intertwiner", w + " q=" + describe_point(g.space(), q)});
      }
    }
  });
}

// ---------------------------------------------------------------------------
// Structural predicates

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

ProperReport is_proper(const Action& a) {
  if (finite_points(a.space()) && is_finite_group(a.group()))
    return {Verdict::Yes, "finite model: every preimage is a finite set"};
  switch (a.kind()) {
    case ActionKind::RightTranslation:
      return {Verdict::Yes, "(p,q) -> (p,pq) has the continuous inverse (p,q) -> (p,p^-1 q)"};
    case ActionKind::Trivial:
      if (a.group().kind() == GroupKind::Integers || a.group().kind() == GroupKind::PAdicAdditive ||
          a.group().kind() == GroupKind::PAdicAffine)
        return {Verdict::No, "the preimage of (x,x) is {x} x G, which is not compact"};
      return {Verdict::Unknown, "no rule"};
    case ActionKind::RestrictOpen:
    case ActionKind::RestrictSubgroup: {
      ProperReport b = is_proper(a.base());
      if (b.verdict == Verdict::Yes) return {Verdict::Yes, "restriction of a proper action"};
      return {Verdict::Unknown, "base action is not known to be proper"};
    }
    default: return {Verdict::Unknown, "no rule"};
  }
}

namespace {

LocalHomeoResult absent(std::string why) { return {std::nullopt, std::move(why)}; }

LocalHomeoResult witness_rec(const Action& a, const Point& x) {
  const Group& g = a.group();
  switch (a.kind()) {
    case ActionKind::RightTranslation: {
      LocalHomeoWitness w;
      w.x = x;
      w.v = Subgroup::whole();
      if (auto cells = g.whole_cells()) {
        for (const Cell& c : *cells) w.image.push_back(a.image(point_cell(a.space(), x), c));
      }
      Group gc = g;
      w.inverse = [gc, x](const Point& y) -> std::optional<Point> { return gc.mul(gc.inv(x), y); };
      return {w, "translation: V_x is the whole group"};
    }
    case ActionKind::RestrictOpen: {
      LocalHomeoResult b = witness_rec(a.base(), x);
      if (!b.witness) return b;
      if (!a.open_set().contains(x)) return absent("point is outside the open set");
      Cell xc = point_cell(a.space(), x);
      for (const Subgroup& v : canonical_chain(g)) {
        if (!subgroup_subset(g, v, b.witness->v)) continue;
        if (v.kind == SubgroupKind::Whole && !g.whole_cells()) continue;
        std::vector<Cell> vc = subgroup_cells(g, v);
        bool ok = true;
        std::vector<Cell> img;
        for (const Cell& c : vc) {
          if (a.cover(xc, c) != Tri::All) {
            ok = false;
            break;
          }
          img.push_back(a.image(xc, c));
        }
        if (!ok) continue;
        LocalHomeoWitness w = *b.witness;
        w.v = v;
        w.image = img;
        return {w, "shrunk to " + describe_subgroup(g, v)};
      }
      return absent("no subgroup in the default chain keeps x inside the open set");
    }
    case ActionKind::RestrictSubgroup: {
      const Action& base = a.base();
      const Subgroup& h = a.subgroup();
      if (base.kind() == ActionKind::CommutingProduct && h.kind == SubgroupKind::Product) {
        // One factor cut down to the identity leaves the other action alone.
        bool first_trivial = h.parts[0].kind == SubgroupKind::Trivial;
        bool second_trivial = h.parts[1].kind == SubgroupKind::Trivial;
        if (first_trivial || second_trivial) {
          const Action& inner = first_trivial ? base.second_factor() : base.base();
          const Subgroup& hi = first_trivial ? h.parts[1] : h.parts[0];
          Action r = hi.kind == SubgroupKind::Whole ? inner : Action::restrict_subgroup(inner, hi);
          LocalHomeoResult sub = witness_rec(r, x);
          if (!sub.witness) return sub;
          LocalHomeoWitness w = *sub.witness;
          Group other = first_trivial ? base.group().first() : base.group().second();
          w.v = first_trivial ? Subgroup::product(Subgroup::trivial(), w.v) : Subgroup::product(w.v, Subgroup::trivial());
          auto inner_inv = sub.witness->inverse;
          Point oe = other.identity();
          w.inverse = [inner_inv, oe, first_trivial](const Point& y) -> std::optional<Point> {
            auto p = inner_inv(y);
            if (!p) return std::nullopt;
            return first_trivial ? Point::pair(oe, *p) : Point::pair(*p, oe);
          };
          return {w, "one factor restricted to the identity"};
        }
      }
      LocalHomeoResult b = witness_rec(base, x);
      if (!b.witness) return b;
      Subgroup v = subgroup_intersection(g, b.witness->v, h);
      if (v.kind == SubgroupKind::Whole && !g.whole_cells()) return absent("subgroup is not a finite union of cells");
      LocalHomeoWitness w = *b.witness;
      w.v = v;
      w.image.clear();
      Cell xc = point_cell(a.space(), x);
      for (const Cell& c : subgroup_cells(g, v)) {
        if (a.cover(xc, c) != Tri::All) return absent("x.V leaves the domain");
        Cell img = a.image(xc, c);
        if (!is_open_cell(a.space(), img)) return absent("x.V is not open in the space");
        w.image.push_back(img);
      }
      return {w, "restricted to " + describe_subgroup(g, v)};
    }
    case ActionKind::Trivial:
      if (is_finite_group(g) && g.elements().size() <= 1) return absent("no catalog rule for the trivial group");
      return absent("p -> x.p is not injective");
    default: return absent("no catalog rule applies");
  }
}

}  // namespace

LocalHomeoResult locally_homeomorphic_witness(const Action& a, const Point& x) {
  if (!a.in_space(x)) return absent("point is not in the space");
  return witness_rec(a, x);
}

}  // namespace locpoly
