#include "locpoly/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace locpoly {

namespace {

std::int64_t shift_level(std::int64_t level, std::int64_t k) {
  if (level == kPointLevel || level == kWholeLevel) return level;
  return level + k;
}

}  // namespace

Group Group::finite(std::string name, std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error("finite group needs a nonempty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw Error("group table for " + name + " is not square");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : row) {
      if (v < 0 || v >= n) throw Error("group table for " + name + " has an entry out of range");
      if (seen[static_cast<std::size_t>(v)]) throw Error("group table for " + name + " is not a latin square");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b) ok = at(a, b) == b && at(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw Error("group table for " + name + " has no identity");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error("group table for " + name + " is not associative at (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
  std::vector<int> inverse(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(a, b) == e) inverse[static_cast<std::size_t>(a)] = b;
  Node node{GroupKind::Finite, 0, std::move(name), std::move(table), std::move(inverse), e, {}, Space::finite(n)};
  return Group(std::make_shared<const Node>(std::move(node)));
}

Group Group::integers() {
  return Group(std::make_shared<const Node>(Node{GroupKind::Integers, 0, "Z", {}, {}, 0, {}, Space::integers()}));
}

Group Group::padic_add(std::int64_t p) {
  Space s = Space::padic_line(p);
  return Group(std::make_shared<const Node>(Node{GroupKind::PAdicAdditive, p, "Q" + std::to_string(p), {}, {}, 0, {}, s}));
}

Group Group::padic_affine(std::int64_t p) {
  Space s = Space::affine(p);
  return Group(std::make_shared<const Node>(Node{GroupKind::PAdicAffine, p, "Aff" + std::to_string(p), {}, {}, 0, {}, s}));
}

Group Group::product(const Group& a, const Group& b) {
  Space s = Space::product(a.space(), b.space());
  return Group(std::make_shared<const Node>(Node{GroupKind::Product, 0, "", {}, {}, 0, {a, b}, s}));
}

Group Group::opposite(const Group& g) {
  if (g.kind() == GroupKind::Opposite) return g.base();
  return Group(std::make_shared<const Node>(Node{GroupKind::Opposite, 0, "", {}, {}, 0, {g}, g.space()}));
}

std::int64_t Group::prime() const {
  switch (kind()) {
    case GroupKind::PAdicAdditive:
    case GroupKind::PAdicAffine: return node_->p;
    case GroupKind::Opposite: return base().prime();
    default: throw Error("group " + describe() + " has no prime");
  }
}

std::int64_t Group::order() const {
  switch (kind()) {
    case GroupKind::Finite: return static_cast<std::int64_t>(node_->table.size());
    case GroupKind::Opposite: return base().order();
    case GroupKind::Product: return first().order() * second().order();
    default: throw Error("group " + describe() + " is infinite");
  }
}

const Group& Group::first() const {
  if (kind() != GroupKind::Product) throw Error("not a product group");
  return node_->parts[0];
}
const Group& Group::second() const {
  if (kind() != GroupKind::Product) throw Error("not a product group");
  return node_->parts[1];
}
const Group& Group::base() const {
  if (kind() != GroupKind::Opposite) throw Error("not an opposite group");
  return node_->parts[0];
}

bool Group::is_discrete() const {
  switch (kind()) {
    case GroupKind::Finite:
    case GroupKind::Integers: return true;
    case GroupKind::PAdicAdditive:
    case GroupKind::PAdicAffine: return false;
    case GroupKind::Product: return first().is_discrete() && second().is_discrete();
    case GroupKind::Opposite: return base().is_discrete();
  }
  return false;
}

std::string Group::describe() const {
  switch (kind()) {
    case GroupKind::Finite:
    case GroupKind::Integers:
    case GroupKind::PAdicAdditive:
    case GroupKind::PAdicAffine: return name();
    case GroupKind::Product: return "(" + first().describe() + " x " + second().describe() + ")";
    case GroupKind::Opposite: return "op(" + base().describe() + ")";
  }
  return "?";
}

Point Group::identity() const {
  switch (kind()) {
    case GroupKind::Finite: return Point::at(node_->identity);
    case GroupKind::Integers: return Point::at(0);
    case GroupKind::PAdicAdditive: return Point::padic(Rational(0));
    case GroupKind::PAdicAffine: return Point::affine(0, Rational(0));
    case GroupKind::Product: return Point::pair(first().identity(), second().identity());
    case GroupKind::Opposite: return base().identity();
  }
  return {};
}

Point Group::mul(const Point& a, const Point& b) const {
  switch (kind()) {
    case GroupKind::Finite:
      return Point::at(node_->table.at(static_cast<std::size_t>(a.index)).at(static_cast<std::size_t>(b.index)));
    case GroupKind::Integers: return Point::at(a.index + b.index);
    case GroupKind::PAdicAdditive: return Point::padic(a.value + b.value);
    case GroupKind::PAdicAffine: return Point::affine(a.index + b.index, a.value + power(node_->p, a.index) * b.value);
    case GroupKind::Product:
      return Point::pair(first().mul(a.parts.at(0), b.parts.at(0)), second().mul(a.parts.at(1), b.parts.at(1)));
    case GroupKind::Opposite: return base().mul(b, a);
  }
  return {};
}

Point Group::inv(const Point& a) const {
  switch (kind()) {
    case GroupKind::Finite: return Point::at(node_->inverse.at(static_cast<std::size_t>(a.index)));
    case GroupKind::Integers: return Point::at(-a.index);
    case GroupKind::PAdicAdditive: return Point::padic(-a.value);
    case GroupKind::PAdicAffine: return Point::affine(-a.index, -(power(node_->p, -a.index) * a.value));
    case GroupKind::Product: return Point::pair(first().inv(a.parts.at(0)), second().inv(a.parts.at(1)));
    case GroupKind::Opposite: return base().inv(a);
  }
  return {};
}

void Group::validate(const Point& a) const { validate_point(space(), a); }

std::vector<Point> Group::elements() const {
  switch (kind()) {
    case GroupKind::Finite: {
      std::vector<Point> out;
      for (std::int64_t i = 0; i < order(); ++i) out.push_back(Point::at(i));
      return out;
    }
    case GroupKind::Product: {
      std::vector<Point> out;
      for (const Point& a : first().elements())
        for (const Point& b : second().elements()) out.push_back(Point::pair(a, b));
      return out;
    }
    case GroupKind::Opposite: return base().elements();
    default: throw Error("group " + describe() + " has no finite element list");
  }
}

Cell Group::mul_cells(const Cell& a, const Cell& b) const {
  switch (kind()) {
    case GroupKind::Finite:
      return make_point_cell(node_->table.at(static_cast<std::size_t>(a.index)).at(static_cast<std::size_t>(b.index)));
    case GroupKind::Integers: return make_point_cell(a.index + b.index);
    case GroupKind::PAdicAdditive: return make_ball(node_->p, a.center + b.center, std::min(a.level, b.level));
    case GroupKind::PAdicAffine: {
      std::int64_t level = std::min(a.level, shift_level(b.level, a.index));
      return make_affine_cell(node_->p, a.index + b.index, a.center + power(node_->p, a.index) * b.center, level);
    }
    case GroupKind::Product:
      return make_pair_cell(first().mul_cells(a.parts.at(0), b.parts.at(0)), second().mul_cells(a.parts.at(1), b.parts.at(1)));
    case GroupKind::Opposite: return base().mul_cells(b, a);
  }
  return {};
}

Cell Group::inv_cell(const Cell& a) const {
  switch (kind()) {
    case GroupKind::Finite: return make_point_cell(node_->inverse.at(static_cast<std::size_t>(a.index)));
    case GroupKind::Integers: return make_point_cell(-a.index);
    case GroupKind::PAdicAdditive: return make_ball(node_->p, -a.center, a.level);
    case GroupKind::PAdicAffine:
      return make_affine_cell(node_->p, -a.index, -(power(node_->p, -a.index) * a.center), shift_level(a.level, -a.index));
    case GroupKind::Product: return make_pair_cell(first().inv_cell(a.parts.at(0)), second().inv_cell(a.parts.at(1)));
    case GroupKind::Opposite: return base().inv_cell(a);
  }
  return {};
}

Rational Group::haar(const Cell& c) const {
  switch (kind()) {
    case GroupKind::Finite:
    case GroupKind::Integers: return Rational(1);
    case GroupKind::PAdicAdditive:
      if (c.level == kWholeLevel) throw Error("Q_p has infinite measure");
      if (c.level == kPointLevel) return Rational(0);
      return power(node_->p, -c.level);
    case GroupKind::PAdicAffine:
      if (c.level == kWholeLevel) throw Error("an unbounded affine cell has infinite measure");
      if (c.level == kPointLevel) return Rational(0);
      return power(node_->p, c.index - c.level);
    case GroupKind::Product: return first().haar(c.parts.at(0)) * second().haar(c.parts.at(1));
    case GroupKind::Opposite: return base().haar(base().inv_cell(c));
  }
  return Rational(0);
}

Rational Group::modular(const Point& g) const {
  switch (kind()) {
    case GroupKind::Finite:
    case GroupKind::Integers:
    case GroupKind::PAdicAdditive: return Rational(1);
    case GroupKind::PAdicAffine: return power(node_->p, g.index);
    case GroupKind::Product: return first().modular(g.parts.at(0)) * second().modular(g.parts.at(1));
    case GroupKind::Opposite: return Rational(1) / base().modular(g);
  }
  return Rational(1);
}

std::optional<std::vector<Cell>> Group::whole_cells() const {
  switch (kind()) {
    case GroupKind::Finite: {
      std::vector<Cell> out;
      for (std::int64_t i = 0; i < order(); ++i) out.push_back(make_point_cell(i));
      return out;
    }
    case GroupKind::Integers:
    case GroupKind::PAdicAffine: return std::nullopt;
    case GroupKind::PAdicAdditive: return std::vector<Cell>{whole_cell(space())};
    case GroupKind::Product: {
      auto a = first().whole_cells();
      auto b = second().whole_cells();
      if (!a || !b) return std::nullopt;
      std::vector<Cell> out;
      for (const Cell& x : *a)
        for (const Cell& y : *b) out.push_back(make_pair_cell(x, y));
      return out;
    }
    case GroupKind::Opposite: return base().whole_cells();
  }
  return std::nullopt;
}

bool operator==(const Group& a, const Group& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GroupKind::Finite: return a.table() == b.table();
    case GroupKind::Integers: return true;
    case GroupKind::PAdicAdditive:
    case GroupKind::PAdicAffine: return a.node_->p == b.node_->p;
    case GroupKind::Product: return a.first() == b.first() && a.second() == b.second();
    case GroupKind::Opposite: return a.base() == b.base();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subgroups

Subgroup Subgroup::finite_set(std::vector<Point> elts) {
  std::sort(elts.begin(), elts.end());
  elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
  return {SubgroupKind::FiniteSet, 0, std::move(elts), {}};
}

namespace {

const Group& strip_opposite(const Group& g) { return g.kind() == GroupKind::Opposite ? g.base() : g; }

// Components of a subgroup of a product group.
std::pair<Subgroup, Subgroup> split(const Subgroup& h) {
  switch (h.kind) {
    case SubgroupKind::Whole: return {Subgroup::whole(), Subgroup::whole()};
    case SubgroupKind::Trivial: return {Subgroup::trivial(), Subgroup::trivial()};
    case SubgroupKind::Product: return {h.parts.at(0), h.parts.at(1)};
    default: throw Error("subgroup handle does not match a product group");
  }
}

std::vector<Point> finite_elements(const Group& g, const Subgroup& h) {
  switch (h.kind) {
    case SubgroupKind::Whole: return g.elements();
    case SubgroupKind::Trivial: return {g.identity()};
    case SubgroupKind::FiniteSet: return h.elements;
    default: throw Error("subgroup " + describe_subgroup(g, h) + " has no finite element list");
  }
}

}  // namespace

void validate_subgroup(const Group& g0, const Subgroup& h) {
  const Group& g = strip_opposite(g0);
  if (g.kind() == GroupKind::Product) {
    if (h.kind == SubgroupKind::FiniteSet) {
      for (const Point& x : h.elements) g.validate(x);
    } else {
      auto [a, b] = split(h);
      validate_subgroup(g.first(), a);
      validate_subgroup(g.second(), b);
      return;
    }
  }
  switch (h.kind) {
    case SubgroupKind::Whole:
    case SubgroupKind::Trivial: return;
    case SubgroupKind::FiniteSet: {
      if (h.elements.empty()) throw Error("empty subgroup");
      for (const Point& x : h.elements) g.validate(x);
      std::set<Point> s(h.elements.begin(), h.elements.end());
      if (!s.count(g.identity())) throw Error("subgroup misses the identity");
      for (const Point& x : h.elements) {
        if (!s.count(g.inv(x))) throw Error("subgroup not closed under inverse");
        for (const Point& y : h.elements)
          if (!s.count(g.mul(x, y))) throw Error("subgroup not closed under the group law");
      }
      return;
    }
    case SubgroupKind::Ball:
      if (g.kind() != GroupKind::PAdicAdditive) throw Error("ball subgroup needs an additive p-adic group");
      return;
    case SubgroupKind::AffineBall:
    case SubgroupKind::AffineUnipotent:
      if (g.kind() != GroupKind::PAdicAffine) throw Error("affine subgroup needs an affine p-adic group");
      return;
    case SubgroupKind::Product: throw Error("product subgroup needs a product group");
  }
}

std::string describe_subgroup(const Group& g0, const Subgroup& h) {
  const Group& g = strip_opposite(g0);
  switch (h.kind) {
    case SubgroupKind::Whole: return "whole";
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::FiniteSet: {
      std::string out = "{";
      for (std::size_t i = 0; i < h.elements.size(); ++i)
        out += (i ? "," : "") + describe_point(g.space(), h.elements[i]);
      return out + "}";
    }
    case SubgroupKind::Ball: return "ball(" + std::to_string(h.level) + ")";
    case SubgroupKind::AffineBall: return "affine_ball(" + std::to_string(h.level) + ")";
    case SubgroupKind::AffineUnipotent: return "affine_unipotent";
    case SubgroupKind::Product:
      if (g.kind() != GroupKind::Product) return "product(?)";
      return "(" + describe_subgroup(g.first(), h.parts[0]) + " x " + describe_subgroup(g.second(), h.parts[1]) + ")";
  }
  return "?";
}

bool subgroup_contains(const Group& g0, const Subgroup& h, const Point& x) {
  const Group& g = strip_opposite(g0);
  switch (h.kind) {
    case SubgroupKind::Whole: return true;
    case SubgroupKind::Trivial: return x == g.identity();
    case SubgroupKind::FiniteSet: return std::binary_search(h.elements.begin(), h.elements.end(), x);
    case SubgroupKind::Ball: return valuation(x.value, g.prime()) >= h.level;
    case SubgroupKind::AffineBall: return x.index == 0 && valuation(x.value, g.prime()) >= h.level;
    case SubgroupKind::AffineUnipotent: return x.index == 0;
    case SubgroupKind::Product:
      return subgroup_contains(g.first(), h.parts.at(0), x.parts.at(0)) &&
             subgroup_contains(g.second(), h.parts.at(1), x.parts.at(1));
  }
  return false;
}

std::vector<Cell> subgroup_cells(const Group& g0, const Subgroup& h) {
  const Group& g = strip_opposite(g0);
  if (g.kind() == GroupKind::Product && h.kind != SubgroupKind::FiniteSet) {
    auto [a, b] = split(h);
    std::vector<Cell> out;
    for (const Cell& x : subgroup_cells(g.first(), a))
      for (const Cell& y : subgroup_cells(g.second(), b)) out.push_back(make_pair_cell(x, y));
    return out;
  }
  switch (h.kind) {
    case SubgroupKind::Whole: {
      auto cells = g.whole_cells();
      if (!cells) throw Error("group " + g.describe() + " is not a finite union of cells");
      return *cells;
    }
    case SubgroupKind::Trivial: return {point_cell(g.space(), g.identity())};
    case SubgroupKind::FiniteSet: {
      std::vector<Cell> out;
      for (const Point& x : h.elements) out.push_back(point_cell(g.space(), x));
      return out;
    }
    case SubgroupKind::Ball: return {make_ball(g.prime(), Rational(0), h.level)};
    case SubgroupKind::AffineBall: return {make_affine_cell(g.prime(), 0, Rational(0), h.level)};
    case SubgroupKind::AffineUnipotent: return {make_affine_cell(g.prime(), 0, Rational(0), kWholeLevel)};
    case SubgroupKind::Product: break;
  }
  throw Error("subgroup handle does not match group " + g.describe());
}

OpenSet subgroup_set(const Group& g, const Subgroup& h) {
  if (h.kind == SubgroupKind::Whole) return OpenSet::all(g.space());
  return OpenSet::of(g.space(), subgroup_cells(g, h));
}

bool is_compact_open(const Group& g0, const Subgroup& h) {
  const Group& g = strip_opposite(g0);
  switch (g.kind()) {
    case GroupKind::Finite: return true;
    case GroupKind::Integers: return h.kind == SubgroupKind::Trivial || h.kind == SubgroupKind::FiniteSet;
    case GroupKind::PAdicAdditive: return h.kind == SubgroupKind::Ball;
    case GroupKind::PAdicAffine: return h.kind == SubgroupKind::AffineBall;
    case GroupKind::Product: {
      if (h.kind == SubgroupKind::FiniteSet) return g.is_discrete();
      auto [a, b] = split(h);
      return is_compact_open(g.first(), a) && is_compact_open(g.second(), b);
    }
    case GroupKind::Opposite: break;
  }
  return false;
}

bool is_compact_open_in(const Group& g0, const Subgroup& x, const Subgroup& h) {
  const Group& g = strip_opposite(g0);
  switch (h.kind) {
    case SubgroupKind::Whole: return is_compact_open(g, x);
    case SubgroupKind::Trivial: return x.kind == SubgroupKind::Trivial;
    case SubgroupKind::FiniteSet: return subgroup_subset(g, x, h);
    default: break;
  }
  if (g.kind() == GroupKind::Product && x.kind != SubgroupKind::FiniteSet) {
    auto [x1, x2] = split(x);
    auto [h1, h2] = split(h);
    return is_compact_open_in(g.first(), x1, h1) && is_compact_open_in(g.second(), x2, h2);
  }
  return is_compact_open(g, x) && subgroup_subset(g, x, h);
}

bool subgroup_subset(const Group& g0, const Subgroup& a, const Subgroup& b) {
  const Group& g = strip_opposite(g0);
  if (b.kind == SubgroupKind::Whole) return true;
  if (a.kind == SubgroupKind::Trivial) return subgroup_contains(g, b, g.identity());
  if (g.kind() == GroupKind::Product && a.kind != SubgroupKind::FiniteSet && b.kind != SubgroupKind::FiniteSet) {
    auto [a1, a2] = split(a);
    auto [b1, b2] = split(b);
    return subgroup_subset(g.first(), a1, b1) && subgroup_subset(g.second(), a2, b2);
  }
  if (a.kind == SubgroupKind::FiniteSet) {
    for (const Point& x : a.elements)
      if (!subgroup_contains(g, b, x)) return false;
    return true;
  }
  if (a.kind == SubgroupKind::Whole && !g.whole_cells()) return false;
  std::vector<Cell> bc = subgroup_cells(g, b);
  for (const Cell& c : subgroup_cells(g, a))
    if (classify(g.space(), c, bc) != Tri::All) return false;
  return true;
}

Subgroup subgroup_intersection(const Group& g0, const Subgroup& a, const Subgroup& b) {
  const Group& g = strip_opposite(g0);
  if (a.kind == SubgroupKind::Whole) return b;
  if (b.kind == SubgroupKind::Whole) return a;
  if (a.kind == SubgroupKind::Trivial || b.kind == SubgroupKind::Trivial) return Subgroup::trivial();
  if (a.kind == SubgroupKind::FiniteSet || b.kind == SubgroupKind::FiniteSet) {
    const Subgroup& fs = a.kind == SubgroupKind::FiniteSet ? a : b;
    const Subgroup& other = a.kind == SubgroupKind::FiniteSet ? b : a;
    std::vector<Point> keep;
    for (const Point& x : fs.elements)
      if (subgroup_contains(g, other, x)) keep.push_back(x);
    if (keep.size() == 1) return Subgroup::trivial();
    return Subgroup::finite_set(std::move(keep));
  }
  if (g.kind() == GroupKind::Product) {
    auto [a1, a2] = split(a);
    auto [b1, b2] = split(b);
    return Subgroup::product(subgroup_intersection(g.first(), a1, b1), subgroup_intersection(g.second(), a2, b2));
  }
  if (a.kind == SubgroupKind::Ball && b.kind == SubgroupKind::Ball) return Subgroup::ball(std::max(a.level, b.level));
  if (a.kind == SubgroupKind::AffineUnipotent) return b;
  if (b.kind == SubgroupKind::AffineUnipotent) return a;
  if (a.kind == SubgroupKind::AffineBall && b.kind == SubgroupKind::AffineBall)
    return Subgroup::affine_ball(std::max(a.level, b.level));
  throw Error("cannot intersect subgroups " + describe_subgroup(g, a) + " and " + describe_subgroup(g, b));
}

namespace {

constexpr std::size_t kMaxIndex = 1u << 20;

std::vector<Point> finite_transversal(const Group& g, const Subgroup& g0, const Subgroup& g1) {
  std::vector<Point> big = finite_elements(g, g0);
  std::vector<Point> small = finite_elements(g, g1);
  std::sort(big.begin(), big.end());
  std::set<Point> covered;
  std::vector<Point> reps;
  for (const Point& r : big) {
    if (covered.count(r)) continue;
    reps.push_back(r);
    for (const Point& h : small) covered.insert(g.mul(r, h));
  }
  return reps;
}

}  // namespace

std::vector<Point> coset_transversal(const Group& g0, const Subgroup& a, const Subgroup& b) {
  if (!subgroup_subset(g0, b, a))
    throw Error("coset transversal needs " + describe_subgroup(g0, b) + " inside " + describe_subgroup(g0, a));
  const Group& g = strip_opposite(g0);
  if (a.kind == SubgroupKind::Trivial) return {g.identity()};
  switch (g.kind()) {
    case GroupKind::Finite: return finite_transversal(g0, a, b);
    case GroupKind::Integers: {
      if (a.kind == SubgroupKind::Whole) throw Error("Z over a finite subgroup has infinite index");
      return {g.identity()};
    }
    case GroupKind::PAdicAdditive:
    case GroupKind::PAdicAffine: {
      bool affine = g.kind() == GroupKind::PAdicAffine;
      SubgroupKind want = affine ? SubgroupKind::AffineBall : SubgroupKind::Ball;
      if (a.kind != want || (b.kind != want))
        throw Error("transversal of " + describe_subgroup(g, b) + " in " + describe_subgroup(g, a) + " is infinite");
      std::int64_t p = g.prime();
      std::int64_t diff = b.level - a.level;
      long long count = 1;
      for (std::int64_t i = 0; i < diff; ++i) {
        count *= p;
        if (static_cast<std::size_t>(count) > kMaxIndex) throw Error("coset index too large");
      }
      std::vector<Point> out;
      Rational step = power(p, a.level);
      for (long long j = 0; j < count; ++j) {
        Rational v = Rational(j) * step;
        out.push_back(affine ? Point::affine(0, v) : Point::padic(v));
      }
      return out;
    }
    case GroupKind::Product: {
      if (g0.kind() == GroupKind::Opposite && g.first().kind() == GroupKind::Finite)
        return finite_transversal(g0, a, b);
      if (a.kind == SubgroupKind::FiniteSet || b.kind == SubgroupKind::FiniteSet) return finite_transversal(g0, a, b);
      auto [a1, a2] = split(a);
      auto [b1, b2] = split(b);
      std::vector<Point> t1 = coset_transversal(g.first(), a1, b1);
      std::vector<Point> t2 = coset_transversal(g.second(), a2, b2);
      if (t1.size() * t2.size() > kMaxIndex) throw Error("coset index too large");
      std::vector<Point> out;
      for (const Point& x : t1)
        for (const Point& y : t2) out.push_back(Point::pair(x, y));
      return out;
    }
    case GroupKind::Opposite: break;
  }
  throw Error("unsupported transversal");
}

std::vector<Cell> coset_cells(const Group& g, const Point& u, const Subgroup& h) {
  std::vector<Cell> out;
  for (const Cell& c : subgroup_cells(g, h)) out.push_back(g.left_mul(u, c));
  return out;
}

Subgroup level_subgroup(const Group& g0, const Subgroup& h, std::int64_t L) {
  const Group& g = strip_opposite(g0);
  if (h.kind == SubgroupKind::Trivial) return h;
  switch (g.kind()) {
    case GroupKind::Finite:
    case GroupKind::Integers: return Subgroup::trivial();
    case GroupKind::PAdicAdditive:
      if (h.kind != SubgroupKind::Ball) throw Error("level subgroup needs a ball");
      return Subgroup::ball(std::max(h.level, L));
    case GroupKind::PAdicAffine:
      if (h.kind != SubgroupKind::AffineBall) throw Error("level subgroup needs an affine ball");
      return Subgroup::affine_ball(std::max(h.level, L));
    case GroupKind::Product: {
      if (h.kind == SubgroupKind::FiniteSet) return Subgroup::trivial();
      auto [a, b] = split(h);
      return Subgroup::product(level_subgroup(g.first(), a, L), level_subgroup(g.second(), b, L));
    }
    case GroupKind::Opposite: break;
  }
  throw Error("unsupported level subgroup");
}

std::int64_t subgroup_level(const Group& g0, const Subgroup& h) {
  const Group& g = strip_opposite(g0);
  switch (h.kind) {
    case SubgroupKind::Ball:
    case SubgroupKind::AffineBall: return h.level;
    case SubgroupKind::Product:
      return std::max(subgroup_level(g.first(), h.parts.at(0)), subgroup_level(g.second(), h.parts.at(1)));
    default: return kWholeLevel;
  }
}

std::vector<Subgroup> canonical_chain(const Group& g0, std::int64_t max_level) {
  const Group& g = strip_opposite(g0);
  std::vector<Subgroup> out;
  switch (g.kind()) {
    case GroupKind::Finite: return {Subgroup::whole(), Subgroup::trivial()};
    case GroupKind::Integers: return {Subgroup::trivial()};
    case GroupKind::PAdicAdditive:
      for (std::int64_t k = 0; k <= max_level; ++k) out.push_back(Subgroup::ball(k));
      return out;
    case GroupKind::PAdicAffine:
      for (std::int64_t k = 0; k <= max_level; ++k) out.push_back(Subgroup::affine_ball(k));
      return out;
    case GroupKind::Product: {
      std::vector<Subgroup> a = canonical_chain(g.first(), max_level);
      std::vector<Subgroup> b = canonical_chain(g.second(), max_level);
      std::size_t n = std::max(a.size(), b.size());
      for (std::size_t i = 0; i < n; ++i)
        out.push_back(Subgroup::product(a[std::min(i, a.size() - 1)], b[std::min(i, b.size() - 1)]));
      return out;
    }
    case GroupKind::Opposite: break;
  }
  return out;
}

}  // namespace locpoly
