#include "locpoly/space.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace locpoly {

namespace {

template <class T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Cell ball_part(const Cell& c) { return Cell{0, c.center, c.level, {}}; }

bool ball_contains(std::int64_t p, const Cell& b, const Rational& x) {
  if (b.level == kWholeLevel) return true;
  if (b.level == kPointLevel) return x == b.center;
  return valuation(x - b.center, p) >= b.level;
}

bool ball_subset(std::int64_t p, const Cell& a, const Cell& b) {
  if (b.level == kWholeLevel) return true;
  if (a.level == kWholeLevel) return false;
  if (b.level == kPointLevel) return a.level == kPointLevel && a.center == b.center;
  return a.level >= b.level && ball_contains(p, b, a.center);
}

std::vector<Cell> ball_children(std::int64_t p, const Cell& b) {
  if (b.level == kWholeLevel) throw Error("cannot refine the whole line into finitely many cells");
  if (b.level == kPointLevel) return {b};
  std::vector<Cell> out;
  Rational step = power(p, b.level);
  for (std::int64_t j = 0; j < p; ++j) out.push_back(make_ball(p, b.center + Rational(j) * step, b.level + 1));
  return out;
}

// Leaves of the ball tree spanned by a set of balls.
void refine_ball_rec(std::int64_t p, const Cell& b, const std::vector<Cell>& inside, std::vector<Cell>& out) {
  if (inside.empty()) {
    out.push_back(b);
    return;
  }
  if (b.level == kPointLevel || b.level == kWholeLevel)
    throw Error("cannot refine a point or the whole line against smaller cells");
  for (const Cell& ch : ball_children(p, b)) {
    std::vector<Cell> sub;
    for (const Cell& x : inside)
      if (ball_subset(p, x, ch) && !(x == ch)) sub.push_back(x);
    refine_ball_rec(p, ch, sub, out);
  }
}

std::vector<Cell> refine_balls(std::int64_t p, std::vector<Cell> balls) {
  std::sort(balls.begin(), balls.end());
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
  std::vector<Cell> out;
  for (const Cell& b : balls) {
    bool is_root = true;
    for (const Cell& o : balls)
      if (!(o == b) && ball_subset(p, b, o)) {
        is_root = false;
        break;
      }
    if (!is_root) continue;
    std::vector<Cell> inside;
    for (const Cell& o : balls)
      if (!(o == b) && ball_subset(p, o, b)) inside.push_back(o);
    refine_ball_rec(p, b, inside, out);
  }
  return out;
}

LabeledCells merge_balls(std::int64_t p, const LabeledCells& terms) {
  std::map<std::int64_t, LabeledCells> buckets;
  for (const auto& t : terms) {
    if (t.first.level == kPointLevel || t.first.level == kWholeLevel)
      throw Error("points and the whole line cannot be labeled cells");
    buckets[t.first.level].push_back(t);
  }
  LabeledCells out;
  while (!buckets.empty()) {
    auto it = std::prev(buckets.end());
    std::int64_t L = it->first;
    LabeledCells items = std::move(it->second);
    buckets.erase(it);
    std::map<Cell, LabeledCells> groups;
    for (auto& item : items) groups[make_ball(p, item.first.center, L - 1)].push_back(item);
    for (auto& [parent, group] : groups) {
      bool uniform = static_cast<std::int64_t>(group.size()) == p;
      for (const auto& g : group) uniform = uniform && g.second == group[0].second;
      if (uniform) {
        buckets[L - 1].push_back({parent, group[0].second});
      } else {
        for (auto& g : group) out.push_back(g);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool operator<(const Point& a, const Point& b) {
  if (a.index != b.index) return a.index < b.index;
  if (a.value != b.value) return a.value < b.value;
  return lex_less(a.parts, b.parts);
}

bool operator<(const Cell& a, const Cell& b) {
  if (a.index != b.index) return a.index < b.index;
  if (a.level != b.level) return a.level < b.level;
  if (a.center != b.center) return a.center < b.center;
  return lex_less(a.parts, b.parts);
}

Space Space::finite(std::int64_t n) {
  if (n < 0) throw Error("finite space needs a nonnegative size");
  return Space(std::make_shared<const Node>(Node{SpaceKind::Finite, n, 0, {}}));
}
Space Space::integers() { return Space(std::make_shared<const Node>(Node{SpaceKind::Integers, 0, 0, {}})); }
Space Space::padic_line(std::int64_t p) {
  if (!is_prime(p)) throw Error("p-adic line needs a prime, got " + std::to_string(p));
  return Space(std::make_shared<const Node>(Node{SpaceKind::PAdicLine, 0, p, {}}));
}
Space Space::affine(std::int64_t p) {
  if (!is_prime(p)) throw Error("affine space needs a prime, got " + std::to_string(p));
  return Space(std::make_shared<const Node>(Node{SpaceKind::Affine, 0, p, {}}));
}
Space Space::product(const Space& a, const Space& b) {
  return Space(std::make_shared<const Node>(Node{SpaceKind::Product, 0, 0, {a, b}}));
}

const Space& Space::first() const {
  if (kind() != SpaceKind::Product) throw Error("not a product space");
  return node_->parts[0];
}
const Space& Space::second() const {
  if (kind() != SpaceKind::Product) throw Error("not a product space");
  return node_->parts[1];
}

bool operator==(const Space& a, const Space& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.prime() != b.prime()) return false;
  if (a.kind() == SpaceKind::Product) return a.first() == b.first() && a.second() == b.second();
  return true;
}

std::string Space::describe() const {
  switch (kind()) {
    case SpaceKind::Finite: return "finite(" + std::to_string(size()) + ")";
    case SpaceKind::Integers: return "Z";
    case SpaceKind::PAdicLine: return "Q" + std::to_string(prime());
    case SpaceKind::Affine: return "affine(" + std::to_string(prime()) + ")";
    case SpaceKind::Product: return "(" + first().describe() + " x " + second().describe() + ")";
  }
  return "?";
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::None || b == Tri::None) return Tri::None;
  if (a == Tri::All && b == Tri::All) return Tri::All;
  return Tri::Mixed;
}

Cell make_ball(std::int64_t p, const Rational& center, std::int64_t level) {
  if (level == kPointLevel) return Cell{0, center, level, {}};
  if (level == kWholeLevel) return Cell{0, Rational(0), level, {}};
  Rational scale = power(p, level);
  Rational c = center - scale * (center / scale).floor();
  return Cell{0, c, level, {}};
}

Cell make_affine_cell(std::int64_t p, std::int64_t k, const Rational& center, std::int64_t level) {
  Cell b = make_ball(p, center, level);
  b.index = k;
  return b;
}

Cell make_pair_cell(Cell a, Cell b) { return Cell{0, Rational(0), 0, {std::move(a), std::move(b)}}; }
Cell make_point_cell(std::int64_t i) { return Cell{i, Rational(0), 0, {}}; }

void validate_point(const Space& s, const Point& x) {
  switch (s.kind()) {
    case SpaceKind::Finite:
      if (x.index < 0 || x.index >= s.size() || !x.parts.empty())
        throw Error("point " + std::to_string(x.index) + " outside " + s.describe());
      return;
    case SpaceKind::Integers:
      if (!x.parts.empty()) throw Error("malformed integer point");
      return;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: {
      if (!x.parts.empty()) throw Error("malformed p-adic point");
      BigInt d = x.value.den();
      BigInt p(s.prime());
      while (d % p == 0) d /= p;
      if (d != 1) throw Error("value " + x.value.str() + " is not in Z[1/" + std::to_string(s.prime()) + "]");
      if (s.kind() == SpaceKind::PAdicLine && x.index != 0) throw Error("malformed p-adic point");
      return;
    }
    case SpaceKind::Product:
      if (x.parts.size() != 2) throw Error("product point needs two parts");
      validate_point(s.first(), x.parts[0]);
      validate_point(s.second(), x.parts[1]);
      return;
  }
}

void validate_cell(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
      if (c.index < 0 || c.index >= s.size() || !c.parts.empty())
        throw Error("cell " + std::to_string(c.index) + " outside " + s.describe());
      return;
    case SpaceKind::Integers:
      if (!c.parts.empty()) throw Error("malformed integer cell");
      return;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: {
      if (!c.parts.empty()) throw Error("malformed ball");
      if (s.kind() == SpaceKind::PAdicLine && c.index != 0) throw Error("malformed ball");
      Point centre = Point::padic(c.center);
      validate_point(Space::padic_line(s.prime()), centre);
      if (!(make_ball(s.prime(), c.center, c.level).center == c.center))
        throw Error("ball center " + c.center.str() + " is not canonical for level " + std::to_string(c.level));
      return;
    }
    case SpaceKind::Product:
      if (c.parts.size() != 2) throw Error("product cell needs two parts");
      validate_cell(s.first(), c.parts[0]);
      validate_cell(s.second(), c.parts[1]);
      return;
  }
}

Cell point_cell(const Space& s, const Point& x) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return make_point_cell(x.index);
    case SpaceKind::PAdicLine: return Cell{0, x.value, kPointLevel, {}};
    case SpaceKind::Affine: return Cell{x.index, x.value, kPointLevel, {}};
    case SpaceKind::Product:
      return make_pair_cell(point_cell(s.first(), x.parts.at(0)), point_cell(s.second(), x.parts.at(1)));
  }
  return {};
}

Cell whole_cell(const Space& s) {
  switch (s.kind()) {
    case SpaceKind::PAdicLine: return Cell{0, Rational(0), kWholeLevel, {}};
    case SpaceKind::Product: return make_pair_cell(whole_cell(s.first()), whole_cell(s.second()));
    default: throw Error("space " + s.describe() + " has no single whole cell");
  }
}

bool contains(const Space& s, const Cell& c, const Point& x) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return c.index == x.index;
    case SpaceKind::PAdicLine: return ball_contains(s.prime(), c, x.value);
    case SpaceKind::Affine: return c.index == x.index && ball_contains(s.prime(), c, x.value);
    case SpaceKind::Product:
      return contains(s.first(), c.parts[0], x.parts[0]) && contains(s.second(), c.parts[1], x.parts[1]);
  }
  return false;
}

bool subset(const Space& s, const Cell& a, const Cell& b) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return a.index == b.index;
    case SpaceKind::PAdicLine: return ball_subset(s.prime(), a, b);
    case SpaceKind::Affine: return a.index == b.index && ball_subset(s.prime(), a, b);
    case SpaceKind::Product:
      return subset(s.first(), a.parts[0], b.parts[0]) && subset(s.second(), a.parts[1], b.parts[1]);
  }
  return false;
}

std::optional<Cell> intersect(const Space& s, const Cell& a, const Cell& b) {
  if (s.kind() == SpaceKind::Product) {
    auto x = intersect(s.first(), a.parts[0], b.parts[0]);
    if (!x) return std::nullopt;
    auto y = intersect(s.second(), a.parts[1], b.parts[1]);
    if (!y) return std::nullopt;
    return make_pair_cell(*x, *y);
  }
  if (subset(s, a, b)) return a;
  if (subset(s, b, a)) return b;
  return std::nullopt;
}

bool is_atomic(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return true;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: return c.level == kPointLevel;
    case SpaceKind::Product: return is_atomic(s.first(), c.parts[0]) && is_atomic(s.second(), c.parts[1]);
  }
  return true;
}

bool is_compact(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return true;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: return c.level != kWholeLevel;
    case SpaceKind::Product: return is_compact(s.first(), c.parts[0]) && is_compact(s.second(), c.parts[1]);
  }
  return false;
}

bool is_function_cell(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return true;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: return c.level != kWholeLevel && c.level != kPointLevel;
    case SpaceKind::Product:
      return is_function_cell(s.first(), c.parts[0]) && is_function_cell(s.second(), c.parts[1]);
  }
  return false;
}

std::vector<Cell> children(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return {c};
    case SpaceKind::PAdicLine: return ball_children(s.prime(), c);
    case SpaceKind::Affine: {
      std::vector<Cell> out = ball_children(s.prime(), ball_part(c));
      for (auto& x : out) x.index = c.index;
      return out;
    }
    case SpaceKind::Product: {
      std::vector<Cell> out;
      for (const Cell& a : children(s.first(), c.parts[0]))
        for (const Cell& b : children(s.second(), c.parts[1])) out.push_back(make_pair_cell(a, b));
      return out;
    }
  }
  return {};
}

Point representative(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return Point::at(c.index);
    case SpaceKind::PAdicLine: return Point::padic(c.center);
    case SpaceKind::Affine: return Point::affine(c.index, c.center);
    case SpaceKind::Product:
      return Point::pair(representative(s.first(), c.parts[0]), representative(s.second(), c.parts[1]));
  }
  return {};
}

Rational cover_measure(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return Rational(1);
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine:
      if (c.level == kWholeLevel) throw Error("the whole line has no finite cover measure");
      if (c.level == kPointLevel) return Rational(1);
      return power(s.prime(), -c.level);
    case SpaceKind::Product: return cover_measure(s.first(), c.parts[0]) * cover_measure(s.second(), c.parts[1]);
  }
  return Rational(0);
}

std::int64_t finest_level(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return kWholeLevel;
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine:
      return (c.level == kPointLevel || c.level == kWholeLevel) ? kWholeLevel : c.level;
    case SpaceKind::Product:
      return std::max(finest_level(s.first(), c.parts[0]), finest_level(s.second(), c.parts[1]));
  }
  return kWholeLevel;
}

std::vector<Cell> cells_at_level(const Space& s, const Cell& c, std::int64_t L) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return {c};
    case SpaceKind::PAdicLine:
    case SpaceKind::Affine: {
      if (c.level == kPointLevel || c.level >= L) return {c};
      if (c.level == kWholeLevel) throw Error("cannot enumerate the whole line");
      std::vector<Cell> cur{c};
      for (std::int64_t l = c.level; l < L; ++l) {
        std::vector<Cell> next;
        for (const Cell& x : cur)
          for (Cell& y : children(s, x)) next.push_back(std::move(y));
        cur = std::move(next);
      }
      return cur;
    }
    case SpaceKind::Product: {
      std::vector<Cell> out;
      for (const Cell& a : cells_at_level(s.first(), c.parts[0], L))
        for (const Cell& b : cells_at_level(s.second(), c.parts[1], L)) out.push_back(make_pair_cell(a, b));
      return out;
    }
  }
  return {};
}

std::vector<Cell> common_refinement(const Space& s, const std::vector<Cell>& cells) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: {
      std::set<Cell> uniq(cells.begin(), cells.end());
      return {uniq.begin(), uniq.end()};
    }
    case SpaceKind::PAdicLine: return refine_balls(s.prime(), cells);
    case SpaceKind::Affine: {
      std::map<std::int64_t, std::vector<Cell>> by_index;
      for (const Cell& c : cells) by_index[c.index].push_back(ball_part(c));
      std::vector<Cell> out;
      for (auto& [k, balls] : by_index)
        for (Cell& b : refine_balls(s.prime(), balls)) {
          b.index = k;
          out.push_back(std::move(b));
        }
      return out;
    }
    case SpaceKind::Product: {
      std::vector<Cell> as, bs;
      for (const Cell& c : cells) {
        as.push_back(c.parts[0]);
        bs.push_back(c.parts[1]);
      }
      std::vector<Cell> pa = common_refinement(s.first(), as);
      std::vector<Cell> pb = common_refinement(s.second(), bs);
      std::set<Cell> out;
      for (const Cell& c : cells) {
        std::vector<const Cell*> in_b;
        for (const Cell& b : pb)
          if (subset(s.second(), b, c.parts[1])) in_b.push_back(&b);
        for (const Cell& a : pa) {
          if (!subset(s.first(), a, c.parts[0])) continue;
          for (const Cell* b : in_b) out.insert(make_pair_cell(a, *b));
        }
      }
      return {out.begin(), out.end()};
    }
  }
  return {};
}

Tri classify(const Space& s, const Cell& c, const std::vector<Cell>& cells) {
  std::vector<Cell> inter;
  for (const Cell& y : cells) {
    if (subset(s, c, y)) return Tri::All;
    if (auto i = intersect(s, c, y)) inter.push_back(*i);
  }
  if (inter.empty()) return Tri::None;
  if (!is_compact(s, c)) return Tri::Mixed;
  Rational total(0);
  for (const Cell& i : inter) total += cover_measure(s, i);
  return total == cover_measure(s, c) ? Tri::All : Tri::Mixed;
}

std::string describe_point(const Space& s, const Point& x) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return std::to_string(x.index);
    case SpaceKind::PAdicLine: return x.value.str();
    case SpaceKind::Affine: return "(" + std::to_string(s.prime()) + "^" + std::to_string(x.index) + ", " + x.value.str() + ")";
    case SpaceKind::Product:
      return "(" + describe_point(s.first(), x.parts[0]) + ", " + describe_point(s.second(), x.parts[1]) + ")";
  }
  return "?";
}

std::string describe_cell(const Space& s, const Cell& c) {
  auto ball = [&](const Cell& b) -> std::string {
    if (b.level == kWholeLevel) return "Q" + std::to_string(s.prime());
    if (b.level == kPointLevel) return "{" + b.center.str() + "}";
    return b.center.str() + "+" + std::to_string(s.prime()) + "^" + std::to_string(b.level) + "Z" + std::to_string(s.prime());
  };
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return "{" + std::to_string(c.index) + "}";
    case SpaceKind::PAdicLine: return ball(c);
    case SpaceKind::Affine: return "{" + std::to_string(s.prime()) + "^" + std::to_string(c.index) + "}x(" + ball(c) + ")";
    case SpaceKind::Product:
      return describe_cell(s.first(), c.parts[0]) + " x " + describe_cell(s.second(), c.parts[1]);
  }
  return "?";
}

LabeledCells canonical_labels(const Space& s, const LabeledCells& terms) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: {
      LabeledCells out = terms;
      std::sort(out.begin(), out.end());
      return out;
    }
    case SpaceKind::PAdicLine: return merge_balls(s.prime(), terms);
    case SpaceKind::Affine: {
      std::map<std::int64_t, LabeledCells> by_index;
      for (const auto& t : terms) by_index[t.first.index].push_back({ball_part(t.first), t.second});
      LabeledCells out;
      for (auto& [k, list] : by_index)
        for (auto& t : merge_balls(s.prime(), list)) {
          t.first.index = k;
          out.push_back(std::move(t));
        }
      std::sort(out.begin(), out.end());
      return out;
    }
    case SpaceKind::Product: {
      const Space& A = s.first();
      const Space& B = s.second();
      std::vector<Cell> acomps;
      for (const auto& t : terms) acomps.push_back(t.first.parts[0]);
      std::vector<Cell> pa = common_refinement(A, acomps);
      std::map<LabeledCells, int> intern;
      std::vector<LabeledCells> table;
      LabeledCells alist;
      for (const Cell& a : pa) {
        LabeledCells blist;
        for (const auto& t : terms)
          if (subset(A, a, t.first.parts[0])) blist.push_back({t.first.parts[1], t.second});
        if (blist.empty()) continue;
        blist = canonical_labels(B, blist);
        auto [it, inserted] = intern.emplace(blist, static_cast<int>(table.size()));
        if (inserted) table.push_back(blist);
        alist.push_back({a, it->second});
      }
      alist = canonical_labels(A, alist);
      LabeledCells out;
      for (const auto& [a, id] : alist)
        for (const auto& [b, v] : table[static_cast<std::size_t>(id)]) out.push_back({make_pair_cell(a, b), v});
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

}  // namespace locpoly
