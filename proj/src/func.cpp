#include "locpoly/func.hpp"

#include <algorithm>

namespace locpoly {

namespace {

// Interns scalars so canonical_labels can compare integer labels.
struct ScalarTable {
  std::vector<Scalar> values;
  int intern(const Scalar& v) {
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == v) return static_cast<int>(i);
    values.push_back(v);
    return static_cast<int>(values.size() - 1);
  }
};

std::vector<Func::Term> canonicalize(const Space& s, std::vector<Func::Term> terms) {
  ScalarTable table;
  LabeledCells labeled;
  for (auto& t : terms) {
    if (t.second.is_zero()) continue;
    labeled.push_back({std::move(t.first), table.intern(t.second)});
  }
  std::vector<Func::Term> out;
  for (auto& [c, id] : canonical_labels(s, labeled)) out.push_back({c, table.values[static_cast<std::size_t>(id)]});
  return out;
}

}  // namespace

Func Func::from_terms(const Space& s, std::vector<Term> terms) {
  for (const auto& t : terms) {
    validate_cell(s, t.first);
    if (!is_function_cell(s, t.first))
      throw Error("cell " + describe_cell(s, t.first) + " is not compact open");
  }
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j)
      if (intersect(s, terms[i].first, terms[j].first))
        throw Error("cells " + describe_cell(s, terms[i].first) + " and " + describe_cell(s, terms[j].first) + " overlap");
  return from_disjoint(s, std::move(terms));
}

Func Func::from_disjoint(const Space& s, std::vector<Term> terms) {
  Func f(s);
  f.terms_ = canonicalize(s, std::move(terms));
  return f;
}

Func Func::indicator(const Space& s, const std::vector<Cell>& cells, const Scalar& v) {
  std::vector<Term> terms;
  for (const Cell& c : cells) terms.push_back({c, v});
  return from_disjoint(s, std::move(terms));
}

Scalar Func::evaluate(const Point& x) const {
  for (const auto& [c, v] : terms_)
    if (contains(space_, c, x)) return v;
  return Scalar(0);
}

Scalar Func::value_on(const Cell& c) const {
  for (const auto& [t, v] : terms_) {
    if (subset(space_, c, t)) return v;
    if (intersect(space_, c, t))
      throw Error("cell " + describe_cell(space_, c) + " straddles " + describe_cell(space_, t));
  }
  return Scalar(0);
}

std::vector<Cell> Func::support_cells() const {
  std::vector<Cell> out;
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

OpenSet Func::support() const { return OpenSet::of(space_, support_cells()); }

std::int64_t Func::finest_level() const {
  std::int64_t L = kWholeLevel;
  for (const auto& t : terms_) L = std::max(L, locpoly::finest_level(space_, t.first));
  return L;
}

Func Func::conj() const {
  Func out = *this;
  for (auto& t : out.terms_) t.second = t.second.conj();
  out.terms_ = canonicalize(space_, std::move(out.terms_));
  return out;
}

Func Func::operator-() const { return Scalar(-1) * *this; }

namespace {

template <class Op>
Func combine(const Func& a, const Func& b, Op op) {
  if (!(a.space() == b.space())) throw Error("functions live on different spaces");
  std::vector<Cell> grid = common_grid(a.space(), {a, b});
  std::vector<Func::Term> terms;
  for (const Cell& c : grid) terms.push_back({c, op(a.value_on(c), b.value_on(c))});
  return Func::from_disjoint(a.space(), std::move(terms));
}

}  // namespace

Func operator+(const Func& a, const Func& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return combine(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

Func operator-(const Func& a, const Func& b) { return a + (-b); }

Func operator*(const Func& a, const Func& b) {
  if (a.is_zero() || b.is_zero()) return Func(a.space());
  return combine(a, b, [](const Scalar& x, const Scalar& y) { return x * y; });
}

Func operator*(const Scalar& c, const Func& f) {
  if (c.is_zero()) return Func(f.space());
  std::vector<Func::Term> terms = f.terms();
  for (auto& t : terms) t.second = c * t.second;
  return Func::from_disjoint(f.space(), std::move(terms));
}

std::string Func::describe() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.str() + ")*1[" + describe_cell(space_, c) + "]";
  }
  return out;
}

Func tensor(const Func& a, const Func& b) {
  Space s = Space::product(a.space(), b.space());
  std::vector<Func::Term> terms;
  for (const auto& [x, u] : a.terms())
    for (const auto& [y, v] : b.terms()) terms.push_back({make_pair_cell(x, y), u * v});
  return Func::from_disjoint(s, std::move(terms));
}

Scalar integrate(const Group& g, const Func& f) {
  if (!(f.space() == g.space())) throw Error("function does not live on " + g.describe());
  Scalar total(0);
  for (const auto& [c, v] : f.terms()) total += v * Scalar(g.haar(c));
  return total;
}

Scalar haar_integrate(const Group& g, const Subgroup& g0, const Func& phi) {
  if (!is_compact_open(g, g0)) throw Error("normalized integral needs a compact open subgroup");
  std::vector<Cell> sub = subgroup_cells(g, g0);
  Rational mass(0);
  for (const Cell& c : sub) mass += g.haar(c);
  Scalar total(0);
  for (const auto& [c, v] : phi.terms())
    for (const Cell& s : sub)
      if (auto i = intersect(g.space(), c, s)) total += v * Scalar(g.haar(*i));
  return total * Scalar(Rational(1) / mass);
}

std::vector<Cell> common_grid(const Space& s, const std::vector<Func>& fs, const std::vector<Cell>& extra) {
  std::vector<Cell> cells = extra;
  for (const Func& f : fs)
    for (const auto& t : f.terms()) cells.push_back(t.first);
  return common_refinement(s, cells);
}

Vec values_on(const Func& f, const std::vector<Cell>& grid) {
  Vec out;
  out.reserve(grid.size());
  for (const Cell& c : grid) out.push_back(f.value_on(c));
  return out;
}

Func from_values(const Space& s, const std::vector<Cell>& grid, const Vec& values) {
  std::vector<Func::Term> terms;
  for (std::size_t i = 0; i < grid.size(); ++i) terms.push_back({grid[i], values.at(i)});
  return Func::from_disjoint(s, std::move(terms));
}

Func linear_combination(const Space& s, const std::vector<Func>& fs, const Vec& coeffs) {
  std::vector<Cell> grid = common_grid(s, fs);
  Vec values(grid.size(), Scalar(0));
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (coeffs.at(k).is_zero()) continue;
    Vec v = values_on(fs[k], grid);
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] += coeffs[k] * v[i];
  }
  return from_values(s, grid, values);
}

}  // namespace locpoly
