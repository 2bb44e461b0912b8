#include "locpoly/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "locpoly/catalog.hpp"

namespace locpoly {

namespace {

std::vector<int> closure(const Group& g, std::vector<int> gens) {
  std::set<int> h{static_cast<int>(g.identity().index)};
  std::vector<int> todo(h.begin(), h.end());
  while (!todo.empty()) {
    int a = todo.back();
    todo.pop_back();
    for (int s : gens) {
      int b = g.table()[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)];
      if (h.insert(b).second) todo.push_back(b);
    }
  }
  return {h.begin(), h.end()};
}

// Right cosets H g; point i of the orbit is the i-th distinct coset.
std::vector<std::vector<int>> coset_action(const Group& g, const std::vector<int>& h) {
  const auto n = static_cast<std::size_t>(g.order());
  std::map<std::vector<int>, int> ids;
  std::vector<int> coset_of(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<int> c;
    for (int a : h) c.push_back(g.table()[static_cast<std::size_t>(a)][x]);
    std::sort(c.begin(), c.end());
    auto it = ids.emplace(c, static_cast<int>(ids.size())).first;
    coset_of[x] = it->second;
  }
  std::vector<int> rep(ids.size());
  for (std::size_t x = n; x-- > 0;) rep[static_cast<std::size_t>(coset_of[x])] = static_cast<int>(x);
  std::vector<std::vector<int>> act(ids.size(), std::vector<int>(n));
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) act[i][k] = coset_of[static_cast<std::size_t>(g.table()[static_cast<std::size_t>(rep[i])][k])];
  return act;
}

Func random_on_cells(Rng& rng, const Space& s, const std::vector<Cell>& cells) {
  std::vector<Func::Term> terms;
  for (const Cell& c : cells) {
    if (rng.uniform(0, 2) == 0) continue;
    int v = rng.uniform(-2, 3);
    if (v != 0) terms.push_back({c, Scalar(v)});
  }
  if (terms.empty()) terms.push_back({rng.pick(cells), Scalar(1)});
  return Func::from_disjoint(s, std::move(terms));
}

}  // namespace

OpenSet random_open_subset(Rng& rng, const Space& s) {
  if (s.kind() != SpaceKind::Finite) throw Error("random open subsets need a finite space");
  std::vector<Cell> cells;
  for (std::int64_t i = 0; i < s.size(); ++i)
    if (rng.coin()) cells.push_back(make_point_cell(i));
  return OpenSet::of(s, std::move(cells));
}

FiniteInstance random_finite_instance(Rng& rng, std::size_t index, std::size_t max_points, std::size_t opens) {
  std::vector<std::string> names = catalog_group_names();
  const std::string& gname = rng.pick(names);
  Group g = catalog_group(gname);
  const int n = static_cast<int>(g.order());
  std::vector<std::vector<int>> rows;
  std::size_t target = static_cast<std::size_t>(rng.uniform(1, static_cast<int>(max_points)));
  while (rows.size() < target) {
    std::vector<int> gens;
    for (int k = rng.uniform(0, 2); k > 0; --k) gens.push_back(rng.uniform(0, n - 1));
    std::vector<int> h = closure(g, gens);
    auto orbit = coset_action(g, h);
    if (rows.size() + orbit.size() > max_points) {
      if (rows.empty()) continue;
      break;
    }
    const int offset = static_cast<int>(rows.size());
    for (auto& row : orbit) {
      for (int& v : row) v += offset;
      rows.push_back(std::move(row));
    }
  }
  // shuffle point labels
  std::vector<int> perm(rows.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(i) - 1))]);
  std::vector<std::vector<int>> table(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> row = rows[i];
    for (int& v : row) v = perm[static_cast<std::size_t>(v)];
    table[static_cast<std::size_t>(perm[i])] = std::move(row);
  }
  Space x = Space::finite(static_cast<std::int64_t>(table.size()));
  std::string name = "finite-" + std::to_string(index) + "-" + gname + "-on-" + std::to_string(table.size());
  FiniteInstance out{name, Action::finite_table(x, g, std::move(table), name), {}};
  for (std::size_t k = 0; k < opens; ++k) out.opens.push_back(random_open_subset(rng, x));
  return out;
}

FaultInstance seeded_fault(Rng& rng, const Action& global) {
  const ActionTable base = materialize(global);
  if (base.order < 2) throw Error("a fault needs a nontrivial group");
  // Dropping x.g with x.g = x and g*g = e still gives a partial action; draw again.
  for (int attempt = 0; attempt < 64; ++attempt) {
    FaultInstance out{base};
    ActionTable& t = out.table;
    out.x = rng.uniform(0, static_cast<int>(t.points) - 1);
    do out.g = rng.uniform(0, static_cast<int>(t.order) - 1);
    while (out.g == t.identity);
    out.was = t.act[static_cast<std::size_t>(out.x)][static_cast<std::size_t>(out.g)];
    if (t.points == 1 || rng.coin()) {
      out.now = -1;
    } else {
      do out.now = rng.uniform(0, static_cast<int>(t.points) - 1);
      while (out.now == out.was);
    }
    t.act[static_cast<std::size_t>(out.x)][static_cast<std::size_t>(out.g)] = out.now;
    if (!table_axioms(t, Exec::Serial).ok()) return out;
  }
  throw Error("no detectable fault found");
}

Func random_padic_func(Rng& rng, std::int64_t p, std::int64_t max_level) {
  Space s = Space::padic_line(p);
  std::int64_t level = rng.uniform(0, static_cast<int>(max_level));
  std::int64_t base = rng.uniform(-1, 0);
  std::vector<Cell> cells = cells_at_level(s, make_ball(p, Rational(0), base), std::max(level, base));
  return random_on_cells(rng, s, cells);
}

Func random_affine_func(Rng& rng, std::int64_t p, std::int64_t max_level) {
  Space s = Space::affine(p);
  std::vector<Cell> cells;
  for (std::int64_t k = -1; k <= 1; ++k) {
    if (rng.uniform(0, 2) == 0) continue;
    std::int64_t level = rng.uniform(0, static_cast<int>(max_level));
    for (Cell& c : cells_at_level(s, make_affine_cell(p, k, Rational(0), 0), level)) cells.push_back(std::move(c));
  }
  if (cells.empty()) cells = cells_at_level(s, make_affine_cell(p, 0, Rational(0), 0), 1);
  return random_on_cells(rng, s, cells);
}

}  // namespace locpoly
