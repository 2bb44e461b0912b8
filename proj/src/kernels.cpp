#include "locpoly/kernels.hpp"

#include <map>

namespace locpoly {

namespace {

int act_at(const ActionTable& t, int x, int g) {
  return t.act[static_cast<std::size_t>(x)][static_cast<std::size_t>(g)];
}
int mul_at(const ActionTable& t, int a, int b) { return t.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
int inv_at(const ActionTable& t, int a) { return t.inverse[static_cast<std::size_t>(a)]; }
bool defined(const ActionTable& t, int x, int g) { return x >= 0 && act_at(t, x, g) >= 0; }

void axioms_at(const ActionTable& t, int x, TableReport& r) {
  const int n = static_cast<int>(t.order);
  ++r.checked;
  if (act_at(t, x, t.identity) != x) r.violations.push_back({"identity", x, t.identity, -1});
  for (int p = 0; p < n; ++p) {
    int xp = act_at(t, x, p);
    if (xp < 0) continue;
    for (int q = 0; q < n; ++q) {
      ++r.checked;
      int lhs = act_at(t, x, mul_at(t, p, q));
      int rhs = act_at(t, xp, q);
      if ((lhs >= 0) != (rhs >= 0)) r.violations.push_back({"compatibility", x, p, q});
      else if (lhs != rhs) r.violations.push_back({"composition", x, p, q});
    }
  }
}

void groupoid_at(const ActionTable& t, int x, TableReport& r) {
  const int n = static_cast<int>(t.order);
  const int e = t.identity;
  for (int p = 0; p < n; ++p) {
    int y = act_at(t, x, p);
    if (y < 0) continue;
    ++r.checked;
    int pi = inv_at(t, p);
    // inverse arrow (y, p^-1)
    if (!defined(t, y, pi)) {
      r.violations.push_back({"inverse", x, p, -1});
      continue;
    }
    if (act_at(t, y, pi) != x || inv_at(t, pi) != p) r.violations.push_back({"gamma involution", x, p, -1});
    // (x,p)(y,p^-1) = (x,e) and (y,p^-1)(x,p) = (y,e)
    if (mul_at(t, p, pi) != e) r.violations.push_back({"left unit", x, p, -1});
    if (act_at(t, y, pi) != x || mul_at(t, pi, p) != e) r.violations.push_back({"right unit", x, p, -1});
    if (act_at(t, y, e) != y || mul_at(t, p, e) != p) r.violations.push_back({"unit", x, p, -1});
    for (int q = 0; q < n; ++q) {
      int z = act_at(t, y, q);
      if (z < 0) continue;
      int pq = mul_at(t, p, q);
      if (!defined(t, x, pq)) {
        r.violations.push_back({"composition", x, p, q});
        continue;
      }
      for (int s = 0; s < n; ++s) {
        if (!defined(t, z, s)) continue;
        ++r.checked;
        // ((x,p)(y,q))(z,s) = (x,(pq)s) and (x,p)((y,q)(z,s)) = (x,p(qs))
        int qs = mul_at(t, q, s);
        bool right_ok = defined(t, y, qs) && act_at(t, y, qs) == act_at(t, z, s);
        bool left_ok = act_at(t, x, pq) == z;
        if (!left_ok || !right_ok || mul_at(t, pq, s) != mul_at(t, p, qs)) r.violations.push_back({"associativity", x, p, q});
      }
    }
    // gamma((x,p) <1 q) == gamma(x,p) <2 q
    for (int q = 0; q < n; ++q) {
      int xq = act_at(t, x, q);
      if (xq < 0) continue;
      ++r.checked;
      int u = mul_at(t, inv_at(t, q), p);
      int gx = act_at(t, xq, u);
      int gu = inv_at(t, u);
      int w = mul_at(t, pi, q);
      if (gx < 0 || !defined(t, y, w) || gx != y || gu != w) r.violations.push_back({"intertwiner", x, p, q});
    }
  }
}

template <class Body>
TableReport serial_sweep(const ActionTable& t, Body body) {
  TableReport r;
  for (std::size_t x = 0; x < t.points; ++x)
    if (t.present[x]) body(t, static_cast<int>(x), r);
  return r;
}

template <class Body>
TableReport parallel_sweep(const ActionTable& t, Body body) {
  std::vector<TableReport> parts(t.points);
  const auto n = static_cast<std::int64_t>(t.points);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t x = 0; x < n; ++x)
    if (t.present[static_cast<std::size_t>(x)]) body(t, static_cast<int>(x), parts[static_cast<std::size_t>(x)]);
  TableReport r;
  for (const TableReport& p : parts) {
    r.checked += p.checked;
    r.violations.insert(r.violations.end(), p.violations.begin(), p.violations.end());
  }
  return r;
}

}  // namespace

ActionTable table_of(std::size_t points, const Group& g, std::vector<std::vector<int>> act) {
  if (g.kind() != GroupKind::Finite) throw Error("table kernels need a finite group");
  ActionTable t;
  t.points = points;
  t.order = static_cast<std::size_t>(g.order());
  t.identity = static_cast<int>(g.identity().index);
  t.mul = g.table();
  for (std::size_t a = 0; a < t.order; ++a) t.inverse.push_back(static_cast<int>(g.inv(Point::at(static_cast<std::int64_t>(a))).index));
  t.present.assign(points, 1);
  if (act.size() != points) throw Error("action table has the wrong number of rows");
  for (const auto& row : act)
    if (row.size() != t.order) throw Error("action table row has the wrong length");
  t.act = std::move(act);
  return t;
}

ActionTable materialize(const Action& a) {
  const Group& g = a.group();
  if (g.kind() != GroupKind::Finite) throw Error("materialize needs a finite group");
  auto pts = finite_points(a.space());
  if (!pts) throw Error("materialize needs a finite space");
  std::map<Point, int> where;
  for (std::size_t i = 0; i < pts->size(); ++i) where[(*pts)[i]] = static_cast<int>(i);
  std::vector<Point> elts = g.elements();
  std::vector<std::vector<int>> act(pts->size(), std::vector<int>(elts.size(), -1));
  std::vector<char> present(pts->size(), 0);
  for (std::size_t i = 0; i < pts->size(); ++i) {
    const Point& x = (*pts)[i];
    if (!a.in_space(x)) continue;
    present[i] = 1;
    for (std::size_t k = 0; k < elts.size(); ++k)
      if (auto y = a.act(x, elts[k])) act[i][k] = where.at(*y);
  }
  ActionTable t = table_of(pts->size(), g, std::move(act));
  t.present = std::move(present);
  return t;
}

TableReport table_axioms(const ActionTable& t, Exec e) {
  return e == Exec::Serial ? serial_sweep(t, axioms_at) : parallel_sweep(t, axioms_at);
}

TableReport table_groupoid(const ActionTable& t, Exec e) {
  return e == Exec::Serial ? serial_sweep(t, groupoid_at) : parallel_sweep(t, groupoid_at);
}

std::vector<Func> convolve_pairs(const ConvolutionContext& ctx, const std::vector<std::pair<Func, Func>>& pairs, Exec e) {
  if (e == Exec::Serial) {
    std::vector<Func> out;
    for (const auto& [f, g] : pairs) out.push_back(convolve(ctx, f, g));
    return out;
  }
  std::vector<std::optional<Func>> slots(pairs.size());
  std::vector<std::exception_ptr> errors(pairs.size());
  const auto n = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    auto k = static_cast<std::size_t>(i);
    try {
      slots[k] = convolve(ctx, pairs[k].first, pairs[k].second);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  std::vector<Func> out;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

}  // namespace locpoly
