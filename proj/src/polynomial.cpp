#include "locpoly/polynomial.hpp"

#include <algorithm>
#include <map>

namespace locpoly {

namespace {

// Compact open for the acting group, which is the restricting subgroup when
// the action is restricted.
bool open_for(const Action& a, const Subgroup& g0) {
  if (a.kind() == ActionKind::RestrictSubgroup) return is_compact_open_in(a.group(), g0, a.subgroup());
  return is_compact_open(a.group(), g0);
}

bool func_less(const Func& a, const Func& b) {
  std::vector<Cell> sa = a.support_cells(), sb = b.support_cells();
  if (sa != sb) return sa < sb;
  return a.describe() < b.describe();
}

bool subgroup_inside(const Group& g, const Subgroup& h, const OpenSet& v) {
  if (v.is_all()) return true;
  for (const Cell& c : subgroup_cells(g, h))
    if (v.classify(c) != Tri::All) return false;
  return true;
}

std::int64_t max_level(std::int64_t a, std::int64_t b) {
  if (a == kWholeLevel) return b;
  if (b == kWholeLevel) return a;
  return std::max(a, b);
}

std::int64_t cells_level(const Space& s, const std::vector<Cell>& cells) {
  std::int64_t L = kWholeLevel;
  for (const Cell& c : cells) L = max_level(L, finest_level(s, c));
  return L;
}

}  // namespace

std::optional<Subgroup> stabilizing_subgroup(const Action& a, const std::vector<Cell>& cells, const Subgroup& g0) {
  const Group& g = a.group();
  std::int64_t base = subgroup_level(g, g0);
  std::int64_t start = base == kWholeLevel ? 0 : base;
  std::int64_t top = max_level(start, cells_level(a.space(), cells));
  for (std::int64_t L = start; L <= top + 8; ++L) {
    Subgroup g1 = level_subgroup(g, g0, L);
    bool ok = true;
    std::vector<Cell> gc = subgroup_cells(g, g1);
    for (const Cell& d : cells) {
      for (const Cell& c : gc)
        if (a.cover(d, c) != Tri::All || !(a.image(d, c) == d)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return g1;
    if (base == kWholeLevel) break;  // no ball coordinate to deepen
  }
  return std::nullopt;
}

Saturation saturate(const Action& a, const OpenSet& s, const Subgroup& g0, std::size_t bound) {
  const Group& g = a.group();
  Saturation out;
  if (!open_for(a, g0)) {
    out.diagnostic = describe_subgroup(g, g0) + " is not compact open";
    return out;
  }
  if (s.is_empty()) {
    out.set = s;
    out.g1 = g0;
    out.transversal = {g.identity()};
    return out;
  }
  if (!s.is_compact()) {
    out.diagnostic = "the set is not compact";
    return out;
  }
  auto g1 = stabilizing_subgroup(a, s.cells(), g0);
  if (!g1) {
    out.diagnostic = "no level subgroup of " + describe_subgroup(g, g0) + " fixes the cells";
    return out;
  }
  out.g1 = *g1;
  out.transversal = coset_transversal(g, g0, *g1);
  std::vector<Cell> cells = s.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Cell d = cells[i];
    for (const Point& t : out.transversal) {
      Cell tc = point_cell(g.space(), t);
      if (a.cover(d, tc) != Tri::All) {
        out.diagnostic = describe_cell(a.space(), d) + " . " + describe_point(g.space(), t) + " leaves the domain";
        return out;
      }
      Cell img = a.image(d, tc);
      bool known = std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return subset(a.space(), img, c); });
      if (known) continue;
      cells.push_back(img);
      if (cells.size() > bound) {
        out.diagnostic = "saturation exceeds " + std::to_string(bound) + " cells";
        return out;
      }
    }
  }
  OpenSet c = OpenSet::of(a.space(), cells);
  for (const Cell& d : c.cells())
    for (const Point& t : out.transversal)
      for (const Cell& coset : coset_cells(g, t, *g1))
        if (a.cover(d, coset) != Tri::All || c.classify(a.image(d, coset)) != Tri::All) {
          out.diagnostic = describe_cell(a.space(), d) + " is not carried into the saturation";
          return out;
        }
  out.set = c;
  return out;
}

TranslateSpan translate_span(const Action& a, const Func& f, const Subgroup& g0) {
  const Group& g = a.group();
  if (!open_for(a, g0)) throw Error(describe_subgroup(g, g0) + " is not compact open");
  VfSet vf = compute_Vf(a, f);
  if (!subgroup_inside(g, g0, vf.set))
    throw Error(describe_subgroup(g, g0) + " is not inside V_f = " + vf.describe());
  auto g1 = stabilizing_subgroup(a, f.support_cells(), g0);
  if (!g1) throw Error("no level subgroup fixes the support cells of " + f.describe());
  TranslateSpan out;
  out.g1 = *g1;
  out.transversal = coset_transversal(g, g0, *g1);
  for (const Point& t : out.transversal) out.translates.push_back(induced_act(a, t, f));
  std::vector<Cell> grid = common_grid(a.space(), out.translates);
  Mat rows;
  for (const Func& t : out.translates) rows.push_back(values_on(t, grid));
  for (std::size_t i : independent_rows(rows)) out.basis.push_back(out.translates[i]);
  std::sort(out.basis.begin(), out.basis.end(), func_less);
  RowBasis rb(grid.size());
  for (const Func& b : out.basis) rb.add(values_on(b, grid));
  for (const Vec& r : rows) out.coords.push_back(*rb.express(r));
  return out;
}

PolynomialResult is_polynomial(const Action& a, const Func& f, const std::vector<Subgroup>& chain) {
  const Group& g = a.group();
  PolynomialResult out;
  for (const Subgroup& g0 : chain) {
    std::string name = describe_subgroup(g, g0);
    try {
      if (!open_for(a, g0)) {
        out.attempts.push_back(name + ": not compact open");
        continue;
      }
      Saturation sat = saturate(a, f.support(), g0);
      if (!sat.set) {
        out.attempts.push_back(name + ": " + sat.diagnostic);
        continue;
      }
      TranslateSpan span = translate_span(a, f, g0);
      PolynomialCertificate cert{g0, span.g1, *sat.set, span.basis, span.transversal, span.coords, {}};
      std::vector<Func> all = span.basis;
      all.push_back(f);
      std::vector<Cell> grid = common_grid(a.space(), all);
      RowBasis rb(grid.size());
      for (const Func& b : span.basis) rb.add(values_on(b, grid));
      cert.f_coords = *rb.express(values_on(f, grid));
      out.attempts.push_back(name + ": dimension " + std::to_string(cert.dim()));
      out.certificate = std::move(cert);
      return out;
    } catch (const Error& e) {
      out.attempts.push_back(name + ": " + e.what());
    }
  }
  return out;
}

PolynomialResult is_polynomial(const Action& a, const Func& f) { return is_polynomial(a, f, canonical_chain(a.group())); }

// ---------------------------------------------------------------------------

ValidationReport validate_certificate(const Action& a, const Func& f, const PolynomialCertificate& cert) {
  const Group& g = a.group();
  const Space& s = a.space();
  ValidationReport rep;
  auto fail = [&](std::string why) {
    rep.ok = false;
    if (rep.failures.size() < 20) rep.failures.push_back(std::move(why));
  };

  // Points: a grid one level finer than any data, over C and around the origin.
  std::int64_t L = cells_level(s, cert.c.cells());
  L = max_level(L, f.finest_level());
  for (const Func& b : cert.basis) L = max_level(L, b.finest_level());
  std::int64_t W = L == kWholeLevel ? 0 : L + 1;
  std::vector<Point> points;
  for (const Cell& c : cert.c.cells())
    for (const Cell& x : cells_at_level(s, c, W)) points.push_back(representative(s, x));
  for (Point& x : probe_points(s, 27)) points.push_back(std::move(x));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  rep.points = points.size();

  // Elements: a transversal for a subgroup deeper than the certificate's.
  std::int64_t gl = subgroup_level(g, cert.g1);
  Subgroup deep = gl == kWholeLevel ? cert.g1 : level_subgroup(g, cert.g0, std::max(gl, W) + 1);
  std::vector<Point> elements = coset_transversal(g, cert.g0, deep);
  rep.elements = elements.size();

  const std::size_t n = cert.basis.size();
  std::vector<Vec> basis_rows(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const Point& x : points) basis_rows[i].push_back(cert.basis[i].evaluate(x));
  RowBasis rb(points.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!rb.add(basis_rows[i])) fail("basis function " + std::to_string(i) + " is dependent on the others");

  for (const Point& x : points) {
    if (cert.c.contains(x)) continue;
    if (!f.evaluate(x).is_zero()) fail("f is nonzero outside C at " + describe_point(s, x));
    for (std::size_t i = 0; i < n; ++i)
      if (!cert.basis[i].evaluate(x).is_zero()) fail("basis function " + std::to_string(i) + " is nonzero outside C");
  }
  for (const Point& x : points) {
    if (!cert.c.contains(x)) continue;
    for (const Point& u : elements) {
      auto y = a.act(x, u);
      if (!y || !cert.c.contains(*y))
        fail("C is not carried onto itself: " + describe_point(s, x) + " . " + describe_point(g.space(), u));
    }
  }

  auto translate_values = [&](const Point& u) {
    Vec v;
    for (const Point& x : points) {
      auto y = a.act(x, u);
      v.push_back(y ? f.evaluate(*y) : Scalar(0));
    }
    return v;
  };
  Vec fv;
  for (const Point& x : points) fv.push_back(f.evaluate(x));
  auto fc = rb.express(fv);
  if (!fc)
    fail("f is not in the span of the basis");
  else if (*fc != cert.f_coords)
    fail("coordinates of f disagree");
  for (const Point& u : elements)
    if (!rb.express(translate_values(u))) fail("translate by " + describe_point(g.space(), u) + " leaves the span");
  for (std::size_t t = 0; t < cert.transversal.size() && t < cert.coords.size(); ++t) {
    auto c = rb.express(translate_values(cert.transversal[t]));
    if (!c || *c != cert.coords[t]) fail("coordinates of translate " + std::to_string(t) + " disagree");
  }
  return rep;
}

DualPoints dual_points(const std::vector<Func>& basis) {
  DualPoints out;
  if (basis.empty()) return out;
  const Space& s = basis.front().space();
  std::vector<Cell> grid = common_grid(s, basis);
  const std::size_t n = basis.size();
  Mat cols;  // one row per grid cell: values of every basis function
  for (const Cell& c : grid) {
    Vec v;
    for (const Func& b : basis) v.push_back(b.value_on(c));
    cols.push_back(std::move(v));
  }
  std::vector<std::size_t> pick = independent_rows(cols);
  if (pick.size() < n) throw Error("basis is linearly dependent: rank " + std::to_string(pick.size()) + " < " + std::to_string(n));
  Mat m(n, Vec(n));
  for (std::size_t k = 0; k < n; ++k) {
    out.points.push_back(representative(s, grid[pick[k]]));
    for (std::size_t i = 0; i < n; ++i) m[i][k] = cols[pick[k]][i];
  }
  out.coeffs = *inverse(m);
  return out;
}

CoefficientFunctions coefficient_functions(const Action& a, const Func& f, const PolynomialCertificate& cert) {
  const Group& g = a.group();
  for (std::size_t t = 0; t < cert.transversal.size(); ++t) {
    Func lhs = induced_act(a, cert.transversal[t], f);
    if (!(lhs == linear_combination(a.space(), cert.basis, cert.coords.at(t))))
      throw Error("certificate is stale at " + describe_point(g.space(), cert.transversal[t]));
  }
  if (!(f == linear_combination(a.space(), cert.basis, cert.f_coords))) throw Error("certificate is stale: f is not reproduced");
  CoefficientFunctions out{cert.basis, {}};
  for (std::size_t i = 0; i < cert.basis.size(); ++i) {
    std::vector<Func::Term> terms;
    for (std::size_t t = 0; t < cert.transversal.size(); ++t) {
      const Scalar& v = cert.coords[t][i];
      if (v.is_zero()) continue;
      for (const Cell& c : coset_cells(g, cert.transversal[t], cert.g1)) terms.push_back({c, v});
    }
    out.phi.push_back(Func::from_disjoint(g.space(), std::move(terms)));
  }
  return out;
}

ClosedSystem closed_system(const Action& a, const PolynomialCertificate& cert) {
  const Group& g = a.group();
  const std::size_t n = cert.basis.size();
  ClosedSystem out;
  out.transversal = cert.transversal;
  std::map<Point, std::optional<Mat>> cache;
  auto psi_of = [&](const Point& u) -> std::optional<Mat> {
    if (auto it = cache.find(u); it != cache.end()) return it->second;
    std::vector<Func> imgs;
    for (const Func& b : cert.basis) imgs.push_back(induced_act(a, u, b));
    std::vector<Func> all = cert.basis;
    all.insert(all.end(), imgs.begin(), imgs.end());
    std::vector<Cell> gr = common_grid(a.space(), all);
    RowBasis rb(gr.size());
    for (const Func& b : cert.basis) rb.add(values_on(b, gr));
    Mat m(n, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
      auto c = rb.express(values_on(imgs[j], gr));
      if (!c) return cache[u] = std::nullopt;
      for (std::size_t i = 0; i < n; ++i) m[i][j] = (*c)[i];
    }
    return cache[u] = m;
  };
  for (const Point& u : cert.transversal) {
    auto m = psi_of(u);
    if (!m) {
      out.failures.push_back("translate by " + describe_point(g.space(), u) + " leaves the span");
      out.psi.push_back(Mat(n, Vec(n)));
    } else {
      out.psi.push_back(*m);
    }
  }
  for (std::size_t i = 0; i < cert.transversal.size(); ++i)
    for (std::size_t j = 0; j < cert.transversal.size(); ++j) {
      Point uv = g.mul(cert.transversal[i], cert.transversal[j]);
      auto direct = psi_of(uv);
      if (!direct || !(*direct == matmul(out.psi[i], out.psi[j])))
        out.failures.push_back("psi(uv) != psi(u)psi(v) for u=" + describe_point(g.space(), cert.transversal[i]) +
                               " v=" + describe_point(g.space(), cert.transversal[j]));
    }
  return out;
}

Func build_plateau(const Action& a, const OpenSet& c, const Subgroup& g0) {
  Saturation sat = saturate(a, c, g0);
  if (!sat.set) throw Error("cannot saturate: " + sat.diagnostic);
  return Func::indicator(a.space(), sat.set->cells());
}

}  // namespace locpoly
