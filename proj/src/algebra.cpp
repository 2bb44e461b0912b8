#include "locpoly/algebra.hpp"

#include <algorithm>

#include "locpoly/vf.hpp"

namespace locpoly {

namespace {

void require_group_space(const Group& g, const Func& f) {
  if (!(f.space() == g.space())) throw Error("function lives on " + f.space().describe() + ", not on " + g.describe());
}

// Depth of the canonical chain that stabilizes the cell on both sides.
std::int64_t cell_depth(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return 0;
    case SpaceKind::PAdicLine: return c.level == kPointLevel || c.level == kWholeLevel ? 0 : std::max<std::int64_t>(c.level, 0);
    case SpaceKind::Affine:
      if (c.level == kPointLevel || c.level == kWholeLevel) return 0;
      return std::max<std::int64_t>({c.level, c.level - c.index, 0});
    case SpaceKind::Product: return std::max(cell_depth(s.first(), c.parts[0]), cell_depth(s.second(), c.parts[1]));
  }
  return 0;
}

std::int64_t chain_depth(const Func& f) {
  std::int64_t d = 0;
  for (const auto& t : f.terms()) d = std::max(d, cell_depth(f.space(), t.first));
  return std::clamp<std::int64_t>(d + 2, 6, 48);
}

bool left_invariant(const Group& g, const std::vector<Cell>& h, const Func& f) {
  for (const auto& t : f.terms())
    for (const Cell& u : h)
      if (!(g.mul_cells(u, t.first) == t.first)) return false;
  return true;
}

bool right_invariant(const Group& g, const std::vector<Cell>& h, const Func& f) {
  for (const auto& t : f.terms())
    for (const Cell& u : h)
      if (!(g.mul_cells(t.first, u) == t.first)) return false;
  return true;
}

Func normalized_indicator(const Group& g, const Subgroup& h) {
  std::vector<Cell> cells = subgroup_cells(g, h);
  Rational mass(0);
  for (const Cell& c : cells) mass += g.haar(c);
  return Func::indicator(g.space(), cells, Scalar(Rational(1) / mass));
}

}  // namespace

Func convolve_cells(const Group& g, const Cell& a, const Cell& b) {
  const Space& s = g.space();
  Func out(s);
  // For q in a piece P with P b = q0 b, the integrand is 1_{q0 b}.
  std::vector<Cell> todo{a};
  while (!todo.empty()) {
    Cell p = std::move(todo.back());
    todo.pop_back();
    Cell target = g.left_mul(representative(s, p), b);
    if (g.mul_cells(p, b) == target) {
      out = out + Func::indicator(s, {target}, Scalar(g.haar(p)));
      continue;
    }
    if (!refinable(s, p)) throw Error("cannot refine " + describe_cell(s, p) + " for convolution");
    for (Cell& c : split(s, p)) todo.push_back(std::move(c));
  }
  return out;
}

Func convolve(const ConvolutionContext& ctx, const Func& f, const Func& g) {
  require_group_space(ctx.group, f);
  require_group_space(ctx.group, g);
  Func out(ctx.group.space());
  for (const auto& [a, x] : f.terms())
    for (const auto& [b, y] : g.terms()) out = out + (x * y) * convolve_cells(ctx.group, a, b);
  return out;
}

Func convolution_star(const ConvolutionContext& ctx, const Func& f) {
  require_group_space(ctx.group, f);
  const Group& g = ctx.group;
  std::vector<Func::Term> terms;
  for (const auto& [c, v] : f.terms()) {
    Cell d = g.inv_cell(c);
    // delta is constant on cells
    Rational m = ctx.modular(representative(g.space(), d));
    terms.push_back({d, v.conj() * Scalar(Rational(1) / m)});
  }
  return Func::from_disjoint(g.space(), std::move(terms));
}

Func invert_argument(const Group& g, const Func& f) {
  require_group_space(g, f);
  std::vector<Func::Term> terms;
  for (const auto& [c, v] : f.terms()) terms.push_back({g.inv_cell(c), v});
  return Func::from_disjoint(g.space(), std::move(terms));
}

Func average_over_subgroup(const ConvolutionContext& ctx, const Func& f, const Subgroup& g0, const Func& phi) {
  const Group& g = ctx.group;
  if (!is_compact_open(g, g0)) throw Error(describe_subgroup(g, g0) + " is not compact open");
  Func on_g0 = phi * Func::indicator(g.space(), subgroup_cells(g, g0));
  Func psi = invert_argument(g, on_g0);
  Rational mass(0);
  for (const Cell& c : subgroup_cells(g, g0)) mass += g.haar(c);
  return convolve(ctx, f, Scalar(Rational(1) / mass) * psi);
}

PolynomialResult group_polynomial(const Group& g, const Func& f) {
  return is_polynomial(Action::right_translation(g), f, canonical_chain(g, chain_depth(f)));
}

LocalUnit local_unit(const ConvolutionContext& ctx, const Func& f) {
  const Group& g = ctx.group;
  require_group_space(g, f);
  PolynomialResult pr = group_polynomial(g, f);
  if (!pr.certificate) throw Error("f has no polynomial certificate on " + g.describe());
  if (g.is_discrete()) {
    Func delta = Func::indicator(g.space(), {point_cell(g.space(), g.identity())});
    return {delta, delta, Subgroup::trivial(), Subgroup::trivial(), *pr.certificate};
  }
  std::optional<Subgroup> left, right;
  for (const Subgroup& h : canonical_chain(g, chain_depth(f))) {
    if (!is_compact_open(g, h)) continue;
    std::vector<Cell> cells = subgroup_cells(g, h);
    if (!left && left_invariant(g, cells, f)) left = h;
    if (!right && right_invariant(g, cells, f)) right = h;
    if (left && right) break;
  }
  if (!left || !right) throw Error("no compact open subgroup of the chain fixes f");
  return {normalized_indicator(g, *left), normalized_indicator(g, *right), *left, *right, *pr.certificate};
}

EigenReport eigen_polynomial_check(const ConvolutionContext& ctx, const Func& f, const Func& xi) {
  EigenReport out;
  out.applicable = convolve(ctx, f, xi) == xi;
  if (out.applicable) out.certificate = group_polynomial(ctx.group, xi).certificate;
  return out;
}

}  // namespace locpoly
