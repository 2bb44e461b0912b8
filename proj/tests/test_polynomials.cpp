#include <doctest.h>

#include "locpoly/algebra.hpp"
#include "locpoly/catalog.hpp"
#include "locpoly/decompose.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/lift.hpp"
#include "locpoly/vf.hpp"
#include "oracle.hpp"

using namespace locpoly;

namespace {

const Space Q3 = Space::padic_line(3);
const Group G = Group::padic_add(3);

Cell ball(long long c, std::int64_t level) { return make_ball(3, Rational(c), level); }
Func ind(std::vector<Cell> cells, const Scalar& v = Scalar(1)) { return Func::indicator(Q3, cells, v); }

Action right() { return Action::right_translation(G); }
Action units() { return Action::restrict_open(right(), OpenSet::of(Q3, {ball(1, 1), ball(2, 1)})); }

void check_certificate(const Action& a, const Func& f, const PolynomialCertificate& c) {
  CHECK(validate_certificate(a, f, c).ok);
  DualPoints dp = dual_points(c.basis);
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (std::size_t k = 0; k < c.dim(); ++k) {
      Scalar s;
      for (std::size_t j = 0; j < dp.points.size(); ++j) s += dp.coeffs[j][k] * c.basis[i].evaluate(dp.points[j]);
      CHECK(s == Scalar(i == k ? 1 : 0));
    }
  CoefficientFunctions cf = coefficient_functions(a, f, c);
  for (const Point& v : c.transversal) {
    Vec x;
    for (const Func& phi : cf.phi) x.push_back(phi.evaluate(v));
    Func sum = linear_combination(a.space(), cf.basis, x);
    CHECK(sum == induced_act(a, v, f));
    if (v == a.group().identity()) CHECK(sum == f);
  }
  CHECK(closed_system(a, c).ok());
}

}  // namespace

TEST_CASE("certificates on the three reference instances") {
  struct Case {
    Action a;
    Func f;
    Subgroup g0;
    std::size_t dim;
  };
  std::vector<Case> cases{{right(), ind({ball(0, 0)}), Subgroup::ball(0), 1},
                          {right(), ind({ball(0, 1)}), Subgroup::ball(0), 3},
                          {units(), ind({ball(1, 1)}), Subgroup::ball(1), 1}};
  for (const Case& c : cases) {
    PolynomialResult r = is_polynomial(c.a, c.f, {c.g0});
    REQUIRE(r.certificate);
    CHECK(r.certificate->dim() == c.dim);
    check_certificate(c.a, c.f, *r.certificate);
  }
  // the default chain reaches ball(1) on the unit group
  PolynomialResult r = is_polynomial(units(), ind({ball(1, 1)}));
  REQUIRE(r.certificate);
  CHECK(r.certificate->g0 == Subgroup::ball(1));
}

TEST_CASE("saturation fails when G0 pushes the support out of the domain") {
  Saturation s = saturate(units(), OpenSet::of(Q3, {ball(1, 1)}), Subgroup::ball(0));
  CHECK_FALSE(s.set);
  CHECK_FALSE(s.diagnostic.empty());
  CHECK_FALSE(is_polynomial(units(), ind({ball(1, 1)}), {Subgroup::ball(0)}).certificate);
  Saturation ok = saturate(right(), OpenSet::of(Q3, {ball(1, 1)}), Subgroup::ball(0));
  REQUIRE(ok.set);
  CHECK(*ok.set == OpenSet::of(Q3, {ball(0, 0)}));
}

TEST_CASE("a stale certificate is rejected") {
  PolynomialResult r = is_polynomial(right(), ind({ball(0, 1)}), {Subgroup::ball(0)});
  REQUIRE(r.certificate);
  PolynomialCertificate c = *r.certificate;
  c.basis.pop_back();
  c.coords.clear();
  CHECK_FALSE(validate_certificate(right(), ind({ball(0, 1)}), c).ok);
}

TEST_CASE("finite groups: certificate dimension is the rank of the translates") {
  Rng rng(8);
  for (const char* name : {"S3", "D4", "Q8"}) {
    Group g = catalog_group(name);
    Action a = Action::right_translation(g);
    auto elts = g.elements();
    for (int i = 0; i < 10; ++i) {
      std::vector<Func::Term> terms;
      for (const Point& x : elts)
        if (int v = rng.uniform(-1, 2)) terms.push_back({point_cell(g.space(), x), Scalar(v)});
      if (terms.empty()) continue;
      Func f = Func::from_disjoint(g.space(), terms);
      std::vector<std::vector<Scalar>> rows;
      for (const Point& u : elts) {
        std::vector<Scalar> row;
        for (const Point& x : elts) row.push_back(f.evaluate(g.mul(x, u)));
        rows.push_back(row);
      }
      PolynomialResult r = is_polynomial(a, f, {Subgroup::whole()});
      REQUIRE(r.certificate);
      CHECK(r.certificate->dim() == oracle::rank(rows));
      check_certificate(a, f, *r.certificate);
    }
  }
}

TEST_CASE("plateau is a polynomial equal to one on the set") {
  OpenSet c = OpenSet::of(Q3, {ball(1, 2)});
  Func p = build_plateau(right(), c, Subgroup::ball(1));
  CHECK(p == ind({ball(1, 1)}));
  CHECK(is_polynomial(right(), p).certificate);
}

TEST_CASE("averages over a compact open subgroup are polynomial") {
  Rng rng(12);
  ConvolutionContext ctx{G};
  for (int i = 0; i < 10; ++i) {
    Func f = random_padic_func(rng), phi = random_padic_func(rng);
    Func g = average_over_subgroup(ctx, f, Subgroup::ball(1), phi);
    CHECK(group_polynomial(G, g).certificate);
  }
}

TEST_CASE("right polynomials have finitely many left translates") {
  Func f = ind({ball(1, 2)}, 2) + ind({ball(0, 1)});
  Action left = Action::left_translation(G);
  std::vector<Func> fam;
  for (const Point& q : coset_transversal(G, Subgroup::ball(0), Subgroup::ball(3))) fam.push_back(induced_act(left, q, f));
  std::vector<Cell> grid = common_grid(Q3, fam);
  Mat rows;
  for (const Func& x : fam) rows.push_back(values_on(x, grid));
  CHECK(oracle::rank(rows) <= 9);
}

TEST_CASE("product decomposition and its converse") {
  Func f = ind({ball(0, 0)});
  ProductDecomposition d = decompose_product(right(), f, f);
  CHECK(d.reconstructs);
  CHECK(d.rank() == 1);
  ConverseVerdict cv = converse_polynomiality(right(), f, d.f_parts, d.g_parts, f);
  CHECK(cv.polynomial);
  REQUIRE(cv.certificate);
  CHECK(validate_certificate(right(), f, *cv.certificate).ok);
  CHECK(product_polynomiality(right(), d.F, true).ok());

  Func fu = ind({ball(1, 1)}), gu = ind({ball(0, 1)}) + ind({ball(2, 2)}, 3);
  ProductDecomposition du = decompose_product(units(), fu, gu);
  CHECK(du.reconstructs);
  // F(x,p) = f(x + p) g(p) at sample points
  for (long long x = 0; x < 9; ++x)
    for (long long p = 0; p < 9; ++p) {
      Point X = Point::padic(Rational(x)), P = Point::padic(Rational(p));
      Scalar want = units().in_domain(X, P) ? fu.evaluate(Point::padic(Rational(x + p))) * gu.evaluate(P) : Scalar(0);
      if (!units().in_space(X)) want = 0;
      CHECK(du.F.evaluate(Point::pair(X, P)) == want);
    }
  ConverseVerdict cu = converse_polynomiality(units(), fu, du.f_parts, du.g_parts, gu);
  CHECK(cu.polynomial);
  CHECK_THROWS_AS(converse_polynomiality(units(), fu, du.f_parts, du.g_parts, Func(Q3)), Error);
  CHECK_THROWS_AS(decompose_product(units(), fu, ind({ball(1, 1)})), Error);
}

TEST_CASE("lifting from a subgroup") {
  Action two = Action::commuting_product(Action::left_translation(G), right());
  Subgroup h = Subgroup::product(Subgroup::trivial(), Subgroup::whole());
  LiftResult r = lift_subgroup_polynomiality(two, h, ind({ball(0, 0)}));
  INFO(r.diagnostic);
  REQUIRE(r.certificate);
  CHECK(validate_certificate(two, ind({ball(0, 0)}), *r.certificate).ok);
  LiftResult control = lift_subgroup_polynomiality(Action::trivial(Q3, G), Subgroup::ball(0), ind({ball(0, 0)}));
  CHECK_FALSE(control.certificate);
  CHECK_FALSE(control.diagnostic.empty());
}

TEST_CASE("joint certificates for two-sided translation") {
  Group s3 = catalog_group("S3");
  Action fin = Action::commuting_product(Action::left_translation(s3), Action::right_translation(s3));
  Action pad = Action::commuting_product(Action::left_translation(G), right());
  std::vector<std::pair<Action, Func>> cases{
      {fin, Func::indicator(s3.space(), {make_point_cell(1)}, 2) + Func::indicator(s3.space(), {make_point_cell(4)})},
      {pad, ind({ball(1, 1)}) + ind({ball(0, 2)}, 2)}};
  for (const auto& [a, f] : cases) {
    auto first = is_polynomial(a.base(), f);
    auto second = is_polynomial(a.second_factor(), f);
    REQUIRE(first.certificate);
    REQUIRE(second.certificate);
    PolynomialCertificate j = joint_polynomiality(a, f, *first.certificate, *second.certificate);
    CHECK(validate_certificate(a, f, j).ok);
    CommutingLeftReport cl = commuting_left_polynomiality(a, f);
    CHECK(cl.ok());
  }
}
