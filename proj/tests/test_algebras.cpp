#include <doctest.h>

#include "locpoly/algebra.hpp"
#include "locpoly/catalog.hpp"
#include "locpoly/generators.hpp"

using namespace locpoly;

namespace {

const Group Q = Group::padic_add(3);
const Group A = Group::padic_affine(3);

Cell ball(long long c, std::int64_t level) { return make_ball(3, Rational(c), level); }
Func ind(std::vector<Cell> cells, const Scalar& v = Scalar(1)) { return Func::indicator(Q.space(), cells, v); }

// (f*g)(p) by refinement: int f(q) g(q^-1 p) dq over q in the level-L cells
// of a region, each cell weighted by its measure.
Scalar brute_convolution(const Group& g, const Func& f, const Func& h, const Point& p, const std::vector<Cell>& region,
                         std::int64_t level) {
  Scalar s;
  for (const Cell& r : region)
    for (const Cell& c : cells_at_level(g.space(), r, level)) {
      Point q = representative(g.space(), c);
      s += f.evaluate(q) * h.evaluate(g.mul(g.inv(q), p)) * Scalar(g.haar(c));
    }
  return s;
}

}  // namespace

TEST_CASE("unit ball convolution") {
  ConvolutionContext ctx{Q};
  CHECK(convolve(ctx, ind({ball(0, 0)}), ind({ball(0, 0)})) == ind({ball(0, 0)}));
  // 1_{c+3Z3} * 1_{3Z3} = (1/3) 1_{c+3Z3}
  CHECK(convolve(ctx, ind({ball(1, 1)}), ind({ball(0, 1)})) == ind({ball(1, 1)}, Scalar(Rational(1) / Rational(3))));
  // 1_{Z3} * 1_{1+3Z3} = (1/3) 1_{Z3}
  CHECK(convolve(ctx, ind({ball(0, 0)}), ind({ball(1, 1)})) == ind({ball(0, 0)}, Scalar(Rational(1) / Rational(3))));
}

TEST_CASE("finite groups use counting measure") {
  Group s3 = catalog_group("S3");
  ConvolutionContext ctx{s3};
  for (const Point& a : s3.elements())
    for (const Point& b : s3.elements()) {
      Func da = Func::indicator(s3.space(), {point_cell(s3.space(), a)});
      Func db = Func::indicator(s3.space(), {point_cell(s3.space(), b)});
      CHECK(convolve(ctx, da, db) == Func::indicator(s3.space(), {point_cell(s3.space(), s3.mul(a, b))}));
      CHECK(invert_argument(s3, da) == Func::indicator(s3.space(), {point_cell(s3.space(), s3.inv(a))}));
    }
  Func f = Func::indicator(s3.space(), {make_point_cell(1)}, Scalar::zeta(3));
  CHECK(convolution_star(ctx, f) == Func::indicator(s3.space(), {point_cell(s3.space(), s3.inv(Point::at(1)))}, Scalar::zeta(3).conj()));
  LocalUnit u = local_unit(ctx, f);
  CHECK(u.left == Func::indicator(s3.space(), {point_cell(s3.space(), s3.identity())}));
}

TEST_CASE("convolution against a refinement oracle") {
  Rng rng(17);
  for (int i = 0; i < 15; ++i) {
    Func f = random_padic_func(rng), h = random_padic_func(rng);
    Func c = convolve(ConvolutionContext{Q}, f, h);
    for (long long n = -3; n < 12; ++n) {
      Point p = Point::padic(Rational(n) / Rational(n % 2 ? 3 : 1));
      CHECK(c.evaluate(p) == brute_convolution(Q, f, h, p, {ball(0, -1)}, 4));
    }
  }
  for (int i = 0; i < 10; ++i) {
    Func f = random_affine_func(rng), h = random_affine_func(rng);
    Func c = convolve(ConvolutionContext{A}, f, h);
    std::vector<Cell> region;
    for (std::int64_t k = -1; k <= 1; ++k) region.push_back(make_affine_cell(3, k, Rational(0), 0));
    for (std::int64_t k = -2; k <= 2; ++k)
      for (long long b = 0; b < 6; ++b) {
        Point p = Point::affine(k, Rational(b) / Rational(b % 2 ? 3 : 1));
        CHECK(c.evaluate(p) == brute_convolution(A, f, h, p, region, 4));
      }
  }
}

TEST_CASE("star is an involutive anti-automorphism") {
  Rng rng(23);
  for (const Group& g : {Q, A}) {
    ConvolutionContext ctx{g};
    for (int i = 0; i < 15; ++i) {
      Func f = g == Q ? random_padic_func(rng) : random_affine_func(rng);
      Func h = g == Q ? random_padic_func(rng) : random_affine_func(rng);
      CHECK(convolution_star(ctx, convolution_star(ctx, f)) == f);
      CHECK(convolution_star(ctx, convolve(ctx, f, h)) == convolve(ctx, convolution_star(ctx, h), convolution_star(ctx, f)));
    }
  }
  // a subgroup indicator is fixed
  Func sub = Func::indicator(A.space(), {make_affine_cell(3, 0, Rational(0), 0)});
  CHECK(convolution_star(ConvolutionContext{A}, sub) == sub);
  CHECK(convolution_star(ConvolutionContext{Q}, ind({ball(0, 0)})) == ind({ball(0, 0)}));
}

TEST_CASE("argument inversion") {
  CHECK(invert_argument(Q, ind({ball(1, 1)})) == ind({ball(2, 1)}));
  CHECK(invert_argument(Q, ind({ball(0, 0)})) == ind({ball(0, 0)}));
  Func f = ind({ball(1, 2)}, 3) + ind({ball(0, 1)});
  CHECK(group_polynomial(Q, invert_argument(Q, f)).certificate);
}

TEST_CASE("local units") {
  ConvolutionContext ctx{Q};
  LocalUnit u = local_unit(ctx, ind({ball(0, 0)}));
  CHECK(u.left == ind({ball(0, 0)}));
  LocalUnit v = local_unit(ctx, ind({ball(1, 1)}));
  CHECK(v.left == ind({ball(0, 1)}, 3));
  CHECK(convolve(ctx, v.left, ind({ball(1, 1)})) == ind({ball(1, 1)}));
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    Func f = random_affine_func(rng);
    LocalUnit w = local_unit(ConvolutionContext{A}, f);
    CHECK(convolve(ConvolutionContext{A}, w.left, f) == f);
    CHECK(convolve(ConvolutionContext{A}, f, w.right) == f);
  }
}

TEST_CASE("eigenfunctions of convolution") {
  ConvolutionContext ctx{Q};
  EigenReport a = eigen_polynomial_check(ctx, ind({ball(0, 0)}), ind({ball(0, 0)}));
  CHECK(a.applicable);
  CHECK(a.certificate);
  EigenReport b = eigen_polynomial_check(ctx, ind({ball(0, 1)}, 3), ind({ball(0, 1)}));
  CHECK(b.applicable);
  CHECK(b.certificate);
  EigenReport c = eigen_polynomial_check(ctx, ind({ball(0, 0)}), ind({ball(0, 1)}));
  CHECK_FALSE(c.applicable);
  CHECK(c.holds());
}

TEST_CASE("modular function of the affine group") {
  Rng rng(2);
  for (int i = 0; i < 30; ++i) {
    Point a = Point::affine(rng.uniform(-3, 3), Rational(rng.uniform(-5, 5)));
    Point b = Point::affine(rng.uniform(-3, 3), Rational(rng.uniform(-5, 5)));
    CHECK(A.modular(A.mul(a, b)) == A.modular(a) * A.modular(b));
  }
  for (long long b = -5; b < 5; ++b) CHECK(A.modular(Point::affine(0, Rational(b))) == Rational(1));
}
