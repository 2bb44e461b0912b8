#include <doctest.h>

#include "gen.hpp"
#include "locpoly/func.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/vf.hpp"

using namespace locpoly;

namespace {

const Space Q3 = Space::padic_line(3);

Cell ball(long long c, std::int64_t level) { return make_ball(3, Rational(c), level); }
Func ind(std::vector<Cell> cells, const Scalar& v = Scalar(1)) { return Func::indicator(Q3, cells, v); }
Point P(long long n) { return Point::padic(Rational(n)); }

Action units_action() {
  return Action::restrict_open(Action::right_translation(Group::padic_add(3)), OpenSet::of(Q3, {ball(1, 1), ball(2, 1)}));
}

// p in V_f iff x - p is a unit for every x in supp f; residues mod 3 decide
// it for f = 1_{1+3Z3} and p in Z3.
bool vf_oracle(long long p) {
  for (long long x : {1, 4, 7}) {
    long long r = ((x - p) % 3 + 3) % 3;
    if (r == 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("canonical form merges siblings") {
  Func f = ind({ball(0, 1), ball(1, 1), ball(2, 1)});
  CHECK(f == ind({ball(0, 0)}));
  CHECK(f.terms().size() == 1);
  Func g = ind({ball(0, 1)}, 2) + ind({ball(1, 1)}, 2);
  CHECK(g.terms().size() == 2);
  CHECK((g - g).is_zero());
  CHECK_THROWS_AS(Func::from_terms(Q3, {{ball(0, 0), 1}, {ball(1, 1), 1}}), Error);
}

TEST_CASE("evaluation and pointwise algebra") {
  gen::Source s(2);
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    Func f = random_padic_func(rng), g = random_padic_func(rng);
    for (long long n = -4; n < 14; ++n) {
      Point x = Point::padic(Rational(n) / Rational(s.in(1, 3) == 3 ? 3 : 1));
      CHECK((f + g).evaluate(x) == f.evaluate(x) + g.evaluate(x));
      CHECK((f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x));
      CHECK(f.conj().evaluate(x) == f.evaluate(x).conj());
    }
  }
}

TEST_CASE("integration") {
  Group q = Group::padic_add(3);
  CHECK(integrate(q, ind({ball(0, 0)})) == Scalar(1));
  CHECK(integrate(q, ind({ball(1, 2)}, 9)) == Scalar(1));
  CHECK(haar_integrate(q, Subgroup::ball(1), ind({ball(0, 2)})) == Scalar(Rational(1) / Rational(3)));
}

TEST_CASE("V_f on the unit group instance") {
  Action a = units_action();
  Func f = ind({ball(1, 1)});
  VfSet v = compute_Vf(a, f);
  CHECK(v.set == OpenSet::of(Q3, {ball(0, 1), ball(2, 1)}));
  for (long long p = -9; p < 27; ++p) {
    CHECK(v.contains(P(p)) == vf_oracle(p));
    CHECK(in_Vf(a, f, P(p)) == vf_oracle(p));
  }
  // p outside Z3 moves 1+3Z3 off the units
  CHECK_FALSE(v.contains(Point::padic(Rational(1) / Rational(3))));
}

TEST_CASE("induced action is translation") {
  Action a = Action::right_translation(Group::padic_add(3));
  Func f = ind({ball(1, 1)}, 5);
  // (p.f)(x) = f(x + p)
  Func g = induced_act(a, P(2), f);
  CHECK(g == ind({ball(2, 1)}, 5));
  for (long long x = 0; x < 9; ++x) CHECK(g.evaluate(P(x)) == f.evaluate(P(x + 2)));
}

TEST_CASE("composition law on transversal pairs") {
  Action a = units_action();
  Func f = ind({ball(1, 1)});
  Group g = Group::padic_add(3);
  auto t = coset_transversal(g, Subgroup::ball(0), Subgroup::ball(2));
  std::size_t pairs = 0;
  for (const Point& p : t) {
    if (!in_Vf(a, f, p)) continue;
    for (const Point& q : t) {
      CompositionReport r = composition_law_check(a, f, p, q);
      CHECK(r.iff_holds);
      CHECK(r.equal.value_or(true));
      ++pairs;
    }
  }
  CHECK(pairs == 6 * 9);
}

TEST_CASE("tensor products") {
  Func f = ind({ball(0, 1)}, 2), g = ind({ball(1, 1)}, 3);
  Func t = tensor(f, g);
  CHECK(t.evaluate(Point::pair(P(3), P(4))) == Scalar(6));
  CHECK(t.evaluate(Point::pair(P(1), P(4))) == Scalar(0));
}
