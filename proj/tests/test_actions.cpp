#include <doctest.h>

#include "locpoly/action.hpp"
#include "locpoly/catalog.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/kernels.hpp"

using namespace locpoly;

namespace {

Action q3_right() { return Action::right_translation(Group::padic_add(3)); }

OpenSet units(const Space& s) { return OpenSet::of(s, {make_ball(3, Rational(1), 1), make_ball(3, Rational(2), 1)}); }

bool has_law(const Report& r, const std::string& law) {
  for (const Violation& v : r.violations)
    if (v.law == law) return true;
  return false;
}

}  // namespace

TEST_CASE("catalog actions satisfy the axioms") {
  for (const char* name : {"S3", "D4", "Q8", "Z/5"}) {
    Action a = Action::right_translation(catalog_group(name));
    Probes pr = default_probes(a);
    CHECK(check_axioms(a, pr).ok());
    CHECK(check_groupoid(a, pr).ok());
  }
  Action q = q3_right();
  CHECK(check_axioms(q, default_probes(q)).ok());
  Action y = Action::restrict_open(q, units(q.space()));
  CHECK(check_axioms(y, default_probes(y)).ok());
  CHECK(check_groupoid(y, default_probes(y)).ok());
  Action l = Action::left_translation(Group::padic_affine(3));
  CHECK(check_axioms(l, default_probes(l)).ok());
}

TEST_CASE("derived actions") {
  Action a = Action::restrict_open(q3_right(), units(Space::padic_line(3)));
  for (const Action& d : {Action::derived1(a), Action::derived2(a)}) CHECK(check_axioms(d, default_probes(d, 9)).ok());
  // (x,p).q = (x.q, q^-1 p)
  Action d1 = Action::derived1(a);
  Point x = Point::padic(Rational(1)), p = Point::padic(Rational(3)), q = Point::padic(Rational(6));
  auto y = d1.act(Point::pair(x, p), q);
  REQUIRE(y);
  CHECK(*y == Point::pair(Point::padic(Rational(7)), Point::padic(Rational(-3))));
  // (1, 1) leaves Y = Z3^x: 1 + 1 = 2 is a unit, but (1, 2) lands on 3
  CHECK_FALSE(a.in_domain(x, Point::padic(Rational(2))));
}

TEST_CASE("the affine map on the line is a negative control") {
  Action a = Action::affine_on_line(3);
  Report r = check_axioms(a, default_probes(a, 9));
  CHECK_FALSE(r.ok());
  CHECK(has_law(r, "composition"));
}

TEST_CASE("broken tables are caught") {
  Group z3 = catalog_group("Z/3");
  // 0.1 undefined, but 0.(2.2) = 0.1 is reached through 0.2 then 2
  Action a = Action::finite_table(Space::finite(3), z3, {{0, -1, 2}, {1, 2, 0}, {2, 0, 1}});
  Report r = check_axioms(a, default_probes(a));
  CHECK(has_law(r, "compatibility"));
  Action b = Action::finite_table(Space::finite(2), z3, {{1, 1, 0}, {1, 0, 1}});
  CHECK(has_law(check_axioms(b, default_probes(b)), "identity"));
  CHECK_THROWS_AS(Action::finite_table(Space::finite(2), z3, {{0, 1, 5}, {1, 0, 1}}), Error);
}

TEST_CASE("groupoid operations") {
  Action a = Action::right_translation(catalog_group("S3"));
  const Group& g = a.group();
  for (const Point& x : g.elements())
    for (const Point& p : g.elements()) {
      Arrow u{x, p};
      Arrow v = groupoid_inverse(a, u);
      CHECK(gamma_map(a, gamma_map(a, u)) == u);
      auto c = groupoid_compose(a, u, v);
      REQUIRE(c);
      CHECK(*c == Arrow{x, g.identity()});
    }
}

TEST_CASE("commuting products") {
  Group s3 = catalog_group("S3");
  Action two = Action::commuting_product(Action::left_translation(s3), Action::right_translation(s3));
  CHECK(check_axioms(two, default_probes(two)).ok());
  // x.(h,k) = h x k
  Point h = Point::at(1), k = Point::at(3), x = Point::at(4);
  CHECK(*two.act(x, Point::pair(h, k)) == s3.mul(s3.mul(h, x), k));
}

TEST_CASE("properness and local homeomorphism") {
  CHECK(is_proper(q3_right()).verdict == Verdict::Yes);
  CHECK(is_proper(Action::trivial(Space::padic_line(3), Group::padic_add(3))).verdict == Verdict::No);
  Action q = q3_right();
  auto w = locally_homeomorphic_witness(q, Point::padic(Rational(1)));
  REQUIRE(w.witness);
  auto back = w.witness->inverse(Point::padic(Rational(4)));
  REQUIRE(back);
  CHECK(*back == Point::padic(Rational(3)));
  CHECK_FALSE(locally_homeomorphic_witness(Action::trivial(Space::padic_line(3), Group::padic_add(3)), Point::padic(Rational(0))).witness);
}

TEST_CASE("materialized tables agree with the constructor tree") {
  Rng rng(21);
  for (std::size_t i = 0; i < 20; ++i) {
    FiniteInstance inst = random_finite_instance(rng, i);
    const Action& a = inst.action;
    CHECK(a.is_global());
    ActionTable t = materialize(a);
    auto elts = a.group().elements();
    for (std::size_t x = 0; x < t.points; ++x)
      for (std::size_t k = 0; k < elts.size(); ++k)
        CHECK(t.act[x][k] == static_cast<int>(a.act(Point::at(static_cast<std::int64_t>(x)), elts[k])->index));
    // same verdicts as the tree checker
    Action r = Action::restrict_open(a, inst.opens[0]);
    CHECK(table_axioms(materialize(r), Exec::Serial).ok() == check_axioms(r, default_probes(r)).ok());
  }
}
