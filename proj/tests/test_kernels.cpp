#include <doctest.h>

#include <set>
#include <tuple>

#include "locpoly/catalog.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/kernels.hpp"

using namespace locpoly;

namespace {

// Violations of the compatibility and composition laws, recomputed with sets.
std::set<std::tuple<int, int, int>> law_oracle(const ActionTable& t) {
  std::set<std::tuple<int, int, int>> out;
  const int n = static_cast<int>(t.order);
  for (int x = 0; x < static_cast<int>(t.points); ++x) {
    if (!t.present[static_cast<std::size_t>(x)]) continue;
    for (int p = 0; p < n; ++p) {
      int xp = t.act[x][p];
      if (xp < 0) continue;
      for (int q = 0; q < n; ++q) {
        int lhs = t.act[x][t.mul[p][q]], rhs = t.act[xp][q];
        if (lhs != rhs) out.insert({x, p, q});
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("serial and parallel kernels agree") {
  Rng rng(99);
  for (std::size_t i = 0; i < 30; ++i) {
    FiniteInstance inst = random_finite_instance(rng, i);
    for (const Action& a : {inst.action, Action::restrict_open(inst.action, inst.opens[0]), Action::derived1(inst.action)}) {
      ActionTable t = materialize(a);
      CHECK(table_axioms(t, Exec::Serial) == table_axioms(t, Exec::Parallel));
      CHECK(table_axioms(t, Exec::Serial).ok());
    }
    ActionTable t = materialize(inst.action);
    CHECK(table_groupoid(t, Exec::Serial) == table_groupoid(t, Exec::Parallel));
    CHECK(table_groupoid(t, Exec::Serial).ok());
  }
}

TEST_CASE("seeded faults produce exactly the oracle violations") {
  Rng rng(5);
  for (std::size_t i = 0; i < 40; ++i) {
    FiniteInstance inst = random_finite_instance(rng, i);
    if (inst.action.group().order() < 2) continue;
    FaultInstance f = seeded_fault(rng, inst.action);
    TableReport r = table_axioms(f.table, Exec::Parallel);
    std::set<std::tuple<int, int, int>> got;
    for (const TableViolation& v : r.violations) {
      CHECK(v.law != "identity");
      got.insert({v.x, v.p, v.q});
    }
    CHECK(got == law_oracle(f.table));
    CHECK_FALSE(got.empty());
  }
}

TEST_CASE("groupoid kernel catches a broken inverse") {
  Group z3 = catalog_group("Z/3");
  ActionTable t = table_of(3, z3, {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(table_groupoid(t, Exec::Serial).ok());
  t.act[1][2] = -1;
  CHECK_FALSE(table_groupoid(t, Exec::Serial).ok());
}

TEST_CASE("convolution pairs keep input order") {
  Rng rng(3);
  std::vector<std::pair<Func, Func>> pairs;
  for (int i = 0; i < 12; ++i) pairs.push_back({random_padic_func(rng), random_padic_func(rng)});
  ConvolutionContext ctx{Group::padic_add(3)};
  CHECK(convolve_pairs(ctx, pairs, Exec::Serial) == convolve_pairs(ctx, pairs, Exec::Parallel));
}

TEST_CASE("indexed runner is ordered and rethrows") {
  auto v = run_indexed<int>(100, [](std::size_t i) { return static_cast<int>(i * i); }, Exec::Parallel);
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
  CHECK_THROWS_AS(run_indexed<int>(10, [](std::size_t i) -> int { if (i == 7) throw Error("seven"); return 0; }, Exec::Parallel),
                  Error);
}
