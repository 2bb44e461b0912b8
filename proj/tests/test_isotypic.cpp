#include <doctest.h>

#include "locpoly/catalog.hpp"
#include "locpoly/isotypic.hpp"
#include "locpoly/lift.hpp"
#include "oracle.hpp"

using namespace locpoly;

namespace {

const Space Q3 = Space::padic_line(3);
const Group G = Group::padic_add(3);

Cell ball(long long c, std::int64_t level) { return make_ball(3, Rational(c), level); }

Mat scaled(Mat m, const Scalar& c) {
  for (auto& r : m)
    for (auto& x : r) x *= c;
  return m;
}

}  // namespace

TEST_CASE("shipped tables are irreducible representations") {
  for (const char* name : {"Z/3", "Z/4", "S3", "D4", "Q8"}) {
    std::size_t sum = 0;
    for (const Representation& r : catalog_irreps(name)) {
      RepresentationReport rep = verify_representation(r);
      CHECK(rep.homomorphism);
      CHECK(rep.irreducible);
      sum += r.dim * r.dim;
    }
    CHECK(sum == static_cast<std::size_t>(catalog_group(name).order()));
  }
}

TEST_CASE("schur constant for the standard representation of S3") {
  auto irreps = catalog_irreps("S3");
  const Representation& std2 = irreps[2];
  REQUIRE(std2.dim == 2);
  SchurReport r = schur_orthogonality(std2, std2);
  CHECK(r.pattern);
  CHECK(r.constant == Scalar(Rational(1) / Rational(2)));
  CHECK(r.printed_constant == Scalar(2));
  CHECK_FALSE(r.agrees_with_printed);
  SchurReport x = schur_orthogonality(irreps[0], std2);
  CHECK(x.pattern);
  CHECK(x.constant == Scalar(0));
}

TEST_CASE("projector normalization on the regular representation") {
  // brute force: P = k (1/6) sum chi(u^-1) R(u) is idempotent for exactly one k != 0
  Group s3 = catalog_group("S3");
  Representation reg = regular_representation(s3);
  for (const Representation& r : catalog_irreps("S3")) {
    Mat raw(6, Vec(6));
    for (std::size_t u = 0; u < 6; ++u) {
      std::size_t ui = static_cast<std::size_t>(s3.inv(Point::at(static_cast<std::int64_t>(u))).index);
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) raw[i][j] += reg.rho[u][i][j] * r.character(ui) / Scalar(6);
    }
    std::vector<Scalar> found;
    for (long long num = 1; num <= 12; ++num) {
      Scalar k = Scalar(Rational(num) / Rational(2));
      Mat p = scaled(raw, k);
      if (matmul(p, p) == p) found.push_back(k);
    }
    REQUIRE(found.size() == 1);
    CHECK(found[0] == Scalar(static_cast<long long>(r.dim)));
    CHECK(idempotent_normalization(r) == found[0]);
  }
}

TEST_CASE("Z/3 character projectors on level-1 functions") {
  Action a = Action::right_translation(G);
  IsotypicDecomposition d =
      decompose_isotypic(a, OpenSet::of(Q3, {ball(0, 0)}), Subgroup::ball(0), catalog_irreps("Z/3"), 1);
  CHECK(d.family.size() == 3);
  CHECK(d.complete);
  CHECK(d.idempotent);
  CHECK(d.orthogonal);
  CHECK(d.commuting);
  CHECK(d.failures.empty());
  for (const IsotypicComponent& c : d.components) CHECK(c.multiplicity == Rational(1));
  // the translation matrices generate a cyclic group of order 3
  std::vector<std::vector<Scalar>> rows;
  for (const Mat& m : d.pi) {
    std::vector<Scalar> flat;
    for (const Vec& r : m) flat.insert(flat.end(), r.begin(), r.end());
    rows.push_back(flat);
  }
  CHECK(oracle::rank(rows) == 3);
}

TEST_CASE("isotypic parts of a function add up to it") {
  Action a = Action::right_translation(G);
  Func f = Func::indicator(Q3, {ball(1, 1)}, 2) + Func::indicator(Q3, {ball(2, 1)});
  Func sum(Q3);
  for (const Representation& r : catalog_irreps("Z/3")) sum = sum + isotypic_projection(a, f, r, Subgroup::ball(0)).value;
  CHECK(sum == f);
  MatrixComponents m = matrix_components(a, f, catalog_irreps("Z/3")[1], Subgroup::ball(0));
  CHECK(m.quotient.transversal.size() == 3);
}

TEST_CASE("finite quotients") {
  FiniteQuotient q = finite_quotient(G, Subgroup::ball(0), Subgroup::ball(2));
  CHECK(q.group.order() == 9);
  CHECK(q.group.table() == cyclic_table(9));
  auto irreps = quotient_irreps(q);
  REQUIRE(irreps);
  CHECK(irreps->size() == 9);
}
