// Acceptance run: one PASS/FAIL line per criterion.
// usage: acceptance <locpoly binary> <scenario dir>

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "locpoly/algebra.hpp"
#include "locpoly/catalog.hpp"
#include "locpoly/cli.hpp"
#include "locpoly/decompose.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/isotypic.hpp"
#include "locpoly/kernels.hpp"
#include "locpoly/lift.hpp"
#include "locpoly/vf.hpp"

using namespace locpoly;

namespace {

constexpr std::uint64_t kSeed = 2026;

std::string g_bin;
std::string g_dir;

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool c, const std::string& what) {
    if (!c && ok) detail = what;
    ok = ok && c;
  }
};

Json load(const std::string& name) {
  std::ifstream in(g_dir + "/" + name);
  if (!in) throw Error("cannot open scenario " + name);
  return Json::parse(in);
}

Cell ball(long long c, std::int64_t level) { return make_ball(3, Rational(c), level); }
const Space Q3 = Space::padic_line(3);
const Group G = Group::padic_add(3);
Func ind(std::vector<Cell> cells, const Scalar& v = Scalar(1)) { return Func::indicator(Q3, cells, v); }
Action right() { return Action::right_translation(G); }
Action units() { return Action::restrict_open(right(), OpenSet::of(Q3, {ball(1, 1), ball(2, 1)})); }

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

// --- table oracles -----------------------------------------------------------

using Triple = std::tuple<int, int, int>;

// Identity and compatibility laws straight from the definition.
std::set<Triple> axiom_oracle(const ActionTable& t) {
  std::set<Triple> out;
  const int n = static_cast<int>(t.order);
  for (int x = 0; x < static_cast<int>(t.points); ++x) {
    if (!t.present[static_cast<std::size_t>(x)]) continue;
    if (t.act[x][t.identity] != x) out.insert({x, t.identity, -1});
    for (int p = 0; p < n; ++p) {
      int xp = t.act[x][p];
      if (xp < 0) continue;
      for (int q = 0; q < n; ++q)
        if (t.act[x][t.mul[p][q]] != t.act[xp][q]) out.insert({x, p, q});
    }
  }
  return out;
}

std::set<Triple> kernel_triples(const TableReport& r) {
  std::set<Triple> out;
  for (const TableViolation& v : r.violations) out.insert({v.x, v.p, v.law == "identity" ? -1 : v.q});
  return out;
}

// Groupoid on Gamma = {(x,p) : x.p defined}, gamma(x,p) = (x.p, p^-1), and
// the intertwiner between (x,p)<1 q = (x.q, q^-1 p) and (x,p)<2 q = (x, pq).
std::size_t groupoid_oracle(const ActionTable& t) {
  const int n = static_cast<int>(t.order), e = t.identity;
  auto in = [&](int x, int p) { return x >= 0 && t.present[static_cast<std::size_t>(x)] && t.act[x][p] >= 0; };
  std::size_t bad = 0;
  for (int x = 0; x < static_cast<int>(t.points); ++x) {
    if (!t.present[static_cast<std::size_t>(x)]) continue;
    if (!in(x, e)) ++bad;
    for (int p = 0; p < n; ++p) {
      if (!in(x, p)) continue;
      int y = t.act[x][p], pi = t.inverse[p];
      // gamma stays in Gamma and squares to the identity
      if (!in(y, pi) || t.act[y][pi] != x) ++bad;
      // units and inverses: (x,p)(y,p^-1) = (x,e)
      if (!in(x, t.mul[p][pi])) ++bad;
      for (int q = 0; q < n; ++q) {
        // composable (x,p)(y,q) = (x,pq), associativity through a third arrow
        if (in(y, q)) {
          if (!in(x, t.mul[p][q]) || t.act[x][t.mul[p][q]] != t.act[y][q]) ++bad;
          int z = t.act[y][q];
          for (int r = 0; r < n; ++r)
            if (in(z, r) && t.mul[t.mul[p][q]][r] != t.mul[p][t.mul[q][r]]) ++bad;
        }
        // intertwiner
        if (in(x, q)) {
          int xq = t.act[x][q], w = t.mul[t.inverse[q]][p];
          if (in(xq, w)) {
            int lhs_x = t.act[xq][w], lhs_p = t.inverse[w];
            int rhs_x = y, rhs_p = t.mul[pi][q];
            if (!in(rhs_x, rhs_p) || lhs_x != rhs_x || lhs_p != rhs_p) ++bad;
          }
        }
      }
    }
  }
  return bad;
}

// --- shared suite reports ----------------------------------------------------

const Json& suite(const std::string& family, std::size_t count) {
  static std::map<std::string, Json> cache;
  auto it = cache.find(family);
  if (it == cache.end()) it = cache.emplace(family, suite_report(family, count, kSeed)).first;
  return it->second;
}

// --- criteria ----------------------------------------------------------------

Outcome axioms() {
  Outcome o;
  const Json& r = suite("finite", 200);
  o.require(r["instances"].size() == 200, "expected 200 instances");
  std::size_t faults = 0, checked = 0;
  for (const Json& inst : r["instances"]) {
    for (const auto& [key, c] : inst["checks"].items()) {
      o.require(c["axioms"] == 0, inst["name"].get<std::string>() + "/" + key + " reports axiom violations");
      checked += c["checked"].get<std::size_t>();
    }
    if (inst.contains("fault")) ++faults;
  }
  // Re-derive every instance and its fault; compare with the definition.
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(instance_seed(kSeed, i));
    FiniteInstance inst = random_finite_instance(rng, i);
    o.require(inst.action.group().order() <= 24 && inst.action.space().size() <= 12, inst.name + " exceeds the size limits");
    std::vector<Action> all{inst.action, Action::derived1(inst.action), Action::derived2(inst.action)};
    for (const OpenSet& y : inst.opens) all.push_back(Action::restrict_open(inst.action, y));
    for (const Action& a : all) o.require(axiom_oracle(materialize(a)).empty(), inst.name + ": oracle finds a violation");
    if (inst.action.group().order() < 2) continue;
    FaultInstance f = seeded_fault(rng, inst.action);
    std::set<Triple> want = axiom_oracle(f.table);
    std::set<Triple> got = kernel_triples(table_axioms(f.table, Exec::Parallel));
    o.require(!want.empty() && got == want, inst.name + ": fault violations differ from the oracle");
    for (const auto& [x, p, q] : got) {
      bool uses = (x == f.x && p == f.g) || (q >= 0 && x == f.x && f.table.mul[p][q] == f.g) ||
                  (q >= 0 && q == f.g && f.table.act[x][p] == f.x);
      o.require(uses, inst.name + ": a violation does not use the faulted entry");
    }
  }
  o.detail = o.ok ? std::to_string(checked) + " law checks, " + std::to_string(faults) + " seeded faults" : o.detail;
  return o;
}

Outcome groupoid() {
  Outcome o;
  const Json& r = suite("finite", 200);
  std::size_t tables = 0;
  for (const Json& inst : r["instances"])
    for (const auto& [key, c] : inst["checks"].items())
      if (c.contains("groupoid")) o.require(c["groupoid"] == 0, inst["name"].get<std::string>() + "/" + key + " groupoid");
  for (std::size_t i = 0; i < 200; ++i) {
    Rng rng(instance_seed(kSeed, i));
    FiniteInstance inst = random_finite_instance(rng, i);
    std::vector<Action> all{inst.action};
    for (const OpenSet& y : inst.opens) all.push_back(Action::restrict_open(inst.action, y));
    for (const Action& a : all) {
      ActionTable t = materialize(a);
      o.require(groupoid_oracle(t) == 0, inst.name + ": groupoid oracle fails");
      o.require(table_groupoid(t, Exec::Serial) == table_groupoid(t, Exec::Parallel), inst.name + ": kernels disagree");
      ++tables;
    }
  }
  if (o.ok) o.detail = std::to_string(tables) + " tables";
  return o;
}

Outcome vf() {
  Outcome o;
  Json r = vf_command(load("z3units_vf.json"));
  o.require(r["ok"] == true && r["matches_expected"] == true, "vf report not ok");
  o.require(r["composition"]["failures"] == 0 && r["composition"]["pairs"].get<int>() > 0, "composition law fails");
  Func f = ind({ball(1, 1)});
  VfSet v = compute_Vf(units(), f);
  // residue oracle: p in V_f iff x - p is a unit for every x = 1 mod 3
  for (long long p = 0; p < 81; ++p) {
    bool want = true;
    for (long long x = 1; x < 81; x += 3) want = want && mod(x - p, 3) != 0;
    o.require(v.contains(Point::padic(Rational(p))) == want, "V_f differs from the residue oracle at " + std::to_string(p));
  }
  for (long long k : {1, 2, 4, 5, 7, 8}) o.require(!v.contains(Point::padic(Rational(k) / Rational(3))), "V_f leaves Z3");
  // every pair of the level-2 transversal
  std::size_t pairs = 0;
  for (const Point& p : coset_transversal(G, Subgroup::ball(0), Subgroup::ball(2)))
    for (const Point& q : coset_transversal(G, Subgroup::ball(0), Subgroup::ball(2))) {
      if (!v.contains(p)) continue;
      CompositionReport c = composition_law_check(units(), f, p, q);
      long long qp = mod((q.value + p.value).num().convert_to<long long>(), 3);
      o.require(c.ok() && c.qp_in_Vf == (qp != 1), "composition law at a transversal pair");
      ++pairs;
    }
  if (o.ok) o.detail = "V_f = " + v.describe() + ", " + std::to_string(pairs) + " pairs";
  return o;
}

// Dual points and reconstruction checked by evaluation.
bool certificate_sound(const Action& a, const Func& f, const PolynomialCertificate& cert, std::string* why) {
  auto fail = [&](const char* what) {
    *why = what;
    return false;
  };
  const std::size_t n = cert.basis.size();
  DualPoints dp = dual_points(cert.basis);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Scalar s;
      for (std::size_t j = 0; j < dp.points.size(); ++j) s += dp.coeffs[j][k] * cert.basis[i].evaluate(dp.points[j]);
      if (!(s == Scalar(i == k ? 1 : 0))) return fail("dual points");
    }
  CoefficientFunctions cf = coefficient_functions(a, f, cert);
  for (const Point& v : cert.transversal) {
    Func sum(a.space());
    for (std::size_t i = 0; i < cf.basis.size(); ++i) sum = sum + cf.phi[i].evaluate(v) * cf.basis[i];
    if (!(sum == induced_act(a, v, f))) return fail("reconstruction");
  }
  if (!(induced_act(a, a.group().identity(), f) == f)) return fail("identity");
  if (!validate_certificate(a, f, cert).ok) return fail("validation");
  return true;
}

Outcome polynomials() {
  Outcome o;
  struct Want {
    const char* file;
    int dim;
    const char* g0;
  };
  for (Want w : {Want{"z3_whole_poly.json", 1, "ball(0)"}, Want{"z3_poly.json", 3, "ball(0)"}, Want{"z3units_poly.json", 1, "ball(1)"}}) {
    Json r = poly_check_command(load(w.file));
    o.require(r["ok"] == true, std::string(w.file) + " not ok");
    o.require(r["certificate"]["dim"] == w.dim && r["certificate"]["G0_name"] == w.g0, std::string(w.file) + " has the wrong certificate");
    o.require(r["checks"]["validated"] == true, std::string(w.file) + " does not validate");
  }
  std::vector<std::tuple<Action, Func, std::size_t>> cases{
      {right(), ind({ball(0, 0)}), 1}, {right(), ind({ball(0, 1)}), 3}, {units(), ind({ball(1, 1)}), 1}};
  for (const auto& [a, f, dim] : cases) {
    PolynomialResult p = is_polynomial(a, f);
    o.require(p.certificate && p.certificate->dim() == dim, "library dimension");
    std::string why;
    o.require(p.certificate && certificate_sound(a, f, *p.certificate, &why), "independent validation: " + why);
  }
  o.require(!saturate(units(), OpenSet::of(Q3, {ball(1, 1)}), Subgroup::ball(0)).set, "saturation under Z3 should fail");
  if (o.ok) o.detail = "dimensions 1, 3, 1";
  return o;
}

Outcome duals() {
  Outcome o;
  std::size_t n = 0;
  std::string why;
  auto check = [&](const Action& a, const Func& f) {
    PolynomialResult p = is_polynomial(a, f);
    if (!p.certificate) return;
    o.require(certificate_sound(a, f, *p.certificate, &why), "certificate fails: " + why);
    Json c = certificate_checks(a, f, *p.certificate);
    o.require(c["ok"] == true, "certificate_checks disagrees");
    ++n;
  };
  check(right(), ind({ball(0, 0)}));
  check(right(), ind({ball(0, 1)}));
  check(units(), ind({ball(1, 1)}));
  Rng rng(kSeed);
  for (int i = 0; i < 25; ++i) check(right(), random_padic_func(rng));
  for (int i = 0; i < 8; ++i) check(Action::right_translation(Group::padic_affine(3)), random_affine_func(rng));
  Group s3 = catalog_group("S3");
  check(Action::right_translation(s3), Func::indicator(s3.space(), {make_point_cell(2)}, Scalar::zeta(3)));
  if (o.ok) o.detail = std::to_string(n) + " certificates";
  return o;
}

Outcome isotypic() {
  Outcome o;
  Json z = isotypic_command(load("z3_isotypic.json"));
  const Json& d = z["decomposition"];
  o.require(z["ok"] == true && d["complete"] == true && d["idempotent"] == true && d["orthogonal"] == true &&
                d["commuting"] == true,
            "Z/3 projectors");
  o.require(d["components"].size() == 3, "three components");
  for (const Json& c : d["components"]) o.require(c["multiplicity"] == "1/1", "multiplicity");
  Json s = isotypic_command(load("s3.json"));
  bool found = false;
  for (const Json& p : s["schur"]["pairs"])
    if (p["first"] == "standard" && p["second"] == "standard") {
      found = true;
      o.require(p["constant"] == "1/2" && p["printed_constant"] == "2/1" && p["agrees_with_printed"] == false, "Schur constant");
    }
  o.require(found && s["schur"]["printed_disagreements"] == 1, "disagreement flag");
  // brute force: of all k = a/b with 1 <= a, b <= 12, exactly one makes
  // k * (1/6) sum chi(u^-1) R(u) idempotent on the regular representation
  Group g = catalog_group("S3");
  const auto& tab = g.table();
  const std::size_t n = 6;
  for (const Representation& r : catalog_irreps("S3")) {
    Mat raw(n, Vec(n));
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t ui = static_cast<std::size_t>(g.inv(Point::at(static_cast<std::int64_t>(u))).index);
      for (std::size_t x = 0; x < n; ++x) raw[x][static_cast<std::size_t>(tab[x][u])] += r.character(ui) / Scalar(6);
    }
    std::set<Rational> hits;
    for (long long a = 1; a <= 12; ++a)
      for (long long b = 1; b <= 12; ++b) {
        Scalar k(Rational(a) / Rational(b));
        Mat p = raw;
        for (auto& row : p)
          for (auto& v : row) v *= k;
        if (matmul(p, p) == p) hits.insert(Rational(a) / Rational(b));
      }
    o.require(hits.size() == 1 && Scalar(*hits.begin()) == idempotent_normalization(r) &&
                  *hits.begin() == Rational(static_cast<long long>(r.dim)),
              "normalization of " + r.name);
  }
  if (o.ok) o.detail = "Schur constant 1/2 against printed 2";
  return o;
}

Outcome convolution() {
  Outcome o;
  Json c = convolve_command(load("convolve_z3.json"));
  o.require(c["ok"] == true && c["matches_expected"] == true, "1_Z3 * 1_Z3");
  o.require(convolve(ConvolutionContext{G}, ind({ball(0, 0)}), ind({ball(0, 0)})) == ind({ball(0, 0)}), "1_Z3 * 1_Z3");
  std::size_t units_checked = 0;
  for (const char* fam : {"padic", "affine"}) {
    const Json& r = suite(fam, 100);
    o.require(r["instances"].size() == 100, "expected 100 instances");
    for (const Json& inst : r["instances"]) {
      const Json& k = inst["checks"];
      std::string name = inst["name"];
      o.require(k["associativity"] == true, name + ": associativity");
      o.require(k["star anti-multiplicative"] == true && k["star involutive"] == true, name + ": star");
      o.require(k["left unit"] == true && k["right unit"] == true, name + ": local unit");
      ++units_checked;
    }
  }
  Group a = Group::padic_affine(3);
  Rng rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    Point x = Point::affine(rng.uniform(-4, 4), Rational(rng.uniform(-9, 9)) / Rational(rng.uniform(1, 3)));
    Point y = Point::affine(rng.uniform(-4, 4), Rational(rng.uniform(-9, 9)) / Rational(rng.uniform(1, 3)));
    o.require(a.modular(a.mul(x, y)) == a.modular(x) * a.modular(y), "modular function is not a homomorphism");
    o.require(a.modular(Point::affine(0, Rational(rng.uniform(-40, 40)))) == Rational(1), "modular function on {1} x Z3");
  }
  for (int i = 0; i < 20; ++i) {
    Func f = random_affine_func(rng);
    std::set<Rational> coarse, fine;
    for (const Cell& c : f.support_cells()) {
      coarse.insert(a.modular(representative(a.space(), c)));
      for (const Cell& d : cells_at_level(a.space(), c, finest_level(a.space(), c) + 2))
        fine.insert(a.modular(representative(a.space(), d)));
    }
    o.require(coarse == fine && coarse.size() <= 3, "modular values on a compact set");
  }
  if (o.ok) o.detail = "200 triples, " + std::to_string(units_checked) + " local units";
  return o;
}

Outcome ideal() {
  Outcome o;
  std::size_t pairs = 0, eigen = 0;
  for (const char* fam : {"padic", "affine"})
    for (const Json& inst : suite(fam, 100)["instances"]) {
      const Json& k = inst["checks"];
      o.require(k["ideal"] == true, inst["name"].get<std::string>() + ": ideal");
      o.require(k["eigen implication"] == true, inst["name"].get<std::string>() + ": eigen");
      ++pairs;
      if (k["eigen applicable"] == true) ++eigen;
    }
  o.require(pairs >= 50 && eigen >= 20, "too few instances");
  if (o.ok) o.detail = std::to_string(pairs) + " pairs, " + std::to_string(eigen) + " eigen instances";
  return o;
}

Outcome decomposition() {
  Outcome o;
  for (const char* file : {"decompose_q3.json", "decompose_units.json"}) {
    Json r = decompose_command(load(file));
    o.require(r["ok"] == true && r["reconstructs"] == true && r["converse"]["polynomial"] == true, std::string(file));
    o.require(r["F_polynomial"]["first_factor"] == true && r["F_polynomial"]["second_factor"] == true,
              std::string(file) + ": F polynomial");
    o.require(r["rank"] == 1, std::string(file) + ": rank");
  }
  // pointwise oracle for F(x,p) = f(x.p) g(p)
  std::vector<std::tuple<Action, Func, Func>> cases{{right(), ind({ball(0, 0)}), ind({ball(0, 0)})},
                                                    {units(), ind({ball(1, 1)}), ind({ball(0, 1)})},
                                                    {right(), ind({ball(1, 1)}) + ind({ball(0, 2)}, 2), ind({ball(0, 1)}, 5)}};
  for (const auto& [a, f, g] : cases) {
    ProductDecomposition d = decompose_product(a, f, g);
    for (long long x = -2; x < 27; ++x)
      for (long long p = 0; p < 27; ++p) {
        Point X = Point::padic(Rational(x)), P = Point::padic(Rational(p));
        Scalar want = a.in_domain(X, P) ? f.evaluate(*a.act(X, P)) * g.evaluate(P) : Scalar(0);
        Scalar got;
        for (std::size_t i = 0; i < d.rank(); ++i) got += d.f_parts[i].evaluate(X) * d.g_parts[i].evaluate(P);
        o.require(got == want && d.F.evaluate(Point::pair(X, P)) == want, "reconstruction differs at a point");
      }
    ConverseVerdict cv = converse_polynomiality(a, f, d.f_parts, d.g_parts, g);
    o.require(cv.polynomial && cv.certificate && validate_certificate(a, f, *cv.certificate).ok, "converse certificate");
    o.require(product_polynomiality(a, d.F, true).ok(), "F is not polynomial for the derived action");
  }
  if (o.ok) o.detail = "3 instances, pointwise";
  return o;
}

Outcome lifting() {
  Outcome o;
  Action two = Action::commuting_product(Action::left_translation(G), right());
  Func f = ind({ball(0, 0)});
  LiftResult r = lift_subgroup_polynomiality(two, Subgroup::product(Subgroup::trivial(), Subgroup::whole()), f);
  o.require(r.certificate && validate_certificate(two, f, *r.certificate).ok, "lift: " + r.diagnostic);
  LiftResult control = lift_subgroup_polynomiality(Action::trivial(Q3, G), Subgroup::ball(0), f);
  o.require(!control.certificate && !control.diagnostic.empty(), "trivial control should decline");
  Group s3 = catalog_group("S3");
  Action fin = Action::commuting_product(Action::left_translation(s3), Action::right_translation(s3));
  std::vector<std::pair<Action, Func>> cases{
      {fin, Func::indicator(s3.space(), {make_point_cell(1)}, 2) + Func::indicator(s3.space(), {make_point_cell(4)})},
      {two, ind({ball(1, 1)}) + ind({ball(0, 2)}, 2)}};
  for (const auto& [a, g] : cases) {
    PolynomialResult first = is_polynomial(a.base(), g), second = is_polynomial(a.second_factor(), g);
    o.require(first.certificate && second.certificate, "factor certificates");
    if (!first.certificate || !second.certificate) continue;
    PolynomialCertificate j = joint_polynomiality(a, g, *first.certificate, *second.certificate);
    o.require(validate_certificate(a, g, j).ok, "joint certificate");
    o.require(commuting_left_polynomiality(a, g).ok(), "commuting left factor");
  }
  if (o.ok) o.detail = "lift certified, control declined: " + control.diagnostic;
  return o;
}

std::pair<int, std::string> capture(const std::string& cmd) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw Error("cannot run " + cmd);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  return {pclose(p), out};
}

Outcome determinism() {
  Outcome o;
  const std::string cmd = "'" + g_bin + "' suite --family all --seed 7";
  auto [c1, a] = capture(cmd);
  auto [c2, b] = capture(cmd);
  o.require(c1 == 0 && c2 == 0, "suite exit status");
  o.require(!a.empty() && a == b, "reports differ");
  if (o.ok) o.detail = std::to_string(a.size()) + " identical bytes";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <locpoly binary> <scenario dir>\n";
    return 2;
  }
  g_bin = argv[1];
  g_dir = argv[2];
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"partial-action axioms and seeded faults", axioms},
      {"groupoid laws, gamma and intertwiner", groupoid},
      {"translate neighborhood and composition law", vf},
      {"polynomial detection", polynomials},
      {"dual points and reconstruction", duals},
      {"isotypic projectors and Schur constant", isotypic},
      {"convolution algebra and local units", convolution},
      {"polynomial ideal and eigenfunctions", ideal},
      {"product decomposition", decomposition},
      {"subgroup lifting and commuting actions", lifting},
      {"determinism of the suite", determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 60) {
      o.ok = false;
      o.detail += " (over 60 s)";
    }
    if (!o.ok) ++failed;
    std::printf("%s %2zu %-45s %6.2fs  %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
