#include "locpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "locpoly/algebra.hpp"
#include "locpoly/catalog.hpp"
#include "locpoly/decompose.hpp"
#include "locpoly/generators.hpp"
#include "locpoly/isotypic.hpp"
#include "locpoly/vf.hpp"

namespace locpoly {

namespace {

const Json& need(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(path + ": missing field '" + key + "'");
  return j.at(key);
}

Json head(const std::string& command, const Json& scenario, const std::string& property) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"scenario", scenario.value("name", "")},
              {"property", property}};
}

Func function_of(const Json& s, const char* key, const Space& sp) {
  const Json& fs = need(s, "functions", "scenario");
  return func_from(sp, need(fs, key, "functions"), std::string("functions.") + key);
}

Json violations_json(const Report& r) {
  Json v = Json::array();
  for (const Violation& x : r.violations) v.push_back(Json{{"law", x.law}, {"witness", x.witness}});
  return v;
}

Json load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  Json s;
  try {
    s = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
  if (!s.is_object()) throw SchemaError(path + ": scenario must be an object");
  const Json& v = need(s, "schema_version", path);
  if (!v.is_number_integer() || v.get<int>() != kSchemaVersion)
    throw SchemaError(path + ": unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
  if (!need(s, "name", path).is_string()) throw SchemaError(path + ": name must be a string");
  return s;
}

bool touches(const ActionTable& t, const TableViolation& v, int fx, int fg) {
  auto is_fault = [&](int x, int g) { return x == fx && g == fg; };
  if (v.law == "identity") return is_fault(v.x, t.identity);
  int xp = t.act[static_cast<std::size_t>(v.x)][static_cast<std::size_t>(v.p)];
  int pq = t.mul[static_cast<std::size_t>(v.p)][static_cast<std::size_t>(v.q)];
  return is_fault(v.x, v.p) || is_fault(v.x, pq) || (xp >= 0 && is_fault(xp, v.q));
}

std::string padded(std::size_t i) {
  std::string s = std::to_string(i);
  return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

Subgroup deeper(const Group& g, const Subgroup& h) {
  std::int64_t lvl = subgroup_level(g, h);
  return level_subgroup(g, h, (lvl == kWholeLevel ? 0 : lvl) + 1);
}

Json algebra_instance(const Group& g, Func f, Func h, Func k, const std::string& name) {
  ConvolutionContext ctx{g};
  Json out{{"name", name}};
  std::size_t bad = 0;
  auto check = [&](const char* key, bool ok) {
    out["checks"][key] = ok;
    if (!ok) ++bad;
  };
  Func fh = convolve(ctx, f, h);
  check("associativity", convolve(ctx, fh, k) == convolve(ctx, f, convolve(ctx, h, k)));
  check("star anti-multiplicative", convolution_star(ctx, fh) == convolve(ctx, convolution_star(ctx, h), convolution_star(ctx, f)));
  check("star involutive", convolution_star(ctx, convolution_star(ctx, f)) == f);
  LocalUnit u = local_unit(ctx, f);
  check("left unit", convolve(ctx, u.left, f) == f);
  check("right unit", convolve(ctx, f, u.right) == f);
  check("ideal", group_polynomial(g, fh).certificate.has_value());
  // f*xi = xi for a mixture of normalized subgroup indicators fixing xi
  LocalUnit v = local_unit(ctx, h);
  Func e1 = v.left;
  Func e2 = convolve(ctx, e1, e1);
  Func mix = Scalar(Rational(1, 3)) * e1 + Scalar(Rational(2, 3)) * e2;
  if (!g.is_discrete()) {
    Subgroup d = deeper(g, v.left_g0);
    std::vector<Cell> cells = subgroup_cells(g, d);
    Rational mass(0);
    for (const Cell& c : cells) mass += g.haar(c);
    mix = Scalar(Rational(1, 3)) * e1 + Scalar(Rational(2, 3) / mass) * Func::indicator(g.space(), cells);
  }
  EigenReport er = eigen_polynomial_check(ctx, mix, h);
  check("eigen applicable", er.applicable);
  check("eigen implication", er.holds());
  out["left_unit_subgroup"] = describe_subgroup(g, u.left_g0);
  out["violations"] = bad;
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Commands

Json certificate_checks(const Action& a, const Func& f, const PolynomialCertificate& cert) {
  Json out;
  DualPoints dp = dual_points(cert.basis);
  bool dual_ok = true;
  for (std::size_t i = 0; i < cert.basis.size(); ++i)
    for (std::size_t k = 0; k < cert.basis.size(); ++k) {
      Scalar s;
      for (std::size_t j = 0; j < dp.points.size(); ++j) s += dp.coeffs[j][k] * cert.basis[i].evaluate(dp.points[j]);
      dual_ok = dual_ok && s == Scalar(i == k ? 1 : 0);
    }
  out["dual_points"] = dual_ok;
  CoefficientFunctions cf = coefficient_functions(a, f, cert);
  bool rec_ok = true, identity_ok = false;
  for (const Point& v : cert.transversal) {
    Vec c;
    for (const Func& phi : cf.phi) c.push_back(phi.evaluate(v));
    Func sum = linear_combination(a.space(), cf.basis, c);
    rec_ok = rec_ok && sum == induced_act(a, v, f);
    if (v == a.group().identity()) identity_ok = sum == f;
  }
  out["reconstruction"] = rec_ok;
  out["identity_returns_f"] = identity_ok;
  ClosedSystem cs = closed_system(a, cert);
  out["closed_system"] = cs.ok();
  ValidationReport vr = validate_certificate(a, f, cert);
  out["validated"] = vr.ok;
  out["validation_failures"] = vr.failures;
  out["ok"] = dual_ok && rec_ok && identity_ok && cs.ok() && vr.ok;
  return out;
}

Json verify_axioms_command(const Json& s) {
  Action a = action_from(need(s, "action", "scenario"), "action");
  Probes pr = default_probes(a, static_cast<std::size_t>(s.value("budget", 27)));
  Report ax = check_axioms(a, pr);
  Report gr = check_groupoid(a, pr);
  Json out = head("verify-axioms", s, "partial-action-axioms");
  out["action"] = a.describe();
  out["probes"] = {{"points", pr.points.size()}, {"elements", pr.elements.size()}};
  out["axioms"] = {{"checked", ax.checked}, {"violations", violations_json(ax)}};
  out["groupoid"] = {{"property", "groupoid-laws"}, {"checked", gr.checked}, {"violations", violations_json(gr)}};
  out["ok"] = ax.ok() && gr.ok();
  return out;
}

Json vf_command(const Json& s) {
  Action a = action_from(need(s, "action", "scenario"), "action");
  Func f = function_of(s, "f", a.space());
  const Group& g = a.group();
  VfSet v = compute_Vf(a, f);
  Json out = head("vf", s, "translate-neighborhood");
  out["Vf"] = openset_json(v.set);
  out["Vf_text"] = v.describe();
  bool ok = true;
  if (s.contains("expect_Vf")) {
    bool match = v.set == openset_from(g.space(), s.at("expect_Vf"), "expect_Vf");
    out["matches_expected"] = match;
    ok = ok && match;
  }
  if (s.contains("pairs")) {
    const Json& p = s.at("pairs");
    Subgroup g0 = subgroup_from(g, need(p, "G0", "pairs"), "pairs.G0");
    std::int64_t level = need(p, "level", "pairs").get<std::int64_t>();
    std::vector<Point> t = coset_transversal(g, g0, level_subgroup(g, g0, level));
    std::size_t checked = 0, failed = 0;
    Json witnesses = Json::array();
    for (const Point& x : t) {
      if (!in_Vf(a, f, x)) continue;
      for (const Point& y : t) {
        ++checked;
        CompositionReport r = composition_law_check(a, f, x, y);
        if (!r.ok()) {
          ++failed;
          witnesses.push_back(Json{{"p", point_json(g.space(), x)}, {"q", point_json(g.space(), y)}});
        }
      }
    }
    out["composition"] = {{"property", "composition-law"}, {"pairs", checked}, {"failures", failed}, {"witnesses", witnesses}};
    ok = ok && failed == 0;
  }
  out["ok"] = ok;
  return out;
}

Json poly_check_command(const Json& s) {
  Action a = action_from(need(s, "action", "scenario"), "action");
  Func f = function_of(s, "f", a.space());
  const Group& g = a.group();
  std::vector<Subgroup> chain;
  if (s.contains("chain")) {
    const Json& c = s.at("chain");
    if (!c.is_array()) throw SchemaError("chain: expected an array");
    for (std::size_t i = 0; i < c.size(); ++i) chain.push_back(subgroup_from(g, c[i], "chain[" + std::to_string(i) + "]"));
  } else {
    chain = canonical_chain(g);
  }
  bool expect = s.value("expect_polynomial", true);
  PolynomialResult r = is_polynomial(a, f, chain);
  Json out = head("poly-check", s, "polynomial-certificate");
  out["attempts"] = r.attempts;
  bool ok = r.certificate.has_value() == expect;
  if (r.certificate) {
    out["certificate"] = certificate_json(a, *r.certificate);
    Json checks = certificate_checks(a, f, *r.certificate);
    ok = ok && checks["ok"].get<bool>();
    out["checks"] = checks;
  } else {
    out["certificate"] = nullptr;
  }
  out["expect_polynomial"] = expect;
  out["ok"] = ok;
  return out;
}

Json decompose_command(const Json& s) {
  Action a = action_from(need(s, "action", "scenario"), "action");
  const Group& g = a.group();
  Func f = function_of(s, "f", a.space());
  Func gg = function_of(s, "g", g.space());
  ProductDecomposition d = decompose_product(a, f, gg);
  Json out = head("decompose", s, "product-decomposition");
  Json parts = Json::array();
  for (std::size_t i = 0; i < d.rank(); ++i) parts.push_back(Json{{"f", func_json(d.f_parts[i])}, {"g", func_json(d.g_parts[i])}});
  out["rank"] = d.rank();
  out["parts"] = parts;
  out["grid_cells"] = d.grid;
  out["reconstructs"] = d.reconstructs;
  ConverseVerdict cv = converse_polynomiality(a, f, d.f_parts, d.g_parts, gg);
  out["converse"] = {{"polynomial", cv.polynomial}, {"notes", cv.notes}};
  if (cv.certificate) out["converse"]["certificate"] = certificate_json(a, *cv.certificate);
  bool g_poly = group_polynomial(g, gg).certificate.has_value();
  ProductPolynomiality pp = product_polynomiality(a, d.F, g_poly);
  out["F_polynomial"] = {{"first_factor", pp.first.certificate.has_value()},
                         {"second_factor", pp.second ? Json(pp.second->certificate.has_value()) : Json(nullptr)}};
  out["ok"] = d.reconstructs && cv.polynomial && pp.ok();
  return out;
}

Json isotypic_command(const Json& s) {
  Json out = head("isotypic", s, "isotypic-projectors");
  bool ok = true;
  if (s.contains("representations")) {
    const std::string name = need(s.at("representations"), "group", "representations").get<std::string>();
    std::vector<Representation> irreps = catalog_irreps(name);
    Json pairs = Json::array();
    std::size_t disagreements = 0;
    for (const Representation& x : irreps)
      for (const Representation& y : irreps) {
        SchurReport r = schur_orthogonality(x, y);
        ok = ok && r.pattern;
        if (r.equivalent && !r.agrees_with_printed) ++disagreements;
        pairs.push_back(Json{{"first", x.name},
                             {"second", y.name},
                             {"equivalent", r.equivalent},
                             {"pattern", r.pattern},
                             {"constant", scalar_json(r.constant)},
                             {"printed_constant", scalar_json(r.printed_constant)},
                             {"agrees_with_printed", r.agrees_with_printed}});
      }
    Json norms = Json::array();
    for (const Representation& x : irreps) {
      Scalar k = idempotent_normalization(x);
      Scalar printed = Scalar(1) / Scalar(static_cast<long long>(x.dim));
      ok = ok && k == Scalar(static_cast<long long>(x.dim));
      norms.push_back(Json{{"name", x.name},
                           {"dim", x.dim},
                           {"kappa", scalar_json(k)},
                           {"printed_kappa", scalar_json(printed)},
                           {"agrees_with_printed", k == printed}});
    }
    out["group"] = name;
    out["schur"] = {{"property", "schur-orthogonality"}, {"pairs", pairs}, {"printed_disagreements", disagreements}};
    out["normalization"] = norms;
  }
  if (s.contains("decomposition")) {
    const Json& d = s.at("decomposition");
    Action a = action_from(need(s, "action", "scenario"), "action");
    const Group& g = a.group();
    Subgroup g0 = subgroup_from(g, need(d, "G0", "decomposition"), "decomposition.G0");
    OpenSet c = openset_from(a.space(), need(d, "C", "decomposition"), "decomposition.C");
    std::int64_t level = need(d, "level", "decomposition").get<std::int64_t>();
    std::string irr = need(d, "irreps", "decomposition").get<std::string>();
    IsotypicDecomposition r = decompose_isotypic(a, c, g0, catalog_irreps(irr), level);
    Json comps = Json::array();
    for (const IsotypicComponent& x : r.components)
      comps.push_back(Json{{"name", x.name}, {"dim", x.dim}, {"multiplicity", rational_json(x.multiplicity)}, {"bound", x.bound}});
    out["decomposition"] = {{"family", r.family.size()},   {"orbits", r.orbits},         {"components", comps},
                            {"complete", r.complete},      {"idempotent", r.idempotent}, {"orthogonal", r.orthogonal},
                            {"commuting", r.commuting},    {"failures", r.failures}};
    ok = ok && r.failures.empty();
  }
  if (!s.contains("representations") && !s.contains("decomposition"))
    throw SchemaError("scenario: isotypic needs 'representations' or 'decomposition'");
  out["ok"] = ok;
  return out;
}

Json convolve_command(const Json& s) {
  Group g = group_from(need(s, "group", "scenario"), "group");
  ConvolutionContext ctx{g};
  Func f = function_of(s, "f", g.space());
  Func h = function_of(s, "g", g.space());
  Func fh = convolve(ctx, f, h);
  Json out = head("convolve", s, "convolution-star");
  out["result"] = func_json(fh);
  bool anti = convolution_star(ctx, fh) == convolve(ctx, convolution_star(ctx, h), convolution_star(ctx, f));
  bool invol = convolution_star(ctx, convolution_star(ctx, f)) == f;
  out["star_anti_multiplicative"] = anti;
  out["star_involutive"] = invol;
  bool ok = anti && invol;
  if (s.contains("expect")) {
    bool m = fh == func_from(g.space(), s.at("expect"), "expect");
    out["matches_expected"] = m;
    ok = ok && m;
  }
  if (s.at("functions").contains("h")) {
    Func k = function_of(s, "h", g.space());
    bool assoc = convolve(ctx, fh, k) == convolve(ctx, f, convolve(ctx, h, k));
    out["associative"] = assoc;
    ok = ok && assoc;
  }
  out["ok"] = ok;
  return out;
}

Json local_unit_command(const Json& s) {
  Group g = group_from(need(s, "group", "scenario"), "group");
  ConvolutionContext ctx{g};
  Func f = function_of(s, "f", g.space());
  LocalUnit u = local_unit(ctx, f);
  Json out = head("local-unit", s, "local-units");
  out["left"] = func_json(u.left);
  out["right"] = func_json(u.right);
  out["left_subgroup"] = describe_subgroup(g, u.left_g0);
  out["right_subgroup"] = describe_subgroup(g, u.right_g0);
  bool l = convolve(ctx, u.left, f) == f, r = convolve(ctx, f, u.right) == f;
  bool poly = group_polynomial(g, u.left).certificate && group_polynomial(g, u.right).certificate;
  out["left_unit"] = l;
  out["right_unit"] = r;
  out["units_polynomial"] = poly;
  out["ok"] = l && r && poly;
  return out;
}

// ---------------------------------------------------------------------------
// Suite

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) {
  // splitmix64 of the pair
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(index) + 1;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Json finite_instance_report(std::uint64_t seed, std::size_t index) {
  Rng rng(instance_seed(seed, index));
  FiniteInstance inst = random_finite_instance(rng, index);
  Json out{{"name", "finite-" + padded(index)}, {"action", inst.name}, {"group", inst.action.group().name()},
           {"points", inst.action.space().size()}};
  std::size_t bad = 0;
  auto run = [&](const std::string& key, const Action& a, bool groupoid) {
    ActionTable t = materialize(a);
    TableReport ax = table_axioms(t, Exec::Serial);
    Json r{{"axioms", ax.violations.size()}, {"checked", ax.checked}};
    bad += ax.violations.size();
    if (groupoid) {
      TableReport gr = table_groupoid(t, Exec::Serial);
      r["groupoid"] = gr.violations.size();
      r["checked"] = ax.checked + gr.checked;
      bad += gr.violations.size();
    }
    out["checks"][key] = r;
  };
  run("global", inst.action, true);
  for (std::size_t k = 0; k < inst.opens.size(); ++k)
    run("open" + std::to_string(k), Action::restrict_open(inst.action, inst.opens[k]), true);
  run("derived1", Action::derived1(inst.action), false);
  run("derived2", Action::derived2(inst.action), false);
  if (inst.action.group().order() > 1) {
    FaultInstance fi = seeded_fault(rng, inst.action);
    TableReport fr = table_axioms(fi.table, Exec::Serial);
    bool attributable = std::all_of(fr.violations.begin(), fr.violations.end(),
                                    [&](const TableViolation& v) { return touches(fi.table, v, fi.x, fi.g); });
    bool detected = !fr.violations.empty();
    out["fault"] = {{"x", fi.x}, {"g", fi.g}, {"was", fi.was}, {"now", fi.now}, {"violations", fr.violations.size()},
                    {"detected", detected}, {"attributable", attributable}};
    if (!detected || !attributable) ++bad;
  }
  out["violations"] = bad;
  return out;
}

Json padic_instance_report(std::uint64_t seed, std::size_t index) {
  Rng rng(instance_seed(seed, index));
  Func f = random_padic_func(rng), h = random_padic_func(rng), k = random_padic_func(rng);
  return algebra_instance(Group::padic_add(3), f, h, k, "padic-" + padded(index));
}

Json affine_instance_report(std::uint64_t seed, std::size_t index) {
  Rng rng(instance_seed(seed, index));
  Func f = random_affine_func(rng), h = random_affine_func(rng), k = random_affine_func(rng);
  return algebra_instance(Group::padic_affine(3), f, h, k, "affine-" + padded(index));
}

Json suite_report(const std::string& family, std::size_t count, std::uint64_t seed, Exec e) {
  std::vector<Json (*)(std::uint64_t, std::size_t)> makers;
  if (family == "finite" || family == "all") makers.push_back(finite_instance_report);
  if (family == "padic" || family == "all") makers.push_back(padic_instance_report);
  if (family == "affine" || family == "all") makers.push_back(affine_instance_report);
  if (makers.empty()) throw SchemaError("unknown family '" + family + "' (finite, padic, affine, all)");
  const std::size_t n = makers.size() * count;
  std::vector<Json> reports = run_indexed<Json>(
      n,
      [&](std::size_t i) {
        try {
          return makers[i / count](seed, i % count);
        } catch (const Error& err) {
          return Json{{"name", "error-" + padded(i)}, {"error", err.what()}, {"violations", 1}};
        }
      },
      e);
  std::sort(reports.begin(), reports.end(),
            [](const Json& a, const Json& b) { return a.at("name").get<std::string>() < b.at("name").get<std::string>(); });
  std::size_t total = 0;
  for (const Json& r : reports) total += r.at("violations").get<std::size_t>();
  Json out{{"schema_version", kSchemaVersion}, {"command", "suite"}, {"property", "generated-suite"},
           {"family", family}, {"count", count}, {"seed", seed}};
  out["instances"] = reports;
  out["violations"] = total;
  out["ok"] = total == 0;
  return out;
}

// ---------------------------------------------------------------------------
// Front end

std::string render_text(const Json& report) {
  std::ostringstream os;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.value().is_array() && !it.value().empty() && it.value().front().is_object()) {
      os << it.key() << ":\n";
      for (const Json& x : it.value()) os << "  " << x.dump() << "\n";
    } else if (it.value().is_string()) {
      os << it.key() << ": " << it.value().get<std::string>() << "\n";
    } else {
      os << it.key() << ": " << it.value().dump() << "\n";
    }
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact partial actions, polynomial functions and convolution algebras", "locpoly"};
  app.fallthrough();
  std::string format = "json", out_path, scenario, family = "all";
  std::uint64_t seed = 1;
  std::size_t count = 50;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report to this file");
  app.add_option("--seed", seed, "seed for generated instances");
  app.require_subcommand(1);
  using Command = Json (*)(const Json&);
  const std::vector<std::pair<std::string, Command>> commands{
      {"verify-axioms", verify_axioms_command}, {"vf", vf_command},         {"poly-check", poly_check_command},
      {"decompose", decompose_command},         {"isotypic", isotypic_command}, {"convolve", convolve_command},
      {"local-unit", local_unit_command}};
  for (const auto& [name, fn] : commands) app.add_subcommand(name)->add_option("scenario", scenario, "scenario JSON")->required();
  CLI::App* suite = app.add_subcommand("suite", "run generated instance families");
  suite->add_option("--family", family, "finite, padic, affine or all")->check(CLI::IsMember({"finite", "padic", "affine", "all"}));
  suite->add_option("--count", count, "instances per family");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitSchema;
  }

  Json report;
  try {
    if (suite->parsed()) {
      report = suite_report(family, count, seed);
    } else {
      for (const auto& [name, fn] : commands)
        if (app.got_subcommand(name)) report = fn(load_scenario(scenario));
    }
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const Json::exception& e) {
    err << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitViolation;
  }

  std::string text = format == "json" ? report.dump(2) + "\n" : render_text(report);
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << out_path << "\n";
      return kExitSchema;
    }
    f << text;
  } else {
    out << text;
  }
  bool ok = report.value("ok", false);
  if (!ok) err << "invariant violated; see the report\n";
  return ok ? kExitOk : kExitViolation;
}

}  // namespace locpoly
