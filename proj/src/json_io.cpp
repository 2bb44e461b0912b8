#include "locpoly/json_io.hpp"

#include "locpoly/catalog.hpp"

namespace locpoly {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) bad(path, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t int_from(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<std::int64_t>();
}

// Single-key object {"kind": body}.
std::pair<std::string, const Json*> tagged(const Json& j, const std::string& path) {
  if (j.is_string()) return {j.get<std::string>(), nullptr};
  if (!j.is_object() || j.size() != 1) bad(path, "expected an object with one key");
  return {j.begin().key(), &j.begin().value()};
}

const Json& body_of(const std::pair<std::string, const Json*>& t, const std::string& path) {
  if (!t.second) bad(path, "'" + t.first + "' needs a body");
  return *t.second;
}

Json level_json(std::int64_t level) {
  if (level == kPointLevel) return "point";
  if (level == kWholeLevel) return "whole";
  return level;
}

std::int64_t level_from(const Json& j, const std::string& path) {
  if (j == "point") return kPointLevel;
  if (j == "whole") return kWholeLevel;
  return int_from(j, path);
}

std::int64_t prime_from(const Json& j, const std::string& path) {
  std::int64_t p = int_from(j.is_object() ? field(j, "p", path) : j, path + ".p");
  if (p < 2 || p > 97 || !is_prime(p)) bad(path, "p must be a prime below 100");
  return p;
}

}  // namespace

Json rational_json(const Rational& r) { return r.fraction_str(); }

Rational rational_from(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad(path, "expected a rational string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json scalar_json(const Scalar& s) {
  if (s.is_rational()) return rational_json(s.rational());
  Json c = Json::array();
  for (const Rational& r : s.coeffs()) c.push_back(rational_json(r));
  return Json{{"m", s.conductor()}, {"coeffs", c}};
}

Scalar scalar_from(const Json& j, const std::string& path) {
  if (!j.is_object()) return rational_from(j, path);
  std::int64_t m = int_from(field(j, "m", path), path + ".m");
  if (m < 1 || m > kMaxConductor) bad(path, "conductor out of range");
  const Json& cs = field(j, "coeffs", path);
  if (!cs.is_array()) bad(path + ".coeffs", "expected an array");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < cs.size(); ++i) coeffs.push_back(rational_from(cs[i], path + ".coeffs[" + std::to_string(i) + "]"));
  try {
    return Scalar::from_coeffs(static_cast<int>(m), std::move(coeffs));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json space_json(const Space& s) {
  switch (s.kind()) {
    case SpaceKind::Finite: return Json{{"finite", s.size()}};
    case SpaceKind::Integers: return "integers";
    case SpaceKind::PAdicLine: return Json{{"padic_line", s.prime()}};
    case SpaceKind::Affine: return Json{{"affine", s.prime()}};
    case SpaceKind::Product: return Json{{"product", Json::array({space_json(s.first()), space_json(s.second())})}};
  }
  return nullptr;
}

Space space_from(const Json& j, const std::string& path) {
  auto t = tagged(j, path);
  if (t.first == "integers") return Space::integers();
  const Json& b = body_of(t, path);
  if (t.first == "finite") {
    std::int64_t n = int_from(b, path + ".finite");
    if (n < 1 || n > 4096) bad(path, "finite space size out of range");
    return Space::finite(n);
  }
  if (t.first == "padic_line") return Space::padic_line(prime_from(b, path + ".padic_line"));
  if (t.first == "affine") return Space::affine(prime_from(b, path + ".affine"));
  if (t.first == "product") {
    if (!b.is_array() || b.size() != 2) bad(path + ".product", "expected two spaces");
    return Space::product(space_from(b[0], path + ".product[0]"), space_from(b[1], path + ".product[1]"));
  }
  bad(path, "unknown space '" + t.first + "'");
}

Json point_json(const Space& s, const Point& x) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return x.index;
    case SpaceKind::PAdicLine: return rational_json(x.value);
    case SpaceKind::Affine: return Json{{"k", x.index}, {"b", rational_json(x.value)}};
    case SpaceKind::Product:
      return Json::array({point_json(s.first(), x.parts.at(0)), point_json(s.second(), x.parts.at(1))});
  }
  return nullptr;
}

Point point_from(const Space& s, const Json& j, const std::string& path) {
  Point x;
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: x = Point::at(int_from(j, path)); break;
    case SpaceKind::PAdicLine: x = Point::padic(rational_from(j, path)); break;
    case SpaceKind::Affine:
      x = Point::affine(int_from(field(j, "k", path), path + ".k"), rational_from(field(j, "b", path), path + ".b"));
      break;
    case SpaceKind::Product:
      if (!j.is_array() || j.size() != 2) bad(path, "expected a pair");
      x = Point::pair(point_from(s.first(), j[0], path + "[0]"), point_from(s.second(), j[1], path + "[1]"));
      break;
  }
  try {
    validate_point(s, x);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return x;
}

Json cell_json(const Space& s, const Cell& c) {
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: return c.index;
    case SpaceKind::PAdicLine: return Json{{"center", rational_json(c.center)}, {"level", level_json(c.level)}};
    case SpaceKind::Affine:
      return Json{{"k", c.index}, {"center", rational_json(c.center)}, {"level", level_json(c.level)}};
    case SpaceKind::Product:
      return Json::array({cell_json(s.first(), c.parts.at(0)), cell_json(s.second(), c.parts.at(1))});
  }
  return nullptr;
}

Cell cell_from(const Space& s, const Json& j, const std::string& path) {
  Cell c;
  switch (s.kind()) {
    case SpaceKind::Finite:
    case SpaceKind::Integers: c = make_point_cell(int_from(j, path)); break;
    case SpaceKind::PAdicLine:
      c = make_ball(s.prime(), rational_from(field(j, "center", path), path + ".center"),
                    level_from(field(j, "level", path), path + ".level"));
      break;
    case SpaceKind::Affine:
      c = make_affine_cell(s.prime(), int_from(field(j, "k", path), path + ".k"),
                           rational_from(field(j, "center", path), path + ".center"),
                           level_from(field(j, "level", path), path + ".level"));
      break;
    case SpaceKind::Product:
      if (!j.is_array() || j.size() != 2) bad(path, "expected a pair of cells");
      c = make_pair_cell(cell_from(s.first(), j[0], path + "[0]"), cell_from(s.second(), j[1], path + "[1]"));
      break;
  }
  try {
    validate_cell(s, c);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return c;
}

Json openset_json(const OpenSet& o) {
  if (o.is_all()) return "all";
  Json cells = Json::array();
  for (const Cell& c : o.cells()) cells.push_back(cell_json(o.space(), c));
  return Json{{"cells", cells}};
}

OpenSet openset_from(const Space& s, const Json& j, const std::string& path) {
  if (j == "all") return OpenSet::all(s);
  const Json& cs = field(j, "cells", path);
  if (!cs.is_array()) bad(path + ".cells", "expected an array");
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < cs.size(); ++i) cells.push_back(cell_from(s, cs[i], path + ".cells[" + std::to_string(i) + "]"));
  return OpenSet::of(s, std::move(cells));
}

Group group_from(const Json& j, const std::string& path) {
  auto t = tagged(j, path);
  try {
    if (t.first == "integers") return Group::integers();
    const Json& b = body_of(t, path);
    if (t.first == "catalog") {
      if (!b.is_string()) bad(path + ".catalog", "expected a group name");
      return catalog_group(b.get<std::string>());
    }
    if (t.first == "finite") {
      const Json& table = field(b, "table", path + ".finite");
      if (!table.is_array()) bad(path + ".finite.table", "expected rows");
      std::vector<std::vector<int>> rows;
      for (const Json& r : table) {
        if (!r.is_array()) bad(path + ".finite.table", "expected rows of integers");
        std::vector<int> row;
        for (const Json& v : r) row.push_back(static_cast<int>(int_from(v, path + ".finite.table")));
        rows.push_back(std::move(row));
      }
      std::string name = b.contains("name") ? b.at("name").get<std::string>() : "finite";
      return Group::finite(name, std::move(rows));
    }
    if (t.first == "padic_add") return Group::padic_add(prime_from(b, path + ".padic_add"));
    if (t.first == "padic_affine") return Group::padic_affine(prime_from(b, path + ".padic_affine"));
    if (t.first == "product") {
      if (!b.is_array() || b.size() != 2) bad(path + ".product", "expected two groups");
      return Group::product(group_from(b[0], path + ".product[0]"), group_from(b[1], path + ".product[1]"));
    }
    if (t.first == "opposite") return Group::opposite(group_from(b, path + ".opposite"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    bad(path, e.what());
  }
  bad(path, "unknown group '" + t.first + "'");
}

Json subgroup_json(const Group& g, const Subgroup& h) {
  switch (h.kind) {
    case SubgroupKind::Whole: return "whole";
    case SubgroupKind::Trivial: return "trivial";
    case SubgroupKind::FiniteSet: {
      Json e = Json::array();
      for (const Point& x : h.elements) e.push_back(point_json(g.space(), x));
      return Json{{"elements", e}};
    }
    case SubgroupKind::Ball: return Json{{"ball", h.level}};
    case SubgroupKind::AffineBall: return Json{{"affine_ball", h.level}};
    case SubgroupKind::AffineUnipotent: return "affine_unipotent";
    case SubgroupKind::Product: {
      const Group& b = g.kind() == GroupKind::Opposite ? g.base() : g;
      return Json{{"product", Json::array({subgroup_json(b.first(), h.parts[0]), subgroup_json(b.second(), h.parts[1])})}};
    }
  }
  return nullptr;
}

Subgroup subgroup_from(const Group& g, const Json& j, const std::string& path) {
  auto t = tagged(j, path);
  Subgroup h;
  const Group& b = g.kind() == GroupKind::Opposite ? g.base() : g;
  if (t.first == "whole") h = Subgroup::whole();
  else if (t.first == "trivial") h = Subgroup::trivial();
  else if (t.first == "affine_unipotent") h = Subgroup::affine_unipotent();
  else if (t.first == "ball") h = Subgroup::ball(int_from(body_of(t, path), path + ".ball"));
  else if (t.first == "affine_ball") h = Subgroup::affine_ball(int_from(body_of(t, path), path + ".affine_ball"));
  else if (t.first == "elements") {
    const Json& e = body_of(t, path);
    if (!e.is_array()) bad(path + ".elements", "expected an array");
    std::vector<Point> pts;
    for (std::size_t i = 0; i < e.size(); ++i) pts.push_back(point_from(g.space(), e[i], path + ".elements[" + std::to_string(i) + "]"));
    h = Subgroup::finite_set(std::move(pts));
  } else if (t.first == "product") {
    const Json& e = body_of(t, path);
    if (!e.is_array() || e.size() != 2 || b.kind() != GroupKind::Product) bad(path + ".product", "expected two subgroups of a product group");
    h = Subgroup::product(subgroup_from(b.first(), e[0], path + ".product[0]"), subgroup_from(b.second(), e[1], path + ".product[1]"));
  } else {
    bad(path, "unknown subgroup '" + t.first + "'");
  }
  try {
    validate_subgroup(g, h);
  } catch (const Error& e) {
    bad(path, e.what());
  }
  return h;
}

Action action_from(const Json& j, const std::string& path) {
  auto t = tagged(j, path);
  const Json& b = body_of(t, path);
  try {
    if (t.first == "right_translation") return Action::right_translation(group_from(b, path + ".right_translation"));
    if (t.first == "left_translation") return Action::left_translation(group_from(b, path + ".left_translation"));
    if (t.first == "table") {
      Group g = group_from(field(b, "group", path + ".table"), path + ".table.group");
      std::int64_t n = int_from(field(b, "points", path + ".table"), path + ".table.points");
      const Json& rows = field(b, "table", path + ".table");
      if (!rows.is_array()) bad(path + ".table.table", "expected rows");
      std::vector<std::vector<int>> table;
      for (const Json& r : rows) {
        if (!r.is_array()) bad(path + ".table.table", "expected rows of integers");
        std::vector<int> row;
        for (const Json& v : r) row.push_back(static_cast<int>(int_from(v, path + ".table.table")));
        table.push_back(std::move(row));
      }
      return Action::finite_table(Space::finite(n), g, std::move(table));
    }
    if (t.first == "trivial")
      return Action::trivial(space_from(field(b, "space", path + ".trivial"), path + ".trivial.space"),
                             group_from(field(b, "group", path + ".trivial"), path + ".trivial.group"));
    if (t.first == "affine_on_line") return Action::affine_on_line(prime_from(b, path + ".affine_on_line"));
    if (t.first == "restrict_open") {
      Action a = action_from(field(b, "base", path + ".restrict_open"), path + ".restrict_open.base");
      return Action::restrict_open(a, openset_from(a.space(), field(b, "Y", path + ".restrict_open"), path + ".restrict_open.Y"));
    }
    if (t.first == "restrict_subgroup") {
      Action a = action_from(field(b, "base", path + ".restrict_subgroup"), path + ".restrict_subgroup.base");
      return Action::restrict_subgroup(a, subgroup_from(a.group(), field(b, "H", path + ".restrict_subgroup"), path + ".restrict_subgroup.H"));
    }
    if (t.first == "derived1") return Action::derived1(action_from(b, path + ".derived1"));
    if (t.first == "derived2") return Action::derived2(action_from(b, path + ".derived2"));
    if (t.first == "commuting_product") {
      if (!b.is_array() || b.size() != 2) bad(path + ".commuting_product", "expected two actions");
      return Action::commuting_product(action_from(b[0], path + ".commuting_product[0]"),
                                       action_from(b[1], path + ".commuting_product[1]"));
    }
    if (t.first == "extend_first")
      return Action::extend_first(action_from(field(b, "base", path + ".extend_first"), path + ".extend_first.base"),
                                  space_from(field(b, "space", path + ".extend_first"), path + ".extend_first.space"));
    if (t.first == "extend_second")
      return Action::extend_second(space_from(field(b, "space", path + ".extend_second"), path + ".extend_second.space"),
                                   action_from(field(b, "base", path + ".extend_second"), path + ".extend_second.base"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    bad(path, e.what());
  }
  bad(path, "unknown action '" + t.first + "'");
}

Json func_json(const Func& f) {
  Json terms = Json::array();
  for (const auto& [c, v] : f.terms()) terms.push_back(Json{{"cell", cell_json(f.space(), c)}, {"value", scalar_json(v)}});
  return Json{{"terms", terms}};
}

Func func_from(const Space& s, const Json& j, const std::string& path) {
  const Json& ts = field(j, "terms", path);
  if (!ts.is_array()) bad(path + ".terms", "expected an array");
  std::vector<Func::Term> terms;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::string p = path + ".terms[" + std::to_string(i) + "]";
    terms.push_back({cell_from(s, field(ts[i], "cell", p), p + ".cell"), scalar_from(field(ts[i], "value", p), p + ".value")});
  }
  try {
    return Func::from_terms(s, std::move(terms));
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

Json certificate_json(const Action& a, const PolynomialCertificate& c) {
  const Group& g = a.group();
  Json basis = Json::array();
  for (const Func& f : c.basis) basis.push_back(func_json(f));
  Json psi = Json::array();
  for (std::size_t t = 0; t < c.transversal.size(); ++t) {
    Json coords = Json::array();
    for (const Scalar& x : c.coords[t]) coords.push_back(scalar_json(x));
    psi.push_back(Json{{"element", point_json(g.space(), c.transversal[t])}, {"coords", coords}});
  }
  Json fc = Json::array();
  for (const Scalar& x : c.f_coords) fc.push_back(scalar_json(x));
  return Json{{"G0", subgroup_json(g, c.g0)},
              {"G0_name", describe_subgroup(g, c.g0)},
              {"G1", subgroup_json(g, c.g1)},
              {"C", openset_json(c.c)},
              {"dim", c.dim()},
              {"basis", basis},
              {"psi", psi},
              {"f_coords", fc}};
}

}  // namespace locpoly
