#ifndef LOCPOLY_ACTION_HPP
#define LOCPOLY_ACTION_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locpoly/group.hpp"
#include "locpoly/openset.hpp"

namespace locpoly {

enum class ActionKind {
  RightTranslation,  // x.g = x g on the group itself
  FiniteTable,       // explicit table, -1 marks an undefined pair
  Trivial,
  AffineOnLine,      // x.(p^k, b) = p^k x + b; not an action, kept as a negative control
  RestrictOpen,
  RestrictSubgroup,
  Derived1,          // (x,p).q = (x.q, q^-1 p) on Gamma
  Derived2,          // (x,p).q = (x, pq) restricted to Gamma
  CommutingProduct,  // x.(h,k) = (x.h).k
  ExtendFirst,       // (x,z).g = (x.g, z)
  ExtendSecond       // (z,x).g = (z, x.g)
};

// Partial right action given by a constructor tree.  Domain membership is
// decided by structural recursion; nothing is materialized.
class Action {
 public:
  static Action right_translation(const Group& g);
  // g acting on itself from the left, carried as a right action of op(g).
  static Action left_translation(const Group& g);
  static Action finite_table(const Space& x, const Group& g, std::vector<std::vector<int>> table, std::string name = "table");
  static Action trivial(const Space& x, const Group& g);
  static Action affine_on_line(std::int64_t p);
  static Action restrict_open(const Action& a, const OpenSet& y);
  static Action restrict_subgroup(const Action& a, const Subgroup& h);
  static Action derived1(const Action& a);
  static Action derived2(const Action& a);
  // Both factors are right actions on the same space (a left action enters
  // through its opposite group).  Throws when the commuting law fails on the
  // default probes.
  static Action commuting_product(const Action& h, const Action& k);
  static Action extend_first(const Action& a, const Space& z);
  static Action extend_second(const Space& z, const Action& a);

  ActionKind kind() const { return node_->kind; }
  const Space& space() const { return node_->space; }
  const Group& group() const { return node_->group; }
  const Action& base() const;
  const Action& second_factor() const;  // CommutingProduct only
  const OpenSet& open_set() const;      // RestrictOpen only
  const Subgroup& subgroup() const;     // RestrictSubgroup only
  const std::vector<std::vector<int>>& table() const { return node_->table; }
  const std::string& name() const { return node_->name; }
  std::string describe() const;

  // Point level.
  bool in_space(const Point& x) const;
  std::optional<Point> act(const Point& x, const Point& g) const;
  bool in_domain(const Point& x, const Point& g) const { return act(x, g).has_value(); }

  // Cell level.  Classification of a cell against the space, and of a
  // product of cells against Gamma.
  Tri space_cover(const Cell& d) const;
  Tri cover(const Cell& d, const Cell& dg) const;
  // A cell containing every x.g with x in d, g in dg and (x,g) in Gamma;
  // exact when dg is a single point.
  Cell image(const Cell& d, const Cell& dg) const;
  // Group cells containing every g with (x,g) in Gamma for some x in d;
  // nullopt when no finite bound is known.
  std::optional<std::vector<Cell>> group_bound(const Cell& d) const;
  // Group cells containing every g with x.g in targets for some x in d.
  std::optional<std::vector<Cell>> solve(const Cell& d, const std::vector<Cell>& targets) const;
  // Gamma is all of space x group.
  bool is_global() const;

 private:
  struct Node {
    ActionKind kind;
    Space space;
    Group group;
    std::vector<Action> children;
    std::optional<OpenSet> open;
    Subgroup sub;
    std::vector<std::vector<int>> table;
    std::string name;
  };
  explicit Action(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Points of a finite space (finite sets and their products), in order.
std::optional<std::vector<Point>> finite_points(const Space& s);
bool is_open_cell(const Space& s, const Cell& c);

// ---------------------------------------------------------------------------
// Verification

struct Violation {
  std::string law;
  std::string witness;
};

struct Report {
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void merge(const Report& o);
};

// Points and group elements to enumerate.  Exhaustive for finite models;
// cell representatives at a working level for p-adic ones.
struct Probes {
  std::vector<Point> points;
  std::vector<Point> elements;
};

Probes default_probes(const Action& a, std::size_t budget = 27);
// Cell representatives over a default region around the origin, roughly
// budget many per space (all points of a finite space).
std::vector<Point> probe_points(const Space& s, std::size_t budget);
std::vector<Point> probe_elements(const Group& g, std::size_t budget);

// Identity law and the iff-compatibility law with the composition equation.
Report check_axioms(const Action& a, const Probes& probes);
// Commuting law for two right actions on one space.
Report check_commuting(const Action& h, const Action& k, const Probes& probes_x, const std::vector<Point>& hs,
                       const std::vector<Point>& ks);

// Groupoid structure of Gamma.
using Arrow = std::pair<Point, Point>;
std::optional<Arrow> groupoid_compose(const Action& a, const Arrow& first, const Arrow& second);
Arrow groupoid_inverse(const Action& a, const Arrow& arrow);
Arrow gamma_map(const Action& a, const Arrow& arrow);
// Associativity, units, inverses, gamma involution and the derived-action
// intertwiner on the probes.
Report check_groupoid(const Action& a, const Probes& probes);

enum class Verdict { Yes, No, Unknown };
std::string verdict_name(Verdict v);
struct ProperReport {
  Verdict verdict = Verdict::Unknown;
  std::string reason;
};
ProperReport is_proper(const Action& a);

struct LocalHomeoWitness {
  Point x;
  Subgroup v;
  std::vector<Cell> image;  // x.V as cells
  std::function<std::optional<Point>(const Point&)> inverse;
};
struct LocalHomeoResult {
  std::optional<LocalHomeoWitness> witness;
  std::string diagnostic;
};
LocalHomeoResult locally_homeomorphic_witness(const Action& a, const Point& x);

}  // namespace locpoly

#endif
