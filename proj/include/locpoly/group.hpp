#ifndef LOCPOLY_GROUP_HPP
#define LOCPOLY_GROUP_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locpoly/openset.hpp"
#include "locpoly/space.hpp"

namespace locpoly {

enum class GroupKind { Finite, Integers, PAdicAdditive, PAdicAffine, Product, Opposite };

// Exact totally disconnected group.  Elements are Points of space(); an
// Opposite group shares the underlying space of its base.
class Group {
 public:
  // table[a][b] = index of a*b; validated exhaustively.
  static Group finite(std::string name, std::vector<std::vector<int>> table);
  static Group integers();
  static Group padic_add(std::int64_t p);
  static Group padic_affine(std::int64_t p);
  static Group product(const Group& a, const Group& b);
  static Group opposite(const Group& g);

  GroupKind kind() const { return node_->kind; }
  std::int64_t prime() const;
  std::int64_t order() const;  // finite groups only
  const std::string& name() const { return node_->name; }
  const std::vector<std::vector<int>>& table() const { return node_->table; }
  const Group& first() const;
  const Group& second() const;
  const Group& base() const;  // Opposite only
  const Space& space() const { return node_->space; }

  bool is_discrete() const;
  std::string describe() const;

  Point identity() const;
  Point mul(const Point& a, const Point& b) const;
  Point inv(const Point& a) const;
  void validate(const Point& a) const;
  std::vector<Point> elements() const;  // finite groups only

  // Set products of cells; the result is again a cell.
  Cell mul_cells(const Cell& a, const Cell& b) const;
  Cell inv_cell(const Cell& a) const;
  Cell left_mul(const Point& g, const Cell& a) const { return mul_cells(point_cell(space(), g), a); }
  Cell right_mul(const Cell& a, const Point& g) const { return mul_cells(a, point_cell(space(), g)); }

  // Left Haar measure: counting on discrete parts, mu(Z_p) = 1,
  // mu({p^k} x (c + p^m Z_p)) = p^(k-m).
  Rational haar(const Cell& c) const;
  // mu(S g) = modular(g) mu(S).
  Rational modular(const Point& g) const;

  // Cells covering the whole group, if finitely many suffice.
  std::optional<std::vector<Cell>> whole_cells() const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  struct Node {
    GroupKind kind;
    std::int64_t p = 0;
    std::string name;
    std::vector<std::vector<int>> table;
    std::vector<int> inverse;
    int identity = 0;
    std::vector<Group> parts;
    Space space;
  };
  explicit Group(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class SubgroupKind { Whole, Trivial, FiniteSet, Ball, AffineBall, AffineUnipotent, Product };

// Subgroup handle.  Ball(k) = p^k Z_p, AffineBall(k) = {1} x p^k Z_p,
// AffineUnipotent = {1} x Q_p.
struct Subgroup {
  SubgroupKind kind = SubgroupKind::Whole;
  std::int64_t level = 0;
  std::vector<Point> elements;  // FiniteSet, sorted
  std::vector<Subgroup> parts;  // Product

  static Subgroup whole() { return {}; }
  static Subgroup trivial() { return {SubgroupKind::Trivial, 0, {}, {}}; }
  static Subgroup finite_set(std::vector<Point> elts);
  static Subgroup ball(std::int64_t k) { return {SubgroupKind::Ball, k, {}, {}}; }
  static Subgroup affine_ball(std::int64_t k) { return {SubgroupKind::AffineBall, k, {}, {}}; }
  static Subgroup affine_unipotent() { return {SubgroupKind::AffineUnipotent, 0, {}, {}}; }
  static Subgroup product(Subgroup a, Subgroup b) { return {SubgroupKind::Product, 0, {}, {std::move(a), std::move(b)}}; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

// Checks the handle against the group: closure for finite sets, matching
// variant for the others.  Throws Error on mismatch.
void validate_subgroup(const Group& g, const Subgroup& h);
std::string describe_subgroup(const Group& g, const Subgroup& h);

bool subgroup_contains(const Group& g, const Subgroup& h, const Point& x);
// The subgroup as a union of cells of g.space().
std::vector<Cell> subgroup_cells(const Group& g, const Subgroup& h);
OpenSet subgroup_set(const Group& g, const Subgroup& h);
bool is_compact_open(const Group& g, const Subgroup& h);
// x is a compact open subgroup of h in the subspace topology.
bool is_compact_open_in(const Group& g, const Subgroup& x, const Subgroup& h);
bool subgroup_subset(const Group& g, const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Group& g, const Subgroup& a, const Subgroup& b);

// Left cosets r G1 of G1 in G0, one representative each, in a fixed order.
std::vector<Point> coset_transversal(const Group& g, const Subgroup& g0, const Subgroup& g1);
// Cells of the coset u H.
std::vector<Cell> coset_cells(const Group& g, const Point& u, const Subgroup& h);

// Subgroup of the same shape as g0 with every ball coordinate at level at
// least L; discrete parts become trivial.
Subgroup level_subgroup(const Group& g, const Subgroup& g0, std::int64_t L);
// Ball level of a subgroup (the largest level among ball coordinates), or
// kWholeLevel when it has none.
std::int64_t subgroup_level(const Group& g, const Subgroup& h);

// Default descending chain for the polynomial search.
std::vector<Subgroup> canonical_chain(const Group& g, std::int64_t max_level = 6);

}  // namespace locpoly

#endif
