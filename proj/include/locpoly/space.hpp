#ifndef LOCPOLY_SPACE_HPP
#define LOCPOLY_SPACE_HPP

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "locpoly/rational.hpp"

namespace locpoly {

// Ball levels.  A ball of level k around c is c + p^k Z_p.  The two sentinels
// encode a single point and the whole line.
constexpr std::int64_t kPointLevel = std::numeric_limits<std::int32_t>::max();
constexpr std::int64_t kWholeLevel = std::numeric_limits<std::int32_t>::min();

// A point of a model space, or an element of a model group.
//   finite / integer points: index
//   p-adic points:           value (canonical element of Z[1/p])
//   affine points (p^k, b):  index = k, value = b
//   products:                parts
struct Point {
  std::int64_t index = 0;
  Rational value;
  std::vector<Point> parts;

  static Point at(std::int64_t i) { return Point{i, Rational(0), {}}; }
  static Point padic(const Rational& v) { return Point{0, v, {}}; }
  static Point affine(std::int64_t k, const Rational& b) { return Point{k, b, {}}; }
  static Point pair(Point a, Point b) { return Point{0, Rational(0), {std::move(a), std::move(b)}}; }

  friend bool operator==(const Point&, const Point&) = default;
};
bool operator<(const Point& a, const Point& b);

// A cell: a point (finite and integer spaces), a ball, an affine cell
// {p^index} x ball, or a product of cells.
struct Cell {
  std::int64_t index = 0;
  Rational center;
  std::int64_t level = 0;
  std::vector<Cell> parts;

  friend bool operator==(const Cell&, const Cell&) = default;
};
bool operator<(const Cell& a, const Cell& b);

enum class SpaceKind { Finite, Integers, PAdicLine, Affine, Product };

class Space {
 public:
  static Space finite(std::int64_t n);
  static Space integers();
  static Space padic_line(std::int64_t p);
  static Space affine(std::int64_t p);
  static Space product(const Space& a, const Space& b);

  SpaceKind kind() const { return node_->kind; }
  std::int64_t size() const { return node_->size; }
  std::int64_t prime() const { return node_->p; }
  const Space& first() const;
  const Space& second() const;

  std::string describe() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  struct Node {
    SpaceKind kind;
    std::int64_t size = 0;
    std::int64_t p = 0;
    std::vector<Space> parts;
  };
  explicit Space(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class Tri { None, Mixed, All };
Tri tri_and(Tri a, Tri b);

// Canonical ball in Q_p: the center is reduced to the unique representative
// in [0, p^level) of Z[1/p].
Cell make_ball(std::int64_t p, const Rational& center, std::int64_t level);
Cell make_affine_cell(std::int64_t p, std::int64_t k, const Rational& center, std::int64_t level);
Cell make_pair_cell(Cell a, Cell b);
Cell make_point_cell(std::int64_t i);

void validate_point(const Space& s, const Point& x);
void validate_cell(const Space& s, const Cell& c);

Cell point_cell(const Space& s, const Point& x);
Cell whole_cell(const Space& s);
bool contains(const Space& s, const Cell& c, const Point& x);
bool subset(const Space& s, const Cell& a, const Cell& b);
std::optional<Cell> intersect(const Space& s, const Cell& a, const Cell& b);
bool is_atomic(const Space& s, const Cell& c);
// Compact and not a single p-adic point: allowed as a term of a function.
bool is_function_cell(const Space& s, const Cell& c);
bool is_compact(const Space& s, const Cell& c);
// One refinement step in every refinable coordinate.
std::vector<Cell> children(const Space& s, const Cell& c);
Point representative(const Space& s, const Cell& c);
// Product of p^-level over ball coordinates; 1 for discrete coordinates.
Rational cover_measure(const Space& s, const Cell& c);
// Finest finite ball level among coordinates, or kWholeLevel when there is none.
std::int64_t finest_level(const Space& s, const Cell& c);
// Uniform refinement of every ball coordinate to at least level L.
std::vector<Cell> cells_at_level(const Space& s, const Cell& c, std::int64_t L);

// Disjoint refinement: every input cell is a union of output cells.
std::vector<Cell> common_refinement(const Space& s, const std::vector<Cell>& cells);

// Classification of a cell against a union of disjoint cells.
Tri classify(const Space& s, const Cell& c, const std::vector<Cell>& cells);

std::string describe_point(const Space& s, const Point& x);
std::string describe_cell(const Space& s, const Cell& c);

// Canonical merging of disjoint cells carrying integer labels: sibling
// cells with equal labels are merged into their parent, recursively, and
// product spaces are canonicalized coordinate by coordinate.
using LabeledCells = std::vector<std::pair<Cell, int>>;
LabeledCells canonical_labels(const Space& s, const LabeledCells& terms);

}  // namespace locpoly

#endif
