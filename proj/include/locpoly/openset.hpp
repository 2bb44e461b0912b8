#ifndef LOCPOLY_OPENSET_HPP
#define LOCPOLY_OPENSET_HPP

#include <vector>

#include "locpoly/space.hpp"

namespace locpoly {

// Finite union of cells, or the whole space.  Cells are kept maximal and,
// when every cell is compact, disjoint and merged into canonical form.
class OpenSet {
 public:
  static OpenSet all(const Space& s);
  static OpenSet empty(const Space& s);
  static OpenSet of(const Space& s, std::vector<Cell> cells);

  const Space& space() const { return space_; }
  bool is_all() const { return all_; }
  bool is_empty() const { return !all_ && cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(const Point& x) const;
  Tri classify(const Cell& c) const;
  bool contains_cell(const Cell& c) const { return classify(c) == Tri::All; }
  bool is_compact() const;

  std::string describe() const;

  friend bool operator==(const OpenSet& a, const OpenSet& b);

 private:
  OpenSet(Space s, bool all, std::vector<Cell> cells) : space_(std::move(s)), all_(all), cells_(std::move(cells)) {}
  Space space_;
  bool all_ = false;
  std::vector<Cell> cells_;
};

OpenSet set_union(const OpenSet& a, const OpenSet& b);
OpenSet set_intersection(const OpenSet& a, const OpenSet& b);
bool set_subset(const OpenSet& a, const OpenSet& b);

}  // namespace locpoly

#endif
