#include "locpoly/openset.hpp"

#include <algorithm>

namespace locpoly {

OpenSet OpenSet::all(const Space& s) { return OpenSet(s, true, {}); }
OpenSet OpenSet::empty(const Space& s) { return OpenSet(s, false, {}); }

OpenSet OpenSet::of(const Space& s, std::vector<Cell> cells) {
  for (const Cell& c : cells) validate_cell(s, c);
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<Cell> maximal;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < cells.size() && !inside; ++j)
      inside = i != j && subset(s, cells[i], cells[j]);
    if (!inside) maximal.push_back(cells[i]);
  }
  bool compact = std::all_of(maximal.begin(), maximal.end(), [&](const Cell& c) { return is_function_cell(s, c); });
  if (!compact) return OpenSet(s, false, std::move(maximal));
  LabeledCells labeled;
  for (const Cell& c : common_refinement(s, maximal)) labeled.push_back({c, 1});
  std::vector<Cell> out;
  for (auto& t : canonical_labels(s, labeled)) out.push_back(std::move(t.first));
  return OpenSet(s, false, std::move(out));
}

bool OpenSet::contains(const Point& x) const {
  if (all_) return true;
  for (const Cell& c : cells_)
    if (locpoly::contains(space_, c, x)) return true;
  return false;
}

Tri OpenSet::classify(const Cell& c) const {
  if (all_) return Tri::All;
  return locpoly::classify(space_, c, cells_);
}

bool OpenSet::is_compact() const {
  if (all_) return false;
  return std::all_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return locpoly::is_compact(space_, c); });
}

std::string OpenSet::describe() const {
  if (all_) return "all";
  if (cells_.empty()) return "empty";
  std::string out;
  for (const Cell& c : cells_) {
    if (!out.empty()) out += " u ";
    out += describe_cell(space_, c);
  }
  return out;
}

bool operator==(const OpenSet& a, const OpenSet& b) {
  return a.space_ == b.space_ && a.all_ == b.all_ && a.cells_ == b.cells_;
}

OpenSet set_union(const OpenSet& a, const OpenSet& b) {
  if (a.is_all() || b.is_all()) return OpenSet::all(a.space());
  std::vector<Cell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return OpenSet::of(a.space(), std::move(cells));
}

OpenSet set_intersection(const OpenSet& a, const OpenSet& b) {
  if (a.is_all()) return b;
  if (b.is_all()) return a;
  std::vector<Cell> cells;
  for (const Cell& x : a.cells())
    for (const Cell& y : b.cells())
      if (auto i = intersect(a.space(), x, y)) cells.push_back(*i);
  return OpenSet::of(a.space(), std::move(cells));
}

bool set_subset(const OpenSet& a, const OpenSet& b) {
  if (b.is_all()) return true;
  if (a.is_all()) return false;
  return std::all_of(a.cells().begin(), a.cells().end(), [&](const Cell& c) { return b.classify(c) == Tri::All; });
}

}  // namespace locpoly
