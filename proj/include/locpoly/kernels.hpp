#ifndef LOCPOLY_KERNELS_HPP
#define LOCPOLY_KERNELS_HPP

#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "locpoly/action.hpp"
#include "locpoly/algebra.hpp"

namespace locpoly {

enum class Exec { Serial, Parallel };

// A finite partial action as integer tables.  act[x][g] is the index of x.g,
// or -1 off the domain; points with present[x] == 0 are outside the space.
struct ActionTable {
  std::size_t points = 0;
  std::size_t order = 0;
  int identity = 0;
  std::vector<std::vector<int>> mul;
  std::vector<int> inverse;
  std::vector<char> present;
  std::vector<std::vector<int>> act;
};
// Finite space and finite group only.
ActionTable materialize(const Action& a);
ActionTable table_of(std::size_t points, const Group& g, std::vector<std::vector<int>> act);

// A violated law with the table indices involved (-1 when unused).
struct TableViolation {
  std::string law;
  int x = -1, p = -1, q = -1;
  friend bool operator==(const TableViolation&, const TableViolation&) = default;
  friend auto operator<=>(const TableViolation&, const TableViolation&) = default;
};
struct TableReport {
  std::size_t checked = 0;
  std::vector<TableViolation> violations;  // ordered by x, then by discovery
  bool ok() const { return violations.empty(); }
  friend bool operator==(const TableReport&, const TableReport&) = default;
};

// Identity and iff-compatibility laws, with law names as in check_axioms.
TableReport table_axioms(const ActionTable& t, Exec e);
// Groupoid laws on the domain, the involution, and the intertwiner between
// the two derived actions, with law names as in check_groupoid.
TableReport table_groupoid(const ActionTable& t, Exec e);

// Results in input order.
std::vector<Func> convolve_pairs(const ConvolutionContext& ctx, const std::vector<std::pair<Func, Func>>& pairs, Exec e);

// out[i] = fn(i); exceptions are rethrown after the loop, lowest index first.
template <class T, class Fn>
std::vector<T> run_indexed(std::size_t n, Fn fn, Exec e) {
  std::vector<T> out(n);
  std::vector<std::exception_ptr> errors(n);
  const auto m = static_cast<std::int64_t>(n);
  if (e == Exec::Serial) {
    for (std::int64_t i = 0; i < m; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < m; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& ep : errors)
    if (ep) std::rethrow_exception(ep);
  return out;
}

}  // namespace locpoly

#endif
