#ifndef LOCPOLY_FUNC_HPP
#define LOCPOLY_FUNC_HPP

#include <utility>
#include <vector>

#include "locpoly/group.hpp"
#include "locpoly/linalg.hpp"
#include "locpoly/openset.hpp"

namespace locpoly {

// Locally constant compactly supported function: disjoint (cell, value)
// terms with nonzero values, kept in canonical merged form.
class Func {
 public:
  using Term = std::pair<Cell, Scalar>;

  explicit Func(Space s) : space_(std::move(s)) {}

  // Checked constructor for external input: cells must be valid, compact,
  // and pairwise disjoint.
  static Func from_terms(const Space& s, std::vector<Term> terms);
  // Trusted constructor: cells are known to be disjoint.
  static Func from_disjoint(const Space& s, std::vector<Term> terms);
  static Func indicator(const Space& s, const std::vector<Cell>& cells, const Scalar& v = Scalar(1));

  const Space& space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Scalar evaluate(const Point& x) const;
  // Value on a cell that lies inside one term or misses them all; throws
  // when the cell straddles a term boundary.
  Scalar value_on(const Cell& c) const;
  std::vector<Cell> support_cells() const;
  OpenSet support() const;
  std::int64_t finest_level() const;

  Func conj() const;
  Func operator-() const;
  friend Func operator+(const Func& a, const Func& b);
  friend Func operator-(const Func& a, const Func& b);
  friend Func operator*(const Func& a, const Func& b);
  friend Func operator*(const Scalar& c, const Func& f);

  std::string describe() const;

  friend bool operator==(const Func& a, const Func& b) { return a.space_ == b.space_ && a.terms_ == b.terms_; }

 private:
  Space space_;
  std::vector<Term> terms_;
};

Func tensor(const Func& a, const Func& b);

// Integral against the left Haar measure of g.
Scalar integrate(const Group& g, const Func& f);
// Mass-one normalized integral over a compact open subgroup.
Scalar haar_integrate(const Group& g, const Subgroup& g0, const Func& phi);

// Common refinement of the term cells of several functions, together with
// extra cells that should be covered.
std::vector<Cell> common_grid(const Space& s, const std::vector<Func>& fs, const std::vector<Cell>& extra = {});
Vec values_on(const Func& f, const std::vector<Cell>& grid);
Func from_values(const Space& s, const std::vector<Cell>& grid, const Vec& values);
Func linear_combination(const Space& s, const std::vector<Func>& fs, const Vec& coeffs);

}  // namespace locpoly

#endif
