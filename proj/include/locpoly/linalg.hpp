#ifndef LOCPOLY_LINALG_HPP
#define LOCPOLY_LINALG_HPP

#include <optional>
#include <vector>

#include "locpoly/cyclotomic.hpp"

namespace locpoly {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Mat identity_matrix(std::size_t n);
Mat matmul(const Mat& a, const Mat& b);
Mat transpose(const Mat& a);
Mat kronecker(const Mat& a, const Mat& b);
Scalar trace(const Mat& a);
bool is_zero_vector(const Vec& v);

std::size_t rank(Mat m);
std::optional<Mat> inverse(Mat m);

// Incremental row basis.  Vectors are offered in order; the first nonzero
// pivot is used, so the accepted subset is deterministic.
class RowBasis {
 public:
  explicit RowBasis(std::size_t width) : width_(width) {}

  // Adds v if it is independent of the accepted vectors; returns whether it was accepted.
  bool add(const Vec& v);
  // Coordinates of v against the accepted vectors, if v lies in their span.
  std::optional<Vec> express(const Vec& v) const;

  std::size_t size() const { return reduced_.size(); }
  std::size_t width() const { return width_; }

 private:
  struct Reduced {
    Vec row;           // echelon row, pivot entry normalized to 1
    std::size_t pivot; // pivot column
    Vec combo;         // row = sum combo[i] * original_i
  };
  // Reduces v in place; returns the combination subtracted.
  Vec reduce(Vec& v) const;

  std::size_t width_;
  std::vector<Reduced> reduced_;
};

// Indices of a maximal independent subset, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Mat& rows);

}  // namespace locpoly

#endif
