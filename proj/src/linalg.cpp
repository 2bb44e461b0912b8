#include "locpoly/linalg.hpp"

namespace locpoly {

Mat identity_matrix(std::size_t n) {
  Mat m(n, Vec(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
  return m;
}

Mat matmul(const Mat& a, const Mat& b) {
  if (a.empty()) return {};
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (a[0].size() != k) throw Error("matrix dimension mismatch");
  Mat out(n, Vec(m, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat out(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
  return out;
}

Mat kronecker(const Mat& a, const Mat& b) {
  std::size_t ra = a.size(), ca = a.empty() ? 0 : a[0].size();
  std::size_t rb = b.size(), cb = b.empty() ? 0 : b[0].size();
  Mat out(ra * rb, Vec(ca * cb, Scalar(0)));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l) out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

Scalar trace(const Mat& a) {
  Scalar t(0);
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool is_zero_vector(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::size_t rank(Mat m) {
  RowBasis basis(m.empty() ? 0 : m[0].size());
  for (const auto& row : m) basis.add(row);
  return basis.size();
}

std::optional<Mat> inverse(Mat m) {
  std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error("inverse of non-square matrix");
    m[i].resize(2 * n, Scalar(0));
    m[i][n + i] = Scalar(1);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[col], m[piv]);
    Scalar inv = m[col][col].inverse();
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t k = col; k < 2 * n; ++k)
        if (!m[col][k].is_zero()) m[r][k] -= f * m[col][k];
    }
  }
  Mat out(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m[i][n + j];
  return out;
}

Vec RowBasis::reduce(Vec& v) const {
  Vec combo(reduced_.size(), Scalar(0));
  for (const auto& r : reduced_) {
    if (v[r.pivot].is_zero()) continue;
    Scalar c = v[r.pivot];
    for (std::size_t k = 0; k < width_; ++k)
      if (!r.row[k].is_zero()) v[k] -= c * r.row[k];
    for (std::size_t j = 0; j < r.combo.size(); ++j)
      if (!r.combo[j].is_zero()) combo[j] += c * r.combo[j];
  }
  return combo;
}

bool RowBasis::add(const Vec& v) {
  if (v.size() != width_) throw Error("row width mismatch");
  Vec w = v;
  Vec sub = reduce(w);
  std::size_t pivot = 0;
  while (pivot < width_ && w[pivot].is_zero()) ++pivot;
  if (pivot == width_) return false;
  Scalar inv = w[pivot].inverse();
  for (auto& x : w) x *= inv;
  // w_normalized = inv * (original - sum sub_j * original_j)
  Vec combo(reduced_.size() + 1, Scalar(0));
  for (std::size_t j = 0; j < sub.size(); ++j) combo[j] = -(sub[j] * inv);
  combo[reduced_.size()] = inv;
  reduced_.push_back({std::move(w), pivot, std::move(combo)});
  return true;
}

std::optional<Vec> RowBasis::express(const Vec& v) const {
  if (v.size() != width_) throw Error("row width mismatch");
  Vec w = v;
  Vec coeffs = reduce(w);
  if (!is_zero_vector(w)) return std::nullopt;
  return coeffs;
}

std::vector<std::size_t> independent_rows(const Mat& rows) {
  std::vector<std::size_t> out;
  if (rows.empty()) return out;
  RowBasis basis(rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (basis.add(rows[i])) out.push_back(i);
  return out;
}

}  // namespace locpoly
