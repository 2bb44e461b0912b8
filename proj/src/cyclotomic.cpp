#include "locpoly/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace locpoly {

namespace {

using Poly = std::vector<Rational>;

std::mutex g_phi_mutex;
std::map<int, std::vector<long long>> g_phi_cache;

std::vector<long long> compute_phi(int m) {
  // x^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<long long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const std::vector<long long>& div = cyclotomic_polynomial(d);
    std::size_t dd = div.size() - 1;
    std::vector<long long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      long long c = num[k];  // divisor is monic
      q[k - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * div[j];
    }
    num = q;
  }
  return num;
}

void reduce_in_place(Poly& a, int m) {
  const std::vector<long long>& phi = cyclotomic_polynomial(m);
  std::size_t d = phi.size() - 1;
  for (std::size_t k = a.size(); k-- > d;) {
    if (a[k].is_zero()) continue;
    Rational c = a[k];
    for (std::size_t j = 0; j <= d; ++j) {
      if (phi[j] != 0) a[k - d + j] -= c * Rational(phi[j]);
    }
  }
  a.resize(d, Rational(0));
}

Poly substitute_power(const Poly& a, long long e, int m) {
  // a(x^e) mod Phi_m, with x^m = 1 used to keep degrees bounded.
  Poly out(static_cast<std::size_t>(m), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    long long k = (static_cast<long long>(i) * e) % m;
    out[static_cast<std::size_t>(k)] += a[i];
  }
  reduce_in_place(out, m);
  return out;
}

}  // namespace

int euler_phi(int m) {
  int result = m, n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<long long>& cyclotomic_polynomial(int m) {
  if (m < 1) throw Error("cyclotomic polynomial needs m >= 1");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(m);
    if (it != g_phi_cache.end()) return it->second;
  }
  std::vector<long long> phi = (m == 1) ? std::vector<long long>{-1, 1} : compute_phi(m);
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return g_phi_cache.emplace(m, std::move(phi)).first->second;
}

Cyclotomic Cyclotomic::from_coeffs(int m, std::vector<Rational> coeffs) {
  if (m < 1 || m > kMaxConductor) throw Error("unsupported conductor " + std::to_string(m));
  if (coeffs.empty()) coeffs.push_back(Rational(0));
  std::size_t d = static_cast<std::size_t>(euler_phi(m));
  if (coeffs.size() < d) coeffs.resize(d, Rational(0));
  reduce_in_place(coeffs, m);
  Cyclotomic out(m, std::move(coeffs));
  out.collapse();
  return out;
}

Cyclotomic Cyclotomic::zeta(int m, long long k) {
  if (m < 1 || m > kMaxConductor) throw Error("unsupported conductor " + std::to_string(m));
  long long e = ((k % m) + m) % m;
  Poly p(static_cast<std::size_t>(m), Rational(0));
  p[static_cast<std::size_t>(e)] = Rational(1);
  return from_coeffs(m, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

const Rational& Cyclotomic::rational() const {
  if (m_ != 1) throw Error("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

void Cyclotomic::collapse() {
  if (m_ == 1) return;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return;
  Rational r = c_[0];
  m_ = 1;
  c_.assign(1, r);
}

Cyclotomic Cyclotomic::promoted(int M) const {
  if (M % m_ != 0) throw Error("cannot embed Q(zeta_" + std::to_string(m_) + ") into Q(zeta_" + std::to_string(M) + ")");
  if (M > kMaxConductor) throw Error("conductor " + std::to_string(M) + " exceeds supported bound");
  if (M == m_) return *this;
  Poly p = substitute_power(c_, M / m_, M);
  return Cyclotomic(M, std::move(p));  // deliberately not collapsed
}

namespace {
int common_conductor(int a, int b) {
  long long l = lcm_ll(a, b);
  if (l > kMaxConductor) throw Error("no supported common embedding for conductors " + std::to_string(a) + " and " + std::to_string(b));
  return static_cast<int>(l);
}
}  // namespace

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == 1 && b.m_ == 1) return Cyclotomic(a.c_[0] + b.c_[0]);
  int M = common_conductor(a.m_, b.m_);
  Cyclotomic x = a.promoted(M), y = b.promoted(M);
  for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  x.collapse();
  return x;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == 1 && b.m_ == 1) return Cyclotomic(a.c_[0] * b.c_[0]);
  if (a.m_ == 1 || b.m_ == 1) {
    const Cyclotomic& r = a.m_ == 1 ? a : b;
    Cyclotomic out = a.m_ == 1 ? b : a;
    for (auto& c : out.c_) c *= r.c_[0];
    out.collapse();
    return out;
  }
  int M = common_conductor(a.m_, b.m_);
  Cyclotomic x = a.promoted(M), y = b.promoted(M);
  Poly prod(x.c_.size() + y.c_.size(), Rational(0));
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      if (!y.c_[j].is_zero()) prod[i + j] += x.c_[i] * y.c_[j];
    }
  }
  reduce_in_place(prod, M);
  Cyclotomic out(M, std::move(prod));
  out.collapse();
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error("division by zero");
  if (m_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  // Solve (multiplication-by-this) * v = e_0 over Q.
  std::size_t d = c_.size();
  std::vector<Poly> mat(d, Poly(d + 1, Rational(0)));
  for (std::size_t j = 0; j < d; ++j) {
    Poly col(c_.size() + j, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) col[i + j] = c_[i];
    reduce_in_place(col, m_);
    for (std::size_t i = 0; i < d; ++i) mat[i][j] = col[i];
  }
  mat[0][d] = Rational(1);
  for (std::size_t col = 0, row = 0; col < d; ++col, ++row) {
    std::size_t piv = row;
    while (piv < d && mat[piv][col].is_zero()) ++piv;
    if (piv == d) throw Error("singular multiplication matrix in cyclotomic inverse");
    std::swap(mat[row], mat[piv]);
    Rational inv = Rational(1) / mat[row][col];
    for (auto& x : mat[row]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || mat[r][col].is_zero()) continue;
      Rational f = mat[r][col];
      for (std::size_t k = col; k <= d; ++k) mat[r][k] -= f * mat[row][k];
    }
  }
  Poly v(d);
  for (std::size_t i = 0; i < d; ++i) v[i] = mat[i][d];
  Cyclotomic out(m_, std::move(v));
  out.collapse();
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

Cyclotomic Cyclotomic::conj() const {
  if (m_ == 1) return *this;
  Cyclotomic out(m_, substitute_power(c_, m_ - 1, m_));
  out.collapse();
  return out;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  int M = static_cast<int>(lcm_ll(a.m_, b.m_));
  if (M > kMaxConductor) return false;
  return a.promoted(M).c_ == b.promoted(M).c_;
}

std::string Cyclotomic::str() const {
  if (m_ == 1) return c_[0].str();
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].str();
    if (!out.empty()) out += (coeff[0] == '-') ? " - " : " + ";
    else if (coeff[0] == '-') out += "-";
    if (coeff[0] == '-') coeff = coeff.substr(1);
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff != "1") out += coeff + "*";
    out += "z" + std::to_string(m_);
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace locpoly
