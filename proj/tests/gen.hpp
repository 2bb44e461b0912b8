// Hand-rolled generators for property tests.
#ifndef LOCPOLY_TESTS_GEN_HPP
#define LOCPOLY_TESTS_GEN_HPP

#include <cstdint>
#include <random>

#include "locpoly/cyclotomic.hpp"

namespace gen {

struct Source {
  explicit Source(std::uint64_t seed) : g(seed) {}
  int in(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }
  locpoly::Rational rational(int span = 9) {
    int d = in(1, span);
    return locpoly::Rational(in(-span, span)) / locpoly::Rational(d);
  }
  // Random element of Q(zeta_m) in the power basis.
  locpoly::Cyclotomic cyclotomic(int m) {
    std::vector<locpoly::Rational> c;
    for (int i = 0; i < locpoly::euler_phi(m); ++i) c.push_back(in(0, 2) ? rational(4) : locpoly::Rational(0));
    return locpoly::Cyclotomic::from_coeffs(m, c);
  }
  std::mt19937_64 g;
};

}  // namespace gen

#endif
