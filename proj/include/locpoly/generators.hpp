#ifndef LOCPOLY_GENERATORS_HPP
#define LOCPOLY_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "locpoly/action.hpp"
#include "locpoly/func.hpp"
#include "locpoly/kernels.hpp"

namespace locpoly {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform in [lo, hi].
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v.at(static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))); }

 private:
  std::mt19937_64 gen_;
};

// Global action of a catalog group on a disjoint union of coset spaces,
// with points shuffled.
struct FiniteInstance {
  std::string name;
  Action action;
  std::vector<OpenSet> opens;  // random open subsets
};
FiniteInstance random_finite_instance(Rng& rng, std::size_t index, std::size_t max_points = 12, std::size_t opens = 3);
OpenSet random_open_subset(Rng& rng, const Space& s);

// One table entry x.g (g != e) of a global action redirected to another
// point or removed.
struct FaultInstance {
  ActionTable table;
  int x = 0, g = 0, was = 0, now = 0;
};
FaultInstance seeded_fault(Rng& rng, const Action& global);

// Random locally constant functions on Z_p inside Q_p, and on compact cell
// sets of the affine group; small integer values.
Func random_padic_func(Rng& rng, std::int64_t p = 3, std::int64_t max_level = 2);
Func random_affine_func(Rng& rng, std::int64_t p = 3, std::int64_t max_level = 2);

}  // namespace locpoly

#endif
