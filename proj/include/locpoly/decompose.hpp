#ifndef LOCPOLY_DECOMPOSE_HPP
#define LOCPOLY_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "locpoly/polynomial.hpp"

namespace locpoly {

// Function on X x G given by F(x,p) = f(x.p) g(p) on Gamma and 0 elsewhere.
// Requires supp g inside V_f.
Func product_function(const Action& a, const Func& f, const Func& g);

struct ProductDecomposition {
  Func F;
  std::vector<Func> f_parts;  // functions on X, translates of f
  std::vector<Func> g_parts;  // functions on G
  std::vector<Point> centers; // q_k of the coset cover of supp g
  Subgroup g1;                // the cover uses left cosets of g1
  std::size_t grid = 0;       // cells on which the reconstruction was compared
  bool reconstructs = false;
  std::size_t rank() const { return f_parts.size(); }
};

// F(x,p) = sum_i f_i(x) g_i(p) with every f_i polynomial.  supp g is cut
// into pieces inside left cosets q_k G1, where G1 fixes the support cells of
// f; on such a piece F(x,p) = (q_k.f)(x) g(p).  The translates q_k.f are
// then reduced to an independent family.
ProductDecomposition decompose_product(const Action& a, const Func& f, const Func& g);

struct ConverseVerdict {
  bool polynomial = false;
  std::optional<Point> q0;
  std::optional<Subgroup> v;                    // g is nonzero and constant on v q0
  std::optional<PolynomialCertificate> shifted;  // certificate for q0.f built from the pairs
  std::optional<PolynomialCertificate> certificate;  // certificate for f
  std::vector<std::string> notes;
};

// Recovers polynomiality of f from F(x,p) = sum f_i(x) g_i(p): dividing by
// g near a point q0 with g(q0) != 0 puts every (v q0).f in span{f_i}.
// Throws when g is zero.
ConverseVerdict converse_polynomiality(const Action& a, const Func& f, const std::vector<Func>& f_parts,
                                       const std::vector<Func>& g_parts, const Func& g);

// Polynomiality of F for the action on the first factor of X x G, and for
// right translation on the second factor when g is polynomial.
struct ProductPolynomiality {
  PolynomialResult first;
  std::optional<PolynomialResult> second;
  bool ok() const { return first.certificate && (!second || second->certificate); }
};
ProductPolynomiality product_polynomiality(const Action& a, const Func& F, bool check_second);

}  // namespace locpoly

#endif
