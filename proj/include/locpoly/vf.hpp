#ifndef LOCPOLY_VF_HPP
#define LOCPOLY_VF_HPP

#include "locpoly/action.hpp"
#include "locpoly/func.hpp"

namespace locpoly {

// The neighborhood V_f = {p : (x, p^-1) in Gamma for all x in supp f}.
struct VfSet {
  Group group;
  OpenSet set;

  bool is_all() const { return set.is_all(); }
  bool contains(const Point& p) const { return set.contains(p); }
  std::string describe() const { return set.describe(); }
};

// Whether some compact ball coordinate of c can be refined.
bool refinable(const Space& s, const Cell& c);
// One refinement step in every compact ball coordinate; other coordinates
// are kept whole.
std::vector<Cell> split(const Space& s, const Cell& c);

// Cells d of the region on which the whole of d x {g} lies in Gamma, found by
// refining until every cell is decided.
OpenSet domain_slice(const Action& a, const Point& g, const std::vector<Cell>& region, int max_depth = 16);

VfSet compute_Vf(const Action& a, const Func& f, int max_depth = 12);

// Direct membership test for p in V_f, refining support cells as needed.
// On failure, names a support cell that leaves the domain.
bool in_Vf(const Action& a, const Func& f, const Point& p, std::string* why = nullptr);

// x -> f(x.g) on Gamma, zero elsewhere.  Requires g in V_f.
Func induced_act(const Action& a, const Point& g, const Func& f);

struct CompositionReport {
  bool q_in_Vg = false;   // q in V_{p.f}
  bool qp_in_Vf = false;  // qp in V_f
  bool iff_holds = false;
  std::optional<bool> equal;  // (qp).f == q.(p.f), when both are defined
  bool ok() const { return iff_holds && equal.value_or(true); }
};
CompositionReport composition_law_check(const Action& a, const Func& f, const Point& p, const Point& q);

// k.f.h for a commuting product action: x -> f(h.x.k), evaluated through
// the two factor actions separately.  Throws when h.x.k is undefined for
// some x in the pulled back support.
Func two_sided_act(const Action& product, const Point& h, const Point& k, const Func& f);

}  // namespace locpoly

#endif
