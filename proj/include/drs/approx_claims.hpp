#pragma once

// Audit registry for the approximation-operator laws. Expectations encode
// what the sweeps actually find on small spaces satisfying each hypothesis:
// several catalogued laws fail there, and those failures are the point of
// keeping them in the registry.

#include <vector>

#include "drs/approx.hpp"
#include "drs/claim.hpp"

namespace drs {
namespace approx_claims_detail {

inline std::string show(const FiniteRelationSpace& s, const char* name, Subset v) {
  return std::string(name) + "=" + set_to_string(s, v);
}

}  // namespace approx_claims_detail

inline std::vector<ClaimSpec> approx_claims() {
  using namespace approx_claims_detail;
  std::vector<ClaimSpec> cs;

  auto add1 = [&](std::string id, std::string hyp, Expect exp, std::string summary,
                  std::function<bool(const FiniteRelationSpace&, Subset,
                                     std::string&)> f) {
    ClaimSpec c{std::move(id), "approx", std::move(hyp), exp, std::move(summary), {}};
    c.run = [f, c](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_subsets(c, sp, o, 1,
                           [&](const FiniteRelationSpace& s,
                               const std::vector<Subset>& t, std::string& d) {
                             return f(s, t[0], d);
                           });
    };
    cs.push_back(c);
  };
  auto add2 = [&](std::string id, std::string hyp, Expect exp, std::string summary,
                  std::function<bool(const FiniteRelationSpace&, Subset, Subset,
                                     std::string&)> f) {
    ClaimSpec c{std::move(id), "approx", std::move(hyp), exp, std::move(summary), {}};
    c.run = [f, c](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_subsets(c, sp, o, 2,
                           [&](const FiniteRelationSpace& s,
                               const std::vector<Subset>& t, std::string& d) {
                             return f(s, t[0], t[1], d);
                           });
    };
    cs.push_back(c);
  };
  auto add0 = [&](std::string id, std::string hyp, Expect exp, std::string summary,
                  std::function<bool(const FiniteRelationSpace&, std::string&)> f) {
    ClaimSpec c{std::move(id), "approx", std::move(hyp), exp, std::move(summary), {}};
    c.run = [f, c](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_spaces(c, sp, o,
                          [&](const FiniteRelationSpace& s,
                              const std::vector<Subset>&, std::string& d) {
                            return f(s, d);
                          });
    };
    cs.push_back(c);
  };

  auto ap = [](const FiniteRelationSpace& s, Subset A, Op op) {
    return approximate(s, A, op);
  };

  // ---- lower/upper laws, reflexive catalogue -------------------------------
  add1("l-id", "reflexive up-directed", Expect::hold,
       "lower image is idempotent and contained in its argument",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset l = ap(s, A, Op::l);
         if (ap(s, l, Op::l) != l) { d = "lower image not idempotent"; return false; }
         if (!subset_of(l, A)) { d = "lower image escapes argument"; return false; }
         return true;
       });
  add1("u-wid", "reflexive up-directed", Expect::hold,
       "argument sits under its upper image, which sits under the iterate",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset u = ap(s, A, Op::u);
         if (!subset_of(A, u)) { d = "argument not inside upper image"; return false; }
         if (!subset_of(u, ap(s, u, Op::u))) { d = "upper image above its iterate"; return false; }
         return true;
       });
  add1("lu-inc", "up-directed", Expect::hold,
       "lower image is inside upper of lower, inside upper image",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset l = ap(s, A, Op::l), u = ap(s, A, Op::u);
         Subset lu = ap(s, l, Op::u);
         if (!subset_of(l, lu)) { d = "l not inside lu"; return false; }
         if (!subset_of(lu, u)) { d = "lu not inside u"; return false; }
         return true;
       });
  add2("l-mo", "up-directed", Expect::hold, "lower image is monotone",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if (subset_of(A, B) && !subset_of(ap(s, A, Op::l), ap(s, B, Op::l))) {
           d = "monotonicity broken";
           return false;
         }
         return true;
       });
  add2("u-mo", "up-directed", Expect::hold, "upper image is monotone",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if (subset_of(A, B) && !subset_of(ap(s, A, Op::u), ap(s, B, Op::u))) {
           d = "monotonicity broken";
           return false;
         }
         return true;
       });
  add0("bnd", "reflexive up-directed", Expect::hold,
       "whole space and empty set are fixed by both images",
       [ap](const FiniteRelationSpace& s, std::string& d) {
         Subset S = s.universe();
         if (ap(s, S, Op::u) != S || ap(s, S, Op::l) != S) {
           d = "whole space not fixed";
           return false;
         }
         if (ap(s, 0, Op::l) != 0 || ap(s, 0, Op::u) != 0) {
           d = "empty set not fixed";
           return false;
         }
         return true;
       });
  add2("u-union", "up-directed", Expect::hold,
       "upper image distributes over union",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if (ap(s, A | B, Op::u) != (ap(s, A, Op::u) | ap(s, B, Op::u))) {
           d = "distribution over union broken";
           return false;
         }
         return true;
       });
  add2("l-union", "up-directed", Expect::hold,
       "union of lower images sits inside lower image of union",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if (!subset_of(ap(s, A, Op::l) | ap(s, B, Op::l), ap(s, A | B, Op::l))) {
           d = "inclusion broken";
           return false;
         }
         return true;
       });
  add2("l-union0", "reflexive up-directed", Expect::fail,
       "for disjoint arguments the lower image of the union equals the union of lower images",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if ((A & B) == 0 &&
             ap(s, A | B, Op::l) != (ap(s, A, Op::l) | ap(s, B, Op::l))) {
           d = show(s, "(A|B)^l", ap(s, A | B, Op::l)) + " vs " +
               show(s, "A^l|B^l", ap(s, A, Op::l) | ap(s, B, Op::l));
           return false;
         }
         return true;
       });
  add2("l-cap", "up-directed", Expect::hold,
       "lower image of intersection sits inside intersection of lower images",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if (!subset_of(ap(s, A & B, Op::l), ap(s, A, Op::l) & ap(s, B, Op::l))) {
           d = "inclusion broken";
           return false;
         }
         return true;
       });
  add2("u-cap", "up-directed", Expect::hold,
       "upper image of intersection sits inside intersection of upper images",
       [ap](const FiniteRelationSpace& s, Subset A, Subset B, std::string& d) {
         if (!subset_of(ap(s, A & B, Op::u), ap(s, A, Op::u) & ap(s, B, Op::u))) {
           d = "inclusion broken";
           return false;
         }
         return true;
       });

  // ---- reflexivity-free catalogue ------------------------------------------
  add1("l-id0", "up-directed", Expect::hold,
       "lower image idempotent and contained in its argument (no reflexivity)",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset l = ap(s, A, Op::l);
         if (ap(s, l, Op::l) != l || !subset_of(l, A)) {
           d = "law broken";
           return false;
         }
         return true;
       });
  add1("u-wid0", "up-directed", Expect::hold,
       "upper image sits under its own iterate (no reflexivity)",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset u = ap(s, A, Op::u);
         if (!subset_of(u, ap(s, u, Op::u))) { d = "law broken"; return false; }
         return true;
       });
  add0("bnd0", "up-directed", Expect::hold,
       "both images of the whole space agree; empty set fixed (no reflexivity)",
       [ap](const FiniteRelationSpace& s, std::string& d) {
         Subset S = s.universe();
         if (ap(s, S, Op::l) != ap(s, S, Op::u)) { d = "images of S differ"; return false; }
         if (ap(s, 0, Op::l) != 0 || ap(s, 0, Op::u) != 0) { d = "empty set moved"; return false; }
         return true;
       });

  // ---- triangle operators, hypothesis-free part ----------------------------
  add1("p4-tri-eq", "up-directed", Expect::hold,
       "pointwise form of the up-triangle equals the union of inverse granules",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset un = 0;
         for_each_member(A, [&](int x) { un |= s.succ(x); });
         if (ap(s, A, Op::tri_up) != un) { d = "forms disagree"; return false; }
         return true;
       });
  add1("p4-tri-le-uplus", "up-directed", Expect::hold,
       "up-triangle sits inside the pointwise upper image",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         if (!subset_of(ap(s, A, Op::tri_up), ap(s, A, Op::u_plus))) {
           d = "inclusion broken";
           return false;
         }
         return true;
       });
  add1("p4-uplus-le-ui", "up-directed", Expect::fail,
       "pointwise upper image sits inside the inverse-granular upper image",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset x = ap(s, A, Op::u_plus), y = ap(s, A, Op::u_i);
         if (!subset_of(x, y)) {
           d = show(s, "A^{u+}", x) + " not inside " + show(s, "A^{u_i}", y);
           return false;
         }
         return true;
       });
  add1("p4-btri-eq", "up-directed", Expect::hold,
       "black up-triangle equals the union of plain granules over members",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset un = 0;
         for_each_member(A, [&](int x) { un |= s.pred(x); });
         if (ap(s, A, Op::btri_up) != un) { d = "forms disagree"; return false; }
         return true;
       });
  add1("p4-btri-le-u", "up-directed", Expect::fail,
       "black up-triangle sits inside the granular upper image",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset x = ap(s, A, Op::btri_up), y = ap(s, A, Op::u);
         if (!subset_of(x, y)) {
           d = show(s, "A^bt", x) + " not inside " + show(s, "A^u", y);
           return false;
         }
         return true;
       });

  // ---- triangle operators under reflexivity --------------------------------
  // Composite superscripts are checked in both reading orders; the id suffix
  // names the order in which operators are applied.
  auto comp_eq = [ap](const FiniteRelationSpace& s, Subset A, Op first, Op second,
                      Op target, std::string& d) {
    Subset lhs = ap(s, ap(s, A, first), second);
    Subset rhs = ap(s, A, target);
    if (lhs != rhs) {
      d = "composite gives " + set_to_string(s, lhs) + ", operator gives " +
          set_to_string(s, rhs);
      return false;
    }
    return true;
  };
  add1("p5-l-eq-td-tu", "reflexive up-directed", Expect::fail,
       "down-triangle then up-triangle reproduces the granular lower image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::tri_down, Op::tri_up, Op::l, d);
       });
  add1("p5-l-eq-tu-td", "reflexive up-directed", Expect::fail,
       "up-triangle then down-triangle reproduces the granular lower image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::tri_up, Op::tri_down, Op::l, d);
       });
  add1("p5-li-eq-bd-bu", "reflexive up-directed", Expect::fail,
       "black down then black up reproduces the inverse lower image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::btri_down, Op::btri_up, Op::l_i, d);
       });
  add1("p5-li-eq-bu-bd", "reflexive up-directed", Expect::fail,
       "black up then black down reproduces the inverse lower image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::btri_up, Op::btri_down, Op::l_i, d);
       });
  add1("p5-u-eq-tu-bu", "reflexive up-directed", Expect::hold,
       "up-triangle then black up reproduces the granular upper image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::tri_up, Op::btri_up, Op::u, d);
       });
  add1("p5-u-eq-bu-tu", "reflexive up-directed", Expect::fail,
       "black up then up-triangle reproduces the granular upper image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::btri_up, Op::tri_up, Op::u, d);
       });
  add1("p5-ui-eq-bu-tu", "reflexive up-directed", Expect::hold,
       "black up then up-triangle reproduces the inverse upper image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::btri_up, Op::tri_up, Op::u_i, d);
       });
  add1("p5-ui-eq-tu-bu", "reflexive up-directed", Expect::fail,
       "up-triangle then black up reproduces the inverse upper image",
       [comp_eq](const FiniteRelationSpace& s, Subset A, std::string& d) {
         return comp_eq(s, A, Op::tri_up, Op::btri_up, Op::u_i, d);
       });
  add1("p5-td-sandwich", "reflexive up-directed", Expect::hold,
       "down-triangle under the argument under up-triangle",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         if (!subset_of(ap(s, A, Op::tri_down), A)) { d = "lower bound broken"; return false; }
         if (!subset_of(A, ap(s, A, Op::tri_up))) { d = "upper bound broken"; return false; }
         return true;
       });
  add1("p5-bd-sandwich", "reflexive up-directed", Expect::hold,
       "black down-triangle under the argument under black up-triangle",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         if (!subset_of(ap(s, A, Op::btri_down), A)) { d = "lower bound broken"; return false; }
         if (!subset_of(A, ap(s, A, Op::btri_up))) { d = "upper bound broken"; return false; }
         return true;
       });
  add1("p5-tri-comp", "reflexive up-directed", Expect::fail,
       "complement of up-triangle equals down-triangle of complement",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset lhs = s.universe() & ~ap(s, A, Op::tri_up);
         Subset rhs = ap(s, s.universe() & ~A, Op::tri_down);
         if (lhs != rhs) {
           d = set_to_string(s, lhs) + " vs " + set_to_string(s, rhs);
           return false;
         }
         return true;
       });
  add1("p5-tri-comp-swap", "reflexive up-directed", Expect::hold,
       "complement of up-triangle equals black down-triangle of complement",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset lhs = s.universe() & ~ap(s, A, Op::tri_up);
         Subset rhs = ap(s, s.universe() & ~A, Op::btri_down);
         if (lhs != rhs) {
           d = set_to_string(s, lhs) + " vs " + set_to_string(s, rhs);
           return false;
         }
         return true;
       });
  add1("p5-btri-comp", "reflexive up-directed", Expect::fail,
       "complement of black up-triangle equals black down-triangle of complement",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset lhs = s.universe() & ~ap(s, A, Op::btri_up);
         Subset rhs = ap(s, s.universe() & ~A, Op::btri_down);
         if (lhs != rhs) {
           d = set_to_string(s, lhs) + " vs " + set_to_string(s, rhs);
           return false;
         }
         return true;
       });
  add1("p5-btri-comp-swap", "reflexive up-directed", Expect::hold,
       "complement of black up-triangle equals down-triangle of complement",
       [ap](const FiniteRelationSpace& s, Subset A, std::string& d) {
         Subset lhs = s.universe() & ~ap(s, A, Op::btri_up);
         Subset rhs = ap(s, s.universe() & ~A, Op::tri_down);
         if (lhs != rhs) {
           d = set_to_string(s, lhs) + " vs " + set_to_string(s, rhs);
           return false;
         }
         return true;
       });

  return cs;
}

}  // namespace drs
