#pragma once

// Audit registry for the image-algebra laws. The upper-algebra suite holds on
// every space here; in the combined suite the closed-join reassociation is the
// interesting one: it survives on reflexive spaces only because upper images
// collapse there, and the wide variant records its failure once reflexivity is
// dropped. The partial-extension suite is checked under weak equality.

#include <string>
#include <vector>

#include "drs/claim.hpp"
#include "drs/imgalg.hpp"

namespace drs {
namespace imgalg_claims_detail {

inline ImageAlgebra build_kind(const FiniteRelationSpace& s, AlgebraKind k,
                               int bound) {
  switch (k) {
    case AlgebraKind::upper: return build_upper_algebra(s, bound);
    case AlgebraKind::combined: return build_lu_algebra(s, bound);
    case AlgebraKind::combined_partial: break;
  }
  return extend_partial(s, build_lu_algebra(s, bound));
}

inline std::string elem(const ImageAlgebra& g, int i) {
  return set_to_string(g.space, g.carrier[i]);
}

// Mirrors the subset sweep: carrier-index tuples in odometer order with the
// first component moving fastest, spaces over the bound skipped with a note.
using CarrierCheck = std::function<bool(const ImageAlgebra&,
                                        const std::vector<int>&, std::string&)>;

inline ClaimReport sweep_carrier(const ClaimSpec& c, const SpaceFamily& spaces,
                                 const AuditOptions& opts, AlgebraKind kind,
                                 int arity, const CarrierCheck& check) {
  ClaimReport r = detail::report_skeleton(c, opts);
  std::mt19937_64 rng(opts.seed);
  for (const auto& s : spaces) {
    if (s.size() > opts.bound) {
      r.note += "skipped space |S|=" + std::to_string(s.size()) + " over bound; ";
      continue;
    }
    ImageAlgebra g = build_kind(s, kind, opts.bound);
    int n = g.size();
    std::vector<int> tuple(arity, 0);
    auto run_one = [&]() -> bool {
      std::string detail;
      ++r.sweep_size;
      if (!check(g, tuple, detail)) {
        r.verdict = Verdict::fails;
        std::vector<Subset> sets;
        for (int i : tuple) sets.push_back(g.carrier[i]);
        r.witness = Witness{s, sets, detail};
        return false;
      }
      return true;
    };
    if (opts.mode == AuditMode::exhaustive) {
      bool done = false;
      while (!done) {
        if (!run_one()) return r;
        int i = 0;
        for (; i < arity; ++i) {
          if (tuple[i] == n - 1) {
            tuple[i] = 0;
          } else {
            ++tuple[i];
            break;
          }
        }
        if (i == arity) done = true;
      }
    } else {
      std::uniform_int_distribution<int> dist(0, n - 1);
      int reps = (arity == 0) ? 1 : opts.samples;
      for (int k = 0; k < reps; ++k) {
        for (int i = 0; i < arity; ++i) tuple[i] = dist(rng);
        if (!run_one()) return r;
      }
    }
  }
  return r;
}

// Runs one weak-equality check per space, folding the result into the report.
// Returns false once a witness is recorded.
inline bool fold_weak(ClaimReport& r, const ImageAlgebra& g, const char* lt,
                      const char* rt, EqMode mode) {
  ATerm lhs = ATerm::parse(lt), rhs = ATerm::parse(rt);
  WeakEqReport w = weak_equality(g, lhs, rhs, mode);
  r.sweep_size += w.assignments;
  if (w.holds) return true;
  r.verdict = Verdict::fails;
  std::vector<Subset> sets;
  std::string shown;
  for (const auto& [v, i] : *w.witness) {
    sets.push_back(g.carrier[i]);
    shown += std::string(1, v) + "=" + elem(g, i) + " ";
  }
  r.witness = Witness{g.space, sets,
                      std::string(lt) + " vs " + rt + " at " + shown + "(" +
                          w.detail + ")"};
  return false;
}

// Checks shared between the individual combined-suite claims and the bundled
// reduct claim.
inline bool chk_idemp3(const ImageAlgebra& g, int a, std::string& d) {
  if (g.cap[a][a] != a) { d = "closed meet not idempotent at " + elem(g, a); return false; }
  if (g.cap[g.cup[a][a]][a] != a) {
    d = "meeting back the closed self-join moves " + elem(g, a);
    return false;
  }
  return true;
}

inline bool chk_qidemp4(const ImageAlgebra& g, int a, std::string& d) {
  if (g.upper[a] < 0 || g.cup[a][a] != g.upper[a]) {
    d = "closed self-join differs from the upper image at " + elem(g, a);
    return false;
  }
  return true;
}

inline bool chk_comm12(const ImageAlgebra& g, int a, int b, std::string& d) {
  if (g.cap[a][b] != g.cap[b][a]) { d = "closed meet not commutative"; return false; }
  if (g.cup[a][b] != g.cup[b][a]) { d = "closed join not commutative"; return false; }
  return true;
}

inline bool chk_halfabs(const ImageAlgebra& g, int a, int b, std::string& d) {
  if (g.cap[a][g.cup[b][a]] != a) {
    d = "absorption from the join side moves " + elem(g, a);
    return false;
  }
  return true;
}

inline bool chk_qassoc1(const ImageAlgebra& g, int a, int b, int c,
                        std::string& d) {
  if (g.upper[b] < 0 || g.upper[c] < 0) {
    d = "upper image leaves the carrier";
    return false;
  }
  int lhs = g.cup[a][g.cup[b][c]];
  int rhs = g.cup[g.cup[a][g.upper[b]]][g.upper[c]];
  if (lhs != rhs) {
    d = "lhs=" + elem(g, lhs) + " rhs=" + elem(g, rhs);
    return false;
  }
  return true;
}

inline bool chk_qassoc0(const ImageAlgebra& g, int a, int b, int c,
                        std::string& d) {
  int lhs = g.cup[g.cup[a][g.cup[b][c]]][g.cup[g.cup[a][b]][c]];
  int rhs = g.cup[g.cup[g.cup[a][a]][g.cup[b][b]]][g.cup[g.cup[c][c]][c]];
  if (lhs != rhs) {
    d = "lhs=" + elem(g, lhs) + " rhs=" + elem(g, rhs);
    return false;
  }
  return true;
}

}  // namespace imgalg_claims_detail

inline std::vector<ClaimSpec> image_algebra_claims() {
  using namespace imgalg_claims_detail;
  std::vector<ClaimSpec> cs;

  auto add = [&](std::string id, std::string hyp, Expect exp, std::string summary,
                 AlgebraKind kind, int arity, CarrierCheck f) {
    ClaimSpec c{std::move(id), "imgalg", std::move(hyp), exp, std::move(summary), {}};
    c.run = [f, c, kind, arity](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_carrier(c, sp, o, kind, arity, f);
    };
    cs.push_back(c);
  };

  // Per-space claims built from weak equalities plus optional pointwise
  // checks; the callback returns false once the report carries a witness.
  auto add_space = [&](std::string id, std::string hyp, Expect exp,
                       std::string summary, AlgebraKind kind,
                       std::function<bool(const ImageAlgebra&, ClaimReport&)> f) {
    ClaimSpec c{std::move(id), "imgalg", std::move(hyp), exp, std::move(summary), {}};
    c.run = [f, c, kind](const SpaceFamily& sp, const AuditOptions& o) {
      ClaimReport r = detail::report_skeleton(c, o);
      for (const auto& s : sp) {
        if (s.size() > o.bound) {
          r.note += "skipped space |S|=" + std::to_string(s.size()) + " over bound; ";
          continue;
        }
        ImageAlgebra g = build_kind(s, kind, o.bound);
        if (!f(g, r)) return r;
      }
      return r;
    };
    cs.push_back(c);
  };

  // ---- upper algebra -------------------------------------------------------
  add("ia-idemp1", "up-directed", Expect::hold,
      "join is idempotent with the empty set as unit", AlgebraKind::upper, 1,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        int a = t[0];
        if (g.join[a][a] != a) { d = "join not idempotent"; return false; }
        if (g.join[a][g.bottom] != a) { d = "bottom not a join unit"; return false; }
        return true;
      });
  add("ia-comm1", "up-directed", Expect::hold, "join is commutative",
      AlgebraKind::upper, 2,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        if (g.join[t[0]][t[1]] != g.join[t[1]][t[0]]) { d = "join order matters"; return false; }
        return true;
      });
  add("ia-comm2", "up-directed", Expect::hold, "meet is commutative",
      AlgebraKind::upper, 2,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        if (g.meet[t[0]][t[1]] != g.meet[t[1]][t[0]]) { d = "meet order matters"; return false; }
        return true;
      });
  add("ia-assoc1", "up-directed", Expect::hold, "join is associative",
      AlgebraKind::upper, 3,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        if (g.join[t[0]][g.join[t[1]][t[2]]] != g.join[g.join[t[0]][t[1]]][t[2]]) {
          d = "join not associative";
          return false;
        }
        return true;
      });
  add("ia-absfail", "up-directed", Expect::hold,
      "self-meet is the upper closure, so absorption stops there",
      AlgebraKind::upper, 1,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        int a = t[0], m = g.meet[a][a];
        if (g.upper[a] < 0 || m != g.upper[a]) {
          d = "self-meet differs from the upper image at " + elem(g, a);
          return false;
        }
        if (g.join[m][a] != m) {
          d = "joining back the argument escapes the upper image";
          return false;
        }
        return true;
      });
  add("ia-mo1", "up-directed", Expect::hold,
      "meet respects the order induced by join", AlgebraKind::upper, 3,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        int a = t[0], b = t[1], c = t[2];
        if (g.join[a][b] != b) return true;
        if (g.join[g.meet[a][c]][g.meet[b][c]] != g.meet[b][c]) {
          d = "order not respected below " + elem(g, b);
          return false;
        }
        return true;
      });

  // ---- combined algebra ----------------------------------------------------
  add("ia-idemp3", "up-directed", Expect::hold,
      "closed meet is idempotent and undoes the closed self-join",
      AlgebraKind::combined, 1,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_idemp3(g, t[0], d);
      });
  add("ia-qidemp4", "up-directed", Expect::hold,
      "closed self-join is exactly the upper closure", AlgebraKind::combined, 1,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_qidemp4(g, t[0], d);
      });
  add("ia-comm12", "up-directed", Expect::hold,
      "closed meet and closed join are commutative", AlgebraKind::combined, 2,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_comm12(g, t[0], t[1], d);
      });
  add("ia-halfabs", "up-directed", Expect::hold,
      "meeting with a join over the same element absorbs",
      AlgebraKind::combined, 2,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_halfabs(g, t[0], t[1], d);
      });
  add("ia-qassoc1", "reflexive up-directed", Expect::hold,
      "closed join reassociates after absorbing one upper closure",
      AlgebraKind::combined, 3,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_qassoc1(g, t[0], t[1], t[2], d);
      });
  add("ia-qassoc1-wide", "up-directed", Expect::fail,
      "the same reassociation without reflexivity", AlgebraKind::combined, 3,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_qassoc1(g, t[0], t[1], t[2], d);
      });
  add("ia-qassoc0", "up-directed", Expect::hold,
      "both balanced three-fold joins agree", AlgebraKind::combined, 3,
      [](const ImageAlgebra& g, const std::vector<int>& t, std::string& d) {
        return chk_qassoc0(g, t[0], t[1], t[2], d);
      });

  // ---- partial extension ---------------------------------------------------
  add_space("ia-app1", "reflexive up-directed", Expect::hold,
            "the combined reduct satisfies the whole combined suite",
            AlgebraKind::combined_partial,
            [](const ImageAlgebra& g, ClaimReport& r) {
              int n = g.size();
              auto fail = [&](int a, int b, int c, const std::string& d) {
                r.verdict = Verdict::fails;
                std::vector<Subset> sets{g.carrier[a]};
                if (b >= 0) sets.push_back(g.carrier[b]);
                if (c >= 0) sets.push_back(g.carrier[c]);
                r.witness = Witness{g.space, sets, d};
                return false;
              };
              std::string d;
              for (int a = 0; a < n; ++a) {
                ++r.sweep_size;
                if (!chk_idemp3(g, a, d)) return fail(a, -1, -1, d);
                if (!chk_qidemp4(g, a, d)) return fail(a, -1, -1, d);
              }
              for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                  ++r.sweep_size;
                  if (!chk_comm12(g, a, b, d)) return fail(a, b, -1, d);
                  if (!chk_halfabs(g, a, b, d)) return fail(a, b, -1, d);
                }
              for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                  for (int c = 0; c < n; ++c) {
                    ++r.sweep_size;
                    if (!chk_qassoc1(g, a, b, c, d)) return fail(a, b, c, d);
                    if (!chk_qassoc0(g, a, b, c, d)) return fail(a, b, c, d);
                  }
              return true;
            });
  add_space("ia-app2", "up-directed", Expect::hold,
            "plain intersection is idempotent with bottom and top as expected",
            AlgebraKind::combined_partial,
            [](const ImageAlgebra& g, ClaimReport& r) {
              for (int a = 0; a < g.size(); ++a) {
                ++r.sweep_size;
                std::string d;
                if (g.pmeet[a][a] != a) d = "self-intersection moves " + elem(g, a);
                else if (g.pmeet[a][g.bottom] != g.bottom)
                  d = "intersection with bottom is not bottom at " + elem(g, a);
                else if (g.pmeet[a][g.top] != a)
                  d = "intersection with top moves " + elem(g, a);
                if (!d.empty()) {
                  r.verdict = Verdict::fails;
                  r.witness = Witness{g.space, {g.carrier[a]}, d};
                  return false;
                }
              }
              return true;
            });
  add_space("ia-app3", "up-directed", Expect::hold,
            "plain intersection is commutative and associative where defined",
            AlgebraKind::combined_partial,
            [](const ImageAlgebra& g, ClaimReport& r) {
              return fold_weak(r, g, "isect(a, b)", "isect(b, a)", EqMode::omega) &&
                     fold_weak(r, g, "isect(a, isect(b, c))",
                               "isect(isect(a, b), c)", EqMode::omega);
            });
  add_space("ia-app4", "up-directed", Expect::hold,
            "both closures lie above their argument; complement is involutive "
            "where defined",
            AlgebraKind::combined_partial,
            [](const ImageAlgebra& g, ClaimReport& r) {
              for (int a = 0; a < g.size(); ++a) {
                ++r.sweep_size;
                std::string d;
                if (g.upper[a] < 0 || g.pmeet[a][g.upper[a]] != a)
                  d = "upper image does not lie above " + elem(g, a);
                else if (g.lower[a] < 0 || g.pmeet[a][g.lower[a]] != a)
                  d = "lower image does not lie above " + elem(g, a);
                if (!d.empty()) {
                  r.verdict = Verdict::fails;
                  r.witness = Witness{g.space, {g.carrier[a]}, d};
                  return false;
                }
              }
              return fold_weak(r, g, "kappa(kappa(a))", "a", EqMode::omega);
            });
  add_space("ia-app5", "up-directed", Expect::hold,
            "intersection and union distribute over each other where defined",
            AlgebraKind::combined_partial,
            [](const ImageAlgebra& g, ClaimReport& r) {
              return fold_weak(r, g, "isect(a, union(b, c))",
                               "union(isect(a, b), isect(a, c))",
                               EqMode::omega) &&
                     fold_weak(r, g, "union(a, isect(b, c))",
                               "isect(union(a, b), union(a, c))", EqMode::omega);
            });
  add_space("ia-app6", "up-directed", Expect::hold,
            "complement swaps intersection and union where defined",
            AlgebraKind::combined_partial,
            [](const ImageAlgebra& g, ClaimReport& r) {
              return fold_weak(r, g, "kappa(isect(a, b))",
                               "union(kappa(a), kappa(b))", EqMode::omega) &&
                     fold_weak(r, g, "kappa(union(a, b))",
                               "isect(kappa(a), kappa(b))", EqMode::omega);
            });

  return cs;
}

}  // namespace drs
