#pragma once

// Image lattices of the four local operators, the formal context of the
// complementary relation, and a family of distributivity criteria stated in
// four different languages: on the relation itself, on granules, on the
// context, and on a realizing operation table. The audit registry at the
// bottom records which meet formulas and complement pairings actually hold,
// and checks that all four criteria settle the same question as the brute
// force distributivity sweep.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "drs/approx.hpp"
#include "drs/claim.hpp"
#include "drs/core.hpp"
#include "drs/groupoid.hpp"
#include "drs/lattice.hpp"
#include "drs/relation.hpp"

namespace drs {

// Lattice-heavy sweeps get a tighter default than the subset sweeps, since
// concept enumeration and triple loops grow much faster.
inline constexpr int kConceptBound = 8;

namespace latfca_detail {

inline bool local_op(Op op) {
  return op == Op::tri_up || op == Op::tri_down || op == Op::btri_up ||
         op == Op::btri_down;
}

}  // namespace latfca_detail

// Every image of the operator, over all subsets of the universe, without
// repeats and in ascending mask order.
inline std::vector<Subset> image_family(const FiniteRelationSpace& s, Op op,
                                        int bound = kDefaultBound) {
  if (!latfca_detail::local_op(op))
    throw Error(Error::Kind::precondition,
                "image family needs one of the four local operators");
  require_bound(s.size(), bound, "image family");
  std::set<Subset> fam;
  Subset top = s.universe();
  for (Subset A = 0;; ++A) {
    fam.insert(approximate(s, A, op));
    if (A == top) break;
  }
  return std::vector<Subset>(fam.begin(), fam.end());
}

// The image family as a lattice under inclusion. Join and meet come from the
// verified bound tables, not from assumed formulas; if some pair of images
// had no unique bound inside the family this would throw, so callers can
// trust the tables unconditionally.
inline FiniteLattice image_lattice(const FiniteRelationSpace& s, Op op,
                                   int bound = kDefaultBound) {
  return FiniteLattice::from_family(image_family(s, op, bound));
}

// ---------------------------------------------------------------------------
// Distributivity criteria. Each reports the search data behind its verdict:
// for every related pair (a, b) the first witness pair (n, h) found, or the
// pair of elements where the search ran out.

struct WitnessChoice {
  int a, b, n, h;
};

struct CdConditionReport {
  bool holds = true;
  std::vector<WitnessChoice> choices;       // one per examined pair until failure
  std::optional<std::pair<int, int>> failing;
};

// Relation form: for every related pair (a, b) there are n, h with a related
// to n, h related to b, and succ(h) below succ(x) for every x related to n.
// The (n, h) search is lexicographic, so reports are reproducible.
inline CdConditionReport relation_cd_condition(const FiniteRelationSpace& s) {
  CdConditionReport rep;
  int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!s.related(a, b)) continue;
      bool found = false;
      for (int cn = 0; cn < n && !found; ++cn) {
        if (!s.related(a, cn)) continue;
        for (int h = 0; h < n && !found; ++h) {
          if (!s.related(h, b)) continue;
          bool ok = true;
          for (int x = 0; x < n && ok; ++x)
            if (s.related(x, cn) && !subset_of(s.succ(h), s.succ(x))) ok = false;
          if (ok) {
            found = true;
            rep.choices.push_back({a, b, cn, h});
          }
        }
      }
      if (!found) {
        rep.holds = false;
        rep.failing = {a, b};
        return rep;
      }
    }
  return rep;
}

struct GranuleCdReport {
  bool holds = true;
  std::optional<int> failing;  // element whose granule is covered
};

// Granule form: every completely join-irreducible granule must escape the
// union of the granules that do not contain it. Inverse granules are checked
// against the tri_up lattice, plain granules against the btri_up lattice.
inline GranuleCdReport granule_cd_condition(const FiniteRelationSpace& s,
                                            NbdKind kind,
                                            int bound = kDefaultBound) {
  if (kind == NbdKind::symmetric)
    throw Error(Error::Kind::precondition,
                "granule condition needs the plain or inverse neighborhoods");
  bool inverse = kind == NbdKind::inverse;
  FiniteLattice lat =
      image_lattice(s, inverse ? Op::tri_up : Op::btri_up, bound);
  std::vector<Subset> irr = cji(lat);
  std::set<Subset> irrset(irr.begin(), irr.end());
  GranuleCdReport rep;
  int n = s.size();
  for (int e = 0; e < n; ++e) {
    Subset g = neighborhood(s, e, kind);
    if (!irrset.count(g)) continue;
    Subset covered = 0;
    for (int x = 0; x < n; ++x) {
      Subset gx = neighborhood(s, x, kind);
      if (!subset_of(g, gx)) covered |= gx;
    }
    if (subset_of(g, covered)) {
      rep.holds = false;
      rep.failing = e;
      return rep;
    }
  }
  return rep;
}

// Operation-table form of the relation condition: related pairs appear as
// absorptions ab = b, and the inner bound comparison becomes a quantifier
// over absorption witnesses. The table must realize the relation, otherwise
// the absorption pattern would not match the relation.
inline CdConditionReport groupoid_cd_condition(const FiniteRelationSpace& s,
                                               const FiniteGroupoid& g) {
  auto bad = realization_check(s, g);
  if (!bad.empty())
    throw Error(Error::Kind::precondition,
                "operation table does not realize the relation at (" +
                    s.label(bad.front().first) + "," +
                    s.label(bad.front().second) + ")");
  CdConditionReport rep;
  int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (g.op(a, b) != b) continue;
      bool found = false;
      for (int cn = 0; cn < n && !found; ++cn) {
        if (g.op(a, cn) != cn) continue;
        for (int h = 0; h < n && !found; ++h) {
          if (g.op(h, b) != b) continue;
          bool ok = true;
          for (int k = 0; k < n && ok; ++k) {
            if (g.op(k, cn) != cn) continue;
            for (int t = 0; t < n && ok; ++t)
              if (g.op(h, t) == t && g.op(k, t) != t) ok = false;
          }
          if (ok) {
            found = true;
            rep.choices.push_back({a, b, cn, h});
          }
        }
      }
      if (!found) {
        rep.holds = false;
        rep.failing = {a, b};
        return rep;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Formal contexts. The context of a space pairs the universe with itself and
// marks (g, m) exactly when g is NOT related to m, so concepts of the context
// see the complements of the image families.

struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::vector<Subset> rows;  // per object, its attribute set
};

inline FormalContext context_of(const FiniteRelationSpace& s) {
  FormalContext c;
  c.objects = s.labels();
  c.attributes = s.labels();
  Subset top = s.universe();
  for (int g = 0; g < s.size(); ++g) c.rows.push_back(~s.succ(g) & top);
  return c;
}

enum class Side { objects, attributes };

// Derivation toward the other side: common attributes of an object set, or
// common objects of an attribute set.
inline Subset derive(const FormalContext& c, Subset x, Side from) {
  if (from == Side::objects) {
    Subset acc = full_set((int)c.attributes.size());
    for_each_member(x, [&](int g) { acc &= c.rows[g]; });
    return acc;
  }
  Subset acc = full_set((int)c.objects.size());
  for_each_member(x, [&](int m) {
    Subset col = 0;
    for (int g = 0; g < (int)c.rows.size(); ++g)
      if (has(c.rows[g], m)) col |= bit(g);
    acc &= col;
  });
  return acc;
}

struct FormalConcept {
  Subset extent = 0;
  Subset intent = 0;
};

// All concepts, ascending by extent. Enumeration closes every attribute
// subset, so the attribute side carries the bound.
inline std::vector<FormalConcept> concepts(const FormalContext& c) {
  require_bound((int)c.attributes.size(), kConceptBound, "concept enumeration");
  std::set<Subset> extents;
  Subset top = full_set((int)c.attributes.size());
  for (Subset y = 0;; ++y) {
    extents.insert(derive(c, y, Side::attributes));
    if (y == top) break;
  }
  std::vector<FormalConcept> out;
  for (Subset e : extents) out.push_back({e, derive(c, e, Side::objects)});
  return out;
}

inline FiniteLattice concept_lattice(const FormalContext& c) {
  std::vector<Subset> extents;
  for (const FormalConcept& fc : concepts(c)) extents.push_back(fc.extent);
  return FiniteLattice::from_family(extents);
}

// Context form of the distributivity condition: for every incident pair the
// search runs over attributes n and objects h, with the inner comparison
// phrased through double derivation. On the context of a space this examines
// exactly the unrelated pairs of the complement, i.e. the related pairs of
// the relation.
inline CdConditionReport context_cd_condition(const FormalContext& c) {
  CdConditionReport rep;
  int no = (int)c.rows.size();
  int na = (int)c.attributes.size();
  for (int g = 0; g < no; ++g)
    for (int m = 0; m < na; ++m) {
      if (has(c.rows[g], m)) continue;
      bool found = false;
      for (int cn = 0; cn < na && !found; ++cn) {
        if (has(c.rows[g], cn)) continue;
        for (int h = 0; h < no && !found; ++h) {
          if (has(c.rows[h], m)) continue;
          bool ok = true;
          Subset outside = full_set(no) & ~derive(c, bit(cn), Side::attributes);
          for_each_member(outside, [&](int k) {
            Subset close = derive(c, derive(c, bit(k), Side::objects),
                                  Side::attributes);
            if (!has(close, h)) ok = false;
          });
          if (ok) {
            found = true;
            rep.choices.push_back({g, m, cn, h});
          }
        }
      }
      if (!found) {
        rep.holds = false;
        rep.failing = {g, m};
        return rep;
      }
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Audit registry.

namespace latfca_claims_detail {

using LatCheck = std::function<bool(const FiniteRelationSpace&,
                                    std::vector<Subset>&, std::string&)>;

// One check per space, skipping spaces over the lattice bound and, when the
// check needs the canonical operation table, spaces that are not up-directed.
inline ClaimReport sweep_lat(const ClaimSpec& c, const SpaceFamily& spaces,
                             const AuditOptions& opts, bool need_updg,
                             const LatCheck& check) {
  ClaimReport r = detail::report_skeleton(c, opts);
  for (const auto& s : spaces) {
    if (s.size() > std::min(opts.bound, kConceptBound)) {
      r.note += "skipped space |S|=" + std::to_string(s.size()) +
                " over the lattice bound; ";
      continue;
    }
    if (need_updg && !classify(s).up_directed) {
      r.note += "skipped space without the derived groupoid; ";
      continue;
    }
    std::vector<Subset> sets;
    std::string detail;
    ++r.sweep_size;
    if (!check(s, sets, detail)) {
      r.verdict = Verdict::fails;
      r.witness = Witness{s, std::move(sets), std::move(detail)};
      return r;
    }
  }
  return r;
}

inline FiniteRelationSpace mask_space(int n, unsigned mask) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mask & (1u << (a * n + b))) pairs.push_back({labels[a], labels[b]});
  return FiniteRelationSpace::from_labels(labels, pairs);
}

// Random reflexive relation; with antisym set, each unordered pair gets at
// most one direction.
inline FiniteRelationSpace random_reflexive(std::mt19937_64& rng, int n,
                                            bool antisym) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({labels[i], labels[i]});
  if (antisym) {
    std::uniform_int_distribution<int> pick(0, 2);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) switch (pick(rng)) {
          case 1: pairs.push_back({labels[a], labels[b]}); break;
          case 2: pairs.push_back({labels[b], labels[a]}); break;
          default: break;
        }
  } else {
    std::uniform_int_distribution<int> coin(0, 1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (a != b && coin(rng)) pairs.push_back({labels[a], labels[b]});
  }
  return FiniteRelationSpace::from_labels(labels, pairs);
}

inline bool distributive(const FiniteRelationSpace& s, Op op) {
  return is_completely_distributive(image_lattice(s, op)).distributive;
}

inline std::string pair_text(const FiniteRelationSpace& s,
                             std::pair<int, int> p) {
  return "(" + s.label(p.first) + "," + s.label(p.second) + ")";
}

}  // namespace latfca_claims_detail

inline std::vector<ClaimSpec> latfca_claims() {
  using namespace latfca_claims_detail;
  std::vector<ClaimSpec> cs;

  auto add = [&](std::string id, std::string hyp, Expect exp,
                 std::string summary, bool need_updg, LatCheck f) {
    ClaimSpec c{std::move(id), "latfca", std::move(hyp), exp,
                std::move(summary), {}};
    c.run = [f, need_updg, c](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_lat(c, sp, o, need_updg, f);
    };
    cs.push_back(c);
  };

  auto ap = [](const FiniteRelationSpace& s, Subset a, Op op) {
    return approximate(s, a, op);
  };

  // ---- family shape --------------------------------------------------------
  add("lf-family", "up-directed", Expect::hold,
      "local image families are the granule unions plus the empty set", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        for (bool inverse : {true, false}) {
          Op op = inverse ? Op::tri_up : Op::btri_up;
          std::set<Subset> unions = {0};
          for (int e = 0; e < s.size(); ++e) {
            std::set<Subset> next = unions;
            Subset g = inverse ? s.succ(e) : s.pred(e);
            for (Subset u : unions) next.insert(u | g);
            unions = std::move(next);
          }
          auto fam = image_family(s, op);
          if (std::set<Subset>(fam.begin(), fam.end()) != unions) {
            d = std::string(op_name(op)) + " family differs from granule unions";
            return false;
          }
        }
        return true;
      });

  add("lf-join-union", "up-directed", Expect::hold,
      "join in the local image lattices is plain union", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>& w, std::string& d) {
        for (Op op : {Op::tri_up, Op::btri_up}) {
          FiniteLattice lat = image_lattice(s, op);
          for (int i = 0; i < lat.size(); ++i)
            for (int j = i; j < lat.size(); ++j)
              if (lat.element(lat.join(i, j)) !=
                  (lat.element(i) | lat.element(j))) {
                w = {lat.element(i), lat.element(j)};
                d = std::string(op_name(op)) + " join is not the union";
                return false;
              }
        }
        return true;
      });

  add("lf-meet-form", "up-directed", Expect::hold,
      "meet in the local image lattices is the one-step lower image of the "
      "intersection",
      false,
      [ap](const FiniteRelationSpace& s, std::vector<Subset>& w,
           std::string& d) {
        for (bool inverse : {true, false}) {
          Op lift = inverse ? Op::tri_up : Op::btri_up;
          Op low = inverse ? Op::l_i : Op::l;
          FiniteLattice lat = image_lattice(s, lift);
          for (int i = 0; i < lat.size(); ++i)
            for (int j = i; j < lat.size(); ++j) {
              Subset inter = lat.element(i) & lat.element(j);
              if (lat.element(lat.meet(i, j)) != ap(s, inter, low)) {
                w = {lat.element(i), lat.element(j)};
                d = std::string(op_name(lift)) + " meet differs from the " +
                    op_name(low) + " image of the intersection";
                return false;
              }
            }
        }
        return true;
      });

  // The two-step meet formulas interleave the two granule directions. They
  // miss the bound even on reflexive spaces, which is why the one-step form
  // above is the one the lattices actually use.
  auto twostep = [ap](Op first_t, Op first_b) {
    return [ap, first_t, first_b](const FiniteRelationSpace& s,
                                  std::vector<Subset>& w, std::string& d) {
      for (bool inverse : {true, false}) {
        Op lift = inverse ? Op::tri_up : Op::btri_up;
        Op first = inverse ? first_t : first_b;
        FiniteLattice lat = image_lattice(s, lift);
        for (int i = 0; i < lat.size(); ++i)
          for (int j = i; j < lat.size(); ++j) {
            Subset inter = lat.element(i) & lat.element(j);
            Subset got = ap(s, ap(s, inter, first), lift);
            if (got != lat.element(lat.meet(i, j))) {
              w = {lat.element(i), lat.element(j)};
              d = "candidate meet " + set_to_string(s, got) +
                  " differs from the bound " +
                  set_to_string(s, lat.element(lat.meet(i, j)));
              return false;
            }
          }
      }
      return true;
    };
  };
  add("lf-meet-two-step", "up-directed", Expect::fail,
      "two-step meet via the opposite interior matches the bound", false,
      twostep(Op::btri_down, Op::tri_down));
  add("lf-meet-two-step-refl", "reflexive up-directed", Expect::fail,
      "two-step meet via the opposite interior matches the bound even with "
      "reflexivity",
      false, twostep(Op::btri_down, Op::tri_down));
  add("lf-meet-swapped", "reflexive up-directed", Expect::hold,
      "two-step meet via the matching interior hits the bound on reflexive "
      "spaces",
      false, twostep(Op::tri_down, Op::btri_down));
  add("lf-meet-swapped-wide", "up-directed", Expect::fail,
      "two-step meet via the matching interior hits the bound in general",
      false, twostep(Op::tri_down, Op::btri_down));

  // ---- lattice structure ---------------------------------------------------
  add("lf-lattice-laws", "up-directed", Expect::hold,
      "verified bound tables of all four image lattices satisfy the lattice "
      "laws",
      false,
      [](const FiniteRelationSpace& s, std::vector<Subset>& w, std::string& d) {
        for (Op op :
             {Op::tri_up, Op::tri_down, Op::btri_up, Op::btri_down}) {
          FiniteLattice lat = image_lattice(s, op);
          int n = lat.size();
          for (int i = 0; i < n; ++i) {
            if (lat.join(i, i) != i || lat.meet(i, i) != i) {
              d = std::string(op_name(op)) + " lattice not idempotent";
              w = {lat.element(i)};
              return false;
            }
            if (lat.join(i, lat.top_index()) != lat.top_index() ||
                lat.meet(i, lat.bottom_index()) != lat.bottom_index()) {
              d = std::string(op_name(op)) + " lattice misplaces its bounds";
              w = {lat.element(i)};
              return false;
            }
          }
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              if (lat.join(i, lat.meet(i, j)) != i ||
                  lat.meet(i, lat.join(i, j)) != i) {
                d = std::string(op_name(op)) + " lattice breaks absorption";
                w = {lat.element(i), lat.element(j)};
                return false;
              }
              for (int k = 0; k < n; ++k)
                if (lat.join(i, lat.join(j, k)) !=
                        lat.join(lat.join(i, j), k) ||
                    lat.meet(i, lat.meet(j, k)) !=
                        lat.meet(lat.meet(i, j), k)) {
                  d = std::string(op_name(op)) + " lattice not associative";
                  w = {lat.element(i), lat.element(j), lat.element(k)};
                  return false;
                }
            }
        }
        return true;
      });

  add("lf-spatial", "up-directed", Expect::hold,
      "local image lattices are spatial", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        for (Op op : {Op::tri_up, Op::btri_up})
          if (!is_spatial(image_lattice(s, op))) {
            d = std::string(op_name(op)) + " lattice not spatial";
            return false;
          }
        return true;
      });

  add("lf-cji-granule", "up-directed", Expect::hold,
      "completely join-irreducible image elements are granules", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>& w, std::string& d) {
        for (bool inverse : {true, false}) {
          Op op = inverse ? Op::tri_up : Op::btri_up;
          std::set<Subset> granules;
          for (int e = 0; e < s.size(); ++e)
            granules.insert(inverse ? s.succ(e) : s.pred(e));
          for (Subset v : cji(image_lattice(s, op)))
            if (!granules.count(v)) {
              w = {v};
              d = "irreducible " + set_to_string(s, v) + " is not a " +
                  op_name(op) + " granule";
              return false;
            }
        }
        return true;
      });

  add("lf-dist-forms", "up-directed", Expect::hold,
      "meet-over-join and join-over-meet sweeps agree on every image lattice",
      false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        for (Op op :
             {Op::tri_up, Op::tri_down, Op::btri_up, Op::btri_down}) {
          FiniteLattice lat = image_lattice(s, op);
          if (is_completely_distributive(lat).distributive !=
              distributive_dual(lat).distributive) {
            d = std::string(op_name(op)) + " lattice splits the two forms";
            return false;
          }
        }
        return true;
      });

  // ---- one distributivity question, many languages -------------------------
  add("lf-cd-pair", "up-directed", Expect::hold,
      "tri_up and btri_up lattices agree on distributivity", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        if (distributive(s, Op::tri_up) != distributive(s, Op::btri_up)) {
          d = "the two local lattices disagree";
          return false;
        }
        return true;
      });

  add("lf-cd-relation", "up-directed", Expect::hold,
      "relation condition decides distributivity of the tri_up lattice", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        bool cond = relation_cd_condition(s).holds;
        bool cd = distributive(s, Op::tri_up);
        if (cond != cd) {
          d = cond ? "condition holds on a non-distributive lattice"
                   : "condition fails on a distributive lattice";
          return false;
        }
        return true;
      });

  add("lf-cd-granule-i", "up-directed", Expect::hold,
      "inverse granule condition decides distributivity of the tri_up lattice",
      false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        if (granule_cd_condition(s, NbdKind::inverse).holds !=
            distributive(s, Op::tri_up)) {
          d = "granule condition disagrees with the sweep";
          return false;
        }
        return true;
      });

  add("lf-cd-granule-p", "up-directed", Expect::hold,
      "plain granule condition decides distributivity of the btri_up lattice",
      false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        if (granule_cd_condition(s, NbdKind::plain).holds !=
            distributive(s, Op::btri_up)) {
          d = "granule condition disagrees with the sweep";
          return false;
        }
        return true;
      });

  add("lf-cd-context", "up-directed", Expect::hold,
      "context condition decides distributivity of the concept lattice", false,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        FormalContext c = context_of(s);
        bool cond = context_cd_condition(c).holds;
        bool cd = is_completely_distributive(concept_lattice(c)).distributive;
        if (cond != cd) {
          d = cond ? "condition holds on a non-distributive concept lattice"
                   : "condition fails on a distributive concept lattice";
          return false;
        }
        return true;
      });

  add("lf-cd-groupoid", "up-directed", Expect::hold,
      "operation-table condition agrees with the relation condition", true,
      [](const FiniteRelationSpace& s, std::vector<Subset>&, std::string& d) {
        bool table = groupoid_cd_condition(s, build_updg(s)).holds;
        bool rel = relation_cd_condition(s).holds;
        if (table != rel) {
          d = "table and relation conditions split";
          return false;
        }
        return true;
      });

  add("lf-concept-iso", "up-directed", Expect::hold,
      "concept extents complement the btri_up family, intents the tri_up "
      "family, order-compatibly",
      false,
      [](const FiniteRelationSpace& s, std::vector<Subset>& w, std::string& d) {
        FormalContext c = context_of(s);
        auto cons = concepts(c);
        Subset top = s.universe();
        std::set<Subset> extents, icomps;
        for (const FormalConcept& fc : cons) {
          extents.insert(fc.extent);
          icomps.insert(~fc.intent & top);
        }
        auto famT = image_family(s, Op::tri_up);
        auto famB = image_family(s, Op::btri_up);
        std::set<Subset> bcomps;
        for (Subset v : famB) bcomps.insert(~v & top);
        if (extents != bcomps) {
          d = "extents differ from complemented btri_up images";
          return false;
        }
        if (icomps != std::set<Subset>(famT.begin(), famT.end())) {
          d = "complemented intents differ from the tri_up family";
          return false;
        }
        for (const FormalConcept& x : cons)
          for (const FormalConcept& y : cons) {
            bool ext_le = subset_of(x.extent, y.extent);
            bool img_le = subset_of(~x.intent & top, ~y.intent & top);
            if (ext_le != img_le) {
              w = {x.extent, y.extent};
              d = "extent order disagrees with the image order";
              return false;
            }
          }
        return true;
      });

  // ---- complement pairings -------------------------------------------------
  add("lf-comp-pointwise", "up-directed", Expect::hold,
      "complement swaps the expansions with the opposite fixpoint interiors",
      false,
      [ap](const FiniteRelationSpace& s, std::vector<Subset>& w,
           std::string& d) {
        Subset top = s.universe();
        for (Subset a = 0;; ++a) {
          Subset co = ~a & top;
          if ((~ap(s, a, Op::tri_up) & top) != ap(s, co, Op::l_plus)) {
            w = {a};
            d = "tri_up complement misses the l_plus image of the complement";
            return false;
          }
          if ((~ap(s, a, Op::btri_up) & top) != ap(s, co, Op::li_plus)) {
            w = {a};
            d = "btri_up complement misses the li_plus image of the complement";
            return false;
          }
          if (a == top) break;
        }
        return true;
      });

  auto comp_pair = [ap](Op up, Op down, const FiniteRelationSpace& s,
                        std::vector<Subset>& w, std::string& d) {
    Subset top = s.universe();
    for (Subset a = 0;; ++a) {
      Subset lhs = ~ap(s, a, up) & top;
      Subset rhs = ap(s, ~a & top, down);
      if (lhs != rhs) {
        w = {a};
        d = "complement of the " + std::string(op_name(up)) + " image of " +
            set_to_string(s, a) + " is " + set_to_string(s, lhs) +
            ", not the " + op_name(down) + " image " + set_to_string(s, rhs);
        return false;
      }
      if (a == top) break;
    }
    return true;
  };
  add("lf-comp-crossed", "reflexive up-directed", Expect::hold,
      "complement pairs each expansion with the interior of the opposite "
      "granule direction",
      false,
      [comp_pair](const FiniteRelationSpace& s, std::vector<Subset>& w,
                  std::string& d) {
        return comp_pair(Op::tri_up, Op::btri_down, s, w, d) &&
               comp_pair(Op::btri_up, Op::tri_down, s, w, d);
      });
  add("lf-comp-plain", "reflexive up-directed", Expect::fail,
      "complement pairs each expansion with the interior of the same granule "
      "direction",
      false,
      [comp_pair](const FiniteRelationSpace& s, std::vector<Subset>& w,
                  std::string& d) {
        return comp_pair(Op::tri_up, Op::tri_down, s, w, d) &&
               comp_pair(Op::btri_up, Op::btri_down, s, w, d);
      });

  // ---- reflexive sweeps ----------------------------------------------------
  // These three ignore the supplied spaces and enumerate or sample their own,
  // since the statements quantify over whole classes of relations.
  auto po_claim = [&cs](std::string id, std::string hyp, Expect exp,
                        std::string summary,
                        std::function<bool(const FiniteRelationSpace&,
                                           std::string&)> f,
                        bool antisym_only) {
    ClaimSpec c{std::move(id), "latfca", std::move(hyp), exp,
                std::move(summary), {}};
    c.run = [f, antisym_only, c](const SpaceFamily&, const AuditOptions& o) {
      ClaimReport r = detail::report_skeleton(c, o);
      auto run_one = [&](const FiniteRelationSpace& s) {
        std::string detail;
        ++r.sweep_size;
        if (!f(s, detail)) {
          r.verdict = Verdict::fails;
          r.witness = Witness{s, {}, std::move(detail)};
          return false;
        }
        return true;
      };
      if (o.mode == AuditMode::exhaustive) {
        r.note = "swept all reflexive" +
                 std::string(antisym_only ? " antisymmetric" : "") +
                 " relations on 3 elements";
        for (unsigned mask = 0; mask < 512; ++mask) {
          FiniteRelationSpace s = latfca_claims_detail::mask_space(3, mask);
          RelationProfile p = classify(s);
          if (!p.reflexive || (antisym_only && !p.antisymmetric)) continue;
          if (!run_one(s)) return r;
        }
      } else {
        r.note = "sampled reflexive" +
                 std::string(antisym_only ? " antisymmetric" : "") +
                 " relations on 4 and 5 elements";
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<int> size(4, 5);
        for (int i = 0; i < o.samples; ++i) {
          FiniteRelationSpace s = latfca_claims_detail::random_reflexive(
              rng, size(rng), antisym_only);
          if (!run_one(s)) return r;
        }
      }
      return r;
    };
    cs.push_back(c);
  };

  po_claim("lf-po-pair", "reflexive", Expect::hold,
           "reflexive relations never split the two local lattices",
           [](const FiniteRelationSpace& s, std::string& d) {
             if (distributive(s, Op::tri_up) !=
                 distributive(s, Op::btri_up)) {
               d = "the two local lattices disagree";
               return false;
             }
             return true;
           },
           false);
  po_claim("lf-po-transitive", "reflexive antisymmetric", Expect::hold,
           "on reflexive antisymmetric relations distributivity means "
           "transitivity",
           [](const FiniteRelationSpace& s, std::string& d) {
             bool cd = distributive(s, Op::tri_up);
             bool tr = classify(s).transitive;
             if (cd != tr) {
               d = cd ? "distributive image lattice but relation not transitive"
                      : "transitive relation with non-distributive lattice";
               return false;
             }
             return true;
           },
           true);
  po_claim("lf-po-hyp", "reflexive", Expect::fail,
           "distributivity still means transitivity once antisymmetry is "
           "dropped",
           [](const FiniteRelationSpace& s, std::string& d) {
             bool cd = distributive(s, Op::tri_up);
             bool tr = classify(s).transitive;
             if (cd != tr) {
               d = cd ? "distributive image lattice but relation not transitive"
                      : "transitive relation with non-distributive lattice";
               return false;
             }
             return true;
           },
           false);

  return cs;
}

}  // namespace drs
