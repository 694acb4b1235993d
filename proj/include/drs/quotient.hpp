#pragma once

// Rough equalities on the powerset, the quotient they induce, and the lifted
// operations on classes. Two subsets are roughly equal when their chosen
// approximations coincide, so a class is fully described by its representative
// approximations. The class-level operations apply a subset operation across
// all member pairs, union the results, and return the class of the outcome.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "drs/approx.hpp"
#include "drs/claim.hpp"
#include "drs/core.hpp"
#include "drs/powgrp.hpp"
#include "drs/relation.hpp"

namespace drs {

inline constexpr int kQuotientBound = 6;

enum class EqKind { standard, l, u };

inline const char* eq_kind_name(EqKind k) {
  switch (k) {
    case EqKind::standard: return "standard";
    case EqKind::l: return "l";
    case EqKind::u: return "u";
  }
  return "?";
}

inline EqKind parse_eq_kind(const std::string& name) {
  for (EqKind k : {EqKind::standard, EqKind::l, EqKind::u})
    if (name == eq_kind_name(k)) return k;
  throw Error(Error::Kind::malformed_document,
              "unknown equality kind '" + name + "'");
}

inline bool rough_equal(const FiniteRelationSpace& s, Subset A, Subset B,
                        EqKind kind = EqKind::standard) {
  detail::require_inside(s, A, "first argument");
  detail::require_inside(s, B, "second argument");
  bool le = approximate(s, A, Op::l) == approximate(s, B, Op::l);
  bool ue = approximate(s, A, Op::u) == approximate(s, B, Op::u);
  switch (kind) {
    case EqKind::standard: return le && ue;
    case EqKind::l: return le;
    case EqKind::u: return ue;
  }
  return false;
}

enum class LeqKind { l, u, both };

inline bool rough_leq(const FiniteRelationSpace& s, Subset A, Subset B,
                      LeqKind kind = LeqKind::both) {
  detail::require_inside(s, A, "first argument");
  detail::require_inside(s, B, "second argument");
  bool ll = subset_of(approximate(s, A, Op::l), approximate(s, B, Op::l));
  bool uu = subset_of(approximate(s, A, Op::u), approximate(s, B, Op::u));
  switch (kind) {
    case LeqKind::l: return ll;
    case LeqKind::u: return uu;
    case LeqKind::both: return ll && uu;
  }
  return false;
}

// One equivalence class. Only the representatives selected by the kind are
// meaningful; the other one stays zero.
struct RoughClass {
  EqKind kind = EqKind::standard;
  std::vector<Subset> members;  // ascending
  Subset a_l = 0, a_u = 0;
};

inline RoughClass class_of(const FiniteRelationSpace& s, Subset x,
                           EqKind kind = EqKind::standard) {
  detail::require_inside(s, x, "subset");
  RoughClass out;
  out.kind = kind;
  Subset xl = approximate(s, x, Op::l), xu = approximate(s, x, Op::u);
  if (kind != EqKind::u) out.a_l = xl;
  if (kind != EqKind::l) out.a_u = xu;
  Subset top = full_set(s.size());
  for (Subset y = 0; y <= top; ++y)
    if (rough_equal(s, x, y, kind)) out.members.push_back(y);
  return out;
}

inline std::vector<RoughClass> quotient(const FiniteRelationSpace& s,
                                        EqKind kind = EqKind::standard,
                                        int bound = kQuotientBound) {
  if (s.size() > bound)
    throw Error(Error::Kind::bound_exceeded,
                "universe of size " + std::to_string(s.size()) +
                    " exceeds the quotient bound " + std::to_string(bound));
  std::map<std::pair<Subset, Subset>, RoughClass> by;
  Subset top = full_set(s.size());
  for (Subset x = 0; x <= top; ++x) {
    Subset xl = approximate(s, x, Op::l), xu = approximate(s, x, Op::u);
    std::pair<Subset, Subset> key = {kind != EqKind::u ? xl : 0,
                                     kind != EqKind::l ? xu : 0};
    auto& cls = by[key];
    if (cls.members.empty()) {
      cls.kind = kind;
      cls.a_l = key.first;
      cls.a_u = key.second;
    }
    cls.members.push_back(x);
  }
  std::vector<RoughClass> out;
  for (auto& [k, v] : by) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const RoughClass& a, const RoughClass& b) {
    return a.members.front() < b.members.front();
  });
  return out;
}

struct Decomposition {
  Subset a_l = 0;
  Subset K = 0;
};

// Splits a member into its lower approximation and an exterior leftover. The
// leftover must have an empty lower approximation and must complete the upper
// approximation together with the lower part's own upper image; both checks
// are enforced, never skipped.
inline Decomposition decompose(const FiniteRelationSpace& s,
                               const RoughClass& cls, Subset x) {
  if (cls.kind != EqKind::standard)
    throw Error(Error::Kind::precondition,
                "decomposition works on classes of the standard kind");
  if (!std::binary_search(cls.members.begin(), cls.members.end(), x))
    throw Error(Error::Kind::precondition,
                "the subset is not a member of the class");
  Decomposition d;
  d.a_l = cls.a_l;
  d.K = x & ~cls.a_l;
  if (approximate(s, d.K, Op::l) != 0)
    throw Error(Error::Kind::precondition,
                "representation check failed: the leftover has a nonempty "
                "lower approximation");
  if ((approximate(s, d.a_l, Op::u) | approximate(s, d.K, Op::u)) != cls.a_u)
    throw Error(Error::Kind::precondition,
                "representation check failed: the leftover does not complete "
                "the upper approximation");
  return d;
}

// class-level operations
enum class RpaOp {
  prod, n, i1, i2, o1, o2, o,   // need the groupoid
  cup, cap, star, neg,          // set-level, swept over member pairs
  low, upp,                     // union of member approximations
  glow, gupp,                   // approximation of the member union
  bottom, top
};

inline const char* rpa_op_name(RpaOp op) {
  switch (op) {
    case RpaOp::prod: return "prod";
    case RpaOp::n: return "n";
    case RpaOp::i1: return "i1";
    case RpaOp::i2: return "i2";
    case RpaOp::o1: return "o1";
    case RpaOp::o2: return "o2";
    case RpaOp::o: return "o";
    case RpaOp::cup: return "cup";
    case RpaOp::cap: return "cap";
    case RpaOp::star: return "star";
    case RpaOp::neg: return "not";
    case RpaOp::low: return "L";
    case RpaOp::upp: return "U";
    case RpaOp::glow: return "gL";
    case RpaOp::gupp: return "gU";
    case RpaOp::bottom: return "bot";
    case RpaOp::top: return "top";
  }
  return "?";
}

inline RpaOp parse_rpa_op(const std::string& name) {
  for (RpaOp op : {RpaOp::prod, RpaOp::n, RpaOp::i1, RpaOp::i2, RpaOp::o1,
                   RpaOp::o2, RpaOp::o, RpaOp::cup, RpaOp::cap, RpaOp::star,
                   RpaOp::neg, RpaOp::low, RpaOp::upp, RpaOp::glow, RpaOp::gupp,
                   RpaOp::bottom, RpaOp::top})
    if (name == rpa_op_name(op)) return op;
  throw Error(Error::Kind::malformed_document,
              "unknown class operation '" + name + "'");
}

inline int rpa_op_arity(RpaOp op) {
  switch (op) {
    case RpaOp::prod: case RpaOp::n: case RpaOp::i1: case RpaOp::i2:
    case RpaOp::o1: case RpaOp::o2: case RpaOp::o: case RpaOp::cup:
    case RpaOp::cap: case RpaOp::star:
      return 2;
    case RpaOp::neg: case RpaOp::low: case RpaOp::upp: case RpaOp::glow:
    case RpaOp::gupp:
      return 1;
    case RpaOp::bottom: case RpaOp::top:
      return 0;
  }
  return -1;
}

namespace detail {

inline void require_class(const FiniteRelationSpace& s, const RoughClass& c) {
  if (c.kind != EqKind::standard)
    throw Error(Error::Kind::precondition,
                "class operations work on classes of the standard kind");
  if (c.members.empty() ||
      approximate(s, c.members.front(), Op::l) != c.a_l ||
      approximate(s, c.members.front(), Op::u) != c.a_u)
    throw Error(Error::Kind::universe_mismatch,
                "class does not describe this space");
}

}  // namespace detail

namespace detail {

inline Subset rpa_value(const FiniteRelationSpace& s,
                        const LiftedProductContext* ctx, RpaOp op,
                        const std::vector<RoughClass>& args) {
  Subset S = s.universe();
  Subset v = 0;
  auto need_ctx = [&]() {
    if (!ctx)
      throw Error(Error::Kind::precondition,
                  std::string("operation ") + rpa_op_name(op) +
                      " needs the derived groupoid");
  };
  auto pairwise = [&](auto&& f) {
    for (Subset F : args[0].members)
      for (Subset H : args[1].members) v |= f(F, H);
  };
  switch (op) {
    case RpaOp::prod:
      need_ctx();
      pairwise([&](Subset F, Subset H) { return lift_product(*ctx, F, H); });
      break;
    case RpaOp::n: case RpaOp::i1: case RpaOp::i2:
    case RpaOp::o1: case RpaOp::o2: case RpaOp::o: {
      need_ctx();
      SplitOp which = parse_split_op(rpa_op_name(op));
      pairwise([&](Subset F, Subset H) { return split_op(*ctx, which, F, H); });
      break;
    }
    case RpaOp::cup:
      pairwise([](Subset F, Subset H) { return F | H; });
      break;
    case RpaOp::cap:
      pairwise([](Subset F, Subset H) { return F & H; });
      break;
    case RpaOp::star:
      v = S;
      for (Subset F : args[0].members)
        for (Subset H : args[1].members) v &= (F & H);
      break;
    case RpaOp::neg:
      for (Subset F : args[0].members) v |= (S & ~F);
      break;
    case RpaOp::low:
      for (Subset F : args[0].members) v |= approximate(s, F, Op::l);
      break;
    case RpaOp::upp:
      for (Subset F : args[0].members) v |= approximate(s, F, Op::u);
      break;
    case RpaOp::glow: case RpaOp::gupp: {
      Subset w = 0;
      for (Subset F : args[0].members) w |= F;
      v = approximate(s, w, op == RpaOp::glow ? Op::l : Op::u);
      break;
    }
    case RpaOp::bottom:
      v = 0;
      break;
    case RpaOp::top:
      v = S;
      break;
  }
  return v;
}

inline RoughClass rpa_apply_on(const FiniteRelationSpace& s,
                               const LiftedProductContext* ctx, RpaOp op,
                               const std::vector<RoughClass>& args) {
  if (s.size() > kQuotientBound)
    throw Error(Error::Kind::bound_exceeded,
                "universe of size " + std::to_string(s.size()) +
                    " exceeds the quotient bound " +
                    std::to_string(kQuotientBound));
  if ((int)args.size() != rpa_op_arity(op))
    throw Error(Error::Kind::precondition,
                std::string("operation ") + rpa_op_name(op) + " takes " +
                    std::to_string(rpa_op_arity(op)) + " argument(s)");
  for (const auto& a : args) require_class(s, a);
  return class_of(s, rpa_value(s, ctx, op, args), EqKind::standard);
}

}  // namespace detail

inline RoughClass rpa_apply(const LiftedProductContext& ctx, RpaOp op,
                            const std::vector<RoughClass>& args) {
  return detail::rpa_apply_on(ctx.space, &ctx, op, args);
}

// groupoid-free entry point: only the operations that never touch the product
inline RoughClass rpa_apply(const FiniteRelationSpace& s, RpaOp op,
                            const std::vector<RoughClass>& args) {
  return detail::rpa_apply_on(s, nullptr, op, args);
}

// Representative order between classes: compare the approximations the kind
// tracks. Well defined because members of one class share them.
inline bool class_leq(const RoughClass& a, const RoughClass& b) {
  if (a.kind != b.kind)
    throw Error(Error::Kind::precondition,
                "cannot compare classes of different kinds");
  switch (a.kind) {
    case EqKind::standard:
      return subset_of(a.a_l, b.a_l) && subset_of(a.a_u, b.a_u);
    case EqKind::l: return subset_of(a.a_l, b.a_l);
    case EqKind::u: return subset_of(a.a_u, b.a_u);
  }
  return false;
}

namespace quotient_claims_detail {

// A check over tuples of standard classes; receives the canonical lifted
// context of the space.
using ClassCheck = std::function<bool(const LiftedProductContext&,
                                      const std::vector<const RoughClass*>&,
                                      std::string&)>;

inline ClaimReport sweep_classes(const ClaimSpec& c, const SpaceFamily& spaces,
                                 const AuditOptions& opts, int arity,
                                 const ClassCheck& check) {
  ClaimReport r = detail::report_skeleton(c, opts);
  std::mt19937_64 rng(opts.seed);
  for (const auto& s : spaces) {
    if (s.size() > std::min(opts.bound, kQuotientBound)) {
      r.note += "skipped space |S|=" + std::to_string(s.size()) +
                " over the quotient bound; ";
      continue;
    }
    if (!classify(s).up_directed) {
      r.note += "skipped space without the derived groupoid; ";
      continue;
    }
    LiftedProductContext ctx = make_context(s);
    auto classes = quotient(s, EqKind::standard);
    int m = (int)classes.size();
    std::vector<int> idx(arity, 0);
    auto run_one = [&]() -> bool {
      std::vector<const RoughClass*> tuple;
      for (int i : idx) tuple.push_back(&classes[i]);
      std::string detail;
      ++r.sweep_size;
      if (!check(ctx, tuple, detail)) {
        std::vector<Subset> sets;
        for (int i : idx) sets.push_back(classes[i].members.front());
        r.verdict = Verdict::fails;
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
          if (idx[i] == m - 1) {
            idx[i] = 0;
          } else {
            ++idx[i];
            break;
          }
        }
        if (i == arity) done = true;
      }
    } else {
      std::uniform_int_distribution<int> dist(0, m - 1);
      int reps = (arity == 0) ? 1 : opts.samples;
      for (int k = 0; k < reps; ++k) {
        for (int i = 0; i < arity; ++i) idx[i] = dist(rng);
        if (!run_one()) return r;
      }
    }
  }
  return r;
}

inline std::string reps(const FiniteRelationSpace& s, const RoughClass& c) {
  return "l=" + set_to_string(s, c.a_l) + ",u=" + set_to_string(s, c.a_u);
}

inline bool same_class(const RoughClass& a, const RoughClass& b) {
  return a.a_l == b.a_l && a.a_u == b.a_u;
}

}  // namespace quotient_claims_detail

inline std::vector<ClaimSpec> quotient_claims() {
  using namespace quotient_claims_detail;
  std::vector<ClaimSpec> cs;

  auto subset_claim = [&](std::string id, Expect exp, std::string summary,
                          int arity,
                          std::function<bool(const FiniteRelationSpace&,
                                             const std::vector<Subset>&,
                                             std::string&)> f) {
    ClaimSpec c{std::move(id), "quotient", "up-directed", exp,
                std::move(summary), {}};
    c.run = [f, c, arity](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_subsets(c, sp, o, arity, f);
    };
    cs.push_back(c);
  };
  auto class_claim = [&](std::string id, Expect exp, std::string summary,
                         int arity, ClassCheck f) {
    ClaimSpec c{std::move(id), "quotient", "up-directed", exp,
                std::move(summary), {}};
    c.run = [f, c, arity](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_classes(c, sp, o, arity, f);
    };
    cs.push_back(c);
  };

  subset_claim(
      "qt-quasi", Expect::hold,
      "the one-sided rough orders are reflexive and transitive", 3,
      [](const FiniteRelationSpace& s, const std::vector<Subset>& t,
         std::string& d) {
        for (LeqKind k : {LeqKind::l, LeqKind::u}) {
          if (!rough_leq(s, t[0], t[0], k)) {
            d = "reflexivity breaks";
            return false;
          }
          if (rough_leq(s, t[0], t[1], k) && rough_leq(s, t[1], t[2], k) &&
              !rough_leq(s, t[0], t[2], k)) {
            d = "transitivity breaks";
            return false;
          }
        }
        return true;
      });
  subset_claim(
      "qt-antisym", Expect::fail,
      "the two-sided rough order is antisymmetric", 2,
      [](const FiniteRelationSpace& s, const std::vector<Subset>& t,
         std::string& d) {
        if (t[0] != t[1] && rough_leq(s, t[0], t[1]) && rough_leq(s, t[1], t[0])) {
          d = "distinct sets " + set_to_string(s, t[0]) + " and " +
              set_to_string(s, t[1]) + " share both approximations";
          return false;
        }
        return true;
      });
  subset_claim(
      "qt-cs1", Expect::hold,
      "the lower order survives intersection with a common set", 3,
      [](const FiniteRelationSpace& s, const std::vector<Subset>& t,
         std::string& d) {
        if (rough_leq(s, t[0], t[1], LeqKind::l) &&
            !rough_leq(s, t[0] & t[2], t[1] & t[2], LeqKind::l)) {
          d = "intersection breaks the lower order";
          return false;
        }
        return true;
      });
  subset_claim(
      "qt-cs2", Expect::hold,
      "the upper order survives union with a common set", 3,
      [](const FiniteRelationSpace& s, const std::vector<Subset>& t,
         std::string& d) {
        if (rough_leq(s, t[0], t[1], LeqKind::u) &&
            !rough_leq(s, t[0] | t[2], t[1] | t[2], LeqKind::u)) {
          d = "union breaks the upper order";
          return false;
        }
        return true;
      });
  subset_claim(
      "qt-decomp", Expect::hold,
      "every subset splits into its lower part and an exterior leftover", 1,
      [](const FiniteRelationSpace& s, const std::vector<Subset>& t,
         std::string& d) {
        Subset al = approximate(s, t[0], Op::l), K = t[0] & ~al;
        if (approximate(s, K, Op::l) != 0) {
          d = "leftover " + set_to_string(s, K) + " has a nonempty lower part";
          return false;
        }
        Subset sum = approximate(s, al, Op::u) | approximate(s, K, Op::u);
        if (sum != approximate(s, t[0], Op::u)) {
          d = "upper images do not recombine: " + set_to_string(s, sum) +
              " vs " + set_to_string(s, approximate(s, t[0], Op::u));
          return false;
        }
        return true;
      });
  subset_claim(
      "qt-decomp-drop", Expect::fail,
      "the lower part recombines with the leftover's upper image alone", 1,
      [](const FiniteRelationSpace& s, const std::vector<Subset>& t,
         std::string& d) {
        Subset al = approximate(s, t[0], Op::l), K = t[0] & ~al;
        Subset lhs = al | approximate(s, K, Op::u);
        Subset rhs = approximate(s, t[0], Op::u);
        if (lhs != rhs) {
          d = "lhs=" + set_to_string(s, lhs) + " rhs=" + set_to_string(s, rhs);
          return false;
        }
        return true;
      });

  class_claim(
      "qt-Uu", Expect::hold,
      "the upper representative grows under the class upper operation", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto U = rpa_apply(x, RpaOp::upp, {*t[0]});
        if (!subset_of(t[0]->a_u, U.a_u)) {
          d = reps(x.space, *t[0]) + " escapes " + reps(x.space, U);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-Ll", Expect::hold,
      "the class lower operation fixes the lower representative", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto L = rpa_apply(x, RpaOp::low, {*t[0]});
        auto U = rpa_apply(x, RpaOp::upp, {*t[0]});
        if (L.a_l != t[0]->a_l || !subset_of(L.a_l, U.a_l)) {
          d = "L gives " + reps(x.space, L) + " for class " + reps(x.space, *t[0]);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-uc", Expect::hold,
      "class negation stays under the complemented lower representative", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto N = rpa_apply(x, RpaOp::neg, {*t[0]});
        Subset cap = approximate(x.space, x.space.universe() & ~t[0]->a_l, Op::u);
        if (!subset_of(N.a_u, cap)) {
          d = "negated upper " + set_to_string(x.space, N.a_u) + " escapes " +
              set_to_string(x.space, cap);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep1", Expect::hold,
      "the lower representative sits below the class lower chain", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto L = rpa_apply(x, RpaOp::low, {*t[0]});
        if (!rough_leq(x.space, t[0]->a_l, L.a_l) ||
            !rough_leq(x.space, L.a_l, L.a_u)) {
          d = "chain breaks at " + reps(x.space, L);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep1-conv", Expect::hold,
      "the class lower chain comes back below the lower representative", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto L = rpa_apply(x, RpaOp::low, {*t[0]});
        if (!rough_leq(x.space, L.a_l, t[0]->a_l)) {
          d = "no return from " + reps(x.space, L);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep2", Expect::hold,
      "the upper representative sits below its own class upper", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto U = rpa_apply(x, RpaOp::upp, {*t[0]});
        if (!rough_leq(x.space, t[0]->a_u, U.a_u)) {
          d = "order breaks at " + reps(x.space, U);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-bu-mono", Expect::hold,
      "the union-first upper operation dominates the memberwise one", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto U = rpa_apply(x, RpaOp::upp, {*t[0]});
        auto G = rpa_apply(x, RpaOp::gupp, {*t[0]});
        if (!subset_of(U.a_l, G.a_l) || !subset_of(U.a_u, G.a_u)) {
          d = reps(x.space, U) + " escapes " + reps(x.space, G);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-bl-eq", Expect::fail,
      "the union-first lower operation agrees with the memberwise one", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto L = rpa_apply(x, RpaOp::low, {*t[0]});
        auto G = rpa_apply(x, RpaOp::glow, {*t[0]});
        if (!same_class(L, G)) {
          d = "memberwise " + reps(x.space, L) + " vs union-first " +
              reps(x.space, G);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-n-idemp", Expect::fail,
      "the class normal part of a class with itself returns the class", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto N = rpa_apply(x, RpaOp::n, {*t[0], *t[0]});
        if (!same_class(N, *t[0])) {
          d = "result " + reps(x.space, N) + " vs class " + reps(x.space, *t[0]);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-join-expl", Expect::hold,
      "every class sits below its self-join", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto J = rpa_apply(x, RpaOp::cup, {*t[0], *t[0]});
        if (!class_leq(*t[0], J)) {
          d = "self-join drops to " + reps(x.space, J);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-meet-expl", Expect::hold,
      "every class sits below its self-meet", 1,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto M = rpa_apply(x, RpaOp::cap, {*t[0], *t[0]});
        if (!class_leq(*t[0], M)) {
          d = "self-meet drops to " + reps(x.space, M);
          return false;
        }
        return true;
      });

  class_claim(
      "qt-ujoins", Expect::hold,
      "upper representatives add across the class join", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto J = rpa_apply(x, RpaOp::cup, {*t[0], *t[1]});
        if (J.a_u != (t[0]->a_u | t[1]->a_u)) {
          d = "join upper " + set_to_string(x.space, J.a_u) + " vs " +
              set_to_string(x.space, t[0]->a_u | t[1]->a_u);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep3", Expect::hold,
      "the lower representative survives into the class join", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto J = rpa_apply(x, RpaOp::cup, {*t[0], *t[1]});
        if (!subset_of(t[0]->a_l, J.a_l)) {
          d = "lower " + set_to_string(x.space, t[0]->a_l) + " escapes " +
              set_to_string(x.space, J.a_l);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep4", Expect::hold,
      "the upper representative survives into the class join", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto J = rpa_apply(x, RpaOp::cup, {*t[0], *t[1]});
        if (!subset_of(t[0]->a_u, J.a_u)) {
          d = "upper " + set_to_string(x.space, t[0]->a_u) + " escapes " +
              set_to_string(x.space, J.a_u);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep5", Expect::fail,
      "the class meet keeps its lower representative under each argument", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto M = rpa_apply(x, RpaOp::cap, {*t[0], *t[1]});
        if (!subset_of(M.a_l, t[0]->a_l)) {
          d = "meet lower " + set_to_string(x.space, M.a_l) + " escapes " +
              set_to_string(x.space, t[0]->a_l);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-rep6", Expect::hold,
      "the class meet keeps its upper representative under each argument", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto M = rpa_apply(x, RpaOp::cap, {*t[0], *t[1]});
        if (!subset_of(M.a_u, t[0]->a_u)) {
          d = "meet upper " + set_to_string(x.space, M.a_u) + " escapes " +
              set_to_string(x.space, t[0]->a_u);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-join-comm", Expect::hold, "the class join commutes", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto ab = rpa_apply(x, RpaOp::cup, {*t[0], *t[1]});
        auto ba = rpa_apply(x, RpaOp::cup, {*t[1], *t[0]});
        if (!same_class(ab, ba)) {
          d = reps(x.space, ab) + " vs " + reps(x.space, ba);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-meet-comm", Expect::hold, "the class meet commutes", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto ab = rpa_apply(x, RpaOp::cap, {*t[0], *t[1]});
        auto ba = rpa_apply(x, RpaOp::cap, {*t[1], *t[0]});
        if (!same_class(ab, ba)) {
          d = reps(x.space, ab) + " vs " + reps(x.space, ba);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-star-comm", Expect::hold, "the intersection-sweep operation commutes", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto ab = rpa_apply(x, RpaOp::star, {*t[0], *t[1]});
        auto ba = rpa_apply(x, RpaOp::star, {*t[1], *t[0]});
        if (!same_class(ab, ba)) {
          d = reps(x.space, ab) + " vs " + reps(x.space, ba);
          return false;
        }
        return true;
      });
  class_claim(
      "qt-abs", Expect::hold,
      "every class sits below the absorption compound", 2,
      [](const LiftedProductContext& x, const std::vector<const RoughClass*>& t,
         std::string& d) {
        auto inner = rpa_apply(x, RpaOp::cup, {*t[0], *t[1]});
        auto outer = rpa_apply(x, RpaOp::cap, {inner, *t[0]});
        if (!class_leq(*t[0], outer)) {
          d = "compound drops to " + reps(x.space, outer);
          return false;
        }
        return true;
      });

  return cs;
}

}  // namespace drs
