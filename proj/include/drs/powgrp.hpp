#pragma once

// Lifting a realized groupoid to the powerset: the elementwise product, and
// its split into six provenance operations. A context pins one realizing
// operation table, which makes every lifted value (and so every audited law)
// decidable. Cells with a related pair are forced to the right factor and feed
// only the normal part; the remaining cells carry a chosen common successor
// and are classified by where that choice lands.

#include <string>
#include <vector>

#include "drs/approx.hpp"
#include "drs/claim.hpp"
#include "drs/core.hpp"
#include "drs/groupoid.hpp"
#include "drs/relation.hpp"

namespace drs {

struct LiftedProductContext {
  FiniteRelationSpace space;
  FiniteGroupoid groupoid;
};

inline LiftedProductContext make_context(const FiniteRelationSpace& s,
                                         const FiniteGroupoid& g) {
  auto bad = realization_check(s, g);
  if (!bad.empty())
    throw Error(Error::Kind::precondition,
                "operation table does not realize the relation at (" +
                    s.label(bad.front().first) + "," +
                    s.label(bad.front().second) + ")");
  return {s, g};
}

inline LiftedProductContext make_context(const FiniteRelationSpace& s) {
  return {s, build_updg(s)};
}

namespace detail {

inline void require_inside(const FiniteRelationSpace& s, Subset A,
                           const char* what) {
  if (A & ~full_set(s.size()))
    throw Error(Error::Kind::universe_mismatch,
                std::string(what) + " mentions elements outside the universe");
}

}  // namespace detail

inline Subset lift_product(const LiftedProductContext& ctx, Subset A, Subset B) {
  detail::require_inside(ctx.space, A, "first argument");
  detail::require_inside(ctx.space, B, "second argument");
  Subset out = 0;
  for_each_member(A, [&](int a) {
    for_each_member(B, [&](int b) { out |= bit(ctx.groupoid.op(a, b)); });
  });
  return out;
}

// The six split sets. Products from forced cells land in n; products from
// chooser cells are sorted by membership of the chosen value in either
// argument.
struct SplitSets {
  Subset n = 0, i1 = 0, i2 = 0, o1 = 0, o2 = 0, o = 0;
};

inline SplitSets split_products(const LiftedProductContext& ctx, Subset A,
                                Subset B) {
  detail::require_inside(ctx.space, A, "first argument");
  detail::require_inside(ctx.space, B, "second argument");
  SplitSets out;
  for_each_member(A, [&](int a) {
    for_each_member(B, [&](int b) {
      if (ctx.space.related(a, b)) {
        out.n |= bit(b);
        return;
      }
      int c = ctx.groupoid.op(a, b);
      if (has(A, c)) out.i1 |= bit(c); else out.o1 |= bit(c);
      if (has(B, c)) out.i2 |= bit(c); else out.o2 |= bit(c);
    });
  });
  out.o = out.o1 & out.o2;
  return out;
}

enum class SplitOp { n, i1, i2, o1, o2, o };

inline const char* split_op_name(SplitOp op) {
  switch (op) {
    case SplitOp::n: return "n";
    case SplitOp::i1: return "i1";
    case SplitOp::i2: return "i2";
    case SplitOp::o1: return "o1";
    case SplitOp::o2: return "o2";
    case SplitOp::o: return "o";
  }
  return "?";
}

inline SplitOp parse_split_op(const std::string& name) {
  for (SplitOp op : {SplitOp::n, SplitOp::i1, SplitOp::i2, SplitOp::o1,
                     SplitOp::o2, SplitOp::o})
    if (name == split_op_name(op)) return op;
  throw Error(Error::Kind::malformed_document,
              "unknown split operation '" + name + "'");
}

inline Subset split_op(const LiftedProductContext& ctx, SplitOp which, Subset A,
                       Subset B) {
  SplitSets s = split_products(ctx, A, B);
  switch (which) {
    case SplitOp::n: return s.n;
    case SplitOp::i1: return s.i1;
    case SplitOp::i2: return s.i2;
    case SplitOp::o1: return s.o1;
    case SplitOp::o2: return s.o2;
    case SplitOp::o: return s.o;
  }
  return 0;
}

namespace powgrp_claims_detail {

// Subset sweeps against the canonical context of each space. Spaces that do
// not admit the derived groupoid are skipped with a note, mirroring the bound
// skips of the plain subset sweep.
using CtxCheck = std::function<bool(const LiftedProductContext&,
                                    const std::vector<Subset>&, std::string&)>;

inline ClaimReport sweep_ctx(const ClaimSpec& c, const SpaceFamily& spaces,
                             const AuditOptions& opts, int arity,
                             const CtxCheck& check) {
  ClaimReport r = detail::report_skeleton(c, opts);
  std::mt19937_64 rng(opts.seed);
  for (const auto& s : spaces) {
    if (s.size() > opts.bound) {
      r.note += "skipped space |S|=" + std::to_string(s.size()) + " over bound; ";
      continue;
    }
    if (!classify(s).up_directed) {
      r.note += "skipped space without the derived groupoid; ";
      continue;
    }
    LiftedProductContext ctx = make_context(s);
    Subset top = full_set(s.size());
    std::vector<Subset> tuple(arity, 0);
    auto run_one = [&]() -> bool {
      std::string detail;
      ++r.sweep_size;
      if (!check(ctx, tuple, detail)) {
        r.verdict = Verdict::fails;
        r.witness = Witness{s, tuple, detail};
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
          if (tuple[i] == top) {
            tuple[i] = 0;
          } else {
            ++tuple[i];
            break;
          }
        }
        if (i == arity) done = true;
      }
    } else {
      std::uniform_int_distribution<Subset> dist(0, top);
      int reps = (arity == 0) ? 1 : opts.samples;
      for (int k = 0; k < reps; ++k) {
        for (int i = 0; i < arity; ++i) tuple[i] = dist(rng);
        if (!run_one()) return r;
      }
    }
  }
  return r;
}

inline std::string show(const LiftedProductContext& ctx, const char* name,
                        Subset v) {
  return std::string(name) + "=" + set_to_string(ctx.space, v);
}

}  // namespace powgrp_claims_detail

inline std::vector<ClaimSpec> powgrp_claims() {
  using namespace powgrp_claims_detail;
  std::vector<ClaimSpec> cs;

  auto add = [&](std::string id, std::string hyp, Expect exp, std::string summary,
                 int arity, CtxCheck f) {
    ClaimSpec c{std::move(id), "powgrp", std::move(hyp), exp, std::move(summary), {}};
    c.run = [f, c, arity](const SpaceFamily& sp, const AuditOptions& o) {
      return sweep_ctx(c, sp, o, arity, f);
    };
    cs.push_back(c);
  };

  add("pg-order-comp", "up-directed", Expect::hold,
      "the lifted product is monotone on the left", 3,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset a = t[0], b = t[1], c = t[2];
        if ((a | b) != b) return true;
        Subset ac = lift_product(x, a, c), bc = lift_product(x, b, c);
        if ((ac | bc) != bc) {
          d = show(x, "ac", ac) + " escapes " + show(x, "bc", bc);
          return false;
        }
        return true;
      });
  add("pg-bnd2", "up-directed", Expect::hold,
      "the empty set annihilates and the universe bounds the product", 1,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset a = t[0], S = x.space.universe();
        if (lift_product(x, 0, a) != 0 || lift_product(x, a, 0) != 0) {
          d = "empty factor did not annihilate";
          return false;
        }
        if (!subset_of(lift_product(x, a, S), S) ||
            !subset_of(lift_product(x, S, a), S)) {
          d = "product escaped the universe";
          return false;
        }
        return true;
      });
  add("pg-comp2", "up-directed", Expect::hold,
      "the lifted product distributes over union on the left", 3,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset a = t[0], b = t[1], h = t[2];
        Subset lhs = lift_product(x, a | b, h);
        Subset rhs = lift_product(x, a, h) | lift_product(x, b, h);
        if (lhs != rhs) {
          d = show(x, "(a|b)h", lhs) + " vs " + show(x, "ah|bh", rhs);
          return false;
        }
        return true;
      });
  add("pg-comp2-cap", "up-directed", Expect::fail,
      "the lifted product distributes over intersection on the left", 3,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset a = t[0], b = t[1], h = t[2];
        Subset lhs = lift_product(x, a & b, h);
        Subset rhs = lift_product(x, a, h) & lift_product(x, b, h);
        if (lhs != rhs) {
          d = show(x, "(a&b)h", lhs) + " vs " + show(x, "ah&bh", rhs);
          return false;
        }
        return true;
      });
  add("pg-neg", "up-directed", Expect::fail,
      "complementing the left factor complements the product", 2,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset a = t[0], h = t[1], S = x.space.universe();
        Subset lhs = lift_product(x, (S & ~a), h);
        Subset rhs = S & ~lift_product(x, a, h);
        if (lhs != rhs) {
          d = show(x, "(a^c)h", lhs) + " vs " + show(x, "(ah)^c", rhs);
          return false;
        }
        return true;
      });

  // containments of the six split sets
  struct Item {
    const char* id;
    const char* summary;
    std::function<bool(const LiftedProductContext&, Subset, Subset,
                       const SplitSets&, std::string&)> f;
  };
  auto inside = [](const LiftedProductContext& x, Subset part, Subset bound,
                   const char* pn, std::string& d) {
    if (!subset_of(part, bound)) {
      d = std::string(pn) + "=" + set_to_string(x.space, part) +
          " escapes " + set_to_string(x.space, bound);
      return false;
    }
    return true;
  };
  std::vector<Item> items = {
      {"pg-n", "the normal part stays inside the right argument",
       [inside](const LiftedProductContext& x, Subset, Subset B,
                const SplitSets& s, std::string& d) {
         return inside(x, s.n, B, "n", d);
       }},
      {"pg-i1", "the first inner part stays inside the left argument",
       [inside](const LiftedProductContext& x, Subset A, Subset,
                const SplitSets& s, std::string& d) {
         return inside(x, s.i1, A, "i1", d);
       }},
      {"pg-i2", "the second inner part stays inside the right argument",
       [inside](const LiftedProductContext& x, Subset, Subset B,
                const SplitSets& s, std::string& d) {
         return inside(x, s.i2, B, "i2", d);
       }},
      {"pg-o1", "the first outer part avoids the left argument",
       [inside](const LiftedProductContext& x, Subset A, Subset,
                const SplitSets& s, std::string& d) {
         return inside(x, s.o1, x.space.universe() & ~A, "o1", d);
       }},
      {"pg-o2", "the second outer part avoids the right argument",
       [inside](const LiftedProductContext& x, Subset, Subset B,
                const SplitSets& s, std::string& d) {
         return inside(x, s.o2, x.space.universe() & ~B, "o2", d);
       }},
      {"pg-o", "the outer part avoids both arguments",
       [inside](const LiftedProductContext& x, Subset A, Subset B,
                const SplitSets& s, std::string& d) {
         return inside(x, s.o, x.space.universe() & ~(A | B), "o", d);
       }},
  };
  for (auto& it : items) {
    auto f = it.f;
    add(it.id, "up-directed", Expect::hold, it.summary, 2,
        [f](const LiftedProductContext& x, const std::vector<Subset>& t,
            std::string& d) {
          return f(x, t[0], t[1], split_products(x, t[0], t[1]), d);
        });
  }

  add("pg-partition", "up-directed", Expect::hold,
      "the product is the normal part plus either inner/outer pair", 2,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset ab = lift_product(x, t[0], t[1]);
        SplitSets s = split_products(x, t[0], t[1]);
        if (ab != (s.n | s.i1 | s.o1) || ab != (s.n | s.i2 | s.o2)) {
          d = show(x, "AB", ab) + " vs " + show(x, "n|i1|o1", s.n | s.i1 | s.o1) +
              " / " + show(x, "n|i2|o2", s.n | s.i2 | s.o2);
          return false;
        }
        return true;
      });

  add("pg-sub-n", "reflexive up-directed", Expect::hold,
      "inside a larger left argument the normal part recovers the right", 2,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset A = t[0], B = t[1];
        if (!subset_of(B, A)) return true;
        SplitSets s = split_products(x, A, B);
        if (s.n != B) {
          d = show(x, "n", s.n) + " differs from " + show(x, "B", B);
          return false;
        }
        return true;
      });
  add("pg-sub-i", "up-directed", Expect::hold,
      "inside a larger left argument the inner parts nest", 2,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset A = t[0], B = t[1];
        if (!subset_of(B, A)) return true;
        SplitSets s = split_products(x, A, B);
        if (!subset_of(s.i2, s.i1) || !subset_of(s.i1, A)) {
          d = show(x, "i2", s.i2) + " / " + show(x, "i1", s.i1) +
              " fail to nest in " + show(x, "A", A);
          return false;
        }
        return true;
      });
  add("pg-sub-o", "up-directed", Expect::hold,
      "inside a larger left argument the outer parts nest", 2,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset A = t[0], B = t[1];
        if (!subset_of(B, A)) return true;
        SplitSets s = split_products(x, A, B);
        if (!subset_of(s.o1, s.o2)) {
          d = show(x, "o1", s.o1) + " escapes " + show(x, "o2", s.o2);
          return false;
        }
        return true;
      });
  add("pg-sub-summary", "reflexive up-directed", Expect::hold,
      "inside a larger left argument the product splits into three parts", 2,
      [](const LiftedProductContext& x, const std::vector<Subset>& t,
         std::string& d) {
        Subset A = t[0], B = t[1];
        if (!subset_of(B, A)) return true;
        Subset ab = lift_product(x, A, B);
        SplitSets s = split_products(x, A, B);
        if (ab != (B | s.i1 | s.o2)) {
          d = show(x, "AB", ab) + " vs " + show(x, "B|i1|o2", B | s.i1 | s.o2);
          return false;
        }
        return true;
      });

  add("pg-granule", "up-directed", Expect::hold,
      "the split containments specialize to pairs of granules", 0,
      [](const LiftedProductContext& x, const std::vector<Subset>&,
         std::string& d) {
        int n = x.space.size();
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            Subset A = x.space.pred(a), B = x.space.pred(b);
            SplitSets s = split_products(x, A, B);
            Subset S = x.space.universe();
            if (!subset_of(s.n, B) || !subset_of(s.i1, A) ||
                !subset_of(s.i2, B) || !subset_of(s.o1, S & ~A) ||
                !subset_of(s.o2, S & ~B)) {
              d = "containment breaks on the granules of (" +
                  x.space.label(a) + "," + x.space.label(b) + ")";
              return false;
            }
          }
        return true;
      });

  return cs;
}

}  // namespace drs
