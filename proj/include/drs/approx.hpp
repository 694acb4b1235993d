#pragma once

// The fourteen approximation operators over a finite relation space.
//
// Granular operators collect whole neighborhoods; pointwise operators test a
// condition element by element. Keeping each operator in its printed
// set-builder form (rather than routing coincident ones through a shared
// implementation) lets the audit compare them against each other honestly.

#include <array>
#include <string>

#include "drs/core.hpp"
#include "drs/relation.hpp"

namespace drs {

enum class Op {
  l,          // union of plain granules inside A
  l_i,        // union of inverse granules inside A
  u,          // union of plain granules meeting A
  u_i,        // union of inverse granules meeting A
  l_s,        // union of symmetric granules inside A
  u_s,        // union of symmetric granules meeting A
  l_plus,     // { x : [x] subset of A }
  u_plus,     // { x : [x] meets A }
  li_plus,    // { x : [x]_i subset of A }
  ui_plus,    // { x : [x]_i meets A }
  tri_up,     // { x : Rax for some a in A }
  tri_down,   // { x in A : [x]_i subset of A }
  btri_up,    // union of [x] over x in A
  btri_down,  // { x in A : [x] subset of A }
};

inline constexpr int kOpCount = 14;

inline constexpr std::array<Op, kOpCount> all_ops = {
    Op::l,      Op::l_i,     Op::u,       Op::u_i,     Op::l_s,
    Op::u_s,    Op::l_plus,  Op::u_plus,  Op::li_plus, Op::ui_plus,
    Op::tri_up, Op::tri_down, Op::btri_up, Op::btri_down};

inline const char* op_name(Op op) {
  switch (op) {
    case Op::l: return "l";
    case Op::l_i: return "l_i";
    case Op::u: return "u";
    case Op::u_i: return "u_i";
    case Op::l_s: return "l_s";
    case Op::u_s: return "u_s";
    case Op::l_plus: return "l_plus";
    case Op::u_plus: return "u_plus";
    case Op::li_plus: return "li_plus";
    case Op::ui_plus: return "ui_plus";
    case Op::tri_up: return "tri_up";
    case Op::tri_down: return "tri_down";
    case Op::btri_up: return "btri_up";
    case Op::btri_down: return "btri_down";
  }
  return "?";
}

inline Op parse_op(const std::string& name) {
  for (Op op : all_ops)
    if (name == op_name(op)) return op;
  // Short aliases for the pointwise family.
  if (name == "l+") return Op::l_plus;
  if (name == "u+") return Op::u_plus;
  if (name == "li+") return Op::li_plus;
  if (name == "ui+") return Op::ui_plus;
  throw Error(Error::Kind::malformed_document, "unknown operator '" + name + "'");
}

inline bool is_granular(Op op) {
  switch (op) {
    case Op::l: case Op::l_i: case Op::u: case Op::u_i:
    case Op::l_s: case Op::u_s: case Op::tri_up: case Op::btri_up:
      return true;
    default:
      return false;
  }
}

inline Subset approximate(const FiniteRelationSpace& s, Subset A, Op op) {
  int n = s.size();
  Subset out = 0;
  switch (op) {
    case Op::l:
      for (int a = 0; a < n; ++a)
        if (subset_of(s.pred(a), A)) out |= s.pred(a);
      break;
    case Op::l_i:
      for (int a = 0; a < n; ++a)
        if (subset_of(s.succ(a), A)) out |= s.succ(a);
      break;
    case Op::u:
      for (int a = 0; a < n; ++a)
        if (s.pred(a) & A) out |= s.pred(a);
      break;
    case Op::u_i:
      for (int a = 0; a < n; ++a)
        if (s.succ(a) & A) out |= s.succ(a);
      break;
    case Op::l_s:
      for (int a = 0; a < n; ++a)
        if (subset_of(s.sym(a), A)) out |= s.sym(a);
      break;
    case Op::u_s:
      for (int a = 0; a < n; ++a)
        if (s.sym(a) & A) out |= s.sym(a);
      break;
    case Op::l_plus:
      for (int x = 0; x < n; ++x)
        if (subset_of(s.pred(x), A)) out |= Subset{1} << x;
      break;
    case Op::u_plus:
      for (int x = 0; x < n; ++x)
        if (s.pred(x) & A) out |= Subset{1} << x;
      break;
    case Op::li_plus:
      for (int x = 0; x < n; ++x)
        if (subset_of(s.succ(x), A)) out |= Subset{1} << x;
      break;
    case Op::ui_plus:
      for (int x = 0; x < n; ++x)
        if (s.succ(x) & A) out |= Subset{1} << x;
      break;
    case Op::tri_up:
      for (int x = 0; x < n; ++x) {
        bool hit = false;
        for_each_member(A, [&](int a) { hit = hit || s.related(a, x); });
        if (hit) out |= Subset{1} << x;
      }
      break;
    case Op::tri_down:
      for_each_member(A, [&](int x) {
        if (subset_of(s.succ(x), A)) out |= Subset{1} << x;
      });
      break;
    case Op::btri_up:
      for_each_member(A, [&](int x) { out |= s.pred(x); });
      break;
    case Op::btri_down:
      for_each_member(A, [&](int x) {
        if (subset_of(s.pred(x), A)) out |= Subset{1} << x;
      });
      break;
  }
  return out;
}

inline std::array<Subset, kOpCount> approximate_all(const FiniteRelationSpace& s,
                                                    Subset A) {
  std::array<Subset, kOpCount> out{};
  for (int i = 0; i < kOpCount; ++i) out[i] = approximate(s, A, all_ops[i]);
  return out;
}

// Sets fixed by both given operators.
inline std::vector<Subset> definite_sets(const FiniteRelationSpace& s, Op lower,
                                         Op upper, int bound = kDefaultBound) {
  require_bound(s.size(), bound, "definite_sets");
  std::vector<Subset> out;
  Subset top = full_set(s.size());
  for (Subset A = 0;; ++A) {
    if (approximate(s, A, lower) == A && approximate(s, A, upper) == A)
      out.push_back(A);
    if (A == top) break;
  }
  return out;
}

}  // namespace drs
