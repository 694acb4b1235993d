#pragma once

// Algebras carved out of the approximation images of a relation space.
//
// Three layers share one value type. The upper algebra lives on the set of
// u-images, with union and an upper-closed intersection. The combined algebra
// lives on the l-images together with the u-images, with closed intersection
// and closed union. Its partial extension adds plain intersection and
// complement exactly where they stay inside the carrier. Terms over these
// signatures evaluate strictly, and identities can be checked under two weak
// readings: equal whenever both sides are defined, or additionally requiring
// the two sides to be defined together.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drs/approx.hpp"
#include "drs/core.hpp"
#include "drs/relation.hpp"

namespace drs {

enum class AlgebraKind { upper, combined, combined_partial };

inline const char* algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::upper: return "upper";
    case AlgebraKind::combined: return "combined";
    case AlgebraKind::combined_partial: return "combined*";
  }
  return "?";
}

// Carrier elements are referred to by index into the sorted carrier list.
// Partial operation tables mark undefined entries with -1. The maps for the
// two approximation operators are kept in the same partial format even though
// they turn out to be total on these carriers; the builders record what the
// lookups actually find.
struct ImageAlgebra {
  FiniteRelationSpace space;
  AlgebraKind kind = AlgebraKind::upper;
  std::vector<Subset> carrier;  // strictly ascending
  int bottom = -1;              // index of the empty set
  int top = -1;                 // index of the u-image of the whole universe

  std::vector<std::vector<int>> join;  // upper algebra: set union
  std::vector<std::vector<int>> meet;  // upper algebra: u-image of intersection
  std::vector<std::vector<int>> cap;   // combined: l-image of intersection
  std::vector<std::vector<int>> cup;   // combined: u-image of union

  std::vector<std::vector<int>> punion;  // set union where it stays inside
  std::vector<std::vector<int>> pmeet;   // partial extension: set intersection
  std::vector<int> kappa;                // partial extension: complement
  std::vector<int> lower, upper;         // approximation maps on the carrier

  int size() const { return static_cast<int>(carrier.size()); }

  int index_of(Subset x) const {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), x);
    if (it == carrier.end() || *it != x) return -1;
    return static_cast<int>(it - carrier.begin());
  }
};

namespace detail {

inline std::vector<Subset> sorted_unique(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline int require_closed(const ImageAlgebra& alg, Subset x, const char* what) {
  int i = alg.index_of(x);
  if (i < 0)
    throw Error(Error::Kind::precondition,
                std::string("carrier of the ") + algebra_kind_name(alg.kind) +
                    " algebra is not closed under " + what);
  return i;
}

inline void fill_approximation_maps(ImageAlgebra& alg) {
  int n = alg.size();
  alg.lower.assign(n, -1);
  alg.upper.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    alg.lower[i] = alg.index_of(approximate(alg.space, alg.carrier[i], Op::l));
    alg.upper[i] = alg.index_of(approximate(alg.space, alg.carrier[i], Op::u));
  }
}

}  // namespace detail

inline ImageAlgebra build_upper_algebra(const FiniteRelationSpace& s,
                                        int bound = kDefaultBound) {
  require_bound(s.size(), bound, "build_upper_algebra");
  ImageAlgebra alg;
  alg.space = s;
  alg.kind = AlgebraKind::upper;
  Subset whole = full_set(s.size());
  std::vector<Subset> images;
  for (Subset A = 0;; ++A) {
    images.push_back(approximate(s, A, Op::u));
    if (A == whole) break;
  }
  alg.carrier = detail::sorted_unique(std::move(images));
  alg.bottom = detail::require_closed(alg, 0, "the empty set");
  alg.top = detail::require_closed(alg, approximate(s, whole, Op::u), "the top");
  int n = alg.size();
  alg.join.assign(n, std::vector<int>(n, -1));
  alg.meet.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Subset a = alg.carrier[i], b = alg.carrier[j];
      alg.join[i][j] = detail::require_closed(alg, a | b, "union");
      alg.meet[i][j] =
          detail::require_closed(alg, approximate(s, a & b, Op::u), "meet");
    }
  }
  alg.punion = alg.join;  // union never leaves the u-images
  detail::fill_approximation_maps(alg);
  return alg;
}

inline ImageAlgebra build_lu_algebra(const FiniteRelationSpace& s,
                                     int bound = kDefaultBound) {
  require_bound(s.size(), bound, "build_lu_algebra");
  ImageAlgebra alg;
  alg.space = s;
  alg.kind = AlgebraKind::combined;
  Subset whole = full_set(s.size());
  std::vector<Subset> images;
  for (Subset A = 0;; ++A) {
    images.push_back(approximate(s, A, Op::l));
    images.push_back(approximate(s, A, Op::u));
    if (A == whole) break;
  }
  alg.carrier = detail::sorted_unique(std::move(images));
  alg.bottom = detail::require_closed(alg, 0, "the empty set");
  alg.top = detail::require_closed(alg, approximate(s, whole, Op::u), "the top");
  int n = alg.size();
  alg.cap.assign(n, std::vector<int>(n, -1));
  alg.cup.assign(n, std::vector<int>(n, -1));
  alg.punion.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Subset a = alg.carrier[i], b = alg.carrier[j];
      alg.cap[i][j] =
          detail::require_closed(alg, approximate(s, a & b, Op::l), "closed meet");
      alg.cup[i][j] =
          detail::require_closed(alg, approximate(s, a | b, Op::u), "closed join");
      alg.punion[i][j] = alg.index_of(a | b);
    }
  }
  detail::fill_approximation_maps(alg);
  return alg;
}

inline ImageAlgebra extend_partial(const FiniteRelationSpace& s,
                                   const ImageAlgebra& ua) {
  if (!(s == ua.space))
    throw Error(Error::Kind::universe_mismatch,
                "partial extension needs the space the algebra was built from");
  if (ua.kind != AlgebraKind::combined)
    throw Error(Error::Kind::precondition,
                "partial extension starts from the combined algebra");
  ImageAlgebra alg = ua;
  alg.kind = AlgebraKind::combined_partial;
  int n = alg.size();
  Subset whole = full_set(s.size());
  alg.pmeet.assign(n, std::vector<int>(n, -1));
  alg.kappa.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    alg.kappa[i] = alg.index_of(whole & ~alg.carrier[i]);
    for (int j = 0; j < n; ++j)
      alg.pmeet[i][j] = alg.index_of(alg.carrier[i] & alg.carrier[j]);
  }
  return alg;
}

// Signature of the algebra terms: named operations with fixed arity. "union"
// and "isect" are the plain set operations (the latter partial), "cap"/"cup"
// the closed ones, "join"/"meet" the upper-algebra pair.
inline int algebra_op_arity(const std::string& op) {
  if (op == "kappa" || op == "l" || op == "u") return 1;
  if (op == "join" || op == "meet" || op == "cap" || op == "cup" ||
      op == "union" || op == "isect")
    return 2;
  return -1;
}

// Terms over the image-algebra signatures, written functionally:
// "isect(a, union(b, c))", "kappa(a)", with constants "bot" and "top" and
// single-letter variables. A name followed by '(' is an operation; otherwise
// it must be a constant or a variable.
class ATerm {
 public:
  enum class Tag { variable, bottom, top, apply };

  static ATerm var(char v) {
    return wrap(std::make_shared<const Node>(Node{Tag::variable, v, "", {}}));
  }
  static ATerm bot() {
    return wrap(std::make_shared<const Node>(Node{Tag::bottom, 0, "", {}}));
  }
  static ATerm top() {
    return wrap(std::make_shared<const Node>(Node{Tag::top, 0, "", {}}));
  }

  static ATerm apply(const std::string& op, std::vector<ATerm> args) {
    int ar = algebra_op_arity(op);
    if (ar < 0)
      throw Error(Error::Kind::malformed_term, "unknown operation '" + op + "'");
    if (static_cast<int>(args.size()) != ar)
      throw Error(Error::Kind::malformed_term,
                  "'" + op + "' takes " + std::to_string(ar) + " argument" +
                      (ar == 1 ? "" : "s"));
    return wrap(
        std::make_shared<const Node>(Node{Tag::apply, 0, op, std::move(args)}));
  }

  static ATerm parse(const std::string& text) {
    std::size_t pos = 0;
    ATerm t = parse_expr(text, pos);
    skip_ws(text, pos);
    if (pos != text.size())
      throw Error(Error::Kind::malformed_term, "trailing input in '" + text + "'");
    return t;
  }

  Tag tag() const { return node_->tag; }
  char variable() const { return node_->var; }
  const std::string& op() const { return node_->op; }
  const std::vector<ATerm>& args() const { return node_->args; }

  std::string str() const {
    switch (node_->tag) {
      case Tag::variable: return std::string(1, node_->var);
      case Tag::bottom: return "bot";
      case Tag::top: return "top";
      case Tag::apply: break;
    }
    std::string out = node_->op + "(";
    for (std::size_t i = 0; i < node_->args.size(); ++i) {
      if (i) out += ", ";
      out += node_->args[i].str();
    }
    return out + ")";
  }

  std::vector<char> variables() const {
    std::vector<char> vs;
    collect(vs);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  void collect(std::vector<char>& out) const {
    if (node_->tag == Tag::variable) out.push_back(node_->var);
    for (const auto& a : node_->args) a.collect(out);
  }

 private:
  struct Node {
    Tag tag;
    char var;
    std::string op;
    std::vector<ATerm> args;
  };

  static ATerm wrap(std::shared_ptr<const Node> n) {
    ATerm t;
    t.node_ = std::move(n);
    return t;
  }

  static void skip_ws(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  static ATerm parse_expr(const std::string& s, std::size_t& i) {
    skip_ws(s, i);
    if (i >= s.size())
      throw Error(Error::Kind::malformed_term, "expected a term in '" + s + "'");
    char c = s[i];
    if (c == '(') {
      ++i;
      ATerm t = parse_expr(s, i);
      skip_ws(s, i);
      if (i >= s.size() || s[i] != ')')
        throw Error(Error::Kind::malformed_term, "missing ')' in '" + s + "'");
      ++i;
      return t;
    }
    if (!std::islower(static_cast<unsigned char>(c)))
      throw Error(Error::Kind::malformed_term,
                  std::string("unexpected character '") + c + "' in '" + s + "'");
    std::size_t start = i;
    while (i < s.size() && std::islower(static_cast<unsigned char>(s[i]))) ++i;
    std::string name = s.substr(start, i - start);
    std::size_t after = i;
    skip_ws(s, i);
    if (i < s.size() && s[i] == '(') {
      if (algebra_op_arity(name) < 0)
        throw Error(Error::Kind::malformed_term,
                    "unknown operation '" + name + "'");
      ++i;
      std::vector<ATerm> args;
      args.push_back(parse_expr(s, i));
      skip_ws(s, i);
      while (i < s.size() && s[i] == ',') {
        ++i;
        args.push_back(parse_expr(s, i));
        skip_ws(s, i);
      }
      if (i >= s.size() || s[i] != ')')
        throw Error(Error::Kind::malformed_term, "missing ')' in '" + s + "'");
      ++i;
      return apply(name, std::move(args));
    }
    i = after;
    if (name == "bot") return bot();
    if (name == "top") return top();
    if (name.size() == 1) return var(name[0]);
    throw Error(Error::Kind::malformed_term, "unknown name '" + name + "'");
  }

  std::shared_ptr<const Node> node_;
};

// Strict evaluation to a carrier index; an undefined subterm makes the whole
// term undefined. Operations outside the algebra's signature are rejected
// before the arguments are looked at.
inline std::optional<int> eval_aterm(const ImageAlgebra& alg, const ATerm& t,
                                     const std::map<char, int>& assignment) {
  switch (t.tag()) {
    case ATerm::Tag::bottom:
      return alg.bottom;
    case ATerm::Tag::top:
      return alg.top;
    case ATerm::Tag::variable: {
      auto it = assignment.find(t.variable());
      if (it == assignment.end())
        throw Error(Error::Kind::unbound_variable,
                    std::string("variable '") + t.variable() + "' has no value");
      return it->second;
    }
    case ATerm::Tag::apply:
      break;
  }
  const std::string& op = t.op();
  auto in_signature = [&](bool ok) {
    if (!ok)
      throw Error(Error::Kind::malformed_term,
                  "'" + op + "' is not in the " +
                      algebra_kind_name(alg.kind) + " signature");
  };
  if (op == "join" || op == "meet") in_signature(alg.kind == AlgebraKind::upper);
  if (op == "cap" || op == "cup") in_signature(alg.kind != AlgebraKind::upper);
  if (op == "isect" || op == "kappa")
    in_signature(alg.kind == AlgebraKind::combined_partial);

  std::vector<int> vals;
  for (const auto& a : t.args()) {
    auto v = eval_aterm(alg, a, assignment);
    if (!v) return std::nullopt;
    vals.push_back(*v);
  }
  auto table = [&](const std::vector<std::vector<int>>& tab) -> std::optional<int> {
    int v = tab[vals[0]][vals[1]];
    if (v < 0) return std::nullopt;
    return v;
  };
  auto map1 = [&](const std::vector<int>& m) -> std::optional<int> {
    int v = m[vals[0]];
    if (v < 0) return std::nullopt;
    return v;
  };
  if (op == "join") return table(alg.join);
  if (op == "meet") return table(alg.meet);
  if (op == "cap") return table(alg.cap);
  if (op == "cup") return table(alg.cup);
  if (op == "union") return table(alg.punion);
  if (op == "isect") return table(alg.pmeet);
  if (op == "kappa") return map1(alg.kappa);
  if (op == "l") return map1(alg.lower);
  if (op == "u") return map1(alg.upper);
  throw Error(Error::Kind::malformed_term, "unknown operation '" + op + "'");
}

enum class EqMode { omega, omega_star };

struct WeakEqReport {
  bool holds = true;
  std::uint64_t assignments = 0;
  std::uint64_t both_defined = 0;
  std::optional<std::map<char, int>> witness;
  std::string detail;
};

// Checks lhs = rhs over every assignment of carrier elements to the variables
// of both terms. The relaxed mode only compares where both sides are defined;
// the strict mode additionally fails wherever one side is defined and the
// other is not. Assignments run in odometer order with the last variable
// moving fastest.
inline WeakEqReport weak_equality(const ImageAlgebra& alg, const ATerm& lhs,
                                  const ATerm& rhs,
                                  EqMode mode = EqMode::omega) {
  WeakEqReport rep;
  std::vector<char> vars = lhs.variables();
  {
    std::vector<char> rv = rhs.variables();
    vars.insert(vars.end(), rv.begin(), rv.end());
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  }
  int k = static_cast<int>(vars.size());
  int n = alg.size();
  std::vector<int> idx(k, 0);
  for (;;) {
    std::map<char, int> asg;
    for (int i = 0; i < k; ++i) asg[vars[i]] = idx[i];
    auto L = eval_aterm(alg, lhs, asg);
    auto R = eval_aterm(alg, rhs, asg);
    ++rep.assignments;
    std::string why;
    if (L && R) {
      ++rep.both_defined;
      if (*L != *R)
        why = "lhs=" + set_to_string(alg.space, alg.carrier[*L]) +
              " rhs=" + set_to_string(alg.space, alg.carrier[*R]);
    } else if (mode == EqMode::omega_star && L.has_value() != R.has_value()) {
      why = L ? "lhs defined, rhs undefined" : "rhs defined, lhs undefined";
    }
    if (!why.empty()) {
      rep.holds = false;
      rep.witness = asg;
      rep.detail = why;
      return rep;
    }
    int i = k - 1;
    for (; i >= 0; --i) {
      if (++idx[i] < n) break;
      idx[i] = 0;
    }
    if (i < 0) break;
  }
  return rep;
}

}  // namespace drs
