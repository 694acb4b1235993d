#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "drs/core.hpp"

namespace drs {

// Groupoid terms over single-letter variables. Unparenthesized juxtaposition
// binds to the left: "abc" parses as (ab)c.
class Term {
 public:
  static Term leaf(char v) {
    Term t;
    t.node_ = std::make_shared<const Node>(Node{v, nullptr, nullptr});
    return t;
  }

  static Term app(const Term& l, const Term& r) {
    Term t;
    t.node_ = std::make_shared<const Node>(Node{0, l.node_, r.node_});
    return t;
  }

  static Term parse(std::string_view src) {
    std::size_t i = 0;
    Term t = parse_expr(src, i);
    skip_ws(src, i);
    if (i != src.size())
      throw Error(Error::Kind::malformed_term,
                  "trailing input in term: " + std::string(src));
    return t;
  }

  bool is_leaf() const { return node_->l == nullptr; }
  char variable() const { return node_->var; }
  Term left() const { return wrap(node_->l); }
  Term right() const { return wrap(node_->r); }

  std::string str() const {
    std::string out;
    print(node_.get(), out, false);
    return out;
  }

  void collect_vars(std::vector<char>& out) const { collect(node_.get(), out); }

  std::vector<char> variables() const {
    std::vector<char> vs;
    collect_vars(vs);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

 private:
  struct Node {
    char var;
    std::shared_ptr<const Node> l, r;
  };

  static Term wrap(std::shared_ptr<const Node> n) {
    Term t;
    t.node_ = std::move(n);
    return t;
  }

  static void skip_ws(std::string_view s, std::size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }

  static Term parse_expr(std::string_view s, std::size_t& i) {
    Term cur = parse_factor(s, i);
    for (;;) {
      skip_ws(s, i);
      if (i >= s.size() || s[i] == ')') break;
      cur = app(cur, parse_factor(s, i));
    }
    return cur;
  }

  static Term parse_factor(std::string_view s, std::size_t& i) {
    skip_ws(s, i);
    if (i >= s.size())
      throw Error(Error::Kind::malformed_term,
                  "unexpected end of term: " + std::string(s));
    char c = s[i];
    if (c == '(') {
      ++i;
      Term t = parse_expr(s, i);
      skip_ws(s, i);
      if (i >= s.size() || s[i] != ')')
        throw Error(Error::Kind::malformed_term,
                    "missing ')' in term: " + std::string(s));
      ++i;
      return t;
    }
    if (c >= 'a' && c <= 'z') {
      ++i;
      return leaf(c);
    }
    throw Error(Error::Kind::malformed_term,
                std::string("unexpected character '") + c + "' in term: " +
                    std::string(s));
  }

  static void print(const Node* n, std::string& out, bool parenthesize) {
    if (n->l == nullptr) {
      out.push_back(n->var);
      return;
    }
    if (parenthesize) out.push_back('(');
    print(n->l.get(), out, false);
    print(n->r.get(), out, n->r->l != nullptr);
    if (parenthesize) out.push_back(')');
  }

  static void collect(const Node* n, std::vector<char>& out) {
    if (n->l == nullptr) {
      out.push_back(n->var);
      return;
    }
    collect(n->l.get(), out);
    collect(n->r.get(), out);
  }

  std::shared_ptr<const Node> node_;
};

struct Identity {
  Term lhs, rhs;

  static Identity parse(std::string_view src) {
    auto pos = src.find('=');
    if (pos == std::string_view::npos)
      throw Error(Error::Kind::malformed_term,
                  "identity needs '=': " + std::string(src));
    if (src.find('=', pos + 1) != std::string_view::npos)
      throw Error(Error::Kind::malformed_term,
                  "identity has more than one '=': " + std::string(src));
    return Identity{Term::parse(src.substr(0, pos)),
                    Term::parse(src.substr(pos + 1))};
  }

  std::vector<char> variables() const {
    std::vector<char> vs;
    lhs.collect_vars(vs);
    rhs.collect_vars(vs);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }

  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

}  // namespace drs
