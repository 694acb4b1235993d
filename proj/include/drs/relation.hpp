#pragma once

// Finite binary relations ("spaces"), their classification, neighborhoods,
// and structure maps.

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "drs/core.hpp"

namespace drs {

class FiniteRelationSpace {
 public:
  FiniteRelationSpace() = default;

  FiniteRelationSpace(std::vector<std::string> labels,
                      const std::vector<std::pair<int, int>>& pairs)
      : labels_(std::move(labels)) {
    int n = static_cast<int>(labels_.size());
    if (n > kMaxUniverse)
      throw Error(Error::Kind::bound_exceeded,
                  "universe larger than " + std::to_string(kMaxUniverse));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j])
          throw Error(Error::Kind::malformed_document,
                      "duplicate universe label '" + labels_[i] + "'");
    succ_.assign(n, 0);
    pred_.assign(n, 0);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n)
        throw Error(Error::Kind::unknown_label, "pair index out of range");
      if (has(succ_[a], b))
        throw Error(Error::Kind::duplicate_pair,
                    "duplicate pair (" + labels_[a] + "," + labels_[b] + ")");
      succ_[a] |= Subset{1} << b;
      pred_[b] |= Subset{1} << a;
    }
  }

  static FiniteRelationSpace from_labels(
      std::vector<std::string> labels,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    FiniteRelationSpace tmp(std::move(labels), {});
    std::vector<std::pair<int, int>> ip;
    ip.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
      ip.emplace_back(tmp.index_of(a), tmp.index_of(b));
    return FiniteRelationSpace(tmp.labels_, ip);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int x) const { return labels_.at(x); }

  int index_of(const std::string& lab) const {
    for (int i = 0; i < size(); ++i)
      if (labels_[i] == lab) return i;
    throw Error(Error::Kind::unknown_label, "unknown element label '" + lab + "'");
  }

  bool related(int a, int b) const { return has(succ_[a], b); }
  // [a]_i — elements a relates to.
  Subset succ(int a) const { return succ_[a]; }
  // [a] — elements relating to a.
  Subset pred(int a) const { return pred_[a]; }
  // [a]_o.
  Subset sym(int a) const { return succ_[a] & pred_[a]; }

  Subset universe() const { return full_set(size()); }

  // Common successors of a and b.
  Subset upper_bounds(int a, int b) const { return succ_[a] & succ_[b]; }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      for_each_member(succ_[a], [&](int b) { out.emplace_back(a, b); });
    return out;  // row-major, already sorted
  }

  bool operator==(const FiniteRelationSpace& o) const {
    return labels_ == o.labels_ && succ_ == o.succ_;
  }
  bool operator!=(const FiniteRelationSpace& o) const { return !(*this == o); }

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> succ_, pred_;
};

enum class NbdKind { plain, inverse, symmetric };

inline Subset neighborhood(const FiniteRelationSpace& s, int x, NbdKind k) {
  switch (k) {
    case NbdKind::plain: return s.pred(x);
    case NbdKind::inverse: return s.succ(x);
    case NbdKind::symmetric: return s.sym(x);
  }
  return 0;
}

struct RelationProfile {
  bool reflexive = true;
  bool antisymmetric = true;
  bool transitive = true;
  bool symmetric = true;
  bool up_directed = true;
  // Witnesses for each false flag.
  std::optional<int> reflexive_witness;                      // a with not Raa
  std::optional<std::pair<int, int>> antisymmetric_witness;  // a!=b, Rab & Rba
  std::optional<std::array<int, 3>> transitive_witness;      // Rab & Rbc, not Rac
  std::optional<std::pair<int, int>> symmetric_witness;      // Rab, not Rba
  std::optional<std::pair<int, int>> up_directed_witness;    // not Rab, empty U_R(a,b)
};

inline RelationProfile classify(const FiniteRelationSpace& s) {
  RelationProfile p;
  int n = s.size();
  for (int a = 0; a < n && p.reflexive; ++a)
    if (!s.related(a, a)) {
      p.reflexive = false;
      p.reflexive_witness = a;
    }
  for (int a = 0; a < n && p.antisymmetric; ++a)
    for (int b = a + 1; b < n && p.antisymmetric; ++b)
      if (s.related(a, b) && s.related(b, a)) {
        p.antisymmetric = false;
        p.antisymmetric_witness = {a, b};
      }
  for (int a = 0; a < n && p.symmetric; ++a)
    for (int b = 0; b < n && p.symmetric; ++b)
      if (s.related(a, b) && !s.related(b, a)) {
        p.symmetric = false;
        p.symmetric_witness = {a, b};
      }
  for (int a = 0; a < n && p.transitive; ++a)
    for (int b = 0; b < n && p.transitive; ++b) {
      if (!s.related(a, b)) continue;
      Subset missing = s.succ(b) & ~s.succ(a);
      if (missing) {
        p.transitive = false;
        p.transitive_witness = {a, b, least(missing)};
      }
    }
  // A cell (a,b) with Rab is already forced; only the remaining cells need a
  // common successor to choose from. This keeps the derived groupoid total
  // and agrees with the all-pairs reading whenever R is reflexive.
  for (int a = 0; a < n && p.up_directed; ++a)
    for (int b = 0; b < n && p.up_directed; ++b)
      if (!s.related(a, b) && s.upper_bounds(a, b) == 0) {
        p.up_directed = false;
        p.up_directed_witness = {a, b};
      }
  return p;
}

inline FiniteRelationSpace reflexive_closure(const FiniteRelationSpace& s) {
  auto pairs = s.pairs();
  for (int a = 0; a < s.size(); ++a)
    if (!s.related(a, a)) pairs.emplace_back(a, a);
  return FiniteRelationSpace(s.labels(), pairs);
}

inline bool is_nbd_closed(const FiniteRelationSpace& s, Subset A) {
  bool ok = true;
  for_each_member(A, [&](int x) {
    if (!subset_of(s.pred(x), A)) ok = false;
  });
  return ok;
}

// All A whose members keep their plain neighborhoods inside A, ascending.
inline std::vector<Subset> nbd_closed_family(const FiniteRelationSpace& s,
                                             int bound = kDefaultBound) {
  require_bound(s.size(), bound, "nbd_closed_family");
  std::vector<Subset> out;
  Subset top = full_set(s.size());
  for (Subset A = 0;; ++A) {
    if (is_nbd_closed(s, A)) out.push_back(A);
    if (A == top) break;
  }
  return out;
}

struct SpaceMap {
  FiniteRelationSpace source, target;
  std::vector<int> map;  // map[i] = index in target of image of source element i

  SpaceMap(FiniteRelationSpace src, FiniteRelationSpace tgt, std::vector<int> m)
      : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    if (static_cast<int>(map.size()) != source.size())
      throw Error(Error::Kind::universe_mismatch,
                  "map length does not match source universe");
    for (int v : map)
      if (v < 0 || v >= target.size())
        throw Error(Error::Kind::unknown_label, "map value out of target range");
  }
};

enum class MorphismClass { not_morphism, morphism, strong_morphism };

struct MorphismReport {
  MorphismClass cls = MorphismClass::not_morphism;
  // For not_morphism: source pair whose image is unrelated.
  // For morphism (not strong): target pair with no preimage pair.
  std::optional<std::pair<int, int>> witness;
};

inline MorphismReport morphism_check(const SpaceMap& f) {
  MorphismReport r;
  for (int a = 0; a < f.source.size(); ++a)
    for (int b = 0; b < f.source.size(); ++b)
      if (f.source.related(a, b) && !f.target.related(f.map[a], f.map[b])) {
        r.cls = MorphismClass::not_morphism;
        r.witness = {a, b};
        return r;
      }
  r.cls = MorphismClass::strong_morphism;
  Subset image = 0;
  for (int v : f.map) image |= Subset{1} << v;
  for (int c = 0; c < f.target.size(); ++c)
    for (int e = 0; e < f.target.size(); ++e)
      if (f.target.related(c, e) && !(has(image, c) && has(image, e))) {
        r.cls = MorphismClass::morphism;
        r.witness = {c, e};
        return r;
      }
  return r;
}

// Same number of distinct plain granules on both sides.
inline bool granule_correspondence(const FiniteRelationSpace& a,
                                   const FiniteRelationSpace& b) {
  auto distinct = [](const FiniteRelationSpace& s) {
    std::vector<Subset> g;
    for (int x = 0; x < s.size(); ++x) g.push_back(s.pred(x));
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g.size();
  };
  return distinct(a) == distinct(b);
}

// "e,c" -> subset; empty string -> empty set.
inline Subset parse_elements(const FiniteRelationSpace& s, const std::string& csv) {
  Subset out = 0;
  std::string tok;
  std::istringstream in(csv);
  while (std::getline(in, tok, ',')) {
    size_t b = tok.find_first_not_of(" \t");
    size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out |= Subset{1} << s.index_of(tok.substr(b, e - b + 1));
  }
  return out;
}

inline std::string set_to_string(const FiniteRelationSpace& s, Subset A) {
  if (!A) return "{}";
  std::string out = "{";
  bool first = true;
  for_each_member(A, [&](int x) {
    if (!first) out += ",";
    out += s.label(x);
    first = false;
  });
  return out + "}";
}

}  // namespace drs
