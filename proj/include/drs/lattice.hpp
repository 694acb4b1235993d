#pragma once

// Finite lattices of subsets under inclusion, built from an explicit element
// family. Construction verifies that every pair has a unique least upper and
// greatest lower bound inside the family and freezes both into index tables;
// anything short of that is rejected. On top of the tables: completely
// join-irreducible elements, spatiality, and a witnessed distributivity
// check in both the meet-over-join and join-over-meet forms.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drs/core.hpp"

namespace drs {

class FiniteLattice {
 public:
  // Sorts and dedupes the family, then verifies the lattice property. Throws
  // Error(not_a_lattice) when the family is empty or some pair lacks a unique
  // least upper or greatest lower bound within the family.
  static FiniteLattice from_family(std::vector<Subset> family) {
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    if (family.empty())
      throw Error(Error::Kind::not_a_lattice, "empty element family");
    FiniteLattice lat;
    lat.elems_ = std::move(family);
    int n = lat.size();
    lat.join_.assign(n * n, -1);
    lat.meet_.assign(n * n, -1);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        int jo = bound_index(lat.elems_, i, j, true);
        int me = bound_index(lat.elems_, i, j, false);
        if (jo < 0 || me < 0)
          throw Error(Error::Kind::not_a_lattice,
                      "family has no " +
                          std::string(jo < 0 ? "least upper" : "greatest lower") +
                          " bound for the pair at indices " + std::to_string(i) +
                          "," + std::to_string(j));
        lat.join_[i * n + j] = lat.join_[j * n + i] = jo;
        lat.meet_[i * n + j] = lat.meet_[j * n + i] = me;
      }
    return lat;
  }

  int size() const { return (int)elems_.size(); }
  const std::vector<Subset>& elements() const { return elems_; }
  Subset element(int i) const { return elems_[i]; }
  int index_of(Subset v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v)
      throw Error(Error::Kind::precondition,
                  "value is not an element of the lattice");
    return (int)(it - elems_.begin());
  }
  bool contains(Subset v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  int join(int i, int j) const { return join_[i * size() + j]; }
  int meet(int i, int j) const { return meet_[i * size() + j]; }
  Subset join_v(Subset a, Subset b) const {
    return elems_[join(index_of(a), index_of(b))];
  }
  Subset meet_v(Subset a, Subset b) const {
    return elems_[meet(index_of(a), index_of(b))];
  }
  bool leq(int i, int j) const { return subset_of(elems_[i], elems_[j]); }

  // For a valid family the global extremes sit at the ends of the sorted
  // order, since inclusion implies numeric order on subset masks.
  int bottom_index() const { return 0; }
  int top_index() const { return size() - 1; }
  Subset bottom() const { return elems_.front(); }
  Subset top() const { return elems_.back(); }

 private:
  // Least upper (want_upper) or greatest lower bound of the pair inside the
  // family; -1 when no bound dominates all the others. Climb greedily, then
  // verify the survivor against every candidate.
  static int bound_index(const std::vector<Subset>& fam, int i, int j,
                         bool want_upper) {
    auto is_bound = [&](int k) {
      return want_upper ? (subset_of(fam[i], fam[k]) &&
                           subset_of(fam[j], fam[k]))
                        : (subset_of(fam[k], fam[i]) &&
                           subset_of(fam[k], fam[j]));
    };
    int best = -1;
    for (int k = 0; k < (int)fam.size(); ++k) {
      if (!is_bound(k)) continue;
      if (best < 0 || (want_upper ? subset_of(fam[k], fam[best])
                                  : subset_of(fam[best], fam[k])))
        best = k;
    }
    if (best < 0) return -1;
    for (int k = 0; k < (int)fam.size(); ++k) {
      if (!is_bound(k)) continue;
      bool under = want_upper ? subset_of(fam[best], fam[k])
                              : subset_of(fam[k], fam[best]);
      if (!under) return -1;
    }
    return best;
  }

  std::vector<Subset> elems_;
  std::vector<int> join_, meet_;
};

// Completely join-irreducible elements: those that differ from the join of
// everything strictly below them. The bottom never qualifies.
inline std::vector<Subset> cji(const FiniteLattice& lat) {
  std::vector<Subset> out;
  for (int i = 0; i < lat.size(); ++i) {
    int acc = lat.bottom_index();
    for (int j = 0; j < lat.size(); ++j)
      if (j != i && lat.leq(j, i)) acc = lat.join(acc, j);
    if (acc != i) out.push_back(lat.element(i));
  }
  return out;
}

// A lattice is spatial when every element is the join of the completely
// join-irreducible elements below it.
inline bool is_spatial(const FiniteLattice& lat) {
  std::vector<bool> irr(lat.size(), false);
  for (Subset v : cji(lat)) irr[lat.index_of(v)] = true;
  for (int i = 0; i < lat.size(); ++i) {
    int acc = lat.bottom_index();
    for (int j = 0; j < lat.size(); ++j)
      if (irr[j] && lat.leq(j, i)) acc = lat.join(acc, j);
    if (acc != i) return false;
  }
  return true;
}

struct DistributivityReport {
  bool distributive = true;
  // first failing triple (x, y, z) in ascending element order
  std::optional<std::array<Subset, 3>> witness;
};

// Meet-over-join form: x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) over all triples.
// On a finite lattice this settles complete distributivity as well.
inline DistributivityReport is_completely_distributive(const FiniteLattice& lat) {
  DistributivityReport rep;
  int n = lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (lat.meet(x, lat.join(y, z)) !=
            lat.join(lat.meet(x, y), lat.meet(x, z))) {
          rep.distributive = false;
          rep.witness = {lat.element(x), lat.element(y), lat.element(z)};
          return rep;
        }
  return rep;
}

// Join-over-meet form: x ∨ (y ∧ z) = (x ∨ y) ∧ (x ∨ z). Equivalent to the
// other form on any lattice; kept separate so the equivalence is auditable.
inline DistributivityReport distributive_dual(const FiniteLattice& lat) {
  DistributivityReport rep;
  int n = lat.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (lat.join(x, lat.meet(y, z)) !=
            lat.meet(lat.join(x, y), lat.join(x, z))) {
          rep.distributive = false;
          rep.witness = {lat.element(x), lat.element(y), lat.element(z)};
          return rep;
        }
  return rep;
}

// Covering pairs (i, j): element i sits strictly below j with nothing in
// between. This is the transitive reduction used for Hasse diagrams.
inline std::vector<std::pair<int, int>> covers(const FiniteLattice& lat) {
  std::vector<std::pair<int, int>> out;
  int n = lat.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !lat.leq(i, j)) continue;
      bool mid = false;
      for (int k = 0; k < n && !mid; ++k)
        if (k != i && k != j && lat.leq(i, k) && lat.leq(k, j)) mid = true;
      if (!mid) out.push_back({i, j});
    }
  return out;
}

}  // namespace drs
