#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace drs {

// Subsets of a universe of at most 16 elements, one bit per element.
using Subset = std::uint32_t;

inline constexpr int kMaxUniverse = 16;
// Powerset sweeps refuse universes larger than this unless a caller widens it.
inline constexpr int kDefaultBound = 12;

inline Subset bit(int x) { return Subset{1} << x; }
inline int card(Subset s) { return std::popcount(s); }
inline bool has(Subset s, int x) { return (s >> x) & 1u; }
inline Subset full_set(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }
inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }

// Least element of a nonempty subset.
inline int least(Subset s) { return std::countr_zero(s); }

template <class F>
void for_each_member(Subset s, F&& f) {
  while (s) {
    int x = std::countr_zero(s);
    f(x);
    s &= s - 1;
  }
}

inline std::vector<int> members(Subset s) {
  std::vector<int> out;
  for_each_member(s, [&](int x) { out.push_back(x); });
  return out;
}

class Error : public std::runtime_error {
 public:
  enum class Kind {
    unknown_label,
    duplicate_pair,
    malformed_document,
    bound_exceeded,
    not_up_directed,
    precondition,
    universe_mismatch,
    unknown_claim,
    malformed_term,
    unbound_variable,
    not_a_lattice,
    overflow,
  };

  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline void require_bound(int n, int bound, const std::string& what) {
  if (n > bound)
    throw Error(Error::Kind::bound_exceeded,
                what + ": universe size " + std::to_string(n) +
                    " exceeds bound " + std::to_string(bound));
}

}  // namespace drs
