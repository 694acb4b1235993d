#pragma once

// Built-in fixture spaces used by tests and shipped as data/*.json.

#include "drs/groupoid.hpp"
#include "drs/relation.hpp"

namespace drs {
namespace fixtures {

// Five-element space with a rich, irreflexive, non-symmetric relation.
inline FiniteRelationSpace ex1() {
  return FiniteRelationSpace::from_labels(
      {"a", "b", "c", "e", "f"},
      {{"a", "c"}, {"a", "e"}, {"a", "f"}, {"b", "c"}, {"b", "f"},
       {"c", "a"}, {"c", "b"}, {"c", "f"}, {"e", "a"}, {"e", "b"},
       {"e", "f"}, {"f", "a"}, {"f", "b"}});
}

// ex1 without the (e,b) arrow.
inline FiniteRelationSpace ex1_raw() {
  return FiniteRelationSpace::from_labels(
      {"a", "b", "c", "e", "f"},
      {{"a", "c"}, {"a", "e"}, {"a", "f"}, {"b", "c"}, {"b", "f"},
       {"c", "a"}, {"c", "b"}, {"c", "f"}, {"e", "a"}, {"e", "f"},
       {"f", "a"}, {"f", "b"}});
}

// Two elements, reflexive, one strict arrow.
inline FiniteRelationSpace toy2() {
  return FiniteRelationSpace::from_labels({"1", "2"},
                                          {{"1", "1"}, {"2", "2"}, {"1", "2"}});
}

// Reflexive transitive three-element chain.
inline FiniteRelationSpace ch3() {
  return FiniteRelationSpace::from_labels(
      {"1", "2", "3"},
      {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "2"}, {"2", "3"}, {"1", "3"}});
}

// Two incomparable elements under a common upper bound.
inline FiniteRelationSpace fork() {
  return FiniteRelationSpace::from_labels(
      {"1", "2", "3"},
      {{"1", "1"}, {"2", "2"}, {"3", "3"}, {"1", "3"}, {"2", "3"}});
}

inline FiniteRelationSpace id2() {
  return FiniteRelationSpace::from_labels({"1", "2"}, {{"1", "1"}, {"2", "2"}});
}

inline FiniteRelationSpace id3() {
  return FiniteRelationSpace::from_labels(
      {"1", "2", "3"}, {{"1", "1"}, {"2", "2"}, {"3", "3"}});
}

// A published operation table over the ex1 universe. Deliberately kept
// verbatim: two of its cells are not realizable from ex1 and the
// realization checker is expected to flag exactly those.
inline FiniteGroupoid table1() {
  return FiniteGroupoid({"a", "b", "c", "e", "f"}, {{3, 2, 2, 3, 4},
                                                    {3, 2, 2, 3, 4},
                                                    {0, 1, 4, 4, 4},
                                                    {0, 1, 4, 4, 4},
                                                    {0, 1, 0, 0, 0}});
}

}  // namespace fixtures
}  // namespace drs
