#pragma once

// Claim audit plumbing: a claim is a law checked over finite sweeps, reported
// with a verdict and, on failure, a re-checkable witness. Sweeps run in
// canonical order (spaces in list order, subsets ascending), so the first
// witness found is deterministic.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "drs/core.hpp"
#include "drs/relation.hpp"

namespace drs {

enum class Verdict { holds, fails };
enum class Expect { hold, fail, open };
enum class AuditMode { exhaustive, sampled };

struct Witness {
  FiniteRelationSpace space;
  std::vector<Subset> sets;  // the violating tuple, in claim-argument order
  std::string detail;        // human-readable explanation with values
};

struct ClaimReport {
  std::string claim;
  std::string hypothesis;  // profile under which the law is asserted
  Expect expect = Expect::open;
  Verdict verdict = Verdict::holds;
  std::optional<Witness> witness;
  std::uint64_t sweep_size = 0;  // tuples actually checked
  std::optional<std::uint64_t> seed;  // present for sampled sweeps
  std::string note;  // skips, bound issues, extra context
};

struct AuditOptions {
  AuditMode mode = AuditMode::exhaustive;
  std::uint64_t seed = 0;
  int samples = 512;        // per space, sampled mode
  int bound = kDefaultBound;  // powerset sweep bound
  std::uint64_t groupoid_limit = 200;  // cap for per-space groupoid families
};

using SpaceFamily = std::vector<FiniteRelationSpace>;

struct ClaimSpec {
  std::string id;
  std::string module;
  std::string hypothesis;
  Expect expect = Expect::open;
  std::string summary;
  std::function<ClaimReport(const SpaceFamily&, const AuditOptions&)> run;
};

namespace detail {

inline ClaimReport report_skeleton(const ClaimSpec& c, const AuditOptions& opts) {
  ClaimReport r;
  r.claim = c.id;
  r.hypothesis = c.hypothesis;
  r.expect = c.expect;
  if (opts.mode == AuditMode::sampled) r.seed = opts.seed;
  return r;
}

}  // namespace detail

// A subset-tuple check: returns true if the law holds at this tuple, otherwise
// fills `detail` with an explanation.
using TupleCheck = std::function<bool(const FiniteRelationSpace&,
                                      const std::vector<Subset>&,
                                      std::string& detail)>;

// Sweeps `arity`-tuples of subsets over each space. Spaces above the bound are
// skipped with a note. Exhaustive mode walks tuples in ascending odometer
// order; sampled mode draws them from a seeded generator.
inline ClaimReport sweep_subsets(const ClaimSpec& c, const SpaceFamily& spaces,
                                 const AuditOptions& opts, int arity,
                                 const TupleCheck& check) {
  ClaimReport r = detail::report_skeleton(c, opts);
  std::mt19937_64 rng(opts.seed);
  for (const auto& s : spaces) {
    if (s.size() > opts.bound) {
      r.note += "skipped space |S|=" + std::to_string(s.size()) + " over bound; ";
      continue;
    }
    Subset top = full_set(s.size());
    std::vector<Subset> tuple(arity, 0);
    auto run_one = [&]() -> bool {  // false = stop (witness found)
      std::string detail;
      ++r.sweep_size;
      if (!check(s, tuple, detail)) {
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
        // odometer increment
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

// Convenience for claims checked once per space (no subset arguments).
inline ClaimReport sweep_spaces(const ClaimSpec& c, const SpaceFamily& spaces,
                                const AuditOptions& opts,
                                const TupleCheck& check) {
  return sweep_subsets(c, spaces, opts, 0, check);
}

}  // namespace drs
