#pragma once

// Unified claim registry: every module's claims under one roof, in canonical
// id order, plus per-space groupoid audits wrapped as family-level claims.

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "drs/approx_claims.hpp"
#include "drs/claim.hpp"
#include "drs/groupoid.hpp"
#include "drs/imgalg_claims.hpp"
#include "drs/latfca.hpp"
#include "drs/powgrp.hpp"
#include "drs/quotient.hpp"

namespace drs {

namespace audit_detail {

// Runs a per-space audit over the family and merges the reports that carry
// the wanted claim id: sweep sizes add up, the first failure wins.
inline ClaimReport merge_per_space(
    const ClaimSpec& c, const SpaceFamily& spaces, const AuditOptions& opts,
    const std::function<std::vector<ClaimReport>(const FiniteRelationSpace&,
                                                 std::string& note)>& runner) {
  ClaimReport r = detail::report_skeleton(c, opts);
  for (const auto& s : spaces) {
    std::string skip;
    auto reports = runner(s, skip);
    if (!skip.empty()) {
      r.note += skip;
      continue;
    }
    for (auto& rep : reports) {
      if (rep.claim != c.id) continue;
      r.sweep_size += rep.sweep_size;
      if (!rep.note.empty() && r.note.find(rep.note + "; ") == std::string::npos)
        r.note += rep.note + "; ";
      if (rep.verdict == Verdict::fails && r.verdict == Verdict::holds) {
        r.verdict = Verdict::fails;
        r.witness = rep.witness;
      }
    }
  }
  return r;
}

}  // namespace audit_detail

// The relation-to-groupoid property bridge and the two-branch groupoid laws,
// reshaped as registry claims. Spaces that do not fit the hypothesis are
// skipped with a note, mirroring the bound skips elsewhere.
inline std::vector<ClaimSpec> magma_claims() {
  std::vector<ClaimSpec> out;

  struct BridgeItem {
    const char* id;
    const char* summary;
  };
  const std::array<BridgeItem, 6> bridge = {{
      {"mg-refl-iff-idem", "reflexivity matches aa = a"},
      {"mg-sym-iff-fold", "symmetry matches (ab)a = a"},
      {"mg-trans-iff-absorb", "transitivity matches a((ab)c) = (ab)c"},
      {"mg-comm-antisym", "ab = ba forces antisymmetry"},
      {"mg-fold-antisym", "(ab)a = ab forces antisymmetry"},
      {"mg-assoc-trans", "associativity forces transitivity"},
  }};
  for (const auto& item : bridge) {
    ClaimSpec c;
    c.id = item.id;
    c.module = "magma";
    c.hypothesis = "space admits derived groupoids";
    c.expect = Expect::hold;
    c.summary = item.summary;
    std::string id = item.id;
    c.run = [id](const SpaceFamily& spaces,
                 const AuditOptions& opts) -> ClaimReport {
      ClaimSpec probe;
      probe.id = id;
      probe.hypothesis = "space admits derived groupoids";
      probe.expect = Expect::hold;
      return audit_detail::merge_per_space(
          probe, spaces, opts,
          [&opts](const FiniteRelationSpace& s, std::string& note) {
            try {
              return bridge_audit(s, opts.groupoid_limit);
            } catch (const Error& e) {
              if (e.kind() != Error::Kind::not_up_directed) throw;
              note = "skipped space without the derived groupoid; ";
              return std::vector<ClaimReport>{};
            }
          });
    };
    out.push_back(std::move(c));
  }

  struct PkItem {
    const char* id;
    const char* summary;
    Expect expect;
  };
  const std::array<PkItem, 20> pk = {{
      {"mg-pk-e1", "two-branch groupoid satisfies xx = x", Expect::hold},
      {"mg-pk-e2", "two-branch groupoid satisfies x(az) = (xa)(xz)",
       Expect::hold},
      {"mg-pk-e3", "two-branch groupoid satisfies xax = x", Expect::hold},
      {"mg-pk-e4", "two-branch groupoid satisfies azxauz = auz", Expect::hold},
      {"mg-pk-e5", "two-branch groupoid satisfies u(azxa)z = uaz",
       Expect::hold},
      {"mg-pk-c1", "consequence x(ax) = x", Expect::hold},
      {"mg-pk-c2", "consequence x(xa) = xa", Expect::hold},
      {"mg-pk-c3", "consequence (xa)a = xa", Expect::hold},
      {"mg-pk-c4", "consequence x(xaz) = x(az)", Expect::hold},
      {"mg-pk-c5", "consequence (xz)(az) = xz", Expect::hold},
      {"mg-pk-c6", "consequence (xa)(zx) = xazx", Expect::hold},
      {"mg-pk-c7", "consequence xazxa = xa", Expect::hold},
      {"mg-pk-c8", "consequence xazaz = xaz", Expect::hold},
      {"mg-pk-c9", "seven-letter form xcazaxa = xaza as published",
       Expect::open},
      {"mg-pk-c9adj", "consequence xazaxa = xaza", Expect::hold},
      {"mg-pk-c10", "consequence (xazx)(za) = x(za)", Expect::hold},
      {"mg-pk-c11", "consequence x(az)a = xaza", Expect::hold},
      {"mg-pk-c12", "consequence (xaz)(ax) = (xza)(zx)", Expect::hold},
      {"mg-pk-c13", "consequence xazxz = xzaz", Expect::hold},
      {"mg-pk-cancel", "left cancellability of e matches xe = e for all x",
       Expect::hold},
  }};
  for (const auto& item : pk) {
    ClaimSpec c;
    c.id = item.id;
    c.module = "magma";
    c.hypothesis = "relation is an equivalence";
    c.expect = item.expect;
    c.summary = item.summary;
    std::string id = item.id;
    Expect expect = item.expect;
    c.run = [id, expect](const SpaceFamily& spaces,
                         const AuditOptions& opts) -> ClaimReport {
      ClaimSpec probe;
      probe.id = id;
      probe.hypothesis = "relation is an equivalence";
      probe.expect = expect;
      return audit_detail::merge_per_space(
          probe, spaces, opts,
          [](const FiniteRelationSpace& s, std::string& note) {
            auto p = classify(s);
            if (!(p.reflexive && p.symmetric && p.transitive)) {
              note = "skipped space that is not an equivalence; ";
              return std::vector<ClaimReport>{};
            }
            return pawlak_audit(s);
          });
    };
    out.push_back(std::move(c));
  }

  return out;
}

// Whether a space satisfies a claim's declared hypothesis. Unknown wording
// admits everything, so new hypotheses fail open rather than silently
// emptying a sweep.
inline bool hypothesis_admits(const std::string& hypothesis,
                              const FiniteRelationSpace& s) {
  auto p = classify(s);
  if (hypothesis == "up-directed") return p.up_directed;
  if (hypothesis == "reflexive up-directed") return p.reflexive && p.up_directed;
  if (hypothesis == "reflexive") return p.reflexive;
  if (hypothesis == "reflexive antisymmetric")
    return p.reflexive && p.antisymmetric;
  if (hypothesis == "space admits derived groupoids") return p.up_directed;
  if (hypothesis == "relation is an equivalence")
    return p.reflexive && p.symmetric && p.transitive;
  return true;
}

// Every registered claim, sorted by id. Ids are unique across modules.
inline std::vector<ClaimSpec> all_claims() {
  std::vector<ClaimSpec> out;
  auto take = [&out](std::vector<ClaimSpec> v) {
    for (auto& c : v) out.push_back(std::move(c));
  };
  take(approx_claims());
  take(magma_claims());
  take(image_algebra_claims());
  take(powgrp_claims());
  take(quotient_claims());
  take(latfca_claims());
  std::sort(out.begin(), out.end(),
            [](const ClaimSpec& a, const ClaimSpec& b) { return a.id < b.id; });
  return out;
}

// Runs the selected claims (all of them when `ids` is empty) over the family.
// Each claim sees only the spaces matching its hypothesis; exclusions are
// noted. Reports come back in canonical id order no matter how ids were
// passed.
inline std::vector<ClaimReport> run_audit(const std::vector<std::string>& ids,
                                          const SpaceFamily& spaces,
                                          const AuditOptions& opts = {}) {
  auto registry = all_claims();
  std::vector<const ClaimSpec*> picked;
  if (ids.empty()) {
    for (const auto& c : registry) picked.push_back(&c);
  } else {
    for (const auto& id : ids) {
      auto it = std::find_if(registry.begin(), registry.end(),
                             [&id](const ClaimSpec& c) { return c.id == id; });
      if (it == registry.end())
        throw Error(Error::Kind::unknown_claim, "unknown claim id: " + id);
      picked.push_back(&*it);
    }
    std::sort(picked.begin(), picked.end(),
              [](const ClaimSpec* a, const ClaimSpec* b) { return a->id < b->id; });
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  }
  std::vector<ClaimReport> out;
  out.reserve(picked.size());
  for (const ClaimSpec* c : picked) {
    SpaceFamily kept;
    for (const auto& s : spaces)
      if (hypothesis_admits(c->hypothesis, s)) kept.push_back(s);
    ClaimReport rep = c->run(kept, opts);
    if (kept.size() < spaces.size())
      rep.note = "hypothesis excluded " +
                 std::to_string(spaces.size() - kept.size()) + " of " +
                 std::to_string(spaces.size()) + " spaces; " + rep.note;
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace drs
