#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uhg/field.hpp"

namespace uhg {

// Tally of one property-check run.  Failures carry a reproducible witness:
// the generated configuration plus the violated equality.
struct CheckReport {
  std::string theorem;
  std::string field;
  std::uint64_t seed = 0;
  int trials = 0;
  int passes = 0;
  int skips = 0;
  int failures = 0;
  std::vector<std::string> witnesses;

  bool ok() const { return failures == 0; }
  std::string summary_line() const;  // theorem, trials, passes, skips, failures; tab separated
  std::string str() const;           // summary line plus witness blocks
};

std::vector<std::string> theorem_ids();
bool has_theorem(const std::string& id);

// Evaluates `trials` independently seeded configurations of the named
// theorem.  Degenerate configurations are skipped; equalities are compared
// exactly, never approximately.  Reports are bit-identical for identical
// (id, trials, seed, ctx) regardless of scheduling.  Errors: UnknownTheorem.
CheckReport run_check(const std::string& id, int trials, std::uint64_t seed, const FieldCtx& ctx);

}  // namespace uhg
