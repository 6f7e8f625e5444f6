#pragma once

#include <string>
#include <vector>

#include "dap/transforms.hpp"

namespace dap {

// The executable theorem suite. Stable identifiers:
//   inv2.natdil  inv2.inversion  inv2.mobius
//   inv3.nattrans  inv3.natdil  inv3.inversion  inv3.mobius
//   rel.2to3
//   pres2.pproj  pres2.trans  pres2.dil
//   pres3.trans  pres3.pproj  pres3.dil
// Dilatation theorems split into center cases (center=O, on-line, off-line);
// projection theorems split into intersecting/parallel target cases.

struct TheoremRun {
  std::string id;
  std::string case_tag;  // empty when the theorem has a single case
  std::string model;
  std::string mode;  // "exhaustive" or "sampled(trials=...,seed=...)"
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::string first_counterexample;

  bool ok() const { return failures == 0; }
  std::string str() const;
};

const std::vector<std::string>& theorem_ids();
bool is_theorem_id(const std::string& id);
/// Case tags for theorems with a case split; empty otherwise.
std::vector<std::string> theorem_cases(const std::string& id);

/// Seeded randomized trials; charts, parameters and points are resampled
/// each trial. Empty case_tag on a split theorem rotates through its cases.
TheoremRun run_theorem_sampled(const std::string& id, const ModelConfig& model,
                               std::uint64_t trials, std::uint64_t seed,
                               const std::string& case_tag = "");

/// Full enumeration over the finite plane (gf, p <= 7) on the standard chart.
TheoremRun run_theorem_exhaustive(const std::string& id, const ModelConfig& model,
                                  const std::string& case_tag = "");

/// Chart O=(0,0), I=(1,0) on the x-axis.
Chart standard_chart(const ModelConfig& m);

/// The recorded witness that the suite can fail: ratio2 is not invariant
/// under natural translation. Returns the gf(7) counterexample as text and
/// checks it still disagrees; `ok` is true when the two ratio points differ.
struct NegativeControl {
  bool ok = false;
  std::string detail;
};
NegativeControl negative_control_nattrans_ratio2();

}  // namespace dap
