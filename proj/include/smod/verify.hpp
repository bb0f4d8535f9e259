#pragma once

// Randomized verification campaigns: the parametric side is computed once
// and its certificate drives the sampling; every trial recomputes the
// specialized side from the substituted inputs and compares.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smod/io.hpp"

namespace smod {

struct VerifyTask {
  std::string theorem;
  std::string ring_file;
  std::vector<std::string> inputs;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  int bound = 7;
  // Every trial uses this point, certified or not.
  std::optional<SubstPoint> forced;
  bool timing = false;
  bool parallel = true;
};

struct TrialRecord {
  std::size_t index = 0;
  SubstPoint alpha;
  bool pass = false;
  std::string detail;
  // Certificate factors vanishing at alpha (empty for sampled points).
  std::vector<std::string> vanishing;
  long ms = 0;
};

struct Report {
  VerifyTask task;
  std::vector<std::string> cert_factors;
  std::vector<TrialRecord> trials;
  std::size_t passed = 0;
  std::size_t failed = 0;

  std::string to_json() const;
};

const std::vector<std::string>& theorem_ids();

// What a theorem expects in Inputs, e.g. "module, ideal".
std::string theorem_inputs(const std::string& theorem);

// Throws Error for an unknown theorem or missing inputs; failures inside a
// trial are recorded.
Report run_verification(const VerifyTask& task, const Inputs& in);

}  // namespace smod
