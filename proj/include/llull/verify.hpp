#pragma once

// Cross-checks between closed forms, the generic fixed-point engine and the
// Blake canonical forms, plus the randomized inclusion experiment.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "llull/ballots.hpp"
#include "llull/rational.hpp"

namespace llull {

struct OracleCheck {
  std::string name;
  bool agree = true;
  std::string detail;  // first disagreement, empty when agreeing
};

struct OracleReport {
  std::vector<OracleCheck> checks;
  bool all_agree() const;
};

/// Called on the fast-path side of every comparison before it is made;
/// lets tests inject faults.
using Tamper = std::function<void(std::string_view check, std::vector<Rational>& values)>;

struct VerifyOptions {
  std::size_t comprehensive_cap = 12;
  /// Blake-form comparisons and the materialized comprehensive doctrine
  /// run only up to this many options.
  std::size_t blake_max_options = 4;
  Tamper tamper;
};

/// `scores` may be null; checks that need ballot data are then skipped.
OracleReport verify_matrix(const LlullMatrix& m, const ScoreVectors* scores,
                           const VerifyOptions& options = {});

std::string report_to_text(const OracleReport& r);
nlohmann::json report_to_json(const OracleReport& r);

struct ConjectureOptions {
  std::size_t trials = 1000;
  std::size_t options = 4;
  bool complete = true;
  std::uint64_t seed = 1;
  std::size_t max_ballots = 9;
  int max_weight = 3;
};

struct ConjectureReport {
  ConjectureOptions config;
  std::size_t counterexamples = 0;
  /// Ballot text of the first counterexample.
  std::optional<std::string> first_counterexample;
};

/// Counts random profiles whose transitivity winners are not all refined
/// comprehensive prominence winners. Reports, never fails.
ConjectureReport run_conjecture_experiment(const ConjectureOptions& options);

std::string conjecture_to_text(const ConjectureReport& r);
nlohmann::json conjecture_to_json(const ConjectureReport& r);

}  // namespace llull
