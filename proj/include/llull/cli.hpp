#pragma once

// Command-line front end. Exit codes: 0 success, 1 failure or oracle
// disagreement, 2 malformed input or usage, 3 size cap exceeded.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "llull/ballots.hpp"
#include "llull/doctrines.hpp"
#include "llull/methods.hpp"
#include "llull/verify.hpp"

namespace llull {

enum class OutputFormat { kText, kJson };

struct RunConfig {
  MethodId method = MethodId::kTransitivity;
  TruncationMode truncation = TruncationMode::kAbstain;
  std::optional<UnaryInit> init;  // per-method default when unset
  Rational margin = 0;
  std::size_t comprehensive_cap = 12;
  OutputFormat format = OutputFormat::kText;
  ParamMap params;
  bool last_includes_unlisted = false;
  bool matrix_input = false;  // input file is a matrix JSON, not ballots
  std::uint64_t seed = 1;
};

int cmd_tally(const std::string& path, const RunConfig& config, std::ostream& out,
              std::ostream& err);
int cmd_matrix(const std::string& path, const RunConfig& config, std::ostream& out,
               std::ostream& err);
int cmd_blake(DoctrineKind kind, std::size_t n, const RunConfig& config, std::ostream& out,
              std::ostream& err);
/// `tamper` is forwarded to the oracle checks.
int cmd_verify(const std::string& path, const RunConfig& config, std::ostream& out,
               std::ostream& err, const Tamper& tamper = {});
int cmd_conjecture(const ConjectureOptions& options, OutputFormat format, std::ostream& out);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace llull
