#pragma once

// Winner extraction for the eleven methods, their closed-form valuations,
// and set-valued diagnostics on a Llull matrix.

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "llull/ballots.hpp"
#include "llull/belief.hpp"
#include "llull/doctrines.hpp"

namespace llull {

using OptionSet = std::vector<std::size_t>;  // sorted option indices
using RationalTable = std::vector<std::vector<Rational>>;

enum class MethodId {
  kTransitivity,
  kMinimax,
  kPlurality,
  kMaximin,
  kSymmetricProminence,
  kComprehensiveProminence,
  kRefinedComprehensiveProminence,
  kGoodness,
  kCav,
  kApproval,
  kPav,
};

std::string_view to_string(MethodId id);
MethodId parse_method_id(std::string_view name);
const std::vector<MethodId>& all_methods();

DoctrineKind doctrine_of(MethodId id);
UnaryInit default_init(MethodId id);
bool init_allowed(MethodId id, UnaryInit init);
/// Whether the method reads ballot scores beyond the Llull matrix.
bool needs_scores(MethodId id, UnaryInit init);

struct RowColStats {
  std::vector<Rational> minrow;  // m_x  = min_{y != x} v(p_xy)
  std::vector<Rational> maxcol;  // M_x  = max_{y != x} v(p_yx)
  std::vector<Rational> mincol;  // m'_x = min_{y != x} v(p_yx)
  RationalTable minrw;           // m_xy = min_{z not in {x,y}} v(p_xz), 1 when empty
};

RowColStats row_col_stats(const LlullMatrix& m);

/// Strongest simple-path value x -> y (max over paths of the min edge).
/// Diagonal entries are 0.
RationalTable paths_closure(const LlullMatrix& m);

/// Layers of options ordered by the accepted p(x,y) literals: each layer
/// holds the options with no accepted predecessor among the remaining ones.
/// Throws InternalError on a cycle.
std::vector<OptionSet> ranking_from_decision(const OptionLiterals& literals,
                                             const Decision& decision);

struct ScoredWinners {
  OptionSet winners;
  std::vector<Rational> scores;
};

/// Exact argmax; equal maxima co-win.
OptionSet argmax(const std::vector<Rational>& values);
OptionSet argmin(const std::vector<Rational>& values);

OptionSet minimax_winners(const LlullMatrix& m);
OptionSet plurality_winners(const ScoreVectors& s);
OptionSet maximin_winners(const LlullMatrix& m);
ScoredWinners symmetric_prominence_winners(const LlullMatrix& m);

OptionSet smith_set(const LlullMatrix& m);

struct MaximinSets {
  std::vector<OptionSet> sets;
  Rational sigma;
};

/// All proper non-empty subsets X maximizing min_{r in X, s not in X} v(p_rs).
MaximinSets maximin_sets(const LlullMatrix& m, std::size_t cap = 12);

struct CondorcetReport {
  std::optional<std::size_t> winner;         // v(p_xy) > 1/2 for all y
  std::optional<std::size_t> margin_winner;  // v(p_xy) > v(p_yx) for all y
  std::optional<std::size_t> loser;          // v(p_yx) > 1/2 for all y
};

CondorcetReport condorcet_diagnostics(const LlullMatrix& m);

OptionSet pav_winner(const LlullMatrix& m, const ScoreVectors& s);

// Closed-form revised valuations. Each equals the fixed point of the
// generic engine on the matching doctrine and initialization.
Valuation transitivity_closed_form(const OptionLiterals& literals, const LlullMatrix& m);
/// `init` is kZero (minimax) or kPlurality.
Valuation supremacy_closed_form(const OptionLiterals& literals, const LlullMatrix& m,
                                const ScoreVectors* s, UnaryInit init);
Valuation maximin_closed_form(const OptionLiterals& literals, const LlullMatrix& m);
Valuation symmetric_prominence_closed_form(const OptionLiterals& literals, const LlullMatrix& m);
/// Unary values come from approval/disapproval, or zero when `s` is null.
Valuation goodness_closed_form(const OptionLiterals& literals, const LlullMatrix& m,
                               const ScoreVectors* s);

struct RefinementRound {
  OptionSet options;
  OptionSet winners;
  std::vector<Rational> not_prominent;  // indexed like `options`
};

struct MethodOptions {
  UnaryInit init = UnaryInit::kZero;
  Rational margin = 0;
  std::size_t comprehensive_cap = 12;
  /// Run the generic fixed-point engine instead of a closed form.
  bool force_engine = false;
};

struct MethodResult {
  MethodId method = MethodId::kTransitivity;
  UnaryInit init = UnaryInit::kZero;
  std::vector<std::string> options;
  OptionSet winners;
  std::shared_ptr<const OptionLiterals> literals;
  std::optional<Valuation> revised;
  /// Per option; empty for transitivity.
  std::vector<Rational> acceptabilities;
  std::optional<Decision> decision;
  /// Transitivity only.
  std::vector<OptionSet> ranking;

  struct Diagnostics {
    OptionSet smith_set;
    std::optional<MaximinSets> maximin;
    std::vector<RefinementRound> rounds;
    CondorcetReport condorcet;
    /// Option settled by the one-step uniqueness test, comprehensive only.
    std::optional<std::size_t> one_step_winner;
  } diagnostics;
};

/// `scores` is required when needs_scores(id, options.init).
/// Throws ConfigError on an incompatible initialization, SizeError past caps.
MethodResult run_method(MethodId id, const LlullMatrix& m, const ScoreVectors* scores,
                        const MethodOptions& options = {});

/// Fixed point of the generic engine on build_doctrine(kind) from
/// initial_valuation; comprehensive prominence goes through the subset
/// kernel.
Valuation engine_revise(DoctrineKind kind, const OptionLiterals& literals, const LlullMatrix& m,
                        const ScoreVectors* scores, UnaryInit init, std::size_t cap = 12);

}  // namespace llull
