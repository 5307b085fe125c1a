#pragma once

// Clause sets of the six preference doctrines and their initial valuations.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "llull/ballots.hpp"
#include "llull/belief.hpp"

namespace llull {

enum class DoctrineKind {
  kTransitivity,
  kSupremacy,
  kProminence,  // clauses "best implies prominent" only; yields maximin
  kSymmetricProminence,
  kComprehensiveProminence,
  kGoodness,
};

std::string_view to_string(DoctrineKind kind);
/// Accepts the kebab-case names used by to_string.
DoctrineKind parse_doctrine_kind(std::string_view name);
/// Letter of the per-option proposition ('s', 't', 'g'), or '\0'.
char unary_symbol(DoctrineKind kind);

/// Literal layout over N options: p(x,y) for x != y, with ~p(x,y) = p(y,x),
/// plus one unary proposition per option and its negation when the doctrine
/// has one.
class OptionLiterals {
 public:
  OptionLiterals(std::vector<std::string> options, char unary);

  std::size_t size() const { return options_.size(); }
  const std::vector<std::string>& options() const { return options_; }
  char unary() const { return unary_; }
  bool has_unary() const { return unary_ != '\0'; }
  const UniversePtr& universe() const { return universe_; }

  Literal pref(std::size_t x, std::size_t y) const;
  Literal unary_pos(std::size_t x) const;
  Literal unary_neg(std::size_t x) const;

 private:
  std::vector<std::string> options_;
  char unary_;
  UniversePtr universe_;
  std::vector<Literal> pref_;  // row-major, diagonal unused
  std::vector<Literal> unary_pos_;
};

/// "a", "b", ... "z", then "o26", "o27", ...
std::vector<std::string> default_option_names(std::size_t n);

OptionLiterals make_option_literals(DoctrineKind kind, std::vector<std::string> options);

struct DoctrineLimits {
  std::size_t comprehensive_cap = 12;
};

/// Materialized clause set (plus tertium non datur). For a single option
/// every doctrine degenerates to tertium non datur: the would-be unit
/// clauses are dropped. Throws SizeError past the comprehensive cap.
Doctrine build_doctrine(DoctrineKind kind, const OptionLiterals& literals,
                        const DoctrineLimits& limits = {});

enum class UnaryInit { kZero, kPlurality, kPluralityAndLast, kApproval };

std::string_view to_string(UnaryInit init);
UnaryInit parse_unary_init(std::string_view name);

/// Preference literals from the Llull matrix; unary literals per `init`:
///   kZero             -> 0, 0
///   kPlurality        -> f_x, antiplurality_x
///   kPluralityAndLast -> f_x, last_x
///   kApproval         -> approval_x, disapproval_x
/// Throws ConfigError when `init` needs scores and none are given.
Valuation initial_valuation(const OptionLiterals& literals, const LlullMatrix& llull,
                            const ScoreVectors* scores, UnaryInit init);

}  // namespace llull
