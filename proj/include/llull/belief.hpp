#pragma once

// Propositional machinery shared by every doctrine: literals, valuations,
// clauses, the max-min one-step revision and its fixed point, and margin
// decisions.
//
// All operations are pure functions of immutable inputs.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "llull/rational.hpp"

namespace llull {

struct Literal {
  std::uint32_t id = 0;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Finite set of literals closed under an involutive negation. Literals are
/// allocated in complementary pairs, so neg(l) != l always holds.
class LiteralUniverse {
 public:
  /// Adds a complementary pair and returns the first member.
  Literal add_pair(std::string label, std::string negated_label);

  std::size_t size() const { return labels_.size(); }
  bool contains(Literal l) const { return l.id < labels_.size(); }
  Literal negation(Literal l) const { return Literal{l.id ^ 1u}; }
  const std::string& label(Literal l) const { return labels_.at(l.id); }
  std::optional<Literal> find(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

using UniversePtr = std::shared_ptr<const LiteralUniverse>;

/// Degree-of-belief map from a universe into [0,1]. Immutable; the
/// modifiers return new valuations.
class Valuation {
 public:
  explicit Valuation(UniversePtr universe);  // all zero
  Valuation(UniversePtr universe, std::vector<Rational> values);

  const Rational& operator[](Literal l) const { return values_.at(l.id); }
  std::span<const Rational> values() const { return values_; }
  const LiteralUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  Valuation with(Literal l, Rational value) const;

  bool is_balanced() const;
  /// Pointwise v <= w. Both must share the universe.
  bool leq(const Valuation& other) const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.universe_ == b.universe_ && a.values_ == b.values_;
  }

 private:
  UniversePtr universe_;
  std::vector<Rational> values_;
};

/// Non-empty set of literals, kept sorted by id.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals)
      : Clause(std::vector<Literal>(literals)) {}

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool contains(Literal l) const;
  /// True when every literal of this clause is in `other`.
  bool subset_of(const Clause& other) const;

  friend auto operator<=>(const Clause& a, const Clause& b) {
    if (auto c = a.literals_.size() <=> b.literals_.size(); c != 0) return c;
    return a.literals_ <=> b.literals_;
  }
  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  std::vector<Literal> literals_;
};

/// Clause set over a universe. Tertium-non-datur clauses {l, ~l} are always
/// materialized; unit clauses are refused and so is any clause holding a
/// complementary pair besides the tertium-non-datur clauses themselves.
class Doctrine {
 public:
  Doctrine(UniversePtr universe, std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const LiteralUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

  bool is_tertium(const Clause& c) const;
  /// Indices into clauses() of the clauses containing `l`.
  std::span<const std::uint32_t> clauses_with(Literal l) const {
    return occurrences_.at(l.id);
  }
  /// Clauses other than tertium-non-datur.
  std::vector<Clause> proper_clauses() const;

 private:
  UniversePtr universe_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<std::uint32_t>> occurrences_;
};

enum class Verdict { kAccepted, kRejected, kUndecided };

/// Tri-state decision of a given margin. l is accepted exactly when ~l is
/// rejected, and undecided together with ~l.
class Decision {
 public:
  Decision(UniversePtr universe, std::vector<Verdict> states, Rational margin);

  Verdict operator[](Literal l) const { return states_.at(l.id); }
  const Rational& margin() const { return margin_; }
  const LiteralUniverse& universe() const { return *universe_; }
  const UniversePtr& universe_ptr() const { return universe_; }

 private:
  UniversePtr universe_;
  std::vector<Verdict> states_;
  Rational margin_;
};

/// v'_l = max over clauses C containing l of min over q in C\{l} of v_{~q}.
Valuation one_step_revise(const Valuation& v, const Doctrine& d);

/// Least fixed point of one_step_revise above v, computed with the
/// accelerated recurrence that keeps the original v_l in the outer max.
Valuation upper_revise(const Valuation& v, const Doctrine& d);

/// Plain iteration of one_step_revise until stable; the reference the
/// accelerated recurrence is checked against.
Valuation upper_revise_naive(const Valuation& v, const Doctrine& d);

/// Throws std::invalid_argument unless 0 <= margin <= 1.
Decision decide(const Valuation& v, const Rational& margin);

/// v_l - v_{~l}.
Rational acceptability(const Valuation& v, Literal l);

/// Every clause holds an accepted literal or at least two undecided ones.
bool is_definitely_consistent(const Decision& dec, const Doctrine& d);

}  // namespace llull
