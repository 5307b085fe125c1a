#pragma once

// Blake canonical form by resolution and absorption, and the numerical
// unquestionability check built on it.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "llull/belief.hpp"

namespace llull {

struct ResolutionTrace {
  Literal pivot;
  std::pair<Clause, Clause> parents;
  Clause resolvent;
};

struct BlakeLimits {
  std::size_t max_literals = 30;  // hard ceiling 64 (one bit per literal)
  std::size_t max_clauses = 200000;
};

/// (c1 \ {pivot}) U (c2 \ {~pivot}), or nothing when that is tautological.
/// Throws std::invalid_argument unless pivot is in c1 and ~pivot in c2.
std::optional<Clause> resolve(const LiteralUniverse& universe, const Clause& c1,
                              const Clause& c2, Literal pivot);

/// All prime clauses of `d`, plus tertium non datur. Saturates in
/// breadth-first rounds; each round's resolvents are absorbed against the
/// whole set before the next. When `trace` is given, every resolvent kept
/// at the end of its round is recorded. Throws SizeError past the limits.
Doctrine blake_canonical_form(const Doctrine& d, const BlakeLimits& limits = {},
                              std::vector<ResolutionTrace>* trace = nullptr);

struct UnquestionabilityEntry {
  Literal literal;
  Rational fixed_point;  // upper revision of v0 under the doctrine
  Rational one_step;     // one-step revision of v0 under the Blake form
  bool unquestionable() const { return fixed_point == one_step; }
};

/// For each requested literal, compares the fixed point with the one-step
/// revision computed on the canonical form.
std::vector<UnquestionabilityEntry> verify_unquestionability(
    const Valuation& v0, const Doctrine& d, std::span<const Literal> literals,
    const BlakeLimits& limits = {});

/// Same, with the canonical form supplied by the caller.
std::vector<UnquestionabilityEntry> verify_unquestionability(
    const Valuation& v0, const Doctrine& d, const Doctrine& blake_form,
    std::span<const Literal> literals);

/// One clause per line, labels separated by single spaces, clauses in
/// (size, literal id) order.
std::string dump_clauses(const Doctrine& d, bool include_tertium = true);

}  // namespace llull
