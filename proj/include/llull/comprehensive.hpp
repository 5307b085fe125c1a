#pragma once

// Comprehensive prominence revision evaluated per option subset, without
// storing the subset-indexed clauses.

#include <cstddef>
#include <vector>

#include "llull/ballots.hpp"
#include "llull/belief.hpp"
#include "llull/doctrines.hpp"

namespace llull {

/// One-step revision of `v` under the comprehensive prominence doctrine.
/// `literals` must carry the 't' layout. Throws SizeError past `cap`.
Valuation comprehensive_one_step(const OptionLiterals& literals, const Valuation& v,
                                 std::size_t cap = 12);

/// Upper revision of `v0` under the same doctrine.
Valuation comprehensive_upper_revise(const OptionLiterals& literals, const Valuation& v0,
                                     std::size_t cap = 12);

/// Revised belief in "y is not prominent" for zero unary initial values:
/// the best rectangle min_{r in X, s not in X} v(p_rs) over non-empty X
/// avoiding y.
std::vector<Rational> comprehensive_not_prominent(const LlullMatrix& m, std::size_t cap = 12);

}  // namespace llull
