#pragma once

// Weighted ballot profiles (ranked, truncated, tied, approval-divided), the
// Llull matrix of pairwise degrees of belief and per-option score vectors.
//
// Ballot text format, one ballot per line:
//
//   # comment
//   options: a b c d          (optional; fixes the option order)
//   3: a > b = c              strict preference '>', tie '='
//   (1-eps)/2: a > b |        '|' divides approved from disapproved
//
// The weight is a rational expression: integers, decimals, '+ - * /',
// parentheses, and named parameters bound by the caller.

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "llull/rational.hpp"

namespace llull {

using TieGroup = std::vector<std::size_t>;

struct Ballot {
  Rational weight;
  std::vector<TieGroup> approved_groups;
  std::vector<TieGroup> disapproved_groups;
  bool has_divider = false;

  /// Approved groups followed by disapproved groups.
  std::vector<TieGroup> ranking() const;
  std::size_t listed_count() const;
};

class Profile {
 public:
  Profile(std::vector<std::string> options, std::vector<Ballot> ballots);

  const std::vector<std::string>& options() const { return options_; }
  const std::vector<Ballot>& ballots() const { return ballots_; }
  const Rational& total_weight() const { return total_weight_; }
  std::size_t size() const { return options_.size(); }

 private:
  std::vector<std::string> options_;
  std::vector<Ballot> ballots_;
  Rational total_weight_;
};

using ParamMap = std::map<std::string, Rational, std::less<>>;

/// Throws ParseError carrying the offending line number.
Profile parse_profile(std::string_view text, const ParamMap& params = {});
Profile read_profile_file(const std::string& path, const ParamMap& params = {});

/// Evaluates a weight expression such as "(1-eps)/2".
Rational evaluate_weight(std::string_view expr, const ParamMap& params);

enum class TruncationMode { kAbstain, kCompleteAsTies };

/// Pairwise table v(p_xy), x != y, each entry in [0,1] and
/// v(p_xy) + v(p_yx) <= 1.
class LlullMatrix {
 public:
  /// `row_major` holds n*n entries; the diagonal is ignored.
  LlullMatrix(std::vector<std::string> options, std::vector<Rational> row_major);
  /// Scales integer-like counts by 1/denominator.
  static LlullMatrix from_counts(std::vector<std::string> options,
                                 const std::vector<std::vector<Rational>>& counts,
                                 const Rational& denominator);

  std::size_t size() const { return options_.size(); }
  const std::vector<std::string>& options() const { return options_; }
  const Rational& operator()(std::size_t x, std::size_t y) const { return v_[x * size() + y]; }

  /// Every pair satisfies v(p_xy) + v(p_yx) = 1.
  bool is_complete() const;
  LlullMatrix restricted_to(std::span<const std::size_t> subset) const;

  friend bool operator==(const LlullMatrix&, const LlullMatrix&) = default;

 private:
  std::vector<std::string> options_;
  std::vector<Rational> v_;
};

LlullMatrix llull_matrix(const Profile& p, TruncationMode mode = TruncationMode::kAbstain);

struct ScoreVectors {
  std::vector<Rational> plurality;      // f_x, top tie-group split 1/k
  std::vector<Rational> antiplurality;  // sum of f_y over y != x
  std::vector<Rational> last;           // bottom tie-group split 1/k
  std::vector<Rational> approval;       // v(g_x)
  std::vector<Rational> disapproval;    // v(~g_x)
};

struct ScoreOptions {
  /// When false, a ballot contributes to last-place counts only if it lists
  /// every option. When true, unlisted options form a tied bottom group.
  bool last_includes_unlisted = false;
};

ScoreVectors score_vectors(const Profile& p, const ScoreOptions& options = {});

}  // namespace llull
