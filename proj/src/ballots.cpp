#include "llull/ballots.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "llull/errors.hpp"

namespace llull {

std::vector<TieGroup> Ballot::ranking() const {
  std::vector<TieGroup> out = approved_groups;
  out.insert(out.end(), disapproved_groups.begin(), disapproved_groups.end());
  return out;
}

std::size_t Ballot::listed_count() const {
  std::size_t n = 0;
  for (const auto& g : approved_groups) n += g.size();
  for (const auto& g : disapproved_groups) n += g.size();
  return n;
}

Profile::Profile(std::vector<std::string> options, std::vector<Ballot> ballots)
    : options_(std::move(options)), ballots_(std::move(ballots)), total_weight_(0) {
  if (options_.empty()) throw std::invalid_argument("profile without options");
  for (const auto& b : ballots_) {
    if (b.weight < 0) throw std::invalid_argument("negative ballot weight");
    if (!b.has_divider && !b.disapproved_groups.empty()) {
      throw std::invalid_argument("disapproved groups on a ballot without divider");
    }
    std::vector<bool> seen(options_.size(), false);
    for (const auto& g : b.ranking()) {
      if (g.empty()) throw std::invalid_argument("empty tie group");
      for (auto x : g) {
        if (x >= options_.size()) throw std::invalid_argument("ballot option out of range");
        if (seen[x]) throw std::invalid_argument("option listed twice: " + options_[x]);
        seen[x] = true;
      }
    }
    total_weight_ += b.weight;
  }
  if (total_weight_ <= 0) throw std::invalid_argument("profile total weight must be positive");
}

// ---------------------------------------------------------------------------
// Weight expressions

namespace {

class WeightParser {
 public:
  WeightParser(std::string_view text, const ParamMap& params) : s_(text), params_(params) {}

  Rational parse() {
    Rational v = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed weight '" + std::string(s_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Rational expr() {
    Rational v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Rational term() {
    Rational v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        Rational d = factor();
        if (d == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Rational factor() {
    skip_space();
    if (eat('-')) return -factor();
    if (eat('(')) {
      Rational v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        ++pos_;
      }
      try {
        return parse_rational(s_.substr(start, pos_ - start));
      } catch (const std::invalid_argument&) {
        fail("bad number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      auto name = s_.substr(start, pos_ - start);
      auto it = params_.find(name);
      if (it == params_.end()) fail("unbound parameter '" + std::string(name) + "'");
      return it->second;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const ParamMap& params_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_operator(char c) { return c == '>' || c == '=' || c == '|'; }

struct Token {
  char op = '\0';  // '\0' for an option name
  std::string name;
};

std::vector<Token> tokenize_ranking(std::string_view s, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (is_operator(c)) {
      out.push_back(Token{c, {}});
      ++i;
    } else if (c == ':') {
      throw ParseError(line, "unexpected ':' in ranking");
    } else {
      std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
             !is_operator(s[i]) && s[i] != ':') {
        ++i;
      }
      out.push_back(Token{'\0', std::string(s.substr(start, i - start))});
    }
  }
  return out;
}

}  // namespace

Rational evaluate_weight(std::string_view expr, const ParamMap& params) {
  return WeightParser(expr, params).parse();
}

// ---------------------------------------------------------------------------
// Profile text

Profile parse_profile(std::string_view text, const ParamMap& params) {
  std::vector<std::string> options;
  bool declared = false;
  std::size_t line_no = 0;
  auto option_index = [&](const std::string& name) {
    auto it = std::find(options.begin(), options.end(), name);
    if (it != options.end()) return static_cast<std::size_t>(it - options.begin());
    if (declared) throw ParseError(line_no, "undeclared option " + name);
    options.push_back(name);
    return options.size() - 1;
  };

  std::vector<Ballot> ballots;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'weight: ranking'");
    std::string_view head = trim(line.substr(0, colon));
    std::string_view body = trim(line.substr(colon + 1));

    if (head == "options") {
      if (!ballots.empty() || declared) {
        throw ParseError(line_no, "options must be declared once, before any ballot");
      }
      declared = true;
      for (const auto& t : tokenize_ranking(body, line_no)) {
        if (t.op != '\0') throw ParseError(line_no, "operator in options declaration");
        if (std::find(options.begin(), options.end(), t.name) != options.end()) {
          throw ParseError(line_no, "option declared twice: " + t.name);
        }
        options.push_back(t.name);
      }
      continue;
    }

    Ballot ballot;
    try {
      ballot.weight = evaluate_weight(head, params);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (ballot.weight < 0) throw ParseError(line_no, "negative weight");

    auto tokens = tokenize_ranking(body, line_no);
    if (tokens.empty()) throw ParseError(line_no, "empty ranking");

    std::vector<TieGroup>* side = &ballot.approved_groups;
    std::vector<bool> seen;
    bool expect_option = true;  // at the start of a group
    bool after_tie = false;
    std::size_t listed = 0;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      const Token& t = tokens[i];
      if (t.op == '\0') {
        if (!expect_option) throw ParseError(line_no, "missing operator before " + t.name);
        std::size_t x = option_index(t.name);
        if (seen.size() < options.size()) seen.resize(options.size(), false);
        if (seen[x]) throw ParseError(line_no, "duplicate option " + t.name);
        seen[x] = true;
        ++listed;
        if (after_tie) {
          side->back().push_back(x);
        } else {
          side->push_back(TieGroup{x});
        }
        expect_option = false;
        after_tie = false;
      } else if (t.op == '|') {
        if (ballot.has_divider) throw ParseError(line_no, "more than one '|'");
        if (after_tie || (expect_option && !side->empty())) {
          throw ParseError(line_no, "dangling operator before '|'");
        }
        ballot.has_divider = true;
        side = &ballot.disapproved_groups;
        expect_option = true;
        after_tie = false;
      } else {
        if (expect_option) {
          throw ParseError(line_no, std::string("'") + t.op + "' without a preceding option");
        }
        expect_option = true;
        after_tie = t.op == '=';
      }
    }
    if (listed == 0) throw ParseError(line_no, "empty ranking");
    if (expect_option && !side->empty()) throw ParseError(line_no, "dangling operator at end");
    ballots.push_back(std::move(ballot));
  }
  if (ballots.empty()) throw ParseError(0, "no ballots");
  Rational total = 0;
  for (const auto& b : ballots) total += b.weight;
  if (total <= 0) throw ParseError(0, "total ballot weight must be positive");
  return Profile(std::move(options), std::move(ballots));
}

Profile read_profile_file(const std::string& path, const ParamMap& params) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str(), params);
}

// ---------------------------------------------------------------------------
// Llull matrix

LlullMatrix::LlullMatrix(std::vector<std::string> options, std::vector<Rational> row_major)
    : options_(std::move(options)), v_(std::move(row_major)) {
  const std::size_t n = options_.size();
  if (v_.size() != n * n) throw std::invalid_argument("Llull matrix needs n*n entries");
  for (std::size_t x = 0; x < n; ++x) {
    v_[x * n + x] = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      const Rational& a = v_[x * n + y];
      if (a < 0 || a > 1) throw std::invalid_argument("Llull matrix entry outside [0,1]");
      if (x < y && a + v_[y * n + x] > 1) {
        throw std::invalid_argument("v(p_xy) + v(p_yx) exceeds 1 for " + options_[x] + "," +
                                    options_[y]);
      }
    }
  }
}

LlullMatrix LlullMatrix::from_counts(std::vector<std::string> options,
                                     const std::vector<std::vector<Rational>>& counts,
                                     const Rational& denominator) {
  const std::size_t n = options.size();
  if (counts.size() != n || denominator <= 0) throw std::invalid_argument("bad count table");
  std::vector<Rational> v(n * n, Rational(0));
  for (std::size_t x = 0; x < n; ++x) {
    if (counts[x].size() != n) throw std::invalid_argument("bad count table row");
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) v[x * n + y] = counts[x][y] / denominator;
    }
  }
  return LlullMatrix(std::move(options), std::move(v));
}

bool LlullMatrix::is_complete() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = x + 1; y < size(); ++y) {
      if ((*this)(x, y) + (*this)(y, x) != 1) return false;
    }
  }
  return true;
}

LlullMatrix LlullMatrix::restricted_to(std::span<const std::size_t> subset) const {
  std::vector<std::string> names;
  std::vector<Rational> v;
  for (auto x : subset) names.push_back(options_.at(x));
  for (auto x : subset) {
    for (auto y : subset) v.push_back(x == y ? Rational(0) : (*this)(x, y));
  }
  return LlullMatrix(std::move(names), std::move(v));
}

LlullMatrix llull_matrix(const Profile& p, TruncationMode mode) {
  const std::size_t n = p.size();
  const Rational half(1, 2);
  std::vector<Rational> sum(n * n, Rational(0));
  std::vector<long> position(n);
  for (const auto& b : p.ballots()) {
    if (b.weight == 0) continue;
    std::fill(position.begin(), position.end(), -1);
    auto groups = b.ranking();
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (auto x : groups[g]) position[x] = static_cast<long>(g);
    }
    const Rational half_w = b.weight * half;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const long px = position[x];
        const long py = position[y];
        if (px >= 0 && py >= 0) {
          if (px < py) {
            sum[x * n + y] += b.weight;
          } else if (px == py) {
            sum[x * n + y] += half_w;
          }
        } else if (b.has_divider) {
          // options absent from a divided ballot take part in no comparison
        } else if (px >= 0) {
          sum[x * n + y] += b.weight;
        } else if (py < 0 && mode == TruncationMode::kCompleteAsTies) {
          sum[x * n + y] += half_w;
        }
      }
    }
  }
  for (auto& s : sum) s /= p.total_weight();
  return LlullMatrix(p.options(), std::move(sum));
}

ScoreVectors score_vectors(const Profile& p, const ScoreOptions& options) {
  const std::size_t n = p.size();
  ScoreVectors s;
  s.plurality.assign(n, Rational(0));
  s.antiplurality.assign(n, Rational(0));
  s.last.assign(n, Rational(0));
  s.approval.assign(n, Rational(0));
  s.disapproval.assign(n, Rational(0));
  for (const auto& b : p.ballots()) {
    auto groups = b.ranking();
    const auto& top = groups.front();
    for (auto x : top) s.plurality[x] += b.weight / static_cast<long>(top.size());

    if (b.listed_count() == n) {
      const auto& bottom = groups.back();
      for (auto x : bottom) s.last[x] += b.weight / static_cast<long>(bottom.size());
    } else if (options.last_includes_unlisted) {
      std::vector<bool> listed(n, false);
      for (const auto& g : groups) {
        for (auto x : g) listed[x] = true;
      }
      const long k = static_cast<long>(n - b.listed_count());
      for (std::size_t x = 0; x < n; ++x) {
        if (!listed[x]) s.last[x] += b.weight / k;
      }
    }

    if (b.has_divider) {
      for (const auto& g : b.approved_groups) {
        for (auto x : g) s.approval[x] += b.weight;
      }
      for (const auto& g : b.disapproved_groups) {
        for (auto x : g) s.disapproval[x] += b.weight;
      }
    }
  }
  const Rational& total = p.total_weight();
  Rational f_sum = 0;
  for (std::size_t x = 0; x < n; ++x) {
    s.plurality[x] /= total;
    s.last[x] /= total;
    s.approval[x] /= total;
    s.disapproval[x] /= total;
    f_sum += s.plurality[x];
  }
  for (std::size_t x = 0; x < n; ++x) s.antiplurality[x] = f_sum - s.plurality[x];
  return s;
}

}  // namespace llull
