#include "llull/belief.hpp"

#include <algorithm>
#include <stdexcept>

#include "llull/errors.hpp"

namespace llull {

Literal LiteralUniverse::add_pair(std::string label, std::string negated_label) {
  if (label == negated_label || index_.contains(label) || index_.contains(negated_label)) {
    throw std::invalid_argument("duplicate literal label: " + label);
  }
  Literal first{static_cast<std::uint32_t>(labels_.size())};
  index_.emplace(label, first.id);
  index_.emplace(negated_label, first.id + 1);
  labels_.push_back(std::move(label));
  labels_.push_back(std::move(negated_label));
  return first;
}

std::optional<Literal> LiteralUniverse::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return Literal{it->second};
}

Valuation::Valuation(UniversePtr universe)
    : universe_(std::move(universe)), values_(universe_->size(), Rational(0)) {}

Valuation::Valuation(UniversePtr universe, std::vector<Rational> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (values_.size() != universe_->size()) {
    throw ConfigError("valuation size does not match its literal universe");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] > 1) {
      throw std::invalid_argument("degree of belief outside [0,1] for " +
                                  universe_->label(Literal{static_cast<std::uint32_t>(i)}));
    }
  }
}

Valuation Valuation::with(Literal l, Rational value) const {
  std::vector<Rational> values = values_;
  values.at(l.id) = std::move(value);
  return Valuation(universe_, std::move(values));
}

bool Valuation::is_balanced() const {
  for (std::uint32_t i = 0; i < values_.size(); i += 2) {
    if (values_[i] + values_[i + 1] != 1) return false;
  }
  return true;
}

bool Valuation::leq(const Valuation& other) const {
  if (values_.size() != other.values_.size()) {
    throw ConfigError("comparing valuations over different universes");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] > other.values_[i]) return false;
  }
  return true;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) throw std::invalid_argument("empty clause");
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool Clause::contains(Literal l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(), literals_.begin(),
                       literals_.end());
}

Doctrine::Doctrine(UniversePtr universe, std::vector<Clause> clauses)
    : universe_(std::move(universe)) {
  const auto& u = *universe_;
  for (std::uint32_t i = 0; i < u.size(); i += 2) {
    clauses.push_back(Clause{Literal{i}, Literal{i + 1}});
  }
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  for (const auto& c : clauses) {
    for (Literal l : c.literals()) {
      if (!u.contains(l)) throw ConfigError("clause literal outside the doctrine universe");
    }
    if (c.size() == 1) {
      throw std::invalid_argument("unit clause {" + u.label(c.literals()[0]) + "}");
    }
    if (!is_tertium(c)) {
      for (Literal l : c.literals()) {
        if (c.contains(u.negation(l))) {
          throw std::invalid_argument("clause holds both " + u.label(l) + " and its negation");
        }
      }
    }
  }
  clauses_ = std::move(clauses);
  occurrences_.assign(u.size(), {});
  for (std::uint32_t k = 0; k < clauses_.size(); ++k) {
    for (Literal l : clauses_[k].literals()) occurrences_[l.id].push_back(k);
  }
}

bool Doctrine::is_tertium(const Clause& c) const {
  return c.size() == 2 && universe_->negation(c.literals()[0]) == c.literals()[1];
}

std::vector<Clause> Doctrine::proper_clauses() const {
  std::vector<Clause> out;
  for (const auto& c : clauses_) {
    if (!is_tertium(c)) out.push_back(c);
  }
  return out;
}

Decision::Decision(UniversePtr universe, std::vector<Verdict> states, Rational margin)
    : universe_(std::move(universe)), states_(std::move(states)), margin_(std::move(margin)) {
  if (states_.size() != universe_->size()) {
    throw ConfigError("decision size does not match its literal universe");
  }
}

namespace {

// Revision only ever takes max and min, so it commutes with the order
// isomorphism onto the ranks of the distinct input values. The loops below
// run on those ranks and map back at the end.
struct Ranked {
  std::vector<Rational> levels;
  std::vector<std::uint32_t> ranks;
};

Ranked rank_values(const Valuation& v) {
  Ranked r;
  r.levels.assign(v.values().begin(), v.values().end());
  std::sort(r.levels.begin(), r.levels.end());
  r.levels.erase(std::unique(r.levels.begin(), r.levels.end()), r.levels.end());
  r.ranks.reserve(v.values().size());
  for (const auto& x : v.values()) {
    auto it = std::lower_bound(r.levels.begin(), r.levels.end(), x);
    r.ranks.push_back(static_cast<std::uint32_t>(it - r.levels.begin()));
  }
  return r;
}

Valuation unrank(const Valuation& like, const Ranked& r,
                 const std::vector<std::uint32_t>& ranks) {
  std::vector<Rational> values;
  values.reserve(ranks.size());
  for (auto k : ranks) values.push_back(r.levels[k]);
  return Valuation(like.universe_ptr(), std::move(values));
}

void check_universe(const Valuation& v, const Doctrine& d) {
  if (v.universe_ptr() == d.universe_ptr()) return;
  const auto& a = v.universe();
  const auto& b = d.universe();
  bool same = a.size() == b.size();
  for (std::uint32_t i = 0; same && i < a.size(); ++i) {
    same = a.label(Literal{i}) == b.label(Literal{i});
  }
  if (!same) throw ConfigError("valuation is not defined on the doctrine's literal universe");
}

constexpr std::int64_t kNone = -1;

// max over clauses C containing l (optionally skipping tertium-non-datur) of
// min over q in C\{l} of r[~q]. kNone when no clause qualifies.
std::int64_t support(const Doctrine& d, Literal l, const std::vector<std::uint32_t>& r,
                     bool skip_tertium) {
  const auto& u = d.universe();
  std::int64_t best = kNone;
  for (auto k : d.clauses_with(l)) {
    const Clause& c = d.clauses()[k];
    if (skip_tertium && d.is_tertium(c)) continue;
    std::int64_t weakest = kNone;
    for (Literal q : c.literals()) {
      if (q == l) continue;
      std::int64_t val = r[u.negation(q).id];
      weakest = weakest == kNone ? val : std::min(weakest, val);
      if (weakest <= best) break;
    }
    best = std::max(best, weakest);
  }
  return best;
}

std::vector<std::uint32_t> step_ranks(const Doctrine& d, const std::vector<std::uint32_t>& r) {
  std::vector<std::uint32_t> out(r.size());
  for (std::uint32_t i = 0; i < r.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(support(d, Literal{i}, r, false));
  }
  return out;
}

// Each pass that changes anything raises at least one literal by at least one
// rank, so more passes than literals x levels cannot happen.
std::size_t iteration_cap(const Ranked& r) { return r.ranks.size() * r.levels.size() + 1; }

}  // namespace

Valuation one_step_revise(const Valuation& v, const Doctrine& d) {
  check_universe(v, d);
  Ranked r = rank_values(v);
  return unrank(v, r, step_ranks(d, r.ranks));
}

Valuation upper_revise(const Valuation& v, const Doctrine& d) {
  check_universe(v, d);
  Ranked r = rank_values(v);
  const auto& base = r.ranks;
  std::vector<std::uint32_t> current = base;
  const std::size_t cap = iteration_cap(r);
  for (std::size_t pass = 0;; ++pass) {
    if (pass > cap) throw InternalError("upper revision did not reach a fixed point");
    std::vector<std::uint32_t> next(base.size());
    for (std::uint32_t i = 0; i < base.size(); ++i) {
      std::int64_t s = support(d, Literal{i}, current, true);
      next[i] = static_cast<std::uint32_t>(std::max<std::int64_t>(base[i], s));
    }
    if (next == current) break;
    current = std::move(next);
  }
  return unrank(v, r, current);
}

Valuation upper_revise_naive(const Valuation& v, const Doctrine& d) {
  check_universe(v, d);
  Ranked r = rank_values(v);
  std::vector<std::uint32_t> current = r.ranks;
  const std::size_t cap = iteration_cap(r);
  for (std::size_t pass = 0;; ++pass) {
    if (pass > cap) throw InternalError("one-step iteration did not reach a fixed point");
    auto next = step_ranks(d, current);
    if (next == current) break;
    current = std::move(next);
  }
  return unrank(v, r, current);
}

Decision decide(const Valuation& v, const Rational& margin) {
  if (margin < 0 || margin > 1) throw std::invalid_argument("decision margin outside [0,1]");
  std::vector<Verdict> states(v.values().size(), Verdict::kUndecided);
  for (std::uint32_t i = 0; i < states.size(); i += 2) {
    Rational diff = v.values()[i] - v.values()[i + 1];
    if (diff > margin) {
      states[i] = Verdict::kAccepted;
      states[i + 1] = Verdict::kRejected;
    } else if (-diff > margin) {
      states[i] = Verdict::kRejected;
      states[i + 1] = Verdict::kAccepted;
    }
  }
  return Decision(v.universe_ptr(), std::move(states), margin);
}

Rational acceptability(const Valuation& v, Literal l) {
  return v[l] - v[v.universe().negation(l)];
}

bool is_definitely_consistent(const Decision& dec, const Doctrine& d) {
  if (dec.universe().size() != d.universe().size()) {
    throw ConfigError("decision is not over the doctrine's literal universe");
  }
  for (const auto& c : d.clauses()) {
    int undecided = 0;
    bool accepted = false;
    for (Literal l : c.literals()) {
      Verdict s = dec[l];
      if (s == Verdict::kAccepted) {
        accepted = true;
        break;
      }
      if (s == Verdict::kUndecided) ++undecided;
    }
    if (!accepted && undecided < 2) return false;
  }
  return true;
}

}  // namespace llull
