#include "llull/methods.hpp"

#include <algorithm>
#include <stdexcept>

#include "llull/comprehensive.hpp"
#include "llull/errors.hpp"

namespace llull {

namespace {

struct MethodInfo {
  MethodId id;
  std::string_view name;
  DoctrineKind doctrine;
  UnaryInit init;
};

constexpr MethodInfo kMethods[] = {
    {MethodId::kTransitivity, "transitivity", DoctrineKind::kTransitivity, UnaryInit::kZero},
    {MethodId::kMinimax, "minimax", DoctrineKind::kSupremacy, UnaryInit::kZero},
    {MethodId::kPlurality, "plurality", DoctrineKind::kSupremacy, UnaryInit::kPlurality},
    {MethodId::kMaximin, "maximin", DoctrineKind::kProminence, UnaryInit::kZero},
    {MethodId::kSymmetricProminence, "symmetric-prominence", DoctrineKind::kSymmetricProminence,
     UnaryInit::kZero},
    {MethodId::kComprehensiveProminence, "comprehensive-prominence",
     DoctrineKind::kComprehensiveProminence, UnaryInit::kZero},
    {MethodId::kRefinedComprehensiveProminence, "refined-comprehensive-prominence",
     DoctrineKind::kComprehensiveProminence, UnaryInit::kZero},
    {MethodId::kGoodness, "goodness", DoctrineKind::kGoodness, UnaryInit::kApproval},
    {MethodId::kCav, "cav", DoctrineKind::kGoodness, UnaryInit::kApproval},
    {MethodId::kApproval, "approval", DoctrineKind::kGoodness, UnaryInit::kApproval},
    {MethodId::kPav, "pav", DoctrineKind::kGoodness, UnaryInit::kApproval},
};

const MethodInfo& info(MethodId id) {
  for (const auto& m : kMethods) {
    if (m.id == id) return m;
  }
  throw std::invalid_argument("unknown method");
}

Rational min_except(const std::vector<Rational>& a, std::size_t skip) {
  std::optional<Rational> best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != skip && (!best || a[i] < *best)) best = a[i];
  }
  return best.value_or(Rational(1));
}

std::vector<Rational> unary_acceptabilities(const OptionLiterals& L, const Valuation& v) {
  std::vector<Rational> out;
  for (std::size_t x = 0; x < L.size(); ++x) out.push_back(acceptability(v, L.unary_pos(x)));
  return out;
}

OptionSet not_rejected(const std::vector<Rational>& acceptabilities) {
  OptionSet out;
  for (std::size_t x = 0; x < acceptabilities.size(); ++x) {
    if (acceptabilities[x] >= 0) out.push_back(x);
  }
  return out;
}

// sigma_X = min over r in X, s not in X of v(p_rs), for a proper subset mask.
Rational rectangle_min(const LlullMatrix& m, std::uint32_t set) {
  Rational best = 1;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (!(set >> r & 1)) continue;
    for (std::size_t s = 0; s < m.size(); ++s) {
      if (!(set >> s & 1) && m(r, s) < best) best = m(r, s);
    }
  }
  return best;
}

std::vector<Rational> pref_values(const OptionLiterals& L, const LlullMatrix& m) {
  std::vector<Rational> values(L.universe()->size(), Rational(0));
  for (std::size_t x = 0; x < L.size(); ++x) {
    for (std::size_t y = 0; y < L.size(); ++y) {
      if (x != y) values[L.pref(x, y).id] = m(x, y);
    }
  }
  return values;
}

}  // namespace

std::string_view to_string(MethodId id) { return info(id).name; }

MethodId parse_method_id(std::string_view name) {
  for (const auto& m : kMethods) {
    if (m.name == name) return m.id;
  }
  throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

const std::vector<MethodId>& all_methods() {
  static const std::vector<MethodId> ids = [] {
    std::vector<MethodId> out;
    for (const auto& m : kMethods) out.push_back(m.id);
    return out;
  }();
  return ids;
}

DoctrineKind doctrine_of(MethodId id) { return info(id).doctrine; }
UnaryInit default_init(MethodId id) { return info(id).init; }

bool init_allowed(MethodId id, UnaryInit init) {
  switch (id) {
    case MethodId::kMaximin:
    case MethodId::kSymmetricProminence:
    case MethodId::kComprehensiveProminence:
      return init == UnaryInit::kZero || init == UnaryInit::kPluralityAndLast;
    default:
      return init == default_init(id);
  }
}

bool needs_scores(MethodId id, UnaryInit init) {
  return init != UnaryInit::kZero || id == MethodId::kPav || id == MethodId::kCav ||
         id == MethodId::kApproval;
}

RowColStats row_col_stats(const LlullMatrix& m) {
  const std::size_t n = m.size();
  RowColStats s;
  s.minrow.assign(n, Rational(1));
  s.maxcol.assign(n, Rational(0));
  s.mincol.assign(n, Rational(1));
  s.minrw.assign(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      s.minrow[x] = std::min(s.minrow[x], m(x, y));
      s.maxcol[x] = std::max(s.maxcol[x], m(y, x));
      s.mincol[x] = std::min(s.mincol[x], m(y, x));
      for (std::size_t z = 0; z < n; ++z) {
        if (z != x && z != y) s.minrw[x][y] = std::min(s.minrw[x][y], m(x, z));
      }
    }
  }
  return s;
}

RationalTable paths_closure(const LlullMatrix& m) {
  const std::size_t n = m.size();
  RationalTable p(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) p[x][y] = m(x, y);
    }
  }
  // Max-min over walks; the optimum over walks is attained by a simple path.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        const Rational& via = std::min(p[i][k], p[k][j]);
        if (via > p[i][j]) p[i][j] = via;
      }
    }
  }
  return p;
}

std::vector<OptionSet> ranking_from_decision(const OptionLiterals& literals,
                                             const Decision& decision) {
  const std::size_t n = literals.size();
  std::vector<bool> placed(n, false);
  std::vector<OptionSet> layers;
  std::size_t remaining = n;
  while (remaining > 0) {
    OptionSet layer;
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x]) continue;
      bool beaten = false;
      for (std::size_t y = 0; y < n && !beaten; ++y) {
        beaten = y != x && !placed[y] && decision[literals.pref(y, x)] == Verdict::kAccepted;
      }
      if (!beaten) layer.push_back(x);
    }
    if (layer.empty()) throw InternalError("accepted preferences contain a cycle");
    for (auto x : layer) placed[x] = true;
    remaining -= layer.size();
    layers.push_back(std::move(layer));
  }
  return layers;
}

OptionSet argmax(const std::vector<Rational>& values) {
  OptionSet out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (out.empty() || values[i] > values[out.front()]) {
      out = {i};
    } else if (values[i] == values[out.front()]) {
      out.push_back(i);
    }
  }
  return out;
}

OptionSet argmin(const std::vector<Rational>& values) {
  std::vector<Rational> negated;
  for (const auto& v : values) negated.push_back(-v);
  return argmax(negated);
}

OptionSet minimax_winners(const LlullMatrix& m) { return argmin(row_col_stats(m).maxcol); }
OptionSet plurality_winners(const ScoreVectors& s) { return argmax(s.plurality); }
OptionSet maximin_winners(const LlullMatrix& m) { return argmax(row_col_stats(m).minrow); }

ScoredWinners symmetric_prominence_winners(const LlullMatrix& m) {
  auto s = row_col_stats(m);
  ScoredWinners out;
  for (std::size_t x = 0; x < m.size(); ++x) out.scores.push_back(s.minrow[x] - s.mincol[x]);
  out.winners = argmax(out.scores);
  return out;
}

OptionSet smith_set(const LlullMatrix& m) {
  const std::size_t n = m.size();
  const Rational half(1, 2);
  OptionSet best;
  for (std::size_t start = 0; start < n; ++start) {
    // smallest majority-dominant set containing `start`
    std::vector<bool> in(n, false);
    std::vector<std::size_t> stack{start};
    in[start] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y = 0; y < n; ++y) {
        if (!in[y] && m(x, y) <= half) {
          in[y] = true;
          stack.push_back(y);
        }
      }
    }
    OptionSet closure;
    for (std::size_t y = 0; y < n; ++y) {
      if (in[y]) closure.push_back(y);
    }
    if (best.empty() || closure.size() < best.size()) best = std::move(closure);
  }
  return best;
}

MaximinSets maximin_sets(const LlullMatrix& m, std::size_t cap) {
  const std::size_t n = m.size();
  if (n > cap || n > 24) {
    throw SizeError("maximin sets over " + std::to_string(n) + " options exceed the cap of " +
                    std::to_string(cap));
  }
  MaximinSets out;
  out.sigma = -1;
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t set = 1; set < full; ++set) {
    Rational sigma = rectangle_min(m, set);
    if (sigma < out.sigma) continue;
    if (sigma > out.sigma) {
      out.sigma = sigma;
      out.sets.clear();
    }
    OptionSet members;
    for (std::size_t x = 0; x < n; ++x) {
      if (set >> x & 1) members.push_back(x);
    }
    out.sets.push_back(std::move(members));
  }
  if (out.sets.empty()) out.sigma = 0;
  std::sort(out.sets.begin(), out.sets.end(), [](const OptionSet& a, const OptionSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

CondorcetReport condorcet_diagnostics(const LlullMatrix& m) {
  const std::size_t n = m.size();
  const Rational half(1, 2);
  CondorcetReport r;
  if (n < 2) return r;
  for (std::size_t x = 0; x < n; ++x) {
    bool wins = true;
    bool margin_wins = true;
    bool loses = true;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      wins = wins && m(x, y) > half;
      margin_wins = margin_wins && m(x, y) > m(y, x);
      loses = loses && m(y, x) > half;
    }
    if (wins) r.winner = x;
    if (margin_wins) r.margin_winner = x;
    if (loses) r.loser = x;
  }
  return r;
}

OptionSet pav_winner(const LlullMatrix& m, const ScoreVectors& s) {
  const Rational half(1, 2);
  OptionSet majority;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (s.approval[x] > half) majority.push_back(x);
  }
  if (majority.size() <= 1) return argmax(s.approval);

  LlullMatrix sub = m.restricted_to(majority);
  OptionSet pool;
  if (auto c = condorcet_diagnostics(sub); c.winner) {
    return {majority[*c.winner]};
  }
  for (auto i : smith_set(sub)) pool.push_back(majority[i]);
  std::vector<Rational> scores;
  for (auto x : pool) scores.push_back(s.approval[x]);
  OptionSet out;
  for (auto i : argmax(scores)) out.push_back(pool[i]);
  return out;
}

Valuation transitivity_closed_form(const OptionLiterals& L, const LlullMatrix& m) {
  auto p = paths_closure(m);
  std::vector<Rational> values(L.universe()->size(), Rational(0));
  for (std::size_t x = 0; x < L.size(); ++x) {
    for (std::size_t y = 0; y < L.size(); ++y) {
      if (x != y) values[L.pref(x, y).id] = p[x][y];
    }
  }
  return Valuation(L.universe(), std::move(values));
}

Valuation supremacy_closed_form(const OptionLiterals& L, const LlullMatrix& m,
                                const ScoreVectors* s, UnaryInit init) {
  if (init != UnaryInit::kZero && init != UnaryInit::kPlurality) {
    throw ConfigError("supremacy closed form covers zero and plurality initial values only");
  }
  if (L.size() < 2) return initial_valuation(L, m, s, init);
  std::vector<Rational> against;
  if (init == UnaryInit::kZero) {
    against = row_col_stats(m).maxcol;
  } else {
    if (s == nullptr) throw ConfigError("plurality initial values need ballot scores");
    against = s->antiplurality;
  }
  std::vector<Rational> values = pref_values(L, m);
  for (std::size_t x = 0; x < L.size(); ++x) {
    Rational best = min_except(against, x);
    values[L.unary_pos(x).id] = best;
    values[L.unary_neg(x).id] = against[x];
    for (std::size_t y = 0; y < L.size(); ++y) {
      if (y != x) values[L.pref(x, y).id] = std::max(m(x, y), best);
    }
  }
  return Valuation(L.universe(), std::move(values));
}

Valuation maximin_closed_form(const OptionLiterals& L, const LlullMatrix& m) {
  if (L.size() < 2) return initial_valuation(L, m, nullptr, UnaryInit::kZero);
  auto s = row_col_stats(m);
  std::vector<Rational> values = pref_values(L, m);
  for (std::size_t x = 0; x < L.size(); ++x) values[L.unary_pos(x).id] = s.minrow[x];
  return Valuation(L.universe(), std::move(values));
}

Valuation symmetric_prominence_closed_form(const OptionLiterals& L, const LlullMatrix& m) {
  if (L.size() < 2) return initial_valuation(L, m, nullptr, UnaryInit::kZero);
  auto s = row_col_stats(m);
  std::vector<Rational> values = pref_values(L, m);
  for (std::size_t x = 0; x < L.size(); ++x) {
    values[L.unary_pos(x).id] = s.minrow[x];
    values[L.unary_neg(x).id] = s.mincol[x];
  }
  return Valuation(L.universe(), std::move(values));
}

Valuation goodness_closed_form(const OptionLiterals& L, const LlullMatrix& m,
                               const ScoreVectors* s) {
  const std::size_t n = L.size();
  std::vector<Rational> good(n, Rational(0));
  std::vector<Rational> bad(n, Rational(0));
  if (s != nullptr) {
    good = s->approval;
    bad = s->disapproval;
  }
  auto p = paths_closure(m);
  std::vector<Rational> g_hat = good;
  std::vector<Rational> b_hat = bad;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      g_hat[x] = std::max(g_hat[x], std::min(p[x][y], good[y]));
      b_hat[y] = std::max(b_hat[y], std::min(bad[x], p[x][y]));
    }
  }
  std::vector<Rational> values = pref_values(L, m);
  for (std::size_t x = 0; x < n; ++x) {
    values[L.unary_pos(x).id] = g_hat[x];
    values[L.unary_neg(x).id] = b_hat[x];
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y) values[L.pref(x, y).id] = std::max(m(x, y), std::min(g_hat[x], b_hat[y]));
    }
  }
  return Valuation(L.universe(), std::move(values));
}

Valuation engine_revise(DoctrineKind kind, const OptionLiterals& literals, const LlullMatrix& m,
                        const ScoreVectors* scores, UnaryInit init, std::size_t cap) {
  Valuation v0 = initial_valuation(literals, m, scores, init);
  if (kind == DoctrineKind::kComprehensiveProminence) {
    return comprehensive_upper_revise(literals, v0, cap);
  }
  return upper_revise(v0, build_doctrine(kind, literals));
}

namespace {

RefinementRound comprehensive_round(const LlullMatrix& m, const OptionSet& options,
                                    std::size_t cap, bool use_engine) {
  LlullMatrix sub = m.restricted_to(options);
  RefinementRound round;
  round.options = options;
  OptionSet local;
  if (use_engine) {
    auto L = make_option_literals(DoctrineKind::kComprehensiveProminence, sub.options());
    Valuation v = engine_revise(DoctrineKind::kComprehensiveProminence, L, sub, nullptr,
                                UnaryInit::kZero, cap);
    for (std::size_t y = 0; y < sub.size(); ++y) round.not_prominent.push_back(v[L.unary_neg(y)]);
    local = not_rejected(unary_acceptabilities(L, v));
  } else {
    round.not_prominent = comprehensive_not_prominent(sub, cap);
    local = argmin(round.not_prominent);
  }
  if (sub.size() == 1) local = {0};
  for (auto i : local) round.winners.push_back(options[i]);
  return round;
}

void run_comprehensive(MethodResult& r, const LlullMatrix& m, const ScoreVectors* scores,
                       const MethodOptions& opt) {
  const auto& L = *r.literals;
  Valuation v0 = initial_valuation(L, m, scores, opt.init);
  r.revised = comprehensive_upper_revise(L, v0, opt.comprehensive_cap);
  r.acceptabilities = unary_acceptabilities(L, *r.revised);
  if (opt.force_engine || opt.init != UnaryInit::kZero) {
    r.winners = not_rejected(r.acceptabilities);
  } else {
    r.winners = argmin(comprehensive_not_prominent(m, opt.comprehensive_cap));
  }
  Valuation once = comprehensive_one_step(L, v0, opt.comprehensive_cap);
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (once[L.unary_pos(x)] > once[L.unary_neg(x)]) r.diagnostics.one_step_winner = x;
  }
  r.diagnostics.maximin = maximin_sets(m, opt.comprehensive_cap);
}

void run_refined(MethodResult& r, const LlullMatrix& m, const MethodOptions& opt) {
  run_comprehensive(r, m, nullptr, opt);
  OptionSet current(m.size());
  for (std::size_t x = 0; x < m.size(); ++x) current[x] = x;
  for (;;) {
    RefinementRound round =
        comprehensive_round(m, current, opt.comprehensive_cap, opt.force_engine);
    const bool shrinks = round.winners.size() >= 2 && round.winners.size() < current.size();
    current = round.winners;
    r.diagnostics.rounds.push_back(std::move(round));
    if (!shrinks) break;
  }
  r.winners = current;
}

}  // namespace

MethodResult run_method(MethodId id, const LlullMatrix& m, const ScoreVectors* scores,
                        const MethodOptions& opt) {
  if (!init_allowed(id, opt.init)) {
    throw ConfigError("method " + std::string(to_string(id)) + " does not accept the '" +
                      std::string(to_string(opt.init)) + "' initialization");
  }
  if (needs_scores(id, opt.init) && scores == nullptr) {
    throw ConfigError("method " + std::string(to_string(id)) + " needs ballot data");
  }
  if (opt.margin < 0 || opt.margin > 1) throw ConfigError("margin outside [0,1]");
  if (scores != nullptr && scores->plurality.size() != m.size()) {
    throw ConfigError("score vectors do not match the Llull matrix");
  }

  MethodResult r;
  r.method = id;
  r.init = opt.init;
  r.options = m.options();
  const DoctrineKind kind = doctrine_of(id);
  r.literals = std::make_shared<const OptionLiterals>(make_option_literals(kind, m.options()));
  const auto& L = *r.literals;
  r.diagnostics.smith_set = smith_set(m);
  r.diagnostics.condorcet = condorcet_diagnostics(m);

  auto engine = [&] { return engine_revise(kind, L, m, scores, opt.init, opt.comprehensive_cap); };

  switch (id) {
    case MethodId::kTransitivity:
      r.revised = opt.force_engine ? engine() : transitivity_closed_form(L, m);
      break;
    case MethodId::kMinimax:
    case MethodId::kPlurality:
      r.revised = opt.force_engine ? engine() : supremacy_closed_form(L, m, scores, opt.init);
      r.acceptabilities = unary_acceptabilities(L, *r.revised);
      r.winners = not_rejected(r.acceptabilities);
      break;
    case MethodId::kMaximin:
      r.revised = opt.force_engine || opt.init != UnaryInit::kZero ? engine()
                                                                   : maximin_closed_form(L, m);
      r.acceptabilities = unary_acceptabilities(L, *r.revised);
      r.winners = argmax(r.acceptabilities);
      break;
    case MethodId::kSymmetricProminence:
      r.revised = opt.force_engine || opt.init != UnaryInit::kZero
                      ? engine()
                      : symmetric_prominence_closed_form(L, m);
      r.acceptabilities = unary_acceptabilities(L, *r.revised);
      r.winners = argmax(r.acceptabilities);
      break;
    case MethodId::kComprehensiveProminence:
      run_comprehensive(r, m, scores, opt);
      break;
    case MethodId::kRefinedComprehensiveProminence:
      run_refined(r, m, opt);
      break;
    case MethodId::kGoodness:
      r.revised = opt.force_engine ? engine() : goodness_closed_form(L, m, scores);
      r.acceptabilities = unary_acceptabilities(L, *r.revised);
      r.winners = argmax(r.acceptabilities);
      break;
    case MethodId::kCav:
      for (std::size_t x = 0; x < m.size(); ++x) {
        r.acceptabilities.push_back(scores->approval[x] - scores->disapproval[x]);
      }
      r.winners = argmax(r.acceptabilities);
      break;
    case MethodId::kApproval:
      r.acceptabilities = scores->approval;
      r.winners = argmax(r.acceptabilities);
      break;
    case MethodId::kPav:
      r.acceptabilities = scores->approval;
      r.winners = pav_winner(m, *scores);
      break;
  }

  if (r.revised) {
    r.decision = decide(*r.revised, opt.margin);
    if (id == MethodId::kTransitivity) {
      r.ranking = ranking_from_decision(L, *r.decision);
      r.winners = r.ranking.front();
    }
  }
  if (m.size() == 1) r.winners = {0};
  return r;
}

}  // namespace llull
