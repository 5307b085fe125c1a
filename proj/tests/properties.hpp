#pragma once

// Randomized property suites shared by the unit tests and the acceptance
// runner. Each returns a tally; zero failures is the pass condition.

#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "llull/blake.hpp"
#include "llull/comprehensive.hpp"
#include "llull/methods.hpp"
#include "llull/serialize.hpp"
#include "oracles.hpp"

namespace props {

using namespace llull;

struct Tally {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::map<std::string, std::size_t> failures_by_kind;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
    static const std::regex case_number(" ?case [0-9]+");
    ++failures_by_kind[std::regex_replace(what.substr(0, what.find('\n')), case_number, "")];
  }
  bool ok() const { return failures == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << cases << " cases, " << checks << " checks, " << failures << " failures";
    for (const auto& [kind, count] : failures_by_kind) out << "\n  " << count << " x " << kind;
    if (!ok()) out << "\nfirst: " << first_failure;
    return out.str();
  }
};

inline std::string show(const LlullMatrix& m) { return "\n" + matrix_to_text(m); }

inline std::string show(const Valuation& v) {
  std::string out;
  for (std::uint32_t i = 0; i < v.universe().size(); ++i) {
    out += " " + v.universe().label(Literal{i}) + "=" + format_rational(v.values()[i]);
  }
  return out;
}

inline bool subset_of(const OptionSet& a, const OptionSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline OptionSet everyone(std::size_t n) {
  OptionSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return all;
}

/// Options whose literal is not rejected at margin 0.
inline OptionSet not_rejected(const Valuation& v, const OptionLiterals& L) {
  Decision d = decide(v, 0);
  OptionSet out;
  for (std::size_t x = 0; x < L.size(); ++x) {
    if (d[L.unary_pos(x)] != Verdict::kRejected) out.push_back(x);
  }
  return out;
}

enum class Raise { kNone, kWithinSide, kPastDivider };

/// Raises x by one step in the ballot: out of a tie, past the divider,
/// or into the tie group above.
inline Raise raise(Ballot& b, std::size_t x) {
  std::vector<TieGroup> groups = b.ranking();
  std::size_t cut = b.approved_groups.size();
  std::size_t g = groups.size();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (oracle::member(groups[i], x)) g = i;
  }
  if (g == groups.size()) return Raise::kNone;
  Raise kind = Raise::kWithinSide;
  if (groups[g].size() > 1) {
    std::erase(groups[g], x);
    groups.insert(groups.begin() + static_cast<long>(g), TieGroup{x});
    if (g < cut) ++cut;
  } else if (b.has_divider && g == cut) {
    ++cut;
    kind = Raise::kPastDivider;
  } else if (g > 0) {
    groups[g - 1].push_back(x);
    std::sort(groups[g - 1].begin(), groups[g - 1].end());
    groups.erase(groups.begin() + static_cast<long>(g));
    if (g < cut) --cut;
  } else {
    return Raise::kNone;
  }
  b.approved_groups.assign(groups.begin(), groups.begin() + static_cast<long>(cut));
  b.disapproved_groups.assign(groups.begin() + static_cast<long>(cut), groups.end());
  return kind;
}

inline std::string ballot_text(const Profile& p) {
  std::string out;
  for (const auto& b : p.ballots()) {
    out += format_rational(b.weight) + ":";
    const auto groups = b.ranking();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (b.has_divider && i == b.approved_groups.size()) out += " |";
      if (i > 0 && !(b.has_divider && i == b.approved_groups.size())) out += " >";
      for (std::size_t j = 0; j < groups[i].size(); ++j) {
        out += (j > 0 ? " = " : " ") + p.options()[groups[i][j]];
      }
    }
    if (b.has_divider && b.approved_groups.size() == groups.size()) out += " |";
    out += "\n";
  }
  return out;
}

/// Truth-table models of a doctrine, as the set of true literal ids.
inline std::vector<std::vector<bool>> models(const Doctrine& d) {
  const std::size_t k = d.universe().size() / 2;
  std::vector<std::vector<bool>> out;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
    std::vector<bool> truth(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
      truth[2 * i] = a >> i & 1;
      truth[2 * i + 1] = !(a >> i & 1);
    }
    bool sat = std::all_of(d.clauses().begin(), d.clauses().end(), [&](const Clause& c) {
      auto lits = c.literals();
      return std::any_of(lits.begin(), lits.end(), [&](Literal l) { return truth[l.id]; });
    });
    if (sat) out.push_back(std::move(truth));
  }
  return out;
}

struct DoctrineCase {
  DoctrineKind kind;
  std::shared_ptr<OptionLiterals> literals;
  std::shared_ptr<Doctrine> doctrine;
  std::vector<std::vector<bool>> models;
};

inline const std::vector<DoctrineKind>& all_kinds() {
  static const std::vector<DoctrineKind> kinds{
      DoctrineKind::kTransitivity,         DoctrineKind::kSupremacy,
      DoctrineKind::kProminence,           DoctrineKind::kSymmetricProminence,
      DoctrineKind::kComprehensiveProminence, DoctrineKind::kGoodness};
  return kinds;
}

inline const DoctrineCase& doctrine_case(DoctrineKind kind, std::size_t n) {
  static std::map<std::pair<DoctrineKind, std::size_t>, DoctrineCase> cache;
  auto key = std::make_pair(kind, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    DoctrineCase c{kind, std::make_shared<OptionLiterals>(make_option_literals(kind, oracle::names(n))),
                   nullptr, {}};
    c.doctrine = std::make_shared<Doctrine>(build_doctrine(kind, *c.literals));
    c.models = models(*c.doctrine);
    it = cache.emplace(key, std::move(c)).first;
  }
  return it->second;
}

// Revision laws, decisions and the voting-level theorems.
inline Tally theorem_suite(std::uint64_t seed, std::size_t cases) {
  Tally t;
  oracle::Rng rng(seed);
  const std::vector<Rational> margins{Rational(0), Rational(1, 4), Rational(1, 2)};
  for (std::size_t i = 0; i < cases; ++i, ++t.cases) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const DoctrineKind kind = all_kinds()[i % all_kinds().size()];
    const auto& dc = doctrine_case(kind, n);
    const Doctrine& d = *dc.doctrine;
    const auto& u = d.universe_ptr();
    const std::string where = std::string(to_string(kind)) + " n=" + std::to_string(n) +
                              " case " + std::to_string(i);

    Valuation v = oracle::random_valuation(rng, u, 6);
    Valuation hat = upper_revise(v, d);
    t.check(hat == oracle::fixed_point(v, d), where + ": accelerated = reference iteration" + show(v));
    t.check(hat == upper_revise_naive(v, d), where + ": accelerated = plain iteration");
    t.check(v.leq(hat), where + ": inflation" + show(v));
    t.check(oracle::one_step(hat, d) == hat, where + ": idempotence" + show(v));
    for (const auto& value : hat.values()) {
      t.check(std::find(v.values().begin(), v.values().end(), value) != v.values().end(),
              where + ": image containment" + show(v));
    }
    for (const auto& mu : margins) {
      t.check(is_definitely_consistent(decide(hat, mu), d),
              where + ": definite consistency at " + format_rational(mu) + show(v));
    }

    std::vector<Rational> raised(v.values().begin(), v.values().end());
    for (auto& x : raised) x = std::min(Rational(1), x + oracle::q(rng.uniform(0, 3), 6));
    Valuation w(u, raised);
    t.check(hat.leq(upper_revise(w, d)), where + ": monotonicity" + show(v) + " /" + show(w));

    Literal l{static_cast<std::uint32_t>(rng.uniform(0, static_cast<int>(u->size()) - 1))};
    Valuation lifted = v.with(l, std::min(Rational(1), v[l] + oracle::q(rng.uniform(1, 6), 6)));
    t.check(acceptability(upper_revise(lifted, d), l) >= acceptability(hat, l),
            where + ": single-literal monotonicity for " + u->label(l) + show(v));

    if (!dc.models.empty()) {
      const auto& truth = dc.models[static_cast<std::size_t>(
          rng.uniform(0, static_cast<int>(dc.models.size()) - 1))];
      std::vector<Rational> bal(u->size());
      for (std::size_t k = 0; k < u->size(); k += 2) {
        Rational high = oracle::q(rng.uniform(4, 7), 7);
        bal[k] = truth[k] ? high : 1 - high;
        bal[k + 1] = 1 - bal[k];
      }
      Valuation b(u, bal);
      Decision before = decide(b, 0);
      if (b.is_balanced() && is_definitely_consistent(before, d)) {
        Decision after = decide(upper_revise(b, d), 0);
        bool same = true;
        for (std::uint32_t k = 0; k < u->size(); ++k) same = same && before[Literal{k}] == after[Literal{k}];
        t.check(same, where + ": respect for consistent majority" + show(b));
      } else {
        t.check(false, where + ": model-derived valuation should be consistent" + show(b));
      }
    }

    // Voting-level statements on a random matrix.
    LlullMatrix m = oracle::random_matrix(rng, n, 12, rng.coin());
    const std::string mwhere = "case " + std::to_string(i) + show(m);
    const auto cond = condorcet_diagnostics(m);
    auto sym = run_method(MethodId::kSymmetricProminence, m, nullptr);
    for (std::size_t x = 0; x < n; ++x) {
      bool winner = true;
      bool loser = true;
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        winner = winner && m(x, y) > Rational(1, 2);
        loser = loser && m(y, x) > Rational(1, 2);
      }
      Verdict verdict = (*sym.decision)[sym.literals->unary_pos(x)];
      if (winner) {
        t.check(verdict == Verdict::kAccepted, "Condorcet winner accepted as prominent, " + mwhere);
        t.check(cond.winner == x, "Condorcet winner reported, " + mwhere);
      }
      if (loser) {
        t.check(verdict == Verdict::kRejected, "Condorcet loser rejected as prominent, " + mwhere);
        t.check(cond.loser == x, "Condorcet loser reported, " + mwhere);
      }
    }

    auto comp = run_method(MethodId::kComprehensiveProminence, m, nullptr);
    const OptionSet& winners = comp.winners;
    t.check(subset_of(winners, oracle::smith(m)), "comprehensive winners within the Smith set, " + mwhere);
    const auto& CL = *comp.literals;
    for (const auto& set : oracle::subsets(n, true)) {
      bool dominant = true;
      for (auto x : set) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!oracle::member(set, y) && m(x, y) <= Rational(1, 2)) dominant = false;
        }
      }
      if (!dominant) continue;
      for (auto x : set) {
        for (std::size_t y = 0; y < n; ++y) {
          if (oracle::member(set, y)) continue;
          t.check((*comp.revised)[CL.pref(y, x)] <= Rational(1, 2) &&
                      (*comp.decision)[CL.pref(x, y)] == Verdict::kAccepted,
                  "dominant set members beat outsiders, " + mwhere);
        }
      }
    }
    if (winners.size() == 1) {
      t.check(maximin_winners(m) == winners, "unique comprehensive winner is the maximin winner, " + mwhere);
    }
    Rational best = -1;
    std::vector<OptionSet> maximin;
    for (const auto& set : oracle::subsets(n, true)) {
      Rational s = oracle::sigma(m, set);
      if (s > best) {
        best = s;
        maximin.clear();
      }
      if (s == best) maximin.push_back(set);
    }
    OptionSet common = everyone(n);
    for (const auto& set : maximin) {
      OptionSet next;
      std::set_intersection(common.begin(), common.end(), set.begin(), set.end(),
                            std::back_inserter(next));
      common = next;
    }
    if (common.empty()) {
      t.check(winners == everyone(n), "disjoint maximin sets leave every option winning, " + mwhere);
    }
    if (winners != everyone(n)) {
      t.check(subset_of(winners, common), "comprehensive winners within every maximin set, " + mwhere);
    }
  }
  return t;
}

// Raising an option in approval-disapproval-preferential ballots against
// the goodness acceptabilities.
inline Tally goodness_raising_suite(std::uint64_t seed, std::size_t cases) {
  Tally t;
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++t.cases) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    oracle::ProfileShape shape{true, false, true, true};
    Profile p = oracle::random_profile(rng, n, 6, 3, shape);
    auto ballots = p.ballots();
    const std::size_t x = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(n) - 1));
    bool moved = false;
    bool crossed = false;
    for (auto& b : ballots) {
      if (!rng.coin()) continue;
      Raise r = raise(b, x);
      moved = moved || r != Raise::kNone;
      crossed = crossed || r == Raise::kPastDivider;
    }
    if (moved) {
      Profile q(p.options(), ballots);
      auto before = score_vectors(p);
      auto after = score_vectors(q);
      MethodOptions opt{UnaryInit::kApproval};
      auto g0 = run_method(MethodId::kGoodness, llull_matrix(p), &before, opt).acceptabilities;
      auto g1 = run_method(MethodId::kGoodness, llull_matrix(q), &after, opt).acceptabilities;
      const std::string gwhere = std::string(crossed ? "past the divider" : "within one side") +
                                 ", raising " + p.options()[x] + " in\n" + ballot_text(p) +
                                 "giving\n" + ballot_text(q);
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) {
          t.check(g1[y] >= g0[y], "goodness of the raised option did not drop, " + gwhere);
        } else {
          t.check(g1[y] <= g0[y], "goodness of the others did not rise, " + gwhere);
        }
      }
    }
  }
  return t;
}

// Supremacy winners from the engine against plurality and minimax counts.
inline Tally supremacy_suite(std::uint64_t seed, std::size_t cases) {
  Tally t;
  oracle::Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++t.cases) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    oracle::ProfileShape shape{rng.coin(), rng.coin(), false, true};
    Profile p = oracle::random_profile(rng, n, 8, 3, shape);
    LlullMatrix m = llull_matrix(p);
    ScoreVectors s = score_vectors(p);
    const std::string where = "case " + std::to_string(i) + "\n" + ballot_text(p);

    std::vector<Rational> f(n, Rational(0));
    for (const auto& b : p.ballots()) {
      const auto top = b.ranking().front();
      for (auto x : top) f[x] += b.weight / static_cast<long long>(top.size());
    }
    for (auto& x : f) x /= p.total_weight();
    t.check(f == s.plurality, "plurality counts, " + where);

    std::vector<Rational> M(n, Rational(0));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x) M[x] = std::max(M[x], m(y, x));
      }
    }

    auto L = make_option_literals(DoctrineKind::kSupremacy, m.options());
    Doctrine d = build_doctrine(DoctrineKind::kSupremacy, L);
    Valuation plur = upper_revise(initial_valuation(L, m, &s, UnaryInit::kPlurality), d);
    Valuation zero = upper_revise(initial_valuation(L, m, &s, UnaryInit::kZero), d);
    t.check(not_rejected(plur, L) == argmax(f), "plurality-init engine winners = argmax f, " + where);
    t.check(not_rejected(zero, L) == argmin(M), "zero-init engine winners = argmin M, " + where);
    t.check(run_method(MethodId::kPlurality, m, &s, {UnaryInit::kPlurality}).winners == argmax(f),
            "plurality method winners, " + where);
    t.check(run_method(MethodId::kMinimax, m, &s).winners == argmin(M),
            "minimax method winners, " + where);
  }
  return t;
}

// Closed forms against the generic engine, and the closure against
// exhaustive path search.
inline Tally closed_form_suite(std::uint64_t seed, std::size_t cases) {
  Tally t;
  oracle::Rng rng(seed);
  auto fixed = [](DoctrineKind k, const OptionLiterals& L, const LlullMatrix& m,
                  const ScoreVectors* s, UnaryInit init) {
    return upper_revise(initial_valuation(L, m, s, init), build_doctrine(k, L));
  };
  for (std::size_t i = 0; i < cases; ++i, ++t.cases) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    LlullMatrix m = rng.coin(70) ? oracle::random_matrix(rng, n, rng.uniform(2, 12), rng.coin())
                                 : llull_matrix(oracle::random_profile(
                                       rng, n, 8, 3, oracle::ProfileShape{true, true, false, true}));
    const std::string where = "case " + std::to_string(i) + show(m);

    auto paths = paths_closure(m);
    t.check(paths == oracle::simple_paths(m), "widest paths = exhaustive search, " + where);
    {
      auto L = make_option_literals(DoctrineKind::kTransitivity, m.options());
      Valuation engine = fixed(DoctrineKind::kTransitivity, L, m, nullptr, UnaryInit::kZero);
      t.check(transitivity_closed_form(L, m) == engine, "transitivity closed form, " + where);
      bool same = true;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x != y) same = same && engine[L.pref(x, y)] == paths[x][y];
        }
      }
      t.check(same, "revised p(x,y) = widest path, " + where);
    }
    {
      auto L = make_option_literals(DoctrineKind::kSupremacy, m.options());
      t.check(supremacy_closed_form(L, m, nullptr, UnaryInit::kZero) ==
                  fixed(DoctrineKind::kSupremacy, L, m, nullptr, UnaryInit::kZero),
              "minimax closed form, " + where);
    }
    {
      auto L = make_option_literals(DoctrineKind::kProminence, m.options());
      t.check(maximin_closed_form(L, m) ==
                  fixed(DoctrineKind::kProminence, L, m, nullptr, UnaryInit::kZero),
              "maximin closed form, " + where);
    }
    {
      auto L = make_option_literals(DoctrineKind::kSymmetricProminence, m.options());
      t.check(symmetric_prominence_closed_form(L, m) ==
                  fixed(DoctrineKind::kSymmetricProminence, L, m, nullptr, UnaryInit::kZero),
              "symmetric prominence closed form, " + where);
    }
    {
      auto L = make_option_literals(DoctrineKind::kComprehensiveProminence, m.options());
      Valuation engine =
          fixed(DoctrineKind::kComprehensiveProminence, L, m, nullptr, UnaryInit::kZero);
      std::vector<Rational> not_t;
      for (std::size_t y = 0; y < n; ++y) not_t.push_back(engine[L.unary_neg(y)]);
      t.check(comprehensive_not_prominent(m) == not_t, "not-prominent subset formula, " + where);
      t.check(oracle::not_prominent(m) == not_t, "not-prominent by subset listing, " + where);
      t.check(comprehensive_upper_revise(L, initial_valuation(L, m, nullptr, UnaryInit::kZero)) ==
                  engine,
              "subset kernel = materialized clauses, " + where);
    }
    {
      auto L = make_option_literals(DoctrineKind::kGoodness, m.options());
      t.check(goodness_closed_form(L, m, nullptr) ==
                  fixed(DoctrineKind::kGoodness, L, m, nullptr, UnaryInit::kZero),
              "goodness path formulas, " + where);
    }

    // Ballot-backed initializations.
    Profile p = oracle::random_profile(rng, n, 8, 3, oracle::ProfileShape{true, true, true, true});
    LlullMatrix pm = llull_matrix(p);
    ScoreVectors s = score_vectors(p);
    const std::string pwhere = "case " + std::to_string(i) + "\n" + ballot_text(p);
    {
      auto L = make_option_literals(DoctrineKind::kSupremacy, pm.options());
      t.check(supremacy_closed_form(L, pm, &s, UnaryInit::kPlurality) ==
                  fixed(DoctrineKind::kSupremacy, L, pm, &s, UnaryInit::kPlurality),
              "plurality closed form, " + pwhere);
    }
    {
      auto L = make_option_literals(DoctrineKind::kGoodness, pm.options());
      t.check(goodness_closed_form(L, pm, &s) ==
                  fixed(DoctrineKind::kGoodness, L, pm, &s, UnaryInit::kApproval),
              "goodness path formulas with approval, " + pwhere);
    }
    {
      auto L = make_option_literals(DoctrineKind::kSymmetricProminence, pm.options());
      t.check(fixed(DoctrineKind::kSymmetricProminence, L, pm, &s, UnaryInit::kPluralityAndLast) ==
                  fixed(DoctrineKind::kSymmetricProminence, L, pm, &s, UnaryInit::kZero),
              "symmetric prominence ignores plurality-last init, " + pwhere);
    }
  }
  return t;
}

// Canonical forms against closed-form families and truth tables.
inline Tally blake_suite(std::uint64_t seed, std::size_t valuations_per_form) {
  Tally t;
  oracle::Rng rng(seed);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (DoctrineKind kind : all_kinds()) {
      ++t.cases;
      const auto& dc = doctrine_case(kind, n);
      const OptionLiterals& L = *dc.literals;
      const Doctrine& d = *dc.doctrine;
      const std::string where = std::string(to_string(kind)) + " n=" + std::to_string(n);
      Doctrine blake = blake_canonical_form(d);
      auto proper = oracle::clause_set(blake.proper_clauses());
      auto all = oracle::clause_set(blake.clauses());
      t.check(proper == oracle::prime_implicates(d), where + ": canonical form = prime implicates");
      auto tnd = oracle::tertium(d.universe());
      t.check(std::includes(all.begin(), all.end(), tnd.begin(), tnd.end()),
              where + ": canonical form keeps tertium non datur");

      switch (kind) {
        case DoctrineKind::kTransitivity:
          t.check(proper == oracle::cycles(L), where + ": directed cycle clauses");
          break;
        case DoctrineKind::kSupremacy:
          t.check(proper == oracle::minimal(oracle::supremacy_family(L)),
                  where + ": supremacy family");
          break;
        case DoctrineKind::kProminence:
          t.check(proper == oracle::prominence_family(L, false), where + ": prominence family");
          break;
        case DoctrineKind::kSymmetricProminence:
          t.check(proper == oracle::prominence_family(L, true),
                  where + ": symmetric prominence family");
          break;
        case DoctrineKind::kGoodness:
          t.check(proper == oracle::goodness_chains(L), where + ": goodness chains");
          break;
        case DoctrineKind::kComprehensiveProminence:
          t.check(all == oracle::clause_set(d.clauses()), where + ": input is its own canonical form");
          break;
      }

      for (std::size_t k = 0; k < valuations_per_form; ++k) {
        Valuation v = oracle::random_valuation(rng, d.universe_ptr(), 6);
        if (kind == DoctrineKind::kComprehensiveProminence) {
          // Unary values start at zero for the unquestionability statement.
          LlullMatrix m = oracle::random_matrix(rng, n, 12, rng.coin());
          Valuation v0 = initial_valuation(L, m, nullptr, UnaryInit::kZero);
          std::vector<Literal> not_t;
          for (std::size_t y = 0; y < n; ++y) not_t.push_back(L.unary_neg(y));
          Valuation hat = upper_revise(v0, d);
          Valuation once = oracle::one_step(v0, blake);
          bool same = true;
          for (auto l : not_t) same = same && hat[l] == once[l];
          t.check(same, where + ": ~t unquestionable" + show(m));
        } else {
          t.check(upper_revise(v, d) == upper_revise(v, blake),
                  where + ": same upper revision on the canonical form" + show(v));
        }
      }
    }
  }
  return t;
}

/// Every clause derivable from symmetric prominence plus existence and
/// uniqueness is absorbed by a comprehensive prominence clause.
inline Tally comprehensive_absorbs_derived() {
  Tally t;
  for (std::size_t n = 2; n <= 5; ++n) {
    ++t.cases;
    auto L = make_option_literals(DoctrineKind::kComprehensiveProminence, oracle::names(n));
    Doctrine d = build_doctrine(DoctrineKind::kComprehensiveProminence, L);
    auto have = oracle::clause_set(d.clauses());
    const std::string where = "n=" + std::to_string(n);
    auto check = [&](std::vector<Literal> lits, const std::string& what) {
      auto c = oracle::ids(Clause(std::move(lits)));
      t.check(std::any_of(have.begin(), have.end(),
                          [&](const oracle::Ids& h) {
                            return std::includes(c.begin(), c.end(), h.begin(), h.end());
                          }),
              where + ": " + what);
    };
    auto into = [&](std::size_t x, std::vector<Literal>& out, std::initializer_list<std::size_t> skip) {
      for (std::size_t z = 0; z < n; ++z) {
        if (std::find(skip.begin(), skip.end(), z) == skip.end()) out.push_back(L.pref(z, x));
      }
    };
    std::vector<Literal> exists;
    for (std::size_t x = 0; x < n; ++x) {
      exists.push_back(L.unary_pos(x));
      std::vector<Literal> best{L.unary_pos(x)};
      std::vector<Literal> worst{L.unary_neg(x)};
      std::vector<Literal> others;
      for (std::size_t z = 0; z < n; ++z) {
        if (z == x) continue;
        best.push_back(L.pref(z, x));
        worst.push_back(L.pref(x, z));
        others.push_back(L.unary_pos(z));
        others.push_back(L.pref(x, z));
      }
      check(best, "best implies prominent");
      check(worst, "worst implies not prominent");
      check(others, "another option is prominent or x is beaten");
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x) continue;
        if (x < y) {
          check({L.unary_neg(x), L.unary_neg(y)}, "uniqueness");
          std::vector<Literal> pair{L.unary_pos(x), L.unary_pos(y)};
          into(x, pair, {x, y});
          into(y, pair, {x, y});
          check(pair, "one of two unbeaten options is prominent");
        }
        std::vector<Literal> beaten{L.unary_neg(y)};
        into(x, beaten, {x});
        check(beaten, "an unbeaten rival excludes prominence");
        for (std::size_t w = 0; w < n; ++w) {
          if (w == x || w == y) continue;
          std::vector<Literal> two{L.unary_neg(y)};
          into(x, two, {x, w});
          into(w, two, {x, w});
          check(two, "two unbeaten rivals exclude prominence");
        }
      }
    }
    check(exists, "some option is prominent");
  }
  return t;
}

}  // namespace props
