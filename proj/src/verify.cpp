#include "llull/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "llull/blake.hpp"
#include "llull/comprehensive.hpp"
#include "llull/doctrines.hpp"
#include "llull/methods.hpp"

namespace llull {

bool OracleReport::all_agree() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.agree; });
}

namespace {

class Checker {
 public:
  explicit Checker(const VerifyOptions& options) : options_(options) {}

  void valuations(const std::string& name, const Valuation& fast, const Valuation& slow) {
    std::vector<Rational> a(fast.values().begin(), fast.values().end());
    if (options_.tamper) options_.tamper(name, a);
    OracleCheck c{name, true, {}};
    const auto& u = slow.universe();
    for (std::uint32_t i = 0; i < a.size() && i < u.size(); ++i) {
      if (a[i] != slow.values()[i]) {
        c.agree = false;
        c.detail = u.label(Literal{i}) + ": " + format_rational(a[i]) + " vs " +
                   format_rational(slow.values()[i]);
        break;
      }
    }
    if (c.agree && a.size() != u.size()) {
      c.agree = false;
      c.detail = "valuation sizes differ";
    }
    report_.checks.push_back(std::move(c));
  }

  void values(const std::string& name, std::vector<Rational> fast,
              const std::vector<Rational>& slow, const std::vector<std::string>& labels) {
    if (options_.tamper) options_.tamper(name, fast);
    OracleCheck c{name, true, {}};
    for (std::size_t i = 0; i < slow.size(); ++i) {
      if (i >= fast.size() || fast[i] != slow[i]) {
        c.agree = false;
        c.detail = labels.at(i) + ": " +
                   (i < fast.size() ? format_rational(fast[i]) : std::string("missing")) +
                   " vs " + format_rational(slow[i]);
        break;
      }
    }
    report_.checks.push_back(std::move(c));
  }

  void sets(const std::string& name, const OptionSet& fast, const OptionSet& slow,
            const std::vector<std::string>& options) {
    std::vector<Rational> a(options.size(), Rational(0));
    std::vector<Rational> b(options.size(), Rational(0));
    for (auto x : fast) a[x] = 1;
    for (auto x : slow) b[x] = 1;
    values(name, std::move(a), b, options);
  }

  OracleReport take() { return std::move(report_); }

 private:
  const VerifyOptions& options_;
  OracleReport report_;
};

bool star_equivalent(DoctrineKind k) { return k != DoctrineKind::kComprehensiveProminence; }

}  // namespace

OracleReport verify_matrix(const LlullMatrix& m, const ScoreVectors* scores,
                           const VerifyOptions& options) {
  Checker check(options);
  const std::size_t n = m.size();
  const std::size_t cap = options.comprehensive_cap;

  auto lits = [&](DoctrineKind k) { return make_option_literals(k, m.options()); };

  {
    auto L = lits(DoctrineKind::kTransitivity);
    check.valuations("transitivity: paths closure = engine", transitivity_closed_form(L, m),
                     engine_revise(DoctrineKind::kTransitivity, L, m, nullptr, UnaryInit::kZero));
  }
  {
    auto L = lits(DoctrineKind::kSupremacy);
    check.valuations("minimax: closed form = supremacy engine, zero init",
                     supremacy_closed_form(L, m, nullptr, UnaryInit::kZero),
                     engine_revise(DoctrineKind::kSupremacy, L, m, nullptr, UnaryInit::kZero));
    if (scores != nullptr) {
      check.valuations(
          "plurality: closed form = supremacy engine, plurality init",
          supremacy_closed_form(L, m, scores, UnaryInit::kPlurality),
          engine_revise(DoctrineKind::kSupremacy, L, m, scores, UnaryInit::kPlurality));
    }
  }
  {
    auto L = lits(DoctrineKind::kProminence);
    check.valuations("maximin: closed form = prominence engine", maximin_closed_form(L, m),
                     engine_revise(DoctrineKind::kProminence, L, m, nullptr, UnaryInit::kZero));
  }
  {
    auto L = lits(DoctrineKind::kSymmetricProminence);
    check.valuations(
        "symmetric-prominence: closed form = engine", symmetric_prominence_closed_form(L, m),
        engine_revise(DoctrineKind::kSymmetricProminence, L, m, nullptr, UnaryInit::kZero));
  }
  {
    auto L = lits(DoctrineKind::kComprehensiveProminence);
    Valuation kernel = engine_revise(DoctrineKind::kComprehensiveProminence, L, m, nullptr,
                                     UnaryInit::kZero, cap);
    std::vector<Rational> not_t;
    std::vector<std::string> labels;
    for (std::size_t y = 0; y < n; ++y) {
      not_t.push_back(kernel[L.unary_neg(y)]);
      labels.push_back(L.universe()->label(L.unary_neg(y)));
    }
    check.values("comprehensive-prominence: subset formula = fixed point of ~t",
                 comprehensive_not_prominent(m, cap), not_t, labels);
    if (n <= options.blake_max_options + 1) {
      Doctrine d = build_doctrine(DoctrineKind::kComprehensiveProminence, L, {cap});
      Valuation v0 = initial_valuation(L, m, nullptr, UnaryInit::kZero);
      check.valuations("comprehensive-prominence: subset kernel = materialized clauses", kernel,
                       upper_revise(v0, d));
    }
  }
  {
    auto L = lits(DoctrineKind::kGoodness);
    UnaryInit init = scores != nullptr ? UnaryInit::kApproval : UnaryInit::kZero;
    check.valuations("goodness: path formulas = engine", goodness_closed_form(L, m, scores),
                     engine_revise(DoctrineKind::kGoodness, L, m, scores, init));
  }

  for (MethodId id : all_methods()) {
    if (id == MethodId::kCav || id == MethodId::kApproval || id == MethodId::kPav) continue;
    UnaryInit init = default_init(id);
    if (needs_scores(id, init) && scores == nullptr) continue;
    MethodOptions fast{init, 0, cap, false};
    MethodOptions slow{init, 0, cap, true};
    check.sets(std::string(to_string(id)) + ": winners = engine winners",
               run_method(id, m, scores, fast).winners, run_method(id, m, scores, slow).winners,
               m.options());
  }

  if (n <= options.blake_max_options) {
    for (DoctrineKind k : {DoctrineKind::kTransitivity, DoctrineKind::kSupremacy,
                           DoctrineKind::kProminence, DoctrineKind::kSymmetricProminence,
                           DoctrineKind::kGoodness, DoctrineKind::kComprehensiveProminence}) {
      auto L = lits(k);
      Doctrine d = build_doctrine(k, L, {cap});
      Doctrine blake = blake_canonical_form(d);
      UnaryInit init = k == DoctrineKind::kGoodness && scores != nullptr ? UnaryInit::kApproval
                                                                          : UnaryInit::kZero;
      Valuation v0 = initial_valuation(L, m, scores, init);
      if (star_equivalent(k)) {
        check.valuations(std::string(to_string(k)) + ": upper revision = on Blake form",
                         upper_revise(v0, blake), upper_revise(v0, d));
      } else {
        std::vector<Literal> not_t;
        for (std::size_t y = 0; y < n; ++y) not_t.push_back(L.unary_neg(y));
        std::vector<Rational> once;
        std::vector<Rational> fixed;
        std::vector<std::string> labels;
        for (const auto& e : verify_unquestionability(v0, d, blake, not_t)) {
          once.push_back(e.one_step);
          fixed.push_back(e.fixed_point);
          labels.push_back(L.universe()->label(e.literal));
        }
        check.values("comprehensive-prominence: ~t unquestionable", once, fixed, labels);
      }
    }
  }
  return check.take();
}

std::string report_to_text(const OracleReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.agree ? "agree     " : "DISAGREE  ") << c.name;
    if (!c.agree) out << "  (" << c.detail << ")";
    out << '\n';
  }
  out << (r.all_agree() ? "all oracles agree\n" : "oracle disagreement detected\n");
  return out.str();
}

nlohmann::json report_to_json(const OracleReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"agree", c.agree}, {"detail", c.detail}});
  }
  return {{"checks", std::move(checks)}, {"all_agree", r.all_agree()}};
}

ConjectureReport run_conjecture_experiment(const ConjectureOptions& options) {
  ConjectureReport report;
  report.config = options;
  std::mt19937_64 rng(options.seed);
  const auto names = default_option_names(options.options);
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    std::vector<Ballot> ballots(pick(1, options.max_ballots));
    std::ostringstream text;
    for (auto& b : ballots) {
      b.weight = static_cast<long>(pick(1, static_cast<std::size_t>(options.max_weight)));
      std::vector<std::size_t> order(options.options);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      if (!options.complete) order.resize(pick(1, options.options));
      text << b.weight.str() << ":";
      for (std::size_t i = 0; i < order.size(); ++i) {
        b.approved_groups.push_back({order[i]});
        text << (i == 0 ? " " : " > ") << names[order[i]];
      }
      text << '\n';
    }
    Profile profile(names, std::move(ballots));
    LlullMatrix m = llull_matrix(profile);
    OptionSet transitive = run_method(MethodId::kTransitivity, m, nullptr).winners;
    OptionSet refined = run_method(MethodId::kRefinedComprehensiveProminence, m, nullptr).winners;
    if (!std::includes(refined.begin(), refined.end(), transitive.begin(), transitive.end())) {
      ++report.counterexamples;
      if (!report.first_counterexample) report.first_counterexample = text.str();
    }
  }
  return report;
}

std::string conjecture_to_text(const ConjectureReport& r) {
  std::ostringstream out;
  out << "trials: " << r.config.trials << '\n'
      << "options: " << r.config.options << '\n'
      << "complete: " << (r.config.complete ? "yes" : "no") << '\n'
      << "seed: " << r.config.seed << '\n'
      << "counterexamples: " << r.counterexamples << '\n';
  if (r.first_counterexample) out << "first counterexample:\n" << *r.first_counterexample;
  return out.str();
}

nlohmann::json conjecture_to_json(const ConjectureReport& r) {
  return {{"trials", r.config.trials},
          {"options", r.config.options},
          {"complete", r.config.complete},
          {"seed", r.config.seed},
          {"counterexamples", r.counterexamples},
          {"first_counterexample", r.first_counterexample ? nlohmann::json(*r.first_counterexample)
                                                          : nlohmann::json(nullptr)}};
}

}  // namespace llull
