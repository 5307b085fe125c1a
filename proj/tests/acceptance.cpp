// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit when
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "llull/ballots.hpp"
#include "llull/methods.hpp"
#include "llull/serialize.hpp"
#include "llull/verify.hpp"
#include "properties.hpp"

using namespace llull;

namespace {

const std::string kFixtures = LLULL_FIXTURES;

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  template <class A, class B>
  void expect(const std::string& what, const A& actual, const B& expected) {
    bool ok = actual == expected;
    if (!ok) {
      pass = false;
      notes << "\n    " << what << ": got " << render(actual) << ", expected " << render(expected);
    }
  }
  void expect_tally(const std::string& what, const props::Tally& t) {
    notes << "\n    " << what << ": " << t.summary();
    if (!t.ok()) pass = false;
  }

  static std::string render(std::size_t n) { return std::to_string(n); }
  static std::string render(const Rational& r) { return format_rational(r); }
  static std::string render(const std::vector<Rational>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_rational(v[i]);
    return out + ")";
  }
  static std::string render(const OptionSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::string(1, char('a' + s[i]));
    return out + "}";
  }
  static std::string render(const std::vector<OptionSet>& v) {
    std::string out;
    for (const auto& s : v) out += render(s);
    return "[" + out + "]";
  }
  static std::string render(const std::optional<std::size_t>& x) {
    return x ? std::string(1, char('a' + *x)) : "none";
  }
  static std::string render(Verdict v) {
    return v == Verdict::kAccepted ? "accepted" : v == Verdict::kRejected ? "rejected" : "undecided";
  }
  static std::string render(const LlullMatrix& m) { return "\n" + matrix_to_text(m); }
};

Rational q(long long n, long long d = 1) { return Rational(n) / d; }

/// Fixture options are listed in first-appearance order; tests address
/// them by name.
std::size_t at(const std::vector<std::string>& options, const std::string& name) {
  return static_cast<std::size_t>(std::find(options.begin(), options.end(), name) - options.begin());
}

OptionSet named(const std::vector<std::string>& options, std::initializer_list<const char*> names) {
  OptionSet out;
  for (auto n : names) out.push_back(at(options, n));
  std::sort(out.begin(), out.end());
  return out;
}

struct Loaded {
  Profile profile;
  LlullMatrix matrix;
  ScoreVectors scores;
};

Loaded load(const std::string& name, const ParamMap& params = {},
            TruncationMode mode = TruncationMode::kAbstain) {
  Profile p = read_profile_file(kFixtures + "/" + name, params);
  LlullMatrix m = llull_matrix(p, mode);
  ScoreVectors s = score_vectors(p);
  return {std::move(p), std::move(m), std::move(s)};
}

/// Entries a(y)/den from a row-major count table over options a, b, c, d.
LlullMatrix counts(std::vector<std::vector<int>> rows, int den) {
  std::vector<Rational> v;
  for (const auto& r : rows) {
    for (int c : r) v.push_back(q(c, den));
  }
  return LlullMatrix({"a", "b", "c", "d"}, std::move(v));
}

Outcome criterion1() {
  Outcome o;
  auto f = load("sym_prominence.txt");
  const auto& opt = f.matrix.options();
  auto r = run_method(MethodId::kSymmetricProminence, f.matrix, &f.scores);
  o.expect("t(a) acceptability", r.acceptabilities[at(opt, "a")], q(1, 5));
  o.expect("t(b) acceptability", r.acceptabilities[at(opt, "b")], q(2, 5));
  o.expect("winners", r.winners, named(opt, {"b"}));
  o.expect("Condorcet winner", r.diagnostics.condorcet.winner,
           std::optional<std::size_t>(at(opt, "a")));
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto f = load("maximin_four.txt");
  // counts out of the nine voters
  o.expect("matrix", f.matrix,
           counts({{0, 6, 3, 5}, {3, 0, 6, 5}, {6, 3, 0, 5}, {4, 4, 4, 0}}, 9));
  const auto& opt = f.matrix.options();
  o.expect("maximin winners", run_method(MethodId::kMaximin, f.matrix, &f.scores).winners,
           named(opt, {"d"}));
  o.expect("minimax winners", run_method(MethodId::kMinimax, f.matrix, &f.scores).winners,
           named(opt, {"d"}));
  auto comp = run_method(MethodId::kComprehensiveProminence, f.matrix, &f.scores);
  o.expect("comprehensive winners", comp.winners, named(opt, {"a", "b", "c"}));
  o.expect("t(d) verdict", (*comp.decision)[comp.literals->unary_pos(at(opt, "d"))],
           Verdict::kRejected);
  o.expect("Smith set", comp.diagnostics.smith_set, named(opt, {"a", "b", "c"}));
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto f = load("maximin_four_perturbed.txt");
  const auto& opt = f.matrix.options();
  auto comp = run_method(MethodId::kComprehensiveProminence, f.matrix, &f.scores);
  o.expect("Smith set", comp.diagnostics.smith_set, named(opt, {"a", "b", "c", "d"}));
  o.expect("comprehensive winners", comp.winners, named(opt, {"a", "b", "c"}));
  auto sets = maximin_sets(f.matrix);
  o.expect("maximin sets", sets.sets, std::vector<OptionSet>{named(opt, {"a", "b", "c"})});
  o.expect("sigma", sets.sigma, q(17, 40));
  return o;
}

Outcome criterion4() {
  Outcome o;
  LlullMatrix m = read_matrix_file(kFixtures + "/uneven_cycle.json");
  const auto& opt = m.options();
  auto r = run_method(MethodId::kRefinedComprehensiveProminence, m, nullptr);
  if (r.diagnostics.rounds.empty()) {
    o.expect("refinement rounds", std::size_t{0}, std::size_t{2});
    return o;
  }
  o.expect("round 1 winners", r.diagnostics.rounds.front().winners, named(opt, {"a", "b", "c"}));
  o.expect("final winners", r.winners, named(opt, {"a"}));
  o.expect("plain comprehensive winners",
           run_method(MethodId::kComprehensiveProminence, m, nullptr).winners,
           named(opt, {"a", "b", "c"}));
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto f = load("truncated_three.txt");
  const auto& opt = f.matrix.options();
  auto tr = run_method(MethodId::kTransitivity, f.matrix, &f.scores);
  o.expect("transitivity ranking", tr.ranking,
           std::vector<OptionSet>{named(opt, {"a"}), named(opt, {"b"}), named(opt, {"c"})});
  o.expect("comprehensive winners",
           run_method(MethodId::kComprehensiveProminence, f.matrix, &f.scores).winners,
           named(opt, {"b"}));
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto f = load("approval_epsilon.txt", {{"eps", q(1, 10)}});
  const auto& opt = f.matrix.options();
  auto g = run_method(MethodId::kGoodness, f.matrix, &f.scores, {UnaryInit::kApproval});
  o.expect("g(a) acceptability", g.acceptabilities[at(opt, "a")], q(1, 10));
  o.expect("g(b) acceptability", g.acceptabilities[at(opt, "b")], q(9, 20));
  o.expect("goodness winners", g.winners, named(opt, {"b"}));
  o.expect("PAV winner", pav_winner(f.matrix, f.scores), named(opt, {"a"}));
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto f = load("goodness_two.txt");
  const auto& opt = f.matrix.options();
  std::vector<Rational> initial;
  std::vector<Rational> revised;
  auto g = run_method(MethodId::kGoodness, f.matrix, &f.scores, {UnaryInit::kApproval});
  for (const char* name : {"a", "b", "c"}) {
    std::size_t x = at(opt, name);
    initial.push_back((f.scores.approval[x] - f.scores.disapproval[x]) * 13);
    revised.push_back(g.acceptabilities[x] * 13);
  }
  o.expect("initial acceptabilities x13", initial, std::vector<Rational>{-1, -5, 3});
  o.expect("revised acceptabilities x13", revised, std::vector<Rational>{1, -1, -1});
  o.expect("goodness winners", g.winners, named(opt, {"a"}));
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.expect_tally("supremacy engine vs plurality and minimax", props::supremacy_suite(8, 250));
  return o;
}

Outcome criterion9() {
  Outcome o;
  o.expect_tally("closed forms vs generic engine", props::closed_form_suite(9, 250));
  return o;
}

Outcome criterion10() {
  Outcome o;
  o.expect_tally("canonical forms", props::blake_suite(10, 25));
  return o;
}

Outcome criterion11() {
  Outcome o;
  o.expect_tally("revision and voting theorems", props::theorem_suite(11, 600));
  o.expect_tally("goodness under ballot raising", props::goodness_raising_suite(11, 600));
  return o;
}

Outcome criterion12() {
  Outcome o;
  ConjectureOptions c;
  c.trials = 1000;
  c.options = 4;
  c.complete = true;
  c.seed = 12;
  auto r = run_conjecture_experiment(c);
  o.notes << "\n    " << r.counterexamples << " counterexamples in " << c.trials
          << " complete profiles over 4 options (reported, not asserted)";
  if (r.first_counterexample) o.notes << "\n    first:\n" << *r.first_counterexample;
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"symmetric prominence profile", criterion1},
      {"maximin winner beaten by all", criterion2},
      {"perturbed four-option cycle", criterion3},
      {"refined comprehensive prominence", criterion4},
      {"truncated three-option profile", criterion5},
      {"approval profile with epsilon", criterion6},
      {"goodness overturns approval", criterion7},
      {"supremacy winners property", criterion8},
      {"closed form equivalence", criterion9},
      {"canonical form suite", criterion10},
      {"theorem property suite", criterion11},
      {"inclusion experiment", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << "\n    threw: " << e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << i + 1 << "  " << criteria[i].first
              << "  (" << ms << " ms)" << o.notes.str() << "\n";
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
