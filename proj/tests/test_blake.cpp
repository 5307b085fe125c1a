#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "llull/blake.hpp"
#include "llull/errors.hpp"
#include "properties.hpp"

using namespace llull;

namespace {

struct Abc {
  std::shared_ptr<LiteralUniverse> u = std::make_shared<LiteralUniverse>();
  Literal a = u->add_pair("a", "~a");
  Literal b = u->add_pair("b", "~b");
  Literal c = u->add_pair("c", "~c");
  Literal na = u->negation(a);
  Literal nb = u->negation(b);
  Literal nc = u->negation(c);
};

}  // namespace

TEST_CASE("resolution") {
  Abc t;
  auto r = resolve(*t.u, Clause{t.a, t.b}, Clause{t.na, t.c}, t.a);
  REQUIRE(r.has_value());
  CHECK(*r == Clause{t.b, t.c});
  CHECK_FALSE(resolve(*t.u, Clause{t.a, t.b}, Clause{t.na, t.nb}, t.a).has_value());
  CHECK_THROWS_AS(resolve(*t.u, Clause{t.a, t.b}, Clause{t.na, t.c}, t.c), std::invalid_argument);
  CHECK_THROWS_AS(resolve(*t.u, Clause{t.a, t.b}, Clause{t.a, t.c}, t.a), std::invalid_argument);
  CHECK_THROWS_AS(resolve(*t.u, Clause{t.a, t.b}, Clause{t.na, t.b}, t.b), std::invalid_argument);
}

TEST_CASE("canonical form adds resolvents and drops absorbed clauses") {
  Abc t;
  Doctrine d(t.u, {Clause{t.a, t.b}, Clause{t.na, t.c}, Clause{t.a, t.b, t.c}});
  std::vector<ResolutionTrace> trace;
  Doctrine blake = blake_canonical_form(d, {}, &trace);
  auto have = oracle::clause_set(blake.proper_clauses());
  CHECK(have == std::set<oracle::Ids>{oracle::ids(Clause{t.a, t.b}), oracle::ids(Clause{t.na, t.c}),
                                      oracle::ids(Clause{t.b, t.c})});
  CHECK(have == oracle::prime_implicates(d));
  REQUIRE_FALSE(trace.empty());
  for (const auto& step : trace) {
    auto again = resolve(*t.u, step.parents.first, step.parents.second, step.pivot);
    REQUIRE(again.has_value());
    CHECK(*again == step.resolvent);
  }
}

TEST_CASE("three-option transitivity is already canonical") {
  auto L = make_option_literals(DoctrineKind::kTransitivity, oracle::names(3));
  Doctrine d = build_doctrine(DoctrineKind::kTransitivity, L);
  Doctrine blake = blake_canonical_form(d);
  CHECK(oracle::clause_set(blake.clauses()) == oracle::clause_set(d.clauses()));
  CHECK(dump_clauses(blake, false) ==
        "p(a,b) p(c,a) p(b,c)\n"
        "p(b,a) p(a,c) p(c,b)\n");
  CHECK(dump_clauses(blake).rfind("p(a,b) p(b,a)\n", 0) == 0);
}

TEST_CASE("three-option comprehensive prominence is its own canonical form") {
  auto L = make_option_literals(DoctrineKind::kComprehensiveProminence, oracle::names(3));
  Doctrine d = build_doctrine(DoctrineKind::kComprehensiveProminence, L);
  CHECK(dump_clauses(blake_canonical_form(d)) == dump_clauses(d));
}

TEST_CASE("canonical forms against families, truth tables and revisions") {
  auto t = props::blake_suite(21, 12);
  INFO(t.summary());
  CHECK(t.ok());
}

TEST_CASE("size guards") {
  auto big = make_option_literals(DoctrineKind::kTransitivity, oracle::names(7));
  CHECK_THROWS_AS(blake_canonical_form(build_doctrine(DoctrineKind::kTransitivity, big)), SizeError);
  auto L = make_option_literals(DoctrineKind::kSupremacy, oracle::names(4));
  Doctrine d = build_doctrine(DoctrineKind::kSupremacy, L);
  CHECK_THROWS_AS(blake_canonical_form(d, {30, 20}), SizeError);
  CHECK_NOTHROW(blake_canonical_form(d));
}

TEST_CASE("unquestionability") {
  Profile p = parse_profile(
      "1: a > b > c > d\n1: a > b > d > c\n2: b > c > a > d\n1: b > c > d > a\n"
      "1: c > a > d > b\n1: d > a > b > c\n2: d > c > a > b\n");
  LlullMatrix m = llull_matrix(p);
  auto L = make_option_literals(DoctrineKind::kComprehensiveProminence, m.options());
  Doctrine d = build_doctrine(DoctrineKind::kComprehensiveProminence, L);
  Valuation v0 = initial_valuation(L, m, nullptr, UnaryInit::kZero);
  std::vector<Literal> lits;
  for (std::size_t x = 0; x < 4; ++x) {
    lits.push_back(L.unary_pos(x));
    lits.push_back(L.unary_neg(x));
  }
  auto entries = verify_unquestionability(v0, d, lits);
  REQUIRE(entries.size() == 8);
  const std::size_t a = 0;
  const std::size_t dd = static_cast<std::size_t>(
      std::find(m.options().begin(), m.options().end(), "d") - m.options().begin());
  for (const auto& e : entries) {
    if (e.literal == L.unary_pos(a)) {
      // the undecided t(a) comes from unsatisfiable conjunctions
      CHECK(e.fixed_point == oracle::q(4, 9));
      CHECK_FALSE(e.unquestionable());
    }
    if (e.literal == L.unary_neg(dd)) {
      CHECK(e.fixed_point == oracle::q(5, 9));
      CHECK(e.unquestionable());
    }
    if (e.literal == L.unary_neg(a)) CHECK(e.unquestionable());
  }
}
