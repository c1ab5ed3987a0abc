#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cocond/events.hpp"

using namespace cocond;

namespace {

AtomSet abc() { return AtomSet({"A", "B", "C"}); }

}  // namespace

TEST_CASE("evaluation over assignments") {
  AtomSet atoms = abc();
  Event e = (Event::atom("A") && !Event::atom("B")) || Event::atom("C");
  // Assignment bits: A=bit0, B=bit1, C=bit2.
  CHECK(evaluate(e, atoms, 0b001));   // A
  CHECK_FALSE(evaluate(e, atoms, 0b011));  // A,B
  CHECK(evaluate(e, atoms, 0b111));   // all
  CHECK(evaluate(e, atoms, 0b100));   // C
  CHECK_FALSE(evaluate(e, atoms, 0b000));
  CHECK(evaluate(Event::certain(), atoms, 0));
  CHECK_FALSE(evaluate(Event::impossible(), atoms, 0));
}

TEST_CASE("unknown atoms are rejected") {
  AtomSet atoms({"A"});
  CHECK_THROWS_AS(evaluate(Event::atom("Z"), atoms, 0), std::invalid_argument);
  CHECK_THROWS_AS(atoms.add("A"), std::invalid_argument);
}

TEST_CASE("truth sets and constraints") {
  AtomSet atoms({"H", "K"});
  ConstraintSet cs;
  cs.add(!(Event::atom("H") && Event::atom("K")));
  Minterms ok = cs.admissible(atoms);
  CHECK(ok.count() == 3);  // HK excluded
  CHECK_FALSE(satisfiable(Event::atom("H") && Event::atom("K"), atoms, cs));
  CHECK(satisfiable(Event::atom("H"), atoms, cs));
  CHECK(implies(Event::atom("H"), !Event::atom("K"), atoms, cs));
  CHECK_FALSE(implies(Event::atom("H"), Event::atom("K"), atoms, cs));
  CHECK(equivalent(Event::atom("H") || Event::atom("K"),
                   !(!Event::atom("H") && !Event::atom("K")), atoms, cs));
}

TEST_CASE("inclusion order on conditional events") {
  // With A inside B inside C, narrowing the window from C to B weakens the
  // conditional: A|C is included in A|B (failing on !A & !B & C costs A|C but
  // leaves A|B void).
  AtomSet atoms = abc();
  ConstraintSet cs;
  Event A = Event::atom("A"), B = Event::atom("B"), C = Event::atom("C");
  cs.add(!(A && !B));
  cs.add(!(B && !C));
  ConditionalEvent ab{A, B}, bc{B, C}, ac{A, C};
  CHECK(gn_includes(ac, ab, atoms, cs));
  CHECK_FALSE(gn_includes(ab, ac, atoms, cs));
  CHECK_FALSE(gn_includes(ab, bc, atoms, cs));
  // Reflexive.
  CHECK(gn_includes(ab, ab, atoms, cs));
  // Without constraints the inclusion fails.
  ConstraintSet none;
  CHECK_FALSE(gn_includes(ac, ab, atoms, none));
}

TEST_CASE("hedged pair sits between an included conditional and its includer") {
  AtomSet atoms = abc();
  ConstraintSet cs;
  Event A = Event::atom("A"), B = Event::atom("B"), C = Event::atom("C");
  cs.add(!(A && !B));
  cs.add(!(B && !C));
  ConditionalEvent ac{A, C}, ab{A, B};
  REQUIRE(gn_includes(ac, ab, atoms, cs));
  // (!C v AC) & (!B v AB) on C v B, the hedged-members event pair.
  ConditionalEvent qc{(!C || (A && C)) && (!B || (A && B)), C || B};
  CHECK(gn_includes(ac, qc, atoms, cs));
  CHECK(gn_includes(qc, ab, atoms, cs));
}

TEST_CASE("logical independence counts truth combinations") {
  AtomSet atoms({"E1", "H1", "E2", "H2"});
  ConstraintSet none;
  std::vector<Event> basics{Event::atom("E1"), Event::atom("H1"),
                            Event::atom("E2"), Event::atom("H2")};
  CHECK(events_logically_independent(basics, atoms, none));

  ConstraintSet cs;
  cs.add(!(Event::atom("H1") && Event::atom("H2")));
  CHECK_FALSE(events_logically_independent(basics, atoms, cs));

  // A compound event dependent on the others is caught.
  AtomSet ab({"A", "B"});
  std::vector<Event> dep{Event::atom("A"), Event::atom("B"),
                         Event::atom("A") && Event::atom("B")};
  CHECK_FALSE(events_logically_independent(dep, ab, none));
}

TEST_CASE("expression printing is parenthesized by precedence") {
  Event A = Event::atom("A"), B = Event::atom("B"), C = Event::atom("C");
  CHECK((A && (B || C)).to_string() == "A & (B v C)");
  CHECK(((A && B) || C).to_string() == "A & B v C");
  CHECK((!(A && B)).to_string() == "!(A & B)");
  CHECK((!A && B).to_string() == "!A & B");
}
