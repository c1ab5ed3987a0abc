#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "cocond/compound.hpp"
#include "support.hpp"

using namespace cocond;
using testsupport::RatGen;

namespace {

std::shared_ptr<const ConstituentSpace> two_independent() {
  AtomSet atoms({"E1", "H1", "E2", "H2"});
  std::vector<ConditionalEvent> fam{
      {Event::atom("E1"), Event::atom("H1")},
      {Event::atom("E2"), Event::atom("H2")},
  };
  return enumerate_constituents(fam, atoms, ConstraintSet{});
}

std::shared_ptr<const ConstituentSpace> three_independent() {
  AtomSet atoms({"E1", "H1", "E2", "H2", "E3", "H3"});
  std::vector<ConditionalEvent> fam{
      {Event::atom("E1"), Event::atom("H1")},
      {Event::atom("E2"), Event::atom("H2")},
      {Event::atom("E3"), Event::atom("H3")},
  };
  return enumerate_constituents(fam, atoms, ConstraintSet{});
}

// A nested chain A inside B inside C over three atoms.
std::shared_ptr<const ConstituentSpace> nested_chain(
    std::vector<ConditionalEvent> fam) {
  AtomSet atoms({"A", "B", "C"});
  Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");
  ConstraintSet cs;
  cs.add(!a || b);
  cs.add(!b || c);
  return enumerate_constituents(std::move(fam), atoms, cs);
}

const Affine& value_on(const CRQ& q, std::initializer_list<Sign> signs) {
  const Constituent* c = q.space->find_by_signs({signs});
  REQUIRE(c != nullptr);
  return q.value_at(*c);
}

Affine sym(Symbol s) { return Affine(s); }
Affine x(uint32_t mask) { return Affine(Symbol::conj(mask)); }

}  // namespace

TEST_CASE("pairwise conjunction values over an independent pair") {
  FamilyAlgebra alg(two_independent());
  const CRQ& c = alg.conjunction(0b11);

  CHECK(value_on(c, {Sign::TT, Sign::TT}) == Affine(1));
  CHECK(value_on(c, {Sign::TT, Sign::FT}) == Affine(0));
  CHECK(value_on(c, {Sign::TT, Sign::Void}) == x(0b10));
  CHECK(value_on(c, {Sign::FT, Sign::TT}) == Affine(0));
  CHECK(value_on(c, {Sign::FT, Sign::FT}) == Affine(0));
  CHECK(value_on(c, {Sign::FT, Sign::Void}) == Affine(0));
  CHECK(value_on(c, {Sign::Void, Sign::TT}) == x(0b01));
  CHECK(value_on(c, {Sign::Void, Sign::FT}) == Affine(0));
  CHECK(*c.c0_value == x(0b11));
  CHECK(c.prevision == x(0b11));
  CHECK(c.prevision.to_string() == "x12");
  CHECK(equivalent(c.conditioning, Event::atom("H1") || Event::atom("H2"),
                   c.space->atoms, c.space->constraints));
}

TEST_CASE("pairwise disjunction values over an independent pair") {
  FamilyAlgebra alg(two_independent());
  const CRQ& d = alg.disjunction(0b11);

  CHECK(value_on(d, {Sign::TT, Sign::TT}) == Affine(1));
  CHECK(value_on(d, {Sign::TT, Sign::FT}) == Affine(1));
  CHECK(value_on(d, {Sign::TT, Sign::Void}) == Affine(1));
  CHECK(value_on(d, {Sign::FT, Sign::TT}) == Affine(1));
  CHECK(value_on(d, {Sign::FT, Sign::FT}) == Affine(0));
  CHECK(value_on(d, {Sign::FT, Sign::Void}) == x(0b10));
  CHECK(value_on(d, {Sign::Void, Sign::TT}) == Affine(1));
  CHECK(value_on(d, {Sign::Void, Sign::FT}) == x(0b01));
  CHECK(*d.c0_value == sym(Symbol::disj(0b11)));
  CHECK(d.prevision.to_string() == "y12");

  // A one-member disjunction is the member itself, x namespace included.
  CHECK(equal_tables(alg.disjunction(0b01), alg.member(0)));
  CHECK(alg.member(0).prevision == x(0b01));
}

TEST_CASE("member indicator values") {
  FamilyAlgebra alg(two_independent());
  const CRQ& m = alg.member(0);
  CHECK(value_on(m, {Sign::TT, Sign::FT}) == Affine(1));
  CHECK(value_on(m, {Sign::FT, Sign::Void}) == Affine(0));
  CHECK(value_on(m, {Sign::Void, Sign::TT}) == x(0b01));
  CHECK(*m.c0_value == x(0b01));
  CHECK_FALSE(m.constant_on_conditioning());
}

TEST_CASE("constrained pair with incompatible antecedents") {
  // One consequent observed under either of two disjoint windows.
  AtomSet atoms({"A", "H", "K"});
  Event a = Event::atom("A"), h = Event::atom("H"), k = Event::atom("K");
  ConstraintSet cs;
  cs.add(!(h && k));
  auto space = enumerate_constituents({{a, h}, {a, k}}, atoms, cs);
  FamilyAlgebra alg(space);
  const CRQ& c = alg.conjunction(0b11);

  CHECK(value_on(c, {Sign::TT, Sign::Void}) == x(0b10));
  CHECK(value_on(c, {Sign::Void, Sign::TT}) == x(0b01));
  CHECK(value_on(c, {Sign::FT, Sign::Void}) == Affine(0));
  CHECK(value_on(c, {Sign::Void, Sign::FT}) == Affine(0));
  CHECK(*c.c0_value == x(0b11));
}

TEST_CASE("negation is an involution and complements previsions") {
  FamilyAlgebra alg(two_independent());
  const CRQ& c = alg.conjunction(0b11);
  CRQ n = negation(c);
  CHECK(value_on(n, {Sign::TT, Sign::TT}) == Affine(0));
  CHECK(value_on(n, {Sign::TT, Sign::Void}) == Affine(1) - x(0b10));
  CHECK(n.prevision == Affine(1) - x(0b11));
  CHECK(equal_tables(negation(n), c));
}

TEST_CASE("disjunction symbols expand by inclusion-exclusion") {
  FamilyAlgebra alg2(two_independent());
  CHECK(alg2.expand_disj_symbols(sym(Symbol::disj(0b11))) ==
        x(0b01) + x(0b10) - x(0b11));
  CHECK(equal_tables(alg2.expand_disj_symbols(alg2.disjunction(0b11)),
                     alg2.inclusion_exclusion(0b11)));

  FamilyAlgebra alg3(three_independent());
  CHECK(alg3.expand_disj_symbols(sym(Symbol::disj(0b111))) ==
        x(0b001) + x(0b010) + x(0b100) - x(0b011) - x(0b101) - x(0b110) +
            x(0b111));
  CHECK(equal_tables(alg3.expand_disj_symbols(alg3.disjunction(0b111)),
                     alg3.inclusion_exclusion(0b111)));
  CHECK(equal_tables(alg3.expand_disj_symbols(alg3.disjunction(0b101)),
                     alg3.inclusion_exclusion(0b101)));
}

TEST_CASE("negating every member turns conjunction into disjunction") {
  FamilyAlgebra alg2(two_independent());
  CHECK(equal_tables(alg2.expand_disj_symbols(alg2.disjunction(0b11)),
                     negation(alg2.signed_conjunction(0b11, 0))));

  FamilyAlgebra alg3(three_independent());
  CHECK(equal_tables(alg3.expand_disj_symbols(alg3.disjunction(0b111)),
                     negation(alg3.signed_conjunction(0b111, 0))));
}

TEST_CASE("signed conjunction with one member negated") {
  FamilyAlgebra alg(two_independent());
  CRQ s = alg.signed_conjunction(0b11, 0b01);  // first plain, second negated

  CHECK(value_on(s, {Sign::TT, Sign::TT}) == Affine(0));
  CHECK(value_on(s, {Sign::TT, Sign::FT}) == Affine(1));
  CHECK(value_on(s, {Sign::TT, Sign::Void}) == Affine(1) - x(0b10));
  CHECK(value_on(s, {Sign::FT, Sign::TT}) == Affine(0));
  CHECK(value_on(s, {Sign::FT, Sign::Void}) == Affine(0));
  CHECK(value_on(s, {Sign::Void, Sign::TT}) == Affine(0));
  CHECK(value_on(s, {Sign::Void, Sign::FT}) == x(0b01));
  CHECK(*s.c0_value == x(0b01) - x(0b11));
  CHECK(s.prevision == x(0b01) - x(0b11));

  CRQ t = alg.signed_conjunction(0b11, 0b10);  // first negated, second plain
  CHECK(value_on(t, {Sign::FT, Sign::TT}) == Affine(1));
  CHECK(value_on(t, {Sign::TT, Sign::Void}) == Affine(0));
  CHECK(value_on(t, {Sign::FT, Sign::Void}) == x(0b10));
  CHECK(value_on(t, {Sign::Void, Sign::TT}) == Affine(1) - x(0b01));
  CHECK(t.prevision == x(0b10) - x(0b11));

  CHECK_THROWS_AS(alg.signed_conjunction(0b01, 0b10), std::invalid_argument);
  CHECK(SignedSubset{0b11, 0b01}.to_string() == "c(1,~2)");
  CHECK(SignedSubset{0b111, 0b101}.to_string() == "c(1,~2,3)");
}

TEST_CASE("a conjunction splits into its two extensions by the next member") {
  FamilyAlgebra alg(three_independent());
  for (uint32_t s : {uint32_t{0b011}, uint32_t{0b101}, uint32_t{0b110}}) {
    uint32_t extra = 0b111 & ~s;
    CRQ sum = linear_combination(
        {{1, alg.conjunction(0b111)}, {1, alg.signed_conjunction(0b111, s)}});
    CHECK(equal_tables(sum, alg.conjunction(s)));
    CHECK(alg.signed_conjunction(0b111, s).prevision == x(s) - x(0b111));
    (void)extra;
  }

  // Same split one level down: the pair splits by the second member.
  FamilyAlgebra alg2(two_independent());
  CRQ sum = linear_combination(
      {{1, alg2.conjunction(0b11)}, {1, alg2.signed_conjunction(0b11, 0b01)}});
  CHECK(equal_tables(sum, alg2.member(0)));
}

TEST_CASE("signed conjunctions tile the unit over every cell") {
  FamilyAlgebra alg(three_independent());
  std::vector<std::pair<Rat, CRQ>> parts;
  for (uint32_t p = 0; p <= 0b111u; ++p)
    parts.emplace_back(1, alg.signed_conjunction(0b111, p));
  CRQ sum = linear_combination(parts);
  for (const auto& v : sum.values) CHECK(v == Affine(1));
  CHECK(*sum.c0_value == Affine(1));
  CHECK(sum.prevision == Affine(1));
}

TEST_CASE("signed previsions recover every plain prevision by additivity") {
  FamilyAlgebra alg(three_independent());
  for (uint32_t s = 1; s <= 0b111u; ++s) {
    Affine total(0);
    for (uint32_t p = 0; p <= 0b111u; ++p)
      if ((p & s) == s) total += alg.signed_conjunction(0b111, p).prevision;
    CHECK(total == x(s));
  }
}

TEST_CASE("distinct signed conjunctions are incompatible") {
  // The product c(1,2) and c(1,~2) over one base pair is the plain
  // conjunction of the four literals, which vanishes identically.
  AtomSet atoms({"E1", "H1", "E2", "H2"});
  Event e1 = Event::atom("E1"), h1 = Event::atom("H1");
  Event e2 = Event::atom("E2"), h2 = Event::atom("H2");
  auto space = enumerate_constituents(
      {{e1, h1}, {e2, h2}, {e1, h1}, {!e2, h2}}, atoms, ConstraintSet{});
  FamilyAlgebra alg(space);
  const CRQ& prod = alg.conjunction(0b1111);
  for (const auto& v : prod.values) CHECK(v == Affine(0));
  CHECK(*prod.c0_value == Affine(0));
  CHECK(prod.prevision == Affine(0));
  Rat c;
  CHECK(prod.constant_on_conditioning(&c));
  CHECK(c == 0);
}

TEST_CASE("complementary pair collapses to two conditional constituents") {
  AtomSet atoms({"E", "H"});
  Event e = Event::atom("E"), h = Event::atom("H");
  auto space = enumerate_constituents({{e, h}, {!e, h}}, atoms, ConstraintSet{});
  FamilyAlgebra alg(space);

  // Both members share the antecedent, so their conjunction is impossible.
  const CRQ& both = alg.conjunction(0b11);
  CHECK(both.prevision == Affine(0));
  CHECK(value_on(both, {Sign::TT, Sign::FT}) == Affine(0));
  CHECK(value_on(both, {Sign::FT, Sign::TT}) == Affine(0));

  auto parts = alg.conditional_constituents();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == SignedSubset{0b11, 0b01});
  CHECK(parts[1].first == SignedSubset{0b11, 0b10});
  CHECK(equal_tables(parts[0].second, alg.member(0)));
  CHECK(equal_tables(parts[1].second, alg.member(1)));
}

TEST_CASE("conditional constituent previsions over an independent pair") {
  FamilyAlgebra alg(two_independent());
  auto parts = alg.conditional_constituents();
  REQUIRE(parts.size() == 4);
  std::map<SignedSubset, Affine> prev;
  for (const auto& [ss, q] : parts) prev.emplace(ss, q.prevision);
  CHECK(prev.at({0b11, 0b11}) == x(0b11));
  CHECK(prev.at({0b11, 0b01}) == x(0b01) - x(0b11));
  CHECK(prev.at({0b11, 0b10}) == x(0b10) - x(0b11));
  CHECK(prev.at({0b11, 0b00}) == Affine(1) - x(0b01) - x(0b10) + x(0b11));
}

TEST_CASE("conditional constituent previsions over an independent triple") {
  FamilyAlgebra alg(three_independent());
  auto parts = alg.conditional_constituents();
  REQUIRE(parts.size() == 8);
  std::map<SignedSubset, Affine> prev;
  for (const auto& [ss, q] : parts) prev.emplace(ss, q.prevision);
  CHECK(prev.at({0b111, 0b111}) == x(0b111));
  CHECK(prev.at({0b111, 0b011}) == x(0b011) - x(0b111));
  CHECK(prev.at({0b111, 0b001}) ==
        x(0b001) - x(0b011) - x(0b101) + x(0b111));
  CHECK(prev.at({0b111, 0b000}) ==
        Affine(1) - x(0b001) - x(0b010) - x(0b100) + x(0b011) + x(0b101) +
            x(0b110) - x(0b111));
}

TEST_CASE("quasi conjunction dominates conjunction inside the conditioning") {
  FamilyAlgebra alg(two_independent());
  CRQ qc = alg.quasi_conjunction(0, 1, Symbol::named("z"));
  const CRQ& c = alg.conjunction(0b11);

  CHECK(value_on(qc, {Sign::TT, Sign::TT}) == Affine(1));
  CHECK(value_on(qc, {Sign::TT, Sign::FT}) == Affine(0));
  CHECK(value_on(qc, {Sign::TT, Sign::Void}) == Affine(1));
  CHECK(value_on(qc, {Sign::FT, Sign::TT}) == Affine(0));
  CHECK(value_on(qc, {Sign::FT, Sign::FT}) == Affine(0));
  CHECK(value_on(qc, {Sign::FT, Sign::Void}) == Affine(0));
  CHECK(value_on(qc, {Sign::Void, Sign::TT}) == Affine(1));
  CHECK(value_on(qc, {Sign::Void, Sign::FT}) == Affine(0));
  CHECK(*qc.c0_value == sym(Symbol::named("z")));

  RatGen gen(2026);
  for (int rep = 0; rep < 25; ++rep) {
    std::map<Symbol, Rat> vals{{Symbol::conj(0b01), gen.unit()},
                               {Symbol::conj(0b10), gen.unit()}};
    CRQ qn = qc.substituted(vals);
    CRQ cn = c.substituted(vals);
    for (size_t k = 0; k < qn.values.size(); ++k) {
      REQUIRE(qn.values[k].is_constant());
      REQUIRE(cn.values[k].is_constant());
      CHECK(qn.values[k].constant() >= cn.values[k].constant());
    }
  }
}

TEST_CASE("growing the conjunction never raises any value") {
  FamilyAlgebra alg(three_independent());
  const CRQ& big = alg.conjunction(0b111);
  const CRQ& small = alg.conjunction(0b011);

  RatGen gen(7);
  for (int rep = 0; rep < 10; ++rep) {
    // Any point of the simplex over the eight signed cells induces a
    // coherent assessment on all plain conjunctions.
    std::vector<Rat> v = gen.simplex(8);
    std::map<Symbol, Rat> vals;
    for (uint32_t s = 1; s <= 0b111u; ++s) {
      Rat total = 0;
      for (uint32_t p = 0; p <= 0b111u; ++p)
        if ((p & s) == s) total += v[p];
      vals[Symbol::conj(s)] = total;
    }
    CRQ bn = big.substituted(vals);
    CRQ sn = small.substituted(vals);
    for (size_t k = 0; k < bn.values.size(); ++k)
      CHECK(bn.values[k].constant() <= sn.values[k].constant());
    CHECK(bn.c0_value->constant() <= sn.c0_value->constant());
    CHECK(bn.prevision.constant() <= sn.prevision.constant());
  }
}

TEST_CASE("degenerate members fold the compound") {
  AtomSet atoms({"E", "H", "F", "K"});
  Event e = Event::atom("E"), h = Event::atom("H");
  Event f = Event::atom("F"), k = Event::atom("K");

  SUBCASE("an always-true member drops out of the conjunction") {
    ConstraintSet cs;
    cs.add(!k || f);  // K lies inside F
    auto space = enumerate_constituents({{e, h}, {f, k}}, atoms, cs);
    FamilyAlgebra alg(space);
    CHECK(equal_tables(alg.conjunction(0b11), alg.member(0)));
    const CRQ& d = alg.disjunction(0b11);
    Rat c;
    CHECK(d.constant_on_conditioning(&c));
    CHECK(c == 1);
    CHECK(d.prevision == Affine(1));
  }

  SUBCASE("an impossible member zeroes the conjunction") {
    auto space = enumerate_constituents({{e, h}, {f && !f, k}}, atoms,
                                        ConstraintSet{});
    FamilyAlgebra alg(space);
    CHECK(alg.conjunction(0b11).prevision == Affine(0));
    CHECK(equal_tables(alg.disjunction(0b11), alg.member(0)));
  }
}

TEST_CASE("a nested conditional absorbs a looser one") {
  Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");

  SUBCASE("conjunction collapses onto the included conditional") {
    auto space = nested_chain({{a, c}, {a, b}});
    CHECK(gn_includes(space->family[0], space->family[1], space->atoms,
                      space->constraints));
    FamilyAlgebra alg(space);
    CHECK(equal_on_conditioning(alg.conjunction(0b11), alg.member(0)));
    CHECK(equal_on_conditioning(alg.disjunction(0b11), alg.member(1)));
  }

  SUBCASE("two chained conditionals conjoin to the end-to-end one") {
    auto space = nested_chain({{a, b}, {b, c}});
    FamilyAlgebra alg(space);
    CRQ target = alg.indicator({a, c}, Symbol::named("z"));
    CHECK(equal_on_conditioning(alg.conjunction(0b11), target));
  }
}

TEST_CASE("indicator rejects events the cells do not decide") {
  Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");

  AtomSet atoms({"A", "B", "C"});
  auto space = enumerate_constituents({{a, b}, {b, c}}, atoms, ConstraintSet{});
  FamilyAlgebra alg(space);
  CHECK_THROWS_AS(alg.indicator({a, c}, Symbol::named("z")),
                  std::invalid_argument);
  CHECK_THROWS_AS(alg.indicator({a, a && !a}, Symbol::named("z")),
                  std::invalid_argument);

  // Degenerate targets fold without needing any cell classification.
  CHECK(alg.indicator({a && !a, b}, Symbol::named("z")).prevision == Affine(0));
  CHECK(alg.indicator({b, b}, Symbol::named("z")).prevision == Affine(1));
}

TEST_CASE("linear combinations validate their inputs") {
  FamilyAlgebra alg2(two_independent());
  FamilyAlgebra alg3(three_independent());
  CHECK_THROWS_AS(linear_combination({}), std::invalid_argument);
  CHECK_THROWS_AS(
      linear_combination({{1, alg2.member(0)}, {1, alg3.member(0)}}),
      std::invalid_argument);

  CRQ half = linear_combination({{frac(1, 2), alg2.member(0)},
                                 {frac(1, 2), alg2.member(1)}});
  CHECK(half.prevision == frac(1, 2) * x(0b01) + frac(1, 2) * x(0b10));
  CHECK(value_on(half, {Sign::TT, Sign::FT}) == Affine(frac(1, 2)));
}

TEST_CASE("chained product over a partitioned trio") {
  AtomSet atoms({"A", "B", "C"});
  Event a = Event::atom("A"), b = Event::atom("B"), c = Event::atom("C");
  ConstraintSet cs;
  cs.add(!(a && b));
  cs.add(!(a && c));
  cs.add(!(b && c));

  auto [q, prev] = atoms_chain({a, b, c}, {frac(1, 2), frac(1, 3), frac(1, 4)},
                               atoms, cs);
  CHECK(prev == frac(1, 24));
  CHECK(q.prevision == Affine(frac(1, 24)));
  CHECK_FALSE(q.space->c0.has_value());
  for (size_t k = 0; k < q.space->cells.size(); ++k) {
    REQUIRE(q.values[k].is_constant());
    if (q.space->cell_implies(q.space->cells[k], a))
      CHECK(q.values[k].constant() == frac(1, 12));
    else
      CHECK(q.values[k].constant() == 0);
  }
}

TEST_CASE("chained product edge cases") {
  AtomSet atoms({"A", "B"});
  Event a = Event::atom("A"), b = Event::atom("B");
  ConstraintSet cs;
  cs.add(!(a && b));

  SUBCASE("two incompatible events multiply their probabilities") {
    auto [q, prev] = atoms_chain({a, b}, {frac(2, 3), frac(1, 5)}, atoms, cs);
    CHECK(prev == frac(2, 15));
    (void)q;
  }

  SUBCASE("a single event returns its own indicator") {
    auto [q, prev] = atoms_chain({a}, {frac(1, 2)}, atoms, ConstraintSet{});
    CHECK(prev == frac(1, 2));
    for (size_t k = 0; k < q.space->cells.size(); ++k)
      CHECK(q.values[k].constant() ==
            (q.space->cell_implies(q.space->cells[k], a) ? 1 : 0));
  }

  SUBCASE("an exhaustive tail must carry probability one") {
    auto [q, prev] = atoms_chain({a, !a}, {frac(1, 2), 1}, atoms,
                                 ConstraintSet{});
    CHECK(prev == frac(1, 2));
    (void)q;
    CHECK_THROWS_AS(
        atoms_chain({a, !a}, {frac(1, 2), frac(3, 4)}, atoms, ConstraintSet{}),
        std::invalid_argument);
  }

  SUBCASE("zero probability zeroes the chain") {
    auto [q, prev] = atoms_chain({a, b}, {frac(1, 2), 0}, atoms, cs);
    CHECK(prev == 0);
    (void)q;
  }

  SUBCASE("input validation") {
    CHECK_THROWS_AS(atoms_chain({}, {}, atoms, cs), std::invalid_argument);
    CHECK_THROWS_AS(atoms_chain({a, b}, {frac(1, 2)}, atoms, cs),
                    std::invalid_argument);
    CHECK_THROWS_AS(atoms_chain({a, b}, {frac(1, 2), frac(3, 2)}, atoms, cs),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        atoms_chain({a, a && b}, {frac(1, 2), frac(1, 2)}, atoms,
                    ConstraintSet{}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        atoms_chain({a, a && !a}, {frac(1, 2), frac(1, 2)}, atoms,
                    ConstraintSet{}),
        std::invalid_argument);
  }
}

TEST_CASE("substitution closes tables over numeric assessments") {
  FamilyAlgebra alg(two_independent());
  const CRQ& c = alg.conjunction(0b11);
  std::map<Symbol, Rat> vals{{Symbol::conj(0b01), frac(1, 3)},
                             {Symbol::conj(0b10), frac(1, 2)},
                             {Symbol::conj(0b11), frac(1, 6)}};
  CRQ cn = c.substituted(vals);
  CHECK(value_on(cn, {Sign::TT, Sign::Void}) == Affine(frac(1, 2)));
  CHECK(value_on(cn, {Sign::Void, Sign::TT}) == Affine(frac(1, 3)));
  CHECK(*cn.c0_value == Affine(frac(1, 6)));
  CHECK(cn.prevision == Affine(frac(1, 6)));

  // Expression-level substitution keeps exactness.
  std::map<Symbol, Affine> exprs{
      {Symbol::conj(0b11), x(0b01) + x(0b10) - Affine(1)}};
  CRQ ce = c.substituted(exprs);
  CHECK(*ce.c0_value == x(0b01) + x(0b10) - Affine(1));
}
