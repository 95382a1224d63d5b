#include "doctest.h"
#include "dlseq/oracle.hpp"
#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"

using namespace dlseq;

namespace {

Formula f(const std::string& t) {
  ParseOptions o;
  o.check_profile = false;
  return parse_sequent("|- " + t, o).side(Side::right).at(0);
}

/// Two elements: a -> 0 in C, b -> 1 in D, r = {(0,1)}.
Interpretation small() {
  Interpretation i;
  i.domain_size = 2;
  i.concepts["C"] = {0};
  i.concepts["D"] = {1};
  i.roles["r"] = {{0, 1}};
  i.individuals[Individual("a")] = 0;
  i.individuals[Individual("b")] = 1;
  return i;
}

}  // namespace

TEST_CASE("satisfaction of concept assertions") {
  Interpretation i = small();
  CHECK(satisfies(i, f("a:C")).holds);
  CHECK_FALSE(satisfies(i, f("a:D")).holds);
  CHECK(satisfies(i, f("a:(some r D)")).holds);
  CHECK(satisfies(i, f("a:(all r D)")).holds);
  CHECK_FALSE(satisfies(i, f("b:(some r top)")).holds);
  CHECK(satisfies(i, f("a:(atmost 1 r top)")).holds);
  CHECK_FALSE(satisfies(i, f("a:(atleast 2 r top)")).holds);
  CHECK(satisfies(i, f("b:(some inv r C)")).holds);
  CHECK(satisfies(i, f("a:(not {b})")).holds);
}

TEST_CASE("satisfaction of external formulae with witnesses") {
  Interpretation i = small();
  auto g = satisfies(i, f("C sub D"));
  CHECK_FALSE(g.holds);
  CHECK(g.witness == std::string("0"));
  CHECK(satisfies(i, f("r(a,b)")).holds);
  CHECK(satisfies(i, f("not r(b,a)")).holds);
  CHECK(satisfies(i, f("a != b")).holds);
  CHECK(satisfies(i, f("Asy(r)")).holds);
  CHECK_FALSE(satisfies(i, f("Refl(r)")).holds);
  CHECK(satisfies(i, f("Trans(r)")).holds);
}

TEST_CASE("built-in relations agree with their definitions") {
  Interpretation i = small();
  DefinitionRegistry defs;
  for (const char* t : {"Trans(r)", "Refl(r)", "Irr(r)", "Asy(r)", "Funct(r)", "Disj(r,r)"})
    CHECK(satisfies(i, f(t), defs).holds == satisfies_by_definition(i, f(t), defs).holds);
}

TEST_CASE("unmapped individuals are an evaluation error") {
  CHECK_THROWS_AS(satisfies(small(), f("c:C")), EvaluationError);
}

TEST_CASE("the finder returns a falsifying model or none") {
  Sequent s = parse_sequent("|- C sub D");
  auto m = find_countermodel(s, 3);
  REQUIRE(m);
  CHECK(m->domain_size == 1);
  CHECK_FALSE(satisfies_sequent(*m, s));
  CHECK_FALSE(find_countermodel(parse_sequent("|- (C and D) sub C"), 3));
  CHECK_FALSE(find_countermodel(parse_sequent("C sub (not C), a:C |-"), 3));
}

TEST_CASE("the finder agrees with plain enumeration") {
  for (const char* t : {"a:(some r C) |- a:(all r C)", "r(a,b), b:C |- a:(some r C)", "a:C |- b:C",
                        "a = b, a:C |- b:C", "|- a:(atmost 1 r top)"}) {
    CAPTURE(t);
    Sequent s = parse_sequent(t);
    CHECK(find_countermodel(s, 2).has_value() == find_countermodel_reversed(s, 2).has_value());
  }
}

TEST_CASE("oracle limits are enforced") {
  OracleLimits tight;
  tight.max_concepts = 1;
  CHECK_THROWS_AS(find_countermodel(parse_sequent("a:C |- a:D"), 2, DefinitionRegistry(), tight), OracleLimitError);
}

TEST_CASE("a saturated branch yields its quotient model") {
  LanguageProfile p;
  p.with(Feature::equality);
  Calculus c = assemble_calculus(p.normalized());
  ParseOptions o;
  o.profile = p.normalized();
  Sequent s = parse_sequent("a = b, a:C |- b:D", o);
  auto out = prove(s, c);
  REQUIRE(out.verdict == Verdict::saturated);
  Interpretation m = extract_model(*out.branch, c);
  CHECK(m.domain_size == 1);
  CHECK(m.element(Individual("a")) == m.element(Individual("b")));
  CHECK_FALSE(satisfies_sequent(m, s));
}

TEST_CASE("an empty branch still has a one-element model") {
  Calculus c = assemble_calculus(LanguageProfile{}.with(Feature::gciSplit));
  Sequent s = parse_sequent("(not C) sub D |-");
  auto out = prove(s, c);
  REQUIRE(out.verdict == Verdict::saturated);
  Interpretation m = extract_model(*out.branch, c);
  CHECK(m.domain_size >= 1);
  CHECK_FALSE(satisfies_sequent(m, s));
}

TEST_CASE("without the split rule a valid GCI consequence saturates") {
  Sequent s = parse_sequent("(C and D) sub E, a:C, a:D |- a:E");
  CHECK_FALSE(find_countermodel(s, 3));
  auto literal = prove(s, assemble_calculus(LanguageProfile{}));
  CHECK(literal.verdict == Verdict::saturated);
  Interpretation m = extract_model(*literal.branch);
  CHECK(satisfies_sequent(m, s));
  auto split = prove(s, assemble_calculus(LanguageProfile{}.with(Feature::gciSplit)));
  CHECK(split.verdict == Verdict::proved);
}
