#include "doctest.h"
#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"

using namespace dlseq;

namespace {

SearchOutcome run(const std::string& text, LanguageProfile p = {}, std::size_t steps = 1000) {
  p = p.normalized();
  ParseOptions o;
  o.profile = p;
  Budget b;
  b.steps = steps;
  return prove(parse_sequent(text, o), assemble_calculus(p), b);
}

}  // namespace

TEST_CASE("identity is proved in one node") {
  auto out = run("a:C |- a:C");
  CHECK(out.verdict == Verdict::proved);
  CHECK(out.tree.size() == 1);
  CHECK(rule_sequence(out.tree) == std::vector<std::string>{"id_C"});
}

TEST_CASE("transitivity through its definition rule") {
  auto out = run("Trans(r), r(a,b), r(b,c) |- r(a,c)", LanguageProfile{}.with_ddr("Trans"), 100);
  REQUIRE(out.verdict == Verdict::proved);
  CHECK(out.tree.rule == "Trans_l");
  CHECK(check_proof(out.tree, assemble_calculus(LanguageProfile{}.with_ddr("Trans"))));
}

TEST_CASE("the inconsistent knowledge base closes") {
  auto out = run("C sub (not C), a:C |-", {}, 100);
  REQUIRE(out.verdict == Verdict::proved);
  auto seq = rule_sequence(out.tree);
  CHECK(std::find(seq.begin(), seq.end(), "sub_l") != seq.end());
  CHECK(std::find(seq.begin(), seq.end(), "not_l") != seq.end());
}

TEST_CASE("an unprovable subsumption saturates") {
  auto out = run("|- C sub D");
  REQUIRE(out.verdict == Verdict::saturated);
  REQUIRE(out.branch);
  CHECK(is_saturated(*out.branch, assemble_calculus(LanguageProfile{})));
  CHECK_FALSE(out.tree.closed());
}

TEST_CASE("an existential loop exhausts the budget") {
  auto out = run("top sub some r top, a:C |-", {}, 50);
  CHECK(out.verdict == Verdict::budget_exhausted);
  CHECK(out.stats.steps <= 50);
  CHECK(out.stats.branches >= 1);
}

TEST_CASE("search is deterministic") {
  auto x = run("a:(C or D), C sub E, D sub E |- a:E");
  auto y = run("a:(C or D), C sub E, D sub E |- a:E");
  CHECK(x.verdict == y.verdict);
  CHECK(rule_sequence(x.tree) == rule_sequence(y.tree));
}

TEST_CASE("every schema takes turns") {
  auto out = run("top sub some r top, a:C |-", {}, 200);
  Calculus c = assemble_calculus(LanguageProfile{});
  for (const auto& n : c.names()) CHECK(out.stats.scheduled[n] >= out.stats.steps / c.schemas().size());
}

TEST_CASE("the root must lie inside the profile") {
  Calculus c = assemble_calculus(LanguageProfile{});
  CHECK_THROWS_AS(prove(parse_sequent("|- a:{b}"), c), ProfileViolation);
}

TEST_CASE("proof serializations agree on the rule sequence") {
  auto out = run("a:(C and D) |- a:(D and C)");
  REQUIRE(out.verdict == Verdict::proved);
  std::string text = proof_text(out.tree), json = proof_json(out.tree);
  for (const auto& r : rule_sequence(out.tree)) {
    CHECK(text.find(r + ":") != std::string::npos);
    CHECK(json.find("\"" + r + "\"") != std::string::npos);
  }
}

TEST_CASE("the checker pinpoints a broken node") {
  Calculus c = assemble_calculus(LanguageProfile{});
  auto out = run("a:(C and D) |- a:C");
  REQUIRE(out.verdict == Verdict::proved);
  ProofNode bad = out.tree;
  bad.children[0].conclusion = parse_sequent("a:C |- a:C");
  CheckResult r = check_proof(bad, c);
  CHECK_FALSE(r.valid);
  CHECK(r.path.empty());
  ProofNode open = out.tree;
  open.children[0].rule.reset();
  CHECK(check_proof(open, c).message == "open leaf");
}
