// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "canonical.hpp"
#include "dlseq/interpretation.hpp"
#include "dlseq/meta.hpp"
#include "dlseq/oracle.hpp"
#include "dlseq/parser.hpp"
#include "dlseq/prover.hpp"
#include "generators.hpp"

using namespace dlseq;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// First few failure messages, for the report.
class Failures {
 public:
  void add(const std::string& m) {
    ++count_;
    if (shown_.size() < 5) shown_.push_back(m);
  }
  std::size_t count() const { return count_; }
  std::string text() const {
    std::string out;
    for (const auto& m : shown_) out += "\n    " + m;
    return out;
  }

 private:
  std::size_t count_ = 0;
  std::vector<std::string> shown_;
};

Result base_rules() {
  auto t0 = Clock::now();
  Calculus c = assemble_calculus(LanguageProfile{});
  std::set<std::string> expected{"id_C",  "id_R",  "bot_l", "bot_r", "top_l", "top_r",
                                 "not_l", "not_r", "or_l",  "or_r",  "and_l", "and_r",
                                 "sub_l", "sub_r", "some_l", "some_r", "all_l", "all_r"};
  auto names = c.names();
  std::set<std::string> got(names.begin(), names.end());
  Result r;
  if (got != expected || names.size() != expected.size()) {
    r.pass = false;
    r.detail = "schema set differs from the 18 base rules";
    return r;
  }
  std::size_t matched = 0;
  for (const auto& x : testing::canonical_alc_instances()) {
    std::string want = read_file(std::string(DLSEQ_GOLDEN_DIR) + "/" + x.rule + ".txt");
    if (testing::expand_text(c, x) == want) {
      ++matched;
    } else {
      r.pass = false;
      r.detail += " golden mismatch: " + x.rule;
    }
  }
  double secs = seconds_since(t0);
  if (secs >= 1.0) r.pass = false;
  r.detail = std::to_string(got.size()) + " schemas, " + std::to_string(matched) + "/18 golden instances, " +
             std::to_string(secs) + " s" + r.detail;
  return r;
}

struct CorpusEntry {
  std::size_t profile;
  Sequent root;
  SearchOutcome outcome;
};

struct Corpus {
  std::vector<LanguageProfile> profiles = testing::rotation_profiles();
  std::vector<Calculus> calculi;
  std::vector<CorpusEntry> entries;
  double seconds = 0;

  Corpus() {
    for (const auto& p : profiles) calculi.push_back(assemble_calculus(p));
  }
};

Budget corpus_budget() {
  Budget b;
  b.steps = 2000;
  b.branch_formulas = 300;
  b.depth = 400;
  return b;
}

void run_corpus(Corpus& k, std::size_t n, std::uint64_t seed0) {
  auto t0 = Clock::now();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = i % k.profiles.size();
    testing::Generator g(k.profiles[p], seed0 + i);
    Sequent s = g.sequent();
    k.entries.push_back({p, s, prove(s, k.calculi[p], corpus_budget())});
  }
  k.seconds += seconds_since(t0);
}

Result soundness(const Corpus& k) {
  auto t0 = Clock::now();
  DefinitionRegistry defs;
  Failures bad;
  std::size_t proved = 0, saturated = 0, unknown = 0;
  for (const auto& e : k.entries) {
    if (e.outcome.verdict == Verdict::saturated) ++saturated;
    if (e.outcome.verdict == Verdict::budget_exhausted) ++unknown;
    if (e.outcome.verdict != Verdict::proved) continue;
    ++proved;
    try {
      if (auto m = find_countermodel(e.root, 3, defs))
        bad.add("proved but falsifiable: " + e.root.text());
    } catch (const std::exception& ex) {
      bad.add("oracle failed on " + e.root.text() + ": " + ex.what());
    }
  }
  double secs = k.seconds + seconds_since(t0);
  Result r;
  r.pass = bad.count() == 0 && secs < 60.0;
  r.detail = std::to_string(k.entries.size()) + " sequents: " + std::to_string(proved) + " proved, " +
             std::to_string(saturated) + " saturated, " + std::to_string(unknown) + " unknown; " +
             std::to_string(bad.count()) + " violations; " + std::to_string(secs) + " s" + bad.text();
  return r;
}

Result saturation_models(const Corpus& k) {
  DefinitionRegistry defs;
  Failures bad;
  std::size_t checked = 0;
  for (const auto& e : k.entries) {
    if (e.outcome.verdict != Verdict::saturated) continue;
    ++checked;
    try {
      Interpretation m = extract_model(*e.outcome.branch, k.calculi[e.profile]);
      if (satisfies_sequent(m, e.root, defs)) bad.add("model satisfies root: " + e.root.text());
    } catch (const std::exception& ex) {
      bad.add("extraction failed on " + e.root.text() + ": " + ex.what());
    }
  }
  Result r;
  r.pass = bad.count() == 0;
  r.detail = std::to_string(checked - bad.count()) + "/" + std::to_string(checked) +
             " saturated branches yield a falsifying model" + bad.text();
  return r;
}

Result funct_closure() {
  LanguageProfile p;
  p.with(Feature::equality).with_ddr("Funct");
  Calculus c = assemble_calculus(p.normalized());
  Individual a("a");
  Formula funct = Formula::rra("Funct", {"r"});
  Formula raa = Formula::role_assertion(Role::named("r"), a, a);
  std::vector<std::string> found;
  for (const auto& s : c.schemas()) {
    if (!s->ddr || !s->ddr->left || s->ddr->base_name != "Funct" || s->ddr->identification.empty()) continue;
    Binding b{{"RRA", funct}};
    for (const auto& v : s->ddr->definition.vars) b[v] = a;
    RuleInstance inst = s->instantiate(b);
    bool single = inst.required.right.empty() && inst.required.left.size() == 2 &&
                  std::count(inst.required.left.begin(), inst.required.left.end(), raa) == 1 &&
                  std::count(inst.required.left.begin(), inst.required.left.end(), funct) == 1;
    bool premise = inst.premise_count() == 1 && inst.added[0].right.empty() &&
                   inst.added[0].left == std::vector<Formula>{Formula::equality(a, a)} && inst.removed.empty();
    if (single && premise && s->ddr->definition.vars.size() == 1) found.push_back(s->name);
  }
  Result r;
  r.pass = !found.empty();
  r.detail = r.pass ? "variant " + found.front() + ": Funct(r), r(a,a) |- over premise with a = a added"
                    : "no contracted Funct variant with single principal r(a,a)";
  return r;
}

Result identities() {
  auto t0 = Clock::now();
  LanguageProfile p = full_profile();
  DefinitionRegistry defs;
  for (const auto& n : defs.names()) p.with_ddr(n);
  Calculus c = assemble_calculus(p, defs);
  testing::Shape shape;
  shape.depth = 3;
  testing::Generator g(p, 7001, shape);
  std::vector<Formula> formulas;
  ParseOptions o;
  o.profile = p;
  for (const char* t : {"a:{b}", "a:(atleast 2 r C)", "a:(atmost 1 r C)", "r;s;t(a,b)", "Trans(r)",
                        "Funct(r)", "r;s sub t"})
    formulas.push_back(parse_sequent(std::string("|- ") + t, o).side(Side::right)[0]);
  while (formulas.size() < 200) {
    Formula f = g.any_formula(3);
    if (weight(f, defs) <= 8) formulas.push_back(f);
  }
  Failures bad;
  std::map<std::string, std::size_t> kinds;
  for (const auto& f : formulas) {
    try {
      ProofNode t = derive_identity(c, f);
      Sequent want;
      want.add(Side::left, f);
      want.add(Side::right, f);
      CheckResult ck = check_proof(t, c);
      if (!ck) bad.add(f.text() + ": " + ck.message);
      else if (!(t.conclusion == want)) bad.add(f.text() + ": wrong conclusion");
      else ++kinds[t.rule.value_or("?")];
    } catch (const std::exception& ex) {
      bad.add(f.text() + ": " + ex.what());
    }
  }
  double secs = seconds_since(t0);
  Result r;
  r.pass = bad.count() == 0 && secs < 30.0;
  r.detail = std::to_string(formulas.size() - bad.count()) + "/" + std::to_string(formulas.size()) +
             " identity derivations check, " + std::to_string(kinds.size()) + " distinct root rules, " +
             std::to_string(secs) + " s" + bad.text();
  return r;
}

struct HpTally {
  std::map<std::string, std::size_t> calls;
  Failures bad;

  void record(const std::string& kind, const Calculus& c, const ProofNode& input, const ProofNode& out,
              const Sequent& want) {
    ++calls[kind];
    CheckResult ck = check_proof(out, c);
    if (!ck) bad.add(kind + " on " + input.conclusion.text() + ": " + ck.message);
    else if (out.height() > input.height())
      bad.add(kind + " on " + input.conclusion.text() + ": height " + std::to_string(out.height()) + " > " +
              std::to_string(input.height()));
    else if (!(out.conclusion == want))
      bad.add(kind + " on " + input.conclusion.text() + ": wrong conclusion " + out.conclusion.text());
  }

  template <typename F>
  void attempt(const std::string& kind, const ProofNode& input, F f) {
    try {
      f();
    } catch (const std::exception& ex) {
      ++calls[kind];
      bad.add(kind + " on " + input.conclusion.text() + ": " + ex.what());
    }
  }
};

void exercise(HpTally& h, const Calculus& c, const LanguageProfile& p, const ProofNode& t, std::uint64_t seed) {
  testing::Generator g(p, seed);
  const Sequent& root = t.conclusion;
  for (Side side : {Side::left, Side::right}) {
    std::string tag = side == Side::left ? "_left" : "_right";
    Formula extra = g.formula(1);
    h.attempt("weaken" + tag, t, [&] {
      SequentChange add;
      (side == Side::left ? add.left : add.right).push_back(extra);
      Sequent want = root;
      want.add(side, extra);
      h.record("weaken" + tag, c, t, weaken(c, t, add), want);
    });
    for (const auto& f : root.side(side)) {
      h.attempt("contract" + tag, t, [&] {
        SequentChange add;
        (side == Side::left ? add.left : add.right).push_back(f);
        ProofNode doubled = weaken(c, t, add);
        h.record("contract" + tag, c, doubled, contract(c, doubled, side, f), root);
      });
    }
  }
  auto inds = free_individuals(root);
  std::vector<Individual> pool(inds.begin(), inds.end());
  pool.push_back(g.individual());
  for (std::size_t k = 0; k < 2 && !pool.empty(); ++k) {
    Individual from = pool[g.rng()() % pool.size()], to = pool[g.rng()() % pool.size()];
    h.attempt("substitute", t, [&] {
      h.record("substitute", c, t, substitute(c, t, from, to), dlseq::substitute(root, from, to));
    });
  }
  BranchView view(root);
  for (const auto& s : c.schemas()) {
    if (s->generator) continue;
    auto bindings = s->enumerate(view);
    if (bindings.size() > 2) bindings.resize(2);
    for (auto b : bindings) {
      std::uint32_t next = 1000;
      s->bind_eigens(b, next);
      RuleInstance inst;
      try {
        inst = s->instantiate(b);
      } catch (const RuleError&) {
        continue;
      }
      if (!inst.fits(root) || inst.premise_count() == 0) continue;
      for (std::size_t i = 0; i < inst.premise_count(); ++i) {
        h.attempt("invert", t, [&] {
          h.record("invert", c, t, invert(c, s->name, i, t, b), inst.premise(root, i));
        });
      }
    }
  }
}

Result hp_properties(Corpus& k) {
  std::vector<const CorpusEntry*> proofs;
  std::uint64_t seed = 900000;
  auto collect = [&] {
    proofs.clear();
    for (const auto& e : k.entries)
      if (e.outcome.verdict == Verdict::proved && e.outcome.tree.height() <= 6 && proofs.size() < 200)
        proofs.push_back(&e);
  };
  collect();
  for (int round = 0; proofs.size() < 200 && round < 20; ++round) {
    run_corpus(k, 250, seed);
    seed += 250;
    collect();
  }
  HpTally h;
  for (std::size_t i = 0; i < proofs.size(); ++i)
    exercise(h, k.calculi[proofs[i]->profile], k.profiles[proofs[i]->profile], proofs[i]->outcome.tree, 5000 + i);
  std::size_t total = 0;
  std::string per;
  for (const auto& [kind, n] : h.calls) {
    total += n;
    per += " " + kind + "=" + std::to_string(n);
  }
  Result r;
  r.pass = proofs.size() >= 200 && h.bad.count() == 0;
  r.detail = std::to_string(proofs.size()) + " proofs, " + std::to_string(total) + " calls (" + per.substr(1) +
             "), " + std::to_string(h.bad.count()) + " failures" + h.bad.text();
  return r;
}

struct DdrShape {
  std::string name;
  std::vector<std::string> roles;
  std::size_t left_premises;
  std::size_t left_required;  // RRA plus antecedent atoms
  std::vector<std::string> right_eigens;
  std::size_t right_added_left, right_added_right;
};

Result ddr_fidelity() {
  std::vector<DdrShape> shapes{
      {"Trans", {"r"}, 1, 3, {"a", "b", "c"}, 2, 1}, {"Refl", {"r"}, 1, 1, {"a"}, 0, 1},
      {"Irr", {"r"}, 0, 2, {"a"}, 1, 0},          {"Asy", {"r"}, 0, 3, {"a", "b"}, 2, 0},
      {"Disj", {"r", "s"}, 0, 3, {"a", "b"}, 2, 0}, {"Funct", {"r", }, 1, 3, {"a", "b", "c"}, 2, 1},
  };
  DefinitionRegistry defs;
  Failures bad;
  for (const auto& x : shapes) {
    auto [left, right] = compile_ddr(defs.at(x.name));
    Formula rra = Formula::rra(x.name, x.roles);
    Binding lb{{"RRA", rra}};
    const auto& vars = left->ddr->definition.vars;
    for (std::size_t i = 0; i < vars.size(); ++i) lb[vars[i]] = Individual(std::string(1, char('a' + i)));
    RuleInstance li = left->instantiate(lb);
    bool initial = x.left_premises == 0;
    if (left->name != x.name + "_l" || !left->eigen_params.empty() || li.premise_count() != x.left_premises ||
        li.required.left.size() != x.left_required || !li.removed.left.empty() || left->can_close != initial ||
        (left->kind == RuleKind::initial) != initial)
      bad.add(x.name + "_l shape");
    for (const auto& a : li.added)
      if (a.left.size() != 1 || !a.right.empty()) bad.add(x.name + "_l premise shape");
    Binding rb{{"RRA", rra}};
    std::uint32_t next = 1;
    right->bind_eigens(rb, next);
    RuleInstance ri = right->instantiate(rb);
    if (right->name != x.name + "_r" || right->eigen_params != x.right_eigens || ri.premise_count() != 1 ||
        ri.removed.right != std::vector<Formula>{rra} || ri.added[0].left.size() != x.right_added_left ||
        ri.added[0].right.size() != x.right_added_right)
      bad.add(x.name + "_r shape");
  }
  Result r;
  r.pass = bad.count() == 0;
  r.detail = std::to_string(shapes.size() * 2 - bad.count()) + "/12 rule shapes match" + bad.text();
  return r;
}

Result named_derivations() {
  struct Case {
    std::string text;
    LanguageProfile profile;
    Verdict expected;
  };
  LanguageProfile alc, trans, eq;
  trans.with_ddr("Trans");
  eq.with(Feature::equality);
  std::vector<Case> cases{
      {"Trans(r), r(a,b), r(b,c) |- r(a,c)", trans, Verdict::proved},
      {"|- a = a", eq, Verdict::proved},
      {"|- (C and D) sub C", alc, Verdict::proved},
      {"C sub (not C), a:C |-", alc, Verdict::proved},
      {"|- C sub D", alc, Verdict::saturated},
  };
  Failures bad;
  std::string steps;
  for (const auto& x : cases) {
    Calculus c = assemble_calculus(x.profile.normalized());
    ParseOptions o;
    o.profile = x.profile.normalized();
    Sequent s = parse_sequent(x.text, o);
    Budget b;
    b.steps = 100;
    SearchOutcome out = prove(s, c, b);
    steps += " " + std::to_string(out.stats.steps);
    if (out.verdict != x.expected) bad.add(x.text + ": " + to_string(out.verdict));
    else if (out.verdict == Verdict::proved && !check_proof(out.tree, c)) bad.add(x.text + ": proof does not check");
  }
  Result r;
  r.pass = bad.count() == 0;
  r.detail = std::to_string(cases.size() - bad.count()) + "/" + std::to_string(cases.size()) +
             " resolved as expected, steps:" + steps + bad.text();
  return r;
}

Result oracle_agreement() {
  testing::Shape shape;
  shape.individuals = 2;
  shape.concepts = 2;
  shape.roles = 1;
  shape.depth = 1;
  shape.max_left = 3;
  auto profiles = testing::rotation_profiles();
  DefinitionRegistry defs;
  Failures bad;
  std::size_t with_model = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto& p = profiles[i % 3 == 2 ? 6 : i % 3];
    testing::Generator g(p, 31000 + i, shape);
    Sequent s = g.sequent();
    auto fast = find_countermodel(s, 2, defs);
    auto slow = find_countermodel_reversed(s, 2, defs);
    if (fast.has_value() != slow.has_value()) {
      bad.add(s.text() + ": disagreement");
      continue;
    }
    if (fast) {
      ++with_model;
      if (satisfies_sequent(*fast, s, defs) || satisfies_sequent(*slow, s, defs))
        bad.add(s.text() + ": returned model does not falsify");
    }
  }
  Result r;
  r.pass = bad.count() == 0;
  r.detail = std::to_string(50 - bad.count()) + "/50 agree (" + std::to_string(with_model) +
             " with countermodels)" + bad.text();
  return r;
}

}  // namespace

int main() {
  Corpus corpus;
  run_corpus(corpus, 500, 1);
  std::vector<std::pair<int, std::function<Result()>>> criteria{
      {1, base_rules},
      {2, [&] { return soundness(corpus); }},
      {3, [&] { return saturation_models(corpus); }},
      {4, funct_closure},
      {5, identities},
      {6, [&] { return hp_properties(corpus); }},
      {7, ddr_fidelity},
      {8, named_derivations},
      {9, oracle_agreement},
  };
  bool all = true;
  for (auto& [n, run] : criteria) {
    Result r;
    try {
      r = run();
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    all = all && r.pass;
    std::cout << "criterion " << n << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")" << std::endl;
  }
  return all ? 0 : 1;
}
