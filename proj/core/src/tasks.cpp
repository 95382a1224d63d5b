#include "dlseq/tasks.hpp"

#include <sstream>

#include "dlseq/interpretation.hpp"
#include "dlseq/oracle.hpp"
#include "json.hpp"

namespace dlseq {

namespace {

using nlohmann::ordered_json;

const char* task_name(TaskKind k) {
  switch (k) {
    case TaskKind::validity: return "validity";
    case TaskKind::consistency: return "consistency";
    case TaskKind::subsumption: return "subsumption";
    case TaskKind::instance: return "instance";
  }
  return "?";
}

/// Verdict words for proved and for saturated.
std::pair<const char*, const char*> verdict_words(TaskKind k) {
  switch (k) {
    case TaskKind::validity: return {"valid", "invalid"};
    case TaskKind::consistency: return {"inconsistent", "consistent"};
    case TaskKind::subsumption: return {"subsumed", "not-subsumed"};
    case TaskKind::instance: return {"instance", "not-instance"};
  }
  return {"?", "?"};
}

std::string model_text(const Interpretation& m) {
  std::ostringstream out;
  out << "domain: 0.." << (m.domain_size - 1) << "\n";
  for (const auto& [a, e] : m.individuals) out << "  " << a.name() << " -> " << e << "\n";
  for (const auto& [c, xs] : m.concepts) {
    out << "  " << c << " = {";
    bool first = true;
    for (auto x : xs) out << (first ? "" : ", ") << x, first = false;
    out << "}\n";
  }
  for (const auto& [r, ps] : m.roles) {
    out << "  " << r << " = {";
    bool first = true;
    for (const auto& [x, y] : ps) out << (first ? "" : ", ") << "(" << x << "," << y << ")", first = false;
    out << "}\n";
  }
  return out.str();
}

struct Setup {
  LanguageProfile profile;
  DefinitionRegistry defs;
  ParseOptions opts;
};

Setup setup(const TaskRequest& req) {
  Setup s;
  if (req.ddr_text)
    for (auto& d : parse_definitions(*req.ddr_text)) s.defs.add(std::move(d));
  if (req.profile_text) {
    s.profile = parse_profile(*req.profile_text);
  } else {
    s.profile = full_profile();
    for (const auto& n : s.defs.names()) s.profile.with_ddr(n);
  }
  s.profile = s.profile.normalized();
  s.opts.profile = s.profile;
  s.opts.definitions = &s.defs;
  return s;
}

}  // namespace

Sequent task_sequent(const TaskRequest& req, const ParseOptions& opts) {
  if (req.task == TaskKind::validity) return parse_sequent(req.input, opts);
  KnowledgeBase kb = parse_kb(req.input, opts);
  Sequent s = kb.as_antecedent();
  ParseOptions query = opts;
  for (const auto& f : s.side(Side::left))
    if (f.kind() == Formula::Kind::role_assertion) query.role_names.insert(f.role().text());
  switch (req.task) {
    case TaskKind::subsumption:
      s.add(Side::right, Formula::gci(parse_concept(req.first, query), parse_concept(req.second, query)));
      break;
    case TaskKind::instance:
      s.add(Side::right, Formula::assertion(Individual(req.first), parse_concept(req.second, query)));
      break;
    default:
      break;
  }
  return s;
}

TaskReport run_task(const TaskRequest& req) {
  TaskReport rep;
  ordered_json j;
  j["task"] = task_name(req.task);
  std::ostringstream text;
  auto fail = [&](const std::string& kind, const std::string& msg) {
    rep.exit_code = exit_input_error;
    rep.verdict = "error";
    if (req.format == OutputFormat::json) {
      j["verdict"] = "error";
      j["exit_code"] = rep.exit_code;
      j["error"] = {{"kind", kind}, {"message", msg}};
      rep.output = j.dump(2) + "\n";
    } else {
      rep.output = kind + " error: " + msg + "\n";
    }
    return rep;
  };
  if (req.budget.steps == 0) return fail("input", "budget must be positive");

  Sequent root;
  std::optional<Calculus> calc;
  DefinitionRegistry defs;
  try {
    Setup s = setup(req);
    root = task_sequent(req, s.opts);
    calc.emplace(assemble_calculus(s.profile, s.defs));
    defs = s.defs;
  } catch (const ParseError& e) {
    return fail("parse", std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.what());
  } catch (const ProfileViolation& e) {
    return fail("profile", e.what());
  } catch (const DefinitionError& e) {
    return fail("definition", e.what());
  } catch (const RuleError& e) {
    return fail("calculus", e.what());
  }

  SearchOutcome out;
  try {
    out = prove(root, *calc, req.budget);
  } catch (const ProfileViolation& e) {
    return fail("profile", e.what());
  }

  auto [yes, no] = verdict_words(req.task);
  bool want_proof = req.emit != Emit::model, want_model = req.emit != Emit::proof;
  j["sequent"] = root.text();
  text << "sequent: " << root.text() << "\n";
  ordered_json stats{{"steps", out.stats.steps},
                     {"branches", out.stats.branches},
                     {"max_branch_size", out.stats.max_branch_size}};

  switch (out.verdict) {
    case Verdict::proved: {
      rep.exit_code = exit_resolved;
      rep.verdict = yes;
      CheckResult ck = check_proof(out.tree, *calc);
      j["checked"] = ck.valid;
      if (want_proof) {
        j["proof"] = ordered_json::parse(proof_json(out.tree));
        text << "proof (height " << out.tree.height() << ", " << out.tree.size() << " nodes):\n"
             << proof_text(out.tree);
      }
      text << "checked: " << (ck.valid ? "yes" : "no, " + ck.message) << "\n";
      break;
    }
    case Verdict::saturated: {
      rep.exit_code = exit_countermodel;
      rep.verdict = no;
      try {
        Interpretation m = extract_model(*out.branch);
        bool falsifies = !satisfies_sequent(m, root, defs);
        j["model_falsifies_root"] = falsifies;
        if (want_model) {
          j["model"] = ordered_json::parse(m.json());
          text << "countermodel:\n" << model_text(m);
        }
        text << "model falsifies sequent: " << (falsifies ? "yes" : "no") << "\n";
      } catch (const std::exception& e) {
        j["model_error"] = e.what();
        text << "model extraction failed: " << e.what() << "\n";
      }
      if (want_proof) {
        j["partial_proof"] = ordered_json::parse(proof_json(out.tree));
        text << "open derivation:\n" << proof_text(out.tree);
      }
      if (req.oracle_bound > 0) {
        ordered_json o{{"max_domain", req.oracle_bound}};
        try {
          auto cm = find_countermodel(root, req.oracle_bound, defs);
          o["countermodel"] = cm.has_value();
          if (cm) o["domain_size"] = cm->domain_size;
          text << "oracle: " << (cm ? "countermodel of size " + std::to_string(cm->domain_size)
                                    : "no countermodel up to size " + std::to_string(req.oracle_bound))
               << "\n";
        } catch (const std::exception& e) {
          o["skipped"] = e.what();
          text << "oracle: skipped, " << e.what() << "\n";
        }
        j["oracle"] = o;
      }
      break;
    }
    case Verdict::budget_exhausted:
      rep.exit_code = exit_unknown;
      rep.verdict = "unknown";
      break;
  }
  text << "statistics: steps=" << out.stats.steps << " branches=" << out.stats.branches
       << " max_branch_size=" << out.stats.max_branch_size << "\n";
  j["statistics"] = stats;
  j["verdict"] = rep.verdict;
  j["exit_code"] = rep.exit_code;
  if (req.format == OutputFormat::json)
    rep.output = j.dump(2) + "\n";
  else
    rep.output = "verdict: " + rep.verdict + "\n" + text.str();
  return rep;
}

}  // namespace dlseq
