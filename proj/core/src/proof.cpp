#include "dlseq/proof.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace dlseq {

std::size_t ProofNode::height() const {
  std::size_t h = 0;
  for (const auto& c : children) h = std::max(h, c.height() + 1);
  return h;
}

std::size_t ProofNode::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

bool ProofNode::closed() const {
  return rule && std::all_of(children.begin(), children.end(),
                             [](const ProofNode& c) { return c.closed(); });
}

std::vector<std::string> rule_sequence(const ProofNode& t) {
  std::vector<std::string> out;
  std::function<void(const ProofNode&)> walk = [&](const ProofNode& n) {
    out.push_back(n.rule.value_or("open"));
    for (const auto& c : n.children) walk(c);
  };
  walk(t);
  return out;
}

std::string proof_text(const ProofNode& t) {
  std::string out;
  std::function<void(const ProofNode&, std::size_t)> walk = [&](const ProofNode& n,
                                                                 std::size_t depth) {
    out += std::string(2 * depth, ' ') + n.rule.value_or("open") + ": " + n.conclusion.text() + "\n";
    for (const auto& c : n.children) walk(c, depth + 1);
  };
  walk(t, 0);
  return out;
}

namespace {

nlohmann::json to_json(const ProofNode& n) {
  nlohmann::json j;
  j["conclusion"] = n.conclusion.text();
  j["rule"] = n.rule ? nlohmann::json(*n.rule) : nlohmann::json(nullptr);
  nlohmann::json b = nlohmann::json::object();
  for (const auto& [k, v] : n.binding) b[k] = value_text(v);
  j["bindings"] = b;
  j["children"] = nlohmann::json::array();
  for (const auto& c : n.children) j["children"].push_back(to_json(c));
  return j;
}

}  // namespace

std::string proof_json(const ProofNode& t, int indent) { return to_json(t).dump(indent); }

ProofNode expand(const Calculus& c, const Sequent& conclusion, const std::string& rule,
                 const Binding& binding) {
  const RuleSchema* s = c.find(rule);
  if (!s) throw RuleError("unknown rule " + rule);
  RuleInstance inst = s->instantiate(binding);
  if (!inst.fits(conclusion))
    throw RuleError(rule + ": principal formulae missing from " + conclusion.text());
  ProofNode n;
  n.conclusion = conclusion;
  n.rule = rule;
  n.binding = binding;
  for (auto& p : inst.premises(conclusion)) n.children.push_back(ProofNode{std::move(p), {}, {}, {}});
  return n;
}

namespace {

std::optional<std::string> check_node(const ProofNode& n, const Calculus& c) {
  if (!n.rule) return "open leaf";
  const RuleSchema* s = c.find(*n.rule);
  if (!s) return "rule " + *n.rule + " is not in the calculus";
  RuleInstance inst;
  try {
    inst = s->instantiate(n.binding);
  } catch (const std::exception& e) {
    return std::string(e.what());
  }
  if (!inst.fits(n.conclusion)) return "principal formulae of " + *n.rule + " missing from conclusion";
  auto occurring = free_individuals(n.conclusion);
  std::set<Individual> seen;
  for (const auto& e : inst.eigens) {
    if (occurring.count(e)) return "eigenvariable occurs in conclusion: " + e.name();
    if (!seen.insert(e).second) return "eigenvariables not distinct: " + e.name();
  }
  if (inst.premise_count() != n.children.size())
    return *n.rule + " has " + std::to_string(inst.premise_count()) + " premises, node has " +
           std::to_string(n.children.size()) + " children";
  for (std::size_t i = 0; i < n.children.size(); ++i)
    if (!(inst.premise(n.conclusion, i) == n.children[i].conclusion))
      return "child " + std::to_string(i) + " is not premise " + std::to_string(i) + " of " +
             *n.rule + " (expected " + inst.premise(n.conclusion, i).text() + ")";
  return std::nullopt;
}

bool check_rec(const ProofNode& n, const Calculus& c, std::vector<std::size_t>& path,
               CheckResult& out) {
  if (auto err = check_node(n, c)) {
    out.valid = false;
    out.message = *err;
    out.path = path;
    out.offending = n.conclusion.text();
    return false;
  }
  for (std::size_t i = 0; i < n.children.size(); ++i) {
    path.push_back(i);
    if (!check_rec(n.children[i], c, path, out)) return false;
    path.pop_back();
  }
  return true;
}

}  // namespace

CheckResult check_proof(const ProofNode& t, const Calculus& c) {
  CheckResult out;
  std::vector<std::size_t> path;
  check_rec(t, c, path, out);
  return out;
}

}  // namespace dlseq
