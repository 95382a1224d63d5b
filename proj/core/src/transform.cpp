#include <algorithm>

#include "dlseq/meta.hpp"

namespace dlseq {

namespace {

class FreshSupply {
 public:
  explicit FreshSupply(std::uint32_t next) : next_(next) {}
  Individual operator()() { return Individual::eigen(next_++); }

 private:
  std::uint32_t next_;
};

void note(std::uint32_t& next, const Individual& i) {
  if (i.is_eigen()) next = std::max(next, i.eigen_index() + 1);
}

void note_value(std::uint32_t& next, const BindingValue& v) {
  if (auto i = std::get_if<Individual>(&v)) note(next, *i);
  if (auto xs = std::get_if<std::vector<Individual>>(&v))
    for (const auto& x : *xs) note(next, x);
  if (auto f = std::get_if<Formula>(&v))
    for (const auto& x : free_individuals(*f)) note(next, x);
  if (auto k = std::get_if<Concept>(&v))
    for (const auto& x : free_individuals(*k)) note(next, x);
}

void scan(std::uint32_t& next, const ProofNode& t) {
  next = std::max(next, next_eigen_index(t.conclusion));
  for (const auto& [k, v] : t.binding) note_value(next, v);
  for (const auto& ch : t.children) scan(next, ch);
}

FreshSupply supply_for(const ProofNode& t, const std::vector<Individual>& extra = {}) {
  std::uint32_t next = 1;
  scan(next, t);
  for (const auto& i : extra) note(next, i);
  return FreshSupply(next);
}

BindingValue substitute_value(const BindingValue& v, const Individual& from, const Individual& to) {
  return std::visit(
      [&](const auto& x) -> BindingValue {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Individual>) {
          return x == from ? to : x;
        } else if constexpr (std::is_same_v<T, Concept> || std::is_same_v<T, Formula>) {
          return substitute(x, from, to);
        } else if constexpr (std::is_same_v<T, std::vector<Individual>>) {
          std::vector<Individual> out = x;
          for (auto& i : out)
            if (i == from) i = to;
          return out;
        } else {
          return x;
        }
      },
      v);
}

Binding substitute_binding(const Binding& b, const Individual& from, const Individual& to) {
  Binding out;
  for (const auto& [k, v] : b) out[k] = substitute_value(v, from, to);
  return out;
}

std::set<Individual> individuals_of(const SequentChange& ch) {
  std::set<Individual> out;
  for (const auto* zone : {&ch.left, &ch.right})
    for (const auto& f : *zone)
      for (const auto& i : free_individuals(f)) out.insert(i);
  return out;
}

std::vector<Formula> sorted(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  return fs;
}

bool same_change(const SequentChange& a, const SequentChange& b) {
  return sorted(a.left) == sorted(b.left) && sorted(a.right) == sorted(b.right);
}

/// `big` minus `small` as a change, when `small` is a sub-multiset.
std::optional<SequentChange> difference(const Sequent& big, const Sequent& small) {
  SequentChange out;
  for (Side side : {Side::left, Side::right}) {
    auto rest = big.side(side);
    for (const auto& f : small.side(side)) {
      auto it = std::find(rest.begin(), rest.end(), f);
      if (it == rest.end()) return std::nullopt;
      rest.erase(it);
    }
    (side == Side::left ? out.left : out.right) = rest;
  }
  return out;
}

class Transformer {
 public:
  Transformer(const Calculus& c, FreshSupply fresh) : c_(c), fresh_(fresh) {}

  RuleInstance instance(const ProofNode& n) const {
    const RuleSchema* s = c_.find(*n.rule);
    if (!s) throw TransformError("rule " + *n.rule + " is not in the calculus");
    try {
      return s->instantiate(n.binding);
    } catch (const RuleError& e) {
      throw TransformError(e.what());
    }
  }

  ProofNode substitute(const ProofNode& t, const Individual& from, const Individual& to) {
    ProofNode n = t;
    if (!t.is_open()) {
      for (const auto& e : instance(t).eigens)
        if (e == from || e == to) rename_eigen(n, e, fresh_());
    }
    n.conclusion = dlseq::substitute(n.conclusion, from, to);
    n.binding = substitute_binding(n.binding, from, to);
    for (auto& ch : n.children) ch = substitute(ch, from, to);
    return n;
  }

  ProofNode weaken(const ProofNode& t, const SequentChange& add, const std::set<Individual>& inds) {
    ProofNode n = t;
    n.conclusion.add_all(Side::left, add.left);
    n.conclusion.add_all(Side::right, add.right);
    if (t.is_open()) return n;
    for (const auto& e : instance(t).eigens)
      if (inds.count(e)) rename_eigen(n, e, fresh_());
    for (auto& ch : n.children) ch = weaken(ch, add, inds);
    return n;
  }

  ProofNode contract(const ProofNode& t, Side side, const Formula& f) {
    if (t.conclusion.count(side, f) < 2)
      throw TransformError("contraction needs two copies of " + f.text() + " in " + t.conclusion.text());
    Sequent target = t.conclusion;
    target.remove(side, f);
    ProofNode n = t;
    n.conclusion = target;
    if (t.is_open()) return n;
    RuleInstance inst = instance(t);
    const auto& removed = side == Side::left ? inst.removed.left : inst.removed.right;
    if (std::find(removed.begin(), removed.end(), f) != removed.end()) {
      for (std::size_t i = 0; i < n.children.size(); ++i) n.children[i] = contract_principal(t, inst, i);
      return n;
    }
    if (inst.fits(target)) {
      for (auto& ch : n.children) ch = contract(ch, side, f);
      return n;
    }
    if (auto v = contracted_variant(t, target)) {
      n.rule = v->first;
      n.binding = v->second;
      for (auto& ch : n.children) ch = contract(ch, side, f);
      return n;
    }
    throw TransformError("contraction of " + f.text() + " blocked: " + *t.rule +
                         " needs both copies as principal formulae");
  }

  /// Proof of premise i of `inst` over the conclusion of `t`.
  ProofNode invert(const ProofNode& t, const RuleInstance& inst, std::size_t i) {
    Sequent target = inst.premise(t.conclusion, i);
    ProofNode n = t;
    n.conclusion = target;
    if (t.is_open()) {
      n.binding.clear();
      n.children.clear();
      return n;
    }
    RuleInstance here = instance(t);
    if (!inst.removed.empty() && same_change(here.removed, inst.removed)) return follow(t, here, inst, i);
    if (!here.fits(target))
      throw TransformError("inversion of " + inst.rule + " blocked: " + *t.rule +
                           " uses the principal formula as a side formula in " + t.conclusion.text());
    auto target_inds = free_individuals(target);
    for (const auto& e : here.eigens)
      if (target_inds.count(e)) rename_eigen(n, e, fresh_());
    for (auto& ch : n.children) ch = invert(ch, inst, i);
    return n;
  }

  Individual fresh() { return fresh_(); }

 private:
  /// Renames an eigen of `n`'s own rule below `n`; the conclusion is untouched.
  void rename_eigen(ProofNode& n, const Individual& e, const Individual& f) {
    n.binding = substitute_binding(n.binding, e, f);
    for (auto& ch : n.children) ch = substitute(ch, e, f);
  }

  /// `t` already applies a rule to the inverted principal.
  ProofNode follow(const ProofNode& t, const RuleInstance& here, const RuleInstance& inst, std::size_t i) {
    Sequent target = inst.premise(t.conclusion, i);
    bool same_rule = here.rule == inst.rule;
    std::size_t j = same_rule ? i : 0;
    if (!same_rule && here.premise_count() != 1)
      throw TransformError("inversion of " + inst.rule + " across " + here.rule + " is not supported");
    if (here.eigens.size() != inst.eigens.size())
      throw TransformError("inversion of " + inst.rule + " across " + here.rule + ": eigen mismatch");
    ProofNode ch = t.children[j];
    std::vector<Individual> tmp;
    for (const auto& e : here.eigens) {
      tmp.push_back(fresh_());
      ch = substitute(ch, e, tmp.back());
    }
    for (std::size_t k = 0; k < tmp.size(); ++k) ch = substitute(ch, tmp[k], inst.eigens[k]);
    if (ch.conclusion == target) return ch;
    if (auto extra = difference(target, ch.conclusion)) return weaken(ch, *extra, individuals_of(*extra));
    throw TransformError("inversion of " + inst.rule + " across " + here.rule + " is not height-preserving");
  }

  ProofNode contract_principal(const ProofNode& t, const RuleInstance& inst, std::size_t i) {
    const RuleSchema* s = c_.find(inst.rule);
    Binding b = t.binding;
    std::vector<std::pair<Individual, Individual>> back;
    for (const auto& p : s->eigen_params) {
      if (auto xs = std::get_if<std::vector<Individual>>(&b[p])) {
        for (auto& x : *xs) {
          Individual f = fresh_();
          back.emplace_back(f, x);
          x = f;
        }
      } else {
        Individual f = fresh_();
        back.emplace_back(f, std::get<Individual>(b[p]));
        b[p] = f;
      }
    }
    RuleInstance again = instance_of(*s, b);
    ProofNode r = invert(t.children[i], again, i);
    for (const auto& [f, x] : back) r = substitute(r, f, x);
    for (const auto& g : inst.added[i].left) r = contract(r, Side::left, g);
    for (const auto& g : inst.added[i].right) r = contract(r, Side::right, g);
    return r;
  }

  RuleInstance instance_of(const RuleSchema& s, const Binding& b) const {
    try {
      return s.instantiate(b);
    } catch (const RuleError& e) {
      throw TransformError(e.what());
    }
  }

  /// A contracted definition rule that needs only one copy of the merged atoms.
  std::optional<std::pair<std::string, Binding>> contracted_variant(const ProofNode& t, const Sequent& target) {
    const RuleSchema* s = c_.find(*t.rule);
    if (!s || !s->ddr || !s->ddr->left) return std::nullopt;
    const RuleSchema* base = c_.find(s->ddr->base_name + "_l");
    if (!base || !base->ddr) return std::nullopt;
    auto rep = [](const DdrInfo& d, const std::string& v) {
      auto it = d.identification.find(v);
      return it == d.identification.end() ? v : it->second;
    };
    std::map<std::string, Individual> assignment;
    for (const auto& v : base->ddr->definition.vars)
      assignment[v] = binding_get<Individual>(t.binding, rep(*s->ddr, v));
    for (const auto& cand : c_.schemas()) {
      if (!cand->ddr || !cand->ddr->left || cand->ddr->base_name != s->ddr->base_name) continue;
      bool consistent = true;
      for (const auto& v : base->ddr->definition.vars)
        consistent = consistent && assignment[v] == assignment[rep(*cand->ddr, v)];
      if (!consistent) continue;
      Binding b{{"RRA", t.binding.at("RRA")}};
      for (const auto& v : cand->ddr->definition.vars) b[v] = assignment[v];
      RuleInstance inst;
      try {
        inst = cand->instantiate(b);
      } catch (const RuleError&) {
        continue;
      }
      if (inst.fits(target)) return std::make_pair(cand->name, b);
    }
    return std::nullopt;
  }

  const Calculus& c_;
  FreshSupply fresh_;
};

std::vector<Individual> payload_individuals(const std::vector<Formula>& fs) {
  std::vector<Individual> out;
  for (const auto& f : fs)
    for (const auto& i : free_individuals(f)) out.push_back(i);
  return out;
}

}  // namespace

RuleInstance node_instance(const Calculus& c, const ProofNode& n) {
  if (n.is_open()) throw TransformError("open leaf has no rule instance");
  return Transformer(c, FreshSupply(1)).instance(n);
}

ProofNode weaken(const Calculus& c, const ProofNode& t, const SequentChange& added) {
  auto inds = individuals_of(added);
  Transformer tr(c, supply_for(t, {inds.begin(), inds.end()}));
  return tr.weaken(t, added, inds);
}

ProofNode substitute(const Calculus& c, const ProofNode& t, const Individual& from,
                     const Individual& to) {
  if (from == to) return t;
  Transformer tr(c, supply_for(t, {from, to}));
  return tr.substitute(t, from, to);
}

ProofNode contract(const Calculus& c, const ProofNode& t, Side side, const Formula& f) {
  Transformer tr(c, supply_for(t, payload_individuals({f})));
  return tr.contract(t, side, f);
}

ProofNode invert(const Calculus& c, const std::string& rule, std::size_t premise,
                 const ProofNode& t, std::optional<Binding> binding) {
  const RuleSchema* s = c.find(rule);
  if (!s) throw TransformError("rule " + rule + " is not in the calculus");
  if (!binding) {
    auto candidates = s->enumerate(BranchView(t.conclusion));
    if (candidates.empty()) throw TransformError(rule + " does not apply to " + t.conclusion.text());
    binding = candidates.front();
  }
  std::vector<Individual> bound;
  for (const auto& [k, v] : *binding) {
    if (auto i = std::get_if<Individual>(&v)) bound.push_back(*i);
    if (auto xs = std::get_if<std::vector<Individual>>(&v)) bound.insert(bound.end(), xs->begin(), xs->end());
  }
  Transformer tr(c, supply_for(t, bound));
  for (const auto& p : s->eigen_params) {
    if (binding->count(p)) continue;
    if (s->eigen_width) {
      std::vector<Individual> xs;
      for (std::size_t i = 0, n = s->eigen_width(*binding, p); i < n; ++i) xs.push_back(tr.fresh());
      (*binding)[p] = xs;
    } else {
      (*binding)[p] = tr.fresh();
    }
  }
  RuleInstance inst;
  try {
    inst = s->instantiate(*binding);
  } catch (const RuleError& e) {
    throw TransformError(e.what());
  }
  if (premise >= inst.premise_count())
    throw TransformError(rule + " has no premise " + std::to_string(premise));
  if (!inst.fits(t.conclusion))
    throw TransformError("conclusion does not match " + rule + ": " + t.conclusion.text());
  auto present = free_individuals(t.conclusion);
  for (const auto& e : inst.eigens)
    if (present.count(e)) throw TransformError("eigenvariable occurs in conclusion: " + e.name());
  if (s->retains_principal || inst.removed.empty()) return weaken(c, t, inst.added[premise]);
  return tr.invert(t, inst, premise);
}

ProofNode transform(const Calculus& c, TransformKind kind, const ProofNode& t,
                    const TransformPayload& payload) {
  switch (kind) {
    case TransformKind::weaken_left:
      return weaken(c, t, SequentChange{payload.formulas, {}});
    case TransformKind::weaken_right:
      return weaken(c, t, SequentChange{{}, payload.formulas});
    case TransformKind::contract_left:
    case TransformKind::contract_right: {
      Side side = kind == TransformKind::contract_left ? Side::left : Side::right;
      ProofNode r = t;
      for (const auto& f : payload.formulas) r = contract(c, r, side, f);
      return r;
    }
    case TransformKind::substitute:
      if (!payload.substitution) throw TransformError("substitution payload missing");
      return substitute(c, t, payload.substitution->first, payload.substitution->second);
  }
  throw TransformError("unknown transform");
}

}  // namespace dlseq
