#include "dlseq/oracle.hpp"

#include <algorithm>
#include <functional>

namespace dlseq {

namespace {

enum V : std::uint8_t { F = 0, T = 1, U = 2 };

V v_not(V a) { return a == U ? U : (a == T ? F : T); }
V v_and(V a, V b) {
  if (a == F || b == F) return F;
  return (a == T && b == T) ? T : U;
}
V v_or(V a, V b) {
  if (a == T || b == T) return T;
  return (a == F && b == F) ? F : U;
}

struct Vocabulary {
  std::vector<std::string> concepts, roles;
  std::vector<Individual> individuals;
};

Vocabulary vocabulary(const Sequent& s) {
  std::set<std::string> cs, rs;
  for (const auto& f : s.side(Side::left)) collect_vocabulary(f, cs, rs);
  for (const auto& f : s.side(Side::right)) collect_vocabulary(f, cs, rs);
  auto inds = free_individuals(s);
  return {{cs.begin(), cs.end()}, {rs.begin(), rs.end()}, {inds.begin(), inds.end()}};
}

const DescriptiveDefinition& definition_for(const std::string& name, const DefinitionRegistry& defs) {
  if (defs.contains(name)) return defs.at(name);
  for (const auto& d : builtin_definitions())
    if (d.name == name) return d;
  throw EvaluationError("no definition for " + name);
}

/// A partially assigned interpretation over n elements.
class Partial {
 public:
  Partial(const Vocabulary& voc, std::size_t n, const DefinitionRegistry& defs)
      : n_(n), defs_(defs), cbits_(voc.concepts.size(), std::vector<V>(n, U)),
        rbits_(voc.roles.size(), std::vector<V>(n * n, U)) {
    for (std::size_t i = 0; i < voc.concepts.size(); ++i) cidx_[voc.concepts[i]] = i;
    for (std::size_t i = 0; i < voc.roles.size(); ++i) ridx_[voc.roles[i]] = i;
  }

  std::map<Individual, Element> ind;
  std::vector<std::vector<V>>& cbits() { return cbits_; }
  std::vector<std::vector<V>>& rbits() { return rbits_; }

  V role(const Role& r, Element x, Element y) const {
    switch (r.kind()) {
      case Role::Kind::named:
        return named(r.name(), x, y);
      case Role::Kind::inverse:
        return named(r.name(), y, x);
      case Role::Kind::universal:
        return T;
      case Role::Kind::chain: {
        std::vector<V> reach(n_);
        for (Element z = 0; z < n_; ++z) reach[z] = role(r.parts()[0], x, z);
        for (std::size_t k = 1; k < r.parts().size(); ++k) {
          std::vector<V> next(n_, F);
          for (Element w = 0; w < n_; ++w)
            for (Element z = 0; z < n_; ++z)
              next[w] = v_or(next[w], v_and(reach[z], role(r.parts()[k], z, w)));
          reach = std::move(next);
        }
        return reach[y];
      }
    }
    return U;
  }

  std::vector<V> concept_value(const Concept& c) const {
    using K = Concept::Kind;
    std::vector<V> out(n_, F);
    switch (c.kind()) {
      case K::atomic: {
        auto it = cidx_.find(c.name());
        if (it != cidx_.end()) out = cbits_[it->second];
        break;
      }
      case K::top:
        std::fill(out.begin(), out.end(), T);
        break;
      case K::bottom:
        break;
      case K::negation: {
        auto in = concept_value(c.first());
        for (Element x = 0; x < n_; ++x) out[x] = v_not(in[x]);
        break;
      }
      case K::disjunction:
      case K::conjunction: {
        auto l = concept_value(c.first()), r = concept_value(c.second());
        for (Element x = 0; x < n_; ++x)
          out[x] = c.kind() == K::disjunction ? v_or(l[x], r[x]) : v_and(l[x], r[x]);
        break;
      }
      case K::exists:
      case K::forall: {
        auto p = concept_value(c.first());
        for (Element x = 0; x < n_; ++x) {
          V acc = c.kind() == K::exists ? F : T;
          for (Element y = 0; y < n_; ++y) {
            V r = role(c.role(), x, y);
            acc = c.kind() == K::exists ? v_or(acc, v_and(r, p[y])) : v_and(acc, v_or(v_not(r), p[y]));
          }
          out[x] = acc;
        }
        break;
      }
      case K::nominal:
        out[ind.at(c.individual())] = T;
        break;
      case K::at_most:
      case K::at_least: {
        auto p = concept_value(c.first());
        for (Element x = 0; x < n_; ++x) {
          std::size_t sure = 0, maybe = 0;
          for (Element y = 0; y < n_; ++y) {
            V m = v_and(role(c.role(), x, y), p[y]);
            if (m == T) ++sure;
            if (m != F) ++maybe;
          }
          if (c.kind() == K::at_most)
            out[x] = sure > c.bound() ? F : (maybe <= c.bound() ? T : U);
          else
            out[x] = sure >= c.bound() ? T : (maybe < c.bound() ? F : U);
        }
        break;
      }
      case K::self:
        for (Element x = 0; x < n_; ++x) out[x] = role(c.role(), x, x);
        break;
    }
    return out;
  }

  V formula(const Formula& f) const {
    using K = Formula::Kind;
    switch (f.kind()) {
      case K::concept_assertion:
        return concept_value(f.concept_of())[ind.at(f.first())];
      case K::gci: {
        auto l = concept_value(f.concept_of()), r = concept_value(f.rhs());
        V acc = T;
        for (Element x = 0; x < n_; ++x) acc = v_and(acc, v_or(v_not(l[x]), r[x]));
        return acc;
      }
      case K::role_assertion:
        return role(f.role(), ind.at(f.first()), ind.at(f.second()));
      case K::negated_role:
        return v_not(role(f.role(), ind.at(f.first()), ind.at(f.second())));
      case K::cria: {
        Role chain = Role::chain(f.chain());
        V acc = T;
        for (Element x = 0; x < n_; ++x)
          for (Element y = 0; y < n_; ++y)
            acc = v_and(acc, v_or(v_not(role(chain, x, y)), named(f.name(), x, y)));
        return acc;
      }
      case K::rra:
        return relation(f);
      case K::equality:
        return ind.at(f.first()) == ind.at(f.second()) ? T : F;
      case K::inequality:
        return ind.at(f.first()) != ind.at(f.second()) ? T : F;
    }
    return U;
  }

  Interpretation freeze(const Vocabulary& voc) const {
    Interpretation i;
    i.domain_size = n_;
    i.individuals = ind;
    for (std::size_t c = 0; c < voc.concepts.size(); ++c) {
      auto& ext = i.concepts[voc.concepts[c]];
      for (Element x = 0; x < n_; ++x)
        if (cbits_[c][x] == T) ext.insert(x);
    }
    for (std::size_t r = 0; r < voc.roles.size(); ++r) {
      auto& ext = i.roles[voc.roles[r]];
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y)
          if (rbits_[r][x * n_ + y] == T) ext.insert({x, y});
    }
    return i;
  }

 private:
  V named(const std::string& r, Element x, Element y) const {
    auto it = ridx_.find(r);
    return it == ridx_.end() ? F : rbits_[it->second][x * n_ + y];
  }

  V relation(const Formula& f) const {
    const DescriptiveDefinition& d = definition_for(f.name(), defs_);
    if (f.arguments().size() != d.roles.size())
      throw EvaluationError(f.name() + " expects " + std::to_string(d.roles.size()) + " roles");
    std::map<std::string, std::string> roles;
    for (std::size_t k = 0; k < d.roles.size(); ++k) roles[d.roles[k]] = f.arguments()[k];
    std::map<std::string, Element> env;
    auto atom = [&](const DefinitionAtom& a) {
      Element x = env.at(a.x), y = env.at(a.y);
      if (a.kind == DefinitionAtom::Kind::equality) return x == y ? T : F;
      return named(roles.at(a.role), x, y);
    };
    V acc = T;
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
      if (acc == F) return;
      if (k == d.vars.size()) {
        V ante = T, cons = F;
        for (const auto& a : d.antecedent) ante = v_and(ante, atom(a));
        for (const auto& a : d.consequent) cons = v_or(cons, atom(a));
        acc = v_and(acc, v_or(v_not(ante), cons));
        return;
      }
      for (Element x = 0; x < n_; ++x) {
        env[d.vars[k]] = x;
        assign(k + 1);
      }
    };
    assign(0);
    return acc;
  }

  std::size_t n_;
  const DefinitionRegistry& defs_;
  std::vector<std::vector<V>> cbits_, rbits_;
  std::map<std::string, std::size_t> cidx_, ridx_;
};

enum class Status { refuted, open, countermodel };

Status status(const Partial& p, const Sequent& s) {
  bool decided = true;
  for (const auto& f : s.side(Side::left)) {
    V v = p.formula(f);
    if (v == F) return Status::refuted;
    if (v == U) decided = false;
  }
  for (const auto& f : s.side(Side::right)) {
    V v = p.formula(f);
    if (v == T) return Status::refuted;
    if (v == U) decided = false;
  }
  return decided ? Status::countermodel : Status::open;
}

/// Restricted-growth maps of the individuals into n elements.
void individual_maps(const std::vector<Individual>& inds, std::size_t n, std::size_t i,
                     Element used, std::map<Individual, Element>& cur,
                     const std::function<bool(const std::map<Individual, Element>&)>& visit,
                     bool& stop) {
  if (stop) return;
  if (i == inds.size()) {
    stop = visit(cur);
    return;
  }
  for (Element x = 0; x < std::min<std::size_t>(n, used + 1) && !stop; ++x) {
    cur[inds[i]] = x;
    individual_maps(inds, n, i + 1, std::max<Element>(used, x + 1), cur, visit, stop);
  }
  cur.erase(inds[i]);
}

}  // namespace

std::optional<Interpretation> find_countermodel(const Sequent& s, std::size_t max_domain,
                                                const DefinitionRegistry& defs,
                                                const OracleLimits& limits) {
  Vocabulary voc = vocabulary(s);
  if (max_domain == 0) throw OracleLimitError("domain bound must be positive");
  if (max_domain > limits.max_domain || voc.concepts.size() > limits.max_concepts ||
      voc.roles.size() > limits.max_roles || voc.individuals.size() > limits.max_individuals)
    throw OracleLimitError("vocabulary or domain bound exceeds the enumeration limits");

  std::optional<Interpretation> found;
  for (std::size_t n = 1; n <= max_domain && !found; ++n) {
    Partial p(voc, n, defs);
    // Variables: every role pair, then every concept membership.
    std::vector<std::pair<bool, std::pair<std::size_t, std::size_t>>> vars;
    for (std::size_t r = 0; r < voc.roles.size(); ++r)
      for (std::size_t k = 0; k < n * n; ++k) vars.push_back({true, {r, k}});
    for (std::size_t c = 0; c < voc.concepts.size(); ++c)
      for (std::size_t k = 0; k < n; ++k) vars.push_back({false, {c, k}});

    std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
      Status st = status(p, s);
      if (st == Status::refuted) return false;
      if (st == Status::countermodel) {
        // Fix the unassigned bits to false so the result is a total structure.
        for (std::size_t j = i; j < vars.size(); ++j) {
          auto [is_role, at] = vars[j];
          (is_role ? p.rbits() : p.cbits())[at.first][at.second] = F;
        }
        Interpretation m = p.freeze(voc);
        if (satisfies_sequent(m, s, defs))
          throw EvaluationError("three-valued evaluation disagrees with satisfies_sequent on " + s.text());
        found = std::move(m);
        return true;
      }
      if (i == vars.size()) return false;
      auto [is_role, at] = vars[i];
      auto& bit = (is_role ? p.rbits() : p.cbits())[at.first][at.second];
      for (V v : {F, T}) {
        bit = v;
        if (search(i + 1)) return true;
      }
      bit = U;
      return false;
    };

    std::map<Individual, Element> cur;
    bool stop = false;
    individual_maps(voc.individuals, n, 0, 0, cur,
                    [&](const std::map<Individual, Element>& m) {
                      p.ind = m;
                      return search(0);
                    },
                    stop);
  }
  return found;
}

std::optional<Interpretation> find_countermodel_reversed(const Sequent& s, std::size_t max_domain,
                                                         const DefinitionRegistry& defs) {
  Vocabulary voc = vocabulary(s);
  for (std::size_t n = max_domain; n >= 1; --n) {
    std::size_t bits = voc.concepts.size() * n + voc.roles.size() * n * n;
    if (bits > 24) throw OracleLimitError("reversed enumeration is limited to 24 bits");
    std::size_t maps = 1;
    for (std::size_t k = 0; k < voc.individuals.size(); ++k) maps *= n;
    for (std::size_t m = maps; m-- > 0;) {
      Interpretation i;
      i.domain_size = n;
      std::size_t code = m;
      for (const auto& a : voc.individuals) {
        i.individuals[a] = code % n;
        code /= n;
      }
      for (std::uint64_t pattern = (std::uint64_t{1} << bits); pattern-- > 0;) {
        std::size_t bit = 0;
        for (const auto& c : voc.concepts) {
          auto& ext = i.concepts[c];
          ext.clear();
          for (Element x = 0; x < n; ++x)
            if (pattern >> bit++ & 1) ext.insert(x);
        }
        for (const auto& r : voc.roles) {
          auto& ext = i.roles[r];
          ext.clear();
          for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
              if (pattern >> bit++ & 1) ext.insert({x, y});
        }
        if (!satisfies_sequent(i, s, defs)) return i;
      }
    }
  }
  return std::nullopt;
}

}  // namespace dlseq
