#include "dlseq/meta.hpp"

namespace dlseq {

namespace {

using CK = Concept::Kind;
using FK = Formula::Kind;

class IdentityBuilder {
 public:
  explicit IdentityBuilder(const Calculus& c) : c_(c) {}

  ProofNode build(const Sequent& s, const Formula& x) {
    switch (x.kind()) {
      case FK::concept_assertion:
        return assertion(s, x.first(), x.concept_of());
      case FK::gci: {
        Individual b = fresh(s);
        return chain(s, "sub_r", {{"P", x.concept_of()}, {"Q", x.rhs()}, {"b", b}},
                     [&](const Sequent& s1) {
                       return chain(s1, "sub_l", {{"P", x.concept_of()}, {"Q", x.rhs()}, {"a", b}},
                                    [&](const Sequent& s2) {
                                      return build(s2, Formula::assertion(b, x.rhs()));
                                    });
                     });
      }
      case FK::role_assertion:
        if (x.role().is_chain()) return composition(s, x);
        return close(s, "id_R", {{"F", x}});
      case FK::equality:
        return close(s, "id_R", {{"F", x}});
      case FK::negated_role: {
        Binding b{{"a", x.first()}, {"b", x.second()}, {"R", x.role()}};
        return chain(s, "negrole_r", b, [&](const Sequent& s1) {
          return chain(s1, "negrole_l", b, [&](const Sequent& s2) {
            return close(s2, "id_R", {{"F", Formula::role_assertion(x.role(), x.first(), x.second())}});
          });
        });
      }
      case FK::inequality: {
        Binding b{{"a", x.first()}, {"b", x.second()}};
        return chain(s, "neq_r", b, [&](const Sequent& s1) {
          return chain(s1, "neq_l", b, [&](const Sequent& s2) {
            return close(s2, "id_R", {{"F", Formula::equality(x.first(), x.second())}});
          });
        });
      }
      case FK::cria:
        return inclusion(s, x);
      case FK::rra:
        return relation(s, x);
    }
    throw TransformError("no identity derivation for " + x.text());
  }

 private:
  ProofNode apply(const Sequent& s, const std::string& rule, const Binding& b) {
    if (!c_.contains(rule))
      throw TransformError("profile mismatch: identity derivation needs rule " + rule);
    return expand(c_, s, rule, b);
  }

  ProofNode close(const Sequent& s, const std::string& rule, const Binding& b) {
    ProofNode n = apply(s, rule, b);
    if (!n.children.empty()) throw TransformError(rule + " did not close " + s.text());
    return n;
  }

  template <typename Next>
  ProofNode chain(const Sequent& s, const std::string& rule, const Binding& b, Next next) {
    ProofNode n = apply(s, rule, b);
    n.children[0] = next(n.children[0].conclusion);
    return n;
  }

  static Individual fresh(const Sequent& s, std::uint32_t offset = 0) {
    return Individual::eigen(next_eigen_index(s) + offset);
  }

  static std::vector<Individual> fresh_list(const Sequent& s, std::size_t n) {
    std::vector<Individual> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(fresh(s, static_cast<std::uint32_t>(i)));
    return out;
  }

  ProofNode assertion(const Sequent& s, const Individual& a, const Concept& p) {
    switch (p.kind()) {
      case CK::atomic:
        return close(s, "id_C", {{"a", a}, {"C", p}});
      case CK::top:
        return close(s, "top_r", {{"a", a}});
      case CK::bottom:
        return close(s, "bot_l", {{"a", a}});
      case CK::negation: {
        Binding b{{"a", a}, {"P", p.first()}};
        return chain(s, "not_r", b, [&](const Sequent& s1) {
          return chain(s1, "not_l", b, [&](const Sequent& s2) { return assertion(s2, a, p.first()); });
        });
      }
      case CK::disjunction:
      case CK::conjunction: {
        bool dis = p.kind() == CK::disjunction;
        Binding b{{"a", a}, {"P", p.first()}, {"Q", p.second()}};
        return chain(s, dis ? "or_r" : "and_l", b, [&](const Sequent& s1) {
          ProofNode n = apply(s1, dis ? "or_l" : "and_r", b);
          n.children[0] = assertion(n.children[0].conclusion, a, p.first());
          n.children[1] = assertion(n.children[1].conclusion, a, p.second());
          return n;
        });
      }
      case CK::exists:
      case CK::forall: {
        bool ex = p.kind() == CK::exists;
        Individual e = fresh(s);
        Binding b{{"a", a}, {"b", e}, {"R", p.role()}, {"P", p.first()}};
        return chain(s, ex ? "some_l" : "all_r", b, [&](const Sequent& s1) {
          return chain(s1, ex ? "some_r" : "all_l", b,
                       [&](const Sequent& s2) { return assertion(s2, e, p.first()); });
        });
      }
      case CK::nominal: {
        Binding b{{"a", a}, {"b", p.individual()}};
        return chain(s, "nom_l1", b, [&](const Sequent& s1) {
          return chain(s1, "nom_r1", b, [&](const Sequent& s2) {
            return close(s2, "id_R", {{"F", Formula::equality(a, p.individual())}});
          });
        });
      }
      case CK::at_most:
      case CK::at_least:
        return counting(s, a, p);
      case CK::self: {
        Binding b{{"a", a}, {"R", p.role()}};
        return chain(s, "self_r", b, [&](const Sequent& s1) {
          return chain(s1, "self_l", b, [&](const Sequent& s2) {
            return close(s2, "id_R", {{"F", Formula::role_assertion(p.role(), a, a)}});
          });
        });
      }
    }
    throw TransformError("no identity derivation for " + p.text());
  }

  /// Witness rule first (fresh successors), then the rule that splits over them.
  ProofNode counting(const Sequent& s, const Individual& a, const Concept& p) {
    bool most = p.kind() == CK::at_most;
    bool plain = p.is_unqualified() && c_.contains(most ? "atmostu_r" : "atleastu_l");
    std::string u = plain ? "u" : "";
    std::string witness = most ? "atmost" + u + "_r" : "atleast" + u + "_l";
    std::string split = most ? "atmost" + u + "_l" : "atleast" + u + "_r";
    std::size_t width = p.bound() + (most ? 1 : 0);
    auto bs = fresh_list(s, width);
    Binding b{{"a", a}, {"n", p.bound()}, {"R", p.role()}, {"bs", bs}};
    if (!plain) b["P"] = p.first();
    return chain(s, witness, b, [&](const Sequent& s1) {
      ProofNode n = apply(s1, split, b);
      std::size_t k = 0;
      if (!plain)
        for (; k < bs.size(); ++k) n.children[k] = assertion(n.children[k].conclusion, bs[k], p.first());
      for (std::size_t i = 0; i < bs.size(); ++i)
        for (std::size_t j = i + 1; j < bs.size(); ++j, ++k)
          n.children[k] = close(n.children[k].conclusion, "id_R", {{"F", Formula::equality(bs[i], bs[j])}});
      return n;
    });
  }

  /// comp_l introduces the midpoint, comp_r splits at it.
  ProofNode composition(const Sequent& s, const Formula& x) {
    const Role& r = x.role();
    Individual m = fresh(s);
    return chain(s, "comp_l", {{"R", r}, {"a", x.first()}, {"b", m}, {"c", x.second()}},
                 [&](const Sequent& s1) {
                   ProofNode n = apply(s1, "comp_r",
                                       {{"R", r}, {"a", x.first()}, {"b", m}, {"c", x.second()}});
                   n.children[0] = build(n.children[0].conclusion,
                                         Formula::role_assertion(r.prefix(), x.first(), m));
                   n.children[1] = close(n.children[1].conclusion, "id_R",
                                         {{"F", Formula::role_assertion(r.last(), m, x.second())}});
                   return n;
                 });
  }

  ProofNode inclusion(const Sequent& s, const Formula& x) {
    Individual a = fresh(s), b = fresh(s, 1);
    return chain(s, "cria_r", {{"F", x}, {"a", a}, {"b", b}}, [&](const Sequent& s1) {
      ProofNode n = apply(s1, "cria_l", {{"F", x}, {"a", a}, {"b", b}});
      n.children[0] = build(n.children[0].conclusion, Formula::role_assertion(Role::chain(x.chain()), a, b));
      n.children[1] = close(n.children[1].conclusion, "id_R",
                            {{"F", Formula::role_assertion(Role::named(x.name()), a, b)}});
      return n;
    });
  }

  ProofNode relation(const Sequent& s, const Formula& x) {
    std::string right = x.name() + "_r", left = x.name() + "_l";
    const RuleSchema* rs = c_.find(right);
    if (!rs || !rs->ddr) throw TransformError("profile mismatch: no definition rules for " + x.name());
    const DescriptiveDefinition& d = rs->ddr->definition;
    Binding b{{"RRA", x}};
    auto eig = fresh_list(s, d.vars.size());
    for (std::size_t i = 0; i < d.vars.size(); ++i) b[d.vars[i]] = eig[i];
    std::map<std::string, Individual> env;
    for (std::size_t i = 0; i < d.vars.size(); ++i) env[d.vars[i]] = eig[i];
    auto goals = d.instantiate(d.consequent, x.arguments(), env);
    return chain(s, right, b, [&](const Sequent& s1) {
      ProofNode n = apply(s1, left, b);
      for (std::size_t j = 0; j < n.children.size(); ++j)
        n.children[j] = close(n.children[j].conclusion, "id_R", {{"F", goals[j]}});
      return n;
    });
  }

  const Calculus& c_;
};

}  // namespace

ProofNode derive_identity(const Calculus& c, const Formula& x, const Sequent& context) {
  Sequent s = context;
  s.add(Side::left, x);
  s.add(Side::right, x);
  try {
    return IdentityBuilder(c).build(s, x);
  } catch (const RuleError& e) {
    throw TransformError(std::string("identity derivation failed: ") + e.what());
  }
}

}  // namespace dlseq
