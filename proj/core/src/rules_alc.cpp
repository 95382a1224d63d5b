#include "rule_kit.hpp"

namespace dlseq {

using namespace kit;
using CK = Concept::Kind;
using FK = Formula::Kind;

namespace {

void need_kind(const Concept& c, CK kind, const std::string& rule, const char* what) {
  if (c.kind() != kind) throw RuleError(rule + ": " + what + " expected, got " + c.text());
}

SchemaPtr id_c() {
  RuleSchema s;
  s.name = "id_C";
  s.kind = RuleKind::initial;
  s.family = "alc";
  s.display = "G, a:C |- a:C, D";
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, Side::left, CK::atomic, [&](const Formula& f) {
      if (v.has_right(f)) out.push_back({{"a", f.first()}, {"C", f.concept_of()}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    need_kind(con(b, "C"), CK::atomic, "id_C", "an atomic concept");
    auto r = start("id_C", b);
    Formula f = at(ind(b, "a"), con(b, "C"));
    r.required = {{f}, {f}};
    return r;
  };
  return finish(std::move(s));
}

SchemaPtr id_r() {
  RuleSchema s;
  s.name = "id_R";
  s.kind = RuleKind::initial;
  s.family = "alc";
  s.display = "G, F |- F, D   (F a role assertion or an equality)";
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : v.left) {
      bool ok = (f.kind() == FK::role_assertion && !f.role().is_chain()) ||
                f.kind() == FK::equality;
      if (ok && v.has_right(f)) out.push_back({{"F", f}});
    }
    return out;
  };
  s.instantiate = [](const Binding& b) {
    const Formula& f = form(b, "F");
    bool ok = (f.kind() == FK::role_assertion && !f.role().is_chain()) || f.kind() == FK::equality;
    if (!ok) throw RuleError("id_R: F must be of the form r(a,b) or a = b, got " + f.text());
    auto r = start("id_R", b);
    r.required = {{f}, {f}};
    return r;
  };
  return finish(std::move(s));
}

SchemaPtr bot_l() {
  RuleSchema s;
  s.name = "bot_l";
  s.kind = RuleKind::initial;
  s.family = "alc";
  s.display = "G, a:bot |- D";
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, Side::left, CK::bottom, [&](const Formula& f) { out.push_back({{"a", f.first()}}); });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto r = start("bot_l", b);
    r.required.left = {at(ind(b, "a"), Concept::bottom())};
    return r;
  };
  return finish(std::move(s));
}

SchemaPtr top_r() {
  RuleSchema s;
  s.name = "top_r";
  s.kind = RuleKind::initial;
  s.family = "alc";
  s.display = "G |- a:top, D";
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, Side::right, CK::top, [&](const Formula& f) { out.push_back({{"a", f.first()}}); });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto r = start("top_r", b);
    r.required.right = {at(ind(b, "a"), Concept::top())};
    return r;
  };
  return finish(std::move(s));
}

/// bot_r and top_l: add a:bot right / a:top left for the least individual
/// not yet given one. On a branch without individuals top_l names one.
SchemaPtr constant_generator(const std::string& name, bool bottom) {
  RuleSchema s;
  s.name = name;
  s.kind = RuleKind::unary;
  s.generator = true;
  s.retains_principal = true;
  s.family = "alc";
  s.display = bottom ? "G |- a:bot, D / G |- D" : "G, a:top |- D / G |- D";
  s.enumerate = [bottom](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& a : v.individuals) out.push_back({{"a", a}});
    if (out.empty() && !bottom) out.push_back({{"a", Individual::eigen(next_eigen_index(v.top))}});
    return out;
  };
  s.instantiate = [name, bottom](const Binding& b) {
    auto r = start(name, b);
    const Individual& a = ind(b, "a");
    if (bottom)
      r.added = {{{}, {at(a, Concept::bottom())}}};
    else
      r.added = {{{at(a, Concept::top())}, {}}};
    return r;
  };
  return finish(std::move(s));
}

/// Unary/binary rule whose single principal IF a:X is replaced.
template <typename Build>
SchemaPtr if_rule(const std::string& name, Side side, CK kind, RuleKind rk,
                  std::vector<std::string> eigens, std::string display, Build build) {
  RuleSchema s;
  s.name = name;
  s.kind = rk;
  s.eigen_params = std::move(eigens);
  s.family = "alc";
  s.display = std::move(display);
  s.enumerate = [side, kind](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, side, kind, [&](const Formula& f) {
      const Concept& c = f.concept_of();
      Binding b{{"a", f.first()}};
      switch (kind) {
        case CK::negation:
          b["P"] = c.first();
          break;
        case CK::disjunction:
        case CK::conjunction:
          b["P"] = c.first();
          b["Q"] = c.second();
          break;
        case CK::exists:
        case CK::forall:
          b["R"] = c.role();
          b["P"] = c.first();
          break;
        default:
          break;
      }
      out.push_back(std::move(b));
    });
    return out;
  };
  s.instantiate = [name, side, build](const Binding& b) {
    auto r = start(name, b);
    Formula principal = build(b, r);
    if (side == Side::left) {
      r.required.left = {principal};
      r.removed.left = {principal};
    } else {
      r.required.right = {principal};
      r.removed.right = {principal};
    }
    return r;
  };
  return finish(std::move(s));
}

SchemaPtr sub_l() {
  RuleSchema s;
  s.name = "sub_l";
  s.kind = RuleKind::unary;
  s.retains_principal = true;
  s.family = "alc";
  s.display = "G, P sub Q, a:P, a:Q |- D / G, P sub Q, a:P |- D";
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_ef(v, Side::left, FK::gci, [&](const Formula& g) {
      for (const auto& f : v.left) {
        if (f.is_internal() && f.concept_of() == g.concept_of())
          out.push_back({{"P", g.concept_of()}, {"Q", g.rhs()}, {"a", f.first()}});
      }
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto r = start("sub_l", b);
    const Individual& a = ind(b, "a");
    r.required.left = {Formula::gci(con(b, "P"), con(b, "Q")), at(a, con(b, "P"))};
    r.added = {{{at(a, con(b, "Q"))}, {}}};
    return r;
  };
  return finish(std::move(s));
}

SchemaPtr sub_r() {
  RuleSchema s;
  s.name = "sub_r";
  s.kind = RuleKind::unary;
  s.eigen_params = {"b"};
  s.family = "alc";
  s.display = "G, b:P |- b:Q, D / G |- P sub Q, D   (b fresh)";
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_ef(v, Side::right, FK::gci, [&](const Formula& g) {
      out.push_back({{"P", g.concept_of()}, {"Q", g.rhs()}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto r = start("sub_r", b);
    Formula g = Formula::gci(con(b, "P"), con(b, "Q"));
    const Individual& e = ind(b, "b");
    r.required.right = {g};
    r.removed.right = {g};
    r.added = {{{at(e, con(b, "P"))}, {at(e, con(b, "Q"))}}};
    r.eigens = {e};
    return r;
  };
  return finish(std::move(s));
}

/// some_r and all_l: principal IF plus a role assertion, both retained.
SchemaPtr successor_rule(const std::string& name, bool exists) {
  RuleSchema s;
  s.name = name;
  s.kind = RuleKind::unary;
  s.retains_principal = true;
  s.family = "alc";
  s.display = exists ? "G, R(a,b) |- a:some R P, b:P, D / G, R(a,b) |- a:some R P, D"
                     : "G, R(a,b), a:all R P, b:P |- D / G, R(a,b), a:all R P |- D";
  s.enumerate = [exists](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, exists ? Side::right : Side::left, exists ? CK::exists : CK::forall,
            [&](const Formula& f) {
              const Concept& c = f.concept_of();
              for (const auto& ra : v.left_roles) {
                if (ra.role() == c.role() && ra.first() == f.first())
                  out.push_back({{"a", f.first()},
                                 {"b", ra.second()},
                                 {"R", c.role()},
                                 {"P", c.first()}});
              }
            });
    return out;
  };
  s.instantiate = [name, exists](const Binding& b) {
    auto r = start(name, b);
    const Role& role_ = role(b, "R");
    require_role_kind(role_, false, name);
    const Individual& a = ind(b, "a");
    const Individual& c = ind(b, "b");
    const Concept& p = con(b, "P");
    Formula ra = rel(role_, a, c);
    if (exists) {
      Formula f = at(a, Concept::exists(role_, p));
      r.required = {{ra}, {f}};
      r.added = {{{}, {at(c, p)}}};
    } else {
      Formula f = at(a, Concept::forall(role_, p));
      r.required = {{ra, f}, {}};
      r.added = {{{at(c, p)}, {}}};
    }
    return r;
  };
  return finish(std::move(s));
}

}  // namespace

std::vector<SchemaPtr> alc_rules() {
  std::vector<SchemaPtr> out;
  out.push_back(id_c());
  out.push_back(id_r());
  out.push_back(bot_l());
  out.push_back(constant_generator("bot_r", true));
  out.push_back(constant_generator("top_l", false));
  out.push_back(top_r());
  out.push_back(if_rule("not_l", Side::left, CK::negation, RuleKind::unary, {},
                        "G |- a:P, D / G, a:not P |- D", [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          r.added = {{{}, {at(a, con(b, "P"))}}};
                          return at(a, Concept::negation(con(b, "P")));
                        }));
  out.push_back(if_rule("not_r", Side::right, CK::negation, RuleKind::unary, {},
                        "G, a:P |- D / G |- a:not P, D", [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          r.added = {{{at(a, con(b, "P"))}, {}}};
                          return at(a, Concept::negation(con(b, "P")));
                        }));
  out.push_back(if_rule("or_l", Side::left, CK::disjunction, RuleKind::binary, {},
                        "G, a:P |- D    G, a:Q |- D / G, a:(P or Q) |- D",
                        [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          r.added = {{{at(a, con(b, "P"))}, {}}, {{at(a, con(b, "Q"))}, {}}};
                          return at(a, Concept::disjunction(con(b, "P"), con(b, "Q")));
                        }));
  out.push_back(if_rule("or_r", Side::right, CK::disjunction, RuleKind::unary, {},
                        "G |- a:P, a:Q, D / G |- a:(P or Q), D",
                        [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          r.added = {{{}, {at(a, con(b, "P")), at(a, con(b, "Q"))}}};
                          return at(a, Concept::disjunction(con(b, "P"), con(b, "Q")));
                        }));
  out.push_back(if_rule("and_l", Side::left, CK::conjunction, RuleKind::unary, {},
                        "G, a:P, a:Q |- D / G, a:(P and Q) |- D",
                        [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          r.added = {{{at(a, con(b, "P")), at(a, con(b, "Q"))}, {}}};
                          return at(a, Concept::conjunction(con(b, "P"), con(b, "Q")));
                        }));
  out.push_back(if_rule("and_r", Side::right, CK::conjunction, RuleKind::binary, {},
                        "G |- a:P, D    G |- a:Q, D / G |- a:(P and Q), D",
                        [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          r.added = {{{}, {at(a, con(b, "P"))}}, {{}, {at(a, con(b, "Q"))}}};
                          return at(a, Concept::conjunction(con(b, "P"), con(b, "Q")));
                        }));
  out.push_back(sub_l());
  out.push_back(sub_r());
  out.push_back(if_rule("some_l", Side::left, CK::exists, RuleKind::unary, {"b"},
                        "G, R(a,b), b:P |- D / G, a:some R P |- D   (b fresh)",
                        [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          const Individual& e = ind(b, "b");
                          require_role_kind(role(b, "R"), false, "some_l");
                          r.added = {{{rel(role(b, "R"), a, e), at(e, con(b, "P"))}, {}}};
                          r.eigens = {e};
                          return at(a, Concept::exists(role(b, "R"), con(b, "P")));
                        }));
  out.push_back(successor_rule("some_r", true));
  out.push_back(successor_rule("all_l", false));
  out.push_back(if_rule("all_r", Side::right, CK::forall, RuleKind::unary, {"b"},
                        "G, R(a,b) |- b:P, D / G |- a:all R P, D   (b fresh)",
                        [](const Binding& b, RuleInstance& r) {
                          const Individual& a = ind(b, "a");
                          const Individual& e = ind(b, "b");
                          require_role_kind(role(b, "R"), false, "all_r");
                          r.added = {{{rel(role(b, "R"), a, e)}, {at(e, con(b, "P"))}}};
                          r.eigens = {e};
                          return at(a, Concept::forall(role(b, "R"), con(b, "P")));
                        }));
  return out;
}

}  // namespace dlseq
