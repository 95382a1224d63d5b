#include <algorithm>

#include "rule_kit.hpp"

namespace dlseq {

using namespace kit;
using CK = Concept::Kind;
using FK = Formula::Kind;

namespace {

constexpr std::size_t kSubsetCap = 256;

RuleSchema base(std::string name, RuleKind kind, std::string family, std::string display) {
  RuleSchema s;
  s.name = std::move(name);
  s.kind = kind;
  s.family = std::move(family);
  s.display = std::move(display);
  return s;
}

const std::set<Formula>& zone(const BranchView& v, Side side) {
  return side == Side::left ? v.left : v.right;
}

void put(RuleInstance& r, Side side, const Formula& principal, bool remove) {
  auto& req = side == Side::left ? r.required.left : r.required.right;
  req.push_back(principal);
  if (remove) (side == Side::left ? r.removed.left : r.removed.right).push_back(principal);
}

bool mentions_universal(const Role& r) {
  if (r.is_chain())
    return std::any_of(r.parts().begin(), r.parts().end(),
                       [](const Role& p) { return mentions_universal(p); });
  return r.kind() == Role::Kind::universal;
}

bool mentions_universal(const Concept& c) {
  switch (c.kind()) {
    case CK::negation:
      return mentions_universal(c.first());
    case CK::disjunction:
    case CK::conjunction:
      return mentions_universal(c.first()) || mentions_universal(c.second());
    case CK::exists:
    case CK::forall:
    case CK::at_most:
    case CK::at_least:
      return mentions_universal(c.role()) || mentions_universal(c.first());
    case CK::self:
      return mentions_universal(c.role());
    default:
      return false;
  }
}

bool mentions_universal(const Formula& f) {
  switch (f.kind()) {
    case FK::concept_assertion:
      return mentions_universal(f.concept_of());
    case FK::gci:
      return mentions_universal(f.concept_of()) || mentions_universal(f.rhs());
    case FK::role_assertion:
      return mentions_universal(f.role());
    case FK::cria:
      return std::any_of(f.chain().begin(), f.chain().end(),
                         [](const Role& p) { return mentions_universal(p); });
    default:
      return false;
  }
}

std::vector<Individual> successors(const BranchView& v, const Individual& a, const Role& r) {
  std::vector<Individual> out;
  for (const auto& f : v.left_roles)
    if (f.role() == r && f.first() == a) out.push_back(f.second());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// k-element subsets in lexicographic order, at most kSubsetCap of them.
std::vector<std::vector<Individual>> subsets(const std::vector<Individual>& xs, std::size_t k) {
  std::vector<std::vector<Individual>> out;
  if (k > xs.size()) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (out.size() < kSubsetCap) {
    std::vector<Individual> pick;
    for (auto i : idx) pick.push_back(xs[i]);
    out.push_back(std::move(pick));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == xs.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// ---- role composition and inclusions

SchemaPtr comp_l() {
  auto s = base("comp_l", RuleKind::unary, "compose",
                "G, R'(a,b), r(b,c) |- D / G, R'(a,c) |- D   (R = R';r, b fresh)");
  s.eigen_params = {"b"};
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : v.left_roles)
      if (f.role().is_chain()) out.push_back({{"R", f.role()}, {"a", f.first()}, {"c", f.second()}});
    return out;
  };
  s.instantiate = [](const Binding& b) {
    const Role& r = role(b, "R");
    if (!r.is_chain()) throw RuleError("comp_l: R must be a role chain");
    auto i = start("comp_l", b);
    put(i, Side::left, rel(r, ind(b, "a"), ind(b, "c")), true);
    i.added = {{{rel(r.prefix(), ind(b, "a"), ind(b, "b")), rel(r.last(), ind(b, "b"), ind(b, "c"))},
                {}}};
    i.eigens = {ind(b, "b")};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr comp_r() {
  auto s = base("comp_r", RuleKind::binary, "compose",
                "G |- R'(a,b), R(a,c), D    G |- r(b,c), R(a,c), D / G |- R(a,c), D   (R = R';r)");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : v.right) {
      if (f.kind() != FK::role_assertion || !f.role().is_chain()) continue;
      for (const auto& g : v.left_roles)
        if (g.role() == f.role().last() && g.second() == f.second())
          out.push_back(
              {{"R", f.role()}, {"a", f.first()}, {"b", g.first()}, {"c", f.second()}});
    }
    return out;
  };
  s.instantiate = [](const Binding& b) {
    const Role& r = role(b, "R");
    if (!r.is_chain()) throw RuleError("comp_r: R must be a role chain");
    auto i = start("comp_r", b);
    put(i, Side::right, rel(r, ind(b, "a"), ind(b, "c")), false);
    i.added = {{{}, {rel(r.prefix(), ind(b, "a"), ind(b, "b"))}},
               {{}, {rel(r.last(), ind(b, "b"), ind(b, "c"))}}};
    return i;
  };
  return finish(std::move(s));
}

Role chain_of(const Formula& f) { return Role::chain(f.chain()); }

SchemaPtr cria_l() {
  auto s = base("cria_l", RuleKind::binary, "rias",
                "G, F |- S(a,b), D    G, F, r(a,b) |- D / G, F |- D   (F = S sub r)");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_ef(v, Side::left, FK::cria, [&](const Formula& f) {
      std::set<std::pair<Individual, Individual>> pairs;
      bool first = true;
      for (const auto& part : f.chain()) {
        std::set<std::pair<Individual, Individual>> step;
        for (const auto& g : v.left_roles)
          if (g.role() == part) step.insert({g.first(), g.second()});
        if (first) {
          pairs = std::move(step);
          first = false;
          continue;
        }
        std::set<std::pair<Individual, Individual>> next;
        for (const auto& [x, y] : pairs)
          for (const auto& [y2, z] : step)
            if (y == y2) next.insert({x, z});
        pairs = std::move(next);
      }
      for (const auto& [x, y] : pairs) out.push_back({{"F", f}, {"a", x}, {"b", y}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    const Formula& f = form(b, "F");
    if (f.kind() != FK::cria) throw RuleError("cria_l: F must be a role inclusion");
    auto i = start("cria_l", b);
    put(i, Side::left, f, false);
    const Individual& x = ind(b, "a");
    const Individual& y = ind(b, "b");
    i.added = {{{}, {rel(chain_of(f), x, y)}}, {{rel(Role::named(f.name()), x, y)}, {}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr cria_r() {
  auto s = base("cria_r", RuleKind::unary, "rias",
                "G, S(a,b) |- r(a,b), D / G |- S sub r, D   (a, b fresh)");
  s.eigen_params = {"a", "b"};
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_ef(v, Side::right, FK::cria, [&](const Formula& f) { out.push_back({{"F", f}}); });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    const Formula& f = form(b, "F");
    if (f.kind() != FK::cria) throw RuleError("cria_r: F must be a role inclusion");
    auto i = start("cria_r", b);
    put(i, Side::right, f, true);
    const Individual& x = ind(b, "a");
    const Individual& y = ind(b, "b");
    i.added = {{{rel(chain_of(f), x, y)}, {rel(Role::named(f.name()), x, y)}}};
    i.eigens = {x, y};
    return i;
  };
  return finish(std::move(s));
}

// ---- nominals

SchemaPtr nom_l1() {
  auto s = base("nom_l1", RuleKind::unary, "nominals", "G, a:{b}, a = b |- D / G, a:{b} |- D");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, Side::left, CK::nominal, [&](const Formula& f) {
      out.push_back({{"a", f.first()}, {"b", f.concept_of().individual()}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("nom_l1", b);
    put(i, Side::left, at(ind(b, "a"), Concept::nominal(ind(b, "b"))), false);
    i.added = {{{eq(ind(b, "a"), ind(b, "b"))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr nom_l2() {
  auto s = base("nom_l2", RuleKind::unary, "nominals", "G, b:{b} |- D / G |- D");
  s.generator = true;
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::set<Individual> named;
    for (const auto* z : {&v.left, &v.right})
      for (const auto& f : *z) {
        if (f.is_internal()) {
          auto xs = free_individuals(f.concept_of());
          named.insert(xs.begin(), xs.end());
        } else if (f.kind() == FK::gci) {
          auto xs = free_individuals(f);
          named.insert(xs.begin(), xs.end());
        }
      }
    std::vector<Binding> out;
    for (const auto& b : named) out.push_back({{"b", b}});
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("nom_l2", b);
    i.added = {{{at(ind(b, "b"), Concept::nominal(ind(b, "b")))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr nom_r1() {
  auto s = base("nom_r1", RuleKind::unary, "nominals", "G |- a:{b}, a = b, D / G |- a:{b}, D");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, Side::right, CK::nominal, [&](const Formula& f) {
      out.push_back({{"a", f.first()}, {"b", f.concept_of().individual()}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("nom_r1", b);
    put(i, Side::right, at(ind(b, "a"), Concept::nominal(ind(b, "b"))), false);
    i.added = {{{}, {eq(ind(b, "a"), ind(b, "b"))}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr nom_r2() {
  auto s = base("nom_r2", RuleKind::initial, "nominals", "G |- b:{b}, D");
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, Side::right, CK::nominal, [&](const Formula& f) {
      if (f.first() == f.concept_of().individual()) out.push_back({{"b", f.first()}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("nom_r2", b);
    i.required.right = {at(ind(b, "b"), Concept::nominal(ind(b, "b")))};
    return i;
  };
  return finish(std::move(s));
}

// ---- inverses

/// inv_* flips a named role atom, invinv_* an inverse one; all keep the principal.
SchemaPtr inverse_rule(const std::string& name, Side side, bool from_inverse) {
  std::string principal = from_inverse ? "inv r(a,b)" : "r(a,b)";
  std::string both = principal + (from_inverse ? ", r(b,a)" : ", inv r(b,a)");
  std::string display = side == Side::left ? "G, " + both + " |- D / G, " + principal + " |- D"
                                           : "G |- " + both + ", D / G |- " + principal + ", D";
  auto s = base(name, RuleKind::unary, "inverses", display);
  s.retains_principal = true;
  auto wanted = from_inverse ? Role::Kind::inverse : Role::Kind::named;
  s.enumerate = [side, wanted](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : zone(v, side))
      if (f.kind() == FK::role_assertion && f.role().kind() == wanted)
        out.push_back({{"R", f.role()}, {"a", f.first()}, {"b", f.second()}});
    return out;
  };
  s.instantiate = [name, side, wanted](const Binding& b) {
    const Role& r = role(b, "R");
    if (r.kind() != wanted)
      throw RuleError(name + ": R must be " +
                      (wanted == Role::Kind::named ? "a role name" : "an inverse role"));
    Role flipped = wanted == Role::Kind::named ? Role::inverse(r.name()) : Role::named(r.name());
    auto i = start(name, b);
    put(i, side, rel(r, ind(b, "a"), ind(b, "b")), false);
    Formula g = rel(flipped, ind(b, "b"), ind(b, "a"));
    i.added = {side == Side::left ? SequentChange{{g}, {}} : SequentChange{{}, {g}}};
    return i;
  };
  return finish(std::move(s));
}

// ---- counting

struct CountShape {
  bool at_most;
  bool qualified;
};

Concept count_concept(const Binding& b, CountShape shape) {
  Concept filler = shape.qualified ? con(b, "P") : Concept::top();
  return shape.at_most ? Concept::at_most(num(b, "n"), role(b, "R"), filler)
                       : Concept::at_least(num(b, "n"), role(b, "R"), filler);
}

bool matches(const Concept& c, CountShape shape) {
  if (c.kind() != (shape.at_most ? CK::at_most : CK::at_least)) return false;
  return shape.qualified || c.is_unqualified();
}

Binding count_binding(const Formula& f, CountShape shape) {
  const Concept& c = f.concept_of();
  Binding b{{"a", f.first()}, {"n", c.bound()}, {"R", c.role()}};
  if (shape.qualified) b["P"] = c.first();
  return b;
}

std::string count_name(CountShape shape, Side side) {
  return std::string(shape.at_most ? "atmost" : "atleast") + (shape.qualified ? "" : "u") +
         (side == Side::left ? "_l" : "_r");
}

/// atmost_l and atleast_r: successors b_i of a on the left; one premise per
/// b_i:P on the right (qualified only) and one per b_i = b_j on the left.
SchemaPtr count_split(CountShape shape) {
  Side side = shape.at_most ? Side::left : Side::right;
  std::string name = count_name(shape, side);
  std::string filler = shape.qualified ? " P" : "";
  std::string restr = std::string(shape.at_most ? "atmost" : "atleast") + " n R" + filler;
  std::string display =
      (shape.qualified ? std::string("{G, R(a,b_i) |- b_i:P, D}_i  ") : std::string()) +
      "{G, R(a,b_i), b_i = b_j |- D}_i<j / " +
      (shape.at_most ? "G, a:" + restr + ", R(a,b_0..b_n) |- D"
                     : "G, R(a,b_1..b_n) |- a:" + restr + ", D");
  auto s = base(name, RuleKind::nary, shape.qualified ? "qualifiedCounting" : "unqualifiedCounting",
                display);
  s.retains_principal = true;
  s.can_close = !shape.at_most || !shape.qualified;
  std::size_t extra = shape.at_most ? 1 : 0;
  s.enumerate = [shape, side, extra](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : zone(v, side)) {
      if (!f.is_internal() || !matches(f.concept_of(), shape)) continue;
      const Concept& c = f.concept_of();
      auto succ = successors(v, f.first(), c.role());
      for (auto& pick : subsets(succ, c.bound() + extra)) {
        Binding b = count_binding(f, shape);
        b["bs"] = std::move(pick);
        out.push_back(std::move(b));
      }
    }
    return out;
  };
  s.instantiate = [shape, side, name, extra](const Binding& b) {
    const auto& bs = inds(b, "bs");
    if (bs.size() != num(b, "n") + extra)
      throw RuleError(name + ": expected " + std::to_string(num(b, "n") + extra) +
                      " successors, got " + std::to_string(bs.size()));
    require_role_kind(role(b, "R"), false, name);
    auto i = start(name, b);
    const Individual& a = ind(b, "a");
    put(i, side, at(a, count_concept(b, shape)), false);
    for (const auto& x : bs) i.required.left.push_back(rel(role(b, "R"), a, x));
    if (shape.qualified)
      for (const auto& x : bs) i.added.push_back({{}, {at(x, con(b, "P"))}});
    for (std::size_t p = 0; p < bs.size(); ++p)
      for (std::size_t q = p + 1; q < bs.size(); ++q) i.added.push_back({{eq(bs[p], bs[q])}, {}});
    return i;
  };
  return finish(std::move(s));
}

/// atmost_r and atleast_l: fresh successors, pairwise distinct.
SchemaPtr count_witness(CountShape shape) {
  Side side = shape.at_most ? Side::right : Side::left;
  std::string name = count_name(shape, side);
  std::string filler = shape.qualified ? " P" : "";
  std::string restr = std::string(shape.at_most ? "atmost" : "atleast") + " n R" + filler;
  std::string body = std::string("R(a,b_i)") + (shape.qualified ? ", b_i:P" : "");
  std::string display = shape.at_most
                            ? "G, " + body + " |- {b_i = b_j}, D / G |- a:" + restr + ", D"
                            : "G, " + body + " |- {b_i = b_j}, D / G, a:" + restr + " |- D";
  auto s = base(name, RuleKind::unary,
                shape.qualified ? "qualifiedCounting" : "unqualifiedCounting", display + "   (b_i fresh)");
  s.eigen_params = {"bs"};
  std::size_t extra = shape.at_most ? 1 : 0;
  s.eigen_width = [extra](const Binding& b, const std::string&) -> std::size_t {
    return num(b, "n") + extra;
  };
  s.enumerate = [shape, side](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : zone(v, side))
      if (f.is_internal() && matches(f.concept_of(), shape)) out.push_back(count_binding(f, shape));
    return out;
  };
  s.instantiate = [shape, side, name, extra](const Binding& b) {
    const auto& bs = inds(b, "bs");
    if (bs.size() != num(b, "n") + extra)
      throw RuleError(name + ": expected " + std::to_string(num(b, "n") + extra) +
                      " fresh individuals, got " + std::to_string(bs.size()));
    require_role_kind(role(b, "R"), false, name);
    auto i = start(name, b);
    const Individual& a = ind(b, "a");
    put(i, side, at(a, count_concept(b, shape)), true);
    SequentChange add;
    for (const auto& x : bs) {
      add.left.push_back(rel(role(b, "R"), a, x));
      if (shape.qualified) add.left.push_back(at(x, con(b, "P")));
    }
    for (std::size_t p = 0; p < bs.size(); ++p)
      for (std::size_t q = p + 1; q < bs.size(); ++q) add.right.push_back(eq(bs[p], bs[q]));
    i.added = {std::move(add)};
    i.eigens = bs;
    return i;
  };
  return finish(std::move(s));
}

// ---- equality

SchemaPtr eq_l() {
  auto s = base("eq_l", RuleKind::unary, "equality", "G, a = a |- D / G |- D");
  s.generator = true;
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& a : v.individuals) out.push_back({{"a", a}});
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("eq_l", b);
    i.added = {{{eq(ind(b, "a"), ind(b, "a"))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr eq_r() {
  auto s = base("eq_r", RuleKind::initial, "equality", "G |- a = a, D");
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_ef(v, Side::right, FK::equality, [&](const Formula& f) {
      if (f.first() == f.second()) out.push_back({{"a", f.first()}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("eq_r", b);
    i.required.right = {eq(ind(b, "a"), ind(b, "a"))};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr rep1() {
  auto s = base("rep1", RuleKind::unary, "equality",
                "G, a = b, a:P, b:P |- D / G, a = b, a:P |- D");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& e : v.left_equalities) {
      if (e.first() == e.second()) continue;
      each_if(v, Side::left, CK::atomic, [&](const Formula& f) {
        if (f.first() == e.first())
          out.push_back({{"a", e.first()}, {"b", e.second()}, {"P", f.concept_of()}});
      });
    }
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("rep1", b);
    i.required.left = {eq(ind(b, "a"), ind(b, "b")), at(ind(b, "a"), con(b, "P"))};
    i.added = {{{at(ind(b, "b"), con(b, "P"))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

/// Replaces a by b in the argument positions selected by `pos`
/// (1 first, 2 second, 3 both).
SchemaPtr rep2() {
  auto s = base("rep2", RuleKind::unary, "equality",
                "G, a = b, F, F[b/a] |- D / G, a = b, F |- D   (F a role assertion)");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& e : v.left_equalities) {
      if (e.first() == e.second()) continue;
      for (const auto& f : v.left_roles) {
        if (f.role().is_chain()) continue;
        bool x = f.first() == e.first(), y = f.second() == e.first();
        for (unsigned pos : {1u, 2u, 3u}) {
          if (((pos & 1) && !x) || ((pos & 2) && !y)) continue;
          out.push_back({{"a", e.first()}, {"b", e.second()}, {"F", f}, {"pos", pos}});
        }
      }
    }
    return out;
  };
  s.instantiate = [](const Binding& b) {
    const Formula& f = form(b, "F");
    const Individual& a = ind(b, "a");
    const Individual& c = ind(b, "b");
    unsigned pos = num(b, "pos");
    if (f.kind() != FK::role_assertion || f.role().is_chain())
      throw RuleError("rep2: F must be a role assertion over a role name, inverse or U");
    if (pos < 1 || pos > 3) throw RuleError("rep2: pos must be 1, 2 or 3");
    if (((pos & 1) && f.first() != a) || ((pos & 2) && f.second() != a))
      throw RuleError("rep2: " + a.name() + " does not occur at the selected positions of " +
                      f.text());
    auto i = start("rep2", b);
    i.required.left = {eq(a, c), f};
    Formula g = rel(f.role(), (pos & 1) ? c : f.first(), (pos & 2) ? c : f.second());
    i.added = {{{g}, {}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr euc() {
  auto s = base("euc", RuleKind::unary, "equality",
                "G, a = b, a = c, b = c |- D / G, a = b, a = c |- D");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& e1 : v.left_equalities)
      for (const auto& e2 : v.left_equalities)
        if (e1.first() == e2.first() && e1.second() != e2.second())
          out.push_back({{"a", e1.first()}, {"b", e1.second()}, {"c", e2.second()}});
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("euc", b);
    i.required.left = {eq(ind(b, "a"), ind(b, "b")), eq(ind(b, "a"), ind(b, "c"))};
    i.added = {{{eq(ind(b, "b"), ind(b, "c"))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

// ---- inequality and negated roles

/// Moves a negated atom across the turnstile as its positive form.
SchemaPtr flip_rule(const std::string& name, const std::string& family, Side side, FK kind) {
  std::string pos = kind == FK::inequality ? "a = b" : "r(a,b)";
  std::string neg = kind == FK::inequality ? "a != b" : "not r(a,b)";
  std::string display = side == Side::left ? "G |- " + pos + ", D / G, " + neg + " |- D"
                                           : "G, " + pos + " |- D / G |- " + neg + ", D";
  auto s = base(name, RuleKind::unary, family, display);
  s.enumerate = [side, kind](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : zone(v, side)) {
      if (f.kind() != kind) continue;
      Binding b{{"a", f.first()}, {"b", f.second()}};
      if (kind == FK::negated_role) b["R"] = f.role();
      out.push_back(std::move(b));
    }
    return out;
  };
  s.instantiate = [name, side, kind](const Binding& b) {
    const Individual& x = ind(b, "a");
    const Individual& y = ind(b, "b");
    Formula principal = Formula::inequality(x, y);
    Formula positive = eq(x, y);
    if (kind == FK::negated_role) {
      const Role& r = role(b, "R");
      if (r.kind() != Role::Kind::named) throw RuleError(name + ": R must be a role name");
      principal = Formula::negated_role(r.name(), x, y);
      positive = rel(r, x, y);
    }
    auto i = start(name, b);
    put(i, side, principal, true);
    i.added = {side == Side::left ? SequentChange{{}, {positive}} : SequentChange{{positive}, {}}};
    return i;
  };
  return finish(std::move(s));
}

// ---- universal role and self

SchemaPtr univ_l() {
  auto s = base("univ_l", RuleKind::unary, "universalRole", "G, U(a,b) |- D / G |- D");
  s.generator = true;
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    bool used = false;
    for (const auto* z : {&v.left, &v.right})
      for (const auto& f : *z) used = used || mentions_universal(f);
    if (!used) return out;
    for (const auto& a : v.individuals)
      for (const auto& b : v.individuals) out.push_back({{"a", a}, {"b", b}});
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("univ_l", b);
    i.added = {{{rel(Role::universal(), ind(b, "a"), ind(b, "b"))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr univ_r() {
  auto s = base("univ_r", RuleKind::initial, "universalRole", "G |- U(a,b), D");
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    for (const auto& f : v.right)
      if (f.kind() == FK::role_assertion && f.role().kind() == Role::Kind::universal)
        out.push_back({{"a", f.first()}, {"b", f.second()}});
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("univ_r", b);
    i.required.right = {rel(Role::universal(), ind(b, "a"), ind(b, "b"))};
    return i;
  };
  return finish(std::move(s));
}

SchemaPtr self_rule(const std::string& name, Side side) {
  std::string display = side == Side::left ? "G, r(a,a) |- D / G, a:self r |- D"
                                           : "G |- r(a,a), D / G |- a:self r, D";
  auto s = base(name, RuleKind::unary, "selfConcept", display);
  s.enumerate = [side](const BranchView& v) {
    std::vector<Binding> out;
    each_if(v, side, CK::self, [&](const Formula& f) {
      out.push_back({{"a", f.first()}, {"R", f.concept_of().role()}});
    });
    return out;
  };
  s.instantiate = [name, side](const Binding& b) {
    require_role_kind(role(b, "R"), false, name);
    const Individual& a = ind(b, "a");
    auto i = start(name, b);
    put(i, side, at(a, Concept::self(role(b, "R"))), true);
    Formula g = rel(role(b, "R"), a, a);
    i.added = {side == Side::left ? SequentChange{{g}, {}} : SequentChange{{}, {g}}};
    return i;
  };
  return finish(std::move(s));
}

// ---- GCI case split

SchemaPtr sub_split() {
  auto s = base("sub_split", RuleKind::binary, "gciSplit",
                "G, P sub Q |- a:P, D    G, P sub Q, a:Q |- D / G, P sub Q |- D");
  s.retains_principal = true;
  s.enumerate = [](const BranchView& v) {
    std::vector<Binding> out;
    each_ef(v, Side::left, FK::gci, [&](const Formula& g) {
      for (const auto& a : v.individuals)
        out.push_back({{"P", g.concept_of()}, {"Q", g.rhs()}, {"a", a}});
    });
    return out;
  };
  s.instantiate = [](const Binding& b) {
    auto i = start("sub_split", b);
    i.required.left = {Formula::gci(con(b, "P"), con(b, "Q"))};
    const Individual& a = ind(b, "a");
    i.added = {{{}, {at(a, con(b, "P"))}}, {{at(a, con(b, "Q"))}, {}}};
    return i;
  };
  return finish(std::move(s));
}

}  // namespace

std::vector<SchemaPtr> extension_rules(const LanguageProfile& profile) {
  using F = Feature;
  std::vector<SchemaPtr> out;
  if (profile.has(F::compose)) {
    out.push_back(comp_l());
    out.push_back(comp_r());
  }
  if (profile.has(F::rias) || profile.has(F::crias)) {
    out.push_back(cria_l());
    out.push_back(cria_r());
  }
  if (profile.has(F::nominals)) {
    out.push_back(nom_l1());
    out.push_back(nom_l2());
    out.push_back(nom_r1());
    out.push_back(nom_r2());
  }
  if (profile.has(F::inverses)) {
    out.push_back(inverse_rule("inv_l", Side::left, false));
    out.push_back(inverse_rule("invinv_l", Side::left, true));
    out.push_back(inverse_rule("inv_r", Side::right, false));
    out.push_back(inverse_rule("invinv_r", Side::right, true));
  }
  if (profile.has(F::qualifiedCounting)) {
    out.push_back(count_split({true, true}));
    out.push_back(count_witness({true, true}));
    out.push_back(count_witness({false, true}));
    out.push_back(count_split({false, true}));
  }
  if (profile.has(F::unqualifiedCounting)) {
    out.push_back(count_split({true, false}));
    out.push_back(count_witness({true, false}));
    out.push_back(count_witness({false, false}));
    out.push_back(count_split({false, false}));
  }
  if (profile.has(F::equality)) {
    out.push_back(eq_l());
    out.push_back(eq_r());
    out.push_back(rep1());
    out.push_back(rep2());
    out.push_back(euc());
  }
  if (profile.has(F::inequality)) {
    out.push_back(flip_rule("neq_l", "inequality", Side::left, FK::inequality));
    out.push_back(flip_rule("neq_r", "inequality", Side::right, FK::inequality));
  }
  if (profile.has(F::negatedRoles)) {
    out.push_back(flip_rule("negrole_l", "negatedRoles", Side::left, FK::negated_role));
    out.push_back(flip_rule("negrole_r", "negatedRoles", Side::right, FK::negated_role));
  }
  if (profile.has(F::universalRole)) {
    out.push_back(univ_l());
    out.push_back(univ_r());
  }
  if (profile.has(F::selfConcept)) {
    out.push_back(self_rule("self_l", Side::left));
    out.push_back(self_rule("self_r", Side::right));
  }
  if (profile.has(F::gciSplit)) out.push_back(sub_split());
  return out;
}

}  // namespace dlseq
