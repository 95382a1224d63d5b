#include "dlseq/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dlseq {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

ProfileViolation::ProfileViolation(std::string construct, std::string missing_flag)
    : std::runtime_error("profile violation: " + construct + " requires " + missing_flag),
      construct_(std::move(construct)),
      flag_(std::move(missing_flag)) {}

Sequent KnowledgeBase::as_antecedent() const {
  Sequent s;
  s.add_all(Side::left, tbox);
  s.add_all(Side::left, abox);
  return s;
}

namespace {

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "top", "bot",  "not",   "or",    "and", "some", "all",    "atmost", "atleast", "self",
      "inv", "sub",  "U",     "Rel",   "def", "forall", "true", "false",  "tbox",    "abox",
      "roles"};
  return kw;
}

const std::set<std::string>& sugar_names() {
  static const std::set<std::string> s = {"Trans", "Refl", "Irr", "Asy", "Disj", "Funct"};
  return s;
}

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind;
  std::string text;
  std::size_t line, column;
};

std::vector<Token> tokenize(const std::string& text, std::size_t first_line = 1) {
  std::vector<Token> out;
  std::size_t line = first_line, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, std::size_t c) {
    out.push_back({k, std::move(t), line, c});
  };
  while (i < text.size()) {
    char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      push(Token::Kind::ident, text.substr(i, j - i), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Kind::number, text.substr(i, j - i), start_col);
      col += j - i;
      i = j;
      continue;
    }
    auto two = text.substr(i, 2);
    if (two == "|-" || two == "!=" || two == "->") {
      push(Token::Kind::punct, two, start_col);
      i += 2;
      col += 2;
      continue;
    }
    if (std::string("(){}[],;:=.&|").find(ch) != std::string::npos) {
      push(Token::Kind::punct, std::string(1, ch), start_col);
      ++i;
      ++col;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + ch + "'", line, start_col);
  }
  out.push_back({Token::Kind::end, "", line, col});
  return out;
}

bool looks_eigen(const std::string& name) { return Individual(name).is_eigen(); }

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& opts, const DefinitionRegistry& defs)
      : toks_(std::move(tokens)), opts_(opts), defs_(defs), roles_(opts.role_names) {
    prescan_roles();
  }

  void add_role_hints(const std::set<std::string>& names) {
    roles_.insert(names.begin(), names.end());
  }

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Token::Kind::end; }
  bool is_punct(const std::string& p, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::punct && peek(k).text == p;
  }
  bool is_word(const std::string& w, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::ident && peek(k).text == w;
  }

  [[noreturn]] void fail(const std::string& msg, std::size_t k = 0) const {
    const Token& t = peek(k);
    std::string found = t.kind == Token::Kind::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + " (found " + found + ")", t.line, t.column);
  }

  void expect_punct(const std::string& p) {
    if (!is_punct(p)) fail("expected '" + p + "'");
    ++pos_;
  }
  void expect_word(const std::string& w) {
    if (!is_word(w)) fail("expected '" + w + "'");
    ++pos_;
  }
  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  std::string name(const char* what) {
    if (peek().kind != Token::Kind::ident) fail(std::string("expected ") + what);
    if (keywords().count(peek().text)) fail(std::string("reserved word used as ") + what);
    return toks_[pos_++].text;
  }

  Individual individual() {
    if (peek().kind != Token::Kind::ident) fail("expected an individual");
    const Token& t = peek();
    if (looks_eigen(t.text) && !opts_.allow_eigen)
      fail("eigen individual names (_eN) are reserved");
    ++pos_;
    return Individual(t.text);
  }

  unsigned number() {
    if (peek().kind != Token::Kind::number) fail("expected a number");
    const Token& t = toks_[pos_++];
    try {
      return static_cast<unsigned>(std::stoul(t.text));
    } catch (const std::exception&) {
      throw ParseError("number out of range", t.line, t.column);
    }
  }

  Role role_atom() {
    if (is_punct("(")) {
      ++pos_;
      Role r = role();
      expect_punct(")");
      return r;
    }
    if (is_word("inv")) {
      ++pos_;
      if (is_word("U")) fail("the universal role cannot be inverted");
      if (is_word("inv")) fail("an inverse role cannot be inverted");
      return Role::inverse(name("a role name"));
    }
    if (is_word("U")) {
      ++pos_;
      return Role::universal();
    }
    return Role::named(name("a role"));
  }

  Role role() {
    std::vector<Role> parts{role_atom()};
    while (is_punct(";")) {
      ++pos_;
      parts.push_back(role_atom());
    }
    for (const auto& p : parts) {
      if (parts.size() > 1 && p.kind() == Role::Kind::universal)
        fail("the universal role cannot occur in a chain");
    }
    return Role::chain(std::move(parts));
  }

  Role concept_role() {
    const Token& t = peek();
    Role r = role();
    if (r.is_chain()) throw ParseError("role chains cannot occur inside concepts", t.line, t.column);
    return r;
  }

  Concept concept_expr() {
    if (is_word("top")) {
      ++pos_;
      return Concept::top();
    }
    if (is_word("bot")) {
      ++pos_;
      return Concept::bottom();
    }
    if (is_word("not")) {
      ++pos_;
      return Concept::negation(concept_expr());
    }
    if (is_punct("(")) {
      ++pos_;
      Concept lhs = concept_expr();
      if (is_word("or") || is_word("and")) {
        bool disj = is_word("or");
        ++pos_;
        Concept rhs = concept_expr();
        expect_punct(")");
        return disj ? Concept::disjunction(lhs, rhs) : Concept::conjunction(lhs, rhs);
      }
      expect_punct(")");
      return lhs;
    }
    if (is_word("some") || is_word("all")) {
      bool ex = is_word("some");
      ++pos_;
      Role r = concept_role();
      Concept f = concept_expr();
      return ex ? Concept::exists(r, f) : Concept::forall(r, f);
    }
    if (is_punct("{")) {
      ++pos_;
      Individual a = individual();
      expect_punct("}");
      return Concept::nominal(a);
    }
    if (is_word("atmost") || is_word("atleast")) {
      bool most = is_word("atmost");
      ++pos_;
      unsigned n = number();
      Role r = concept_role();
      Concept f = concept_expr();
      return most ? Concept::at_most(n, r, f) : Concept::at_least(n, r, f);
    }
    if (is_word("self")) {
      ++pos_;
      return Concept::self(concept_role());
    }
    return Concept::atomic(name("a concept"));
  }

  bool is_relation_name(const std::string& n) const {
    return sugar_names().count(n) || defs_.contains(n);
  }

  bool formula_boundary(std::size_t k) const {
    return peek(k).kind == Token::Kind::end || is_punct(",", k) || is_punct("|-", k);
  }

  std::vector<std::string> role_names_list() {
    std::vector<std::string> out;
    expect_punct("(");
    if (!is_punct(")")) {
      out.push_back(name("a role"));
      while (is_punct(",")) {
        ++pos_;
        out.push_back(name("a role"));
      }
    }
    expect_punct(")");
    return out;
  }

  Formula rra(const std::string& rel) {
    auto args = role_names_list();
    if (defs_.contains(rel) && defs_.at(rel).roles.size() != args.size())
      fail(rel + " expects " + std::to_string(defs_.at(rel).roles.size()) + " roles");
    return Formula::rra(rel, std::move(args));
  }

  Formula formula() {
    const Token start = peek();
    if (peek().kind == Token::Kind::ident && is_punct(":", 1)) {
      Individual a = individual();
      ++pos_;
      return Formula::assertion(a, concept_expr());
    }
    if (peek().kind == Token::Kind::ident && (is_punct("=", 1) || is_punct("!=", 1))) {
      Individual a = individual();
      bool eq = is_punct("=");
      ++pos_;
      Individual b = individual();
      return eq ? Formula::equality(a, b) : Formula::inequality(a, b);
    }
    if (is_word("Rel") && is_punct("[", 1)) {
      pos_ += 2;
      std::string rel = name("a relation name");
      expect_punct("]");
      return rra(rel);
    }
    if (peek().kind == Token::Kind::ident && is_relation_name(peek().text) && is_punct("(", 1)) {
      std::string rel = toks_[pos_++].text;
      return rra(rel);
    }
    if (is_word("not") && peek(1).kind == Token::Kind::ident && is_punct("(", 2)) {
      ++pos_;
      std::string r = name("a role");
      expect_punct("(");
      Individual a = individual();
      expect_punct(",");
      Individual b = individual();
      expect_punct(")");
      return Formula::negated_role(r, a, b);
    }
    // role assertion or role inclusion, if a role expression parses here
    std::size_t save = pos_;
    try {
      Role r = role();
      if (is_punct("(") && peek(1).kind == Token::Kind::ident && is_punct(",", 2)) {
        ++pos_;
        Individual a = individual();
        expect_punct(",");
        Individual b = individual();
        expect_punct(")");
        return Formula::role_assertion(r, a, b);
      }
      if (is_word("sub") && peek(1).kind == Token::Kind::ident && formula_boundary(2) &&
          !keywords().count(peek(1).text)) {
        std::string target = peek(1).text;
        bool plain = r.kind() == Role::Kind::named;
        if (!plain || roles_.count(r.name()) || roles_.count(target)) {
          pos_ += 2;
          std::vector<Role> chain = r.is_chain() ? r.parts() : std::vector<Role>{r};
          return Formula::cria(std::move(chain), target);
        }
      }
    } catch (const ParseError&) {
    } catch (const SyntaxError&) {
    }
    pos_ = save;
    Concept lhs = concept_expr();
    if (!is_word("sub")) {
      throw ParseError("expected a formula", start.line, start.column);
    }
    ++pos_;
    Concept rhs = concept_expr();
    return Formula::gci(lhs, rhs);
  }

  std::vector<Formula> formula_list() {
    std::vector<Formula> out;
    if (at_end() || is_punct("|-")) return out;
    out.push_back(formula());
    while (is_punct(",")) {
      ++pos_;
      out.push_back(formula());
    }
    return out;
  }

  Sequent sequent() {
    Sequent s;
    s.add_all(Side::left, formula_list());
    expect_punct("|-");
    s.add_all(Side::right, formula_list());
    expect_end();
    return s;
  }

  std::size_t pos() const { return pos_; }

 private:
  void prescan_roles() {
    for (std::size_t i = 0; i + 1 < toks_.size(); ++i) {
      const Token& t = toks_[i];
      const Token& n = toks_[i + 1];
      auto ident = [](const Token& x) {
        return x.kind == Token::Kind::ident && !keywords().count(x.text);
      };
      if (t.kind == Token::Kind::ident &&
          (t.text == "some" || t.text == "all" || t.text == "self" || t.text == "inv") &&
          ident(n))
        roles_.insert(n.text);
      if (t.kind == Token::Kind::number && ident(n) && i > 0 &&
          (toks_[i - 1].text == "atmost" || toks_[i - 1].text == "atleast"))
        roles_.insert(n.text);
      if (t.kind == Token::Kind::punct && t.text == ";") {
        if (ident(n)) roles_.insert(n.text);
        if (i > 0 && ident(toks_[i - 1])) roles_.insert(toks_[i - 1].text);
      }
      if (ident(t) && n.kind == Token::Kind::punct && n.text == "(" && i + 3 < toks_.size() &&
          toks_[i + 2].kind == Token::Kind::ident && toks_[i + 3].text == "," &&
          !is_relation_name(t.text))
        roles_.insert(t.text);
      if (ident(t) && is_relation_name(t.text) && n.text == "(") {
        for (std::size_t j = i + 2; j < toks_.size() && toks_[j].text != ")"; ++j)
          if (ident(toks_[j])) roles_.insert(toks_[j].text);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ParseOptions& opts_;
  const DefinitionRegistry& defs_;
  std::set<std::string> roles_;
};

const DefinitionRegistry& registry_of(const ParseOptions& opts) {
  static const DefinitionRegistry builtins;
  return opts.definitions ? *opts.definitions : builtins;
}

template <typename T, typename F>
T parse_whole(const std::string& text, const ParseOptions& opts, F&& body) {
  Parser p(tokenize(text), opts, registry_of(opts));
  try {
    T out = body(p);
    p.expect_end();
    return out;
  } catch (const SyntaxError& e) {
    throw ParseError(e.what(), p.peek().line, p.peek().column);
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

void check_role(const Role& r, const LanguageProfile& p, const std::string& where) {
  switch (r.kind()) {
    case Role::Kind::inverse:
      if (!p.has(Feature::inverses)) throw ProfileViolation("inverse role in " + where, "inverses");
      break;
    case Role::Kind::universal:
      if (!p.has(Feature::universalRole))
        throw ProfileViolation("universal role in " + where, "universalRole");
      break;
    case Role::Kind::chain:
      if (!p.has(Feature::compose))
        throw ProfileViolation("role composition in " + where, "compose");
      for (const auto& part : r.parts()) check_role(part, p, where);
      break;
    case Role::Kind::named:
      break;
  }
}

void check_concept(const Concept& c, const LanguageProfile& p, const std::string& where) {
  using K = Concept::Kind;
  switch (c.kind()) {
    case K::nominal:
      if (!p.has(Feature::nominals)) throw ProfileViolation("nominal in " + where, "nominals");
      break;
    case K::self:
      if (!p.has(Feature::selfConcept))
        throw ProfileViolation("self concept in " + where, "selfConcept");
      check_role(c.role(), p, where);
      break;
    case K::at_most:
    case K::at_least:
      if (c.is_unqualified()) {
        if (!p.has(Feature::unqualifiedCounting) && !p.has(Feature::qualifiedCounting))
          throw ProfileViolation("unqualified number restriction in " + where,
                                 "unqualifiedCounting");
      } else if (!p.has(Feature::qualifiedCounting)) {
        throw ProfileViolation("qualified number restriction in " + where, "qualifiedCounting");
      }
      if (c.bound() > p.counting_ceiling)
        throw ProfileViolation("counting bound " + std::to_string(c.bound()) + " in " + where,
                               "a counting ceiling of at least " + std::to_string(c.bound()));
      check_role(c.role(), p, where);
      check_concept(c.first(), p, where);
      break;
    case K::exists:
    case K::forall:
      check_role(c.role(), p, where);
      check_concept(c.first(), p, where);
      break;
    case K::negation:
      check_concept(c.first(), p, where);
      break;
    case K::disjunction:
    case K::conjunction:
      check_concept(c.first(), p, where);
      check_concept(c.second(), p, where);
      break;
    default:
      break;
  }
}

}  // namespace

void check_profile(const Formula& f, const LanguageProfile& p, const DefinitionRegistry& defs) {
  using K = Formula::Kind;
  const std::string where = f.text();
  switch (f.kind()) {
    case K::concept_assertion:
      check_concept(f.concept_of(), p, where);
      break;
    case K::gci:
      check_concept(f.concept_of(), p, where);
      check_concept(f.rhs(), p, where);
      break;
    case K::role_assertion:
      check_role(f.role(), p, where);
      break;
    case K::negated_role:
      if (!p.has(Feature::negatedRoles))
        throw ProfileViolation("negated role assertion " + where, "negatedRoles");
      break;
    case K::cria: {
      const auto& chain = f.chain();
      bool transitive_shape = chain.size() == 2 && chain[0] == Role::named(f.name()) &&
                              chain[1] == Role::named(f.name());
      if (chain.size() == 1) {
        if (!p.has(Feature::rias) && !p.has(Feature::crias))
          throw ProfileViolation("role inclusion " + where, "rias");
      } else if (!p.has(Feature::crias) && !(transitive_shape && p.has(Feature::compose))) {
        throw ProfileViolation("complex role inclusion " + where, "crias");
      }
      for (const auto& r : chain) check_role(r, p, where);
      break;
    }
    case K::rra:
      if (!defs.contains(f.name()))
        throw ProfileViolation("relation " + where + " without a definition", "ddr " + f.name());
      if (!p.ddr_names.count(f.name()))
        throw ProfileViolation("relation " + where, "ddr " + f.name());
      break;
    case K::equality:
      if (!p.has(Feature::equality)) throw ProfileViolation("equality " + where, "equality");
      break;
    case K::inequality:
      if (!p.has(Feature::inequality)) throw ProfileViolation("inequality " + where, "inequality");
      break;
  }
}

void check_profile(const Sequent& s, const LanguageProfile& p, const DefinitionRegistry& defs) {
  for (const auto& f : s.side(Side::left)) check_profile(f, p, defs);
  for (const auto& f : s.side(Side::right)) check_profile(f, p, defs);
}

Role parse_role(const std::string& text, const ParseOptions& opts) {
  return parse_whole<Role>(text, opts, [](Parser& p) { return p.role(); });
}

Concept parse_concept(const std::string& text, const ParseOptions& opts) {
  Concept c = parse_whole<Concept>(text, opts, [](Parser& p) { return p.concept_expr(); });
  if (opts.check_profile) check_concept(c, opts.profile, c.text());
  return c;
}

Formula parse_formula(const std::string& text, const ParseOptions& opts) {
  Formula f = parse_whole<Formula>(text, opts, [](Parser& p) { return p.formula(); });
  if (opts.check_profile) check_profile(f, opts.profile, registry_of(opts));
  return f;
}

Sequent parse_sequent(const std::string& text, const ParseOptions& opts) {
  Sequent s = parse_whole<Sequent>(text, opts, [](Parser& p) { return p.sequent(); });
  if (opts.check_profile) check_profile(s, opts.profile, registry_of(opts));
  return s;
}

KnowledgeBase parse_kb(const std::string& text, const ParseOptions& opts) {
  KnowledgeBase kb;
  auto lines = split_lines(text);
  ParseOptions local = opts;
  std::set<std::string> hints = opts.role_names;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    std::string head = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    if (head == "roles") {
      std::istringstream in(line.substr(colon + 1));
      std::string r;
      while (std::getline(in, r, ',')) {
        r = trim(r);
        if (!r.empty()) hints.insert(r);
      }
    }
  }
  // collect roles used anywhere in the file
  {
    std::string body;
    for (const auto& raw : lines) {
      std::string line = trim(raw);
      if (line.empty() || line[0] == '#') continue;
      auto colon = line.find(':');
      if (colon != std::string::npos) body += line.substr(colon + 1) + " , ";
    }
    try {
      auto toks = tokenize(body);
      for (std::size_t i = 0; i + 1 < toks.size(); ++i) {
        const auto& t = toks[i];
        if (t.kind != Token::Kind::ident) continue;
        const auto& n = toks[i + 1];
        bool role_pos = (t.text == "some" || t.text == "all" || t.text == "self" ||
                         t.text == "inv") && n.kind == Token::Kind::ident;
        if (role_pos) hints.insert(n.text);
        if (n.text == "(" && i + 3 < toks.size() && toks[i + 3].text == "," &&
            !keywords().count(t.text))
          hints.insert(t.text);
        if (n.text == ";") hints.insert(t.text);
        if (i > 0 && toks[i - 1].text == ";") hints.insert(t.text);
      }
    } catch (const ParseError&) {
    }
  }
  local.role_names = hints;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    auto colon = line.find(':');
    std::string head = colon == std::string::npos ? "" : trim(line.substr(0, colon));
    if (head == "roles") continue;
    if (head != "tbox" && head != "abox")
      throw ParseError("expected 'tbox:', 'abox:' or 'roles:'", i + 1, 1);
    std::string rest = line.substr(colon + 1);
    Formula f = [&] {
      try {
        return parse_formula(rest, local);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), i + 1, e.column() + colon + 1);
      }
    }();
    if (head == "tbox") {
      if (f.is_internal()) throw ParseError("tbox lines hold external formulae", i + 1, 1);
      kb.tbox.push_back(f);
    } else {
      using K = Formula::Kind;
      if (f.kind() == K::gci || f.kind() == K::cria || f.kind() == K::rra)
        throw ParseError("abox lines hold assertions", i + 1, 1);
      kb.abox.push_back(f);
    }
  }
  return kb;
}

std::vector<DescriptiveDefinition> parse_definitions(const std::string& text) {
  std::vector<DescriptiveDefinition> out;
  auto lines = split_lines(text);
  ParseOptions opts;
  opts.check_profile = false;
  DefinitionRegistry none = DefinitionRegistry::empty();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    Parser p(tokenize(line, i + 1), opts, none);
    DescriptiveDefinition d;
    p.expect_word("def");
    if (p.peek().kind != Token::Kind::ident) p.fail("expected a relation name");
    d.name = p.peek().text;
    p.expect_word(d.name);
    d.roles = p.role_names_list();
    p.expect_punct(":");
    p.expect_word("forall");
    while (p.peek().kind == Token::Kind::ident) d.vars.push_back(p.name("a variable"));
    p.expect_punct(".");
    auto atom = [&]() {
      DefinitionAtom a;
      std::string first = p.name("a role or variable");
      if (p.is_punct("=")) {
        p.expect_punct("=");
        a.kind = DefinitionAtom::Kind::equality;
        a.x = first;
        a.y = p.name("a variable");
      } else {
        a.kind = DefinitionAtom::Kind::role;
        a.role = first;
        p.expect_punct("(");
        a.x = p.name("a variable");
        p.expect_punct(",");
        a.y = p.name("a variable");
        p.expect_punct(")");
      }
      return a;
    };
    if (p.is_word("true")) {
      p.expect_word("true");
    } else {
      d.antecedent.push_back(atom());
      while (p.is_punct("&")) {
        p.expect_punct("&");
        d.antecedent.push_back(atom());
      }
    }
    p.expect_punct("->");
    if (p.is_word("false")) {
      p.expect_word("false");
    } else {
      d.consequent.push_back(atom());
      while (p.is_punct("|")) {
        p.expect_punct("|");
        d.consequent.push_back(atom());
      }
    }
    p.expect_end();
    try {
      d.validate();
    } catch (const DefinitionError& e) {
      throw ParseError(e.what(), i + 1, 1);
    }
    out.push_back(std::move(d));
  }
  return out;
}

LanguageProfile parse_profile(const std::string& text) {
  LanguageProfile p;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    std::string word, arg, extra;
    in >> word >> arg >> extra;
    if (!extra.empty()) throw ParseError("unexpected '" + extra + "'", i + 1, 1);
    if (word == "ddr") {
      if (arg.empty()) throw ParseError("ddr needs a definition name", i + 1, 1);
      p.ddr_names.insert(arg);
    } else if (word == "countingCeiling") {
      try {
        p.counting_ceiling = static_cast<unsigned>(std::stoul(arg));
      } catch (const std::exception&) {
        throw ParseError("countingCeiling needs a number", i + 1, 1);
      }
    } else if (auto f = feature_from_name(word); f && arg.empty()) {
      p.flags.insert(*f);
    } else {
      throw ParseError("unknown profile entry '" + line + "'", i + 1, 1);
    }
  }
  return p;
}

}  // namespace dlseq
