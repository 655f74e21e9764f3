#include "orthokit/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace orthokit {

struct Term::Node {
  Kind kind = Kind::Constant;
  std::string name;
  bool one = false;
  ConnectiveKind connective = ConnectiveKind::Sasaki;
  std::optional<Term> left;
  std::optional<Term> right;
};

Term::Kind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
bool Term::is_one() const noexcept { return node_->one; }
ConnectiveKind Term::connective() const noexcept { return node_->connective; }

// ---------------------------------------------------------------- Term

Term Term::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Variable;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::zero() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  return Term(std::move(n));
}

Term Term::one() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->one = true;
  return Term(std::move(n));
}

Term Term::ortho(Term child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ortho;
  n->left = std::move(child);
  return Term(std::move(n));
}

Term Term::join(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Join;
  n->left = std::move(left);
  n->right = std::move(right);
  return Term(std::move(n));
}

Term Term::meet(Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Meet;
  n->left = std::move(left);
  n->right = std::move(right);
  return Term(std::move(n));
}

Term Term::defined(ConnectiveKind kind, Term left, Term right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Defined;
  n->connective = kind;
  n->left = std::move(left);
  n->right = std::move(right);
  return Term(std::move(n));
}

const Term& Term::left() const {
  if (!node_->left) throw DomainError("term has no children");
  return *node_->left;
}

const Term& Term::right() const {
  if (!node_->right) throw DomainError("term has no right child");
  return *node_->right;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Variable: return a.name() == b.name();
    case Term::Kind::Constant: return a.is_one() == b.is_one();
    case Term::Kind::Ortho: return a.left() == b.left();
    case Term::Kind::Defined:
      if (a.connective() != b.connective()) return false;
      [[fallthrough]];
    case Term::Kind::Join:
    case Term::Kind::Meet: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

// ---------------------------------------------------------------- lexer

namespace {

enum class Tok { Ident, Zero, One, Prime, Meet, Join, Conn, Eq, And, Implies, Iff, LParen, RParen, End };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
  ConnectiveKind conn = ConnectiveKind::Sasaki;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    if (is_ident_start(c)) {
      std::size_t j = i;
      while (j < s.size() && is_ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      out.push_back({word == "v" ? Tok::Join : Tok::Ident, at, word});
      continue;
    }
    if (c == '0' || c == '1') {
      if (i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))
        throw ParseError("unknown token '" + std::string(s.substr(i, 2)) + "'", at);
      out.push_back({c == '0' ? Tok::Zero : Tok::One, at, std::string(1, c)});
      ++i;
      continue;
    }
    if (starts("->")) {
      const char k = i + 2 < s.size() ? s[i + 2] : '\0';
      ConnectiveKind kind;
      switch (k) {
        case '0': kind = ConnectiveKind::Classical; break;
        case '1': kind = ConnectiveKind::Sasaki; break;
        case '2': kind = ConnectiveKind::Dishkant; break;
        case '3': kind = ConnectiveKind::Kalmbach; break;
        case '5': kind = ConnectiveKind::Relevance; break;
        default: throw ParseError("unknown operator '->" + std::string(k ? 1 : 0, k) + "'", at);
      }
      out.push_back({Tok::Conn, at, std::string(s.substr(i, 3)), kind});
      i += 3;
      continue;
    }
    if (starts("<=>")) {
      out.push_back({Tok::Iff, at, "<=>"});
      i += 3;
      continue;
    }
    if (starts("==0")) {
      out.push_back({Tok::Conn, at, "==0", ConnectiveKind::ClassicalEquiv});
      i += 3;
      continue;
    }
    if (starts("==")) {
      out.push_back({Tok::Conn, at, "==", ConnectiveKind::QuantumEquiv});
      i += 2;
      continue;
    }
    if (starts("=>")) {
      out.push_back({Tok::Implies, at, "=>"});
      i += 2;
      continue;
    }
    switch (c) {
      case '=': out.push_back({Tok::Eq, at, "="}); break;
      case '\'': out.push_back({Tok::Prime, at, "'"}); break;
      case '^': out.push_back({Tok::Meet, at, "^"}); break;
      case '&': out.push_back({Tok::And, at, "&"}); break;
      case '(': out.push_back({Tok::LParen, at, "("}); break;
      case ')': out.push_back({Tok::RParen, at, ")"}); break;
      default: throw ParseError("unknown token '" + std::string(1, c) + "'", at);
    }
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// Binding strength; larger binds tighter.
int level(ConnectiveKind k) {
  return (k == ConnectiveKind::QuantumEquiv || k == ConnectiveKind::ClassicalEquiv) ? 1 : 0;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Term term() { return implication(); }

  Equation equation() {
    Term lhs = term();
    expect(Tok::Eq, "'='");
    Term rhs = term();
    return {std::move(lhs), std::move(rhs)};
  }

  std::vector<Equation> conjunction() {
    std::vector<Equation> eqs{equation()};
    while (peek().type == Tok::And) {
      ++pos_;
      eqs.push_back(equation());
    }
    return eqs;
  }

  std::vector<Inference> conditions(bool allow_iff) {
    auto first = conjunction();
    if (peek().type == Tok::Implies) {
      ++pos_;
      Equation concl = equation();
      return {Inference{std::move(first), std::move(concl)}};
    }
    if (peek().type == Tok::Iff) {
      if (!allow_iff) fail("'<=>' not allowed here");
      ++pos_;
      auto second = conjunction();
      if (first.size() != 1 || second.size() != 1) fail("'<=>' needs a single equation on each side");
      return {Inference{{first[0]}, second[0]}, Inference{{second[0]}, first[0]}};
    }
    if (first.size() != 1) fail("expected '=>' after hypotheses");
    return {Inference{{}, std::move(first[0])}};
  }

  void finish() {
    if (peek().type != Tok::End) fail("unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const auto& t = peek();
    throw ParseError(t.type == Tok::End ? msg + " (end of input)" : msg, t.pos);
  }

  void expect(Tok type, const char* what) {
    if (peek().type != type) fail(std::string("expected ") + what);
    ++pos_;
  }

  Term implication() {
    Term lhs = equivalence();
    while (peek().type == Tok::Conn && level(peek().conn) == 0) {
      const auto k = peek().conn;
      ++pos_;
      lhs = Term::defined(k, std::move(lhs), equivalence());
    }
    return lhs;
  }

  Term equivalence() {
    Term lhs = join();
    while (peek().type == Tok::Conn && level(peek().conn) == 1) {
      const auto k = peek().conn;
      ++pos_;
      lhs = Term::defined(k, std::move(lhs), join());
    }
    return lhs;
  }

  Term join() {
    Term lhs = meet();
    while (peek().type == Tok::Join) {
      ++pos_;
      lhs = Term::join(std::move(lhs), meet());
    }
    return lhs;
  }

  Term meet() {
    Term lhs = postfix();
    while (peek().type == Tok::Meet) {
      ++pos_;
      lhs = Term::meet(std::move(lhs), postfix());
    }
    return lhs;
  }

  Term postfix() {
    Term t = primary();
    while (peek().type == Tok::Prime) {
      ++pos_;
      t = Term::ortho(std::move(t));
    }
    return t;
  }

  Term primary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Ident: ++pos_; return Term::variable(t.text);
      case Tok::Zero: ++pos_; return Term::zero();
      case Tok::One: ++pos_; return Term::one();
      case Tok::LParen: {
        ++pos_;
        Term inner = term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      default: fail(t.type == Tok::End ? "expected a term" : "expected a term, got '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Defined: return level(t.connective());
    case Term::Kind::Join: return 2;
    case Term::Kind::Meet: return 3;
    case Term::Kind::Ortho: return 4;
    default: return 5;
  }
}

void print(const Term& t, std::string& out) {
  auto child = [&out](const Term& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (t.kind()) {
    case Term::Kind::Variable: out += t.name(); return;
    case Term::Kind::Constant: out += t.is_one() ? '1' : '0'; return;
    case Term::Kind::Ortho:
      child(t.left(), precedence(t.left()) < 4);
      out += '\'';
      return;
    default: break;
  }
  const int p = precedence(t);
  child(t.left(), precedence(t.left()) < p);
  switch (t.kind()) {
    case Term::Kind::Join: out += " v "; break;
    case Term::Kind::Meet: out += " ^ "; break;
    default:
      out += ' ';
      out += connective_symbol(t.connective());
      out += ' ';
  }
  child(t.right(), precedence(t.right()) <= p);
}

void collect(const Term& t, std::set<std::string>& vars) {
  switch (t.kind()) {
    case Term::Kind::Variable: vars.insert(t.name()); return;
    case Term::Kind::Constant: return;
    case Term::Kind::Ortho: collect(t.left(), vars); return;
    default:
      collect(t.left(), vars);
      collect(t.right(), vars);
  }
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

Equation parse_equation(std::string_view text) {
  Parser p(text);
  Equation e = p.equation();
  p.finish();
  return e;
}

Inference parse_inference(std::string_view text) {
  Parser p(text);
  auto conds = p.conditions(false);
  p.finish();
  return std::move(conds.front());
}

std::vector<Inference> parse_conditions(std::string_view text) {
  Parser p(text);
  auto conds = p.conditions(true);
  p.finish();
  return conds;
}

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Equation& e) { return to_string(e.lhs) + " = " + to_string(e.rhs); }

std::string to_string(const Inference& inf) {
  std::string out;
  for (std::size_t i = 0; i < inf.hypotheses.size(); ++i) {
    if (i) out += " & ";
    out += to_string(inf.hypotheses[i]);
  }
  if (!inf.hypotheses.empty()) out += " => ";
  return out + to_string(inf.conclusion);
}

Term expand(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Variable:
    case Term::Kind::Constant: return t;
    case Term::Kind::Ortho: return Term::ortho(expand(t.left()));
    case Term::Kind::Join: return Term::join(expand(t.left()), expand(t.right()));
    case Term::Kind::Meet: return Term::meet(expand(t.left()), expand(t.right()));
    case Term::Kind::Defined: break;
  }
  const Term a = expand(t.left());
  const Term b = expand(t.right());
  auto neg = [](const Term& x) { return Term::ortho(x); };
  auto sasaki = [&](const Term& x, const Term& y) { return Term::join(neg(x), Term::meet(x, y)); };
  switch (t.connective()) {
    case ConnectiveKind::Sasaki: return sasaki(a, b);
    case ConnectiveKind::Dishkant: return sasaki(neg(b), neg(a));
    case ConnectiveKind::Kalmbach:
      return Term::join(Term::join(Term::meet(neg(a), b), Term::meet(neg(a), neg(b))),
                        Term::meet(a, Term::join(neg(a), b)));
    case ConnectiveKind::Relevance:
      return Term::join(Term::join(Term::meet(a, b), Term::meet(neg(a), b)), Term::meet(neg(a), neg(b)));
    case ConnectiveKind::Classical: return Term::join(neg(a), b);
    case ConnectiveKind::QuantumEquiv: return Term::join(Term::meet(a, b), Term::meet(neg(a), neg(b)));
    case ConnectiveKind::ClassicalEquiv: return Term::meet(Term::join(neg(a), b), Term::join(neg(b), a));
  }
  return t;
}

std::set<std::string> free_variables(const Term& t) {
  std::set<std::string> vars;
  collect(t, vars);
  return vars;
}

std::set<std::string> free_variables(const Equation& e) {
  std::set<std::string> vars;
  collect(e.lhs, vars);
  collect(e.rhs, vars);
  return vars;
}

std::set<std::string> free_variables(const Inference& inf) {
  auto vars = free_variables(inf.conclusion);
  for (const auto& h : inf.hypotheses) vars.merge(free_variables(h));
  return vars;
}

// ---------------------------------------------------------------- Assignment

Assignment::Assignment(std::vector<std::string> names, std::vector<Element> values)
    : names_(std::move(names)), values_(std::move(values)) {
  if (names_.size() != values_.size()) throw DomainError("assignment names/values size mismatch");
}

void Assignment::set(const std::string& name, Element value) {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  const auto idx = static_cast<std::size_t>(it - names_.begin());
  if (it != names_.end() && *it == name) {
    values_[idx] = value;
    return;
  }
  names_.insert(it, name);
  values_.insert(values_.begin() + static_cast<std::ptrdiff_t>(idx), value);
}

std::optional<Element> Assignment::get(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return values_[i];
  return std::nullopt;
}

std::string Assignment::format(const OrthoLattice& lattice) const {
  std::string out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (i) out += ' ';
    out += names_[i] + "=" + lattice.name_of(values_[i]);
  }
  return out;
}

// ---------------------------------------------------------------- evaluation

namespace {

// Straight-line program; register i holds the value of instruction i.
class Program {
 public:
  explicit Program(const std::vector<std::string>& vars) : vars_(vars) {}

  std::size_t add(const Term& t) {
    Instr in;
    switch (t.kind()) {
      case Term::Kind::Variable: {
        auto it = std::find(vars_.begin(), vars_.end(), t.name());
        if (it == vars_.end()) throw DomainError("unbound variable '" + t.name() + "'");
        in.op = Op::Var;
        in.a = static_cast<std::size_t>(it - vars_.begin());
        break;
      }
      case Term::Kind::Constant: in.op = t.is_one() ? Op::One : Op::Zero; break;
      case Term::Kind::Ortho:
        in.op = Op::Ortho;
        in.a = add(t.left());
        break;
      case Term::Kind::Join:
      case Term::Kind::Meet:
      case Term::Kind::Defined:
        in.op = t.kind() == Term::Kind::Join ? Op::Join : t.kind() == Term::Kind::Meet ? Op::Meet : Op::Conn;
        in.conn = t.connective();
        in.a = add(t.left());
        in.b = add(t.right());
        break;
    }
    code_.push_back(in);
    return code_.size() - 1;
  }

  void run(const OrthoLattice& L, std::span<const Element> values, std::vector<Element>& regs) const {
    regs.resize(code_.size());
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instr& in = code_[i];
      switch (in.op) {
        case Op::Var: regs[i] = values[in.a]; break;
        case Op::Zero: regs[i] = L.bottom(); break;
        case Op::One: regs[i] = L.top(); break;
        case Op::Ortho: regs[i] = L.ortho(regs[in.a]); break;
        case Op::Join: regs[i] = L.join(regs[in.a], regs[in.b]); break;
        case Op::Meet: regs[i] = L.meet(regs[in.a], regs[in.b]); break;
        case Op::Conn: regs[i] = L.connective(in.conn, regs[in.a], regs[in.b]); break;
      }
    }
  }

 private:
  enum class Op { Var, Zero, One, Ortho, Join, Meet, Conn };
  struct Instr {
    Op op = Op::Zero;
    ConnectiveKind conn = ConnectiveKind::Sasaki;
    std::size_t a = 0;
    std::size_t b = 0;
  };

  const std::vector<std::string>& vars_;
  std::vector<Instr> code_;
};

}  // namespace

Element eval_term(const OrthoLattice& lattice, const Term& t, const Assignment& assignment) {
  Program prog(assignment.names());
  const auto root = prog.add(t);
  for (auto v : assignment.values())
    if (!lattice.contains(v)) throw DomainError("assignment value outside lattice " + lattice.name());
  std::vector<Element> regs;
  prog.run(lattice, assignment.values(), regs);
  return regs[root];
}

CheckResult check_inference(const OrthoLattice& lattice, const Inference& inf, const SearchOptions& options) {
  const auto var_set = free_variables(inf);
  const std::vector<std::string> vars(var_set.begin(), var_set.end());
  Program prog(vars);
  std::vector<std::pair<std::size_t, std::size_t>> hyps;
  for (const auto& h : inf.hypotheses) hyps.emplace_back(prog.add(h.lhs), prog.add(h.rhs));
  const auto lhs = prog.add(inf.conclusion.lhs);
  const auto rhs = prog.add(inf.conclusion.rhs);

  std::vector<Element> regs;
  auto violates = [&prog, &lattice, &hyps, lhs, rhs, regs](std::span<const Element> values) mutable {
    prog.run(lattice, values, regs);
    for (const auto& [l, r] : hyps)
      if (regs[l] != regs[r]) return false;
    return regs[lhs] != regs[rhs];
  };
  auto hit = find_first_assignment(lattice.size(), vars.size(), options, violates);
  if (!hit) return {};
  std::vector<Element> regs_out;
  prog.run(lattice, *hit, regs_out);
  return {Counterexample{Assignment(vars, *hit), regs_out[lhs], regs_out[rhs], 0}};
}

CheckResult check_equation(const OrthoLattice& lattice, const Equation& eq, const SearchOptions& options) {
  return check_inference(lattice, Inference{{}, eq}, options);
}

CheckResult check_conditions(const OrthoLattice& lattice, const std::vector<Inference>& conditions,
                             const SearchOptions& options) {
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    auto r = check_inference(lattice, conditions[i], options);
    if (!r.holds()) {
      r.counterexample->condition = i;
      return r;
    }
  }
  return {};
}

}  // namespace orthokit
