#include "orthokit/wff.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "orthokit/error.hpp"

namespace orthokit {

struct Wff::Node {
  Kind kind = Kind::Prop;
  unsigned index = 0;
  WffConnective connective = WffConnective::And;
  std::optional<Wff> left;
  std::optional<Wff> right;
};

std::string_view wff_connective_symbol(WffConnective c) {
  switch (c) {
    case WffConnective::And: return "&";
    case WffConnective::Imp0: return "=>0";
    case WffConnective::Imp1: return "=>1";
    case WffConnective::Imp3: return "=>3";
    case WffConnective::Equiv: return "<=>";
    case WffConnective::Equiv0: return "<=>0";
  }
  return "?";
}

Wff Wff::prop(unsigned index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Prop;
  n->index = index;
  return Wff(std::move(n));
}

Wff Wff::meta(unsigned index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Meta;
  n->index = index;
  return Wff(std::move(n));
}

Wff Wff::negation(Wff child) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->left = std::move(child);
  return Wff(std::move(n));
}

Wff Wff::disjunction(Wff left, Wff right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->left = std::move(left);
  n->right = std::move(right);
  return Wff(std::move(n));
}

Wff Wff::defined(WffConnective c, Wff left, Wff right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Defined;
  n->connective = c;
  n->left = std::move(left);
  n->right = std::move(right);
  return Wff(std::move(n));
}

Wff::Kind Wff::kind() const noexcept { return node_->kind; }
unsigned Wff::index() const noexcept { return node_->index; }
WffConnective Wff::connective() const noexcept { return node_->connective; }

const Wff& Wff::left() const {
  if (!node_->left) throw DomainError("wff has no children");
  return *node_->left;
}

const Wff& Wff::right() const {
  if (!node_->right) throw DomainError("wff has no right child");
  return *node_->right;
}

bool operator==(const Wff& a, const Wff& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Wff::Kind::Prop:
    case Wff::Kind::Meta: return a.index() == b.index();
    case Wff::Kind::Not: return a.left() == b.left();
    case Wff::Kind::Defined:
      if (a.connective() != b.connective()) return false;
      [[fallthrough]];
    case Wff::Kind::Or: return a.left() == b.left() && a.right() == b.right();
  }
  return false;
}

namespace {

enum class Tok { Prop, Meta, Not, Or, Bin, LParen, RParen, End };

struct Token {
  Tok type;
  std::size_t pos;
  std::string text;
  unsigned index = 0;
  WffConnective conn = WffConnective::And;
};

std::vector<Token> lex(std::string_view s, bool schema) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view p) { return s.substr(i, p.size()) == p; };
  auto isdigit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < s.size()) {
    const char c = s[i];
    const std::size_t at = i;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'p' && i + 1 < s.size() && isdigit(s[i + 1])) {
      if (schema) throw ParseError("props are not allowed in a schema", at);
      std::size_t j = i + 1;
      unsigned long v = 0;
      while (j < s.size() && isdigit(s[j])) {
        v = v * 10 + static_cast<unsigned long>(s[j] - '0');
        if (v > 65535) throw ParseError("prop index too large", at);
        ++j;
      }
      if (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        throw ParseError("unknown token '" + std::string(s.substr(i, j - i + 1)) + "'", at);
      out.push_back({Tok::Prop, at, std::string(s.substr(i, j - i)), static_cast<unsigned>(v)});
      i = j;
      continue;
    }
    if (c == 'V') {
      out.push_back({Tok::Or, at, "V"});
      ++i;
      continue;
    }
    if (std::isupper(static_cast<unsigned char>(c)) &&
        !(i + 1 < s.size() && (std::isalnum(static_cast<unsigned char>(s[i + 1])) || s[i + 1] == '_'))) {
      if (!schema) throw ParseError("metavariable '" + std::string(1, c) + "' outside a schema", at);
      const unsigned idx = static_cast<unsigned>(c - 'A');
      out.push_back({Tok::Meta, at, std::string(1, c), idx > ('V' - 'A') ? idx - 1 : idx});
      ++i;
      continue;
    }
    struct Op {
      std::string_view text;
      WffConnective conn;
    };
    static constexpr Op ops[] = {{"<=>0", WffConnective::Equiv0}, {"<=>", WffConnective::Equiv},
                                 {"=>0", WffConnective::Imp0},    {"=>1", WffConnective::Imp1},
                                 {"=>3", WffConnective::Imp3},    {"&", WffConnective::And}};
    bool matched = false;
    for (const auto& op : ops) {
      if (starts(op.text)) {
        out.push_back({Tok::Bin, at, std::string(op.text), 0, op.conn});
        i += op.text.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    switch (c) {
      case '~': out.push_back({Tok::Not, at, "~"}); break;
      case '(': out.push_back({Tok::LParen, at, "("}); break;
      case ')': out.push_back({Tok::RParen, at, ")"}); break;
      default:
        if (starts("=>")) throw ParseError("unknown operator '" + std::string(s.substr(i, 3)) + "'", at);
        throw ParseError("unknown token '" + std::string(1, c) + "'", at);
    }
    ++i;
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// Binding strength; larger binds tighter.
int level(WffConnective c) {
  switch (c) {
    case WffConnective::Imp0:
    case WffConnective::Imp1:
    case WffConnective::Imp3: return 0;
    case WffConnective::Equiv:
    case WffConnective::Equiv0: return 1;
    case WffConnective::And: return 3;
  }
  return 0;
}

class Parser {
 public:
  Parser(std::string_view text, bool schema) : toks_(lex(text, schema)) {}

  Wff parse() {
    Wff w = binary(0);
    if (peek().type != Tok::End) fail("unexpected '" + peek().text + "'");
    return w;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(peek().type == Tok::End ? msg + " (end of input)" : msg, peek().pos);
  }

  // Precedence climbing over levels 0 (=>), 1 (<=>), 2 (V), 3 (&).
  Wff binary(int lvl) {
    if (lvl > 3) return unary();
    Wff lhs = binary(lvl + 1);
    while (true) {
      const Token& t = peek();
      if (lvl == 2 && t.type == Tok::Or) {
        ++pos_;
        lhs = Wff::disjunction(std::move(lhs), binary(lvl + 1));
      } else if (t.type == Tok::Bin && level(t.conn) == lvl) {
        const auto c = t.conn;
        ++pos_;
        lhs = Wff::defined(c, std::move(lhs), binary(lvl + 1));
      } else {
        return lhs;
      }
    }
  }

  Wff unary() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::Not: ++pos_; return Wff::negation(unary());
      case Tok::Prop: ++pos_; return Wff::prop(t.index);
      case Tok::Meta: ++pos_; return Wff::meta(t.index);
      case Tok::LParen: {
        ++pos_;
        Wff inner = binary(0);
        if (peek().type != Tok::RParen) fail("expected ')'");
        ++pos_;
        return inner;
      }
      default: fail(t.type == Tok::End ? "expected a wff" : "expected a wff, got '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(const Wff& w) {
  switch (w.kind()) {
    case Wff::Kind::Or: return 2;
    case Wff::Kind::Defined: return level(w.connective());
    case Wff::Kind::Not: return 4;
    default: return 5;
  }
}

void print(const Wff& w, std::string& out) {
  auto child = [&out](const Wff& c, bool parens) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
  };
  switch (w.kind()) {
    case Wff::Kind::Prop: out += "p" + std::to_string(w.index()); return;
    case Wff::Kind::Meta: {
      unsigned i = w.index();
      char c = static_cast<char>('A' + i);
      if (c >= 'V') ++c;
      out += c;
      return;
    }
    case Wff::Kind::Not:
      out += '~';
      child(w.left(), precedence(w.left()) < 4);
      return;
    default: break;
  }
  const int p = precedence(w);
  child(w.left(), precedence(w.left()) < p);
  if (w.kind() == Wff::Kind::Or) {
    out += " V ";
  } else {
    out += ' ';
    out += wff_connective_symbol(w.connective());
    out += ' ';
  }
  child(w.right(), precedence(w.right()) <= p);
}

Wff expand_memo(const Wff& w, std::unordered_map<const void*, Wff>& memo) {
  if (auto it = memo.find(w.identity()); it != memo.end()) return it->second;
  Wff result = w;
  switch (w.kind()) {
    case Wff::Kind::Prop:
    case Wff::Kind::Meta: break;
    case Wff::Kind::Not: result = ~expand_memo(w.left(), memo); break;
    case Wff::Kind::Or: result = expand_memo(w.left(), memo) | expand_memo(w.right(), memo); break;
    case Wff::Kind::Defined: {
      const Wff a = expand_memo(w.left(), memo);
      const Wff b = expand_memo(w.right(), memo);
      auto conj = [](const Wff& x, const Wff& y) { return ~(~x | ~y); };
      switch (w.connective()) {
        case WffConnective::And: result = conj(a, b); break;
        case WffConnective::Imp0: result = ~a | b; break;
        case WffConnective::Imp1: result = ~a | conj(a, b); break;
        case WffConnective::Imp3: result = (conj(~a, b) | conj(~a, ~b)) | conj(a, ~a | b); break;
        case WffConnective::Equiv: result = conj(a, b) | conj(~a, ~b); break;
        case WffConnective::Equiv0: result = conj(~a | b, ~b | a); break;
      }
      break;
    }
  }
  memo.emplace(w.identity(), result);
  return result;
}

void collect(const Wff& w, Wff::Kind leaf, std::set<unsigned>& out) {
  switch (w.kind()) {
    case Wff::Kind::Prop:
    case Wff::Kind::Meta:
      if (w.kind() == leaf) out.insert(w.index());
      return;
    case Wff::Kind::Not: collect(w.left(), leaf, out); return;
    default:
      collect(w.left(), leaf, out);
      collect(w.right(), leaf, out);
  }
}

bool match(const Wff& w, const Wff& s, Substitution& sigma) {
  switch (s.kind()) {
    case Wff::Kind::Meta: {
      auto [it, fresh] = sigma.emplace(s.index(), w);
      return fresh || it->second == w;
    }
    case Wff::Kind::Prop: return w.kind() == Wff::Kind::Prop && w.index() == s.index();
    case Wff::Kind::Not: return w.kind() == Wff::Kind::Not && match(w.left(), s.left(), sigma);
    case Wff::Kind::Or:
      return w.kind() == Wff::Kind::Or && match(w.left(), s.left(), sigma) && match(w.right(), s.right(), sigma);
    case Wff::Kind::Defined:
      return w.kind() == Wff::Kind::Defined && w.connective() == s.connective() &&
             match(w.left(), s.left(), sigma) && match(w.right(), s.right(), sigma);
  }
  return false;
}

}  // namespace

WffProgram::WffProgram(std::vector<unsigned> props, const std::vector<Wff>& roots) : props_(std::move(props)) {
  std::map<const void*, std::size_t> memo;
  for (const auto& r : roots) roots_.push_back(add(r, memo));
}

std::size_t WffProgram::add(const Wff& w, std::map<const void*, std::size_t>& memo) {
  if (auto it = memo.find(w.identity()); it != memo.end()) return it->second;
  Instr in;
  switch (w.kind()) {
    case Wff::Kind::Prop: {
      auto it = std::find(props_.begin(), props_.end(), w.index());
      if (it == props_.end()) throw DomainError("prop p" + std::to_string(w.index()) + " has no value");
      in.op = Op::Slot;
      in.a = static_cast<std::size_t>(it - props_.begin());
      break;
    }
    case Wff::Kind::Meta: throw DomainError("cannot evaluate a schema metavariable");
    case Wff::Kind::Not:
      in.op = Op::Not;
      in.a = add(w.left(), memo);
      break;
    case Wff::Kind::Or:
    case Wff::Kind::Defined:
      in.op = w.kind() == Wff::Kind::Or ? Op::Or : Op::Conn;
      in.conn = w.connective();
      in.a = add(w.left(), memo);
      in.b = add(w.right(), memo);
      break;
  }
  code_.push_back(in);
  memo.emplace(w.identity(), code_.size() - 1);
  return code_.size() - 1;
}

void WffProgram::run(const OrthoLattice& L, std::span<const Element> values, std::vector<Element>& regs) const {
  regs.resize(code_.size());
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    switch (in.op) {
      case Op::Slot: regs[i] = values[in.a]; break;
      case Op::Not: regs[i] = L.ortho(regs[in.a]); break;
      case Op::Or: regs[i] = L.join(regs[in.a], regs[in.b]); break;
      case Op::Conn: {
        const Element a = regs[in.a], b = regs[in.b];
        switch (in.conn) {
          case WffConnective::And: regs[i] = L.meet(a, b); break;
          case WffConnective::Imp0: regs[i] = L.connective(ConnectiveKind::Classical, a, b); break;
          case WffConnective::Imp1: regs[i] = L.connective(ConnectiveKind::Sasaki, a, b); break;
          case WffConnective::Imp3: regs[i] = L.connective(ConnectiveKind::Kalmbach, a, b); break;
          case WffConnective::Equiv: regs[i] = L.connective(ConnectiveKind::QuantumEquiv, a, b); break;
          case WffConnective::Equiv0: regs[i] = L.connective(ConnectiveKind::ClassicalEquiv, a, b); break;
        }
        break;
      }
    }
  }
}

Wff parse_wff(std::string_view text) { return Parser(text, false).parse(); }
Wff parse_schema(std::string_view text) { return Parser(text, true).parse(); }

std::string to_string(const Wff& w) {
  std::string out;
  print(w, out);
  return out;
}

Wff expand_wff(const Wff& w) {
  std::unordered_map<const void*, Wff> memo;
  return expand_memo(w, memo);
}

bool is_primitive(const Wff& w) {
  switch (w.kind()) {
    case Wff::Kind::Prop:
    case Wff::Kind::Meta: return true;
    case Wff::Kind::Not: return is_primitive(w.left());
    case Wff::Kind::Or: return is_primitive(w.left()) && is_primitive(w.right());
    case Wff::Kind::Defined: return false;
  }
  return false;
}

std::set<unsigned> props(const Wff& w) {
  std::set<unsigned> out;
  collect(w, Wff::Kind::Prop, out);
  return out;
}

std::set<unsigned> metavariables(const Wff& w) {
  std::set<unsigned> out;
  collect(w, Wff::Kind::Meta, out);
  return out;
}

Valuation::Valuation(std::vector<unsigned> props, std::vector<Element> values)
    : props_(std::move(props)), values_(std::move(values)) {
  if (props_.size() != values_.size()) throw DomainError("valuation props/values size mismatch");
}

std::optional<Element> Valuation::get(unsigned prop) const {
  for (std::size_t i = 0; i < props_.size(); ++i)
    if (props_[i] == prop) return values_[i];
  return std::nullopt;
}

void Valuation::set(unsigned prop, Element value) {
  auto it = std::lower_bound(props_.begin(), props_.end(), prop);
  const auto idx = it - props_.begin();
  if (it != props_.end() && *it == prop) {
    values_[static_cast<std::size_t>(idx)] = value;
    return;
  }
  props_.insert(it, prop);
  values_.insert(values_.begin() + idx, value);
}

std::string Valuation::format(const OrthoLattice& lattice) const {
  std::string out;
  for (std::size_t i = 0; i < props_.size(); ++i) {
    if (i) out += ' ';
    out += "p" + std::to_string(props_[i]) + "=" + lattice.name_of(values_[i]);
  }
  return out;
}

Element evaluate(const OrthoLattice& lattice, const Wff& w, const Valuation& valuation) {
  const WffProgram prog(valuation.props(), {w});
  for (auto v : valuation.values())
    if (!lattice.contains(v)) throw DomainError("valuation value outside lattice " + lattice.name());
  std::vector<Element> regs;
  prog.run(lattice, valuation.values(), regs);
  return prog.root(0, regs);
}

WffCheck check_consequence(const OrthoLattice& lattice, const std::vector<Wff>& gamma, const Wff& a,
                           const SearchOptions& options) {
  std::set<unsigned> all = props(a);
  for (const auto& g : gamma) all.merge(props(g));
  std::vector<Wff> roots = gamma;
  roots.push_back(a);
  const WffProgram prog({all.begin(), all.end()}, roots);
  const std::size_t goal = gamma.size();
  const Element one = lattice.top();

  std::vector<Element> regs;
  auto fails = [&prog, &lattice, goal, one, regs](std::span<const Element> values) mutable {
    prog.run(lattice, values, regs);
    for (std::size_t h = 0; h < goal; ++h)
      if (prog.root(h, regs) != one) return false;
    return prog.root(goal, regs) != one;
  };
  auto hit = find_first_assignment(lattice.size(), prog.props().size(), options, fails);
  if (!hit) return {};
  std::vector<Element> out;
  prog.run(lattice, *hit, out);
  return {WffCounterexample{Valuation(prog.props(), *hit), prog.root(goal, out)}};
}

WffCheck check_validity(const OrthoLattice& lattice, const Wff& w, const SearchOptions& options) {
  return check_consequence(lattice, {}, w, options);
}

std::optional<Substitution> match_schema(const Wff& w, const Wff& schema) {
  Substitution sigma;
  if (!match(w, schema, sigma)) return std::nullopt;
  return sigma;
}

Wff instantiate(const Wff& schema, const Substitution& s) {
  switch (schema.kind()) {
    case Wff::Kind::Meta: {
      auto it = s.find(schema.index());
      if (it == s.end()) throw DomainError("substitution misses a metavariable");
      return it->second;
    }
    case Wff::Kind::Prop: return schema;
    case Wff::Kind::Not: return ~instantiate(schema.left(), s);
    case Wff::Kind::Or: return instantiate(schema.left(), s) | instantiate(schema.right(), s);
    case Wff::Kind::Defined:
      return Wff::defined(schema.connective(), instantiate(schema.left(), s), instantiate(schema.right(), s));
  }
  return schema;
}

}  // namespace orthokit
