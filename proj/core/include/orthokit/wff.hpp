#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthokit/lattice.hpp"
#include "orthokit/search.hpp"

namespace orthokit {

/// Defined wff connectives; negation and disjunction are primitive.
enum class WffConnective {
  And,     // ~(~A V ~B)
  Imp0,    // ~A V B
  Imp1,    // ~A V (A & B)
  Imp3,    // (~A & B) V (~A & ~B) V (A & (~A V B))
  Equiv,   // (A & B) V (~A & ~B)
  Equiv0,  // (A =>0 B) & (B =>0 A)
};

std::string_view wff_connective_symbol(WffConnective c);

/// Immutable propositional formula. `Meta` leaves (A, B, C, ...) only occur
/// in axiom schemata.
class Wff {
 public:
  enum class Kind { Prop, Meta, Not, Or, Defined };

  static Wff prop(unsigned index);
  static Wff meta(unsigned index);
  static Wff negation(Wff child);
  static Wff disjunction(Wff left, Wff right);
  static Wff defined(WffConnective c, Wff left, Wff right);

  Kind kind() const noexcept;
  /// Prop or Meta index.
  unsigned index() const noexcept;
  WffConnective connective() const noexcept;
  const Wff& left() const;
  const Wff& right() const;

  /// Node identity, used to memoize over shared subtrees.
  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Wff& a, const Wff& b);

 private:
  struct Node;
  explicit Wff(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

inline Wff operator~(const Wff& a) { return Wff::negation(a); }
inline Wff operator|(const Wff& a, const Wff& b) { return Wff::disjunction(a, b); }
inline Wff operator&(const Wff& a, const Wff& b) { return Wff::defined(WffConnective::And, a, b); }

/// ASCII grammar: p0 p1 ... props, `~` not, `&` and, `V` or, `=>0 =>1 =>3`
/// implications, `<=>` and `<=>0` equivalences. Binding from weakest:
/// implications, equivalences, `V`, `&`, `~`; left-associative.
Wff parse_wff(std::string_view text);
/// Same grammar with metavariables A, B, C, ... (any capital except V)
/// instead of props.
Wff parse_schema(std::string_view text);

std::string to_string(const Wff& w);

/// Wff with only Prop/Meta/Not/Or nodes.
Wff expand_wff(const Wff& w);
bool is_primitive(const Wff& w);

std::set<unsigned> props(const Wff& w);
std::set<unsigned> metavariables(const Wff& w);

/// Prop index -> element, kept sorted by index.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::vector<unsigned> props, std::vector<Element> values);

  std::optional<Element> get(unsigned prop) const;
  void set(unsigned prop, Element value);

  const std::vector<unsigned>& props() const noexcept { return props_; }
  const std::vector<Element>& values() const noexcept { return values_; }

  /// "p0=x p1=y".
  std::string format(const OrthoLattice& lattice) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<unsigned> props_;
  std::vector<Element> values_;
};

/// h(~A) = h(A)', h(A V B) = h(A) v h(B); defined connectives through their
/// lattice counterparts. Throws `DomainError` for unvalued props or metavariables.
Element evaluate(const OrthoLattice& lattice, const Wff& w, const Valuation& valuation);

/// Straight-line evaluator for several wffs over a fixed prop order.
/// Shared subtrees are compiled once.
class WffProgram {
 public:
  WffProgram(std::vector<unsigned> props, const std::vector<Wff>& roots);

  const std::vector<unsigned>& props() const noexcept { return props_; }
  /// `values[i]` is the value of `props()[i]`; fills `regs`.
  void run(const OrthoLattice& lattice, std::span<const Element> values, std::vector<Element>& regs) const;
  Element root(std::size_t i, const std::vector<Element>& regs) const { return regs[roots_[i]]; }

 private:
  enum class Op { Slot, Not, Or, Conn };
  struct Instr {
    Op op = Op::Slot;
    WffConnective conn = WffConnective::And;
    std::size_t a = 0;
    std::size_t b = 0;
  };
  std::size_t add(const Wff& w, std::map<const void*, std::size_t>& memo);

  std::vector<unsigned> props_;
  std::vector<Instr> code_;
  std::vector<std::size_t> roots_;
};

struct WffCounterexample {
  Valuation valuation;
  Element value;  // value of the checked wff
};

struct WffCheck {
  std::optional<WffCounterexample> counterexample;

  bool holds() const noexcept { return !counterexample.has_value(); }
};

/// Valid iff every valuation of the wff's props sends it to 1.
WffCheck check_validity(const OrthoLattice& lattice, const Wff& w, const SearchOptions& options = {});
/// Every valuation sending all of `gamma` to 1 sends `a` to 1.
WffCheck check_consequence(const OrthoLattice& lattice, const std::vector<Wff>& gamma, const Wff& a,
                           const SearchOptions& options = {});

/// Metavariable index -> wff.
using Substitution = std::map<unsigned, Wff>;

/// The unique substitution with instantiate(schema, s) == w, if any.
std::optional<Substitution> match_schema(const Wff& w, const Wff& schema);
Wff instantiate(const Wff& schema, const Substitution& s);

}  // namespace orthokit
