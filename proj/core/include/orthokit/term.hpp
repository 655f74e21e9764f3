#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "orthokit/lattice.hpp"
#include "orthokit/search.hpp"

namespace orthokit {

/// Immutable lattice term. Defined connectives stay as nodes so that laws
/// print the way they were written; `expand` removes them.
class Term {
 public:
  enum class Kind { Variable, Constant, Ortho, Join, Meet, Defined };

  static Term variable(std::string name);
  static Term zero();
  static Term one();
  static Term ortho(Term child);
  static Term join(Term left, Term right);
  static Term meet(Term left, Term right);
  static Term defined(ConnectiveKind kind, Term left, Term right);

  Kind kind() const noexcept;
  /// Variable name; empty for other kinds.
  const std::string& name() const noexcept;
  /// For constants: true for 1, false for 0.
  bool is_one() const noexcept;
  ConnectiveKind connective() const noexcept;
  /// Only child of Ortho, left child of binary nodes.
  const Term& left() const;
  const Term& right() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};


struct Equation {
  Term lhs;
  Term rhs;

  friend bool operator==(const Equation&, const Equation&) = default;
};

/// hypotheses => conclusion; no hypotheses means a plain equation.
struct Inference {
  std::vector<Equation> hypotheses;
  Equation conclusion;

  friend bool operator==(const Inference&, const Inference&) = default;
};

/// Parses the ASCII term grammar. Binding from weakest to strongest:
/// `->0 ->1 ->2 ->3 ->5`, then `== ==0`, then `v`, then `^`, then postfix `'`.
/// Same-level operators associate to the left.
Term parse_term(std::string_view text);
/// `lhs = rhs`
Equation parse_equation(std::string_view text);
/// `[eq & eq & ... =>] eq`
Inference parse_inference(std::string_view text);
/// An inference, or `eq <=> eq` which yields both directions.
std::vector<Inference> parse_conditions(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Equation& e);
std::string to_string(const Inference& inf);

/// Rewrites every Defined node into ', v, ^.
Term expand(const Term& t);

std::set<std::string> free_variables(const Term& t);
std::set<std::string> free_variables(const Equation& e);
std::set<std::string> free_variables(const Inference& inf);

/// Variable names (sorted) with one element each.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::vector<std::string> names, std::vector<Element> values);

  void set(const std::string& name, Element value);
  std::optional<Element> get(std::string_view name) const;

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Element>& values() const noexcept { return values_; }

  /// "a=x b=y" with element display names.
  std::string format(const OrthoLattice& lattice) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Element> values_;
};

/// Homomorphic evaluation. Throws `DomainError` for unbound variables.
Element eval_term(const OrthoLattice& lattice, const Term& t, const Assignment& assignment);

struct Counterexample {
  Assignment assignment;
  Element lhs;  // conclusion sides under the assignment
  Element rhs;
  std::size_t condition = 0;  // index into a multi-condition law body
};

struct CheckResult {
  std::optional<Counterexample> counterexample;

  bool holds() const noexcept { return !counterexample.has_value(); }
};

/// Exhaustive check over all n^v assignments, first counterexample in
/// lexicographic order of (sorted variable names, element ids).
CheckResult check_equation(const OrthoLattice& lattice, const Equation& eq, const SearchOptions& options = {});
CheckResult check_inference(const OrthoLattice& lattice, const Inference& inf, const SearchOptions& options = {});
/// All conditions in order; the first failing one is reported.
CheckResult check_conditions(const OrthoLattice& lattice, const std::vector<Inference>& conditions,
                             const SearchOptions& options = {});

}  // namespace orthokit
