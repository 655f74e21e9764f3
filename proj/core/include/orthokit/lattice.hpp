#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orthokit/error.hpp"

namespace orthokit {

/// Index of an element in a lattice universe.
class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint16_t id) : id_(id) {}

  constexpr std::uint16_t id() const noexcept { return id_; }

  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint16_t id_ = 0;
};

/// The seven binary connectives that expand into ', v, ^.
enum class ConnectiveKind {
  Sasaki,          // a ->1 b = a' v (a ^ b)
  Dishkant,        // a ->2 b = b' ->1 a'
  Kalmbach,        // a ->3 b = (a' ^ b) v (a' ^ b') v (a ^ (a' v b))
  Relevance,       // a ->5 b = (a ^ b) v (a' ^ b) v (a' ^ b')
  Classical,       // a ->0 b = a' v b
  QuantumEquiv,    // a == b = (a ^ b) v (a' ^ b')
  ClassicalEquiv,  // a ==0 b = (a ->0 b) ^ (b ->0 a)
};

inline constexpr ConnectiveKind kAllConnectives[] = {
    ConnectiveKind::Sasaki,    ConnectiveKind::Dishkant,     ConnectiveKind::Kalmbach,
    ConnectiveKind::Relevance, ConnectiveKind::Classical,    ConnectiveKind::QuantumEquiv,
    ConnectiveKind::ClassicalEquiv,
};

/// ASCII operator spelling used by the term grammar ("->1", "==", ...).
std::string_view connective_symbol(ConnectiveKind kind);
std::string_view connective_name(ConnectiveKind kind);

enum class LatticeErrorKind {
  InvalidInput,       // duplicate names, undeclared names, malformed ortho pairs
  NotAPoset,          // cycle in the cover relation
  NotALattice,        // a pair without unique join or meet
  NotBounded,         // no unique top or bottom
  NotAnOrtholattice,  // ortho map is not an order-reversing involutive complement
};

std::string_view lattice_error_name(LatticeErrorKind kind);

class LatticeError : public Error {
 public:
  LatticeError(LatticeErrorKind kind, const std::string& detail)
      : Error(std::string(lattice_error_name(kind)) + ": " + detail), kind_(kind) {}

  LatticeErrorKind kind() const noexcept { return kind_; }

 private:
  LatticeErrorKind kind_;
};

/// Raw tables of a finite bounded lattice with a unary complement.
///
/// `OrthoLattice` accepts these without verification so that broken
/// structures can still be inspected by `verify_ortholattice`.
struct LatticeTables {
  std::string name;
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<std::uint16_t>> join;
  std::vector<std::vector<std::uint16_t>> meet;
  std::vector<std::uint16_t> ortho;
  std::uint16_t bottom = 0;
  std::uint16_t top = 0;
};

/// Immutable finite ortholattice. All operations are table lookups.
class OrthoLattice {
 public:
  /// Wraps tables as-is. Throws `DomainError` only if the tables are not
  /// sized consistently; lattice laws are not checked.
  explicit OrthoLattice(LatticeTables tables);

  /// Builds a verified ortholattice from a Hasse diagram and the ortho map.
  ///
  /// The order is the reflexive-transitive closure of `covers`; joins and
  /// meets are found by bound enumeration. `ortho_pairs` must mention every
  /// element exactly once, including the 0:1 pair.
  static OrthoLattice from_covers(std::string name, const std::vector<std::string>& elements,
                                  const std::vector<std::pair<std::string, std::string>>& covers,
                                  const std::vector<std::pair<std::string, std::string>>& ortho_pairs);

  const std::string& name() const noexcept { return tables_.name; }
  std::size_t size() const noexcept { return tables_.names.size(); }

  Element bottom() const noexcept { return Element(tables_.bottom); }
  Element top() const noexcept { return Element(tables_.top); }

  std::vector<Element> elements() const;

  /// Throws `DomainError` for unknown names.
  Element element(std::string_view name) const;
  std::optional<Element> find(std::string_view name) const;
  const std::string& name_of(Element a) const;
  const std::vector<std::string>& names() const noexcept { return tables_.names; }

  bool contains(Element a) const noexcept { return a.id() < size(); }

  bool leq(Element a, Element b) const { return tables_.leq[check(a)][check(b)]; }
  Element join(Element a, Element b) const { return Element(tables_.join[check(a)][check(b)]); }
  Element meet(Element a, Element b) const { return Element(tables_.meet[check(a)][check(b)]); }
  Element ortho(Element a) const { return Element(tables_.ortho[check(a)]); }

  /// Evaluates a defined connective through its expansion into the tables.
  Element connective(ConnectiveKind kind, Element a, Element b) const;

  /// a = (a ^ b) v (a ^ b').
  bool commutes(Element a, Element b) const;
  /// a == ((a ^ b) v (a ^ b')) = 1.
  bool weakly_commutes(Element a, Element b) const;
  /// C(a,b) = (a ^ b) v (a ^ b') v (a' ^ b) v (a' ^ b').
  Element commutator(Element a, Element b) const;

  /// Hasse cover pairs (lower, upper), derived from `leq`.
  std::vector<std::pair<Element, Element>> covers() const;

  const LatticeTables& tables() const noexcept { return tables_; }

 private:
  std::size_t check(Element a) const {
    if (a.id() >= size()) throw DomainError("element id " + std::to_string(a.id()) + " not in lattice " + name());
    return a.id();
  }

  LatticeTables tables_;
};

enum class OrderOp { Leq, Join, Meet, Ortho };

/// Result of `order_query`: `leq` yields a boolean, the others an element.
struct OrderAnswer {
  std::optional<bool> truth;
  std::optional<Element> element;
};

/// Table lookup by operation tag. `b` is ignored for `Ortho` and required
/// otherwise (`PreconditionError` if missing).
OrderAnswer order_query(const OrthoLattice& lattice, OrderOp op, Element a, std::optional<Element> b = {});

/// Outcome of one axiom family over all element tuples.
struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<Element> witness;  // first failing tuple, empty if passed
};

struct VerificationReport {
  std::vector<AxiomCheck> checks;

  bool ok() const;
  /// First failing check, if any.
  const AxiomCheck* first_failure() const;
};

/// Checks commutativity, associativity, involution, the complement bound,
/// absorption and the De Morgan coupling on every tuple, plus consistency of
/// 0/1 with a v a' and a ^ a' and of the order with meet and join.
VerificationReport verify_ortholattice(const OrthoLattice& lattice);

}  // namespace orthokit
