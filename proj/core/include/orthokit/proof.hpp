#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "orthokit/term.hpp"
#include "orthokit/wff.hpp"

namespace orthokit {

enum class LogicKind { QL, CL };

std::string_view logic_name(LogicKind logic);
LogicKind parse_logic(std::string_view name);

/// Hilbert system in schemata form with modus ponens as its only rule.
struct AxiomSystem {
  LogicKind logic;
  std::vector<Wff> axioms;       // A1, A2, ... in order
  WffConnective mp_connective;   // Imp3 for QL, Imp0 for CL

  std::string_view name() const { return logic_name(logic); }
  /// "A<i>", 1-based.
  const Wff& axiom(std::size_t number) const;
};

/// Quantum logic: A1-A15 with MP via =>3.
const AxiomSystem& quantum_logic();
/// Classical logic: A1-A4 with MP via =>0.
const AxiomSystem& classical_logic();
const AxiomSystem& axiom_system(LogicKind logic);

struct AxiomRef {
  std::size_t number;                       // 1-based axiom number
  std::optional<Substitution> substitution;  // checked when given, inferred otherwise
};
struct HypRef {
  std::size_t index;  // into gamma
};
struct ModusPonens {
  std::size_t minor;  // step proving A
  std::size_t major;  // step proving A => B
};
using Justification = std::variant<AxiomRef, HypRef, ModusPonens>;

struct Step {
  Wff wff;
  Justification why;
};

struct Derivation {
  LogicKind logic = LogicKind::QL;
  std::vector<Wff> gamma;
  std::vector<Step> steps;

  /// Wff of the final step; throws `DomainError` when there are no steps.
  const Wff& conclusion() const;
};

/// Text format:
///   system QL|CL
///   hyp <wff>                           (zero or more)
///   <k>. <wff> ; axiom A<i> | hyp <j> | mp <a> <b>
/// Steps and hypotheses are numbered from 0; `mp a b` cites the minor
/// premise a and the major premise b. `#` starts a comment.
Derivation parse_derivation(std::string_view text);
Derivation load_derivation(const std::string& path);
std::string format_derivation(const Derivation& d);

struct Accepted {};
struct Rejected {
  std::size_t step;
  std::string reason;
};
using DerivationVerdict = std::variant<Accepted, Rejected>;

inline bool accepted(const DerivationVerdict& v) { return std::holds_alternative<Accepted>(v); }

/// Validates every step against the system of `d.logic`.
DerivationVerdict check_derivation(const Derivation& d);
DerivationVerdict check_derivation(const AxiomSystem& system, const Derivation& d);

struct AxiomVerdict {
  std::string name;  // "A<i>"
  Wff instance;      // schema with A, B, C, ... replaced by p0, p1, p2, ...
  WffCheck result;
};

struct SoundnessReport {
  std::string system;
  std::string lattice;
  std::vector<AxiomVerdict> axioms;
  Inference mp_condition;
  CheckResult mp;

  bool ok() const;
};

/// Every axiom valid and MP value preserving on the lattice.
SoundnessReport soundness_suite(const AxiomSystem& system, const OrthoLattice& lattice,
                                const SearchOptions& options = {});

/// Schema with metavariable i replaced by prop p<i>.
Wff schema_instance(const Wff& schema);

}  // namespace orthokit
