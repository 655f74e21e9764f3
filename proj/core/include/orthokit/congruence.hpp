#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthokit/proof.hpp"
#include "orthokit/wff.hpp"

namespace orthokit {

/// Lattice whose valuations refine provable equivalence, hypotheses and logic.
struct RefinementSpec {
  OrthoLattice lattice;
  std::vector<Wff> gamma;
  LogicKind logic = LogicKind::QL;
};

/// Builds a spec after checking that the lattice is a proper WOML (QL) or a
/// proper WDOL (CL); throws `PreconditionError` otherwise.
RefinementSpec make_refinement(OrthoLattice lattice, std::vector<Wff> gamma, LogicKind logic,
                               const SearchOptions& options = {});

struct Equivalent {};
struct Separated {
  Valuation valuation;
  Element a_value;
  Element b_value;
};
using RefinementVerdict = std::variant<Equivalent, Separated>;

/// Every valuation sending all of gamma to 1 gives a and b the same value.
/// `prop_universe` adds p0..p(n-1) to the quantified props, which must not
/// change the verdict.
RefinementVerdict refinement_equiv(const RefinementSpec& spec, const Wff& a, const Wff& b,
                                   const SearchOptions& options = {}, unsigned prop_universe = 0);

struct Congruent {};
struct NotCongruent {
  std::optional<Rejected> derivation;   // set when the certificate was rejected
  std::optional<Separated> refinement;  // set when the valuations separate a and b

  std::string reason() const;
};
using CongruenceVerdict = std::variant<Congruent, NotCongruent>;

/// The wff a certificate must conclude: a <=> b for QL, a <=>0 b for CL.
Wff congruence_goal(LogicKind logic, const Wff& a, const Wff& b);

/// Both conjuncts: the certificate is an accepted derivation of the goal
/// from the spec's gamma, and the refinement quantifier holds. Throws
/// `PreconditionError` when the certificate is for another logic, another
/// gamma, or ends in another wff.
CongruenceVerdict congruent(const RefinementSpec& spec, const Wff& a, const Wff& b, const Derivation& certificate,
                            const SearchOptions& options = {});

struct CompatibilitySample {
  Wff a;
  Wff b;
  Wff c;
  std::optional<Derivation> certificate;  // without one only the refinement conjunct is used
};

struct CompatibilityEntry {
  std::size_t sample;
  bool related = false;      // congruent, or equivalent when no certificate
  bool negation = true;      // ~a and ~b stay equivalent
  bool disjunction = true;   // a V c and b V c stay equivalent
};

struct CompatibilityReport {
  std::vector<CompatibilityEntry> entries;

  bool ok() const;
};

CompatibilityReport congruence_compatibility_check(const RefinementSpec& spec,
                                                   const std::vector<CompatibilitySample>& samples,
                                                   const SearchOptions& options = {});

struct OrthomodularityWitness {
  Wff a;    // p0
  Wff b;    // p1
  Wff lhs;  // a V b
  Wff rhs;  // a V (~a & (a V b))
  Valuation valuation;
  Element lhs_value;
  Element rhs_value;
};

/// First valuation separating p0 V p1 from p0 V (~p0 & (p0 V p1)), or none
/// when the lattice satisfies the orthomodular law.
std::optional<OrthomodularityWitness> orthomodularity_witness(const OrthoLattice& lattice,
                                                               const SearchOptions& options = {});

}  // namespace orthokit
