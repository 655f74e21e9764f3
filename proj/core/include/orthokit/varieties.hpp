#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orthokit/lattice.hpp"
#include "orthokit/search.hpp"
#include "orthokit/term.hpp"

namespace orthokit {

/// A named equational law or conditional; biconditionals carry both
/// directions as separate conditions.
struct Law {
  std::string name;
  std::string source;  // body as written
  std::vector<Inference> body;
  std::string citation;

  bool is_equation() const { return body.size() == 1 && body.front().hypotheses.empty(); }
};

/// Parses one catalog line `name : body : citation`.
Law parse_law_line(std::string_view line, std::size_t line_number = 0);
/// One law per line; blank lines and `#` comments are skipped.
std::vector<Law> parse_law_catalog(std::string_view text);
std::vector<Law> load_law_catalog(const std::string& path);

/// The built-in catalog.
const std::vector<Law>& law_catalog();
/// Throws `UnknownName`.
const Law& find_law(std::string_view name);

/// Alternative formulations of one class, all equivalent over OL.
enum class LawFamily { WOML, WDOL, OML };
const std::vector<std::string>& family_laws(LawFamily family);
std::string_view family_name(LawFamily family);
/// The sixteen conditions that hold in every WOML.
const std::vector<std::string>& woml_consequence_laws();

CheckResult check_law(const OrthoLattice& lattice, const Law& law, const SearchOptions& options = {});
CheckResult check_law(const OrthoLattice& lattice, std::string_view law_name, const SearchOptions& options = {});

struct VarietyProfile {
  std::string lattice;
  bool is_OL = false;
  bool is_WOML = false;
  bool is_WOMLi = false;
  bool is_OML = false;
  bool is_WDOL = false;
  bool is_BA = false;

  bool proper_WOML() const { return is_WOML && !is_OML; }
  bool proper_WDOL() const { return is_WDOL && !is_BA; }
  bool proper_WOMLi() const { return is_WOMLi && !is_OML; }
  bool in_WOML_minus_WOMLi() const { return is_WOML && !is_WOMLi; }

  /// Counterexample for each failed defining law, keyed by law name.
  std::map<std::string, Counterexample> witnesses;
};

/// Membership in OL, WOML, WOMLi, OML, WDOL and BA. Throws
/// `ConsistencyError` if the verdicts break the inclusion hierarchy.
VarietyProfile classify(const OrthoLattice& lattice, const SearchOptions& options = {});

/// Throws `ConsistencyError` when `profile` breaks an inclusion.
void check_hierarchy(const VarietyProfile& profile);

struct FormulationVerdict {
  std::string law;
  CheckResult result;
};

struct CrossValidation {
  LawFamily family;
  bool agree = true;
  bool holds = false;  // common verdict when `agree`
  std::vector<FormulationVerdict> verdicts;
};

CrossValidation cross_validate_equivalents(const OrthoLattice& lattice, LawFamily family,
                                           const SearchOptions& options = {});

enum class DistributivityMode {
  FH,   // two of aCb, aCc, bCc imply a ^ (b v c) = (a ^ b) v (a ^ c)
  wFH,  // two of C(a,b)=1, C(a,c)=1, C(b,c)=1 imply the weak distributive law
};

struct DistributivityResult {
  std::optional<std::vector<Element>> counterexample;  // (a, b, c)
  /// Set when the lattice lies outside the class the theorem is stated for.
  std::optional<std::string> warning;
  std::size_t triples_checked = 0;

  bool holds() const { return !counterexample.has_value(); }
};

DistributivityResult conditional_distributivity(const OrthoLattice& lattice, DistributivityMode mode,
                                                const SearchOptions& options = {});

}  // namespace orthokit
