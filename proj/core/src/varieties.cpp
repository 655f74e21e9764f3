#include "orthokit/varieties.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <fstream>
#include <sstream>

namespace orthokit {

namespace {

constexpr std::string_view kCatalog = R"(# weakly orthomodular and orthomodular laws
WOML        : (a' ^ (a v b)) v b' v (a ^ b) = 1                 : weakly orthomodular law
woml2b      : (a ->2 b)' v (a ->1 b) = 1                        : WOML law via Dishkant and Sasaki hooks
woml2c      : (a ->1 b)' v (a ->2 b) = 1                        : WOML law via Sasaki and Dishkant hooks, swapped
woml3       : (a v (b ^ (a' v b'))) == (a v b) = 1              : WOML as the equivalence image of oml3
woml4       : a ->1 b = 1 => a ->2 b = 1                        : WOML as a Sasaki-to-Dishkant inference
OML         : a v (a' ^ (a v b)) = a v b                        : orthomodular law, equational form
OMLinf      : a == b = 1 => a = b                               : orthomodular law, inference form
oml3        : a v (b ^ (a' v b')) = a v b                       : orthomodular law, variant whose equivalence image is WOML
eqsasaki    : a == b = (a ->1 b) ^ (b ->1 a)                    : quantum equivalence as a two-way Sasaki hook (holds in OML)
# conditions that hold in every WOML
eqid        : a == a = 1                                        : reflexivity of ==
eqcom       : a == b = 1 => b == a = 1                          : symmetry of ==
eqnot       : a == b = 1 => a' == b' = 1                        : == respects complement
eqcup       : a == b = 1 => (a v c) == (b v c) = 1              : == respects join
eqcap       : a == b = 1 => (a ^ c) == (b ^ c) = 1              : == respects meet
eqtrans     : a == b = 1 & b == c = 1 => a == c = 1             : transitivity of ==
aubsim      : (a v b) == (b v a) = 1                            : commutativity under ==
assocsim    : ((a v b) v c) == (a v (b v c)) = 1                : associativity under ==
notnotsim   : a'' == a = 1                                      : involution under ==
onesim      : (a v (b v b')) == (b v b') = 1                    : top absorption under ==
absorbsim   : (a v (a ^ b)) == a = 1                            : absorption under ==
demorgansim : (a ^ b) == (a' v b')' = 1                         : De Morgan coupling under ==
oml2asim    : (a v (a' ^ (a v b))) == (a v b) = 1               : orthomodular law under ==
comcom0     : a == ((a ^ b) v (a ^ b')) = a ==0 ((a ^ b) v (a ^ b')) : weak commutation agrees for == and ==0
eq1         : a = 1 <=> a == 1 = 1                              : a = 1 iff a == 1 = 1
eq01        : a = 1 <=> a ==0 1 = 1                             : a = 1 iff a ==0 1 = 1
# weakly distributive and distributive laws
WDOL        : (a == b) v (a == b') = 1                          : weakly distributive law
commens     : (a ^ b) v (a ^ b') v (a' ^ b) v (a' ^ b') = 1     : commensurability, C(a,b) = 1
wdol2       : (a ^ (b v c)) ==0 ((a ^ b) v (a ^ c)) = 1         : weak distributive law with ==0
wdol3       : (a ^ (b v c)) == ((a ^ b) v (a ^ c)) = 1          : weak distributive law with ==
wdol5       : a == ((a ^ b) v (a ^ b')) = 1                     : every pair weakly commutes
wdol6       : a ==0 ((a ^ b) v (a ^ b')) = 1                    : weak commutation with ==0
wdol4       : a ==0 b = 1 => (a v c) ==0 (b v c) = 1            : ==0 respects join
eqeq0       : a ==0 b = 1 <=> a == b = 1                        : ==0 and == agree on the value 1
BA          : a ^ (b v c) = (a ^ b) v (a ^ c)                   : distributive law
# between WOML and OML
WOMLi       : (a==b) ^ ((b==c) v (a==c)) = ((a==b)^(b==c)) v ((a==b)^(a==c)) : ==-distributivity; holds in OML but not in every WOML
)";

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Law parse_law_line(std::string_view line, std::size_t line_number) {
  const auto first = line.find(':');
  const auto second = first == std::string_view::npos ? first : line.find(':', first + 1);
  if (second == std::string_view::npos)
    throw ParseError("expected 'name : body : citation'", 0, line_number);
  Law law;
  law.name = trim(line.substr(0, first));
  law.source = trim(line.substr(first + 1, second - first - 1));
  law.citation = trim(line.substr(second + 1));
  if (law.name.empty()) throw ParseError("empty law name", 0, line_number);
  try {
    law.body = parse_conditions(law.source);
  } catch (const ParseError& e) {
    if (line_number == 0) throw;
    throw ParseError("law '" + law.name + "': " + e.what(), e.position(), line_number);
  }
  return law;
}

std::vector<Law> parse_law_catalog(std::string_view text) {
  std::vector<Law> laws;
  std::size_t line_number = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    Law law = parse_law_line(line, line_number);
    if (std::any_of(laws.begin(), laws.end(), [&](const Law& l) { return l.name == law.name; }))
      throw ParseError("duplicate law name '" + law.name + "'", 0, line_number);
    laws.push_back(std::move(law));
  }
  return laws;
}

std::vector<Law> load_law_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open law file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_law_catalog(ss.str());
}

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = parse_law_catalog(kCatalog);
  return catalog;
}

const Law& find_law(std::string_view name) {
  for (const auto& law : law_catalog())
    if (law.name == name) return law;
  throw UnknownName("unknown law '" + std::string(name) + "'");
}

const std::vector<std::string>& family_laws(LawFamily family) {
  static const std::vector<std::string> woml{"WOML", "woml2b", "woml2c", "woml3", "woml4"};
  static const std::vector<std::string> wdol{"WDOL", "wdol2", "wdol3", "wdol5", "wdol6", "wdol4", "commens"};
  static const std::vector<std::string> oml{"OML", "OMLinf", "oml3"};
  switch (family) {
    case LawFamily::WOML: return woml;
    case LawFamily::WDOL: return wdol;
    case LawFamily::OML: return oml;
  }
  return woml;
}

std::string_view family_name(LawFamily family) {
  switch (family) {
    case LawFamily::WOML: return "WOML";
    case LawFamily::WDOL: return "WDOL";
    case LawFamily::OML: return "OML";
  }
  return "?";
}

const std::vector<std::string>& woml_consequence_laws() {
  static const std::vector<std::string> names{
      "eqid",     "eqcom",     "eqnot",    "eqcup",       "eqcap",    "eqtrans",  "aubsim", "assocsim",
      "notnotsim", "onesim",   "absorbsim", "demorgansim", "oml2asim", "comcom0", "eq1",    "eq01"};
  return names;
}

CheckResult check_law(const OrthoLattice& lattice, const Law& law, const SearchOptions& options) {
  return check_conditions(lattice, law.body, options);
}

CheckResult check_law(const OrthoLattice& lattice, std::string_view law_name, const SearchOptions& options) {
  return check_law(lattice, find_law(law_name), options);
}

void check_hierarchy(const VarietyProfile& p) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw ConsistencyError("lattice " + p.lattice + " breaks the class hierarchy: " + what);
  };
  require(!p.is_WOML || p.is_OL, "WOML without OL");
  require(!p.is_WDOL || p.is_WOML, "WDOL without WOML");
  require(!p.is_OML || p.is_WOMLi, "OML without WOMLi");
  require(!p.is_WOMLi || p.is_WOML, "WOMLi without WOML");
  require(!p.is_BA || (p.is_OML && p.is_WDOL), "BA without OML and WDOL");
}

VarietyProfile classify(const OrthoLattice& lattice, const SearchOptions& options) {
  VarietyProfile p;
  p.lattice = lattice.name();
  p.is_OL = verify_ortholattice(lattice).ok();

  auto run = [&](const char* law) {
    auto r = check_law(lattice, law, options);
    if (!r.holds()) p.witnesses.emplace(law, *r.counterexample);
    return r.holds();
  };
  p.is_WOML = p.is_OL && run("WOML");
  p.is_OML = p.is_OL && run("OML");
  p.is_WDOL = p.is_OL && run("WDOL");
  p.is_BA = p.is_OL && run("BA");
  const bool eq68 = p.is_OL && run("WOMLi");
  p.is_WOMLi = p.is_WOML && eq68;
  check_hierarchy(p);
  return p;
}

CrossValidation cross_validate_equivalents(const OrthoLattice& lattice, LawFamily family,
                                           const SearchOptions& options) {
  CrossValidation cv;
  cv.family = family;
  for (const auto& name : family_laws(family)) cv.verdicts.push_back({name, check_law(lattice, name, options)});
  cv.holds = cv.verdicts.front().result.holds();
  cv.agree = std::all_of(cv.verdicts.begin(), cv.verdicts.end(),
                         [&](const FormulationVerdict& v) { return v.result.holds() == cv.holds; });
  return cv;
}

DistributivityResult conditional_distributivity(const OrthoLattice& L, DistributivityMode mode,
                                                const SearchOptions& options) {
  DistributivityResult result;
  const bool strong = mode == DistributivityMode::FH;
  const char* required = strong ? "OML" : "WOML";
  if (!check_law(L, required, options).holds())
    result.warning = std::string("lattice ") + L.name() + " is not a " + required +
                     "; the theorem does not apply";

  const Element one = L.top();
  auto related = [&](Element x, Element y) { return strong ? L.commutes(x, y) : L.commutator(x, y) == one; };
  auto counted = std::make_shared<std::atomic<std::size_t>>(0);
  auto violates = [&L, &related, strong, one, counted](std::span<const Element> v) {
    const Element a = v[0], b = v[1], c = v[2];
    const int conditions = int(related(a, b)) + int(related(a, c)) + int(related(b, c));
    if (conditions < 2) return false;
    counted->fetch_add(1, std::memory_order_relaxed);
    const Element lhs = L.meet(a, L.join(b, c));
    const Element rhs = L.join(L.meet(a, b), L.meet(a, c));
    return strong ? lhs != rhs : L.connective(ConnectiveKind::QuantumEquiv, lhs, rhs) != one;
  };
  result.counterexample = find_first_assignment(L.size(), 3, options, violates);
  result.triples_checked = counted->load();
  return result;
}

}  // namespace orthokit
