#include "orthokit/proof.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "orthokit/error.hpp"

namespace orthokit {

std::string_view logic_name(LogicKind logic) { return logic == LogicKind::QL ? "QL" : "CL"; }

LogicKind parse_logic(std::string_view name) {
  if (name == "QL") return LogicKind::QL;
  if (name == "CL") return LogicKind::CL;
  throw UnknownName("unknown logic '" + std::string(name) + "' (expected QL or CL)");
}

const Wff& AxiomSystem::axiom(std::size_t number) const {
  if (number == 0 || number > axioms.size())
    throw UnknownName(std::string(name()) + " has no axiom A" + std::to_string(number));
  return axioms[number - 1];
}

namespace {

AxiomSystem build(LogicKind logic, std::initializer_list<std::string_view> schemata, WffConnective mp) {
  AxiomSystem s{logic, {}, mp};
  for (auto text : schemata) s.axioms.push_back(parse_schema(text));
  return s;
}

}  // namespace

const AxiomSystem& quantum_logic() {
  static const AxiomSystem ql = build(LogicKind::QL,
                                      {
                                          "A <=> A",
                                          "A <=> B =>0 (B <=> C =>0 A <=> C)",
                                          "A <=> B =>0 ~A <=> ~B",
                                          "A <=> B =>0 A & C <=> B & C",
                                          "A & B <=> B & A",
                                          "A & (B & C) <=> (A & B) & C",
                                          "A & (A V B) <=> A",
                                          "~A & A <=> (~A & A) & B",
                                          "A <=> ~~A",
                                          "~(A V B) <=> ~A & ~B",
                                          "A V (~A & (A V B)) <=> A V B",
                                          "(A <=> B) <=> (B <=> A)",
                                          "A <=> B =>0 (A =>0 B)",
                                          "(A =>0 B) =>3 (A =>3 (A =>3 B))",
                                          "(A =>3 B) =>0 (A =>0 B)",
                                      },
                                      WffConnective::Imp3);
  return ql;
}

const AxiomSystem& classical_logic() {
  static const AxiomSystem cl = build(LogicKind::CL,
                                      {
                                          "A V A =>0 A",
                                          "A =>0 A V B",
                                          "A V B =>0 B V A",
                                          "(A =>0 B) =>0 (C V A =>0 C V B)",
                                      },
                                      WffConnective::Imp0);
  return cl;
}

const AxiomSystem& axiom_system(LogicKind logic) {
  return logic == LogicKind::QL ? quantum_logic() : classical_logic();
}

const Wff& Derivation::conclusion() const {
  if (steps.empty()) throw DomainError("derivation has no steps");
  return steps.back().wff;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::size_t number(std::string_view s, std::size_t line, std::string_view what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError("expected " + std::string(what) + ", got '" + std::string(s) + "'", 0, line);
  return v;
}

Wff wff_at(std::string_view text, std::size_t line) {
  try {
    return parse_wff(text);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), e.position(), line);
  }
}

}  // namespace

Derivation parse_derivation(std::string_view text) {
  Derivation d;
  bool have_system = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    if (!have_system) {
      const auto w = words(s);
      if (w.size() != 2 || w[0] != "system") throw ParseError("expected 'system QL|CL' header", 0, line);
      try {
        d.logic = parse_logic(w[1]);
      } catch (const UnknownName& e) {
        throw ParseError(e.what(), 0, line);
      }
      have_system = true;
      continue;
    }
    if (s.rfind("hyp ", 0) == 0 && s.find(';') == std::string::npos) {
      if (!d.steps.empty()) throw ParseError("hypotheses must precede the steps", 0, line);
      d.gamma.push_back(wff_at(s.substr(4), line));
      continue;
    }
    const auto dot = s.find('.');
    const auto semi = s.find(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      throw ParseError("expected '<k>. <wff> ; <justification>'", 0, line);
    const std::size_t k = number(trim(s.substr(0, dot)), line, "step number");
    if (k != d.steps.size())
      throw ParseError("step number " + std::to_string(k) + " out of sequence (expected " +
                           std::to_string(d.steps.size()) + ")",
                       0, line);
    Wff w = wff_at(s.substr(dot + 1, semi - dot - 1), line);
    const auto j = words(s.substr(semi + 1));
    if (j.empty()) throw ParseError("missing justification", 0, line);
    Justification why;
    if (j[0] == "axiom" && j.size() == 2 && j[1].size() > 1 && j[1][0] == 'A') {
      why = AxiomRef{number(std::string_view(j[1]).substr(1), line, "axiom number"), std::nullopt};
    } else if (j[0] == "hyp" && j.size() == 2) {
      why = HypRef{number(j[1], line, "hypothesis index")};
    } else if (j[0] == "mp" && j.size() == 3) {
      why = ModusPonens{number(j[1], line, "step index"), number(j[2], line, "step index")};
    } else {
      throw ParseError("unknown justification '" + trim(s.substr(semi + 1)) + "'", 0, line);
    }
    d.steps.push_back({std::move(w), why});
  }
  if (!have_system) throw ParseError("empty derivation file (missing 'system' header)", 0, line);
  return d;
}

Derivation load_derivation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open derivation file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_derivation(buf.str());
}

std::string format_derivation(const Derivation& d) {
  std::string out = "system " + std::string(logic_name(d.logic)) + "\n";
  for (const auto& g : d.gamma) out += "hyp " + to_string(g) + "\n";
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    const auto& step = d.steps[k];
    out += std::to_string(k) + ". " + to_string(step.wff) + " ; ";
    if (const auto* a = std::get_if<AxiomRef>(&step.why)) {
      out += "axiom A" + std::to_string(a->number);
    } else if (const auto* h = std::get_if<HypRef>(&step.why)) {
      out += "hyp " + std::to_string(h->index);
    } else {
      const auto& mp = std::get<ModusPonens>(step.why);
      out += "mp " + std::to_string(mp.minor) + " " + std::to_string(mp.major);
    }
    out += "\n";
  }
  return out;
}

namespace {

std::optional<std::string> check_step(const AxiomSystem& sys, const Derivation& d, std::size_t k,
                                      const std::vector<Wff>& expanded) {
  const Step& step = d.steps[k];
  if (const auto* a = std::get_if<AxiomRef>(&step.why)) {
    if (a->number == 0 || a->number > sys.axioms.size())
      return std::string(sys.name()) + " has no axiom A" + std::to_string(a->number);
    const Wff& schema = sys.axioms[a->number - 1];
    if (a->substitution) {
      for (auto m : metavariables(schema))
        if (!a->substitution->contains(m)) return "substitution misses a metavariable of A" + std::to_string(a->number);
      if (expand_wff(instantiate(schema, *a->substitution)) != expanded[k])
        return "not the given instance of A" + std::to_string(a->number);
      return std::nullopt;
    }
    if (match_schema(step.wff, schema) || match_schema(expanded[k], expand_wff(schema))) return std::nullopt;
    return "not an instance of A" + std::to_string(a->number);
  }
  if (const auto* h = std::get_if<HypRef>(&step.why)) {
    if (h->index >= d.gamma.size()) return "hypothesis index " + std::to_string(h->index) + " out of range";
    if (expand_wff(d.gamma[h->index]) != expanded[k]) return "does not match hypothesis " + std::to_string(h->index);
    return std::nullopt;
  }
  const auto& mp = std::get<ModusPonens>(step.why);
  if (mp.minor >= k || mp.major >= k) return "modus ponens cites a step that is not earlier";
  static const Wff imp3 = expand_wff(parse_schema("A =>3 B"));
  static const Wff imp0 = expand_wff(parse_schema("A =>0 B"));
  const Wff& shape = sys.mp_connective == WffConnective::Imp3 ? imp3 : imp0;
  const auto sigma = match_schema(expanded[mp.major], shape);
  if (!sigma) return "major premise shape";
  if (sigma->at(0) != expanded[mp.minor]) return "minor premise mismatch";
  if (sigma->at(1) != expanded[k]) return "conclusion mismatch";
  return std::nullopt;
}

}  // namespace

DerivationVerdict check_derivation(const AxiomSystem& system, const Derivation& d) {
  if (system.logic != d.logic)
    return Rejected{0, "derivation is for " + std::string(logic_name(d.logic)) + ", not " + std::string(system.name())};
  if (d.steps.empty()) return Rejected{0, "empty derivation"};
  std::vector<Wff> expanded;
  expanded.reserve(d.steps.size());
  for (std::size_t k = 0; k < d.steps.size(); ++k) {
    expanded.push_back(expand_wff(d.steps[k].wff));
    if (auto reason = check_step(system, d, k, expanded)) return Rejected{k, *reason};
  }
  return Accepted{};
}

DerivationVerdict check_derivation(const Derivation& d) { return check_derivation(axiom_system(d.logic), d); }

Wff schema_instance(const Wff& schema) {
  Substitution s;
  for (auto m : metavariables(schema)) s.emplace(m, Wff::prop(m));
  return instantiate(schema, s);
}

bool SoundnessReport::ok() const {
  for (const auto& a : axioms)
    if (!a.result.holds()) return false;
  return mp.holds();
}

SoundnessReport soundness_suite(const AxiomSystem& system, const OrthoLattice& lattice, const SearchOptions& options) {
  SoundnessReport r{std::string(system.name()), lattice.name(), {},
                    parse_inference(system.logic == LogicKind::QL ? "a = 1 & a ->3 b = 1 => b = 1"
                                                                  : "a = 1 & a' v b = 1 => b = 1"),
                    {}};
  for (std::size_t i = 0; i < system.axioms.size(); ++i) {
    Wff inst = schema_instance(system.axioms[i]);
    WffCheck res = check_validity(lattice, inst, options);
    r.axioms.push_back({"A" + std::to_string(i + 1), std::move(inst), std::move(res)});
  }
  r.mp = check_inference(lattice, r.mp_condition, options);
  return r;
}

}  // namespace orthokit
