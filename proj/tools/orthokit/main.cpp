#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orthokit/catalog.hpp"
#include "orthokit/claims.hpp"
#include "orthokit/congruence.hpp"
#include "orthokit/error.hpp"
#include "orthokit/proof.hpp"
#include "orthokit/varieties.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace orthokit;

enum Exit { kHolds = 0, kFails = 1, kUsage = 2 };

// One run's output. Text lines and the JSON document are filled side by
// side from the same values.
struct Report {
  json doc = json::object();
  std::vector<std::string> lines;
  int code = kHolds;

  void line(std::string s) { lines.push_back(std::move(s)); }
};

struct Globals {
  std::uint64_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::string format = "text";

  SearchOptions options() const {
    SearchOptions o;
    o.budget = budget;
    o.workers = jobs;
    return o;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// One wff per line; blank lines and `#` comments are skipped.
std::vector<Wff> load_gamma(const std::string& path) {
  std::vector<Wff> out;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_wff(line));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), e.position(), n);
    }
  }
  return out;
}

json assignment_json(const OrthoLattice& L, const std::vector<std::string>& names, const std::vector<Element>& values) {
  json j = json::object();
  for (std::size_t i = 0; i < names.size(); ++i) j[names[i]] = L.name_of(values[i]);
  return j;
}

json valuation_json(const OrthoLattice& L, const Valuation& v) {
  json j = json::object();
  for (std::size_t i = 0; i < v.props().size(); ++i) j["p" + std::to_string(v.props()[i])] = L.name_of(v.values()[i]);
  return j;
}

void report_check(Report& r, const OrthoLattice& L, const CheckResult& res, const std::string& what) {
  r.doc["verdict"] = res.holds() ? "holds" : "counterexample";
  if (res.holds()) {
    r.line(what + " holds on " + L.name());
    return;
  }
  const auto& ce = *res.counterexample;
  r.code = kFails;
  r.doc["witness"] = assignment_json(L, ce.assignment.names(), ce.assignment.values());
  r.doc["lhs"] = L.name_of(ce.lhs);
  r.doc["rhs"] = L.name_of(ce.rhs);
  r.doc["condition"] = ce.condition;
  r.line(what + " fails on " + L.name());
  r.line("witness " + ce.assignment.format(L));
  r.line("conclusion evaluates to " + L.name_of(ce.lhs) + " = " + L.name_of(ce.rhs));
}

void report_wff_check(Report& r, const OrthoLattice& L, const WffCheck& res, const std::string& what) {
  r.doc["verdict"] = res.holds() ? "holds" : "counterexample";
  if (res.holds()) {
    r.line(what + " holds on " + L.name());
    return;
  }
  r.code = kFails;
  r.doc["witness"] = valuation_json(L, res.counterexample->valuation);
  r.doc["value"] = L.name_of(res.counterexample->value);
  r.line(what + " fails on " + L.name());
  r.line("witness " + res.counterexample->valuation.format(L) + " value " + L.name_of(res.counterexample->value));
}

std::string mark(bool b) { return b ? "✓" : "✗"; }

void cmd_lattice_verify(Report& r, const std::string& spec) {
  r.doc["lattice"] = spec;
  std::optional<OrthoLattice> built;
  try {
    built = resolve_lattice(spec);
  } catch (const LatticeError& e) {
    r.code = kFails;
    r.doc["verdict"] = "invalid";
    r.doc["error"] = lattice_error_name(e.kind());
    r.doc["message"] = e.what();
    r.line(std::string("invalid: ") + e.what());
    return;
  }
  const OrthoLattice& L = *built;
  const VerificationReport rep = verify_ortholattice(L);
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json j{{"axiom", c.name}, {"passed", c.passed}};
    std::string w;
    for (auto e : c.witness) w += (w.empty() ? "" : " ") + L.name_of(e);
    if (!c.passed) j["witness"] = w;
    checks.push_back(j);
    r.line(mark(c.passed) + " " + c.name + (c.passed ? "" : "  at " + w));
  }
  r.doc["checks"] = checks;
  r.doc["verdict"] = rep.ok() ? "ortholattice" : "not an ortholattice";
  r.line(rep.ok() ? L.name() + " is an ortholattice" : L.name() + " is not an ortholattice");
  if (!rep.ok()) r.code = kFails;
}

void cmd_lattice_show(Report& r, const std::string& spec) {
  const OrthoLattice L = resolve_lattice(spec);
  const std::string text = format_lattice(L);
  r.doc["lattice"] = L.name();
  r.doc["size"] = L.size();
  r.doc["text"] = text;
  json ortho = json::object();
  for (auto e : L.elements()) ortho[L.name_of(e)] = L.name_of(L.ortho(e));
  r.doc["ortho"] = ortho;
  std::istringstream in(text);
  for (std::string s; std::getline(in, s);) r.line(s);
}

void cmd_classify(Report& r, const std::string& spec, const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  const VarietyProfile p = classify(L, g.options());
  r.doc["lattice"] = L.name();
  const std::pair<const char*, bool> cls[] = {{"OL", p.is_OL},     {"WOML", p.is_WOML}, {"WOMLi", p.is_WOMLi},
                                              {"WDOL", p.is_WDOL}, {"OML", p.is_OML},   {"BA", p.is_BA}};
  json profile = json::object();
  std::string line;
  for (const auto& [name, in] : cls) {
    profile[name] = in;
    if (std::string(name) == "OL") continue;
    line += (line.empty() ? "" : " ") + std::string(name) + " " + mark(in);
  }
  r.doc["profile"] = profile;
  r.doc["proper_WOML"] = p.proper_WOML();
  r.doc["proper_WDOL"] = p.proper_WDOL();
  r.doc["WOML_minus_WOMLi"] = p.in_WOML_minus_WOMLi();
  r.line(L.name() + ": " + line);
  json wit = json::object();
  for (const auto& [law, ce] : p.witnesses) {
    wit[law] = assignment_json(L, ce.assignment.names(), ce.assignment.values());
    r.line("  " + law + " fails at " + ce.assignment.format(L));
  }
  r.doc["witnesses"] = wit;
}

void cmd_law_list(Report& r) {
  json laws = json::array();
  for (const auto& law : law_catalog()) {
    laws.push_back({{"name", law.name}, {"body", law.source}, {"description", law.citation}});
    r.line(law.name + std::string(law.name.size() < 12 ? 12 - law.name.size() : 1, ' ') + law.source + "    # " +
           law.citation);
  }
  r.doc["laws"] = laws;
}

void cmd_law_check(Report& r, const std::string& spec, const std::string& name, const std::string& catalog,
                   const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  std::vector<Law> extra;
  if (!catalog.empty()) extra = load_law_catalog(catalog);
  const Law* law = nullptr;
  for (const auto& l : extra)
    if (l.name == name) law = &l;
  if (!law) law = &find_law(name);
  r.doc["lattice"] = L.name();
  r.doc["law"] = law->name;
  r.doc["body"] = law->source;
  report_check(r, L, check_law(L, *law, g.options()), law->name);
}

void cmd_eq_check(Report& r, const std::string& spec, const std::string& term, const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  const auto conds = parse_conditions(term);
  r.doc["lattice"] = L.name();
  r.doc["term"] = term;
  report_check(r, L, check_conditions(L, conds, g.options()), "'" + term + "'");
}

void cmd_wff_valid(Report& r, const std::string& spec, const std::string& text, const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  const Wff w = parse_wff(text);
  r.doc["lattice"] = L.name();
  r.doc["wff"] = to_string(w);
  report_wff_check(r, L, check_validity(L, w, g.options()), "validity of '" + to_string(w) + "'");
}

void cmd_wff_consequence(Report& r, const std::string& spec, const std::string& gamma_path, const std::string& text,
                         const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  const auto gamma = load_gamma(gamma_path);
  const Wff w = parse_wff(text);
  r.doc["lattice"] = L.name();
  json gj = json::array();
  for (const auto& x : gamma) gj.push_back(to_string(x));
  r.doc["gamma"] = gj;
  r.doc["wff"] = to_string(w);
  report_wff_check(r, L, check_consequence(L, gamma, w, g.options()), "consequence '" + to_string(w) + "'");
}

void cmd_proof_check(Report& r, const std::string& path) {
  const Derivation d = load_derivation(path);
  const auto v = check_derivation(d);
  r.doc["file"] = path;
  r.doc["system"] = logic_name(d.logic);
  r.doc["steps"] = d.steps.size();
  if (accepted(v)) {
    r.doc["verdict"] = "accepted";
    r.line("accepted: " + std::to_string(d.steps.size()) + " steps in " + std::string(logic_name(d.logic)) +
           ", conclusion " + to_string(d.conclusion()));
    return;
  }
  const auto& rej = std::get<Rejected>(v);
  r.code = kFails;
  r.doc["verdict"] = "rejected";
  r.doc["step"] = rej.step;
  r.doc["reason"] = rej.reason;
  r.line("rejected at step " + std::to_string(rej.step) + ": " + rej.reason);
}

void cmd_congruence_check(Report& r, const std::string& spec, const std::string& gamma_path, const std::string& logic,
                          const std::string& a_text, const std::string& b_text, const std::string& cert_path,
                          const Globals& g) {
  const auto lk = parse_logic(logic);
  const auto gamma = gamma_path.empty() ? std::vector<Wff>{} : load_gamma(gamma_path);
  const RefinementSpec rs = make_refinement(resolve_lattice(spec), gamma, lk, g.options());
  const Wff a = parse_wff(a_text), b = parse_wff(b_text);
  const OrthoLattice& L = rs.lattice;
  r.doc["refinement"] = L.name();
  r.doc["logic"] = logic;
  r.doc["a"] = to_string(a);
  r.doc["b"] = to_string(b);
  auto report_separation = [&](const Separated& s) {
    r.doc["witness"] = valuation_json(L, s.valuation);
    r.doc["values"] = {L.name_of(s.a_value), L.name_of(s.b_value)};
    r.line("separated at " + s.valuation.format(L) + " with values " + L.name_of(s.a_value) + " vs " +
           L.name_of(s.b_value));
  };
  if (cert_path.empty()) {
    const auto v = refinement_equiv(rs, a, b, g.options());
    if (const auto* s = std::get_if<Separated>(&v)) {
      r.code = kFails;
      r.doc["verdict"] = "separated";
      report_separation(*s);
    } else {
      r.doc["verdict"] = "equivalent";
      r.line("equivalent under every " + L.name() + " valuation satisfying gamma");
    }
    return;
  }
  const Derivation cert = load_derivation(cert_path);
  const auto v = congruent(rs, a, b, cert, g.options());
  if (std::holds_alternative<Congruent>(v)) {
    r.doc["verdict"] = "congruent";
    r.line("congruent: certificate accepted and " + L.name() + " valuations agree");
    return;
  }
  const auto& nc = std::get<NotCongruent>(v);
  r.code = kFails;
  r.doc["verdict"] = "not congruent";
  r.doc["reason"] = nc.reason();
  r.line("not congruent (" + nc.reason() + ")");
  if (nc.derivation) {
    r.doc["rejected_step"] = nc.derivation->step;
    r.doc["rejected_reason"] = nc.derivation->reason;
    r.line("certificate rejected at step " + std::to_string(nc.derivation->step) + ": " + nc.derivation->reason);
  }
  if (nc.refinement) report_separation(*nc.refinement);
}

void cmd_congruence_witness(Report& r, const std::string& spec, const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  r.doc["lattice"] = L.name();
  const auto w = orthomodularity_witness(L, g.options());
  if (!w) {
    r.doc["verdict"] = "none";
    r.line("no witness: " + L.name() + " satisfies the orthomodular law");
    return;
  }
  r.code = kFails;
  r.doc["verdict"] = "witness";
  r.doc["lhs"] = to_string(w->lhs);
  r.doc["rhs"] = to_string(w->rhs);
  r.doc["witness"] = valuation_json(L, w->valuation);
  r.doc["values"] = {L.name_of(w->lhs_value), L.name_of(w->rhs_value)};
  r.line(to_string(w->lhs) + " vs " + to_string(w->rhs) + " separated at " + w->valuation.format(L) + " (" +
         L.name_of(w->lhs_value) + " vs " + L.name_of(w->rhs_value) + ")");
}

void cmd_soundness(Report& r, const std::string& spec, const std::string& logic, const Globals& g) {
  const OrthoLattice L = resolve_lattice(spec);
  const auto rep = soundness_suite(axiom_system(parse_logic(logic)), L, g.options());
  r.doc["lattice"] = L.name();
  r.doc["system"] = rep.system;
  json ax = json::array();
  for (const auto& a : rep.axioms) {
    json j{{"axiom", a.name}, {"instance", to_string(a.instance)}, {"valid", a.result.holds()}};
    std::string line = mark(a.result.holds()) + " " + a.name + "  " + to_string(a.instance);
    if (!a.result.holds()) {
      j["witness"] = valuation_json(L, a.result.counterexample->valuation);
      line += "  fails at " + a.result.counterexample->valuation.format(L);
    }
    ax.push_back(j);
    r.line(line);
  }
  r.doc["axioms"] = ax;
  r.doc["mp"] = rep.mp.holds();
  r.line(mark(rep.mp.holds()) + " MP  " + to_string(rep.mp_condition));
  r.doc["verdict"] = rep.ok() ? "sound" : "unsound";
  if (!rep.ok()) r.code = kFails;
}

void cmd_claims(Report& r, int filter, const Globals& g) {
  const auto results = run_claims(filter > 0 ? std::optional<int>(filter) : std::nullopt, g.options());
  json items = json::array();
  bool all = true;
  for (const auto& c : results) {
    all = all && c.passed();
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.1fs", c.seconds, c.limit);
    items.push_back({{"id", c.id},
                     {"title", c.title},
                     {"passed", c.passed()},
                     {"verdict", c.verdict},
                     {"seconds", c.seconds},
                     {"limit", c.limit},
                     {"detail", c.detail}});
    r.line(std::string(c.passed() ? "PASS" : "FAIL") + " [" + std::to_string(c.id) + "] " + c.title + " (" + timing +
           ")" + (c.detail.empty() ? "" : ": " + c.detail));
  }
  r.doc["claims"] = items;
  r.doc["verdict"] = all ? "all passed" : "failures";
  r.line(std::to_string(results.size()) + " claims, " + (all ? "all passed" : "some failed"));
  if (!all) r.code = kFails;
}

void emit(const Report& r, const Globals& g, const std::vector<std::string>& argv, double seconds) {
  if (g.format == "json") {
    json doc = json::object();
    doc["command"] = argv;
    for (const auto& [k, v] : r.doc.items()) doc[k] = v;
    doc["exit_code"] = r.code;
    doc["seconds"] = seconds;
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& l : r.lines) std::cout << l << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orthokit: finite ortholattice models of quantum and classical propositional logic"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--budget", g.budget, "maximum number of assignments per check")->capture_default_str();
  app.add_option("--jobs", g.jobs, "worker threads for assignment search")->capture_default_str();
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  Report report;
  std::function<void()> action;
  std::string lattice, law, catalog, term, wff, gamma, file, a, b, cert, logic = "QL";
  int filter = 0;

  auto* lat = app.add_subcommand("lattice", "build and inspect lattices")->require_subcommand(1);
  auto* verify = lat->add_subcommand("verify", "check the ortholattice axioms");
  verify->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  verify->callback([&] { action = [&] { cmd_lattice_verify(report, lattice); }; });
  auto* show = lat->add_subcommand("show", "print the canonical lattice file");
  show->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  show->callback([&] { action = [&] { cmd_lattice_show(report, lattice); }; });

  auto* cls = app.add_subcommand("classify", "membership in OL, WOML, WOMLi, OML, WDOL, BA");
  cls->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  cls->callback([&] { action = [&] { cmd_classify(report, lattice, g); }; });

  auto* lawc = app.add_subcommand("law", "catalog laws")->require_subcommand(1);
  lawc->add_subcommand("list", "list the law catalog")->callback([&] { action = [&] { cmd_law_list(report); }; });
  auto* lawcheck = lawc->add_subcommand("check", "check a catalog law on a lattice");
  lawcheck->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  lawcheck->add_option("--law", law, "law name")->required();
  lawcheck->add_option("--catalog", catalog, "extra law catalog file");
  lawcheck->callback([&] { action = [&] { cmd_law_check(report, lattice, law, catalog, g); }; });

  auto* eq = app.add_subcommand("eq", "ad hoc equations")->require_subcommand(1);
  auto* eqcheck = eq->add_subcommand("check", "check an equation or inference");
  eqcheck->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  eqcheck->add_option("--term", term, "equation, inference or biconditional")->required();
  eqcheck->callback([&] { action = [&] { cmd_eq_check(report, lattice, term, g); }; });

  auto* wffc = app.add_subcommand("wff", "propositional formulas")->require_subcommand(1);
  auto* valid = wffc->add_subcommand("valid", "validity in a lattice model");
  valid->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  valid->add_option("--wff", wff, "formula")->required();
  valid->callback([&] { action = [&] { cmd_wff_valid(report, lattice, wff, g); }; });
  auto* cons = wffc->add_subcommand("consequence", "semantic consequence from hypotheses");
  cons->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  cons->add_option("--gamma", gamma, "file with one hypothesis per line")->required();
  cons->add_option("--wff", wff, "formula")->required();
  cons->callback([&] { action = [&] { cmd_wff_consequence(report, lattice, gamma, wff, g); }; });
  auto* sound = wffc->add_subcommand("soundness", "axioms valid and MP value preserving");
  sound->add_option("--lattice", lattice, "built-in name or lattice file")->required();
  sound->add_option("--logic", logic, "QL or CL")->capture_default_str();
  sound->callback([&] { action = [&] { cmd_soundness(report, lattice, logic, g); }; });

  auto* proof = app.add_subcommand("proof", "derivations")->require_subcommand(1);
  auto* pcheck = proof->add_subcommand("check", "check a derivation file");
  pcheck->add_option("--file", file, "derivation file")->required();
  pcheck->callback([&] { action = [&] { cmd_proof_check(report, file); }; });

  auto* cong = app.add_subcommand("congruence", "refined provable equivalence")->require_subcommand(1);
  auto* ccheck = cong->add_subcommand("check", "refinement quantifier, plus the certificate when given");
  ccheck->add_option("--refine", lattice, "refinement lattice")->default_str("O6")->default_val("O6");
  ccheck->add_option("--gamma", gamma, "file with one hypothesis per line");
  ccheck->add_option("--logic", logic, "QL or CL")->capture_default_str();
  ccheck->add_option("--a", a, "first formula")->required();
  ccheck->add_option("--b", b, "second formula")->required();
  ccheck->add_option("--certificate", cert, "derivation of a <=> b (a <=>0 b for CL)");
  ccheck->callback([&] { action = [&] { cmd_congruence_check(report, lattice, gamma, logic, a, b, cert, g); }; });
  auto* cwit = cong->add_subcommand("witness", "orthomodularity failure of the refined quotient");
  cwit->add_option("--refine", lattice, "refinement lattice")->default_str("O6")->default_val("O6");
  cwit->callback([&] { action = [&] { cmd_congruence_witness(report, lattice, g); }; });

  auto* claims = app.add_subcommand("paper-claims", "run the reproduction suite");
  claims->add_option("--filter", filter, "run only this claim id");
  claims->callback([&] { action = [&] { cmd_claims(report, filter, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto start = std::chrono::steady_clock::now();
  auto fail = [&](const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    if (g.format == "json") std::cout << json{{"command", args}, {"error", msg}, {"exit_code", int(kUsage)}}.dump(2) << "\n";
    return int(kUsage);
  };
  try {
    action();
  } catch (const BudgetExceeded& e) {
    return fail(std::string(e.what()) + " (raise it with --budget)");
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
  emit(report, g, args, dt.count());
  return report.code;
}
