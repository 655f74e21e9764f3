#include "orthokit/claims.hpp"

#include <chrono>
#include <functional>

#include "orthokit/catalog.hpp"
#include "orthokit/congruence.hpp"
#include "orthokit/error.hpp"
#include "orthokit/generate.hpp"
#include "orthokit/proof.hpp"
#include "orthokit/samples.hpp"
#include "orthokit/varieties.hpp"

namespace orthokit {

namespace {

// Collects failed expectations; a claim passes when none were recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::string out;
    auto join = [&out](const std::vector<std::string>& v, const char* prefix) {
      for (const auto& s : v) {
        if (!out.empty()) out += "; ";
        out += prefix + s;
      }
    };
    join(failures_, "FAILED ");
    join(notes_, "");
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string witness(const OrthoLattice& L, const CheckResult& r) {
  return r.counterexample ? r.counterexample->assignment.format(L) : std::string("none");
}

void catalog_integrity(Checker& c, const SearchOptions&) {
  for (const auto& n : builtin_names()) {
    const auto report = verify_ortholattice(builtin(n));
    c.expect(report.ok(), n + " passes the ortholattice axioms");
  }
  c.note("4 lattices verified");
}

void o6_profile(Checker& c, const SearchOptions& opt) {
  const auto& L = builtin("O6");
  const auto p = classify(L, opt);
  c.expect(p.is_WOML, "O6 is WOML");
  c.expect(p.is_WDOL, "O6 is WDOL");
  c.expect(p.is_WOMLi, "O6 is WOMLi");
  c.expect(!p.is_OML, "O6 is not OML");
  c.expect(!p.is_BA, "O6 is not BA");
  const auto it = p.witnesses.find("OML");
  const std::string w = it == p.witnesses.end() ? "none" : it->second.assignment.format(L);
  c.expect(w == "a=x b=y", "OML witness is a=x b=y (got " + w + ")");
  c.note("OML witness " + w);
}

void mo2_profile(Checker& c, const SearchOptions& opt) {
  const auto& L = builtin("MO2");
  const auto p = classify(L, opt);
  c.expect(p.is_OML, "MO2 is OML");
  c.expect(p.is_WOML, "MO2 is WOML");
  c.expect(p.is_WOMLi, "MO2 is WOMLi");
  c.expect(!p.is_WDOL, "MO2 is not WDOL");
  const auto r = check_law(L, "WDOL", opt);
  c.expect(witness(L, r) == "a=x b=y", "WDOL witness is a=x b=y (got " + witness(L, r) + ")");
  if (r.counterexample) {
    c.expect(r.counterexample->lhs == L.bottom() && r.counterexample->rhs == L.top(), "WDOL evaluates to 0 = 1");
    c.note("WDOL at " + witness(L, r) + " evaluates to " + L.name_of(r.counterexample->lhs) + " = " +
           L.name_of(r.counterexample->rhs));
  }
}

void nwd10(Checker& c, const SearchOptions& opt) {
  const auto& L = builtin("NWD10");
  const auto woml = check_law(L, "WOML", opt);
  c.expect(!woml.holds(), "NWD10 fails WOML");
  if (woml.counterexample)
    c.note("WOML witness " + witness(L, woml) + " with left side " + L.name_of(woml.counterexample->lhs));
  c.expect(check_law(L, "eqeq0", opt).holds(), "eqeq0 holds on NWD10");
}

void rw20(Checker& c, const SearchOptions& opt) {
  const auto& L = builtin("RW20");
  const auto p = classify(L, opt);
  c.expect(p.is_WOML, "RW20 is WOML");
  c.expect(p.is_WDOL, "RW20 is WDOL");
  c.expect(!p.is_WOMLi, "RW20 is not WOMLi");
  c.expect(!p.is_OML, "RW20 is not OML");
  c.expect(!p.is_BA, "RW20 is not BA");
  c.expect(p.in_WOML_minus_WOMLi(), "RW20 lies in WOML minus WOMLi");
  c.expect(p.proper_WDOL(), "RW20 is a proper WDOL");
  const auto r = check_law(L, "WOMLi", opt);
  c.note("WOMLi witness " + witness(L, r));
}

void woml_consequences(Checker& c, const SearchOptions& opt) {
  std::size_t checked = 0;
  for (const char* n : {"O6", "MO2", "RW20"}) {
    const auto& L = builtin(n);
    for (const auto& law : woml_consequence_laws()) {
      const auto r = check_law(L, law, opt);
      c.expect(r.holds(), law + " on " + n + " (witness " + witness(L, r) + ")");
      ++checked;
    }
  }
  c.note(std::to_string(woml_consequence_laws().size()) + " conditions, " + std::to_string(checked) + " checks");
}

void cross_equivalence(Checker& c, const SearchOptions& opt) {
  for (const auto& n : builtin_names()) {
    const auto& L = builtin(n);
    std::string verdicts;
    for (auto fam : {LawFamily::WOML, LawFamily::WDOL, LawFamily::OML}) {
      const auto cv = cross_validate_equivalents(L, fam, opt);
      c.expect(cv.agree, std::string(family_name(fam)) + " formulations agree on " + n);
      verdicts += std::string(family_name(fam)) + (cv.holds ? "+" : "-");
    }
    c.note(n + " " + verdicts);
  }
}

void commutation(Checker& c, const SearchOptions& opt) {
  for (const char* n : {"O6", "MO2", "RW20"}) {
    const auto& L = builtin(n);
    bool agree = true;
    for (auto a : L.elements())
      for (auto b : L.elements())
        agree = agree && (L.weakly_commutes(a, b) == (L.commutator(a, b) == L.top()));
    c.expect(agree, std::string("weak commutation iff C(a,b) = 1 on ") + n);
    const auto w = conditional_distributivity(L, DistributivityMode::wFH, opt);
    c.expect(w.holds(), std::string("wF-H holds on ") + n);
  }
  const auto fh = conditional_distributivity(builtin("MO2"), DistributivityMode::FH, opt);
  c.expect(fh.holds(), "F-H holds on MO2");
  c.note("F-H on MO2 checked " + std::to_string(fh.triples_checked) + " triples");
}

void eqeq0_separation(Checker& c, const SearchOptions& opt) {
  const auto& mo2 = builtin("MO2");
  const auto r = check_law(mo2, "eqeq0", opt);
  c.expect(witness(mo2, r) == "a=x b=y", "eqeq0 fails on MO2 at a=x b=y (got " + witness(mo2, r) + ")");
  if (r.counterexample) {
    c.expect(r.counterexample->condition == 0, "the failing direction is ==0 to ==");
    c.expect(r.counterexample->lhs == mo2.bottom() && r.counterexample->rhs == mo2.top(),
             "the right-hand side becomes 0 = 1");
  }
  c.expect(check_law(builtin("O6"), "eqeq0", opt).holds(), "eqeq0 holds on O6");
}

void soundness(Checker& c, const AxiomSystem& sys, std::initializer_list<const char*> lattices,
               const SearchOptions& opt) {
  for (const char* n : lattices) {
    const auto rep = soundness_suite(sys, builtin(n), opt);
    for (const auto& a : rep.axioms)
      c.expect(a.result.holds(), std::string(sys.name()) + " " + a.name + " valid on " + n);
    c.expect(rep.mp.holds(), std::string(sys.name()) + " MP preserves 1 on " + n);
  }
}

void ql_soundness(Checker& c, const SearchOptions& opt) {
  soundness(c, quantum_logic(), {"O6", "MO2", "RW20"}, opt);
  c.note("15 axioms and MP on O6, MO2, RW20");
}

void cl_soundness(Checker& c, const SearchOptions& opt) {
  soundness(c, classical_logic(), {"O6", "RW20"}, opt);
  const Wff dist = parse_wff("(p0 & (p1 V ~p1)) <=>0 ((p0 & p1) V (p0 & ~p1))");
  c.expect(check_validity(builtin("O6"), dist, opt).holds(), "distributivity tautology valid on O6");
  const auto& mo2 = builtin("MO2");
  const auto r = check_validity(mo2, dist, opt);
  c.expect(!r.holds(), "distributivity tautology fails on MO2");
  if (r.counterexample) {
    const std::string v = r.counterexample->valuation.format(mo2);
    c.expect(v == "p0=x p1=y", "MO2 counterexample at p0=x p1=y (got " + v + ")");
    c.expect(r.counterexample->value == mo2.ortho(mo2.element("x")), "MO2 counterexample value is x'");
    c.note("MO2 counterexample " + v + " value " + mo2.name_of(r.counterexample->value));
  }
}

void orthomodularity(Checker& c, const SearchOptions& opt) {
  const auto& o6 = builtin("O6");
  const auto spec = make_refinement(o6, {}, LogicKind::QL, opt);
  const Wff a = parse_wff("p0 V p1");
  const Wff b = parse_wff("p0 V (~p0 & (p0 V p1))");
  const auto v = refinement_equiv(spec, a, b, opt);
  const auto* sep = std::get_if<Separated>(&v);
  c.expect(sep != nullptr, "O6 refinement separates the pair");
  if (sep) {
    c.expect(sep->valuation.format(o6) == "p0=x p1=y", "separated at p0=x p1=y (got " + sep->valuation.format(o6) + ")");
    c.expect(sep->a_value == o6.element("y") && sep->b_value == o6.element("x"), "values y vs x");
  }
  const auto w = orthomodularity_witness(o6, opt);
  c.expect(w && w->valuation.format(o6) == "p0=x p1=y" && w->lhs_value == o6.element("y") &&
               w->rhs_value == o6.element("x"),
           "O6 witness has the same shape");
  c.expect(!orthomodularity_witness(builtin("MO2"), opt), "MO2 has no witness");
  const auto& rw = builtin("RW20");
  const auto wr = orthomodularity_witness(rw, opt);
  c.expect(wr.has_value(), "RW20 has a witness");
  if (wr)
    c.note("RW20 witness " + wr->valuation.format(rw) + " values " + rw.name_of(wr->lhs_value) + " vs " +
           rw.name_of(wr->rhs_value));
}

void derivations(Checker& c, const SearchOptions&) {
  std::size_t ql = 0, cl = 0, mutated = 0;
  for (const auto& s : sample_derivations()) {
    const Derivation d = parse_derivation(s.text);
    const auto v = check_derivation(d);
    if (!s.rejected_at) {
      c.expect(accepted(v), s.name + " is accepted");
      (d.logic == LogicKind::QL ? ql : cl) += 1;
    } else {
      const auto* r = std::get_if<Rejected>(&v);
      c.expect(r && r->step == *s.rejected_at, s.name + " is rejected at step " + std::to_string(*s.rejected_at));
      ++mutated;
    }
  }
  c.expect(ql > 0 && cl > 0, "both logics have accepted samples");
  c.note(std::to_string(ql) + " QL and " + std::to_string(cl) + " CL accepted, " + std::to_string(mutated) +
         " mutants rejected");
}

std::string hierarchy_violation(const VarietyProfile& p) {
  if (p.is_WDOL && !p.is_WOML) return "WDOL without WOML";
  if (p.is_OML && !p.is_WOMLi) return "OML without WOMLi";
  if (p.is_WOMLi && !p.is_WOML) return "WOMLi without WOML";
  if (p.is_BA && !(p.is_OML && p.is_WDOL)) return "BA without OML and WDOL";
  return {};
}

void hierarchy(Checker& c, const SearchOptions& opt) {
  std::size_t n = 0;
  auto one = [&](const OrthoLattice& L, const std::string& origin) {
    try {
      const auto v = hierarchy_violation(classify(L, opt));
      c.expect(v.empty(), origin + ": " + v);
    } catch (const ConsistencyError& e) {
      c.expect(false, origin + ": " + e.what());
    }
    ++n;
  };
  for (const auto& name : builtin_names()) one(builtin(name), name);
  std::size_t proper = 0;
  for (const auto& g : random_lattice_files(kHierarchySamples, kHierarchySeed)) {
    const auto L = parse_lattice(g.text);
    one(L, g.origin);
    proper += classify(L, opt).proper_WOML() ? 1 : 0;
  }
  c.note(std::to_string(n) + " lattices classified, " + std::to_string(proper) + " random ones are proper WOMLs");
}

struct Entry {
  ClaimInfo info;
  std::function<void(Checker&, const SearchOptions&)> run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{1, "catalog integrity", 0.1}, catalog_integrity},
      {{2, "O6 profile", 0.1}, o6_profile},
      {{3, "MO2 profile", 0.1}, mo2_profile},
      {{4, "NWD10 is not WOML yet passes eqeq0", 0.1}, nwd10},
      {{5, "RW20 profile", 1.0}, rw20},
      {{6, "sixteen WOML conditions", 1.0}, woml_consequences},
      {{7, "equivalent formulations agree", 2.0}, cross_equivalence},
      {{8, "weak commutation and conditional distributivity", 2.0}, commutation},
      {{9, "eqeq0 separation", 0.1}, eqeq0_separation},
      {{10, "QL soundness", 5.0}, ql_soundness},
      {{11, "CL soundness", 1.0}, cl_soundness},
      {{12, "orthomodularity failure of the refined quotient", 0.5}, orthomodularity},
      {{13, "derivation checker", 0.1}, derivations},
      {{14, "hierarchy invariant", 10.0}, hierarchy},
  };
  return list;
}

}  // namespace

const std::vector<ClaimInfo>& claim_list() {
  static const std::vector<ClaimInfo> list = [] {
    std::vector<ClaimInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return list;
}

std::vector<ClaimResult> run_claims(std::optional<int> only, const SearchOptions& options) {
  if (only && (*only < 1 || *only > static_cast<int>(entries().size())))
    throw UnknownName("no claim with id " + std::to_string(*only));
  std::vector<ClaimResult> out;
  for (const auto& e : entries()) {
    if (only && e.info.id != *only) continue;
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
      e.run(c, options);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    out.push_back({e.info.id, e.info.title, c.ok(), dt.count(), e.info.limit, c.detail()});
  }
  return out;
}

}  // namespace orthokit
