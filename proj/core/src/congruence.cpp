#include "orthokit/congruence.hpp"

#include "orthokit/error.hpp"
#include "orthokit/varieties.hpp"

namespace orthokit {

namespace {

std::optional<Separated> separate(const OrthoLattice& L, const std::vector<Wff>& gamma, const Wff& a, const Wff& b,
                                  const SearchOptions& options, unsigned universe) {
  std::set<unsigned> all = props(a);
  all.merge(props(b));
  for (const auto& g : gamma) all.merge(props(g));
  for (unsigned i = 0; i < universe; ++i) all.insert(i);

  std::vector<Wff> roots = gamma;
  roots.push_back(a);
  roots.push_back(b);
  const WffProgram prog({all.begin(), all.end()}, roots);
  const std::size_t ia = gamma.size();
  const Element one = L.top();

  std::vector<Element> regs;
  auto splits = [&prog, &L, ia, one, regs](std::span<const Element> values) mutable {
    prog.run(L, values, regs);
    for (std::size_t h = 0; h < ia; ++h)
      if (prog.root(h, regs) != one) return false;
    return prog.root(ia, regs) != prog.root(ia + 1, regs);
  };
  auto hit = find_first_assignment(L.size(), prog.props().size(), options, splits);
  if (!hit) return std::nullopt;
  std::vector<Element> out;
  prog.run(L, *hit, out);
  return Separated{Valuation(prog.props(), *hit), prog.root(ia, out), prog.root(ia + 1, out)};
}

bool same_gamma(const std::vector<Wff>& x, const std::vector<Wff>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (expand_wff(x[i]) != expand_wff(y[i])) return false;
  return true;
}

}  // namespace

RefinementSpec make_refinement(OrthoLattice lattice, std::vector<Wff> gamma, LogicKind logic,
                               const SearchOptions& options) {
  const VarietyProfile p = classify(lattice, options);
  if (logic == LogicKind::QL && !p.proper_WOML())
    throw PreconditionError("refinement lattice " + lattice.name() + " is not a proper WOML");
  if (logic == LogicKind::CL && !p.proper_WDOL())
    throw PreconditionError("refinement lattice " + lattice.name() + " is not a proper WDOL");
  return {std::move(lattice), std::move(gamma), logic};
}

RefinementVerdict refinement_equiv(const RefinementSpec& spec, const Wff& a, const Wff& b,
                                   const SearchOptions& options, unsigned prop_universe) {
  if (auto s = separate(spec.lattice, spec.gamma, a, b, options, prop_universe)) return *s;
  return Equivalent{};
}

std::string NotCongruent::reason() const {
  if (derivation && refinement) return "derivation and refinement";
  return derivation ? "derivation" : "refinement";
}

Wff congruence_goal(LogicKind logic, const Wff& a, const Wff& b) {
  return Wff::defined(logic == LogicKind::QL ? WffConnective::Equiv : WffConnective::Equiv0, a, b);
}

CongruenceVerdict congruent(const RefinementSpec& spec, const Wff& a, const Wff& b, const Derivation& certificate,
                            const SearchOptions& options) {
  if (certificate.logic != spec.logic)
    throw PreconditionError("certificate is a " + std::string(logic_name(certificate.logic)) +
                            " derivation, expected " + std::string(logic_name(spec.logic)));
  if (!same_gamma(certificate.gamma, spec.gamma))
    throw PreconditionError("certificate hypotheses differ from the refinement gamma");
  if (certificate.steps.empty()) throw PreconditionError("certificate has no steps");
  const Wff goal = congruence_goal(spec.logic, a, b);
  if (expand_wff(certificate.conclusion()) != expand_wff(goal))
    throw PreconditionError("certificate concludes " + to_string(certificate.conclusion()) + ", expected " +
                            to_string(goal));

  NotCongruent nc;
  const DerivationVerdict verdict = check_derivation(certificate);
  if (const auto* r = std::get_if<Rejected>(&verdict)) nc.derivation = *r;
  nc.refinement = separate(spec.lattice, spec.gamma, a, b, options, 0);
  if (!nc.derivation && !nc.refinement) return Congruent{};
  return nc;
}

bool CompatibilityReport::ok() const {
  for (const auto& e : entries)
    if (e.related && (!e.negation || !e.disjunction)) return false;
  return true;
}

CompatibilityReport congruence_compatibility_check(const RefinementSpec& spec,
                                                   const std::vector<CompatibilitySample>& samples,
                                                   const SearchOptions& options) {
  CompatibilityReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    CompatibilityEntry e{i};
    if (s.certificate)
      e.related = std::holds_alternative<Congruent>(congruent(spec, s.a, s.b, *s.certificate, options));
    else
      e.related = std::holds_alternative<Equivalent>(refinement_equiv(spec, s.a, s.b, options));
    if (e.related) {
      e.negation = std::holds_alternative<Equivalent>(refinement_equiv(spec, ~s.a, ~s.b, options));
      e.disjunction = std::holds_alternative<Equivalent>(refinement_equiv(spec, s.a | s.c, s.b | s.c, options));
    }
    report.entries.push_back(e);
  }
  return report;
}

std::optional<OrthomodularityWitness> orthomodularity_witness(const OrthoLattice& lattice,
                                                               const SearchOptions& options) {
  const Wff a = Wff::prop(0);
  const Wff b = Wff::prop(1);
  const Wff lhs = a | b;
  const Wff rhs = a | (~a & (a | b));
  auto s = separate(lattice, {}, lhs, rhs, options, 0);
  if (!s) return std::nullopt;
  return OrthomodularityWitness{a, b, lhs, rhs, s->valuation, s->a_value, s->b_value};
}

}  // namespace orthokit
