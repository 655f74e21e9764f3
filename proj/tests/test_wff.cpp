#include <gtest/gtest.h>

#include "orthokit/catalog.hpp"
#include "orthokit/error.hpp"
#include "orthokit/wff.hpp"

using namespace orthokit;

namespace {

const Wff p0 = Wff::prop(0);
const Wff p1 = Wff::prop(1);

Valuation val(const OrthoLattice& L, std::initializer_list<std::pair<unsigned, const char*>> v) {
  Valuation h;
  for (auto [p, e] : v) h.set(p, L.element(e));
  return h;
}

}  // namespace

TEST(ParseWff, Examples) {
  EXPECT_EQ(parse_wff("~p0 V p1"), ~p0 | p1);
  const Wff imp = parse_wff("p0 =>1 p1");
  ASSERT_EQ(imp.kind(), Wff::Kind::Defined);
  EXPECT_EQ(imp.connective(), WffConnective::Imp1);
  EXPECT_EQ(expand_wff(imp), ~p0 | ~(~p0 | ~p1));
  EXPECT_THROW(parse_wff("p0 V"), ParseError);
}

TEST(ParseWff, Precedence) {
  EXPECT_EQ(parse_wff("p0 =>3 p1 <=> p2 V p3 & ~p4"), parse_wff("p0 =>3 (p1 <=> (p2 V (p3 & (~p4))))"));
  EXPECT_EQ(parse_wff("p0 <=>0 p1 =>0 p2"), parse_wff("(p0 <=>0 p1) =>0 p2"));
  EXPECT_EQ(parse_wff("p0 V p1 V p2"), parse_wff("(p0 V p1) V p2"));
  EXPECT_EQ(parse_wff("~~p0"), ~~p0);
  EXPECT_EQ(parse_wff("p12").index(), 12u);
}

TEST(ParseWff, Errors) {
  EXPECT_THROW(parse_wff("A V p0"), ParseError);
  EXPECT_THROW(parse_wff("p0 =>2 p1"), ParseError);
  EXPECT_THROW(parse_wff("q0"), ParseError);
  EXPECT_THROW(parse_wff("(p0"), ParseError);
  EXPECT_THROW(parse_wff("p0 p1"), ParseError);
  EXPECT_THROW(parse_schema("A V p0"), ParseError);
  try {
    parse_wff("p0 & & p1");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(PrintWff, RoundTrip) {
  for (const char* s : {"~p0 V p1", "p0 V (p1 V p2)", "~(p0 V p1)", "(p0 =>3 p1) =>3 p2", "p0 =>3 (p1 =>3 p2)",
                        "(p0 <=> p1) <=> (p1 <=> p0)", "p0 & ~p1 V p2"}) {
    const Wff w = parse_wff(s);
    EXPECT_EQ(parse_wff(to_string(w)), w) << s;
  }
  EXPECT_EQ(to_string(parse_schema("A <=> B =>0 (A =>0 B)")), "A <=> B =>0 (A =>0 B)");
  EXPECT_EQ(to_string(parse_schema("W V X")), "W V X");
}

TEST(ExpandWff, Definitions) {
  EXPECT_EQ(expand_wff(p0 & p1), ~(~p0 | ~p1));
  EXPECT_EQ(expand_wff(p0), p0);
  auto conj = [](const Wff& a, const Wff& b) { return ~(~a | ~b); };
  EXPECT_EQ(expand_wff(parse_wff("p0 =>3 p1")),
            (conj(~p0, p1) | conj(~p0, ~p1)) | conj(p0, ~p0 | p1));
  EXPECT_EQ(expand_wff(parse_wff("p0 <=> p1")), conj(p0, p1) | conj(~p0, ~p1));
  EXPECT_EQ(expand_wff(parse_wff("p0 <=>0 p1")), conj(~p0 | p1, ~p1 | p0));
  EXPECT_EQ(expand_wff(parse_wff("p0 =>0 p1")), ~p0 | p1);
  const Wff deep = parse_wff("(p0 =>3 p1) <=>0 (p1 =>1 p2 & p0)");
  EXPECT_TRUE(is_primitive(expand_wff(deep)));
  EXPECT_EQ(expand_wff(expand_wff(deep)), expand_wff(deep));
  EXPECT_FALSE(is_primitive(deep));
}

TEST(Evaluate, HomomorphicAndErrors) {
  const auto& O6 = builtin("O6");
  const auto h = val(O6, {{0, "x"}, {1, "y"}});
  EXPECT_EQ(evaluate(O6, parse_wff("p0 V p1"), h), O6.element("y"));
  EXPECT_EQ(evaluate(O6, parse_wff("~p0"), h), O6.element("xp"));
  EXPECT_EQ(evaluate(O6, parse_wff("p0 & p1"), h), O6.element("x"));
  EXPECT_THROW(evaluate(O6, parse_wff("p2"), h), DomainError);
  EXPECT_THROW(evaluate(O6, parse_schema("A"), h), DomainError);
  EXPECT_EQ(h.format(O6), "p0=x p1=y");
}

TEST(CheckValidity, Examples) {
  for (const auto& n : builtin_names()) EXPECT_TRUE(check_validity(builtin(n), parse_wff("p0 V ~p0")).holds()) << n;

  const auto& O6 = builtin("O6");
  const Wff a11 = parse_wff("p0 V (~p0 & (p0 V p1)) <=> p0 V p1");
  EXPECT_TRUE(check_validity(O6, a11).holds());
  const auto h = val(O6, {{0, "x"}, {1, "y"}});
  EXPECT_EQ(evaluate(O6, a11.left(), h), O6.element("x"));
  EXPECT_EQ(evaluate(O6, a11.right(), h), O6.element("y"));
  EXPECT_EQ(evaluate(O6, a11, h), O6.top());

  const auto& MO2 = builtin("MO2");
  const auto r = check_validity(MO2, parse_wff("(p0 & (p1 V ~p1)) <=>0 ((p0 & p1) V (p0 & ~p1))"));
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.counterexample->valuation.format(MO2), "p0=x p1=y");
  EXPECT_EQ(r.counterexample->value, MO2.element("xp"));
}

TEST(CheckValidity, BudgetExceeded) {
  SearchOptions tiny;
  tiny.budget = 100;
  EXPECT_THROW(check_validity(builtin("RW20"), parse_wff("p0 V p1 V p2"), tiny), BudgetExceeded);
}

TEST(CheckConsequence, Examples) {
  const auto& O6 = builtin("O6");
  EXPECT_TRUE(check_consequence(O6, {p0}, parse_wff("p0 V p1")).holds());
  for (const char* s : {"p0 V ~p0", "p0 V (~p0 & (p0 V p1)) <=> p0 V p1", "p0 =>1 p1"}) {
    const auto a = check_consequence(O6, {}, parse_wff(s));
    const auto b = check_validity(O6, parse_wff(s));
    ASSERT_EQ(a.holds(), b.holds()) << s;
    if (!a.holds()) EXPECT_EQ(a.counterexample->valuation, b.counterexample->valuation);
  }
  EXPECT_TRUE(check_consequence(O6, {p0, ~p0}, p1).holds());
  const auto r = check_consequence(O6, {p0 | p1}, p0);
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.counterexample->valuation.format(O6), "p0=0 p1=1");
}

TEST(MatchSchema, Examples) {
  const Wff a1 = parse_schema("A <=> A");
  const auto s = match_schema(parse_wff("(p0 V p1) <=> (p0 V p1)"), a1);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->at(0), p0 | p1);
  EXPECT_FALSE(match_schema(parse_wff("p0 <=> p1"), a1).has_value());
  const auto a5 = match_schema(parse_wff("p0 & p1 <=> p1 & p0"), parse_schema("A & B <=> B & A"));
  ASSERT_TRUE(a5.has_value());
  EXPECT_EQ(a5->at(0), p0);
  EXPECT_EQ(a5->at(1), p1);
  EXPECT_FALSE(match_schema(parse_wff("p0 V p1 <=> p1 & p0"), parse_schema("A & B <=> B & A")).has_value());
}

TEST(MatchSchema, InstantiateReproducesWff) {
  const Wff schema = parse_schema("(A =>0 B) =>3 (A =>3 (A =>3 B))");
  const Wff w = parse_wff("(~p0 =>0 p1 & p2) =>3 (~p0 =>3 (~p0 =>3 p1 & p2))");
  const auto s = match_schema(w, schema);
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(instantiate(schema, *s), w);
  EXPECT_EQ(metavariables(schema), (std::set<unsigned>{0, 1}));
  EXPECT_EQ(props(w), (std::set<unsigned>{0, 1, 2}));
  EXPECT_THROW(instantiate(schema, Substitution{{0, p0}}), DomainError);
}
