#include <gtest/gtest.h>

#include "oracle.hpp"
#include "orthokit/catalog.hpp"
#include "orthokit/error.hpp"
#include "orthokit/term.hpp"

using namespace orthokit;

namespace {

Assignment at(const OrthoLattice& L, std::initializer_list<std::pair<const char*, const char*>> vals) {
  Assignment a;
  for (auto [v, e] : vals) a.set(v, L.element(e));
  return a;
}

std::string parse_error_message(std::string_view text) {
  try {
    parse_term(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

}  // namespace

TEST(ParseTerm, WomlLeftSide) {
  const Term t = parse_term("(a' ^ (a v b)) v b' v (a ^ b)");
  ASSERT_EQ(t.kind(), Term::Kind::Join);
  EXPECT_EQ(t.right().kind(), Term::Kind::Meet);
  EXPECT_EQ(t.left().kind(), Term::Kind::Join);
  EXPECT_EQ(t.left().right().kind(), Term::Kind::Ortho);
  EXPECT_EQ(free_variables(t), (std::set<std::string>{"a", "b"}));
}

TEST(ParseTerm, QuantumEquivExpands) {
  const Term t = parse_term("a == b");
  ASSERT_EQ(t.kind(), Term::Kind::Defined);
  EXPECT_EQ(t.connective(), ConnectiveKind::QuantumEquiv);
  EXPECT_EQ(expand(t), parse_term("(a ^ b) v (a' ^ b')"));
}

TEST(ParseTerm, SyntaxErrors) {
  EXPECT_NE(parse_error_message("a v").find("end of input"), std::string::npos);
  EXPECT_NE(parse_error_message("a ->4 b").find("unknown operator"), std::string::npos);
  EXPECT_THROW(parse_term("(a v b"), ParseError);
  EXPECT_THROW(parse_term("a b"), ParseError);
  EXPECT_THROW(parse_term("a # b"), ParseError);
  EXPECT_THROW(parse_term(""), ParseError);
  EXPECT_THROW(parse_term("12"), ParseError);
}

TEST(ParseTerm, PrecedenceWeakestToStrongest) {
  EXPECT_EQ(parse_term("a ->1 b == c v d ^ e'"), parse_term("a ->1 (b == (c v (d ^ (e'))))"));
  EXPECT_EQ(parse_term("a ==0 b ->3 c"), parse_term("(a ==0 b) ->3 c"));
  EXPECT_EQ(parse_term("a ^ b v c"), parse_term("(a ^ b) v c"));
  EXPECT_EQ(parse_term("a''"), Term::ortho(Term::ortho(Term::variable("a"))));
}

TEST(ParseTerm, LeftAssociative) {
  EXPECT_EQ(parse_term("a v b v c"), parse_term("(a v b) v c"));
  EXPECT_NE(parse_term("a v b v c"), parse_term("a v (b v c)"));
  EXPECT_EQ(parse_term("a ->1 b ->2 c"), parse_term("(a ->1 b) ->2 c"));
  EXPECT_EQ(parse_term("a == b ==0 c"), parse_term("(a == b) ==0 c"));
}

TEST(ParseTerm, Constants) {
  EXPECT_EQ(parse_term("1").kind(), Term::Kind::Constant);
  EXPECT_TRUE(parse_term("1").is_one());
  EXPECT_FALSE(parse_term("0").is_one());
}

TEST(PrintTerm, MinimalParenthesesRoundTrip) {
  for (const char* s : {"(a' ^ (a v b)) v b' v (a ^ b)", "a v (b v c)", "(a v b)'", "a ->1 (b ->1 c)",
                        "(a == b) ^ ((b == c) v (a == c))", "a ^ (b v c)", "a'' v 0 ^ 1"}) {
    const Term t = parse_term(s);
    EXPECT_EQ(parse_term(to_string(t)), t) << s;
  }
  EXPECT_EQ(to_string(parse_term("(a v b) v c")), "a v b v c");
  EXPECT_EQ(to_string(parse_term("a v (b v c)")), "a v (b v c)");
}

TEST(ParseEquation, InferencesAndBiconditionals) {
  const Inference inf = parse_inference("a ->1 b = 1 => a ->2 b = 1");
  EXPECT_EQ(inf.hypotheses.size(), 1u);
  const auto both = parse_conditions("a ==0 b = 1 <=> a == b = 1");
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0].hypotheses[0], both[1].conclusion);
  EXPECT_EQ(both[1].hypotheses[0], both[0].conclusion);
  EXPECT_EQ(parse_inference("a = b & b = c => a = c").hypotheses.size(), 2u);
  EXPECT_THROW(parse_equation("a v b"), ParseError);
  EXPECT_THROW(parse_inference("a = b =>"), ParseError);
}

TEST(EvalTerm, Examples) {
  const auto& O6 = builtin("O6");
  const auto xy = at(O6, {{"a", "x"}, {"b", "y"}});
  EXPECT_EQ(eval_term(O6, parse_term("(a' ^ (a v b)) v b' v (a ^ b)"), xy), O6.top());
  EXPECT_EQ(eval_term(O6, parse_term("1"), Assignment{}), O6.top());
  EXPECT_EQ(eval_term(builtin("RW20"), parse_term("1"), Assignment{}), builtin("RW20").top());
  EXPECT_EQ(eval_term(O6, parse_term("a v (a' ^ (a v b))"), xy), O6.element("x"));
}

TEST(EvalTerm, UnboundVariable) {
  const auto& O6 = builtin("O6");
  EXPECT_THROW(eval_term(O6, parse_term("a v c"), at(O6, {{"a", "x"}})), DomainError);
}

TEST(CheckEquation, Examples) {
  const auto& O6 = builtin("O6");
  const auto oml = check_equation(O6, parse_equation("a v (a' ^ (a v b)) = a v b"));
  ASSERT_FALSE(oml.holds());
  EXPECT_EQ(oml.counterexample->assignment.format(O6), "a=x b=y");
  EXPECT_EQ(oml.counterexample->lhs, O6.element("x"));
  EXPECT_EQ(oml.counterexample->rhs, O6.element("y"));
  EXPECT_TRUE(check_equation(O6, parse_equation("(a' ^ (a v b)) v b' v (a ^ b) = 1")).holds());

  const auto dist = parse_equation("a ^ (b v c) = (a ^ b) v (a ^ c)");
  const auto r = check_equation(O6, dist);
  ASSERT_FALSE(r.holds());
  // The quoted triple is a counterexample too, though not the first one.
  const auto t = at(O6, {{"a", "xp"}, {"b", "x"}, {"c", "yp"}});
  EXPECT_EQ(eval_term(O6, dist.lhs, t), O6.element("xp"));
  EXPECT_EQ(eval_term(O6, dist.rhs, t), O6.element("yp"));
}

TEST(CheckInference, Examples) {
  const auto& O6 = builtin("O6");
  EXPECT_TRUE(check_inference(O6, parse_inference("a ->1 b = 1 => a ->2 b = 1")).holds());
  const auto r = check_inference(O6, parse_inference("a == b = 1 => a = b"));
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.counterexample->assignment.format(O6), "a=x b=y");
  EXPECT_EQ(O6.connective(ConnectiveKind::QuantumEquiv, O6.element("x"), O6.element("y")), O6.top());
  const auto& MO2 = builtin("MO2");
  const auto e = check_inference(MO2, parse_inference("a ==0 b = 1 => a == b = 1"));
  ASSERT_FALSE(e.holds());
  EXPECT_EQ(e.counterexample->assignment.format(MO2), "a=x b=y");
  EXPECT_EQ(e.counterexample->lhs, MO2.bottom());
  EXPECT_EQ(e.counterexample->rhs, MO2.top());
}

TEST(CheckInference, EmptyHypothesesMatchEquation) {
  for (const auto& name : builtin_names()) {
    const auto& L = builtin(name);
    for (const char* s : {"a v (a' ^ (a v b)) = a v b", "a ^ (b v c) = (a ^ b) v (a ^ c)", "a == a = 1"}) {
      const Equation eq = parse_equation(s);
      const auto x = check_equation(L, eq);
      const auto y = check_inference(L, Inference{{}, eq});
      ASSERT_EQ(x.holds(), y.holds());
      if (!x.holds()) EXPECT_EQ(x.counterexample->assignment, y.counterexample->assignment);
    }
  }
}

TEST(CheckEquation, LexicographicOrderFollowsSortedNames) {
  // Variables sort as a < b, so the first counterexample pairs the least a.
  const auto& O6 = builtin("O6");
  const auto r = check_equation(O6, parse_equation("b v (b' ^ (b v a)) = b v a"));
  ASSERT_FALSE(r.holds());
  EXPECT_EQ(r.counterexample->assignment.format(O6), "a=y b=x");
}

TEST(CheckEquation, BudgetExceeded) {
  const auto& RW = builtin("RW20");
  SearchOptions small;
  small.budget = 7999;
  try {
    check_equation(RW, parse_equation("a ^ (b v c) = (a ^ b) v (a ^ c)"), small);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("20^3"), std::string::npos) << e.what();
  }
  small.budget = 8000;
  EXPECT_NO_THROW(check_equation(RW, parse_equation("a ^ (b v c) = (a ^ b) v (a ^ c)"), small));
}

TEST(CheckEquation, ParallelMatchesSequential) {
  SearchOptions par;
  par.workers = 5;
  par.parallel_threshold = 0;
  for (const auto& name : builtin_names()) {
    const auto& L = builtin(name);
    for (const char* s : {"a ^ (b v c) = (a ^ b) v (a ^ c)", "a v (a' ^ (a v b)) = a v b",
                          "(a==b) ^ ((b==c) v (a==c)) = ((a==b)^(b==c)) v ((a==b)^(a==c))", "a == a = 1"}) {
      const auto eq = parse_equation(s);
      const auto x = check_equation(L, eq);
      const auto y = check_equation(L, eq, par);
      ASSERT_EQ(x.holds(), y.holds()) << name << " " << s;
      if (!x.holds()) EXPECT_EQ(x.counterexample->assignment, y.counterexample->assignment) << name << " " << s;
    }
  }
}

TEST(CheckEquation, MatchesNaiveEvaluator) {
  const auto& N = oracle::naive("O6");
  const auto& L = builtin("O6");
  for (const char* s : {"a ^ (b v c) = (a ^ b) v (a ^ c)", "a v (a' ^ (a v b)) = a v b", "a ->3 b = a ->1 b",
                        "(a == b) v (a == b') = 1", "a ->5 b = b' ->5 a'"}) {
    const Equation eq = parse_equation(s);
    const auto vars = free_variables(eq);
    const std::vector<std::string> order(vars.begin(), vars.end());
    const auto expected = oracle::first_failure(N, static_cast<int>(order.size()), [&](const std::vector<int>& t) {
      std::map<std::string, int> env;
      for (std::size_t i = 0; i < order.size(); ++i) env[order[i]] = t[i];
      return oracle::eval(N, eq.lhs, env) == oracle::eval(N, eq.rhs, env);
    });
    const auto got = check_equation(L, eq);
    ASSERT_EQ(got.holds(), !expected.has_value()) << s;
    if (expected) {
      std::string want;
      for (std::size_t i = 0; i < order.size(); ++i)
        want += (i ? " " : "") + order[i] + "=" + N.names[(*expected)[i]];
      EXPECT_EQ(got.counterexample->assignment.format(L), want) << s;
    }
  }
}

TEST(Assignment, KeepsNamesSorted) {
  const auto& O6 = builtin("O6");
  Assignment a;
  a.set("c", O6.top());
  a.set("a", O6.bottom());
  a.set("b", O6.element("x"));
  EXPECT_EQ(a.format(O6), "a=0 b=x c=1");
  a.set("b", O6.element("y"));
  EXPECT_EQ(a.get("b"), O6.element("y"));
  EXPECT_FALSE(a.get("d").has_value());
}
