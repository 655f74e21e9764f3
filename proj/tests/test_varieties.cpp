#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "oracle.hpp"
#include "orthokit/catalog.hpp"
#include "orthokit/error.hpp"
#include "orthokit/varieties.hpp"

using namespace orthokit;

TEST(LawCatalog, ContainsNamedLaws) {
  EXPECT_EQ(find_law("WOML").source, "(a' ^ (a v b)) v b' v (a ^ b) = 1");
  EXPECT_EQ(find_law("WOMLi").source, "(a==b) ^ ((b==c) v (a==c)) = ((a==b)^(b==c)) v ((a==b)^(a==c))");
  EXPECT_EQ(find_law("eqid").source, "a == a = 1");
  EXPECT_EQ(woml_consequence_laws().size(), 16u);
  for (const auto& n : woml_consequence_laws()) EXPECT_NO_THROW(find_law(n));
  EXPECT_THROW(find_law("WDOLi"), UnknownName);
}

TEST(LawCatalog, EveryBodyReparses) {
  for (const auto& law : law_catalog()) {
    EXPECT_EQ(parse_conditions(law.source), law.body) << law.name;
    EXPECT_FALSE(law.citation.empty()) << law.name;
  }
}

TEST(LawCatalog, BiconditionalsCarryBothDirections) {
  for (const char* n : {"eqeq0", "eq1", "eq01"}) EXPECT_EQ(find_law(n).body.size(), 2u) << n;
  EXPECT_TRUE(find_law("WOML").is_equation());
  EXPECT_FALSE(find_law("woml4").is_equation());
}

TEST(LawCatalog, FileParsing) {
  const auto laws = parse_law_catalog("# comment\nfoo : a v a' = 1 : excluded middle\n\nbar : a = b => b = a : sym\n");
  ASSERT_EQ(laws.size(), 2u);
  EXPECT_EQ(laws[0].name, "foo");
  EXPECT_EQ(laws[1].citation, "sym");
  EXPECT_THROW(parse_law_catalog("x : a = a : one\nx : b = b : two\n"), ParseError);
  EXPECT_THROW(parse_law_catalog("missing separators"), ParseError);
  try {
    parse_law_catalog("ok : a = a : fine\nbad : a v = 1 : broken\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  const auto path = std::filesystem::temp_directory_path() / "orthokit_laws_test.txt";
  std::ofstream(path) << "mine : a ^ a = a : idempotence\n";
  const auto loaded = load_law_catalog(path.string());
  ASSERT_EQ(loaded.size(), 1u);
  EXPECT_TRUE(check_law(builtin("RW20"), loaded[0]).holds());
  std::filesystem::remove(path);
  EXPECT_THROW(load_law_catalog("/nonexistent/laws.txt"), Error);
}

TEST(CheckLaw, Examples) {
  const auto& MO2 = builtin("MO2");
  const auto wdol = check_law(MO2, "WDOL");
  ASSERT_FALSE(wdol.holds());
  EXPECT_EQ(wdol.counterexample->assignment.format(MO2), "a=x b=y");

  const auto& RW = builtin("RW20");
  const auto womli = check_law(RW, "WOMLi");
  ASSERT_FALSE(womli.holds());
  EXPECT_EQ(womli.counterexample->assignment.names().size(), 3u);

  const auto& NWD = builtin("NWD10");
  const auto woml = check_law(NWD, "WOML");
  ASSERT_FALSE(woml.holds());
  EXPECT_EQ(woml.counterexample->assignment.format(NWD), "a=y b=w");
  EXPECT_EQ(woml.counterexample->lhs, NWD.element("wp"));
  EXPECT_THROW(check_law(MO2, "nope"), UnknownName);
}

TEST(Classify, Examples) {
  const auto o6 = classify(builtin("O6"));
  EXPECT_TRUE(o6.is_OL && o6.is_WOML && o6.is_WOMLi && o6.is_WDOL);
  EXPECT_FALSE(o6.is_OML || o6.is_BA);
  EXPECT_TRUE(o6.proper_WOML() && o6.proper_WDOL());

  const auto mo2 = classify(builtin("MO2"));
  EXPECT_TRUE(mo2.is_OML && mo2.is_WOMLi && mo2.is_WOML);
  EXPECT_FALSE(mo2.is_WDOL || mo2.is_BA);
  EXPECT_FALSE(mo2.proper_WOML());

  const auto rw = classify(builtin("RW20"));
  EXPECT_TRUE(rw.is_WOML && rw.is_WDOL);
  EXPECT_FALSE(rw.is_WOMLi || rw.is_OML || rw.is_BA);
  EXPECT_TRUE(rw.in_WOML_minus_WOMLi());
  EXPECT_TRUE(rw.witnesses.count("WOMLi"));

  const auto nwd = classify(builtin("NWD10"));
  EXPECT_TRUE(nwd.is_OL);
  EXPECT_FALSE(nwd.is_WOML || nwd.is_WDOL || nwd.is_OML || nwd.is_BA || nwd.is_WOMLi);
}

TEST(Classify, BooleanAlgebraIsEverything) {
  const auto B4 = OrthoLattice::from_covers("B4", {"0", "a", "ap", "1"}, {{"0", "a"}, {"0", "ap"}, {"a", "1"}, {"ap", "1"}},
                                            {{"a", "ap"}, {"0", "1"}});
  const auto p = classify(B4);
  EXPECT_TRUE(p.is_BA && p.is_OML && p.is_WDOL && p.is_WOMLi && p.is_WOML);
  EXPECT_TRUE(p.witnesses.empty());
}

TEST(Classify, HierarchyViolationIsConsistencyError) {
  VarietyProfile p;
  p.is_OL = true;
  p.is_WDOL = true;
  EXPECT_THROW(check_hierarchy(p), ConsistencyError);
  p = {};
  p.is_OL = true;
  p.is_OML = true;
  p.is_WOML = true;
  EXPECT_THROW(check_hierarchy(p), ConsistencyError);
  p.is_WOMLi = true;
  EXPECT_NO_THROW(check_hierarchy(p));
  p.is_BA = true;
  EXPECT_THROW(check_hierarchy(p), ConsistencyError);
}

TEST(CrossValidate, Examples) {
  const auto a = cross_validate_equivalents(builtin("O6"), LawFamily::WOML);
  EXPECT_TRUE(a.agree && a.holds);
  EXPECT_EQ(a.verdicts.size(), 5u);
  const auto b = cross_validate_equivalents(builtin("NWD10"), LawFamily::WOML);
  EXPECT_TRUE(b.agree);
  EXPECT_FALSE(b.holds);
  const auto c = cross_validate_equivalents(builtin("MO2"), LawFamily::WDOL);
  EXPECT_TRUE(c.agree);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.verdicts.size(), 7u);
  for (const auto& n : builtin_names())
    for (auto f : {LawFamily::WOML, LawFamily::WDOL, LawFamily::OML})
      EXPECT_TRUE(cross_validate_equivalents(builtin(n), f).agree) << n << " " << family_name(f);
}

TEST(ConditionalDistributivity, Examples) {
  EXPECT_TRUE(conditional_distributivity(builtin("MO2"), DistributivityMode::FH).holds());
  EXPECT_TRUE(conditional_distributivity(builtin("O6"), DistributivityMode::wFH).holds());
  const auto rw = conditional_distributivity(builtin("RW20"), DistributivityMode::wFH);
  EXPECT_TRUE(rw.holds());
  EXPECT_FALSE(rw.warning.has_value());
  EXPECT_GT(rw.triples_checked, 0u);
  EXPECT_TRUE(conditional_distributivity(builtin("O6"), DistributivityMode::FH).warning.has_value());
  EXPECT_TRUE(conditional_distributivity(builtin("NWD10"), DistributivityMode::wFH).warning.has_value());
}

TEST(Invariants, WomlConsequencesOnWomls) {
  for (const char* n : {"O6", "MO2", "RW20"})
    for (const auto& law : woml_consequence_laws()) EXPECT_TRUE(check_law(builtin(n), law).holds()) << law << " " << n;
}

TEST(Invariants, WeakCommutationIffCommutatorIsTop) {
  for (const char* n : {"O6", "MO2", "RW20"}) {
    const auto& L = builtin(n);
    for (auto a : L.elements())
      for (auto b : L.elements()) EXPECT_EQ(L.weakly_commutes(a, b), L.commutator(a, b) == L.top()) << n;
  }
}

TEST(Invariants, Eqeq0Separation) {
  EXPECT_FALSE(check_law(builtin("MO2"), "eqeq0").holds());
  EXPECT_TRUE(check_law(builtin("NWD10"), "eqeq0").holds());
  EXPECT_FALSE(check_law(builtin("NWD10"), "WOML").holds());
}

TEST(Invariants, TwoWaySasakiEquivalenceInOmls) {
  EXPECT_TRUE(check_law(builtin("MO2"), "eqsasaki").holds());
}

// First witnesses of the defining laws, frozen from the naive model.
TEST(Oracle, FirstWitnessesMatchNaiveModel) {
  struct Case {
    const char* lattice;
    const char* law;
    int arity;
    std::function<bool(const oracle::Naive&, const std::vector<int>&)> ok;
    const char* frozen;  // expected first failure, "" when the law holds
  };
  auto woml = [](const oracle::Naive& L, const std::vector<int>& t) {
    const int a = t[0], b = t[1];
    return L.join(L.join(L.meet(L.o(a), L.join(a, b)), L.o(b)), L.meet(a, b)) == L.top;
  };
  auto oml = [](const oracle::Naive& L, const std::vector<int>& t) {
    const int a = t[0], b = t[1];
    return L.join(a, L.meet(L.o(a), L.join(a, b))) == L.join(a, b);
  };
  auto wdol = [](const oracle::Naive& L, const std::vector<int>& t) {
    return L.join(oracle::qeq(L, t[0], t[1]), oracle::qeq(L, t[0], L.o(t[1]))) == L.top;
  };
  auto ba = [](const oracle::Naive& L, const std::vector<int>& t) {
    const int a = t[0], b = t[1], c = t[2];
    return L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c));
  };
  auto womli = [](const oracle::Naive& L, const std::vector<int>& t) {
    const int ab = oracle::qeq(L, t[0], t[1]), bc = oracle::qeq(L, t[1], t[2]), ac = oracle::qeq(L, t[0], t[2]);
    return L.meet(ab, L.join(bc, ac)) == L.join(L.meet(ab, bc), L.meet(ab, ac));
  };
  const std::vector<Case> cases = {
      {"O6", "WOML", 2, woml, ""},         {"O6", "OML", 2, oml, "x y"},       {"O6", "WDOL", 2, wdol, ""},
      {"O6", "BA", 3, ba, "y x yp"},       {"O6", "WOMLi", 3, womli, ""},      {"MO2", "WOML", 2, woml, ""},
      {"MO2", "OML", 2, oml, ""},          {"MO2", "WDOL", 2, wdol, "x y"},    {"MO2", "BA", 3, ba, "x y xp"},
      {"NWD10", "WOML", 2, woml, "y w"},   {"NWD10", "OML", 2, oml, "x y"},    {"NWD10", "WDOL", 2, wdol, "w y"},
      {"NWD10", "BA", 3, ba, "w x yp"},    {"NWD10", "WOMLi", 3, womli, "0 wp y"},
      {"RW20", "WOML", 2, woml, ""},       {"RW20", "OML", 2, oml, "w y"},     {"RW20", "WDOL", 2, wdol, ""},
      {"RW20", "BA", 3, ba, "y w rp"},     {"RW20", "WOMLi", 3, womli, "0 z r"},
  };
  for (const auto& c : cases) {
    const auto& N = oracle::naive(c.lattice);
    const auto naive = oracle::first_failure(N, c.arity, [&](const std::vector<int>& t) { return c.ok(N, t); });
    const std::string naive_s = naive ? oracle::names_of(N, *naive) : "";
    EXPECT_EQ(naive_s, c.frozen) << c.lattice << " " << c.law;
    const auto& L = builtin(c.lattice);
    const auto r = check_law(L, c.law);
    std::string got;
    if (r.counterexample)
      for (auto v : r.counterexample->assignment.values()) got += (got.empty() ? "" : " ") + L.name_of(v);
    EXPECT_EQ(got, c.frozen) << c.lattice << " " << c.law;
  }
}
