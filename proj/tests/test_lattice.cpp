#include <gtest/gtest.h>

#include "oracle.hpp"
#include "orthokit/catalog.hpp"
#include "orthokit/error.hpp"
#include "orthokit/lattice.hpp"

using namespace orthokit;

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

Element E(const OrthoLattice& L, const char* name) { return L.element(name); }

LatticeErrorKind build_error(const std::vector<std::string>& els, const Pairs& covers, const Pairs& ortho) {
  try {
    OrthoLattice::from_covers("t", els, covers, ortho);
  } catch (const LatticeError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a LatticeError";
  return LatticeErrorKind::InvalidInput;
}

}  // namespace

TEST(BuildFromCovers, O6JoinAndMeetOfComplementaryChains) {
  const auto L = OrthoLattice::from_covers("O6", {"0", "x", "y", "yp", "xp", "1"},
                                           {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "yp"}, {"yp", "xp"}, {"xp", "1"}},
                                           {{"x", "xp"}, {"y", "yp"}, {"0", "1"}});
  EXPECT_EQ(L.join(E(L, "x"), E(L, "yp")), L.top());
  EXPECT_EQ(L.meet(E(L, "x"), E(L, "yp")), L.bottom());
  EXPECT_TRUE(verify_ortholattice(L).ok());
}

TEST(BuildFromCovers, TwoElementBooleanAlgebra) {
  const auto L = OrthoLattice::from_covers("B2", {"0", "1"}, {{"0", "1"}}, {{"0", "1"}});
  EXPECT_EQ(L.size(), 2u);
  EXPECT_EQ(L.ortho(L.bottom()), L.top());
  EXPECT_TRUE(verify_ortholattice(L).ok());
}

TEST(BuildFromCovers, TwoMinimalUpperBoundsIsNotALattice) {
  EXPECT_EQ(build_error({"0", "a", "b", "c", "d"},
                        {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}},
                        {{"0", "0"}, {"a", "b"}, {"c", "d"}}),
            LatticeErrorKind::NotALattice);
}

TEST(BuildFromCovers, ErrorKinds) {
  EXPECT_EQ(build_error({"0", "x", "1"}, {{"0", "x"}, {"x", "0"}, {"x", "1"}}, {{"0", "1"}, {"x", "x"}}),
            LatticeErrorKind::NotAPoset);
  EXPECT_EQ(build_error({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}, {{"0", "a"}, {"b", "b"}}),
            LatticeErrorKind::NotALattice);
  EXPECT_EQ(build_error({}, {}, {}), LatticeErrorKind::NotBounded);
  EXPECT_EQ(build_error({"0", "0"}, {}, {}), LatticeErrorKind::InvalidInput);
  EXPECT_EQ(build_error({"0", "1"}, {{"0", "q"}}, {{"0", "1"}}), LatticeErrorKind::InvalidInput);
  // Missing element in the ortho map.
  EXPECT_EQ(build_error({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}}, {{"0", "1"}}),
            LatticeErrorKind::NotAnOrtholattice);
  // A three-element chain has no complement for its middle element.
  EXPECT_EQ(build_error({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}}, {{"0", "1"}, {"x", "x"}}),
            LatticeErrorKind::NotAnOrtholattice);
}

TEST(Verify, CatalogPasses) {
  for (const auto& name : builtin_names()) {
    const auto report = verify_ortholattice(builtin(name));
    EXPECT_TRUE(report.ok()) << name;
    EXPECT_EQ(report.first_failure(), nullptr);
    EXPECT_GE(report.checks.size(), 10u);
  }
}

TEST(Verify, RemappedO6OrthoFailsComplementFamily) {
  const auto& O6 = builtin("O6");
  LatticeTables t = O6.tables();
  auto id = [&](const char* n) { return O6.element(n).id(); };
  t.ortho[id("x")] = id("y");
  t.ortho[id("y")] = id("x");
  t.ortho[id("xp")] = id("yp");
  t.ortho[id("yp")] = id("xp");
  const OrthoLattice bad(t);
  EXPECT_EQ(bad.join(E(bad, "x"), bad.ortho(E(bad, "x"))), E(bad, "y"));
  const auto report = verify_ortholattice(bad);
  ASSERT_FALSE(report.ok());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_EQ(report.first_failure()->name, "a v (b v b') = b v b'");
}

TEST(Verify, BrokenTablesAreReportedNotThrown) {
  LatticeTables t = builtin("MO2").tables();
  t.leq[1][2] = true;  // x <= y without matching join/meet
  const auto report = verify_ortholattice(OrthoLattice(t));
  EXPECT_FALSE(report.ok());
}

TEST(OrderQuery, Examples) {
  const auto& O6 = builtin("O6");
  const auto& MO2 = builtin("MO2");
  EXPECT_EQ(order_query(O6, OrderOp::Leq, E(O6, "x"), E(O6, "y")).truth, true);
  EXPECT_EQ(order_query(O6, OrderOp::Meet, E(O6, "x"), E(O6, "xp")).element, O6.bottom());
  EXPECT_EQ(order_query(MO2, OrderOp::Join, E(MO2, "x"), E(MO2, "y")).element, MO2.top());
  EXPECT_EQ(order_query(O6, OrderOp::Ortho, E(O6, "y")).element, E(O6, "yp"));
  EXPECT_THROW(order_query(O6, OrderOp::Join, E(O6, "x")), PreconditionError);
}

TEST(OrderQuery, ForeignElementIsDomainError) {
  const auto& O6 = builtin("O6");
  const Element foreign(17);
  EXPECT_THROW(order_query(O6, OrderOp::Leq, foreign, O6.top()), DomainError);
  EXPECT_THROW(O6.connective(ConnectiveKind::Sasaki, foreign, O6.top()), DomainError);
  EXPECT_THROW(O6.commutator(O6.top(), foreign), DomainError);
  EXPECT_THROW(O6.element("q"), DomainError);
}

TEST(OrderQuery, LeqAgreesWithMeetAndJoin) {
  for (const auto& name : builtin_names()) {
    const auto& L = builtin(name);
    for (auto a : L.elements())
      for (auto b : L.elements()) {
        EXPECT_EQ(L.leq(a, b), L.meet(a, b) == a);
        EXPECT_EQ(L.leq(a, b), L.join(a, b) == b);
      }
  }
}

TEST(Connective, Examples) {
  const auto& O6 = builtin("O6");
  const auto& MO2 = builtin("MO2");
  EXPECT_EQ(O6.connective(ConnectiveKind::Sasaki, E(O6, "x"), E(O6, "y")), O6.top());
  EXPECT_EQ(O6.connective(ConnectiveKind::Classical, E(O6, "y"), E(O6, "y")), O6.top());
  EXPECT_EQ(MO2.connective(ConnectiveKind::QuantumEquiv, E(MO2, "x"), E(MO2, "y")), MO2.bottom());
}

TEST(Connective, DishkantIsContrapositiveSasaki) {
  for (const auto& name : builtin_names()) {
    const auto& L = builtin(name);
    for (auto a : L.elements())
      for (auto b : L.elements())
        EXPECT_EQ(L.connective(ConnectiveKind::Dishkant, a, b),
                  L.connective(ConnectiveKind::Sasaki, L.ortho(b), L.ortho(a)));
  }
}

TEST(Commutation, Examples) {
  const auto& O6 = builtin("O6");
  const auto& MO2 = builtin("MO2");
  EXPECT_TRUE(O6.commutes(E(O6, "x"), E(O6, "y")));
  EXPECT_FALSE(O6.commutes(E(O6, "y"), E(O6, "x")));
  EXPECT_EQ(MO2.commutator(E(MO2, "x"), E(MO2, "y")), MO2.bottom());
  for (auto a : O6.elements())
    for (auto b : O6.elements()) EXPECT_EQ(O6.commutator(a, b), O6.top());
}

TEST(Invariants, DeMorganDualOfJoin) {
  for (const auto& name : builtin_names()) {
    const auto& L = builtin(name);
    for (auto a : L.elements())
      for (auto b : L.elements()) EXPECT_EQ(L.join(a, b), L.ortho(L.meet(L.ortho(a), L.ortho(b))));
  }
}

TEST(Invariants, QuantumEquivIsTwoWaySasakiInOML) {
  const auto& L = builtin("MO2");
  for (auto a : L.elements())
    for (auto b : L.elements())
      EXPECT_EQ(L.connective(ConnectiveKind::QuantumEquiv, a, b),
                L.meet(L.connective(ConnectiveKind::Sasaki, a, b), L.connective(ConnectiveKind::Sasaki, b, a)));
}

TEST(Invariants, CoversAreHasseEdges) {
  const auto& L = builtin("O6");
  const auto covers = L.covers();
  EXPECT_EQ(covers.size(), 6u);
  for (auto [a, b] : covers) {
    EXPECT_TRUE(L.leq(a, b));
    EXPECT_NE(a, b);
  }
}

// Tables of every built-in against the naive rebuild from the diagrams.
TEST(Oracle, BuiltinTablesMatchNaiveRebuild) {
  for (const auto& d : oracle::diagrams()) {
    const auto& N = oracle::naive(d.name);
    const auto& L = builtin(d.name);
    ASSERT_EQ(static_cast<int>(L.size()), N.n) << d.name;
    auto el = [&](int i) { return L.element(N.names[i]); };
    EXPECT_EQ(L.top(), el(N.top));
    EXPECT_EQ(L.bottom(), el(N.bot));
    for (int a = 0; a < N.n; ++a) {
      EXPECT_EQ(L.ortho(el(a)), el(N.o(a)));
      for (int b = 0; b < N.n; ++b) {
        EXPECT_EQ(L.leq(el(a), el(b)), N.le[a][b]);
        EXPECT_EQ(L.join(el(a), el(b)), el(N.join(a, b)));
        EXPECT_EQ(L.meet(el(a), el(b)), el(N.meet(a, b)));
        for (auto k : kAllConnectives)
          EXPECT_EQ(L.connective(k, el(a), el(b)), el(oracle::apply(N, k, a, b))) << connective_name(k);
        EXPECT_EQ(L.commutator(el(a), el(b)), el(oracle::commutator(N, a, b)));
        EXPECT_EQ(L.commutes(el(a), el(b)), a == N.join(N.meet(a, b), N.meet(a, N.o(b))));
      }
    }
  }
}
