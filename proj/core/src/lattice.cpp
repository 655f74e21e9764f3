#include "orthokit/lattice.hpp"

#include <algorithm>
#include <map>

namespace orthokit {

std::string_view connective_symbol(ConnectiveKind kind) {
  switch (kind) {
    case ConnectiveKind::Sasaki: return "->1";
    case ConnectiveKind::Dishkant: return "->2";
    case ConnectiveKind::Kalmbach: return "->3";
    case ConnectiveKind::Relevance: return "->5";
    case ConnectiveKind::Classical: return "->0";
    case ConnectiveKind::QuantumEquiv: return "==";
    case ConnectiveKind::ClassicalEquiv: return "==0";
  }
  return "?";
}

std::string_view connective_name(ConnectiveKind kind) {
  switch (kind) {
    case ConnectiveKind::Sasaki: return "Sasaki";
    case ConnectiveKind::Dishkant: return "Dishkant";
    case ConnectiveKind::Kalmbach: return "Kalmbach";
    case ConnectiveKind::Relevance: return "Relevance";
    case ConnectiveKind::Classical: return "Classical";
    case ConnectiveKind::QuantumEquiv: return "QuantumEquiv";
    case ConnectiveKind::ClassicalEquiv: return "ClassicalEquiv";
  }
  return "?";
}

std::string_view lattice_error_name(LatticeErrorKind kind) {
  switch (kind) {
    case LatticeErrorKind::InvalidInput: return "InvalidInput";
    case LatticeErrorKind::NotAPoset: return "NotAPoset";
    case LatticeErrorKind::NotALattice: return "NotALattice";
    case LatticeErrorKind::NotBounded: return "NotBounded";
    case LatticeErrorKind::NotAnOrtholattice: return "NotAnOrtholattice";
  }
  return "?";
}

OrthoLattice::OrthoLattice(LatticeTables tables) : tables_(std::move(tables)) {
  const std::size_t n = tables_.names.size();
  auto square = [n](const auto& table) {
    return table.size() == n && std::all_of(table.begin(), table.end(), [n](const auto& row) { return row.size() == n; });
  };
  if (!square(tables_.leq) || !square(tables_.join) || !square(tables_.meet) || tables_.ortho.size() != n)
    throw DomainError("lattice tables for " + tables_.name + " are not sized " + std::to_string(n));
  if (n > 0 && (tables_.bottom >= n || tables_.top >= n)) throw DomainError("bottom/top out of range");
  for (std::size_t a = 0; a < n; ++a) {
    if (tables_.ortho[a] >= n) throw DomainError("ortho table entry out of range");
    for (std::size_t b = 0; b < n; ++b)
      if (tables_.join[a][b] >= n || tables_.meet[a][b] >= n) throw DomainError("join/meet table entry out of range");
  }
}

std::vector<Element> OrthoLattice::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(static_cast<std::uint16_t>(i));
  return out;
}

std::optional<Element> OrthoLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i)
    if (tables_.names[i] == name) return Element(static_cast<std::uint16_t>(i));
  return std::nullopt;
}

Element OrthoLattice::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw DomainError("no element named '" + std::string(name) + "' in lattice " + tables_.name);
}

const std::string& OrthoLattice::name_of(Element a) const { return tables_.names[check(a)]; }

Element OrthoLattice::connective(ConnectiveKind kind, Element a, Element b) const {
  const Element na = ortho(a);
  const Element nb = ortho(b);
  switch (kind) {
    case ConnectiveKind::Sasaki:
      return join(na, meet(a, b));
    case ConnectiveKind::Dishkant:
      // b' ->1 a' = b'' v (b' ^ a')
      return join(ortho(nb), meet(nb, na));
    case ConnectiveKind::Kalmbach:
      return join(join(meet(na, b), meet(na, nb)), meet(a, join(na, b)));
    case ConnectiveKind::Relevance:
      return join(join(meet(a, b), meet(na, b)), meet(na, nb));
    case ConnectiveKind::Classical:
      return join(na, b);
    case ConnectiveKind::QuantumEquiv:
      return join(meet(a, b), meet(na, nb));
    case ConnectiveKind::ClassicalEquiv:
      return meet(join(na, b), join(nb, a));
  }
  throw DomainError("unknown connective");
}

bool OrthoLattice::commutes(Element a, Element b) const {
  return a == join(meet(a, b), meet(a, ortho(b)));
}

bool OrthoLattice::weakly_commutes(Element a, Element b) const {
  return connective(ConnectiveKind::QuantumEquiv, a, join(meet(a, b), meet(a, ortho(b)))) == top();
}

Element OrthoLattice::commutator(Element a, Element b) const {
  const Element na = ortho(a);
  const Element nb = ortho(b);
  return join(join(meet(a, b), meet(a, nb)), join(meet(na, b), meet(na, nb)));
}

std::vector<std::pair<Element, Element>> OrthoLattice::covers() const {
  std::vector<std::pair<Element, Element>> out;
  const auto n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !tables_.leq[a][b]) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c)
        if (c != a && c != b && tables_.leq[a][c] && tables_.leq[c][b]) direct = false;
      if (direct) out.emplace_back(Element(static_cast<std::uint16_t>(a)), Element(static_cast<std::uint16_t>(b)));
    }
  }
  return out;
}

namespace {

using Table = std::vector<std::vector<std::uint16_t>>;

// Unique least element of `candidates` under `leq`, if one exists.
std::optional<std::uint16_t> least(const std::vector<std::uint16_t>& candidates,
                                   const std::vector<std::vector<bool>>& leq) {
  for (auto c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(), [&](auto d) { return leq[c][d]; })) return c;
  return std::nullopt;
}

std::optional<std::uint16_t> greatest(const std::vector<std::uint16_t>& candidates,
                                      const std::vector<std::vector<bool>>& leq) {
  for (auto c : candidates)
    if (std::all_of(candidates.begin(), candidates.end(), [&](auto d) { return leq[d][c]; })) return c;
  return std::nullopt;
}

}  // namespace

OrthoLattice OrthoLattice::from_covers(std::string name, const std::vector<std::string>& elements,
                                       const std::vector<std::pair<std::string, std::string>>& covers,
                                       const std::vector<std::pair<std::string, std::string>>& ortho_pairs) {
  const std::size_t n = elements.size();
  if (n == 0) throw LatticeError(LatticeErrorKind::NotBounded, "empty element set has no top or bottom");
  if (n > 0xFFFF) throw LatticeError(LatticeErrorKind::InvalidInput, "too many elements");

  std::map<std::string, std::uint16_t, std::less<>> index;
  for (std::size_t i = 0; i < n; ++i) {
    if (!index.emplace(elements[i], static_cast<std::uint16_t>(i)).second)
      throw LatticeError(LatticeErrorKind::InvalidInput, "duplicate element name '" + elements[i] + "'");
  }
  auto lookup = [&](const std::string& s) {
    auto it = index.find(s);
    if (it == index.end()) throw LatticeError(LatticeErrorKind::InvalidInput, "undeclared element '" + s + "'");
    return it->second;
  };

  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : covers) leq[lookup(lo)][lookup(hi)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k][j]) leq[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i][j] && leq[j][i])
        throw LatticeError(LatticeErrorKind::NotAPoset,
                           "cycle through '" + elements[i] + "' and '" + elements[j] + "'");

  Table join(n, std::vector<std::uint16_t>(n));
  Table meet(n, std::vector<std::uint16_t>(n));
  std::vector<std::uint16_t> bounds;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (leq[a][c] && leq[b][c]) bounds.push_back(static_cast<std::uint16_t>(c));
      auto lub = least(bounds, leq);
      if (!lub)
        throw LatticeError(LatticeErrorKind::NotALattice,
                           "'" + elements[a] + "' and '" + elements[b] + "' have no least upper bound");
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (leq[c][a] && leq[c][b]) bounds.push_back(static_cast<std::uint16_t>(c));
      auto glb = greatest(bounds, leq);
      if (!glb)
        throw LatticeError(LatticeErrorKind::NotALattice,
                           "'" + elements[a] + "' and '" + elements[b] + "' have no greatest lower bound");
      join[a][b] = join[b][a] = *lub;
      meet[a][b] = meet[b][a] = *glb;
    }
  }

  std::vector<std::uint16_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<std::uint16_t>(i);
  auto top = greatest(all, leq);
  auto bottom = least(all, leq);
  if (!top || !bottom) throw LatticeError(LatticeErrorKind::NotBounded, "no unique top or bottom");

  constexpr std::uint16_t kUnset = 0xFFFF;
  std::vector<std::uint16_t> ortho(n, kUnset);
  for (const auto& [x, y] : ortho_pairs) {
    const auto a = lookup(x);
    const auto b = lookup(y);
    if (ortho[a] != kUnset || (a != b && ortho[b] != kUnset))
      throw LatticeError(LatticeErrorKind::NotAnOrtholattice, "element in more than one ortho pair: '" + x + ":" + y + "'");
    ortho[a] = b;
    ortho[b] = a;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (ortho[i] == kUnset)
      throw LatticeError(LatticeErrorKind::NotAnOrtholattice, "ortho map misses '" + elements[i] + "'");

  LatticeTables tables{std::move(name), elements, std::move(leq), std::move(join), std::move(meet),
                       std::move(ortho), *bottom, *top};
  OrthoLattice lattice(std::move(tables));
  const auto report = verify_ortholattice(lattice);
  if (const auto* failure = report.first_failure()) {
    std::string witness;
    for (auto e : failure->witness) witness += (witness.empty() ? "" : ",") + lattice.name_of(e);
    throw LatticeError(LatticeErrorKind::NotAnOrtholattice, failure->name + " fails at (" + witness + ")");
  }
  return lattice;
}

OrderAnswer order_query(const OrthoLattice& lattice, OrderOp op, Element a, std::optional<Element> b) {
  if (op == OrderOp::Ortho) return {std::nullopt, lattice.ortho(a)};
  if (!b) throw PreconditionError("binary order query needs a second element");
  switch (op) {
    case OrderOp::Leq: return {lattice.leq(a, *b), std::nullopt};
    case OrderOp::Join: return {std::nullopt, lattice.join(a, *b)};
    case OrderOp::Meet: return {std::nullopt, lattice.meet(a, *b)};
    case OrderOp::Ortho: break;
  }
  return {};
}

bool VerificationReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

VerificationReport verify_ortholattice(const OrthoLattice& L) {
  VerificationReport report;
  const auto els = L.elements();
  const Element one = L.top();
  const Element zero = L.bottom();

  auto unary = [&](std::string name, auto pred) {
    AxiomCheck c{std::move(name), true, {}};
    for (auto a : els)
      if (!pred(a)) {
        c.passed = false;
        c.witness = {a};
        break;
      }
    report.checks.push_back(std::move(c));
  };
  auto binary = [&](std::string name, auto pred) {
    AxiomCheck c{std::move(name), true, {}};
    for (auto a : els) {
      for (auto b : els)
        if (!pred(a, b)) {
          c.passed = false;
          c.witness = {a, b};
          break;
        }
      if (!c.passed) break;
    }
    report.checks.push_back(std::move(c));
  };
  auto ternary = [&](std::string name, auto pred) {
    AxiomCheck c{std::move(name), true, {}};
    for (auto a : els) {
      for (auto b : els) {
        for (auto x : els)
          if (!pred(a, b, x)) {
            c.passed = false;
            c.witness = {a, b, x};
            break;
          }
        if (!c.passed) break;
      }
      if (!c.passed) break;
    }
    report.checks.push_back(std::move(c));
  };

  binary("leq antisymmetric", [&](Element a, Element b) { return !(L.leq(a, b) && L.leq(b, a)) || a == b; });
  unary("leq reflexive", [&](Element a) { return L.leq(a, a); });
  ternary("leq transitive", [&](Element a, Element b, Element c) { return !(L.leq(a, b) && L.leq(b, c)) || L.leq(a, c); });
  binary("join is least upper bound", [&](Element a, Element b) {
    const Element j = L.join(a, b);
    if (!L.leq(a, j) || !L.leq(b, j)) return false;
    for (auto c : els)
      if (L.leq(a, c) && L.leq(b, c) && !L.leq(j, c)) return false;
    return true;
  });
  binary("meet is greatest lower bound", [&](Element a, Element b) {
    const Element m = L.meet(a, b);
    if (!L.leq(m, a) || !L.leq(m, b)) return false;
    for (auto c : els)
      if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, m)) return false;
    return true;
  });
  binary("a v b = b v a", [&](Element a, Element b) { return L.join(a, b) == L.join(b, a); });
  ternary("(a v b) v c = a v (b v c)",
          [&](Element a, Element b, Element c) { return L.join(L.join(a, b), c) == L.join(a, L.join(b, c)); });
  unary("a'' = a", [&](Element a) { return L.ortho(L.ortho(a)) == a; });
  binary("a v (b v b') = b v b'", [&](Element a, Element b) {
    const Element bb = L.join(b, L.ortho(b));
    return L.join(a, bb) == bb;
  });
  binary("a v (a ^ b) = a", [&](Element a, Element b) { return L.join(a, L.meet(a, b)) == a; });
  binary("a ^ b = (a' v b')'",
         [&](Element a, Element b) { return L.meet(a, b) == L.ortho(L.join(L.ortho(a), L.ortho(b))); });
  unary("a v a' = 1 and a ^ a' = 0",
        [&](Element a) { return L.join(a, L.ortho(a)) == one && L.meet(a, L.ortho(a)) == zero; });
  binary("a <= b iff a ^ b = a iff a v b = b", [&](Element a, Element b) {
    const bool le = L.leq(a, b);
    return le == (L.meet(a, b) == a) && le == (L.join(a, b) == b);
  });
  binary("a <= b implies b' <= a'",
         [&](Element a, Element b) { return !L.leq(a, b) || L.leq(L.ortho(b), L.ortho(a)); });
  return report;
}

}  // namespace orthokit
