#include "orthokit/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace orthokit {

namespace {

struct Diagram {
  const char* name;
  const char* elements;
  const char* covers;
  const char* ortho;
};

// Hasse diagrams transcribed from the drawings; element order fixes the
// lexicographic order of counterexample search.
constexpr Diagram kDiagrams[] = {
    {"O6", "0 x y yp xp 1", "0<x x<y y<1 0<yp yp<xp xp<1", "x:xp y:yp 0:1"},
    {"MO2", "0 x y xp yp 1", "0<x 0<y 0<xp 0<yp x<1 y<1 xp<1 yp<1", "x:xp y:yp 0:1"},
    {"NWD10", "0 x w zp y yp z wp xp 1",
     "0<x 0<w 0<zp x<y x<wp w<z w<xp zp<wp zp<yp y<z yp<xp z<1 wp<1 xp<1", "x:xp y:yp z:zp w:wp 0:1"},
    {"RW20", "0 w z y x vp up t s r u v rp sp tp xp yp zp wp 1",
     "0<w 0<vp 0<xp w<z w<r z<y z<t y<x vp<up vp<z up<t up<rp r<s r<u t<s s<x tp<u u<v "
     "xp<yp xp<sp yp<zp zp<v sp<rp sp<tp tp<zp zp<wp rp<wp x<1 v<1 wp<1",
     "w:wp z:zp y:yp x:xp t:tp s:sp r:rp u:up v:vp 0:1"},
};

std::vector<std::string> words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& token, char sep, std::size_t line) {
  const auto at = token.find(sep);
  if (at == std::string::npos || at == 0 || at + 1 == token.size() || token.find(sep, at + 1) != std::string::npos)
    throw ParseError("malformed pair '" + token + "', expected a" + std::string(1, sep) + "b", 0, line);
  return {token.substr(0, at), token.substr(at + 1)};
}

OrthoLattice build(const Diagram& d) {
  std::vector<std::pair<std::string, std::string>> covers, ortho;
  for (const auto& c : words(d.covers)) covers.push_back(split_pair(c, '<', 0));
  for (const auto& o : words(d.ortho)) ortho.push_back(split_pair(o, ':', 0));
  return OrthoLattice::from_covers(d.name, words(d.elements), covers, ortho);
}

// Linear extension of the order; among minimal remaining elements the
// smallest name goes first.
std::vector<Element> canonical_order(const OrthoLattice& L) {
  std::vector<Element> order;
  std::vector<bool> placed(L.size(), false);
  while (order.size() < L.size()) {
    std::optional<Element> pick;
    for (auto e : L.elements()) {
      if (placed[e.id()]) continue;
      bool minimal = true;
      for (auto f : L.elements())
        if (!placed[f.id()] && f != e && L.leq(f, e)) minimal = false;
      if (minimal && (!pick || L.name_of(e) < L.name_of(*pick))) pick = e;
    }
    placed[pick->id()] = true;
    order.push_back(*pick);
  }
  return order;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& d : kDiagrams) n.emplace_back(d.name);
    return n;
  }();
  return names;
}

const OrthoLattice& builtin(std::string_view name) {
  static const std::vector<OrthoLattice> lattices = [] {
    std::vector<OrthoLattice> out;
    for (const auto& d : kDiagrams) out.push_back(build(d));
    return out;
  }();
  for (const auto& L : lattices)
    if (L.name() == name) return L;
  throw UnknownName("unknown built-in lattice '" + std::string(name) + "'");
}

OrthoLattice parse_lattice(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> elements;
  std::vector<std::pair<std::string, std::string>> covers, ortho;
  std::size_t ortho_line = 0;
  std::size_t line_number = 0;

  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = words(line);
    if (toks.empty()) continue;
    const std::string key = toks.front();
    toks.erase(toks.begin());
    if (ortho_line != 0) throw ParseError("'ortho' must be the last line", 0, line_number);
    if (key == "lattice") {
      if (name) throw ParseError("duplicate 'lattice' line", 0, line_number);
      if (toks.size() != 1) throw ParseError("expected 'lattice <name>'", 0, line_number);
      name = toks.front();
    } else if (key == "elements") {
      if (!name) throw ParseError("'lattice' line must come first", 0, line_number);
      if (elements) throw ParseError("duplicate 'elements' line", 0, line_number);
      if (toks.empty()) throw ParseError("no elements", 0, line_number);
      std::set<std::string> seen;
      for (const auto& t : toks) {
        if (t.find_first_of("<:") != std::string::npos)
          throw ParseError("bad element name '" + t + "'", 0, line_number);
        if (!seen.insert(t).second) throw ParseError("duplicate element '" + t + "'", 0, line_number);
      }
      elements = toks;
    } else if (key == "covers") {
      if (!elements) throw ParseError("'covers' before 'elements'", 0, line_number);
      for (const auto& t : toks) {
        auto p = split_pair(t, '<', line_number);
        for (const auto* e : {&p.first, &p.second})
          if (std::find(elements->begin(), elements->end(), *e) == elements->end())
            throw ParseError("undeclared element '" + *e + "'", 0, line_number);
        covers.push_back(std::move(p));
      }
    } else if (key == "ortho") {
      if (!elements) throw ParseError("'ortho' before 'elements'", 0, line_number);
      ortho_line = line_number;
      std::set<std::string> seen;
      for (const auto& t : toks) {
        auto p = split_pair(t, ':', line_number);
        for (const auto* e : {&p.first, &p.second}) {
          if (std::find(elements->begin(), elements->end(), *e) == elements->end())
            throw ParseError("undeclared element '" + *e + "'", 0, line_number);
          if (!seen.insert(*e).second) throw ParseError("element '" + *e + "' paired twice", 0, line_number);
        }
        ortho.push_back(std::move(p));
      }
      if (seen.size() != elements->size()) throw ParseError("incomplete ortho map", 0, line_number);
    } else {
      throw ParseError("unknown keyword '" + key + "'", 0, line_number);
    }
  }
  if (!name) throw ParseError("missing 'lattice' line", 0, line_number + 1);
  if (!elements) throw ParseError("missing 'elements' line", 0, line_number + 1);
  if (ortho_line == 0) throw ParseError("incomplete ortho map", 0, line_number + 1);
  return OrthoLattice::from_covers(*name, *elements, covers, ortho);
}

OrthoLattice load_lattice(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open lattice file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice(ss.str());
}

std::string format_lattice(const OrthoLattice& L) {
  const auto order = canonical_order(L);
  std::string out = "lattice " + L.name() + "\nelements";
  for (auto e : order) out += " " + L.name_of(e);
  out += "\ncovers";
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lo, hi] : L.covers()) covers.emplace_back(L.name_of(lo), L.name_of(hi));
  std::sort(covers.begin(), covers.end());
  for (const auto& [lo, hi] : covers) out += " " + lo + "<" + hi;
  out += "\northo";
  std::set<std::uint16_t> done;
  for (auto e : order) {
    if (done.count(e.id())) continue;
    const Element o = L.ortho(e);
    done.insert(e.id());
    done.insert(o.id());
    out += " " + L.name_of(e) + ":" + L.name_of(o);
  }
  out += "\n";
  return out;
}

void save_lattice(const OrthoLattice& lattice, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write lattice file '" + path + "'");
  out << format_lattice(lattice);
  if (!out) throw Error("write to '" + path + "' failed");
}

OrthoLattice resolve_lattice(const std::string& spec) {
  const auto& names = builtin_names();
  if (std::find(names.begin(), names.end(), spec) != names.end()) return builtin(spec);
  return load_lattice(spec);
}

bool same_structure_by_name(const OrthoLattice& a, const OrthoLattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> map(a.size());
  for (auto e : a.elements()) {
    auto f = b.find(a.name_of(e));
    if (!f) return false;
    map[e.id()] = *f;
  }
  for (auto x : a.elements()) {
    if (map[a.ortho(x).id()] != b.ortho(map[x.id()])) return false;
    for (auto y : a.elements())
      if (a.leq(x, y) != b.leq(map[x.id()], map[y.id()])) return false;
  }
  return true;
}

}  // namespace orthokit
