#include "orthokit/generate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

#include "orthokit/catalog.hpp"
#include "orthokit/error.hpp"

namespace orthokit {

namespace {

struct Diagram {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, std::string> ortho;

  std::string text() const {
    std::string out = "lattice " + name + "\nelements";
    for (const auto& e : elements) out += " " + e;
    out += "\ncovers";
    for (const auto& [a, b] : covers) out += " " + a + "<" + b;
    out += "\northo";
    std::set<std::string> done;
    for (const auto& e : elements) {
      if (done.count(e)) continue;
      const auto& f = ortho.at(e);
      done.insert(e);
      done.insert(f);
      out += " " + e + ":" + f;
    }
    return out + "\n";
  }
};

Diagram from_lattice(const OrthoLattice& L) {
  Diagram d{L.name(), {}, {}, {}};
  for (auto e : L.elements()) {
    d.elements.push_back(L.name_of(e));
    d.ortho[L.name_of(e)] = L.name_of(L.ortho(e));
  }
  for (auto [a, b] : L.covers()) d.covers.emplace_back(L.name_of(a), L.name_of(b));
  return d;
}

Diagram boolean_block(unsigned atoms) {
  Diagram d{"B" + std::to_string(1u << atoms), {}, {}, {}};
  const unsigned full = (1u << atoms) - 1;
  auto name = [full](unsigned m) {
    if (m == 0) return std::string("0");
    if (m == full) return std::string("1");
    return "b" + std::to_string(m);
  };
  for (unsigned m = 0; m <= full; ++m) {
    d.elements.push_back(name(m));
    d.ortho[name(m)] = name(full & ~m);
    for (unsigned bit = 0; bit < atoms; ++bit)
      if (!(m & (1u << bit))) d.covers.emplace_back(name(m), name(m | (1u << bit)));
  }
  return d;
}

// Glues two blocks at their bounds; inner elements get per-block prefixes.
Diagram horizontal_sum(const Diagram& left, const Diagram& right, const std::string& bottom_l,
                       const std::string& top_l, const std::string& bottom_r, const std::string& top_r) {
  Diagram d{left.name + "+" + right.name, {"0"}, {}, {{"0", "1"}, {"1", "0"}}};
  auto add = [&d](const Diagram& block, const std::string& prefix, const std::string& lo, const std::string& hi) {
    auto rename = [&](const std::string& e) {
      if (e == lo) return std::string("0");
      if (e == hi) return std::string("1");
      return prefix + e;
    };
    for (const auto& e : block.elements)
      if (e != lo && e != hi) {
        d.elements.push_back(prefix + e);
        d.ortho[prefix + e] = rename(block.ortho.at(e));
      }
    for (const auto& [a, b] : block.covers) d.covers.emplace_back(rename(a), rename(b));
  };
  add(left, "l", bottom_l, top_l);
  add(right, "r", bottom_r, top_r);
  d.elements.push_back("1");
  return d;
}

// Adds or removes a cover together with its ortho mirror.
void edit(Diagram& d, std::mt19937& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) == 0 && !d.covers.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, d.covers.size() - 1);
    const auto [a, b] = d.covers[pick(rng)];
    const std::pair<std::string, std::string> mirror{d.ortho.at(b), d.ortho.at(a)};
    std::erase_if(d.covers, [&](const auto& c) { return c == std::pair{a, b} || c == mirror; });
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, d.elements.size() - 1);
    const auto& a = d.elements[pick(rng)];
    const auto& b = d.elements[pick(rng)];
    if (a == b) return;
    d.covers.emplace_back(a, b);
    std::pair<std::string, std::string> mirror{d.ortho.at(b), d.ortho.at(a)};
    if (mirror != std::pair{a, b}) d.covers.push_back(std::move(mirror));
  }
}

}  // namespace

std::vector<GeneratedLattice> random_lattice_files(std::size_t count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<Diagram> blocks;
  std::vector<std::pair<std::string, std::string>> bounds;
  for (const auto& n : builtin_names()) {
    const auto& L = builtin(n);
    blocks.push_back(from_lattice(L));
    bounds.emplace_back(L.name_of(L.bottom()), L.name_of(L.top()));
  }
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    blocks.push_back(boolean_block(atoms));
    bounds.emplace_back("0", "1");
  }
  const std::size_t catalog = builtin_names().size();

  std::vector<GeneratedLattice> out;
  std::set<std::string> seen;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<std::size_t> any_block(0, blocks.size() - 1);
  std::uniform_int_distribution<std::size_t> any_catalog(0, catalog - 1);
  std::uniform_int_distribution<int> edits(1, 2);
  const std::size_t max_attempts = 200 * count + 1000;
  for (std::size_t attempt = 0; out.size() < count && attempt < max_attempts; ++attempt) {
    const int k = kind(rng);
    Diagram d;
    std::string origin;
    if (k == 0) {
      d = blocks[any_catalog(rng)];
      origin = "edited " + d.name;
    } else {
      const auto i = any_block(rng), j = any_block(rng);
      d = horizontal_sum(blocks[i], blocks[j], bounds[i].first, bounds[i].second, bounds[j].first, bounds[j].second);
      origin = (k == 1 ? "horizontal sum " : "edited horizontal sum ") + d.name;
    }
    if (k != 1)
      for (int e = edits(rng); e > 0; --e) edit(d, rng);
    d.name = "gen" + std::to_string(out.size());
    std::string text = d.text();
    try {
      parse_lattice(text);
    } catch (const LatticeError&) {
      continue;
    }
    // Names are renumbered, so compare bodies without the first line.
    if (!seen.insert(text.substr(text.find('\n'))).second) continue;
    out.push_back({std::move(text), std::move(origin)});
  }
  if (out.size() < count) throw Error("could not generate enough valid lattices");
  return out;
}

}  // namespace orthokit
