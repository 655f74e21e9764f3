#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orthokit {

struct GeneratedLattice {
  std::string text;    // lattice file contents
  std::string origin;  // how it was produced, for diagnostics
};

/// `count` distinct lattice files, each a valid ortholattice. Sources are
/// catalog diagrams with a few ortho-symmetric cover edits (candidates that
/// fail to build are discarded), horizontal sums of two catalog or Boolean
/// blocks, and edited horizontal sums. Deterministic for a given seed.
std::vector<GeneratedLattice> random_lattice_files(std::size_t count, std::uint32_t seed);

}  // namespace orthokit
