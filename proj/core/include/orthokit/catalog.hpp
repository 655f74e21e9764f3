#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "orthokit/lattice.hpp"

namespace orthokit {

/// Names of the shipped lattices: O6, MO2, NWD10, RW20.
const std::vector<std::string>& builtin_names();

/// A shipped lattice, built and verified from its Hasse diagram. Throws
/// `UnknownName`.
const OrthoLattice& builtin(std::string_view name);

/// Lattice file text:
///
///     lattice <name>
///     elements <e1> <e2> ...
///     covers <a><b [c<d ...]      (any number of lines)
///     ortho <a>:<b> ...
///
/// `#` starts a comment. Build errors are forwarded as `LatticeError`;
/// syntax problems raise `ParseError` with the line number.
OrthoLattice parse_lattice(std::string_view text);
OrthoLattice load_lattice(const std::string& path);

/// Canonical text: elements in a linear extension that breaks ties by name,
/// covers (the Hasse diagram) sorted by name, each ortho pair once in
/// element order. `format_lattice(parse_lattice(format_lattice(L)))` is
/// byte-identical to `format_lattice(L)`.
std::string format_lattice(const OrthoLattice& lattice);
void save_lattice(const OrthoLattice& lattice, const std::string& path);

/// Built-in name, else a lattice file path.
OrthoLattice resolve_lattice(const std::string& spec);

/// Same element names with the same order and ortho map.
bool same_structure_by_name(const OrthoLattice& a, const OrthoLattice& b);

}  // namespace orthokit
