#pragma once

#include <stdexcept>
#include <string>

#include "reslat/spectra.hpp"

namespace reslat {

/// The input document is malformed. `path` is a JSON pointer to the
/// offending value ("" for the whole document).
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(std::string path, const std::string& message)
      : std::invalid_argument(message + (path.empty() ? "" : " at " + path)), path(std::move(path)) {}
  std::string path;
};

struct LatticeDocument {
  std::string name;
  ResiduatedLattice lattice;
};

/// Parses and validates a lattice document. Throws SchemaError,
/// StructuralError (the order is not a lattice), ResiduumError or AxiomError.
LatticeDocument parse_lattice(const std::string& text);
LatticeDocument load_lattice(const std::string& path);

enum class JsonStyle {
  /// One key per line, one table row per line. Used for bundled files.
  pretty,
  /// A single line. Used for enumeration streams.
  compact,
};

/// Canonical document: sorted keys, labels in index order, cover pairs sorted
/// by index, no imp table, LF line endings, trailing newline.
std::string serialize_lattice(const ResiduatedLattice& l, const std::string& name,
                              JsonStyle style = JsonStyle::pretty);

/// Hasse diagram, edges from lower to upper cover.
std::string hasse_dot(const ResiduatedLattice& l, const std::string& name);
/// Prime spectrum under inclusion (cover edges only). Maximal primes are
/// boxes, minimal primes double circles.
std::string spectrum_dot(const ResiduatedLattice& l, const Spectrum& s, const std::string& name);

}  // namespace reslat
