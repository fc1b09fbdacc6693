#ifndef BREDON_GCW_IO_HPP
#define BREDON_GCW_IO_HPP

#include <string>

#include "bredon/complex.hpp"

namespace bredon {

// Parses the line-oriented .gcw format (see the grammar in the README).
// Sections resolve after the full read, so declaration order between groups,
// cells and faces is free; `gen`/`row` lines bind to the preceding `group`
// and `hom` lines to the preceding `face`. Throws ParseError (with the line
// number) and its subclasses on malformed input.
EquivariantCellComplex parse_complex(const std::string& text, std::size_t group_cap = 200);

EquivariantCellComplex load_complex_file(const std::string& path, std::size_t group_cap = 200);

// Canonical serialization; parsing it back reproduces the same complex.
std::string serialize_complex(const EquivariantCellComplex& x);

}  // namespace bredon

#endif
