#pragma once

#include <iosfwd>

#include "sperner/labeling.hpp"
#include "sperner/lattice.hpp"

namespace sperner {

/// Labeling text format: header `#labeling k=K q=Q`, then one line per
/// vertex, `a1 a2 ... ak -> c`, in canonical order, LF endings. Reading is
/// strict (exact header, every vertex once, canonical order, colors in
/// range); malformed input throws std::runtime_error naming the line.
void write_labeling(std::ostream& os, const Labeling& lab);
Labeling read_labeling(std::istream& is);

/// Lattice dump: one point per line, space-separated coordinates, canonical
/// order, no header.
void write_points(std::ostream& os, const Lattice& lattice);

/// Cell-base dump: `#cells k=K q=Q` header, then the bases (sum q-1) in the
/// lattice dump format.
void write_cells(std::ostream& os, int k, int q);

} // namespace sperner
