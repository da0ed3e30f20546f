#pragma once

#include <string>

#include "sperner/geometry.hpp"
#include "sperner/labeling.hpp"

namespace sperner {

/// SVG 1.1 picture of a k=3 labeling: the full triangulation with up-cells
/// filled by their cell class (mono cells take their color, others gray),
/// down-cells outlined, rainbow triangles marked, and vertices colored by
/// label. Elements carry machine-checkable class attributes
/// ("cell up mono color-1", "vertex color-2", ...). Output is byte-stable
/// for a given labeling.
std::string render_labeling_svg(const Labeling& lab);

/// SVG 1.1 picture of the k=3 Voronoi-type partition for base point z: the
/// triangle, the three separating segments meeting at z, and the exact
/// separating-set content in an annotation.
std::string render_voronoi_svg(const VoronoiSpec& spec);

} // namespace sperner
