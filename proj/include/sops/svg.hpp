#pragma once

#include <iosfwd>
#include <string>

#include "sops/configuration.hpp"

namespace sops {

// Draws occupied cells as unit circles at the standard embedding
// (x = q + r/2, y = r*sqrt(3)/2, y growing upward) with occupied lattice
// edges as segments.
void write_svg(std::ostream& out, const Configuration& c);
void write_svg_file(const std::string& path, const Configuration& c);

}  // namespace sops
