#pragma once

#include "schottky/scene.hpp"

#include <string>

namespace schottky {

// Standalone SVG 1.1 document; coordinates are rounded to 6 decimals.
// Throws DomainError for a degenerate viewport.
std::string render_scene(const Scene& scene);

}  // namespace schottky
