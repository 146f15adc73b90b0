#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scm/polar.hpp"

namespace scm::svg {

/// Deterministic scatter of labeled points on the warmth-competence plane:
/// fixed 800x800 viewbox, axes crossing at the origin, quadrant labels in
/// the corners. Byte-identical output for identical input (the generator
/// version is recorded in a leading comment).
std::string render_scatter(const std::vector<std::pair<std::string, PolarPoint>>& points);

}  // namespace scm::svg
