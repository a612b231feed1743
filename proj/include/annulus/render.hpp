#pragma once
#include <string>
#include <vector>

#include "annulus/strings.hpp"

namespace annulus {

// Strip of the universal cover showing `translates` fundamental domains: marked points,
// the lifts of the triangulation and of the extra arcs (spirals decay towards the core line).
std::string cover_svg(const Model& m, const std::vector<Arc>& extra, int translates = 3);

}  // namespace annulus
