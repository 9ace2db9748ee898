#pragma once

#include <string>

#include "rhcgt/thermo.hpp"

namespace rh {

/// SVG 1.1 plot of a thermograph. Values grow leftward and the penalty grows
/// upward; the mast above the apex is dashed. Output is byte-for-byte
/// deterministic for equal thermographs.
std::string thermograph_svg(const Thermograph& t, const std::string& title = "");

}  // namespace rh
