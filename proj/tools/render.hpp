#pragma once

#include <string>

#include "affine2/task.hpp"

namespace affine2::tools {

/// Vertices as their color digit, present edges as '=', absent as '-'.
/// The full level-1 task renders as "0=1=0=1".
std::string render_ascii(const AffineTask& a);

/// Static drawing 1000 units wide: colored vertex discs, thick black
/// segments for present edges, thin gray ones for absent edges.
std::string render_svg(const AffineTask& a);

}  // namespace affine2::tools
