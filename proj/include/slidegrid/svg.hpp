#pragma once

#include <string>

#include "slidegrid/board.hpp"
#include "slidegrid/verify.hpp"

namespace slidegrid {

// Deterministic SVG: squares, blocks, walls as thick edge segments, a start
// marker, optional pass/stop/missing shading from a verification report.
// Integer coordinates only, so output is byte-identical across runs.
std::string render_svg(const Board& b, const VerificationReport* report = nullptr);

}  // namespace slidegrid
