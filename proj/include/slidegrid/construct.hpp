#pragma once

#include <optional>
#include <string>

#include "slidegrid/board.hpp"
#include "slidegrid/verify.hpp"

namespace slidegrid {

enum class Family { grid_bp, torus_bp, king_bp, grid_bs, grid_wp, grid_ws };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// pass for *_bp / *_wp, stop for *_bs / *_ws.
Mode family_mode(Family f);

struct Construction {
    Board board;
    long long claimed_size = 0;
    Family family = Family::grid_bp;
};

// Emits the published obstacle placement for the family at the given
// dimensions. For king_bp the parameters (n, m) produce a board of
// (n+1) x (m+1). Families grid_* expect n >= m; torus accepts any order
// (the torus is symmetric). grid_ws with m == 1 and n >= 3 has no solution
// at any wall count and throws BoardError.
Construction construct(Family f, int n, int m);

// The family size formula. For grid_bp, torus_bp, king_bp and grid_wp this
// is the exact claimed size; for grid_bs and grid_ws it is the upper bound
// the emitted size must stay under (claimed_size <= bound).
long long family_size_bound(Family f, int n, int m);
bool family_size_is_exact(Family f);

}  // namespace slidegrid
