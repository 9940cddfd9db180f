#pragma once

#include <cstdint>
#include <vector>

#include "slidegrid/board.hpp"

namespace slidegrid {

enum class Mode { pass, stop };

const char* mode_name(Mode m);

struct VerificationReport {
    Mode mode = Mode::pass;
    std::vector<Position> stops;    // reachable resting squares, row-major
    std::vector<Position> passed;   // stops plus every mid-slide square
    std::vector<Position> missing;  // required squares not covered
    bool complete = false;
};

// Least fixed point containing the start square and closed under moves.
std::vector<Position> reachable_stops(const Board& b);

// Union of swept squares over all moves from all reachable stops, the stops
// themselves, and full cycles swept by unbounded torus slides.
std::vector<Position> passed_squares(const Board& b);

// Required set: every non-block square (block obstacles) or every square
// (wall obstacles). Covered set: passed (pass mode) or stops (stop mode).
VerificationReport verify(const Board& b, Mode mode);

struct AllStartsResult {
    bool ok = false;
    Position first_failure;  // row-major first start that fails; valid when !ok
};
AllStartsResult verify_all_starts(const Board& b, Mode mode);

inline constexpr int kUnreachable = -1;

// Length of a shortest move sequence that stops on (stop mode) or sweeps
// (pass mode) the target; 0 when target == start. Targets on blocks are a
// contract violation.
int min_moves(const Board& b, Position target, Mode mode);

// ---------------------------------------------------------------------------
// Fast engine shared with the exact solver. A BoardView aliases bitmask rows
// owned by someone else, so the solver can toggle candidate obstacles in
// place without rebuilding Board objects.
namespace engine {

struct BoardView {
    Topology topo = Topology::rect;
    int rows = 1, cols = 1;
    Position start{1, 1};
    const std::uint64_t* block_row = nullptr;
    const std::uint64_t* block_col = nullptr;
    const std::uint64_t* wall_east_row = nullptr;   // may be null (no walls)
    const std::uint64_t* wall_south_col = nullptr;  // may be null
};

BoardView view_of(const Board& b);

struct Scratch {
    std::uint64_t visited[kMaxDim];
    std::uint64_t passed[kMaxDim];
    int queue[kMaxDim * kMaxDim];
};

// Fills scratch.visited (stops) and scratch.passed; rows above v.rows are
// left untouched.
void compute_cover(const BoardView& v, Scratch& s);

// True when the mode's coverage criterion holds from v.start.
bool complete(const BoardView& v, Mode mode, Scratch& s);

}  // namespace engine

}  // namespace slidegrid
