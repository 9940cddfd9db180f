#pragma once

#include <utility>
#include <vector>

#include "slidegrid/board.hpp"

namespace slidegrid {

enum class Direction { N, S, E, W, NE, NW, SE, SW };

inline constexpr Direction kOrthogonal[4] = {Direction::N, Direction::S, Direction::E, Direction::W};
inline constexpr Direction kAllDirections[8] = {Direction::N,  Direction::S,  Direction::E,  Direction::W,
                                                Direction::NE, Direction::NW, Direction::SE, Direction::SW};

bool direction_legal(Topology topo, Direction d);
const char* direction_name(Direction d);

struct SlideResult {
    enum class Outcome { moved, noop, unbounded };
    Outcome outcome = Outcome::noop;
    Position end;                  // valid for moved
    std::vector<Position> swept;   // moved: origin..end in slide order;
                                   // unbounded (torus): the full cycle, origin first
};

// One slide: the robot advances until the next square in direction d is a
// block, separated by a wall, or off-board. On a torus indices wrap; a
// direction whose cycle holds no block is "unbounded": the robot never stops
// but sweeps the whole cycle. Diagonal slides (king) consider only squares on
// their own ray. Throws std::invalid_argument on contract violations
// (origin out of bounds or on a block, direction illegal for the topology).
SlideResult slide(const Board& b, Position from, Direction d);

// Directions whose outcome is moved; noop and unbounded are excluded (they
// are not edges of the move graph).
std::vector<std::pair<Direction, SlideResult>> legal_moves(const Board& b, Position from);

}  // namespace slidegrid
