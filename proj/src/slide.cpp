#include "slidegrid/slide.hpp"

#include <stdexcept>

namespace slidegrid {

bool direction_legal(Topology topo, Direction d) {
    switch (d) {
        case Direction::N:
        case Direction::S:
        case Direction::E:
        case Direction::W:
            return true;
        default:
            return topo == Topology::king;
    }
}

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::N: return "N";
        case Direction::S: return "S";
        case Direction::E: return "E";
        case Direction::W: return "W";
        case Direction::NE: return "NE";
        case Direction::NW: return "NW";
        case Direction::SE: return "SE";
        case Direction::SW: return "SW";
    }
    return "?";
}

namespace {

void direction_delta(Direction d, int& dr, int& dc) {
    switch (d) {
        case Direction::N: dr = -1; dc = 0; break;
        case Direction::S: dr = 1; dc = 0; break;
        case Direction::E: dr = 0; dc = 1; break;
        case Direction::W: dr = 0; dc = -1; break;
        case Direction::NE: dr = -1; dc = 1; break;
        case Direction::NW: dr = -1; dc = -1; break;
        case Direction::SE: dr = 1; dc = 1; break;
        case Direction::SW: dr = 1; dc = -1; break;
    }
}

// Wall between two orthogonally adjacent squares (rect boards only).
bool wall_between(const Board& b, Position a, Position d) {
    if (a.row == d.row) {
        int c = std::min(a.col, d.col);
        return b.has_wall_east(a.row, c);
    }
    int r = std::min(a.row, d.row);
    return b.has_wall_south(r, a.col);
}

}  // namespace

SlideResult slide(const Board& b, Position from, Direction d) {
    if (!b.in_bounds(from) || b.is_block(from))
        throw std::invalid_argument("slide origin must be a non-block square on the board");
    if (!direction_legal(b.topology, d))
        throw std::invalid_argument("diagonal slides are only legal on king boards");

    int dr, dc;
    direction_delta(d, dr, dc);

    SlideResult res;
    res.swept.push_back(from);

    if (b.topology == Topology::torus) {
        bool horizontal = dr == 0;
        std::uint64_t cycle_blocks =
            horizontal ? b.block_row[from.row - 1] : b.block_col[from.col - 1];
        int cycle_len = horizontal ? b.cols : b.rows;
        auto wrap = [&](Position p) {
            return Position{(p.row - 1 + dr + b.rows) % b.rows + 1,
                            (p.col - 1 + dc + b.cols) % b.cols + 1};
        };
        if (cycle_blocks == 0) {
            // No stop anywhere on the cycle: the robot never rests but passes
            // over every square of the cycle.
            res.outcome = SlideResult::Outcome::unbounded;
            Position cur = from;
            for (int i = 1; i < cycle_len; ++i) {
                cur = wrap(cur);
                res.swept.push_back(cur);
            }
            return res;
        }
        Position cur = from;
        while (!b.is_block(wrap(cur))) {
            cur = wrap(cur);
            res.swept.push_back(cur);
        }
        if (cur == from) {
            res.outcome = SlideResult::Outcome::noop;
            res.swept.clear();
            return res;
        }
        res.outcome = SlideResult::Outcome::moved;
        res.end = cur;
        return res;
    }

    Position cur = from;
    for (;;) {
        Position next{cur.row + dr, cur.col + dc};
        if (!b.in_bounds(next) || b.is_block(next)) break;
        if (dr == 0 || dc == 0) {
            if (wall_between(b, cur, next)) break;
        }
        cur = next;
        res.swept.push_back(cur);
    }
    if (cur == from) {
        res.outcome = SlideResult::Outcome::noop;
        res.swept.clear();
        return res;
    }
    res.outcome = SlideResult::Outcome::moved;
    res.end = cur;
    return res;
}

std::vector<std::pair<Direction, SlideResult>> legal_moves(const Board& b, Position from) {
    std::vector<std::pair<Direction, SlideResult>> moves;
    int ndirs = b.topology == Topology::king ? 8 : 4;
    for (int i = 0; i < ndirs; ++i) {
        Direction d = kAllDirections[i];
        SlideResult r = slide(b, from, d);
        if (r.outcome == SlideResult::Outcome::moved) moves.emplace_back(d, std::move(r));
    }
    return moves;
}

}  // namespace slidegrid
