#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slidegrid {

// Boards are indexed 1-based: (row, col), row 1 at the top.
struct Position {
    int row = 0;
    int col = 0;
    auto operator<=>(const Position&) const = default;
};

enum class Topology { rect, torus, king };

// A wall sits on the edge between two adjacent squares. "south" is the wall
// between (row,col) and (row+1,col); "east" between (row,col) and (row,col+1).
enum class WallSide { south, east };

struct Wall {
    WallSide side = WallSide::south;
    Position at;
    auto operator<=>(const Wall&) const = default;
};

enum class ObstacleKind { blocks, walls };

struct ObstacleSet {
    ObstacleKind kind = ObstacleKind::blocks;
    std::vector<Position> blocks;  // sorted row-major, no duplicates
    std::vector<Wall> walls;       // sorted, no duplicates
    std::size_t size() const { return kind == ObstacleKind::blocks ? blocks.size() : walls.size(); }
};

struct BoardError : std::runtime_error {
    int line;  // 0 when not tied to a document line
    explicit BoardError(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// Board geometry is capped at 64x64 so one uint64_t holds a full row or column.
inline constexpr int kMaxDim = 64;

struct Board {
    Topology topology = Topology::rect;
    int rows = 1;
    int cols = 1;
    ObstacleSet obstacles;
    Position start{1, 1};

    // Bitmask caches, bit (c-1) of block_row[r-1] set when (r,c) is a block.
    std::vector<std::uint64_t> block_row, block_col;
    std::vector<std::uint64_t> wall_east_row;   // bit (c-1): wall between (r,c) and (r,c+1)
    std::vector<std::uint64_t> wall_south_col;  // bit (r-1): wall between (r,c) and (r+1,c)

    bool in_bounds(Position p) const {
        return p.row >= 1 && p.row <= rows && p.col >= 1 && p.col <= cols;
    }
    bool is_block(Position p) const {
        return (block_row[p.row - 1] >> (p.col - 1)) & 1u;
    }
    bool has_wall_east(int r, int c) const {  // between (r,c) and (r,c+1)
        return (wall_east_row[r - 1] >> (c - 1)) & 1u;
    }
    bool has_wall_south(int r, int c) const {  // between (r,c) and (r+1,c)
        return (wall_south_col[c - 1] >> (r - 1)) & 1u;
    }
};

// Validates all invariants (bounds, duplicates, start square, topology
// restrictions) and builds the bitmask caches. Throws BoardError.
Board make_board(Topology topo, int rows, int cols, ObstacleSet obstacles, Position start = {1, 1});

// Board text codec; see README for the format. parse_board reports the
// offending line number in every diagnostic.
Board parse_board(std::string_view text);
std::string serialize_board(const Board& b);

// One text row per board row for block boards; boards with walls render on a
// half-step lattice with '-' and '|'. Overlay positions print as '*'.
std::string render_ascii(const Board& b, const std::vector<Position>* overlay = nullptr);

}  // namespace slidegrid
