#include "slidegrid/board.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace slidegrid {

namespace {

const char* topology_name(Topology t) {
    switch (t) {
        case Topology::rect: return "rect";
        case Topology::torus: return "torus";
        case Topology::king: return "king";
    }
    return "?";
}

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Board make_board(Topology topo, int rows, int cols, ObstacleSet obstacles, Position start) {
    if (rows < 1 || cols < 1) throw BoardError("board dimensions must be positive");
    if (rows > kMaxDim || cols > kMaxDim)
        throw BoardError("board dimensions exceed the supported maximum of " + std::to_string(kMaxDim));
    if (start.row < 1 || start.row > rows || start.col < 1 || start.col > cols)
        throw BoardError("start square out of bounds");
    if (topo != Topology::rect && obstacles.kind == ObstacleKind::walls)
        throw BoardError(std::string("walls unsupported on ") + topology_name(topo));

    Board b;
    b.topology = topo;
    b.rows = rows;
    b.cols = cols;
    b.start = start;
    b.block_row.assign(rows, 0);
    b.block_col.assign(cols, 0);
    b.wall_east_row.assign(rows, 0);
    b.wall_south_col.assign(cols, 0);

    if (obstacles.kind == ObstacleKind::blocks) {
        std::sort(obstacles.blocks.begin(), obstacles.blocks.end());
        for (std::size_t i = 0; i < obstacles.blocks.size(); ++i) {
            Position p = obstacles.blocks[i];
            if (p.row < 1 || p.row > rows || p.col < 1 || p.col > cols)
                throw BoardError("block (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                                 ") out of bounds");
            if (i > 0 && obstacles.blocks[i - 1] == p)
                throw BoardError("duplicate block (" + std::to_string(p.row) + "," + std::to_string(p.col) + ")");
            if (p == start)
                throw BoardError("block on start square (" + std::to_string(p.row) + "," +
                                 std::to_string(p.col) + ")");
            b.block_row[p.row - 1] |= 1ull << (p.col - 1);
            b.block_col[p.col - 1] |= 1ull << (p.row - 1);
        }
    } else {
        std::sort(obstacles.walls.begin(), obstacles.walls.end());
        for (std::size_t i = 0; i < obstacles.walls.size(); ++i) {
            Wall w = obstacles.walls[i];
            Position p = w.at;
            bool ok = p.row >= 1 && p.col >= 1 &&
                      (w.side == WallSide::south ? (p.row <= rows - 1 && p.col <= cols)
                                                 : (p.row <= rows && p.col <= cols - 1));
            if (!ok)
                throw BoardError(std::string(w.side == WallSide::south ? "south" : "east") + " wall at (" +
                                 std::to_string(p.row) + "," + std::to_string(p.col) +
                                 ") does not separate two squares");
            if (i > 0 && obstacles.walls[i - 1] == w)
                throw BoardError("duplicate wall at (" + std::to_string(p.row) + "," + std::to_string(p.col) + ")");
            if (w.side == WallSide::south)
                b.wall_south_col[p.col - 1] |= 1ull << (p.row - 1);
            else
                b.wall_east_row[p.row - 1] |= 1ull << (p.col - 1);
        }
    }
    b.obstacles = std::move(obstacles);
    return b;
}

Board parse_board(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;

    Topology topo = Topology::rect;
    int rows = -1, cols = -1;
    Position start{1, 1};
    ObstacleSet obs;
    bool have_header = false;

    auto fail = [&](const std::string& msg) -> void { throw BoardError(msg, line_no); };

    while (std::getline(in, line)) {
        ++line_no;
        // strip comments and whitespace
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        if (!have_header) {
            for (const std::string& t : tok) {
                auto eq = t.find('=');
                if (eq == std::string::npos) fail("malformed header token '" + t + "'");
                std::string key = t.substr(0, eq), val = t.substr(eq + 1);
                if (key == "topology") {
                    if (val == "rect") topo = Topology::rect;
                    else if (val == "torus") topo = Topology::torus;
                    else if (val == "king") topo = Topology::king;
                    else fail("unknown topology '" + val + "'");
                } else if (key == "rows") {
                    if (!parse_int(val, rows)) fail("bad rows value '" + val + "'");
                } else if (key == "cols") {
                    if (!parse_int(val, cols)) fail("bad cols value '" + val + "'");
                } else if (key == "start") {
                    auto comma = val.find(',');
                    if (comma == std::string::npos) fail("start must be '<row>,<col>'");
                    if (!parse_int(val.substr(0, comma), start.row) ||
                        !parse_int(val.substr(comma + 1), start.col))
                        fail("bad start value '" + val + "'");
                } else if (key == "obstacles") {
                    if (val == "blocks") obs.kind = ObstacleKind::blocks;
                    else if (val == "walls") obs.kind = ObstacleKind::walls;
                    else fail("unknown obstacle kind '" + val + "'");
                } else {
                    fail("unknown header key '" + key + "'");
                }
            }
            if (rows < 0 || cols < 0) fail("header must set rows and cols");
            have_header = true;
            continue;
        }

        int r, c;
        if (tok.size() != 3 || !parse_int(tok[1], r) || !parse_int(tok[2], c))
            fail("expected '<B|WS|WE> <row> <col>'");
        if (tok[0] == "B") {
            if (obs.kind != ObstacleKind::blocks) fail("block line in a walls document");
            obs.blocks.push_back({r, c});
        } else if (tok[0] == "WS" || tok[0] == "WE") {
            if (obs.kind != ObstacleKind::walls) fail("wall line in a blocks document");
            obs.walls.push_back({tok[0] == "WS" ? WallSide::south : WallSide::east, {r, c}});
        } else {
            fail("unknown obstacle tag '" + tok[0] + "'");
        }
    }
    if (!have_header) throw BoardError("empty document: missing header", 1);

    try {
        return make_board(topo, rows, cols, std::move(obs), start);
    } catch (const BoardError& e) {
        throw BoardError(e.what(), line_no);  // attribute invariant failures to the document
    }
}

std::string serialize_board(const Board& b) {
    std::string out = "topology=";
    out += topology_name(b.topology);
    out += " rows=" + std::to_string(b.rows) + " cols=" + std::to_string(b.cols);
    out += " start=" + std::to_string(b.start.row) + "," + std::to_string(b.start.col);
    out += " obstacles=";
    out += b.obstacles.kind == ObstacleKind::blocks ? "blocks" : "walls";
    out += '\n';
    if (b.obstacles.kind == ObstacleKind::blocks) {
        auto blocks = b.obstacles.blocks;
        std::sort(blocks.begin(), blocks.end());
        for (Position p : blocks)
            out += "B " + std::to_string(p.row) + " " + std::to_string(p.col) + "\n";
    } else {
        auto walls = b.obstacles.walls;
        std::sort(walls.begin(), walls.end());
        for (const Wall& w : walls)
            out += std::string(w.side == WallSide::south ? "WS " : "WE ") + std::to_string(w.at.row) +
                   " " + std::to_string(w.at.col) + "\n";
    }
    return out;
}

std::string render_ascii(const Board& b, const std::vector<Position>* overlay) {
    auto cell_char = [&](int r, int c) -> char {
        Position p{r, c};
        if (b.is_block(p)) return '#';
        if (p == b.start) return 'R';
        if (overlay && std::find(overlay->begin(), overlay->end(), p) != overlay->end()) return '*';
        return '.';
    };

    std::string out;
    if (b.obstacles.kind == ObstacleKind::blocks) {
        for (int r = 1; r <= b.rows; ++r) {
            for (int c = 1; c <= b.cols; ++c) out += cell_char(r, c);
            out += '\n';
        }
        return out;
    }
    // Half-step lattice for wall boards.
    for (int r = 1; r <= b.rows; ++r) {
        for (int c = 1; c <= b.cols; ++c) {
            out += cell_char(r, c);
            if (c < b.cols) out += b.has_wall_east(r, c) ? '|' : ' ';
        }
        out += '\n';
        if (r < b.rows) {
            for (int c = 1; c <= b.cols; ++c) {
                out += b.has_wall_south(r, c) ? '-' : ' ';
                if (c < b.cols) out += ' ';
            }
            out += '\n';
        }
    }
    return out;
}

}  // namespace slidegrid
