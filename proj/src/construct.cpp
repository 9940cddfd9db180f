#include "slidegrid/construct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "slidegrid/graph_params.hpp"

namespace slidegrid {

const char* family_name(Family f) {
    switch (f) {
        case Family::grid_bp: return "grid_bp";
        case Family::torus_bp: return "torus_bp";
        case Family::king_bp: return "king_bp";
        case Family::grid_bs: return "grid_bs";
        case Family::grid_wp: return "grid_wp";
        case Family::grid_ws: return "grid_ws";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::grid_bp, Family::torus_bp, Family::king_bp, Family::grid_bs,
                     Family::grid_wp, Family::grid_ws})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Mode family_mode(Family f) {
    switch (f) {
        case Family::grid_bs:
        case Family::grid_ws:
            return Mode::stop;
        default:
            return Mode::pass;
    }
}

namespace {

int posmod(int x, int q) { return (x % q + q) % q; }

// --- B/P on rectangular grids (pattern tables transcribed from the figures;
// rows are encoded relative to the board: +1, +2 from the top, -1 = bottom
// row, -2 = second-to-bottom) -----------------------------------------------

struct RelBlock {
    int row;  // +1, +2, -1, -2
    int col;  // 1-based column inside the pattern
};

// The n x 8 sliding pattern glued side by side.
constexpr RelBlock kGridCopy[] = {{+1, 2}, {+2, 6}, {-2, 7}, {-1, 3}};

// Rightmost patterns per residue class of m-2 (width = col span).
const std::vector<RelBlock>& grid_residue(int width) {
    static const std::vector<RelBlock> w4 = {{+1, 2}, {-1, 3}};
    static const std::vector<RelBlock> w5 = {{+1, 2}, {-1, 3}};
    static const std::vector<RelBlock> w6 = {{+1, 2}, {-1, 3}, {+2, 6}};
    static const std::vector<RelBlock> w7 = {{+1, 2}, {-1, 3}, {+2, 6}, {-2, 7}};
    static const std::vector<RelBlock> w8 = {{+1, 2}, {-1, 3}, {+1, 6}, {-2, 7}};
    static const std::vector<RelBlock> w10 = {{+1, 2}, {-1, 3}, {-2, 6}, {+1, 7}, {-1, 10}};
    static const std::vector<RelBlock> w11 = {{+1, 2}, {-1, 3}, {-2, 6}, {+1, 7}, {+2, 10}, {-1, 11}};
    static const std::vector<RelBlock> w17 = {{+1, 2},  {-1, 3},  {+1, 6},  {-2, 7},
                                              {-1, 10}, {+2, 11}, {-1, 14}, {+1, 15}};
    switch (width) {
        case 4: return w4;
        case 5: return w5;
        case 6: return w6;
        case 7: return w7;
        case 8: return w8;
        case 10: return w10;
        case 11: return w11;
        case 17: return w17;
    }
    throw BoardError("no residue pattern of width " + std::to_string(width));
}

void emit_rel(std::vector<Position>& out, const RelBlock* pat, std::size_t count, int n, int col0) {
    for (std::size_t i = 0; i < count; ++i) {
        int r = pat[i].row > 0 ? pat[i].row : n + 1 + pat[i].row;
        out.push_back({r, col0 + pat[i].col - 1});
    }
}

std::vector<Position> grid_bp_blocks(int n, int m) {
    std::vector<Position> out;
    if (m <= 2) return out;
    if (m == 3) return {{n, 3}};
    if (m == 4) return {{n, 3}, {1, 4}};
    if (m == 10) {
        // the width-10 pattern placed flush left (no empty first column)
        const auto& pat = grid_residue(10);
        emit_rel(out, pat.data(), pat.size(), n, 1);
        return out;
    }
    int r = (m - 2) % 8;
    int copies, residue_width;
    if (r >= 3) {
        copies = (m - 2) / 8;
        residue_width = r + 1;
    } else if (r >= 1) {
        copies = (m - 10) / 8;
        residue_width = 9 + r;
    } else {
        copies = (m - 18) / 8;
        residue_width = 17;
    }
    int col = 2;
    for (int i = 0; i < copies; ++i, col += 8) emit_rel(out, kGridCopy, 4, n, col);
    const auto& pat = grid_residue(residue_width);
    emit_rel(out, pat.data(), pat.size(), n, col);
    return out;
}

// --- B/P on tori -------------------------------------------------------------

// 4 x 8 torus pattern.
constexpr RelBlock kTorusPattern[] = {{1, 3}, {2, 7}, {3, 2}, {4, 6}};

// Base placements for T_{m,m}, m = 6..13, start (1,1). The m = 6 and 7 entries
// are transcribed from the paper's figure; the others were located by search
// and frozen after the verifier signed off for all n in the sweep range.
const std::vector<Position>& torus_base(int m) {
    static const std::vector<Position> b6 = {{3, 1}, {4, 4}, {2, 5}};
    static const std::vector<Position> b7 = {{3, 1}, {4, 4}, {2, 5}};
    static const std::vector<Position> b8 = {{2, 3}, {3, 7}, {4, 2}, {5, 6}};
    static const std::vector<Position> b9 = {{2, 3}, {3, 7}, {4, 2}, {5, 6}};
    static const std::vector<Position> b10 = {{2, 3}, {3, 7}, {4, 2}, {5, 6}, {6, 9}};
    static const std::vector<Position> b11 = {{2, 3}, {3, 7}, {4, 2}, {5, 6}, {6, 9}};
    static const std::vector<Position> b12 = {{2, 3}, {3, 7}, {4, 2}, {5, 6}, {6, 9}, {7, 11}};
    static const std::vector<Position> b13 = {{2, 3}, {3, 7}, {4, 2}, {5, 6}, {6, 9}, {7, 11}};
    switch (m) {
        case 6: return b6;
        case 7: return b7;
        case 8: return b8;
        case 9: return b9;
        case 10: return b10;
        case 11: return b11;
        case 12: return b12;
        case 13: return b13;
    }
    throw BoardError("no torus base for m = " + std::to_string(m));
}

std::vector<Position> torus_bp_blocks(int n, int m) {
    if (m == 1) return {};
    if (m == 2) {
        if (n == 2) return {{2, 2}};
        if (n == 3) return {{2, 1}, {2, 2}};
        std::vector<Position> out = {{3, 1}, {3, 2}};
        for (int i = 5; i <= n; ++i) out.push_back({i, 2});
        return out;
    }
    if (m == 3) return {{1, 2}, {2, 3}, {3, 1}};
    if (m == 4 || m == 5) return {{1, 3}, {2, 4}, {3, 2}};
    int mp = 6 + (m - 6) % 8;
    std::vector<Position> out = torus_base(mp);
    int imax = 0, jmax = 0;
    for (Position p : out) {
        imax = std::max(imax, p.row);
        jmax = std::max(jmax, p.col);
    }
    int t = (m - mp) / 8;
    for (int s = 0; s < t; ++s) {
        for (const RelBlock& b : kTorusPattern) out.push_back({imax + b.row, jmax + b.col});
        imax += 4;
        jmax += 8;
    }
    return out;
}

// --- B/P on king grids -------------------------------------------------------

std::vector<Position> king_bp_blocks(int n, int m) {
    int g = std::gcd(n, m);
    int k = g <= 3 ? 0 : (g - 3 + 7) / 8;
    std::vector<Position> out;
    if (m >= n) {
        for (int i = 0; i < k; ++i)
            out.push_back(i % 2 == 0 ? Position{n + 1, n + 1 - 2 * i} : Position{1, n + 1 - 2 * i});
    } else {
        // ladder on the transposed board, mapped back
        for (int i = 0; i < k; ++i)
            out.push_back(i % 2 == 0 ? Position{m + 1 - 2 * i, m + 1} : Position{m + 1 - 2 * i, 1});
    }
    return out;
}

// --- B/S on rectangular grids ------------------------------------------------

bool in_b1(int i, int j) { return posmod(2 * i - j, 5) == 0; }

std::vector<Position> grid_bs_blocks(int n, int m) {
    std::vector<Position> out;
    if (m == 1) {
        for (int i = 3; i <= n; ++i) out.push_back({i, 1});
        return out;
    }
    if (m == 2) {
        for (int i = 3; i <= n; ++i) {
            out.push_back({i, 1});
            out.push_back({i, 2});
        }
        return out;
    }
    if (m == 3 && n >= 7) {
        // On 3-wide boards no sparse placement serves the rows below a small
        // horizon (certified by the exact solver up to n = 10, where optimal
        // solutions block every square from row 7 down). Emit that shape.
        out = {{1, 2}, {3, 1}, {4, 3}, {6, 2}};
        for (int i = 7; i <= n; ++i)
            for (int j = 1; j <= 3; ++j) out.push_back({i, j});
        return out;
    }
    std::set<Position> blocks;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j)
            if (in_b1(i, j)) blocks.insert({i, j});
    // companions for lattice blocks on inner squares next to the border;
    // the bottom rule follows the worked example, which places the companion
    // directly below rather than one column over
    for (int j = 2; j <= m - 1; ++j) {
        if (in_b1(2, j) && 2 <= n - 1) blocks.insert({1, j});
        if (in_b1(n - 1, j) && n - 1 >= 2) blocks.insert({n, j});
    }
    for (int i = 2; i <= n - 1; ++i) {
        if (in_b1(i, 2) && 2 <= m - 1) blocks.insert({i, 1});
        if (in_b1(i, m - 1) && m - 1 >= 2) blocks.insert({i, m});
    }
    // corner fixups
    if (in_b1(2, m - 1)) blocks.insert({1, m});
    if (in_b1(n - 1, 2)) blocks.insert({n, 1});
    if (in_b1(n - 1, m - 1)) blocks.insert({n, m});
    return {blocks.begin(), blocks.end()};
}

// --- W/P on rectangular grids ------------------------------------------------

std::vector<Wall> grid_wp_walls(int n, int m) {
    std::vector<Wall> out;
    for (int c = 2; c <= m - 1; c += 4) {
        out.push_back({WallSide::east, {1, c}});
        if (c + 2 <= m - 1) out.push_back({WallSide::east, {n, c + 2}});
    }
    return out;
}

// --- W/S on rectangular grids ------------------------------------------------

bool ws_v_wall(int i, int j, int n, int m) {  // wall east of (i,j) in W1
    return 2 <= i && i <= n - 1 && 1 <= j && j <= m - 1 && posmod(i - j, 4) == 0;
}
bool ws_h_wall(int i, int j, int n, int m) {  // wall south of (i,j) in W1
    return 1 <= i && i <= n - 1 && 2 <= j && j <= m - 1 && posmod(j - i, 4) == 3;
}

std::vector<Wall> grid_ws_walls(int n, int m) {
    if (m == 1) {
        if (n <= 2) return {};
        throw BoardError("no wall placement makes a 1-wide board stop-complete for n >= 3");
    }
    if (m == 2) {
        std::vector<Wall> out;
        int count = (n - 2 + 1) / 2;
        for (int k = 1; k <= count; ++k)
            out.push_back({WallSide::south, {2 * k, k % 2 == 1 ? 1 : 2}});
        return out;
    }
    if (m == 3 && n % 4 == 2 && n >= 6) {
        // For this congruence class the published lattice walls seal every
        // column above the bottom rows. Periodic replacement derived from
        // solver witnesses (optimal at n = 6 and 8), verified for the whole
        // sweep range.
        std::vector<Wall> out;
        for (int i = 1; i <= n - 1; i += 4) out.push_back({WallSide::east, {i, 1}});
        for (int i = 2; i <= n - 1; i += 4) out.push_back({WallSide::south, {i, 2}});
        for (int i = 4; i <= n - 2; i += 4) {
            out.push_back({WallSide::south, {i, 1}});
            out.push_back({WallSide::east, {i, 2}});
            out.push_back({WallSide::south, {i, 3}});
        }
        return out;
    }
    std::set<Wall> walls;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            if (ws_v_wall(i, j, n, m)) walls.insert({WallSide::east, {i, j}});
            if (ws_h_wall(i, j, n, m)) walls.insert({WallSide::south, {i, j}});
        }
    // companions where W1 touches the border
    for (int j = 2; j <= m - 1; ++j) {
        if (ws_h_wall(1, j, n, m)) walls.insert({WallSide::east, {1, j}});
        if (ws_h_wall(n - 1, j, n, m)) walls.insert({WallSide::east, {n, j - 1}});
    }
    for (int i = 2; i <= n - 1; ++i) {
        if (ws_v_wall(i, 1, n, m)) walls.insert({WallSide::south, {i, 1}});
        if (ws_v_wall(i, m - 1, n, m)) walls.insert({WallSide::south, {i - 1, m}});
    }
    walls.insert({WallSide::south, {2, 1}});
    // conditional corner walls near (n,m)
    if (ws_h_wall(n - 2, m - 1, n, m)) walls.insert({WallSide::east, {n, m - 2}});
    if (ws_v_wall(n - 1, m - 2, n, m)) walls.insert({WallSide::south, {n - 2, m}});
    return {walls.begin(), walls.end()};
}

long long rho_grid_extended(int a, int b) {
    if (a <= 0 || b <= 0) return 0;
    if (static_cast<long long>(a) * b == 1) return 1;
    return (static_cast<long long>(a) * b + 1) / 2;
}

long long gamma_grid_extended(int a, int b) {
    if (a <= 0 || b <= 0) return 0;
    return gamma_grid(a, b).value;
}

}  // namespace

long long family_size_bound(Family f, int n, int m) {
    switch (f) {
        case Family::grid_bp:
            if (m <= 2) return 0;
            if (m == 3) return 1;
            if (m == 10) return 5;
            return gamma_t_path(m - 2);
        case Family::torus_bp:
            if (m == 1) return 0;
            if (m == 2) return n == 2 ? 1 : (n == 3 ? 2 : n - 2);
            if (m <= 5) return 3;
            return (m - 1 + 1) / 2;  // ceil((m-1)/2)
        case Family::king_bp: {
            int g = std::gcd(n, m);
            return g <= 3 ? 0 : (g - 3 + 7) / 8;
        }
        case Family::grid_wp:
            if (m <= 2) return 0;
            if (m == 3) return 1;
            return (m - 2 + 1) / 2;  // rho(P_{m-2})
        case Family::grid_bs:
            if (m == 1 || m == 2) return static_cast<long long>(m) * std::max(0, n - 2);
            if (m == 3 && n >= 7) return 4 + 3ll * (n - 6);
            return gamma_grid_extended(n - 2, m - 2) + (18 * (m + n) + 140) / 25;
        case Family::grid_ws:
            if (m == 1) return 0;
            if (m == 2) return n <= 2 ? 0 : (n - 2 + 1) / 2;
            return rho_grid_extended(n - 2, m - 2) + (3 * (m + n)) / 4 + 3;
    }
    return 0;
}

bool family_size_is_exact(Family f) {
    return f != Family::grid_bs && f != Family::grid_ws;
}

Construction construct(Family f, int n, int m) {
    if (m < 1 || n < 1) throw BoardError("construction dimensions must be positive");
    if (f != Family::king_bp && f != Family::torus_bp && n < m)
        throw BoardError("grid families expect n >= m");
    if (f == Family::torus_bp && n < m) throw BoardError("torus family expects n >= m");

    Construction c;
    c.family = f;
    ObstacleSet obs;
    switch (f) {
        case Family::grid_bp:
            obs.kind = ObstacleKind::blocks;
            obs.blocks = grid_bp_blocks(n, m);
            c.board = make_board(Topology::rect, n, m, std::move(obs));
            break;
        case Family::torus_bp:
            obs.kind = ObstacleKind::blocks;
            obs.blocks = torus_bp_blocks(n, m);
            c.board = make_board(Topology::torus, n, m, std::move(obs));
            break;
        case Family::king_bp:
            obs.kind = ObstacleKind::blocks;
            obs.blocks = king_bp_blocks(n, m);
            c.board = make_board(Topology::king, n + 1, m + 1, std::move(obs));
            break;
        case Family::grid_bs:
            obs.kind = ObstacleKind::blocks;
            obs.blocks = grid_bs_blocks(n, m);
            c.board = make_board(Topology::rect, n, m, std::move(obs));
            break;
        case Family::grid_wp:
            obs.kind = ObstacleKind::walls;
            obs.walls = grid_wp_walls(n, m);
            c.board = make_board(Topology::rect, n, m, std::move(obs));
            break;
        case Family::grid_ws:
            obs.kind = ObstacleKind::walls;
            obs.walls = grid_ws_walls(n, m);
            c.board = make_board(Topology::rect, n, m, std::move(obs));
            break;
    }
    c.claimed_size = static_cast<long long>(c.board.obstacles.size());
    return c;
}

}  // namespace slidegrid
