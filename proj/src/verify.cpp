#include "slidegrid/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "slidegrid/slide.hpp"

namespace slidegrid {

const char* mode_name(Mode m) { return m == Mode::pass ? "pass" : "stop"; }

namespace engine {

namespace {

inline std::uint64_t full_mask(int len) { return len >= 64 ? ~0ull : (1ull << len) - 1; }

inline std::uint64_t range_mask(int lo, int hi) {  // bits lo..hi inclusive, lo <= hi
    return (hi >= 63 ? ~0ull : (2ull << hi) - 1) & ~((1ull << lo) - 1);
}

inline std::uint64_t rot_right(std::uint64_t x, int s, int len, std::uint64_t full) {
    if (s == 0) return x;
    return ((x >> s) | (x << (len - s))) & full;
}

}  // namespace

BoardView view_of(const Board& b) {
    BoardView v;
    v.topo = b.topology;
    v.rows = b.rows;
    v.cols = b.cols;
    v.start = b.start;
    v.block_row = b.block_row.data();
    v.block_col = b.block_col.data();
    v.wall_east_row = b.wall_east_row.data();
    v.wall_south_col = b.wall_south_col.data();
    return v;
}

void compute_cover(const BoardView& v, Scratch& s) {
    const int n = v.rows, m = v.cols;
    const std::uint64_t row_full = full_mask(m);
    const std::uint64_t col_full = full_mask(n);
    for (int r = 0; r < n; ++r) s.visited[r] = s.passed[r] = 0;

    int head = 0, tail = 0;
    auto push = [&](int r, int c) {
        if ((s.visited[r] >> c) & 1u) return;
        s.visited[r] |= 1ull << c;
        s.passed[r] |= 1ull << c;
        s.queue[tail++] = r * m + c;
    };
    push(v.start.row - 1, v.start.col - 1);

    const bool torus = v.topo == Topology::torus;
    const bool king = v.topo == Topology::king;

    while (head < tail) {
        int pos = s.queue[head++];
        int r = pos / m, c = pos % m;

        if (!torus) {
            // east
            {
                std::uint64_t stops = (v.block_row[r] >> 1);
                if (v.wall_east_row) stops |= v.wall_east_row[r];
                std::uint64_t rem = stops & ~((1ull << c) - 1);
                int j = rem ? std::countr_zero(rem) : m - 1;
                if (j > c) {
                    s.passed[r] |= range_mask(c, j);
                    push(r, j);
                }
            }
            // west
            {
                std::uint64_t stops = v.block_row[r];
                if (v.wall_east_row) stops |= v.wall_east_row[r];
                stops <<= 1;
                std::uint64_t rem = stops & range_mask(0, c);
                int j = rem ? 63 - std::countl_zero(rem) : 0;
                if (j < c) {
                    s.passed[r] |= range_mask(j, c);
                    push(r, j);
                }
            }
            // south
            {
                std::uint64_t stops = (v.block_col[c] >> 1);
                if (v.wall_south_col) stops |= v.wall_south_col[c];
                std::uint64_t rem = stops & ~((1ull << r) - 1);
                int i = rem ? std::countr_zero(rem) : n - 1;
                if (i > r) {
                    for (int rr = r; rr <= i; ++rr) s.passed[rr] |= 1ull << c;
                    push(i, c);
                }
            }
            // north
            {
                std::uint64_t stops = v.block_col[c];
                if (v.wall_south_col) stops |= v.wall_south_col[c];
                stops <<= 1;
                std::uint64_t rem = stops & range_mask(0, r);
                int i = rem ? 63 - std::countl_zero(rem) : 0;
                if (i < r) {
                    for (int rr = i; rr <= r; ++rr) s.passed[rr] |= 1ull << c;
                    push(i, c);
                }
            }
            if (king) {
                static constexpr int diag[4][2] = {{-1, 1}, {-1, -1}, {1, 1}, {1, -1}};
                for (auto [dr, dc] : diag) {
                    int rr = r, cc = c;
                    for (;;) {
                        int r2 = rr + dr, c2 = cc + dc;
                        if (r2 < 0 || r2 >= n || c2 < 0 || c2 >= m) break;
                        if ((v.block_row[r2] >> c2) & 1u) break;
                        rr = r2;
                        cc = c2;
                        s.passed[rr] |= 1ull << cc;
                    }
                    if (rr != r) push(rr, cc);
                }
            }
            continue;
        }

        // torus: wrapping slides, no walls
        // east
        {
            std::uint64_t blocks = v.block_row[r];
            if (blocks == 0) {
                s.passed[r] = row_full;  // unbounded slide sweeps the whole row
            } else {
                int d = std::countr_zero(rot_right(blocks, (c + 1) % m, m, row_full));
                if (d > 0) {
                    int j = (c + d) % m;
                    if (j >= c)
                        s.passed[r] |= range_mask(c, j);
                    else
                        s.passed[r] |= range_mask(c, m - 1) | range_mask(0, j);
                    push(r, j);
                }
            }
        }
        // west
        {
            std::uint64_t blocks = v.block_row[r];
            if (blocks != 0) {
                // advance to just short of the first block cyclically west of c
                int d = 0;
                for (int k = 1; k < m; ++k) {
                    int cc = (c - k + m) % m;
                    if ((blocks >> cc) & 1u) break;
                    ++d;
                }
                if (d > 0) {
                    int j = (c - d + m) % m;
                    if (j <= c)
                        s.passed[r] |= range_mask(j, c);
                    else
                        s.passed[r] |= range_mask(0, c) | range_mask(j, m - 1);
                    push(r, j);
                }
            }
        }
        // south
        {
            std::uint64_t blocks = v.block_col[c];
            if (blocks == 0) {
                for (int rr = 0; rr < n; ++rr) s.passed[rr] |= 1ull << c;
            } else {
                int d = std::countr_zero(rot_right(blocks, (r + 1) % n, n, col_full));
                if (d > 0) {
                    for (int k = 0; k <= d; ++k) s.passed[(r + k) % n] |= 1ull << c;
                    push((r + d) % n, c);
                }
            }
        }
        // north
        {
            std::uint64_t blocks = v.block_col[c];
            if (blocks != 0) {
                int d = 0;
                for (int k = 1; k < n; ++k) {
                    int rr2 = (r - k + n) % n;
                    if ((blocks >> rr2) & 1u) break;
                    ++d;
                }
                if (d > 0) {
                    for (int k = 0; k <= d; ++k) s.passed[(r - k + n) % n] |= 1ull << c;
                    push((r - d + n) % n, c);
                }
            }
        }
    }
}

bool complete(const BoardView& v, Mode mode, Scratch& s) {
    compute_cover(v, s);
    const std::uint64_t row_full = full_mask(v.cols);
    const std::uint64_t* covered = mode == Mode::pass ? s.passed : s.visited;
    for (int r = 0; r < v.rows; ++r) {
        std::uint64_t required = row_full & ~v.block_row[r];
        if (required & ~covered[r]) return false;
    }
    return true;
}

}  // namespace engine

namespace {

std::vector<Position> collect(const std::uint64_t* rows_mask, int n, int m) {
    std::vector<Position> out;
    for (int r = 0; r < n; ++r) {
        std::uint64_t bits = rows_mask[r];
        while (bits) {
            int c = std::countr_zero(bits);
            bits &= bits - 1;
            out.push_back({r + 1, c + 1});
        }
    }
    return out;
}

}  // namespace

std::vector<Position> reachable_stops(const Board& b) {
    engine::Scratch s;
    engine::compute_cover(engine::view_of(b), s);
    return collect(s.visited, b.rows, b.cols);
}

std::vector<Position> passed_squares(const Board& b) {
    engine::Scratch s;
    engine::compute_cover(engine::view_of(b), s);
    return collect(s.passed, b.rows, b.cols);
}

VerificationReport verify(const Board& b, Mode mode) {
    engine::Scratch s;
    engine::compute_cover(engine::view_of(b), s);

    VerificationReport rep;
    rep.mode = mode;
    rep.stops = collect(s.visited, b.rows, b.cols);
    rep.passed = collect(s.passed, b.rows, b.cols);

    const std::uint64_t row_full = b.cols >= 64 ? ~0ull : (1ull << b.cols) - 1;
    std::uint64_t missing[kMaxDim];
    const std::uint64_t* covered = mode == Mode::pass ? s.passed : s.visited;
    for (int r = 0; r < b.rows; ++r)
        missing[r] = (row_full & ~b.block_row[r]) & ~covered[r];
    rep.missing = collect(missing, b.rows, b.cols);
    rep.complete = rep.missing.empty();
    return rep;
}

AllStartsResult verify_all_starts(const Board& b, Mode mode) {
    engine::Scratch s;
    engine::BoardView v = engine::view_of(b);
    for (int r = 1; r <= b.rows; ++r) {
        for (int c = 1; c <= b.cols; ++c) {
            Position p{r, c};
            if (b.is_block(p)) continue;
            v.start = p;
            if (!engine::complete(v, mode, s)) return {false, p};
        }
    }
    return {true, {}};
}

int min_moves(const Board& b, Position target, Mode mode) {
    if (!b.in_bounds(target) || b.is_block(target))
        throw std::invalid_argument("min_moves target must be a non-block square on the board");
    if (target == b.start) return 0;

    std::vector<int> dist(static_cast<std::size_t>(b.rows) * b.cols, -1);
    auto idx = [&](Position p) { return static_cast<std::size_t>(p.row - 1) * b.cols + (p.col - 1); };
    std::vector<Position> queue;
    queue.push_back(b.start);
    dist[idx(b.start)] = 0;
    int best_pass = -1;

    for (std::size_t head = 0; head < queue.size(); ++head) {
        Position u = queue[head];
        int du = dist[idx(u)];
        if (best_pass >= 0 && du + 1 >= best_pass) break;
        int ndirs = b.topology == Topology::king ? 8 : 4;
        for (int i = 0; i < ndirs; ++i) {
            SlideResult r = slide(b, u, kAllDirections[i]);
            if (r.outcome == SlideResult::Outcome::unbounded && mode == Mode::pass) {
                // a stop-less slide still passes over its whole cycle
                for (Position p : r.swept)
                    if (p == target && (best_pass < 0 || du + 1 < best_pass)) best_pass = du + 1;
                continue;
            }
            if (r.outcome != SlideResult::Outcome::moved) continue;
            if (mode == Mode::pass) {
                for (Position p : r.swept)
                    if (p == target && (best_pass < 0 || du + 1 < best_pass)) best_pass = du + 1;
            } else if (r.end == target) {
                return du + 1;
            }
            if (dist[idx(r.end)] < 0) {
                dist[idx(r.end)] = du + 1;
                queue.push_back(r.end);
            }
        }
    }
    if (mode == Mode::pass) return best_pass >= 0 ? best_pass : kUnreachable;
    return kUnreachable;
}

}  // namespace slidegrid
