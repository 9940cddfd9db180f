#include "slidegrid/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstring>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "slidegrid/graph_params.hpp"

namespace slidegrid {

void validate_spec(const GameSpec& spec) {
    if (spec.rows < 1 || spec.cols < 1 || spec.rows > kMaxDim || spec.cols > kMaxDim)
        throw BoardError("spec dimensions out of range");
    if (spec.topology != Topology::rect && spec.obstacles == ObstacleKind::walls)
        throw BoardError("walls are only supported on rectangular boards");
    if (spec.start.row < 1 || spec.start.row > spec.rows || spec.start.col < 1 ||
        spec.start.col > spec.cols)
        throw BoardError("start square out of bounds");
}

std::vector<Position> block_candidates(const GameSpec& spec) {
    std::vector<Position> out;
    for (int r = 1; r <= spec.rows; ++r)
        for (int c = 1; c <= spec.cols; ++c)
            if (Position{r, c} != spec.start) out.push_back({r, c});
    return out;
}

std::vector<Wall> wall_candidates(const GameSpec& spec) {
    std::vector<Wall> out;
    for (int r = 1; r <= spec.rows; ++r)
        for (int c = 1; c <= spec.cols; ++c) {
            if (r < spec.rows) out.push_back({WallSide::south, {r, c}});
            if (c < spec.cols) out.push_back({WallSide::east, {r, c}});
        }
    return out;
}

namespace {

long long rho_grid_extended(int a, int b) {
    if (a <= 0 || b <= 0) return 0;
    if (static_cast<long long>(a) * b == 1) return 1;
    return (static_cast<long long>(a) * b + 1) / 2;
}

unsigned long long binomial_saturated(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<unsigned long long>::max()) return std::numeric_limits<unsigned long long>::max();
    }
    return static_cast<unsigned long long>(r);
}

// lexicographic rank of a sorted combination, saturating
unsigned long long combo_rank(const std::vector<int>& combo, int n) {
    unsigned __int128 rank = 0;
    int prev = -1;
    int k = static_cast<int>(combo.size());
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < combo[i]; ++v) rank += binomial_saturated(n - 1 - v, k - 1 - i);
        prev = combo[i];
        if (rank > std::numeric_limits<unsigned long long>::max()) return std::numeric_limits<unsigned long long>::max();
    }
    return static_cast<unsigned long long>(rank);
}

struct ScratchBoard {
    std::uint64_t brow[kMaxDim], bcol[kMaxDim], wrow[kMaxDim], wcol[kMaxDim];
    engine::Scratch cover;

    void reset(int rows, int cols) {
        std::memset(brow, 0, sizeof(std::uint64_t) * rows);
        std::memset(bcol, 0, sizeof(std::uint64_t) * cols);
        std::memset(wrow, 0, sizeof(std::uint64_t) * rows);
        std::memset(wcol, 0, sizeof(std::uint64_t) * cols);
    }
};

struct CandidateSpace {
    const GameSpec* spec;
    std::vector<Position> blocks;
    std::vector<Wall> walls;
    std::vector<int> reflect;  // diagonal reflection permutation, empty if unused

    int size() const {
        return spec->obstacles == ObstacleKind::blocks ? static_cast<int>(blocks.size())
                                                       : static_cast<int>(walls.size());
    }

    void toggle(ScratchBoard& sb, int idx) const {
        if (spec->obstacles == ObstacleKind::blocks) {
            Position p = blocks[idx];
            sb.brow[p.row - 1] ^= 1ull << (p.col - 1);
            sb.bcol[p.col - 1] ^= 1ull << (p.row - 1);
        } else {
            Wall w = walls[idx];
            if (w.side == WallSide::south)
                sb.wcol[w.at.col - 1] ^= 1ull << (w.at.row - 1);
            else
                sb.wrow[w.at.row - 1] ^= 1ull << (w.at.col - 1);
        }
    }
};

CandidateSpace build_candidates(const GameSpec& spec) {
    CandidateSpace cs;
    cs.spec = &spec;
    if (spec.obstacles == ObstacleKind::blocks)
        cs.blocks = block_candidates(spec);
    else
        cs.walls = wall_candidates(spec);

    // The diagonal reflection fixes (1,1); it is the one symmetry safe to use.
    if (spec.topology == Topology::rect && spec.rows == spec.cols && spec.start == Position{1, 1}) {
        int n = cs.size();
        cs.reflect.resize(n);
        if (spec.obstacles == ObstacleKind::blocks) {
            std::map<Position, int> index;
            for (int i = 0; i < n; ++i) index[cs.blocks[i]] = i;
            for (int i = 0; i < n; ++i)
                cs.reflect[i] = index.at({cs.blocks[i].col, cs.blocks[i].row});
        } else {
            std::map<Wall, int> index;
            for (int i = 0; i < n; ++i) index[cs.walls[i]] = i;
            for (int i = 0; i < n; ++i) {
                Wall w = cs.walls[i];
                Wall t{w.side == WallSide::south ? WallSide::east : WallSide::south,
                       {w.at.col, w.at.row}};
                cs.reflect[i] = index.at(t);
            }
        }
    }
    return cs;
}

// skip combos that are lexicographically above their diagonal mirror
bool symmetric_skip(const CandidateSpace& cs, const int* idx, int k, int* tmp) {
    if (cs.reflect.empty()) return false;
    for (int i = 0; i < k; ++i) tmp[i] = cs.reflect[idx[i]];
    std::sort(tmp, tmp + k);
    return std::lexicographical_compare(tmp, tmp + k, idx, idx + k);
}

struct SharedSearch {
    std::atomic<int> next_chunk{0};
    std::atomic<int> best_chunk{std::numeric_limits<int>::max()};
    std::atomic<bool> timed_out{false};
    std::atomic<unsigned long long> tested{0};
    std::mutex mu;
    std::map<int, std::vector<int>> hits;  // chunk -> first witness combo in that chunk
};

void search_worker(const GameSpec& spec, const CandidateSpace& cs, int k,
                   std::chrono::steady_clock::time_point deadline, bool has_deadline,
                   SharedSearch& sh) {
    const int ncand = cs.size();
    ScratchBoard sb;
    sb.reset(spec.rows, spec.cols);
    engine::BoardView v;
    v.topo = spec.topology;
    v.rows = spec.rows;
    v.cols = spec.cols;
    v.start = spec.start;
    v.block_row = sb.brow;
    v.block_col = sb.bcol;
    v.wall_east_row = spec.obstacles == ObstacleKind::walls ? sb.wrow : nullptr;
    v.wall_south_col = spec.obstacles == ObstacleKind::walls ? sb.wcol : nullptr;

    int idx[32], tmp[32];
    unsigned long long local_tested = 0;

    for (;;) {
        int c0 = sh.next_chunk.fetch_add(1, std::memory_order_relaxed);
        if (c0 > ncand - k) break;
        if (sh.best_chunk.load(std::memory_order_relaxed) < c0) break;  // an earlier hit exists

        for (int i = 0; i < k; ++i) idx[i] = c0 + i;
        int steps = 0;
        for (;;) {
            if (++steps % 256 == 0) {
                if (sh.best_chunk.load(std::memory_order_relaxed) < c0) break;
                if (has_deadline && std::chrono::steady_clock::now() > deadline) {
                    sh.timed_out.store(true);
                    sh.tested.fetch_add(local_tested, std::memory_order_relaxed);
                    return;
                }
            }
            if (!symmetric_skip(cs, idx, k, tmp)) {
                for (int i = 0; i < k; ++i) cs.toggle(sb, idx[i]);
                bool ok = engine::complete(v, spec.mode, sb.cover);
                for (int i = 0; i < k; ++i) cs.toggle(sb, idx[i]);
                ++local_tested;
                if (ok) {
                    std::lock_guard<std::mutex> lock(sh.mu);
                    if (!sh.hits.count(c0)) sh.hits[c0] = std::vector<int>(idx, idx + k);
                    int cur = sh.best_chunk.load();
                    while (c0 < cur && !sh.best_chunk.compare_exchange_weak(cur, c0)) {
                    }
                    break;
                }
            }
            // next combination with fixed first element
            int i = k - 1;
            while (i >= 1 && idx[i] == ncand - k + i) --i;
            if (i < 1) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    sh.tested.fetch_add(local_tested, std::memory_order_relaxed);
}

ObstacleSet witness_from(const CandidateSpace& cs, const std::vector<int>& combo) {
    ObstacleSet w;
    w.kind = cs.spec->obstacles;
    for (int i : combo) {
        if (w.kind == ObstacleKind::blocks)
            w.blocks.push_back(cs.blocks[i]);
        else
            w.walls.push_back(cs.walls[i]);
    }
    return w;
}

}  // namespace

BoundInfo lower_bound(const GameSpec& spec) {
    validate_spec(spec);
    int lo = std::min(spec.rows, spec.cols);
    switch (spec.topology) {
        case Topology::rect:
            if (spec.obstacles == ObstacleKind::blocks && spec.mode == Mode::pass) {
                if (lo >= 4) return {gamma_t_path(lo - 2), "gamma_t(P_{min-2})"};
                return {0, "trivial"};
            }
            if (spec.obstacles == ObstacleKind::blocks && spec.mode == Mode::stop) {
                if (spec.rows >= 3 && spec.cols >= 3)
                    return {gamma_grid(spec.rows - 2, spec.cols - 2).value, "gamma(G_{n-2,m-2})"};
                return {0, "trivial"};
            }
            if (spec.obstacles == ObstacleKind::walls && spec.mode == Mode::pass) {
                if (lo >= 4) return {rho_path(lo - 2), "rho(P_{min-2})"};
                return {0, "trivial"};
            }
            if (spec.rows >= 3 && spec.cols >= 3)
                return {rho_grid_extended(spec.rows - 2, spec.cols - 2), "rho(G_{n-2,m-2})"};
            return {0, "trivial"};
        case Topology::torus:
            if (spec.mode == Mode::pass) return {lo / 2, "ceil((min-1)/2)"};  // ceil((lo-1)/2)
            return {0, "trivial"};
        case Topology::king:
            return {0, "trivial"};
    }
    return {0, "trivial"};
}

std::optional<long long> opt_formula(const GameSpec& spec) {
    validate_spec(spec);
    int lo = std::min(spec.rows, spec.cols), hi = std::max(spec.rows, spec.cols);
    if (spec.start != Position{1, 1} && spec.topology != Topology::torus) return std::nullopt;
    switch (spec.topology) {
        case Topology::rect:
            if (spec.mode != Mode::pass) return std::nullopt;
            if (spec.obstacles == ObstacleKind::blocks) {
                if (lo <= 2) return 0;
                if (lo == 3) return 1;
                if (lo == 10) return 5;
                return gamma_t_path(lo - 2);
            }
            if (lo <= 2) return 0;
            if (lo == 3) return 1;
            return rho_path(lo - 2);
        case Topology::torus:
            if (spec.mode != Mode::pass) return std::nullopt;
            if (lo == 1) return 0;
            if (lo == 2) return hi >= 4 ? std::optional<long long>(hi - 2) : std::nullopt;
            if (lo <= 5) return 3;
            return lo / 2;  // ceil((lo-1)/2)
        case Topology::king:
            if (spec.mode != Mode::pass || spec.obstacles != ObstacleKind::blocks) return std::nullopt;
            if (std::gcd(spec.rows - 1, spec.cols - 1) <= 3) return 0;
            return std::nullopt;
    }
    return std::nullopt;
}

DecisionResult solve_decision(const GameSpec& spec, int k, std::chrono::milliseconds budget,
                              int workers) {
    validate_spec(spec);
    if (k < 0 || k > 31) throw std::invalid_argument("decision size k out of range");
    CandidateSpace cs = build_candidates(spec);
    const int ncand = cs.size();

    DecisionResult res;
    if (k > ncand) {
        res.status = DecisionStatus::infeasible;
        return res;
    }

    if (k == 0) {
        ScratchBoard sb;
        sb.reset(spec.rows, spec.cols);
        engine::BoardView v;
        v.topo = spec.topology;
        v.rows = spec.rows;
        v.cols = spec.cols;
        v.start = spec.start;
        v.block_row = sb.brow;
        v.block_col = sb.bcol;
        v.wall_east_row = spec.obstacles == ObstacleKind::walls ? sb.wrow : nullptr;
        v.wall_south_col = spec.obstacles == ObstacleKind::walls ? sb.wcol : nullptr;
        bool ok = engine::complete(v, spec.mode, sb.cover);
        res.status = ok ? DecisionStatus::witness_found : DecisionStatus::infeasible;
        res.witness.kind = spec.obstacles;
        res.placements_tested = 1;
        return res;
    }

    SharedSearch sh;
    auto deadline = std::chrono::steady_clock::now() + budget;
    bool has_deadline = budget.count() > 0;

    workers = std::max(1, workers);
    if (workers == 1) {
        search_worker(spec, cs, k, deadline, has_deadline, sh);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < workers; ++i)
            pool.emplace_back(search_worker, std::cref(spec), std::cref(cs), k, deadline,
                              has_deadline, std::ref(sh));
        for (auto& t : pool) t.join();
    }

    if (sh.best_chunk.load() != std::numeric_limits<int>::max()) {
        const std::vector<int>& combo = sh.hits.at(sh.best_chunk.load());
        res.status = DecisionStatus::witness_found;
        res.witness = witness_from(cs, combo);
        unsigned long long rank = combo_rank(combo, ncand);
        res.placements_tested = rank == std::numeric_limits<unsigned long long>::max() ? rank : rank + 1;
        return res;
    }
    if (sh.timed_out.load()) {
        res.status = DecisionStatus::timeout;
        res.placements_tested = sh.tested.load();
        return res;
    }
    res.status = DecisionStatus::infeasible;
    res.placements_tested = binomial_saturated(ncand, k);
    return res;
}

SolveResult solve_exact(const GameSpec& spec, std::chrono::milliseconds budget, int workers) {
    validate_spec(spec);
    auto t0 = std::chrono::steady_clock::now();
    BoundInfo lb = lower_bound(spec);

    SolveResult res;
    res.bound = lb.value;
    res.bound_source = lb.source;
    res.witness.kind = spec.obstacles;

    CandidateSpace cs = build_candidates(spec);
    const int ncand = cs.size();

    for (int k = static_cast<int>(std::max(0ll, lb.value)); k <= ncand; ++k) {
        std::chrono::milliseconds remaining{0};
        if (budget.count() > 0) {
            auto used = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0);
            remaining = budget - used;
            if (remaining.count() <= 0) break;
        }
        DecisionResult d = solve_decision(spec, k, remaining, workers);
        res.placements_tested += d.placements_tested;
        if (d.status == DecisionStatus::witness_found) {
            res.optimum = k;
            res.witness = d.witness;
            break;
        }
        if (d.status == DecisionStatus::timeout) break;
        res.best_infeasible = k;
    }
    res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return res;
}

}  // namespace slidegrid
