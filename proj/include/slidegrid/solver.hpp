#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "slidegrid/board.hpp"
#include "slidegrid/verify.hpp"

namespace slidegrid {

struct GameSpec {
    Topology topology = Topology::rect;
    int rows = 1;
    int cols = 1;
    ObstacleKind obstacles = ObstacleKind::blocks;
    Mode mode = Mode::pass;
    Position start{1, 1};
};

// Throws BoardError on invalid combinations (walls on torus/king, bad dims).
void validate_spec(const GameSpec& spec);

struct BoundInfo {
    long long value = 0;
    std::string source;  // e.g. "gamma_t(P_{m-2})", "trivial"
};

// Proposition-backed lower bound on the optimum; 0 when nothing applies.
BoundInfo lower_bound(const GameSpec& spec);

// The paper's exact value where a theorem provides one, otherwise nullopt
// ("bounds-only").
std::optional<long long> opt_formula(const GameSpec& spec);

enum class DecisionStatus { witness_found, infeasible, timeout };

struct DecisionResult {
    DecisionStatus status = DecisionStatus::infeasible;
    ObstacleSet witness;                        // populated on witness_found
    unsigned long long placements_tested = 0;   // deterministic enumeration rank
};

// Is there a complete placement of exactly k obstacles? Enumeration is
// row-major lexicographic, so the returned witness is the lexicographically
// minimal one regardless of worker count. budget <= 0 means unlimited.
DecisionResult solve_decision(const GameSpec& spec, int k, std::chrono::milliseconds budget = {},
                              int workers = 1);

struct SolveResult {
    std::optional<long long> optimum;  // empty when the budget ran out first
    ObstacleSet witness;
    long long bound = 0;               // lower bound used to seed the search
    std::string bound_source;
    long long best_infeasible = -1;    // largest k proven infeasible
    unsigned long long placements_tested = 0;
    std::chrono::milliseconds elapsed{0};
};

// Iterates k upward from lower_bound(spec); the optimum is the first
// feasible k. Result is independent of worker count.
SolveResult solve_exact(const GameSpec& spec, std::chrono::milliseconds budget = {}, int workers = 1);

// Candidate obstacle list in the solver's canonical (row-major) order:
// blocks over all squares except start, or walls over all interior edges of
// a rect board (for each square: south wall then east wall).
std::vector<Position> block_candidates(const GameSpec& spec);
std::vector<Wall> wall_candidates(const GameSpec& spec);

}  // namespace slidegrid
