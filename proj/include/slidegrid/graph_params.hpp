#pragma once

#include <vector>

#include "slidegrid/board.hpp"

namespace slidegrid {

enum class ParamSource { closed_form, dynamic_program, brute_force };

const char* param_source_name(ParamSource s);

struct ParamValue {
    long long value = 0;
    ParamSource source = ParamSource::closed_form;
    // Set when neither the exact regime nor the proven closed-form regime
    // applies and the closed form is returned anyway.
    bool formula_regime = false;
};

// Total domination number of the path P_n, by dynamic program. n >= 2
// (a lone vertex has no neighbour). Throws std::invalid_argument otherwise.
int gamma_t_path(int n);
ParamValue gamma_t_path_value(int n);

// The closed form shipped here uses ceil(n/4) in the n % 4 != 1 branch; see
// README for why. Used as a cross-check of the DP, never as the source.
int gamma_t_path_closed_form(int n);

// Edge cover number of P_n = ceil(n/2). n >= 2.
int rho_path(int n);
ParamValue rho_path_value(int n);

// Edge cover number of the n x m grid = ceil(nm/2). Requires nm >= 2.
int rho_grid(int n, int m);
ParamValue rho_grid_value(int n, int m);

// Domination number of the n x m grid. Exact row-profile DP when
// min(n,m) <= 14; closed form floor((n+2)(m+2)/5) - 4 when both >= 16;
// otherwise the closed form is returned with formula_regime set.
ParamValue gamma_grid(int n, int m);

// Certified minimum total dominating sets, for use as oracles. Size limits:
// path n <= 24, grid nm <= 24. Witnesses are the lexicographically smallest
// minimum sets. Throws std::invalid_argument when too large.
std::vector<int> brute_total_dominating_set_path(int n);
std::vector<Position> brute_total_dominating_set_grid(int n, int m);

// Brute-force minimum (ordinary) dominating set size, nm <= 24. Oracle only.
int brute_dominating_number_grid(int n, int m);

}  // namespace slidegrid
