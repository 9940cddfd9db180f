#include "slidegrid/graph_params.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace slidegrid {

const char* param_source_name(ParamSource s) {
    switch (s) {
        case ParamSource::closed_form: return "closed-form";
        case ParamSource::dynamic_program: return "dynamic-program";
        case ParamSource::brute_force: return "brute-force";
    }
    return "?";
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 2;

// Minimum total dominating set of P_n. State: (v_i in set, v_i already has a
// set neighbour). Every vertex must end up with a neighbour in the set.
int gamma_t_path_dp(int n) {
    int dp[2][2] = {{0, kInf}, {1, kInf}};  // dp[s][d], i = 1 (no left neighbour yet)
    for (int i = 1; i < n; ++i) {
        int ndp[2][2] = {{kInf, kInf}, {kInf, kInf}};
        for (int s = 0; s < 2; ++s)
            for (int d = 0; d < 2; ++d) {
                if (dp[s][d] >= kInf) continue;
                for (int s2 = 0; s2 < 2; ++s2) {
                    if (!d && !s2) continue;  // v_i would stay undominated
                    ndp[s2][s] = std::min(ndp[s2][s], dp[s][d] + s2);
                }
            }
        std::copy(&ndp[0][0], &ndp[0][0] + 4, &dp[0][0]);
    }
    return std::min(dp[0][1], dp[1][1]);
}

// Exact domination number of a w x len grid by a cell-scan profile DP over
// trits: 0 = in set, 1 = dominated, 2 = still waiting for a neighbour.
// One pass records the answer for every length 1..len.
struct GridGammaCache {
    std::mutex mu;
    std::map<int, std::vector<int>> by_width;  // width -> answers[len] (index 0 unused)
};
GridGammaCache g_gamma_cache;

std::vector<int> grid_domination_dp(int w, int len) {
    std::vector<int> pow3(w + 1, 1);
    for (int j = 1; j <= w; ++j) pow3[j] = pow3[j - 1] * 3;
    const int states = pow3[w];

    // states containing a trit 2 can never close a final row
    std::vector<std::uint8_t> has_waiting(states, 0);
    for (int s = 0; s < states; ++s) {
        int x = s;
        for (int j = 0; j < w; ++j, x /= 3)
            if (x % 3 == 2) {
                has_waiting[s] = 1;
                break;
            }
    }

    std::vector<int> cur(states, kInf), nxt(states, kInf);
    int all_dominated = 0;
    for (int j = 0; j < w; ++j) all_dominated += pow3[j];  // all trits 1
    cur[all_dominated] = 0;

    std::vector<int> answers(len + 1, kInf);
    for (int row = 0; row < len; ++row) {
        for (int j = 0; j < w; ++j) {
            std::fill(nxt.begin(), nxt.end(), kInf);
            const int pj = pow3[j];
            const int pl = j > 0 ? pow3[j - 1] : 0;
            for (int s = 0; s < states; ++s) {
                int v = cur[s];
                if (v >= kInf) continue;
                int above = (s / pj) % 3;
                int left = j > 0 ? (s / pl) % 3 : 1;  // border acts as "dominated"
                // skip this square
                if (above != 2) {
                    int trit = (left == 0 || above == 0) ? 1 : 2;
                    int ns = s + (trit - above) * pj;
                    if (v < nxt[ns]) nxt[ns] = v;
                }
                // place a set vertex here
                {
                    int ns = s - above * pj;
                    if (j > 0 && left == 2) ns -= pl;  // left neighbour is now dominated
                    if (v + 1 < nxt[ns]) nxt[ns] = v + 1;
                }
            }
            cur.swap(nxt);
        }
        int best = kInf;
        for (int s = 0; s < states; ++s)
            if (!has_waiting[s] && cur[s] < best) best = cur[s];
        answers[row + 1] = best;
    }
    return answers;
}

int gamma_grid_exact(int w, int len) {
    std::lock_guard<std::mutex> lock(g_gamma_cache.mu);
    auto& vec = g_gamma_cache.by_width[w];
    if (static_cast<int>(vec.size()) <= len) vec = grid_domination_dp(w, len);
    return vec[len];
}

long long gamma_grid_closed_form(int n, int m) {
    return static_cast<long long>(n + 2) * (m + 2) / 5 - 4;
}

// --- brute-force oracles ---------------------------------------------------

// First (lexicographically smallest) subset of {0..nv-1}, by increasing size,
// whose mask satisfies pred. Sizes are tiny (nv <= 24).
template <typename Pred>
std::vector<int> first_valid_subset(int nv, Pred pred) {
    for (int k = 0; k <= nv; ++k) {
        std::vector<int> idx(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            std::uint32_t mask = 0;
            for (int i : idx) mask |= 1u << i;
            if (pred(mask)) return idx;
            int i = k - 1;
            while (i >= 0 && idx[i] == nv - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {};  // unreachable for satisfiable predicates
}

}  // namespace

int gamma_t_path(int n) {
    if (n < 2) throw std::invalid_argument("gamma_t(P_n) requires n >= 2");
    return gamma_t_path_dp(n);
}

ParamValue gamma_t_path_value(int n) { return {gamma_t_path(n), ParamSource::dynamic_program, false}; }

int gamma_t_path_closed_form(int n) {
    if (n < 2) throw std::invalid_argument("gamma_t(P_n) requires n >= 2");
    if (n % 4 == 1) return 2 * (n / 4) + 1;
    return 2 * ((n + 3) / 4);
}

int rho_path(int n) {
    if (n < 2) throw std::invalid_argument("rho(P_n) requires n >= 2");
    return (n + 1) / 2;
}

ParamValue rho_path_value(int n) { return {rho_path(n), ParamSource::closed_form, false}; }

int rho_grid(int n, int m) {
    if (n < 1 || m < 1 || static_cast<long long>(n) * m < 2)
        throw std::invalid_argument("rho(G_{n,m}) requires a grid without isolated vertices");
    return static_cast<int>((static_cast<long long>(n) * m + 1) / 2);
}

ParamValue rho_grid_value(int n, int m) { return {rho_grid(n, m), ParamSource::closed_form, false}; }

ParamValue gamma_grid(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("gamma(G_{n,m}) requires positive dimensions");
    int w = std::min(n, m), len = std::max(n, m);
    if (w <= 14) return {gamma_grid_exact(w, len), ParamSource::dynamic_program, false};
    if (w >= 16) return {gamma_grid_closed_form(n, m), ParamSource::closed_form, false};
    return {gamma_grid_closed_form(n, m), ParamSource::closed_form, true};
}

std::vector<int> brute_total_dominating_set_path(int n) {
    if (n < 2 || n > 24) throw std::invalid_argument("path oracle limited to 2 <= n <= 24");
    std::vector<std::uint32_t> nbr(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v > 0) nbr[v] |= 1u << (v - 1);
        if (v + 1 < n) nbr[v] |= 1u << (v + 1);
    }
    auto ok = [&](std::uint32_t mask) {
        for (int v = 0; v < n; ++v)
            if (!(mask & nbr[v])) return false;
        return true;
    };
    std::vector<int> idx = first_valid_subset(n, ok);
    for (int& v : idx) ++v;  // 1-based vertices
    return idx;
}

std::vector<Position> brute_total_dominating_set_grid(int n, int m) {
    if (n < 1 || m < 1 || n * m > 24 || n * m < 2)
        throw std::invalid_argument("grid oracle limited to 2 <= n*m <= 24");
    int nv = n * m;
    std::vector<std::uint32_t> nbr(nv, 0);
    auto id = [&](int r, int c) { return r * m + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            if (r > 0) nbr[id(r, c)] |= 1u << id(r - 1, c);
            if (r + 1 < n) nbr[id(r, c)] |= 1u << id(r + 1, c);
            if (c > 0) nbr[id(r, c)] |= 1u << id(r, c - 1);
            if (c + 1 < m) nbr[id(r, c)] |= 1u << id(r, c + 1);
        }
    auto ok = [&](std::uint32_t mask) {
        for (int v = 0; v < nv; ++v)
            if (!(mask & nbr[v])) return false;
        return true;
    };
    std::vector<int> idx = first_valid_subset(nv, ok);
    std::vector<Position> out;
    for (int v : idx) out.push_back({v / m + 1, v % m + 1});
    return out;
}

int brute_dominating_number_grid(int n, int m) {
    if (n < 1 || m < 1 || n * m > 24) throw std::invalid_argument("grid oracle limited to n*m <= 24");
    int nv = n * m;
    std::vector<std::uint32_t> closed(nv, 0);
    auto id = [&](int r, int c) { return r * m + c; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) {
            closed[id(r, c)] |= 1u << id(r, c);
            if (r > 0) closed[id(r, c)] |= 1u << id(r - 1, c);
            if (r + 1 < n) closed[id(r, c)] |= 1u << id(r + 1, c);
            if (c > 0) closed[id(r, c)] |= 1u << id(r, c - 1);
            if (c + 1 < m) closed[id(r, c)] |= 1u << id(r, c + 1);
        }
    auto ok = [&](std::uint32_t mask) {
        for (int v = 0; v < nv; ++v)
            if (!(mask & closed[v])) return false;
        return true;
    };
    return static_cast<int>(first_valid_subset(nv, ok).size());
}

}  // namespace slidegrid
