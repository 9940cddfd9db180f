#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "slidegrid/board.hpp"
#include "slidegrid/construct.hpp"
#include "slidegrid/graph_params.hpp"
#include "slidegrid/slide.hpp"
#include "slidegrid/solver.hpp"
#include "slidegrid/svg.hpp"
#include "slidegrid/verify.hpp"

using json = nlohmann::json;
using namespace slidegrid;

namespace {

constexpr int kExitComplete = 0;
constexpr int kExitNegative = 1;  // verified-incomplete / infeasible
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::chrono::milliseconds parse_budget(const std::string& text) {
    if (text.empty()) return std::chrono::milliseconds{0};
    size_t pos = 0;
    double value = std::stod(text, &pos);
    std::string unit = text.substr(pos);
    if (unit == "ms") return std::chrono::milliseconds{static_cast<long long>(value)};
    if (unit == "m") return std::chrono::milliseconds{static_cast<long long>(value * 60'000)};
    if (unit.empty() || unit == "s") return std::chrono::milliseconds{static_cast<long long>(value * 1'000)};
    throw std::runtime_error("unknown budget unit '" + unit + "'");
}

Position parse_position(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::runtime_error("expected '<row>,<col>'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

Topology parse_topology(const std::string& t) {
    if (t == "rect") return Topology::rect;
    if (t == "torus") return Topology::torus;
    if (t == "king") return Topology::king;
    throw std::runtime_error("unknown topology '" + t + "'");
}

json positions_json(const std::vector<Position>& ps) {
    json a = json::array();
    for (Position p : ps) a.push_back({p.row, p.col});
    return a;
}

json witness_json(const ObstacleSet& w) {
    json a = json::array();
    if (w.kind == ObstacleKind::blocks) {
        for (Position p : w.blocks) a.push_back({p.row, p.col});
    } else {
        for (const Wall& x : w.walls)
            a.push_back({x.side == WallSide::south ? "WS" : "WE", x.at.row, x.at.col});
    }
    return a;
}

int effective_workers(int flag_value) {
    if (const char* env = std::getenv("SLIDEGRID_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return flag_value > 0 ? flag_value : 1;
}

int cmd_verify(const std::string& path, const std::string& mode_s, bool all_starts, bool as_json) {
    Board b = parse_board(read_file(path));
    Mode mode = mode_s == "stop" ? Mode::stop : Mode::pass;
    VerificationReport rep = verify(b, mode);
    AllStartsResult as;
    if (all_starts) as = verify_all_starts(b, mode);
    bool ok = all_starts ? as.ok : rep.complete;

    if (as_json) {
        json j{{"command", "verify"},
               {"mode", mode_name(mode)},
               {"complete", rep.complete},
               {"stops", positions_json(rep.stops)},
               {"passed", positions_json(rep.passed)},
               {"missing", positions_json(rep.missing)}};
        if (all_starts) {
            j["all_starts"] = as.ok;
            if (!as.ok) j["first_failing_start"] = {as.first_failure.row, as.first_failure.col};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (rep.complete ? "complete" : "incomplete") << " (" << mode_name(mode)
                  << "): " << rep.stops.size() << " stops, " << rep.passed.size() << " passed, "
                  << rep.missing.size() << " missing\n";
        if (!rep.complete) {
            std::cout << "missing:";
            for (Position p : rep.missing) std::cout << " (" << p.row << "," << p.col << ")";
            std::cout << "\n";
        }
        if (all_starts)
            std::cout << "all-starts: " << (as.ok ? "complete" : "incomplete") << "\n";
    }
    return ok ? kExitComplete : kExitNegative;
}

int cmd_solve(const std::string& topology, int rows, int cols, const std::string& obstacles,
              const std::string& mode_s, const std::string& start_s, const std::string& budget_s,
              int workers, int decision_k, bool as_json) {
    GameSpec spec;
    spec.topology = parse_topology(topology);
    spec.rows = rows;
    spec.cols = cols;
    spec.obstacles = obstacles == "walls" ? ObstacleKind::walls : ObstacleKind::blocks;
    spec.mode = mode_s == "stop" ? Mode::stop : Mode::pass;
    spec.start = parse_position(start_s);
    auto budget = parse_budget(budget_s);
    workers = effective_workers(workers);

    if (decision_k >= 0) {
        DecisionResult d = solve_decision(spec, decision_k, budget, workers);
        const char* status = d.status == DecisionStatus::witness_found ? "witness"
                             : d.status == DecisionStatus::infeasible  ? "none"
                                                                       : "timeout";
        if (as_json) {
            json j{{"command", "solve"},
                   {"decision_k", decision_k},
                   {"status", status},
                   {"placements_tested", d.placements_tested}};
            if (d.status == DecisionStatus::witness_found) j["witness"] = witness_json(d.witness);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "k=" << decision_k << ": " << status << "\n";
            if (d.status == DecisionStatus::witness_found) std::cout << witness_json(d.witness).dump() << "\n";
        }
        return d.status == DecisionStatus::witness_found ? kExitComplete : kExitNegative;
    }

    SolveResult r = solve_exact(spec, budget, workers);
    if (as_json) {
        json j{{"command", "solve"},
               {"optimum", r.optimum ? json(*r.optimum) : json(nullptr)},
               {"witness", witness_json(r.witness)},
               {"placements_tested", r.placements_tested},
               {"elapsed_ms", r.elapsed.count()},
               {"bound", r.bound},
               {"bound_source", r.bound_source}};
        if (!r.optimum) j["best_infeasible"] = r.best_infeasible;
        std::cout << j.dump(2) << "\n";
    } else {
        if (r.optimum) {
            std::cout << "optimum " << *r.optimum << " witness " << witness_json(r.witness).dump()
                      << " (" << r.placements_tested << " placements, " << r.elapsed.count()
                      << " ms, bound " << r.bound << " from " << r.bound_source << ")\n";
        } else {
            std::cout << "unresolved: every k <= " << r.best_infeasible << " infeasible, budget exhausted\n";
        }
    }
    return r.optimum ? kExitComplete : kExitNegative;
}

int cmd_construct(const std::string& family_s, int n, int m, const std::string& out_path,
                  bool check, bool as_json) {
    auto fam = family_from_name(family_s);
    if (!fam) throw std::runtime_error("unknown family '" + family_s + "'");
    Construction c = construct(*fam, n, m);
    std::string doc = serialize_board(c.board);
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
        out << doc;
    }
    bool ok = true;
    if (check) ok = verify(c.board, family_mode(*fam)).complete;
    if (as_json) {
        json j{{"command", "construct"},
               {"family", family_name(*fam)},
               {"n", n},
               {"m", m},
               {"claimed_size", c.claimed_size},
               {"size_bound", family_size_bound(*fam, n, m)}};
        if (check) j["verified"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        if (out_path.empty()) std::cout << doc;
        std::cerr << family_name(*fam) << " " << n << "x" << m << ": " << c.claimed_size
                  << " obstacles" << (check ? (ok ? ", verified" : ", FAILED VERIFICATION") : "")
                  << "\n";
    }
    return ok ? kExitComplete : kExitNegative;
}

int cmd_params(const std::string& name, const std::vector<int>& args, bool as_json) {
    ParamValue v;
    if (name == "gamma-t-path" && args.size() == 1) v = gamma_t_path_value(args[0]);
    else if (name == "rho-path" && args.size() == 1) v = rho_path_value(args[0]);
    else if (name == "rho-grid" && args.size() == 2) v = rho_grid_value(args[0], args[1]);
    else if (name == "gamma-grid" && args.size() == 2) v = gamma_grid(args[0], args[1]);
    else throw std::runtime_error("usage: params <gamma-t-path n | rho-path n | rho-grid n m | gamma-grid n m>");

    std::string source = param_source_name(v.source);
    if (v.formula_regime) source += " (formula-regime)";
    if (as_json) {
        json j{{"command", "params"}, {"name", name}, {"args", args}, {"value", v.value}, {"source", source}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.value << " (" << source << ")\n";
    }
    return kExitComplete;
}

int cmd_minmoves(const std::string& path, const std::string& target_s, const std::string& mode_s,
                 bool as_json) {
    Board b = parse_board(read_file(path));
    Position target = parse_position(target_s);
    Mode mode = mode_s == "stop" ? Mode::stop : Mode::pass;
    int moves = min_moves(b, target, mode);
    if (as_json) {
        json j{{"command", "minmoves"},
               {"target", {target.row, target.col}},
               {"mode", mode_name(mode)},
               {"moves", moves == kUnreachable ? json(nullptr) : json(moves)}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (moves == kUnreachable) std::cout << "unreachable\n";
        else std::cout << moves << "\n";
    }
    return moves == kUnreachable ? kExitNegative : kExitComplete;
}

int cmd_render(const std::string& path, const std::string& svg_path, const std::string& overlay,
               const std::string& mode_s) {
    Board b = parse_board(read_file(path));
    Mode mode = mode_s == "stop" ? Mode::stop : Mode::pass;

    VerificationReport rep;
    bool have_rep = false;
    if (!overlay.empty() || !svg_path.empty()) {
        rep = verify(b, mode);
        have_rep = true;
    }
    if (!svg_path.empty()) {
        std::string svg = render_svg(b, have_rep ? &rep : nullptr);
        if (svg_path == "-") {
            std::cout << svg;
        } else {
            std::ofstream out(svg_path, std::ios::binary);
            if (!out) throw std::runtime_error("cannot write '" + svg_path + "'");
            out << svg;
        }
        return kExitComplete;
    }
    const std::vector<Position>* ov = nullptr;
    if (overlay == "passed") ov = &rep.passed;
    else if (overlay == "stops") ov = &rep.stops;
    else if (overlay == "missing") ov = &rep.missing;
    else if (!overlay.empty()) throw std::runtime_error("overlay must be passed|stops|missing");
    std::cout << render_ascii(b, ov);
    return kExitComplete;
}

int cmd_bench(int rows, int cols, int blocks, long long placements) {
    GameSpec spec;
    spec.rows = rows;
    spec.cols = cols;
    std::mt19937_64 rng(12345);
    std::vector<Position> cand = block_candidates(spec);

    std::vector<std::uint64_t> brow(rows, 0), bcol(cols, 0);
    engine::BoardView v;
    v.rows = rows;
    v.cols = cols;
    v.start = {1, 1};
    v.block_row = brow.data();
    v.block_col = bcol.data();
    auto scratch = std::make_unique<engine::Scratch>();

    long long complete_count = 0;
    auto t0 = std::chrono::steady_clock::now();
    for (long long i = 0; i < placements; ++i) {
        Position picks[16];
        for (int j = 0; j < blocks; ++j) {
            Position p = cand[rng() % cand.size()];
            picks[j] = p;
            brow[p.row - 1] |= 1ull << (p.col - 1);
            bcol[p.col - 1] |= 1ull << (p.row - 1);
        }
        if (engine::complete(v, Mode::pass, *scratch)) ++complete_count;
        for (int j = 0; j < blocks; ++j) {
            Position p = picks[j];
            brow[p.row - 1] &= ~(1ull << (p.col - 1));
            bcol[p.col - 1] &= ~(1ull << (p.row - 1));
        }
    }
    auto dt = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - t0);
    double rate = placements / (dt.count() / 1e6);
    std::cout << "verified " << placements << " placements (" << complete_count << " complete) in "
              << dt.count() / 1000 << " ms: " << static_cast<long long>(rate) << " placements/s\n";
    return kExitComplete;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sliding-robot boards: verification, exact solving, constructions"};
    app.require_subcommand(1);

    // verify
    std::string v_path, v_mode = "pass";
    bool v_all_starts = false, v_json = false;
    auto* sc_verify = app.add_subcommand("verify", "check pass/stop coverage of a board file");
    sc_verify->add_option("board", v_path)->required();
    sc_verify->add_option("--mode", v_mode)->check(CLI::IsMember({"pass", "stop"}));
    sc_verify->add_flag("--all-starts", v_all_starts);
    sc_verify->add_flag("--json", v_json);

    // solve
    std::string s_topology = "rect", s_obstacles = "blocks", s_mode = "pass", s_start = "1,1",
                s_budget;
    int s_rows = 0, s_cols = 0, s_workers = 0, s_decision = -1;
    bool s_json = false;
    auto* sc_solve = app.add_subcommand("solve", "exact minimum obstacle count by pruned search");
    sc_solve->add_option("--topology", s_topology)->check(CLI::IsMember({"rect", "torus", "king"}));
    sc_solve->add_option("--rows", s_rows)->required();
    sc_solve->add_option("--cols", s_cols)->required();
    sc_solve->add_option("--obstacles", s_obstacles)->check(CLI::IsMember({"blocks", "walls"}));
    sc_solve->add_option("--mode", s_mode)->check(CLI::IsMember({"pass", "stop"}));
    sc_solve->add_option("--start", s_start);
    sc_solve->add_option("--budget", s_budget);
    sc_solve->add_option("--workers", s_workers);
    sc_solve->add_option("--decision", s_decision, "test a single placement size k");
    sc_solve->add_flag("--json", s_json);

    // construct
    std::string c_family, c_out;
    int c_n = 0, c_m = 0;
    bool c_check = false, c_json = false;
    auto* sc_construct = app.add_subcommand("construct", "emit a published placement family");
    sc_construct->add_option("--family", c_family)->required();
    sc_construct->add_option("-n", c_n)->required();
    sc_construct->add_option("-m", c_m)->required();
    sc_construct->add_option("--out", c_out);
    sc_construct->add_flag("--check", c_check);
    sc_construct->add_flag("--json", c_json);

    // params
    std::string p_name;
    std::vector<int> p_args;
    bool p_json = false;
    auto* sc_params = app.add_subcommand("params", "graph parameter oracles");
    sc_params->add_option("name", p_name)->required();
    sc_params->add_option("args", p_args);
    sc_params->add_flag("--json", p_json);

    // minmoves
    std::string m_path, m_target, m_mode = "pass";
    bool m_json = false;
    auto* sc_minmoves = app.add_subcommand("minmoves", "shortest move count to a target square");
    sc_minmoves->add_option("board", m_path)->required();
    sc_minmoves->add_option("--target", m_target)->required();
    sc_minmoves->add_option("--mode", m_mode)->check(CLI::IsMember({"pass", "stop"}));
    sc_minmoves->add_flag("--json", m_json);

    // render
    std::string r_path, r_svg, r_overlay, r_mode = "pass";
    auto* sc_render = app.add_subcommand("render", "ascii or SVG picture of a board file");
    sc_render->add_option("board", r_path)->required();
    sc_render->add_option("--svg", r_svg, "write SVG to a file ('-' for stdout)");
    sc_render->add_option("--overlay", r_overlay)->check(CLI::IsMember({"passed", "stops", "missing"}));
    sc_render->add_option("--mode", r_mode)->check(CLI::IsMember({"pass", "stop"}));

    // bench
    int b_rows = 10, b_cols = 10, b_blocks = 4;
    long long b_placements = 200000;
    auto* sc_bench = app.add_subcommand("bench", "verification throughput gate");
    sc_bench->add_option("--rows", b_rows);
    sc_bench->add_option("--cols", b_cols);
    sc_bench->add_option("--blocks", b_blocks);
    sc_bench->add_option("--placements", b_placements);

    try {
        app.parse(argc, argv);
        if (sc_verify->parsed()) return cmd_verify(v_path, v_mode, v_all_starts, v_json);
        if (sc_solve->parsed())
            return cmd_solve(s_topology, s_rows, s_cols, s_obstacles, s_mode, s_start, s_budget,
                             s_workers, s_decision, s_json);
        if (sc_construct->parsed()) return cmd_construct(c_family, c_n, c_m, c_out, c_check, c_json);
        if (sc_params->parsed()) return cmd_params(p_name, p_args, p_json);
        if (sc_minmoves->parsed()) return cmd_minmoves(m_path, m_target, m_mode, m_json);
        if (sc_render->parsed()) return cmd_render(r_path, r_svg, r_overlay, r_mode);
        if (sc_bench->parsed()) return cmd_bench(b_rows, b_cols, b_blocks, b_placements);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
