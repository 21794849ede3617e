#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dimapf/constructions.hpp"
#include "dimapf/io.hpp"
#include "dimapf/solver.hpp"

namespace {

using namespace dimapf;

int cmd_solve(const std::string &path, const std::string &plan_out) {
    Instance inst = parse_instance_file(path);
    PlanResult res = solve(inst);
    std::cout << to_string(res.decision.feasibility) << " method=" << res.decision.method
              << " detail=\"" << res.decision.detail << "\"\n";
    if (res.decision.feasibility == Feasibility::Feasible) {
        std::cout << "plan-length " << res.plan.size() << "\n";
        std::string text = render_plan(res.plan, inst);
        if (plan_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(plan_out);
            out << text;
        }
    }
    return res.decision.feasibility == Feasibility::Infeasible ? 1 : 0;
}

int cmd_verify(const std::string &inst_path, const std::string &plan_path) {
    Instance inst = parse_instance_file(inst_path);
    Plan plan = parse_plan_file(plan_path, inst);
    std::string error;
    if (validate_plan(inst, plan, &error)) {
        std::cout << "valid plan-length " << plan.size() << "\n";
        return 0;
    }
    std::cout << "invalid: " << error << "\n";
    return 1;
}

int cmd_analyze(const std::string &path) {
    Instance inst = parse_instance_file(path);
    const DiGraph &g = inst.graph;
    std::cout << "nodes " << g.n() << " arcs " << g.arc_count() << " agents "
              << inst.init.agents() << " blanks " << inst.init.blanks() << "\n";
    bool sc = is_strongly_connected(g);
    std::cout << "strongly-connected " << (sc ? "yes" : "no") << "\n";
    auto cycles = simple_cycles(g, inst.rot2 == Rot2::Allow ? 2 : 3);
    std::cout << "rotation-cycles " << cycles.size() << "\n";
    if (sc) {
        if (auto pb = is_partially_bidirectional_cycle(g))
            std::cout << "shape ring backward-arcs " << pb->backward.size() << "\n";
        else if (auto pair = find_cycle_pair(g)) {
            auto [r, s, t] = classify_pair(*pair);
            std::cout << "cycle-pair (" << r << "," << s << "," << t << ")\n";
        } else
            std::cout << "cycle-pair none\n";
        GenTable gens = rotation_generators(g, inst.rot2 == Rot2::Allow);
        GroupClass cls = classify_group(g, gens, inst.rot2 == Rot2::Allow);
        std::cout << "rotation-group " << GroupClass::name(cls.kind);
        if (!cls.detail.empty())
            std::cout << " (" << cls.detail << ")";
        std::cout << "\n";
    }
    Decision d = decide(inst);
    std::cout << "decision " << to_string(d.feasibility) << " method=" << d.method
              << " detail=\"" << d.detail << "\"\n";
    return d.feasibility == Feasibility::Infeasible ? 1 : 0;
}

int cmd_enumerate_t0() {
    auto cases = enumerate_t0_extensions();
    int novel = 0, flagged = 0;
    for (const auto &c : cases) {
        std::cout << "base=" << c.base << " ear=" << c.head;
        for (const auto &e : c.ears)
            std::cout << "->" << e;
        std::cout << "->" << c.tail;
        if (c.duplicate)
            std::cout << " duplicate";
        else {
            ++novel;
            if (c.flagged) {
                ++flagged;
                std::cout << " flagged ref=" << c.reference;
            }
        }
        std::cout << "\n";
    }
    std::cout << "cases=" << cases.size() << " novel=" << novel
              << " flagged=" << flagged << "\n";
    return 0;
}

int cmd_oracle(const std::string &path, std::size_t cap) {
    Instance inst = parse_instance_file(path);
    OracleResult res = bfs_reachability(inst, cap);
    switch (res.status) {
    case OracleStatus::Reachable:
        std::cout << "reachable plan-length " << res.plan.size() << "\n"
                  << render_plan(res.plan, inst);
        return 0;
    case OracleStatus::Unreachable:
        std::cout << "unreachable states " << res.states_seen << "\n";
        return 1;
    case OracleStatus::Overflow:
        std::cout << "overflow states " << res.states_seen << "\n";
        return 0;
    }
    return 0;
}

int cmd_bench(std::vector<std::string> families, int min_n, int max_n, int count,
              int oracle_max) {
    if (families.empty())
        families = bench_families();
    std::cout << "# family n index len opt valid ms\n";
    bool all_valid = true;
    for (const std::string &family : families) {
        std::vector<BenchRow> rows;
        for (int n = min_n; n <= max_n; ++n)
            for (int i = 0; i < count; ++i) {
                BenchRow row = bench_run(family, n, static_cast<unsigned>(i), oracle_max);
                rows.push_back(row);
                all_valid = all_valid && row.valid;
                std::cout << family << " " << row.n << " " << row.index << " "
                          << row.plan_len << " ";
                if (row.optimal)
                    std::cout << *row.optimal;
                else
                    std::cout << "-";
                std::cout << " " << (row.valid ? "yes" : "no") << " " << row.millis
                          << "\n";
            }
        std::cout << "# exponent " << family << " " << fitted_exponent(rows) << "\n";
    }
    return all_valid ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"multi-agent pathfinding on directed graphs"};
    app.require_subcommand(1);

    std::string inst_path, plan_path, plan_out;
    std::size_t cap = 5'000'000;

    auto *solve_cmd = app.add_subcommand("solve", "decide an instance and emit a plan");
    solve_cmd->add_option("instance", inst_path, "instance file")->required();
    solve_cmd->add_option("-o,--plan-out", plan_out, "write the plan to a file");

    auto *verify_cmd = app.add_subcommand("verify", "check a plan against an instance");
    verify_cmd->add_option("instance", inst_path, "instance file")->required();
    verify_cmd->add_option("plan", plan_path, "plan file")->required();

    auto *analyze_cmd = app.add_subcommand("analyze", "structural report for an instance");
    analyze_cmd->add_option("instance", inst_path, "instance file")->required();

    app.add_subcommand("enumerate-t0", "enumerate ear extensions of the exceptional graphs");

    auto *oracle_cmd = app.add_subcommand("oracle", "exhaustive shortest-plan search");
    oracle_cmd->add_option("instance", inst_path, "instance file")->required();
    oracle_cmd->add_option("--cap", cap, "state cap for the search");

    std::vector<std::string> families;
    int min_n = 5, max_n = 11, count = 3, oracle_max = 7;
    auto *bench_cmd = app.add_subcommand("bench", "run the benchmark families");
    bench_cmd->add_option("--family", families, "families to run (default: all)");
    bench_cmd->add_option("--min", min_n, "smallest size");
    bench_cmd->add_option("--max", max_n, "largest size");
    bench_cmd->add_option("--count", count, "instances per size");
    bench_cmd->add_option("--oracle-max", oracle_max,
                          "largest size checked against the optimal length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve_cmd->parsed())
            return cmd_solve(inst_path, plan_out);
        if (verify_cmd->parsed())
            return cmd_verify(inst_path, plan_path);
        if (analyze_cmd->parsed())
            return cmd_analyze(inst_path);
        if (app.get_subcommand("enumerate-t0")->parsed())
            return cmd_enumerate_t0();
        if (oracle_cmd->parsed())
            return cmd_oracle(inst_path, cap);
        if (bench_cmd->parsed())
            return cmd_bench(families, min_n, max_n, count, oracle_max);
    } catch (const dimapf::ParseError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
