#ifndef DIMAPF_SOLVER_HPP
#define DIMAPF_SOLVER_HPP

#include "dimapf/constructions.hpp"
#include "dimapf/oracle.hpp"

namespace dimapf {

enum class Feasibility { Feasible, Infeasible, Unknown };

const char *to_string(Feasibility f);

struct Decision {
    Feasibility feasibility = Feasibility::Unknown;
    std::string method; // which rule decided
    std::string detail;
};

/// Feasibility decision. Structural rules handle strongly connected
/// instances; exhaustive search covers the remaining instances while their
/// state space fits under oracle_cap, otherwise the answer is Unknown.
Decision decide(const Instance &inst, std::size_t oracle_cap = 5'000'000);

struct PlanResult {
    Decision decision;
    Plan plan; // meaningful when Feasible
};

/// Decision plus a witness plan for feasible instances.
PlanResult solve(const Instance &inst, std::size_t oracle_cap = 5'000'000);

// ---- benchmark instance families ----

/// Deterministic instance generator. Families:
///   cycle-shift  directed n-cycle, fully occupied, rotation regime
///   pb-cycle     cycle with some reversed arcs, fully occupied
///   cycle-pair   two directed cycles sharing a path, fully occupied
///   random-sc    random strongly connected digraph, two blanks, both regimes
/// Every generated instance is feasible by construction.
Instance bench_instance(const std::string &family, int n, unsigned index);

const std::vector<std::string> &bench_families();

struct BenchRow {
    std::string family;
    int n = 0;
    unsigned index = 0;
    std::size_t plan_len = 0;
    std::optional<std::size_t> optimal; // empty when the oracle was skipped
    bool valid = false;
    double millis = 0.0;
};

/// Solves one generated instance, validates the plan, and (for n <=
/// oracle_max_n) computes the optimal length for comparison.
BenchRow bench_run(const std::string &family, int n, unsigned index, int oracle_max_n);

/// Least-squares slope of log(mean plan length) against log(n).
double fitted_exponent(const std::vector<BenchRow> &rows);

} // namespace dimapf

#endif
