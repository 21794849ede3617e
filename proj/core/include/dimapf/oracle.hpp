#ifndef DIMAPF_ORACLE_HPP
#define DIMAPF_ORACLE_HPP

#include "dimapf/mapf.hpp"

namespace dimapf {

enum class OracleStatus { Reachable, Unreachable, Overflow };

struct OracleResult {
    OracleStatus status;
    Plan plan;                   // shortest, when Reachable
    std::size_t states_seen = 0;
};

/// Exhaustive breadth-first search over agent placements. Successors are
/// generated deterministically: simple moves first (by agent, then
/// destination), then rotations in canonical cycle order. Returns Overflow
/// once more than state_cap states have been expanded.
OracleResult bfs_reachability(const Instance &inst, std::size_t state_cap = 5'000'000);

/// All node permutations realizable by rotation sequences on a fully
/// occupied digraph: the closure of the rotation generators.
std::vector<Permutation> enumerate_group(const DiGraph &g, Rot2 rot2,
                                         std::size_t cap = 50'000);

} // namespace dimapf

#endif
