#ifndef DIMAPF_MAPF_HPP
#define DIMAPF_MAPF_HPP

#include <variant>

#include "dimapf/graph.hpp"
#include "dimapf/perm.hpp"

namespace dimapf {

/// Which step kinds a plan may use.
enum class Regime { Simple, Rotation, Both };

/// Whether synchronous rotations along 2-cycles (a single bidirectional
/// edge) are admitted.
enum class Rot2 { Allow, Forbid };

/// Agent placement: state[agent] = node, injective. Agents are 0..k-1.
class MapfState {
public:
    MapfState() = default;
    /// Throws std::invalid_argument if positions collide or fall outside
    /// 0..n-1.
    MapfState(int n, std::vector<int> positions);

    int n() const { return n_; }
    int agents() const { return static_cast<int>(pos_.size()); }
    int blanks() const { return n_ - agents(); }
    int pos(int agent) const { return pos_.at(agent); }
    const std::vector<int> &positions() const { return pos_; }
    /// Agent at node v, or nullopt when v is blank.
    std::optional<int> agent_at(int v) const;
    bool is_blank(int v) const { return !agent_at(v).has_value(); }
    std::vector<int> blank_nodes() const;

    bool operator==(const MapfState &o) const { return n_ == o.n_ && pos_ == o.pos_; }
    bool operator<(const MapfState &o) const {
        return std::tie(n_, pos_) < std::tie(o.n_, o.pos_);
    }

private:
    int n_ = 0;
    std::vector<int> pos_;
    std::vector<int> at_; // node -> agent or -1
};

/// One agent slides along an arc into a blank node.
struct Move {
    int agent, from, to;
    bool operator==(const Move &o) const {
        return agent == o.agent && from == o.from && to == o.to;
    }
};

/// All agents on a fully occupied directed cycle advance one step
/// simultaneously. The cycle is stored starting at its smallest node.
struct Rotation {
    std::vector<int> cycle;
    bool operator==(const Rotation &o) const { return cycle == o.cycle; }
    /// The induced cyclic node permutation on n points.
    Permutation node_perm(int n) const { return Permutation::from_cycle(n, cycle); }
};

using Step = std::variant<Move, Rotation>;
using Plan = std::vector<Step>;

struct IllegalMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IllegalRotation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonicalizes a rotation cycle to start at its smallest node.
std::vector<int> canonical_cycle(std::vector<int> cycle);

/// Applies one step, checking legality against the graph, the regime and
/// the rotation-size policy. Throws IllegalMove / IllegalRotation.
MapfState apply_step(const DiGraph &g, const MapfState &s, const Step &step,
                     Regime regime = Regime::Both, Rot2 rot2 = Rot2::Allow);
MapfState apply_plan(const DiGraph &g, const MapfState &s, const Plan &plan,
                     Regime regime = Regime::Both, Rot2 rot2 = Rot2::Allow);

struct Instance {
    DiGraph graph;
    std::vector<std::string> agent_names; // insertion order; index = agent id
    MapfState init, goal;
    Regime regime = Regime::Both;
    Rot2 rot2 = Rot2::Allow;
};

/// True iff the plan is legal from `init` and ends exactly at `goal`.
bool validate_plan(const Instance &inst, const Plan &plan, std::string *error = nullptr);

} // namespace dimapf

#endif
