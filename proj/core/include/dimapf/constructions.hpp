#ifndef DIMAPF_CONSTRUCTIONS_HPP
#define DIMAPF_CONSTRUCTIONS_HPP

#include "dimapf/mapf.hpp"

namespace dimapf {

struct NotReachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FullyOccupied : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- simple-move constructions ----

/// Simple-move plan transforming `from` into `to`, where both states agree
/// off the given directed cycle and place the cycle agents in the same
/// cyclic order. All moves run forward along the cycle; at most
/// |cycle| * (|cycle| - 1) moves. Throws NotReachable when the cyclic
/// orders differ or no blank is available.
Plan undo_on_cycle(const DiGraph &g, const std::vector<int> &cycle,
                   const MapfState &from, const MapfState &to);

/// Plan from `after` back to the state the move departed from, using only
/// simple moves; at most |V|^2 of them. Throws NotReachable when no
/// directed cycle contains the move's arc.
Plan synthesize_inverse_move(const DiGraph &g, const MapfState &after, const Move &m);

/// Replays a move sequence that is legal on the underlying undirected
/// graph: forward moves are copied, reverse moves are re-expressed through
/// synthesize_inverse_move. The result is legal on g itself and reaches
/// the same final state.
Plan lift_undirected_plan(const DiGraph &g, const MapfState &init,
                          const std::vector<Move> &undirected_moves);

/// Plan inverting `plan`: runs from the state `plan` reaches back to
/// `start`. Moves are inverted via synthesize_inverse_move, rotations by
/// repetition.
Plan invert_plan(const DiGraph &g, const MapfState &start, const Plan &plan);

/// Simple-move plan from `from` to a state whose blank set is exactly
/// `target_blanks`; agents end up wherever the shuffling leaves them. Uses
/// at most about |V|^2 moves. Blanks already in place are kept in place.
struct BlankNormalizeResult {
    Plan plan;
    MapfState state;
};
BlankNormalizeResult blank_normalize(const DiGraph &g, const MapfState &from,
                                     const std::set<int> &target_blanks);

/// Simple-move plan whose net effect advances every agent on the cycle one
/// step forward (the same node permutation a rotation of the cycle would
/// apply), using a blank on the cycle; exactly #agents-on-cycle moves.
/// Throws FullyOccupied when the cycle has no blank.
Plan emulate_rotation_with_blank(const DiGraph &g, const MapfState &s,
                                 const std::vector<int> &cycle);

/// Walks the first blank of the cycle backward one full loop (|cycle|
/// moves). The net node permutation is the (|cycle|-1)-cycle skipping the
/// blank's node — an odd permutation when |cycle| is odd. Throws
/// FullyOccupied when the cycle has no blank.
Plan punctured_rotation_with_blank(const DiGraph &g, const MapfState &s,
                                   const std::vector<int> &cycle);

// ---- rotation constructions on cycle pairs ----

/// The standard two-cycle graph: nodes a1..ar, b1..bs, c1..ct; the left
/// cycle runs a1..ar,bs..b1 and the right cycle c1..ct,bs..b1.
struct CyclePairGraph {
    DiGraph graph;
    CyclePair pair;
};
CyclePairGraph make_cycle_pair_graph(int r, int s, int t);

/// Generators "alpha" (left-cycle rotation) and "beta" (right-cycle
/// rotation) of a cycle pair.
GenTable cycle_pair_generators(const CyclePair &p, int n);

/// Word over alpha/beta expanding to a 3-cycle on the named nodes, by case
/// analysis on (r,s,t) with r <= t. The two exceptional shapes (1,3,2) and
/// (2,2,2) admit no such word and return an empty recipe.
struct ThreeCycleRecipe {
    std::optional<GenWord> word;
    std::vector<std::string> cycle_labels; // the 3-cycle, e.g. {"b1","a1","c2"}
};
ThreeCycleRecipe three_cycle_word(int r, int s, int t);

/// Rotation plan on a fully occupied cycle-pair graph whose net node
/// permutation sends from_a to to_a and from_b to to_b.
Plan two_transitive_transport(const CyclePair &p, int n, int from_a, int from_b,
                              int to_a, int to_b);

// ---- exceptional-shape extensions ----

/// One-or-two-node ear extensions of the two exceptional base graphs,
/// enumerated deterministically: for each base, each ordered (head, tail)
/// node pair and each ear length 1..2, attach a path head -> e1 [-> e2]
/// -> tail. Cases isomorphic to an earlier case are marked duplicate; a
/// novel case is flagged when every cycle pair in it still has one of the
/// exceptional shapes.
struct T0Case {
    std::string base; // "(1,3,2)" or "(2,2,2)"
    std::string head, tail;
    std::vector<std::string> ears;
    DiGraph graph;
    bool duplicate = false;
    bool flagged = false;
    int reference = -1; // index of the matching reference graph, or -1
};
std::vector<T0Case> enumerate_t0_extensions();

/// The three flagged extension graphs, each with rotation generators and a
/// word expanding to a 3-cycle, showing the exceptional shapes lose their
/// exceptional status under any such extension.
struct T0Reference {
    DiGraph graph;
    GenTable gens;
    GenWord word;
};
T0Reference t0_extension_three_cycle(int index); // 0, 1, 2

} // namespace dimapf

#endif
