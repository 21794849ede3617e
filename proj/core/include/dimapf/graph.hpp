#ifndef DIMAPF_GRAPH_HPP
#define DIMAPF_GRAPH_HPP

#include <optional>
#include <set>
#include <tuple>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dimapf {

/// Simple directed graph. Nodes are identified by string labels and kept in
/// insertion order; all enumerations are deterministic in that order.
class DiGraph {
public:
    int add_node(const std::string &label);
    void add_arc(int u, int v);
    void add_arc(const std::string &u, const std::string &v);

    int n() const { return static_cast<int>(labels_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    bool has_arc(int u, int v) const { return arcs_.count({u, v}) > 0; }
    const std::string &label(int v) const { return labels_.at(v); }
    std::optional<int> node(const std::string &label) const;
    int require_node(const std::string &label) const;

    const std::vector<int> &out(int v) const { return out_.at(v); }
    const std::vector<int> &in(int v) const { return in_.at(v); }
    const std::set<std::pair<int, int>> &arcs() const { return arcs_; }

    /// Undirected edge set of the underlying graph, each edge as (min,max).
    std::set<std::pair<int, int>> underlying_edges() const;
    /// Underlying graph re-expressed as a digraph with both arc directions.
    DiGraph underlying_digraph() const;

    /// Sub-digraph induced by `nodes` (kept in ascending index order,
    /// original labels preserved).
    DiGraph induced(const std::vector<int> &nodes) const;

    bool operator==(const DiGraph &other) const {
        return labels_ == other.labels_ && arcs_ == other.arcs_;
    }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> out_, in_;
    std::set<std::pair<int, int>> arcs_;
};

/// Two directed cycles sharing a directed path. The left cycle is
/// a1..ar,bs..b1 and the right cycle is c1..ct,bs..b1; `b` is stored
/// b1..bs, `a` as a1..ar, `c` as c1..ct.
struct CyclePair {
    std::vector<int> a, b, c;

    int r() const { return static_cast<int>(a.size()); }
    int s() const { return static_cast<int>(b.size()); }
    int t() const { return static_cast<int>(c.size()); }
    /// Left cycle in traversal order a1..ar,bs..b1.
    std::vector<int> left_cycle() const;
    /// Right cycle in traversal order c1..ct,bs..b1.
    std::vector<int> right_cycle() const;
};

struct PbCycle {
    std::vector<int> forward;                  // the directed cycle, in order
    std::vector<std::pair<int, int>> backward; // extra (v_i, v_{i-1}) arcs
};

/// Strongly connected components, each sorted ascending; components ordered
/// by their smallest node.
std::vector<std::vector<int>> strongly_connected_components(const DiGraph &g);

bool is_strongly_connected(const DiGraph &g);

/// All simple directed cycles with length in [min_len, max_len], each
/// rotated so its smallest node comes first; ordered by that node and then
/// lexicographically. min_len must be >= 2.
std::vector<std::vector<int>> simple_cycles(const DiGraph &g, int min_len = 2,
                                            std::optional<int> max_len = std::nullopt);

/// Decides whether a strongly connected digraph is one directed cycle over
/// all nodes plus backward arcs between cycle-adjacent nodes only.
/// Throws std::invalid_argument if g is not strongly connected.
std::optional<PbCycle> is_partially_bidirectional_cycle(const DiGraph &g);

/// Shared-node count type of two raw cycles (node lists without the closing
/// repetition): (|c1|-shared, shared, |c2|-shared) with the shorter cycle
/// first. Empty when the cycles are equal or disjoint.
std::optional<std::tuple<int, int, int>> pair_type(const std::vector<int> &c1,
                                                   const std::vector<int> &c2);

/// Finds a structurally valid cycle pair, preferring minimal r+s+t and then
/// lexicographically smallest node sequence. Empty when none exists (trivial
/// digraphs, partially bidirectional cycles).
std::optional<CyclePair> find_cycle_pair(const DiGraph &g);

/// (r,s,t) of a cycle pair, swapped so that r <= t.
std::tuple<int, int, int> classify_pair(const CyclePair &p);

/// Re-walks both cycles and checks the side conditions (r+s>=2, t+s>=2,
/// r=0 implies s>=3, all nodes distinct).
bool validate_cycle_pair(const DiGraph &g, const CyclePair &p);

/// Exact digraph isomorphism by backtracking with degree pruning. Intended
/// for small graphs (<= ~10 nodes).
bool are_isomorphic(const DiGraph &g1, const DiGraph &g2);

} // namespace dimapf

#endif
