#include "dimapf/mapf.hpp"

#include <algorithm>
#include <sstream>

namespace dimapf {

MapfState::MapfState(int n, std::vector<int> positions)
    : n_(n), pos_(std::move(positions)), at_(n, -1) {
    for (int a = 0; a < agents(); ++a) {
        int v = pos_[a];
        if (v < 0 || v >= n)
            throw std::invalid_argument("agent position out of range");
        if (at_[v] != -1)
            throw std::invalid_argument("two agents on one node");
        at_[v] = a;
    }
}

std::optional<int> MapfState::agent_at(int v) const {
    int a = at_.at(v);
    return a == -1 ? std::nullopt : std::optional<int>(a);
}

std::vector<int> MapfState::blank_nodes() const {
    std::vector<int> bs;
    for (int v = 0; v < n_; ++v)
        if (at_[v] == -1)
            bs.push_back(v);
    return bs;
}

std::vector<int> canonical_cycle(std::vector<int> cycle) {
    if (cycle.empty())
        return cycle;
    auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

MapfState apply_step(const DiGraph &g, const MapfState &s, const Step &step,
                     Regime regime, Rot2 rot2) {
    if (const Move *m = std::get_if<Move>(&step)) {
        if (regime == Regime::Rotation)
            throw IllegalMove("simple moves are disabled in this regime");
        if (m->agent < 0 || m->agent >= s.agents())
            throw IllegalMove("no such agent");
        if (s.pos(m->agent) != m->from)
            throw IllegalMove("agent is not at the stated source node");
        if (!g.has_arc(m->from, m->to))
            throw IllegalMove("no arc from source to destination");
        if (!s.is_blank(m->to))
            throw IllegalMove("destination node is occupied");
        std::vector<int> pos = s.positions();
        pos[m->agent] = m->to;
        return MapfState(s.n(), std::move(pos));
    }
    const Rotation &rot = std::get<Rotation>(step);
    if (regime == Regime::Simple)
        throw IllegalRotation("rotations are disabled in this regime");
    const std::vector<int> &cyc = rot.cycle;
    if (cyc.size() < 2)
        throw IllegalRotation("rotation cycle needs at least two nodes");
    if (cyc.size() == 2 && rot2 == Rot2::Forbid)
        throw IllegalRotation("rotations along a single edge are forbidden");
    std::set<int> uniq(cyc.begin(), cyc.end());
    if (uniq.size() != cyc.size())
        throw IllegalRotation("rotation cycle repeats a node");
    for (size_t i = 0; i < cyc.size(); ++i) {
        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        if (u < 0 || u >= g.n() || !g.has_arc(u, v))
            throw IllegalRotation("rotation does not follow a directed cycle");
        if (s.is_blank(u))
            throw IllegalRotation("rotation cycle is not fully occupied");
    }
    Permutation sigma = rot.node_perm(s.n());
    std::vector<int> pos = s.positions();
    for (int a = 0; a < s.agents(); ++a)
        pos[a] = sigma(pos[a]);
    return MapfState(s.n(), std::move(pos));
}

MapfState apply_plan(const DiGraph &g, const MapfState &s, const Plan &plan,
                     Regime regime, Rot2 rot2) {
    MapfState cur = s;
    for (const Step &step : plan)
        cur = apply_step(g, cur, step, regime, rot2);
    return cur;
}

bool validate_plan(const Instance &inst, const Plan &plan, std::string *error) {
    MapfState cur = inst.init;
    for (size_t i = 0; i < plan.size(); ++i) {
        try {
            cur = apply_step(inst.graph, cur, plan[i], inst.regime, inst.rot2);
        } catch (const std::runtime_error &e) {
            if (error) {
                std::ostringstream out;
                out << "step " << i + 1 << ": " << e.what();
                *error = out.str();
            }
            return false;
        }
    }
    if (!(cur == inst.goal)) {
        if (error)
            *error = "plan does not end at the goal state";
        return false;
    }
    return true;
}

} // namespace dimapf
