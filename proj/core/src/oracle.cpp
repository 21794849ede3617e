#include "dimapf/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace dimapf {

namespace {

/// Deterministic successor list for one state.
std::vector<std::pair<Step, MapfState>> successors(const Instance &inst,
                                                   const MapfState &s,
                                                   const std::vector<std::vector<int>> &cycles) {
    std::vector<std::pair<Step, MapfState>> out;
    const DiGraph &g = inst.graph;
    if (inst.regime != Regime::Rotation) {
        for (int a = 0; a < s.agents(); ++a)
            for (int v : g.out(s.pos(a)))
                if (s.is_blank(v)) {
                    Move m{a, s.pos(a), v};
                    out.push_back({m, apply_step(g, s, m, inst.regime, inst.rot2)});
                }
    }
    if (inst.regime != Regime::Simple) {
        for (const auto &cyc : cycles) {
            bool occupied = true;
            for (int v : cyc)
                if (s.is_blank(v)) {
                    occupied = false;
                    break;
                }
            if (!occupied)
                continue;
            Rotation r{cyc};
            out.push_back({r, apply_step(g, s, r, inst.regime, inst.rot2)});
        }
    }
    return out;
}

} // namespace

OracleResult bfs_reachability(const Instance &inst, std::size_t state_cap) {
    std::vector<std::vector<int>> cycles;
    if (inst.regime != Regime::Simple)
        cycles = simple_cycles(inst.graph, inst.rot2 == Rot2::Allow ? 2 : 3);

    std::map<std::vector<int>, std::pair<std::vector<int>, Step>> parent;
    std::deque<MapfState> queue{inst.init};
    parent.emplace(inst.init.positions(),
                   std::pair<std::vector<int>, Step>{inst.init.positions(), Move{-1, -1, -1}});

    OracleResult res{OracleStatus::Unreachable, {}, 0};
    while (!queue.empty()) {
        MapfState cur = queue.front();
        queue.pop_front();
        ++res.states_seen;
        if (cur == inst.goal) {
            res.status = OracleStatus::Reachable;
            std::vector<int> key = cur.positions();
            while (true) {
                const auto &[pkey, step] = parent.at(key);
                if (pkey == key)
                    break;
                res.plan.push_back(step);
                key = pkey;
            }
            std::reverse(res.plan.begin(), res.plan.end());
            return res;
        }
        for (auto &[step, nxt] : successors(inst, cur, cycles)) {
            auto key = nxt.positions();
            if (parent.find(key) != parent.end())
                continue;
            if (parent.size() > state_cap) {
                res.status = OracleStatus::Overflow;
                res.states_seen = parent.size();
                return res;
            }
            parent.emplace(std::move(key),
                           std::pair<std::vector<int>, Step>{cur.positions(), step});
            queue.push_back(std::move(nxt));
        }
    }
    res.states_seen = parent.size();
    return res;
}

std::vector<Permutation> enumerate_group(const DiGraph &g, Rot2 rot2, std::size_t cap) {
    GenTable table = rotation_generators(g, rot2 == Rot2::Allow);
    std::vector<Permutation> gens;
    for (const auto &[name, p] : table.gens)
        gens.push_back(p);
    return generate_closure(gens, g.n(), cap);
}

} // namespace dimapf
