#include "dimapf/constructions.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace dimapf {

namespace {

std::vector<int> shortest_path(const DiGraph &g, int from, int to) {
    // BFS path from -> to, empty when unreachable (and for from == to).
    std::vector<int> prev(g.n(), -1);
    std::deque<int> queue{from};
    prev[from] = from;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == to)
            break;
        for (int v : g.out(u))
            if (prev[v] == -1) {
                prev[v] = u;
                queue.push_back(v);
            }
    }
    if (to == from || prev[to] == -1)
        return {};
    std::vector<int> path{to};
    while (path.back() != from)
        path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

Plan undo_on_cycle(const DiGraph &g, const std::vector<int> &cycle,
                   const MapfState &from, const MapfState &to) {
    int k = static_cast<int>(cycle.size());
    std::unordered_map<int, int> idx;
    for (int i = 0; i < k; ++i) {
        idx[cycle[i]] = i;
        if (!g.has_arc(cycle[i], cycle[(i + 1) % k]))
            throw std::invalid_argument("node list is not a directed cycle");
    }
    if (from.agents() != to.agents() || from.n() != to.n())
        throw std::invalid_argument("states disagree on agents or nodes");

    // Off-cycle agents must not move; on-cycle agents stay on the cycle.
    std::vector<int> on_cycle; // agent ids, later sorted by from-position
    for (int a = 0; a < from.agents(); ++a) {
        bool f_on = idx.count(from.pos(a)) > 0, t_on = idx.count(to.pos(a)) > 0;
        if (f_on != t_on)
            throw NotReachable("agent enters or leaves the cycle");
        if (!f_on) {
            if (from.pos(a) != to.pos(a))
                throw NotReachable("off-cycle agent would have to move");
            continue;
        }
        on_cycle.push_back(a);
    }
    int m = static_cast<int>(on_cycle.size());
    if (m == 0)
        return {};

    std::sort(on_cycle.begin(), on_cycle.end(), [&](int a, int b) {
        return idx.at(from.pos(a)) < idx.at(from.pos(b));
    });
    std::vector<int> fidx(m), tidx(m), d(m);
    bool any = false;
    for (int j = 0; j < m; ++j) {
        fidx[j] = idx.at(from.pos(on_cycle[j]));
        tidx[j] = idx.at(to.pos(on_cycle[j]));
        d[j] = ((tidx[j] - fidx[j]) % k + k) % k;
        if (d[j] != 0)
            any = true;
    }
    if (!any)
        return {};
    if (m == k)
        throw NotReachable("no blank on the cycle");

    // Same cyclic order in both states: the to-position ordering must be a
    // rotation of the from-position ordering.
    {
        std::vector<int> by_to(m);
        for (int j = 0; j < m; ++j)
            by_to[j] = j;
        std::sort(by_to.begin(), by_to.end(), [&](int a, int b) { return tidx[a] < tidx[b]; });
        int shift = static_cast<int>(std::find(by_to.begin(), by_to.end(), 0) - by_to.begin());
        for (int j = 0; j < m; ++j)
            if (by_to[(shift + j) % m] != j)
                throw NotReachable("cyclic order of agents differs");
    }

    // Lift displacements mod k to non-crossing totals: an agent may not
    // overtake the next agent ahead of it.
    std::vector<int> D = d;
    for (int round = 0; round <= 2 * m + 4; ++round) {
        bool changed = false;
        for (int j = 0; j < m; ++j) {
            int q = (j + 1) % m;
            int gap = m == 1 ? k : ((fidx[q] - fidx[j]) % k + k) % k;
            if (m > 1 && D[j] > D[q] + gap - 1) {
                D[q] += k;
                changed = true;
            }
        }
        if (!changed)
            break;
        if (round == 2 * m + 4)
            throw std::logic_error("displacement lift did not converge");
    }

    // Greedy forward schedule: any agent with remaining distance whose next
    // node is blank may step.
    std::vector<int> occ(k, -1), at(m);
    for (int j = 0; j < m; ++j) {
        occ[fidx[j]] = j;
        at[j] = fidx[j];
    }
    Plan plan;
    std::size_t guard = static_cast<std::size_t>(4 * k) * k + 16;
    while (true) {
        bool moved = false, pending = false;
        for (int j = 0; j < m; ++j) {
            if (D[j] == 0)
                continue;
            pending = true;
            int next = (at[j] + 1) % k;
            if (occ[next] != -1)
                continue;
            plan.push_back(Move{on_cycle[j], cycle[at[j]], cycle[next]});
            occ[at[j]] = -1;
            occ[next] = j;
            at[j] = next;
            --D[j];
            moved = true;
            if (plan.size() > guard)
                throw std::logic_error("cycle schedule exceeded its move budget");
        }
        if (!pending)
            break;
        if (!moved)
            throw std::logic_error("cycle schedule wedged");
    }
    return plan;
}

Plan synthesize_inverse_move(const DiGraph &g, const MapfState &after, const Move &m) {
    if (m.agent < 0 || m.agent >= after.agents() || after.pos(m.agent) != m.to)
        throw std::invalid_argument("after-state does not reflect the move");
    if (!g.has_arc(m.from, m.to))
        throw std::invalid_argument("move does not follow an arc");
    if (!after.is_blank(m.from))
        throw std::invalid_argument("move source is not blank afterwards");
    std::vector<int> back = shortest_path(g, m.to, m.from);
    if (back.empty())
        throw NotReachable("the move's arc lies on no directed cycle");
    // Cycle through the arc: m.from, m.to, then the path interior.
    std::vector<int> cycle{m.from};
    cycle.insert(cycle.end(), back.begin(), back.end() - 1);
    std::vector<int> pos = after.positions();
    pos[m.agent] = m.from;
    return undo_on_cycle(g, cycle, after, MapfState(after.n(), std::move(pos)));
}

Plan lift_undirected_plan(const DiGraph &g, const MapfState &init,
                          const std::vector<Move> &undirected_moves) {
    Plan plan;
    MapfState cur = init;
    for (const Move &m : undirected_moves) {
        if (cur.pos(m.agent) != m.from || !cur.is_blank(m.to))
            throw std::invalid_argument("move sequence is not legal even undirected");
        if (g.has_arc(m.from, m.to)) {
            plan.push_back(m);
            cur = apply_step(g, cur, m);
            continue;
        }
        if (!g.has_arc(m.to, m.from))
            throw std::invalid_argument("move follows no edge of the underlying graph");
        Plan sub = synthesize_inverse_move(g, cur, Move{m.agent, m.to, m.from});
        for (const Step &s : sub) {
            cur = apply_step(g, cur, s);
            plan.push_back(s);
        }
        if (cur.pos(m.agent) != m.to)
            throw std::logic_error("reverse-move synthesis missed its target");
    }
    return plan;
}

Plan invert_plan(const DiGraph &g, const MapfState &start, const Plan &plan) {
    std::vector<MapfState> states{start};
    for (const Step &s : plan)
        states.push_back(apply_step(g, states.back(), s));
    Plan inv;
    for (size_t i = plan.size(); i-- > 0;) {
        if (const Rotation *rot = std::get_if<Rotation>(&plan[i])) {
            for (size_t rep = 1; rep < rot->cycle.size(); ++rep)
                inv.push_back(*rot);
        } else {
            Plan sub = synthesize_inverse_move(g, states[i + 1], std::get<Move>(plan[i]));
            inv.insert(inv.end(), sub.begin(), sub.end());
        }
    }
    return inv;
}

BlankNormalizeResult blank_normalize(const DiGraph &g, const MapfState &from,
                                     const std::set<int> &target_blanks) {
    if (static_cast<int>(target_blanks.size()) != from.blanks())
        throw std::invalid_argument("blank counts differ");
    BlankNormalizeResult res{{}, from};
    auto step = [&](int u, int v) {
        Move m{*res.state.agent_at(u), u, v};
        res.state = apply_step(g, res.state, m);
        res.plan.push_back(m);
    };
    while (true) {
        std::vector<int> missing, extra;
        for (int v : target_blanks)
            if (!res.state.is_blank(v))
                missing.push_back(v);
        for (int v : res.state.blank_nodes())
            if (!target_blanks.count(v))
                extra.push_back(v);
        if (missing.empty())
            break;

        // Closest (missing target, stray blank) pair by directed distance.
        std::vector<int> best_path;
        for (int t : missing)
            for (int b : extra) {
                std::vector<int> p = shortest_path(g, t, b);
                if (!p.empty() && (best_path.empty() || p.size() < best_path.size()))
                    best_path = p;
            }
        if (best_path.empty())
            throw NotReachable("no directed path from a target blank to a stray blank");

        // Interior blanks on a shortest such path are already-correct ones;
        // shift each agent run one step toward the stray blank, then nudge
        // the interior blanks back into place.
        const std::vector<int> &q = best_path;
        int last = static_cast<int>(q.size()) - 1;
        std::vector<int> settled;
        for (int i = 1; i < last; ++i)
            if (res.state.is_blank(q[i]))
                settled.push_back(i);
        int upper = last;
        for (auto it = settled.rbegin(); it != settled.rend(); ++it) {
            for (int i = upper - 1; i > *it; --i)
                step(q[i], q[i + 1]);
            upper = *it;
        }
        for (int i = upper - 1; i >= 0; --i)
            step(q[i], q[i + 1]);
        for (int i : settled)
            step(q[i], q[i + 1]);
    }
    return res;
}

Plan emulate_rotation_with_blank(const DiGraph &g, const MapfState &s,
                                 const std::vector<int> &cycle) {
    int k = static_cast<int>(cycle.size());
    std::vector<int> occ(k);
    bool blank = false;
    for (int i = 0; i < k; ++i) {
        auto a = s.agent_at(cycle[i]);
        occ[i] = a ? *a : -1;
        blank |= !a;
    }
    if (!blank)
        throw FullyOccupied("cycle has no blank to emulate a rotation with");
    Plan plan;
    for (int j = 0; j < k; ++j) {
        if (occ[j] != -1)
            continue;
        // Shift the maximal agent run ending just before this blank.
        for (int i = (j - 1 + k) % k; occ[i] != -1; i = (i - 1 + k) % k)
            plan.push_back(Move{occ[i], cycle[i], cycle[(i + 1) % k]});
    }
    return plan;
}

Plan punctured_rotation_with_blank(const DiGraph &g, const MapfState &s,
                                   const std::vector<int> &cycle) {
    int k = static_cast<int>(cycle.size());
    std::vector<int> occ(k);
    int b = -1;
    for (int i = 0; i < k; ++i) {
        auto a = s.agent_at(cycle[i]);
        occ[i] = a ? *a : -1;
        if (!a && b == -1)
            b = i;
    }
    if (b == -1)
        throw FullyOccupied("cycle has no blank to walk");
    Plan plan;
    for (int i = 0; i < k; ++i) {
        int prev = (b - 1 + k) % k;
        if (occ[prev] != -1) {
            plan.push_back(Move{occ[prev], cycle[prev], cycle[b]});
            std::swap(occ[prev], occ[b]);
        }
        b = prev;
    }
    return plan;
}

CyclePairGraph make_cycle_pair_graph(int r, int s, int t) {
    if (r < 0 || t < 0 || s < 1 || r + s < 2 || t + s < 2 || (r == 0 && s < 3) ||
        (r == 0 && t == 0))
        throw std::invalid_argument("invalid cycle-pair shape");
    CyclePairGraph out;
    auto add_run = [&](char prefix, int count) {
        std::vector<int> nodes;
        for (int i = 1; i <= count; ++i)
            nodes.push_back(out.graph.add_node(prefix + std::to_string(i)));
        return nodes;
    };
    out.pair.a = add_run('a', r);
    out.pair.b = add_run('b', s);
    out.pair.c = add_run('c', t);
    for (const std::vector<int> &cyc : {out.pair.left_cycle(), out.pair.right_cycle()})
        for (size_t i = 0; i < cyc.size(); ++i)
            out.graph.add_arc(cyc[i], cyc[(i + 1) % cyc.size()]);
    return out;
}

GenTable cycle_pair_generators(const CyclePair &p, int n) {
    GenTable table;
    table.n = n;
    table.add("alpha", Permutation::from_cycle(n, p.left_cycle()));
    table.add("beta", Permutation::from_cycle(n, p.right_cycle()));
    return table;
}

ThreeCycleRecipe three_cycle_word(int r, int s, int t) {
    if (r > t)
        throw std::invalid_argument("expected r <= t");
    if (r < 0 || s < 1 || r + s < 2 || t + s < 2 || (r == 0 && s < 3) || (r == 0 && t == 0))
        throw std::invalid_argument("invalid cycle-pair shape");
    auto b_lbl = [](int i) { return "b" + std::to_string(i); };
    auto a_lbl = [](int i) { return "a" + std::to_string(i); };
    auto c_lbl = [](int i) { return "c" + std::to_string(i); };
    GenWord A = GenWord::atom("alpha"), B = GenWord::atom("beta");
    GenWord comm = B * A.inverse() * B.inverse() * A;

    if (r == 0)
        return {comm, {b_lbl(s), c_lbl(t), b_lbl(1)}};
    if (s == 1)
        return {comm, {b_lbl(1), a_lbl(1), c_lbl(t)}};
    if (r == 1 && s == 2)
        return {A, {a_lbl(1), b_lbl(2), b_lbl(1)}};
    if (r == 1 && s >= 3 && t == 1)
        return {A.inverse() * B, {b_lbl(s), a_lbl(1), c_lbl(1)}};
    if (r == 1 && s == 3 && t == 2)
        return {std::nullopt, {}};
    if (r == 1 && s == 3) { // t >= 3
        GenWord chi = B.pow(2) * (A.inverse() * B).pow(2) * B.pow(-2);
        return {comm.eps_plus(chi.inverse()), {b_lbl(1), c_lbl(t - 2), a_lbl(1)}};
    }
    if (r == 1) { // s >= 4, t >= 2
        GenWord xi = (A * B.inverse() * A.inverse() * B).conjugated_by(B).eps_plus(A.pow(-2));
        return {xi, {b_lbl(s - 1), b_lbl(2), a_lbl(r)}};
    }
    if (r == 2 && s == 2 && t == 2)
        return {std::nullopt, {}};
    GenWord zeta = comm.conjugated_by(A).eps_plus(B.pow(-2));
    if (s >= 3 && t == 2) // r == 2
        return {zeta, {b_lbl(s - 1), b_lbl(1), c_lbl(t)}};
    // r >= 2, s >= 2, t >= 3
    return {zeta, {b_lbl(s - 1), c_lbl(t - 2), c_lbl(t)}};
}

Plan two_transitive_transport(const CyclePair &p, int n, int from_a, int from_b,
                              int to_a, int to_b) {
    if (from_a == from_b || to_a == to_b)
        throw std::invalid_argument("transport needs two distinct nodes on each side");
    if (p.t() < 1)
        throw std::invalid_argument("right cycle carries no private node");
    std::vector<int> left = p.left_cycle(), right = p.right_cycle();
    Permutation alpha = Permutation::from_cycle(n, left);
    Permutation beta = Permutation::from_cycle(n, right);
    std::set<int> on_left(left.begin(), left.end());
    std::set<int> on_a(p.a.begin(), p.a.end());
    int b1 = p.b.front(), c1 = p.c.front();

    // Drives (x, y) to the canonical pair (b1, c1); returns rotation
    // letters as +1 = alpha, -1 = beta (exponents are not used; every
    // letter is a forward rotation).
    auto to_canonical = [&](int x, int y) {
        std::vector<int> word;
        auto rot = [&](const Permutation &perm, int letter) {
            x = perm(x);
            y = perm(y);
            word.push_back(letter);
        };
        int guard = 8 * (n + 2) * (n + 2);
        while (!on_left.count(x)) { // bring x onto the left cycle
            rot(beta, -1);
            if (--guard < 0)
                throw std::logic_error("transport loop wedged");
        }
        while (y != c1) {
            if (on_a.count(y))
                rot(alpha, 1); // push y around the left cycle's private arc
            else if (x == b1)
                rot(alpha, 1); // protect x from being carried off to c1
            else
                rot(beta, -1);
            if (--guard < 0)
                throw std::logic_error("transport loop wedged");
        }
        while (x != b1) {
            rot(alpha, 1); // y sits on the right cycle's private part, fixed
            if (--guard < 0)
                throw std::logic_error("transport loop wedged");
        }
        return word;
    };

    std::vector<int> w1 = to_canonical(from_a, from_b);
    std::vector<int> w2 = to_canonical(to_a, to_b);
    Plan plan;
    Rotation rot_l{canonical_cycle(left)}, rot_r{canonical_cycle(right)};
    for (int letter : w1)
        plan.push_back(letter == 1 ? rot_l : rot_r);
    for (auto it = w2.rbegin(); it != w2.rend(); ++it) {
        const Rotation &rot = *it == 1 ? rot_l : rot_r;
        for (size_t rep = 1; rep < rot.cycle.size(); ++rep)
            plan.push_back(rot); // k-1 forward turns invert one turn
    }
    return plan;
}

namespace {

DiGraph t0_base(int which) {
    DiGraph g;
    if (which == 0) { // shape (1,3,2)
        for (const char *v : {"a1", "b3", "b2", "b1", "c1", "c2"})
            g.add_node(v);
        for (auto [u, v] : std::vector<std::pair<const char *, const char *>>{
                 {"a1", "b3"}, {"b3", "b2"}, {"b2", "b1"}, {"b1", "a1"},
                 {"b1", "c1"}, {"c1", "c2"}, {"c2", "b3"}})
            g.add_arc(u, v);
    } else { // shape (2,2,2)
        for (const char *v : {"a1", "a2", "b2", "b1", "c1", "c2"})
            g.add_node(v);
        for (auto [u, v] : std::vector<std::pair<const char *, const char *>>{
                 {"a1", "a2"}, {"a2", "b2"}, {"b2", "b1"}, {"b1", "a1"},
                 {"b1", "c1"}, {"c1", "c2"}, {"c2", "b2"}})
            g.add_arc(u, v);
    }
    return g;
}

} // namespace

std::vector<T0Case> enumerate_t0_extensions() {
    std::vector<DiGraph> references;
    for (int i = 0; i < 3; ++i)
        references.push_back(t0_extension_three_cycle(i).graph);

    std::vector<T0Case> cases;
    std::vector<DiGraph> tested;
    for (int base = 0; base < 2; ++base) {
        DiGraph base_graph = t0_base(base);
        std::vector<std::string> nodes;
        for (int v = 0; v < base_graph.n(); ++v)
            nodes.push_back(base_graph.label(v));
        for (const std::string &head : nodes)
            for (const std::string &tail : nodes)
                for (int ear_len : {1, 2}) {
                    T0Case c;
                    c.base = base == 0 ? "(1,3,2)" : "(2,2,2)";
                    c.head = head;
                    c.tail = tail;
                    c.graph = base_graph;
                    std::string prev = head;
                    for (int e = 1; e <= ear_len; ++e) {
                        std::string ear = "e" + std::to_string(e);
                        c.ears.push_back(ear);
                        c.graph.add_arc(prev, ear);
                        prev = ear;
                    }
                    c.graph.add_arc(prev, tail);

                    for (const DiGraph &seen : tested)
                        if (are_isomorphic(c.graph, seen)) {
                            c.duplicate = true;
                            break;
                        }
                    if (!c.duplicate) {
                        tested.push_back(c.graph);
                        auto cycles = simple_cycles(c.graph, 2);
                        c.flagged = true;
                        for (size_t i = 0; i < cycles.size() && c.flagged; ++i)
                            for (size_t j = i + 1; j < cycles.size(); ++j) {
                                auto pt = pair_type(cycles[i], cycles[j]);
                                if (pt && *pt != std::tuple<int, int, int>{1, 3, 2} &&
                                    *pt != std::tuple<int, int, int>{2, 2, 2}) {
                                    c.flagged = false;
                                    break;
                                }
                            }
                        if (c.flagged)
                            for (int i = 0; i < 3; ++i)
                                if (are_isomorphic(c.graph, references[i])) {
                                    c.reference = i;
                                    break;
                                }
                    }
                    cases.push_back(std::move(c));
                }
    }
    return cases;
}

T0Reference t0_extension_three_cycle(int index) {
    T0Reference ref;
    auto cyc = [&](std::initializer_list<const char *> labels) {
        std::vector<int> nodes;
        for (const char *l : labels)
            nodes.push_back(ref.graph.require_node(l));
        return Permutation::from_cycle(ref.graph.n(), nodes);
    };
    auto atom = [](const char *name, int exp = 1) { return GenWord::atom(name, exp); };
    switch (index) {
    case 0:
        ref.graph = t0_base(0);
        ref.graph.add_arc("b2", "e1");
        ref.graph.add_arc("e1", "c2");
        ref.gens.n = ref.graph.n();
        ref.gens.add("alpha", cyc({"a1", "b3", "b2", "b1"}));
        ref.gens.add("beta", cyc({"b1", "c1", "c2", "b3", "b2"}));
        ref.gens.add("gamma", cyc({"b2", "e1", "c2", "b3"}));
        ref.word = atom("beta") * atom("alpha") * atom("beta", -1) * atom("gamma", -1);
        return ref;
    case 1:
        ref.graph = t0_base(1);
        ref.graph.add_arc("a2", "e2");
        ref.graph.add_arc("e2", "e1");
        ref.graph.add_arc("e1", "a1");
        ref.gens.n = ref.graph.n();
        ref.gens.add("alpha", cyc({"a1", "a2", "b2", "b1"}));
        ref.gens.add("beta", cyc({"b1", "c1", "c2", "b2"}));
        ref.gens.add("delta", cyc({"a1", "a2", "e2", "e1"}));
        ref.word = atom("beta", -1) * atom("delta", -1) * atom("alpha", -1) *
                   atom("beta").pow(2) * atom("delta", -1) * atom("alpha", -1) *
                   atom("delta", -1);
        return ref;
    case 2:
        ref.graph = t0_base(1);
        ref.graph.add_arc("b1", "e1");
        ref.graph.add_arc("e1", "e2");
        ref.graph.add_arc("e2", "b2");
        ref.gens.n = ref.graph.n();
        ref.gens.add("alpha", cyc({"a1", "a2", "b2", "b1"}));
        ref.gens.add("beta", cyc({"b1", "c1", "c2", "b2"}));
        ref.gens.add("eta", cyc({"b1", "e1", "e2", "b2"}));
        ref.word = atom("alpha") * atom("beta") * atom("eta") * atom("alpha", -1) *
                   atom("beta", -1) * atom("eta", -1);
        return ref;
    default:
        throw std::invalid_argument("reference index must be 0, 1 or 2");
    }
}

} // namespace dimapf
