#include "dimapf/graph.hpp"

#include <algorithm>
#include <tuple>

namespace dimapf {

int DiGraph::add_node(const std::string &label) {
    if (label.empty() || label.find_first_of(" \t\n") != std::string::npos)
        throw std::invalid_argument("node label must be a non-empty token: '" + label + "'");
    auto it = index_.find(label);
    if (it != index_.end())
        return it->second;
    int id = n();
    labels_.push_back(label);
    index_[label] = id;
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

void DiGraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw std::out_of_range("arc endpoint out of range");
    if (u == v)
        throw std::invalid_argument("self-loop arc (" + label(u) + "," + label(u) + ")");
    if (arcs_.insert({u, v}).second) {
        out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
        in_[v].insert(std::lower_bound(in_[v].begin(), in_[v].end(), u), u);
    }
}

void DiGraph::add_arc(const std::string &u, const std::string &v) {
    add_arc(add_node(u), add_node(v));
}

std::optional<int> DiGraph::node(const std::string &label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int DiGraph::require_node(const std::string &label) const {
    auto id = node(label);
    if (!id)
        throw std::invalid_argument("unknown node '" + label + "'");
    return *id;
}

std::set<std::pair<int, int>> DiGraph::underlying_edges() const {
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : arcs_)
        edges.insert({std::min(u, v), std::max(u, v)});
    return edges;
}

DiGraph DiGraph::underlying_digraph() const {
    DiGraph g;
    for (const auto &l : labels_)
        g.add_node(l);
    for (auto [u, v] : underlying_edges()) {
        g.add_arc(u, v);
        g.add_arc(v, u);
    }
    return g;
}

DiGraph DiGraph::induced(const std::vector<int> &nodes) const {
    std::vector<int> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    DiGraph g;
    std::unordered_map<int, int> remap;
    for (int v : sorted)
        remap[v] = g.add_node(label(v));
    for (auto [u, v] : arcs_) {
        auto iu = remap.find(u), iv = remap.find(v);
        if (iu != remap.end() && iv != remap.end())
            g.add_arc(iu->second, iv->second);
    }
    return g;
}

std::vector<int> CyclePair::left_cycle() const {
    std::vector<int> cyc = a;
    cyc.insert(cyc.end(), b.rbegin(), b.rend());
    return cyc;
}

std::vector<int> CyclePair::right_cycle() const {
    std::vector<int> cyc = c;
    cyc.insert(cyc.end(), b.rbegin(), b.rend());
    return cyc;
}

std::vector<std::vector<int>> strongly_connected_components(const DiGraph &g) {
    int n = g.n();
    std::vector<int> num(n, -1), low(n, -1), stack_pos(n, -1), stack;
    int counter = 0;
    std::vector<std::vector<int>> sccs;

    auto dfs = [&](auto &&self, int v) -> void {
        num[v] = low[v] = counter++;
        stack_pos[v] = static_cast<int>(stack.size());
        stack.push_back(v);
        for (int w : g.out(v)) {
            if (num[w] == -1) {
                self(self, w);
                low[v] = std::min(low[v], low[w]);
            } else if (stack_pos[w] != -1) {
                low[v] = std::min(low[v], num[w]);
            }
        }
        if (low[v] == num[v]) {
            int from = stack_pos[v];
            std::vector<int> comp(stack.begin() + from, stack.end());
            for (int w : comp)
                stack_pos[w] = -1;
            stack.resize(from);
            std::sort(comp.begin(), comp.end());
            sccs.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (num[v] == -1)
            dfs(dfs, v);
    std::sort(sccs.begin(), sccs.end(),
              [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return sccs;
}

bool is_strongly_connected(const DiGraph &g) {
    if (g.n() == 0)
        return false;
    return strongly_connected_components(g).size() == 1;
}

std::vector<std::vector<int>> simple_cycles(const DiGraph &g, int min_len,
                                            std::optional<int> max_len) {
    if (min_len < 2)
        throw std::invalid_argument("min_len must be >= 2");
    int cap = max_len.value_or(g.n());
    std::vector<std::vector<int>> cycles;
    std::vector<char> on_path(g.n(), 0);
    std::vector<int> path;

    // Cycles are found with their smallest node first by restricting the
    // DFS to nodes >= start, which also makes them canonical.
    for (int start = 0; start < g.n(); ++start) {
        auto dfs = [&](auto &&self, int v) -> void {
            on_path[v] = 1;
            path.push_back(v);
            for (int w : g.out(v)) {
                if (w == start && static_cast<int>(path.size()) >= min_len)
                    cycles.push_back(path);
                else if (w > start && !on_path[w] && static_cast<int>(path.size()) < cap)
                    self(self, w);
            }
            path.pop_back();
            on_path[v] = 0;
        };
        dfs(dfs, start);
    }
    return cycles;
}

std::optional<PbCycle> is_partially_bidirectional_cycle(const DiGraph &g) {
    if (!is_strongly_connected(g))
        throw std::invalid_argument("digraph is not strongly connected");
    int n = g.n();
    if (n == 1)
        return std::nullopt;
    if (n == 2) {
        // u<->v is the 2-cycle itself; no separate backward arcs.
        if (g.arc_count() == 2)
            return PbCycle{{0, 1}, {}};
        return std::nullopt;
    }
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(g.out(v).size()) > 2 || static_cast<int>(g.in(v).size()) > 2)
            return std::nullopt;
    // Search a Hamiltonian directed cycle whose complement consists only of
    // backward arcs along that cycle.
    std::vector<int> order{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    auto check = [&](const std::vector<int> &cyc) -> std::optional<PbCycle> {
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i)
            pos[cyc[i]] = i;
        std::vector<std::pair<int, int>> backward;
        for (auto [u, v] : g.arcs()) {
            if (cyc[(pos[u] + 1) % n] == v)
                continue; // forward arc
            if (cyc[(pos[u] + n - 1) % n] == v)
                backward.push_back({u, v});
            else
                return std::nullopt;
        }
        return PbCycle{cyc, backward};
    };
    std::optional<PbCycle> found;
    auto dfs = [&](auto &&self, int v) -> bool {
        if (static_cast<int>(order.size()) == n) {
            if (g.has_arc(v, 0)) {
                if (auto pb = check(order)) {
                    found = pb;
                    return true;
                }
            }
            return false;
        }
        for (int w : g.out(v)) {
            if (used[w])
                continue;
            used[w] = 1;
            order.push_back(w);
            if (self(self, w))
                return true;
            order.pop_back();
            used[w] = 0;
        }
        return false;
    };
    dfs(dfs, 0);
    return found;
}

std::optional<std::tuple<int, int, int>> pair_type(const std::vector<int> &c1,
                                                   const std::vector<int> &c2) {
    if (c1 == c2)
        return std::nullopt;
    const std::vector<int> *small = &c1, *big = &c2;
    if (small->size() > big->size())
        std::swap(small, big);
    std::set<int> s1(small->begin(), small->end());
    int shared = 0;
    for (int v : *big)
        if (s1.count(v))
            ++shared;
    if (shared == 0)
        return std::nullopt;
    return std::make_tuple(static_cast<int>(small->size()) - shared, shared,
                           static_cast<int>(big->size()) - shared);
}

namespace {

// Extracts the shared nodes of cyc as one contiguous directed segment, or
// fails. Returns the segment in traversal order.
std::optional<std::vector<int>> contiguous_shared(const std::vector<int> &cyc,
                                                  const std::set<int> &shared) {
    int k = static_cast<int>(cyc.size());
    int count = 0;
    for (int v : cyc)
        if (shared.count(v))
            ++count;
    if (count == 0 || count == k)
        return std::vector<int>(); // handled by caller (count==k: whole cycle)
    // Find a position where a shared run starts.
    int start = -1;
    for (int i = 0; i < k; ++i) {
        if (shared.count(cyc[i]) && !shared.count(cyc[(i + k - 1) % k])) {
            if (start != -1)
                return std::nullopt; // more than one run
            start = i;
        }
    }
    if (start == -1)
        return std::nullopt;
    std::vector<int> seg;
    for (int i = 0; i < count; ++i) {
        int v = cyc[(start + i) % k];
        if (!shared.count(v))
            return std::nullopt;
        seg.push_back(v);
    }
    return seg;
}

std::optional<CyclePair> make_pair_from(const std::vector<int> &left,
                                        const std::vector<int> &right) {
    std::set<int> ls(left.begin(), left.end()), shared;
    for (int v : right)
        if (ls.count(v))
            shared.insert(v);
    if (shared.empty())
        return std::nullopt;
    if (shared.size() == left.size() && shared.size() == right.size())
        return std::nullopt; // same node set: not two distinct cycles in our sense
    auto seg_l = contiguous_shared(left, shared);
    auto seg_r = contiguous_shared(right, shared);
    if (!seg_l || !seg_r)
        return std::nullopt;
    // A cycle consisting only of shared nodes: its full traversal is the
    // segment; align the other segment to it.
    auto traversal_of = [](const std::vector<int> &cyc, const std::set<int> &sh,
                           const std::vector<int> &seg) -> std::vector<int> {
        if (sh.size() == cyc.size()) {
            return cyc; // whole cycle shared; rotation fixed below
        }
        return seg;
    };
    std::vector<int> tl = traversal_of(left, shared, *seg_l);
    std::vector<int> tr = traversal_of(right, shared, *seg_r);
    // When one whole cycle is shared, rotate it to match the other's segment.
    auto rotate_to_match = [](std::vector<int> whole, const std::vector<int> &seg)
        -> std::optional<std::vector<int>> {
        int k = static_cast<int>(whole.size());
        for (int off = 0; off < k; ++off) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                if (whole[(off + i) % k] != seg[i])
                    ok = false;
            if (ok) {
                std::rotate(whole.begin(), whole.begin() + off, whole.end());
                return whole;
            }
        }
        return std::nullopt;
    };
    if (shared.size() == left.size() && shared.size() != right.size()) {
        auto rot = rotate_to_match(tl, tr);
        if (!rot)
            return std::nullopt;
        tl = *rot;
    } else if (shared.size() == right.size() && shared.size() != left.size()) {
        auto rot = rotate_to_match(tr, tl);
        if (!rot)
            return std::nullopt;
        tr = *rot;
    }
    if (tl != tr)
        return std::nullopt; // traversed in different order/direction
    // tl is b_s..b_1 in traversal order.
    std::vector<int> b(tl.rbegin(), tl.rend()); // b1..bs
    auto exclusive_after = [&](const std::vector<int> &cyc) -> std::vector<int> {
        int k = static_cast<int>(cyc.size());
        if (shared.size() == cyc.size())
            return {};
        // find position of b1 (= tl.back()) and take the nodes after it.
        int pos = -1;
        for (int i = 0; i < k; ++i)
            if (cyc[i] == tl.back())
                pos = i;
        std::vector<int> ex;
        for (int i = 1; i <= k - static_cast<int>(shared.size()); ++i)
            ex.push_back(cyc[(pos + i) % k]);
        return ex;
    };
    CyclePair p;
    p.a = exclusive_after(left);
    p.b = b;
    p.c = exclusive_after(right);
    if (p.a.size() > p.c.size())
        std::swap(p.a, p.c);
    return p;
}

} // namespace

bool validate_cycle_pair(const DiGraph &g, const CyclePair &p) {
    auto is_cycle = [&](const std::vector<int> &cyc) {
        if (cyc.size() < 2)
            return false;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (!g.has_arc(cyc[i], cyc[(i + 1) % cyc.size()]))
                return false;
        return true;
    };
    if (p.s() < 1)
        return false;
    if (p.r() + p.s() < 2 || p.t() + p.s() < 2)
        return false;
    if (p.r() == 0 && p.s() < 3)
        return false;
    if (p.r() == 0 && p.t() == 0)
        return false;
    std::set<int> all;
    for (int v : p.a)
        all.insert(v);
    for (int v : p.b)
        all.insert(v);
    for (int v : p.c)
        all.insert(v);
    if (all.size() != p.a.size() + p.b.size() + p.c.size())
        return false;
    return is_cycle(p.left_cycle()) && is_cycle(p.right_cycle());
}

std::optional<CyclePair> find_cycle_pair(const DiGraph &g) {
    auto cycles = simple_cycles(g, 2);
    std::optional<CyclePair> best;
    auto key = [](const CyclePair &p) {
        std::vector<int> k{p.r() + p.s() + p.t()};
        for (int v : p.a)
            k.push_back(v);
        for (int v : p.b)
            k.push_back(v);
        for (int v : p.c)
            k.push_back(v);
        return k;
    };
    for (size_t i = 0; i < cycles.size(); ++i) {
        for (size_t j = 0; j < cycles.size(); ++j) {
            if (i == j)
                continue;
            auto p = make_pair_from(cycles[i], cycles[j]);
            if (!p || !validate_cycle_pair(g, *p))
                continue;
            if (!best || key(*p) < key(*best))
                best = p;
        }
    }
    return best;
}

std::tuple<int, int, int> classify_pair(const CyclePair &p) {
    int r = p.r(), s = p.s(), t = p.t();
    if (r > t)
        std::swap(r, t);
    return {r, s, t};
}

bool are_isomorphic(const DiGraph &g1, const DiGraph &g2) {
    int n = g1.n();
    if (n != g2.n() || g1.arc_count() != g2.arc_count())
        return false;
    auto degs = [](const DiGraph &g) {
        std::vector<std::pair<int, int>> d;
        for (int v = 0; v < g.n(); ++v)
            d.push_back({static_cast<int>(g.out(v).size()), static_cast<int>(g.in(v).size())});
        auto sorted = d;
        std::sort(sorted.begin(), sorted.end());
        return std::make_pair(d, sorted);
    };
    auto [d1, s1] = degs(g1);
    auto [d2, s2] = degs(g2);
    if (s1 != s2)
        return false;
    std::vector<int> map(n, -1), used(n, 0);
    auto dfs = [&](auto &&self, int v) -> bool {
        if (v == n)
            return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || d1[v] != d2[w])
                continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (g1.has_arc(u, v) != g2.has_arc(map[u], w))
                    ok = false;
                if (g1.has_arc(v, u) != g2.has_arc(w, map[u]))
                    ok = false;
            }
            if (!ok)
                continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, v + 1))
                return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

} // namespace dimapf
