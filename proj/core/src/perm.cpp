#include "dimapf/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dimapf {

Permutation::Permutation(int n) : map_(n) {
    std::iota(map_.begin(), map_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : map_(std::move(images)) {
    std::vector<char> seen(map_.size(), 0);
    for (int x : map_) {
        if (x < 0 || x >= n() || seen[x])
            throw std::invalid_argument("not a bijection");
        seen[x] = 1;
    }
}

Permutation Permutation::from_cycle(int n, const std::vector<int> &cycle) {
    return from_cycles(n, {cycle});
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>> &cycles) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    for (const auto &cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i)
            m[cyc[i]] = cyc[(i + 1) % cyc.size()];
    Permutation p(std::move(m));
    // from_cycles silently merging overlapping cycles would be a bug source;
    // the bijection check in the ctor catches duplicates across cycles only
    // partially, so verify lengths here.
    size_t total = 0;
    for (const auto &cyc : cycles)
        total += cyc.size();
    std::set<int> uniq;
    for (const auto &cyc : cycles)
        uniq.insert(cyc.begin(), cyc.end());
    if (uniq.size() != total)
        throw std::invalid_argument("cycles are not disjoint");
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (map_[i] != i)
            return false;
    return true;
}

int Permutation::degree() const {
    int d = 0;
    for (int i = 0; i < n(); ++i)
        if (map_[i] != i)
            ++d;
    return d;
}

std::uint64_t Permutation::pack() const {
    if (n() > 16)
        throw std::length_error("pack() supports at most 16 points");
    std::uint64_t key = 0;
    for (int i = 0; i < n(); ++i)
        key |= static_cast<std::uint64_t>(map_[i]) << (4 * i);
    return key;
}

Permutation compose(const Permutation &a, const Permutation &b) {
    if (a.n() != b.n())
        throw std::invalid_argument("ground-set mismatch");
    std::vector<int> m(a.n());
    for (int x = 0; x < a.n(); ++x)
        m[x] = b(a(x));
    return Permutation(std::move(m));
}

Permutation inverse(const Permutation &a) {
    std::vector<int> m(a.n());
    for (int x = 0; x < a.n(); ++x)
        m[a(x)] = x;
    return Permutation(std::move(m));
}

Permutation power(const Permutation &a, int k) {
    Permutation base = k < 0 ? inverse(a) : a;
    int reps = k < 0 ? -k : k;
    Permutation acc = Permutation::identity(a.n());
    for (int i = 0; i < reps; ++i)
        acc = compose(acc, base);
    return acc;
}

Permutation conjugate(const Permutation &a, const Permutation &t) {
    return compose(compose(inverse(t), a), t);
}

Parity parity(const Permutation &a) {
    int transpositions = 0;
    for (const auto &cyc : cycle_notation(a))
        transpositions += static_cast<int>(cyc.size()) - 1;
    return transpositions % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<std::vector<int>> cycle_notation(const Permutation &a) {
    std::vector<std::vector<int>> cycles;
    std::vector<char> seen(a.n(), 0);
    for (int start = 0; start < a.n(); ++start) {
        if (seen[start] || a(start) == start)
            continue;
        std::vector<int> cyc;
        for (int x = start; !seen[x]; x = a(x)) {
            seen[x] = 1;
            cyc.push_back(x);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::string render_cycles(const Permutation &a, const DiGraph &g) {
    auto cycles = cycle_notation(a);
    if (cycles.empty())
        return "()";
    std::ostringstream out;
    for (const auto &cyc : cycles) {
        out << '(';
        for (size_t i = 0; i < cyc.size(); ++i)
            out << (i ? " " : "") << g.label(cyc[i]);
        out << ')';
    }
    return out.str();
}

std::vector<std::vector<int>> orbits(const std::vector<Permutation> &gens, int n) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto &g : gens)
        for (int x = 0; x < n; ++x) {
            int a = find(x), b = find(g(x));
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> groups;
    for (int x = 0; x < n; ++x)
        groups[find(x)].push_back(x);
    std::vector<std::vector<int>> result;
    for (auto &[root, members] : groups)
        result.push_back(std::move(members));
    return result;
}

bool is_transitive(const std::vector<Permutation> &gens, int n) {
    return orbits(gens, n).size() == 1;
}

bool is_2_transitive(const std::vector<Permutation> &gens, int n) {
    if (n < 2)
        return false;
    if (!is_transitive(gens, n))
        return false;
    // Orbit of one ordered pair under the induced action on distinct pairs.
    std::set<std::pair<int, int>> seen{{0, 1}};
    std::deque<std::pair<int, int>> todo{{0, 1}};
    while (!todo.empty()) {
        auto [x, y] = todo.front();
        todo.pop_front();
        for (const auto &g : gens)
            for (const Permutation &p : {g, inverse(g)}) {
                std::pair<int, int> img{p(x), p(y)};
                if (seen.insert(img).second)
                    todo.push_back(img);
            }
    }
    return seen.size() == static_cast<size_t>(n) * (n - 1);
}

bool is_primitive(const std::vector<Permutation> &gens, int n) {
    if (!is_transitive(gens, n))
        throw std::invalid_argument("is_primitive requires a transitive group");
    // Minimal block containing {0, y}: close {0, y} under "same block"
    // propagation; primitive iff every such closure is the whole set.
    for (int y = 1; y < n; ++y) {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](auto &&self, int x) -> int {
            return parent[x] == x ? x : parent[x] = self(self, parent[x]);
        };
        auto unite = [&](int a, int b) {
            a = find(find, a);
            b = find(find, b);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        };
        unite(0, y);
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto &g : gens)
                for (int x = 0; x < n; ++x) {
                    int a = find(find, x), b = find(find, g(x));
                    // x ~ z implies g(x) ~ g(z): merge images of merged classes.
                    for (int z = x + 1; z < n; ++z) {
                        if (find(find, z) != a)
                            continue;
                        int c = find(find, g(z));
                        if (b != c) {
                            unite(b, c);
                            changed = true;
                        }
                    }
                }
        }
        int root0 = find(find, 0), size = 0;
        for (int x = 0; x < n; ++x)
            if (find(find, x) == root0)
                ++size;
        if (size != n)
            return false; // non-trivial block found
    }
    return true;
}

void GenTable::add(const std::string &name, Permutation p) {
    if (n == 0)
        n = p.n();
    if (p.n() != n)
        throw std::invalid_argument("generator ground-set mismatch");
    gens.emplace(name, std::move(p));
}

const Permutation &GenTable::at(const std::string &name) const {
    auto it = gens.find(name);
    if (it == gens.end())
        throw std::invalid_argument("unknown generator '" + name + "'");
    return it->second;
}

GenWord GenWord::operator*(const GenWord &rhs) const {
    GenWord w = *this;
    w.letters.insert(w.letters.end(), rhs.letters.begin(), rhs.letters.end());
    return w;
}

GenWord GenWord::inverse() const {
    GenWord w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->first, -it->second});
    return w;
}

GenWord GenWord::conjugated_by(const GenWord &t) const {
    return t.inverse() * *this * t;
}

GenWord GenWord::eps_plus(const GenWord &x) const {
    return *this * this->conjugated_by(x);
}

GenWord GenWord::pow(int k) const {
    GenWord base = k < 0 ? inverse() : *this;
    GenWord acc;
    for (int i = 0; i < std::abs(k); ++i)
        acc = acc * base;
    return acc;
}

std::string GenWord::str() const {
    std::ostringstream out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i)
            out << ' ';
        out << letters[i].first;
        if (letters[i].second == -1)
            out << "^-1";
    }
    return out.str();
}

Permutation expand(const GenWord &w, const GenTable &table) {
    Permutation acc = Permutation::identity(table.n);
    for (const auto &[name, exp] : w.letters) {
        const Permutation &g = table.at(name);
        acc = compose(acc, exp >= 0 ? g : inverse(g));
    }
    return acc;
}

GenTable rotation_generators(const DiGraph &g, bool allow_size2,
                             std::optional<int> max_len) {
    GenTable table;
    table.n = g.n();
    for (const auto &cyc : simple_cycles(g, allow_size2 ? 2 : 3, max_len)) {
        std::ostringstream name;
        name << '(';
        for (size_t i = 0; i < cyc.size(); ++i)
            name << (i ? " " : "") << g.label(cyc[i]);
        name << ')';
        table.add(name.str(), Permutation::from_cycle(g.n(), cyc));
    }
    return table;
}

std::vector<Permutation> generate_closure(const std::vector<Permutation> &gens, int n,
                                          std::size_t cap) {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::deque<Permutation> todo{Permutation::identity(n)};
    while (!todo.empty()) {
        Permutation p = todo.front();
        todo.pop_front();
        for (const auto &g : gens) {
            Permutation q = compose(p, g);
            if (seen.insert(q).second) {
                if (seen.size() > cap)
                    throw std::length_error("group closure exceeds cap");
                todo.push_back(q);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

bool GroupClass::contains(const Permutation &p) const {
    switch (kind) {
    case Symmetric:
        return true;
    case Alternating:
        return parity(p) == Parity::Even;
    case CyclicOfOrderN:
    case SmallExplicit:
        return std::find(elements.begin(), elements.end(), p) != elements.end();
    case Undetermined:
        return false;
    }
    return false;
}

const char *GroupClass::name(Kind k) {
    switch (k) {
    case Symmetric:
        return "symmetric";
    case Alternating:
        return "alternating";
    case CyclicOfOrderN:
        return "cyclic";
    case SmallExplicit:
        return "small-explicit";
    case Undetermined:
        return "undetermined";
    }
    return "?";
}

GroupClass classify_group(const DiGraph &g, const GenTable &gens, bool allow_size2) {
    GroupClass cls;
    int n = g.n();
    std::vector<Permutation> gen_list;
    for (const auto &[name, p] : gens.gens)
        gen_list.push_back(p);

    if (n < 7) {
        cls.kind = GroupClass::SmallExplicit;
        cls.elements = generate_closure(gen_list, n, 720);
        cls.detail = "order " + std::to_string(cls.elements.size());
        return cls;
    }
    if (auto pb = is_partially_bidirectional_cycle(g)) {
        if (allow_size2 && !pb->backward.empty()) {
            cls.kind = GroupClass::Symmetric;
            cls.detail = "bidirectional cycle with swap arc";
            return cls;
        }
        // Only the full forward rotation generates anything.
        cls.kind = GroupClass::CyclicOfOrderN;
        cls.detail = "cyclic of order " + std::to_string(n);
        Permutation rot = Permutation::from_cycle(n, pb->forward);
        Permutation acc = Permutation::identity(n);
        for (int i = 0; i < n; ++i) {
            cls.elements.push_back(acc);
            acc = compose(acc, rot);
        }
        return cls;
    }
    if (gen_list.empty() || !is_transitive(gen_list, n)) {
        cls.kind = GroupClass::Undetermined;
        cls.detail = "generators not transitive on the node set";
        return cls;
    }
    if (!find_cycle_pair(g)) {
        cls.kind = GroupClass::Undetermined;
        cls.detail = "no cycle pair found";
        return cls;
    }
    bool any_odd = false;
    for (const auto &p : gen_list)
        if (parity(p) == Parity::Odd)
            any_odd = true;
    cls.kind = any_odd ? GroupClass::Symmetric : GroupClass::Alternating;
    cls.detail = any_odd ? "odd rotation generator present" : "all rotation generators even";
    return cls;
}

namespace {

struct BfsEntry {
    std::uint64_t parent;
    int gen_index; // index into the flattened generator list
    int exp;       // +1/-1
};

} // namespace

GenWord factorize(const Permutation &target, const GenTable &gens, bool positive_only,
                  std::size_t state_cap) {
    int n = gens.n;
    if (target.n() != n)
        throw std::invalid_argument("ground-set mismatch");
    if (target.is_identity())
        return GenWord{};
    if (gens.gens.empty())
        throw NotInGroup("no generators");

    std::vector<std::string> names;
    std::vector<Permutation> perms, invs;
    for (const auto &[name, p] : gens.gens) {
        names.push_back(name);
        perms.push_back(p);
        invs.push_back(inverse(p));
    }
    int k = static_cast<int>(perms.size());

    // Bidirectional BFS: forward from the identity (right-multiplying by
    // generators), backward from the target (right-multiplying by inverse
    // generators). When the frontiers meet at p, target = p * suffix.
    std::unordered_map<std::uint64_t, BfsEntry> fwd, bwd;
    std::deque<Permutation> fq{Permutation::identity(n)}, bq{target};
    fwd[Permutation::identity(n).pack()] = {0, -1, 0};
    bwd[target.pack()] = {0, -1, 0};

    auto reconstruct = [&](std::uint64_t meet) {
        GenWord w;
        // forward half: walk parents from meet to identity, then reverse.
        std::uint64_t cur = meet;
        std::vector<std::pair<std::string, int>> fwd_letters;
        while (true) {
            const BfsEntry &e = fwd.at(cur);
            if (e.gen_index < 0)
                break;
            fwd_letters.push_back({names[e.gen_index], e.exp});
            cur = e.parent;
        }
        std::reverse(fwd_letters.begin(), fwd_letters.end());
        w.letters = std::move(fwd_letters);
        // backward half: q was reached from parent via q = parent * g^-e,
        // so parent = q * g^e; walking from meet up to target appends g^e.
        cur = meet;
        while (true) {
            const BfsEntry &e = bwd.at(cur);
            if (e.gen_index < 0)
                break;
            w.letters.push_back({names[e.gen_index], e.exp});
            cur = e.parent;
        }
        return w;
    };

    auto expand_level = [&](std::unordered_map<std::uint64_t, BfsEntry> &mine,
                            std::unordered_map<std::uint64_t, BfsEntry> &other,
                            std::deque<Permutation> &queue,
                            bool backward) -> std::optional<std::uint64_t> {
        size_t count = queue.size();
        for (size_t i = 0; i < count; ++i) {
            Permutation p = queue.front();
            queue.pop_front();
            std::uint64_t pkey = p.pack();
            for (int gi = 0; gi < k; ++gi)
                for (int exp : positive_only ? std::vector<int>{1}
                                             : std::vector<int>{1, -1}) {
                    // backward steps multiply by the opposite exponent so the
                    // recorded letter is the one to append on reconstruction.
                    const Permutation &step =
                        (exp == 1) != backward ? perms[gi] : invs[gi];
                    Permutation q = compose(p, step);
                    std::uint64_t key = q.pack();
                    if (mine.find(key) != mine.end())
                        continue;
                    if (mine.size() + other.size() > state_cap)
                        throw std::length_error("factorize state cap exceeded");
                    mine[key] = {pkey, gi, exp};
                    if (other.find(key) != other.end())
                        return key;
                    queue.push_back(q);
                }
        }
        return std::nullopt;
    };

    // Target might already be a known frontier overlap (e.g. a generator).
    while (!fq.empty() || !bq.empty()) {
        bool pick_fwd = !fq.empty() && (bq.empty() || fq.size() <= bq.size());
        std::optional<std::uint64_t> meet =
            pick_fwd ? expand_level(fwd, bwd, fq, false) : expand_level(bwd, fwd, bq, true);
        if (meet)
            return reconstruct(*meet);
    }
    throw NotInGroup("target is not in the generated group");
}

} // namespace dimapf
