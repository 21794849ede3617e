#ifndef DIMAPF_PERM_HPP
#define DIMAPF_PERM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimapf/graph.hpp"

namespace dimapf {

/// Bijection on {0..n-1}. Composition is left-to-right throughout this
/// library: compose(a, b) applies a first, then b. This matches plan
/// execution order, so a word g1 g2 ... gk expands to the net effect of
/// applying the rotations g1 through gk in sequence.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n); // identity
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n) { return Permutation(n); }
    /// Cyclic permutation (cycle[0] cycle[1] ... cycle[k-1]) on n points.
    static Permutation from_cycle(int n, const std::vector<int> &cycle);
    static Permutation from_cycles(int n, const std::vector<std::vector<int>> &cycles);

    int n() const { return static_cast<int>(map_.size()); }
    int operator()(int x) const { return map_.at(x); }
    bool is_identity() const;
    /// Number of non-fixed points.
    int degree() const;

    bool operator==(const Permutation &other) const { return map_ == other.map_; }
    bool operator<(const Permutation &other) const { return map_ < other.map_; }

    const std::vector<int> &images() const { return map_; }
    /// Packed key for hashing; requires n <= 16.
    std::uint64_t pack() const;

private:
    std::vector<int> map_;
};

Permutation compose(const Permutation &a, const Permutation &b); // x -> b(a(x))
Permutation inverse(const Permutation &a);
Permutation power(const Permutation &a, int k);
/// conjugate(a, t) = t^-1 a t  (written a^t).
Permutation conjugate(const Permutation &a, const Permutation &t);

enum class Parity { Even, Odd };
Parity parity(const Permutation &a);

/// Disjoint cycles, fixed points omitted; each cycle starts at its smallest
/// point, cycles sorted by first point.
std::vector<std::vector<int>> cycle_notation(const Permutation &a);
/// Renders e.g. "(v1 v3 v2)(v4 v5)"; identity renders as "()".
std::string render_cycles(const Permutation &a, const DiGraph &g);

// ---- generated-group analysis ----

std::vector<std::vector<int>> orbits(const std::vector<Permutation> &gens, int n);
bool is_transitive(const std::vector<Permutation> &gens, int n);
bool is_2_transitive(const std::vector<Permutation> &gens, int n);
/// Throws std::invalid_argument if the group is not transitive.
bool is_primitive(const std::vector<Permutation> &gens, int n);

// ---- generator words ----

struct GenTable {
    std::map<std::string, Permutation> gens;
    int n = 0;

    void add(const std::string &name, Permutation p);
    const Permutation &at(const std::string &name) const;
};

/// Word over named generators, each with exponent +1 or -1.
struct GenWord {
    std::vector<std::pair<std::string, int>> letters;

    static GenWord atom(const std::string &name, int exp = 1) { return GenWord{{{name, exp}}}; }
    GenWord operator*(const GenWord &rhs) const;
    GenWord inverse() const;
    /// w^t = t^-1 w t.
    GenWord conjugated_by(const GenWord &t) const;
    /// w^(eps + x) = w . w^x  (the paper's exponent shorthand).
    GenWord eps_plus(const GenWord &x) const;
    GenWord pow(int k) const;
    int length() const { return static_cast<int>(letters.size()); }
    std::string str() const;
};

Permutation expand(const GenWord &w, const GenTable &table);

// ---- rotation-induced groups ----

/// One generator per simple directed cycle admitted by the rotation-size
/// policy (cycles of size 2 excluded when allow_size2 is false), named by
/// their canonical cycle rendering. max_len caps cycle enumeration.
GenTable rotation_generators(const DiGraph &g, bool allow_size2,
                             std::optional<int> max_len = std::nullopt);

struct GroupClass {
    enum Kind { Symmetric, Alternating, CyclicOfOrderN, SmallExplicit, Undetermined };
    Kind kind = Undetermined;
    std::string detail;
    std::vector<Permutation> elements; // SmallExplicit only

    bool contains(const Permutation &p) const;
    static const char *name(Kind k);
};

/// Classification of the rotation-induced group of a strongly connected
/// digraph: explicit enumeration below 7 nodes, the bidirectional-cycle
/// special cases, and the alternating/symmetric dichotomy otherwise.
GroupClass classify_group(const DiGraph &g, const GenTable &gens, bool allow_size2);

/// Breadth-first closure of the generated group; deterministic element
/// order. Throws std::length_error beyond cap.
std::vector<Permutation> generate_closure(const std::vector<Permutation> &gens, int n,
                                          std::size_t cap);

struct NotInGroup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expresses target as a word over the generators by bidirectional BFS over
/// the generated group. Throws NotInGroup when the target is not generated.
/// With positive_only, the word uses no inverse letters (useful when
/// inverse generators are expensive to execute).
GenWord factorize(const Permutation &target, const GenTable &gens,
                  bool positive_only = false, std::size_t state_cap = 20'000'000);

} // namespace dimapf

#endif
