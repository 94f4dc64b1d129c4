#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace adqec {

// Binary words of length n, 2 <= n <= 32. Qubit 1 is the leftmost character
// of the serialized bitstring and the most significant bit of `bits`.
struct CodeWord {
    uint32_t bits = 0;
    int n = 0;

    CodeWord() = default;
    CodeWord(uint32_t bits_, int n_);

    uint32_t mask() const { return n == 32 ? 0xFFFFFFFFu : ((1u << n) - 1u); }
    int weight() const;
    CodeWord complement() const;

    std::string to_string() const;
    static CodeWord from_string(const std::string& s);

    bool operator==(const CodeWord&) const = default;
    auto operator<=>(const CodeWord&) const = default;
};

int hamming_distance(const CodeWord& u, const CodeWord& v);

// All words reachable from u by clearing exactly one set bit (single decay).
std::vector<CodeWord> damped_descendants(const CodeWord& u);

enum class ConflictMode {
    Literal,  // only damped-damped collisions forbidden
    Strict,   // also forbids one word being a damped descendant of the other
};

std::string to_string(ConflictMode mode);
std::optional<ConflictMode> conflict_mode_from_string(const std::string& s);

// Optimized predicate: Literal conflict <=> equal weight and distance 2;
// Strict adds distance 1. Throws on u == v.
bool conflicts(const CodeWord& u, const CodeWord& v, ConflictMode mode);

// Definitional form via descendant enumeration; used to validate the
// optimized predicate.
bool conflicts_by_enumeration(const CodeWord& u, const CodeWord& v, ConflictMode mode);

struct CodeSet {
    int n = 0;
    ConflictMode mode = ConflictMode::Strict;
    std::vector<uint32_t> words;  // sorted ascending, unique

    std::size_t size() const { return words.size(); }
    bool contains(uint32_t w) const;
    // Representatives of the complement pairs, numerically smaller member
    // first, ascending.
    std::vector<uint32_t> pair_representatives() const;

    std::string to_json() const;
    static CodeSet from_json(const std::string& text);
};

struct ValidationReport {
    std::vector<uint32_t> s1_violations;                      // words whose complement is absent
    std::vector<std::pair<uint32_t, uint32_t>> s2_violations; // conflicting pairs
    int k = 0;                                                // |S|/2 when valid

    bool valid() const { return s1_violations.empty() && s2_violations.empty(); }
    std::string summary(int n) const;
};

ValidationReport validate_code_set(const CodeSet& s);

// Conflict structure over the 2^{n-1} complement-pair classes. Vertex index v
// corresponds to the pair {v, ~v} (v has its top bit clear). An independent
// set of usable vertices is exactly a valid CodeSet.
struct ConflictGraph {
    int n = 0;
    ConflictMode mode = ConflictMode::Strict;
    std::size_t vertex_count = 0;
    std::vector<std::vector<uint32_t>> adjacency;  // sorted neighbor lists
    std::vector<bool> internally_conflicting;      // pair conflicts with itself

    uint32_t representative(std::size_t vertex) const { return static_cast<uint32_t>(vertex); }
    bool adjacent(std::size_t a, std::size_t b) const;
    std::size_t edge_count() const;
};

// Conflict between the pair classes {u,~u} and {v,~v}; u, v representatives.
bool pair_classes_conflict(const CodeWord& u, const CodeWord& v, ConflictMode mode);

inline constexpr int kConflictGraphCap = 14;

ConflictGraph build_conflict_graph(int n, ConflictMode mode, int n_cap = kConflictGraphCap);

// Sum_{j<=t} C(n,j) a^j 2^k <= 2^n, evaluated without overflow.
bool quantum_hamming_bound(int n, int k_qubits, int t, int a);

}  // namespace adqec
