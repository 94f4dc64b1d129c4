#include "adqec/codeset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace adqec {

CodeWord::CodeWord(uint32_t bits_, int n_) : bits(bits_), n(n_) {
    if (n < 2 || n > 32) throw std::invalid_argument("word length must be in [2, 32]");
    if (n < 32 && bits >= (1u << n)) throw std::invalid_argument("bits out of range for word length");
}

int CodeWord::weight() const { return std::popcount(bits); }

CodeWord CodeWord::complement() const { return CodeWord(~bits & mask(), n); }

std::string CodeWord::to_string() const {
    std::string s(n, '0');
    for (int j = 0; j < n; ++j)
        if (bits & (1u << (n - 1 - j))) s[j] = '1';
    return s;
}

CodeWord CodeWord::from_string(const std::string& s) {
    uint32_t bits = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("bitstring must contain only 0/1: " + s);
        bits = (bits << 1) | static_cast<uint32_t>(c - '0');
    }
    return CodeWord(bits, static_cast<int>(s.size()));
}

int hamming_distance(const CodeWord& u, const CodeWord& v) {
    if (u.n != v.n) throw std::invalid_argument("word length mismatch");
    return std::popcount(u.bits ^ v.bits);
}

std::vector<CodeWord> damped_descendants(const CodeWord& u) {
    std::vector<CodeWord> out;
    uint32_t rest = u.bits;
    while (rest) {
        uint32_t bit = rest & (~rest + 1);
        out.emplace_back(u.bits ^ bit, u.n);
        rest ^= bit;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_string(ConflictMode mode) {
    return mode == ConflictMode::Literal ? "literal" : "strict";
}

std::optional<ConflictMode> conflict_mode_from_string(const std::string& s) {
    if (s == "literal") return ConflictMode::Literal;
    if (s == "strict") return ConflictMode::Strict;
    return std::nullopt;
}

bool conflicts(const CodeWord& u, const CodeWord& v, ConflictMode mode) {
    if (u.n != v.n) throw std::invalid_argument("word length mismatch");
    if (u.bits == v.bits) throw std::invalid_argument("conflict predicate undefined for u == v");
    int d = std::popcount(u.bits ^ v.bits);
    if (u.weight() == v.weight() && d == 2) return true;
    if (mode == ConflictMode::Strict && d == 1) return true;
    return false;
}

bool conflicts_by_enumeration(const CodeWord& u, const CodeWord& v, ConflictMode mode) {
    if (u.n != v.n) throw std::invalid_argument("word length mismatch");
    if (u.bits == v.bits) throw std::invalid_argument("conflict predicate undefined for u == v");
    auto du = damped_descendants(u);
    auto dv = damped_descendants(v);
    for (const auto& a : du)
        for (const auto& b : dv)
            if (a == b) return true;
    if (mode == ConflictMode::Strict) {
        for (const auto& a : du)
            if (a == v) return true;
        for (const auto& b : dv)
            if (b == u) return true;
    }
    return false;
}

bool CodeSet::contains(uint32_t w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

std::vector<uint32_t> CodeSet::pair_representatives() const {
    uint32_t m = CodeWord(0, n).mask();
    std::vector<uint32_t> reps;
    for (uint32_t w : words) {
        uint32_t c = ~w & m;
        if (w < c) reps.push_back(w);
    }
    return reps;
}

std::string CodeSet::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["mode"] = to_string(mode);
    auto arr = nlohmann::json::array();
    for (uint32_t w : words) arr.push_back(CodeWord(w, n).to_string());
    j["words"] = std::move(arr);
    return j.dump(2) + "\n";
}

CodeSet CodeSet::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    CodeSet s;
    s.n = j.at("n").get<int>();
    auto mode = conflict_mode_from_string(j.at("mode").get<std::string>());
    if (!mode) throw std::invalid_argument("mode must be \"strict\" or \"literal\"");
    s.mode = *mode;
    for (const auto& ws : j.at("words")) {
        CodeWord w = CodeWord::from_string(ws.get<std::string>());
        if (w.n != s.n) throw std::invalid_argument("word length does not match n");
        s.words.push_back(w.bits);
    }
    std::sort(s.words.begin(), s.words.end());
    s.words.erase(std::unique(s.words.begin(), s.words.end()), s.words.end());
    return s;
}

ValidationReport validate_code_set(const CodeSet& s) {
    ValidationReport report;
    uint32_t m = CodeWord(0, s.n).mask();
    for (uint32_t w : s.words)
        if (!s.contains(~w & m)) report.s1_violations.push_back(w);
    for (std::size_t i = 0; i < s.words.size(); ++i)
        for (std::size_t j = i + 1; j < s.words.size(); ++j)
            if (conflicts(CodeWord(s.words[i], s.n), CodeWord(s.words[j], s.n), s.mode))
                report.s2_violations.emplace_back(s.words[i], s.words[j]);
    if (report.valid()) report.k = static_cast<int>(s.words.size() / 2);
    return report;
}

std::string ValidationReport::summary(int n) const {
    std::ostringstream os;
    if (valid()) {
        os << "valid, k = " << k;
        return os.str();
    }
    os << "invalid:";
    for (uint32_t w : s1_violations)
        os << "\n  S1: complement of " << CodeWord(w, n).to_string() << " missing";
    for (const auto& [a, b] : s2_violations)
        os << "\n  S2: " << CodeWord(a, n).to_string() << " conflicts with "
           << CodeWord(b, n).to_string();
    return os.str();
}

bool pair_classes_conflict(const CodeWord& u, const CodeWord& v, ConflictMode mode) {
    // By complement covariance it suffices to test u against v and ~v.
    return conflicts(u, v, mode) || conflicts(u, v.complement(), mode);
}

bool ConflictGraph::adjacent(std::size_t a, std::size_t b) const {
    const auto& list = adjacency[a];
    return std::binary_search(list.begin(), list.end(), static_cast<uint32_t>(b));
}

std::size_t ConflictGraph::edge_count() const {
    std::size_t total = 0;
    for (const auto& list : adjacency) total += list.size();
    return total / 2;
}

ConflictGraph build_conflict_graph(int n, ConflictMode mode, int n_cap) {
    if (n < 2 || n > 32) throw std::invalid_argument("word length must be in [2, 32]");
    if (n > n_cap)
        throw std::runtime_error("conflict graph for n = " + std::to_string(n) +
                                 " exceeds the configured cap " + std::to_string(n_cap));
    ConflictGraph g;
    g.n = n;
    g.mode = mode;
    g.vertex_count = std::size_t{1} << (n - 1);
    g.adjacency.resize(g.vertex_count);
    g.internally_conflicting.resize(g.vertex_count, false);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        CodeWord u(static_cast<uint32_t>(v), n);
        g.internally_conflicting[v] = conflicts(u, u.complement(), mode);
    }
    for (std::size_t a = 0; a < g.vertex_count; ++a) {
        CodeWord ua(static_cast<uint32_t>(a), n);
        for (std::size_t b = a + 1; b < g.vertex_count; ++b) {
            if (pair_classes_conflict(ua, CodeWord(static_cast<uint32_t>(b), n), mode)) {
                g.adjacency[a].push_back(static_cast<uint32_t>(b));
                g.adjacency[b].push_back(static_cast<uint32_t>(a));
            }
        }
    }
    return g;
}

bool quantum_hamming_bound(int n, int k_qubits, int t, int a) {
    if (n < 0 || k_qubits < 0 || t < 0 || a < 0) throw std::invalid_argument("arguments must be nonnegative");
    if (t > n) throw std::invalid_argument("t must not exceed n");
    // Compare sum * 2^k against 2^n in exact integer arithmetic; bail out as
    // soon as the left side provably exceeds the right.
    const unsigned __int128 limit = static_cast<unsigned __int128>(1) << (n > 126 ? 126 : n);
    unsigned __int128 sum = 0;
    unsigned __int128 binom = 1;  // C(n, j)
    unsigned __int128 apow = 1;   // a^j
    for (int j = 0; j <= t; ++j) {
        if (j > 0) {
            binom = binom * static_cast<unsigned>(n - j + 1) / static_cast<unsigned>(j);
            apow *= static_cast<unsigned>(a);
        }
        sum += binom * apow;
        if (sum > limit) return false;
    }
    for (int i = 0; i < k_qubits; ++i) {
        sum <<= 1;
        if (sum > limit) return false;
    }
    return sum <= limit;
}

}  // namespace adqec
