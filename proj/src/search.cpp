#include "adqec/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace adqec {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

CodeSet code_from_representatives(int n, ConflictMode mode, const std::vector<uint32_t>& reps) {
    CodeSet code;
    code.n = n;
    code.mode = mode;
    uint32_t m = CodeWord(0, n).mask();
    for (uint32_t r : reps) {
        code.words.push_back(r);
        code.words.push_back(~r & m);
    }
    std::sort(code.words.begin(), code.words.end());
    return code;
}

// Plain dynamic bitset over 64-bit words, enough for the conflict-graph
// vertex counts handled by the exact search.
struct Bits {
    std::vector<uint64_t> w;

    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i / 64] |= uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { w[i / 64] &= ~(uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
    bool any() const {
        for (uint64_t x : w)
            if (x) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (uint64_t x : w) c += std::popcount(x);
        return c;
    }
    void and_with(const Bits& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    }
    int find_first() const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return static_cast<int>(i * 64 + std::countr_zero(w[i]));
        return -1;
    }
};

// Maximum clique on the complement of the conflict graph (equivalently a
// maximum independent set of usable pair classes), Tomita-style greedy
// coloring bound.
class ExactSolver {
public:
    ExactSolver(const ConflictGraph& graph, double budget_seconds)
        : nverts_(graph.vertex_count), budget_(budget_seconds), start_(Clock::now()) {
        compat_.assign(nverts_, Bits(nverts_));
        incompat_.assign(nverts_, Bits(nverts_));
        for (std::size_t a = 0; a < nverts_; ++a) {
            if (graph.internally_conflicting[a]) continue;
            for (std::size_t b = 0; b < nverts_; ++b) {
                if (a == b || graph.internally_conflicting[b]) continue;
                if (!graph.adjacent(a, b))
                    compat_[a].set(b);
                else
                    incompat_[a].set(b);
            }
        }
        usable_ = Bits(nverts_);
        for (std::size_t v = 0; v < nverts_; ++v)
            if (!graph.internally_conflicting[v]) usable_.set(v);
    }

    void seed(const std::vector<uint32_t>& reps) {
        if (reps.size() > best_.size()) best_.assign(reps.begin(), reps.end());
    }

    // Returns true when the search space was exhausted within budget.
    bool solve() {
        std::vector<uint32_t> current;
        current.reserve(nverts_);
        expand(usable_, current);
        return !timed_out_;
    }

    const std::vector<uint32_t>& best() const { return best_; }

private:
    void expand(const Bits& candidates, std::vector<uint32_t>& current) {
        if (timed_out_) return;
        if (++nodes_ % 1024 == 0 && seconds_since(start_) > budget_) {
            timed_out_ = true;
            return;
        }
        // Greedy coloring: each class is a set of pairwise-incompatible
        // vertices, so a clique meets every class at most once. A vertex in
        // class c can therefore extend the current clique to at most size
        // |current| + c.
        std::vector<uint32_t> order;
        std::vector<int> color;
        Bits rest = candidates;
        int ncolors = 0;
        while (rest.any()) {
            ++ncolors;
            Bits cls = rest;
            while (true) {
                int v = cls.find_first();
                if (v < 0) break;
                order.push_back(static_cast<uint32_t>(v));
                color.push_back(ncolors);
                rest.reset(static_cast<std::size_t>(v));
                cls.reset(static_cast<std::size_t>(v));
                cls.and_with(incompat_[static_cast<std::size_t>(v)]);
            }
        }
        Bits local = candidates;
        for (std::size_t idx = order.size(); idx-- > 0;) {
            uint32_t v = order[idx];
            if (current.size() + static_cast<std::size_t>(color[idx]) <= best_.size()) return;
            current.push_back(v);
            Bits next = local;
            next.and_with(compat_[v]);
            if (!next.any()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(next, current);
            }
            current.pop_back();
            local.reset(v);
            if (timed_out_) return;
        }
    }

    std::size_t nverts_;
    double budget_;
    Clock::time_point start_;
    std::vector<Bits> compat_;
    std::vector<Bits> incompat_;
    Bits usable_;
    std::vector<uint32_t> best_;
    uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

std::string to_string(SearchStrategy s) {
    switch (s) {
        case SearchStrategy::GreedyLex: return "greedy-lex";
        case SearchStrategy::GreedyByWeight: return "greedy-weight";
        case SearchStrategy::ExactBnB: return "exact";
    }
    throw std::logic_error("unreachable");
}

std::optional<SearchStrategy> search_strategy_from_string(const std::string& s) {
    if (s == "greedy-lex") return SearchStrategy::GreedyLex;
    if (s == "greedy-weight") return SearchStrategy::GreedyByWeight;
    if (s == "exact") return SearchStrategy::ExactBnB;
    return std::nullopt;
}

SearchResult greedy_search(const SearchConfig& config) {
    if (config.strategy == SearchStrategy::ExactBnB)
        throw std::invalid_argument("greedy_search requires a greedy strategy");
    auto start = Clock::now();
    int n = config.n;
    uint32_t half = 1u << (n - 1);
    std::vector<uint32_t> order(half);
    std::iota(order.begin(), order.end(), 0u);
    if (config.strategy == SearchStrategy::GreedyByWeight) {
        std::stable_sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
            int wa = std::popcount(a), wb = std::popcount(b);
            return wa != wb ? wa < wb : a < b;
        });
    }
    std::vector<uint32_t> chosen;
    for (uint32_t rep : order) {
        CodeWord u(rep, n);
        if (conflicts(u, u.complement(), config.mode)) continue;
        bool ok = true;
        for (uint32_t c : chosen) {
            if (pair_classes_conflict(u, CodeWord(c, n), config.mode)) {
                ok = false;
                break;
            }
        }
        if (ok) chosen.push_back(rep);
    }
    SearchResult result;
    result.code = code_from_representatives(n, config.mode, chosen);
    result.k = static_cast<int>(chosen.size());
    result.optimal = false;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

SearchResult exact_search(const SearchConfig& config) {
    if (config.strategy != SearchStrategy::ExactBnB)
        throw std::invalid_argument("exact_search requires the exact strategy");
    if (config.n > config.exact_cap)
        throw std::runtime_error("exact search capped at n = " + std::to_string(config.exact_cap));
    auto start = Clock::now();
    ConflictGraph graph = build_conflict_graph(config.n, config.mode);
    ExactSolver solver(graph, config.time_budget_seconds);
    for (auto strategy : {SearchStrategy::GreedyLex, SearchStrategy::GreedyByWeight}) {
        SearchConfig greedy_cfg = config;
        greedy_cfg.strategy = strategy;
        solver.seed(greedy_search(greedy_cfg).code.pair_representatives());
    }
    bool completed = solver.solve();
    SearchResult result;
    result.code = code_from_representatives(config.n, config.mode, solver.best());
    std::sort(result.code.words.begin(), result.code.words.end());
    result.k = static_cast<int>(solver.best().size());
    result.optimal = completed;
    result.elapsed_seconds = seconds_since(start);
    return result;
}

SearchResult run_search(const SearchConfig& config) {
    return config.strategy == SearchStrategy::ExactBnB ? exact_search(config)
                                                       : greedy_search(config);
}

bool is_maximal(const CodeSet& code) {
    uint32_t half = 1u << (code.n - 1);
    auto reps = code.pair_representatives();
    for (uint32_t cand = 0; cand < half; ++cand) {
        if (code.contains(cand)) continue;
        CodeWord u(cand, code.n);
        if (conflicts(u, u.complement(), code.mode)) continue;
        bool blocked = false;
        for (uint32_t r : reps) {
            if (pair_classes_conflict(u, CodeWord(r, code.n), code.mode)) {
                blocked = true;
                break;
            }
        }
        if (!blocked) return false;
    }
    return true;
}

std::optional<int> reference_dimension(int n) {
    static constexpr std::array<int, 13> table = {2, 2, 5, 8, 12, 18, 41, 78, 146, 273, 515, 931, 1716};
    if (n < 4 || n > 16) return std::nullopt;
    return table[static_cast<std::size_t>(n - 4)];
}

std::optional<double> log_rate_slope(const std::vector<std::pair<int, int>>& rows) {
    if (rows.size() < 2) return std::nullopt;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [n, k] : rows) {
        double x = n, y = std::log2(static_cast<double>(k));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(rows.size());
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

double reference_slope() {
    std::vector<std::pair<int, int>> rows;
    for (int n = 4; n <= 16; ++n) rows.emplace_back(n, *reference_dimension(n));
    return *log_rate_slope(rows);
}

TableReport rate_table(int n_min, int n_max, const SearchConfig& config) {
    if (n_min > n_max) throw std::invalid_argument("n_min must not exceed n_max");
    TableReport report;
    std::vector<std::pair<int, int>> fit_rows;
    for (int n = n_min; n <= n_max; ++n) {
        TableRow row;
        row.n = n;
        row.reference_k = reference_dimension(n);
        try {
            SearchConfig cfg = config;
            cfg.n = n;
            SearchResult res = run_search(cfg);
            row.k = res.k;
            row.log2k = res.k > 0 ? std::log2(static_cast<double>(res.k)) : 0.0;
            if (res.k > 0) fit_rows.emplace_back(n, res.k);
        } catch (const std::exception& e) {
            row.failure = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    report.slope = log_rate_slope(fit_rows);
    return report;
}

std::string TableReport::to_csv() const {
    std::ostringstream os;
    os << "n,k,log2k,reference_k\n";
    for (const auto& row : rows) {
        os << row.n << ",";
        if (row.failure.empty()) {
            os << row.k << "," << row.log2k;
        } else {
            os << ",";
        }
        os << ",";
        if (row.reference_k) os << *row.reference_k;
        os << "\n";
    }
    return os.str();
}

}  // namespace adqec
