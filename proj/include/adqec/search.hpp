#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adqec/codeset.hpp"

namespace adqec {

enum class SearchStrategy {
    GreedyLex,       // pair representatives in ascending integer order
    GreedyByWeight,  // ascending representative weight, ties ascending integer
    ExactBnB,        // branch and bound over the conflict graph
};

std::string to_string(SearchStrategy s);
std::optional<SearchStrategy> search_strategy_from_string(const std::string& s);

struct SearchConfig {
    int n = 0;
    ConflictMode mode = ConflictMode::Strict;
    SearchStrategy strategy = SearchStrategy::GreedyLex;
    double time_budget_seconds = 60.0;
    int exact_cap = 10;        // largest n accepted for ExactBnB
    uint64_t random_seed = 0;  // reserved for future randomized strategies
};

struct SearchResult {
    CodeSet code;
    int k = 0;
    bool optimal = false;  // true only for a completed exact search
    double elapsed_seconds = 0.0;
};

SearchResult greedy_search(const SearchConfig& config);
SearchResult exact_search(const SearchConfig& config);

// Dispatches on config.strategy.
SearchResult run_search(const SearchConfig& config);

// True when no complement pair can be added to the code without violating
// (S2) or an internal pair conflict.
bool is_maximal(const CodeSet& code);

struct TableRow {
    int n = 0;
    int k = 0;          // 0 when the row failed
    double log2k = 0.0;
    std::optional<int> reference_k;  // published greedy value, when known
    std::string failure;             // empty on success
};

struct TableReport {
    std::vector<TableRow> rows;
    std::optional<double> slope;  // least-squares slope of log2(k) vs n; absent if < 2 rows

    std::string to_csv() const;
};

TableReport rate_table(int n_min, int n_max, const SearchConfig& config);

// The published greedy dimensions for n = 4..16.
std::optional<int> reference_dimension(int n);

// Least-squares slope of log2(k) against n over the given (n, k) rows.
std::optional<double> log_rate_slope(const std::vector<std::pair<int, int>>& rows);

// Slope of the published reference column itself.
double reference_slope();

}  // namespace adqec
