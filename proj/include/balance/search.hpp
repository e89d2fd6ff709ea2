#ifndef BALANCE_SEARCH_HPP
#define BALANCE_SEARCH_HPP

#include <optional>

namespace balance {

// Exactness contract: `none` means exhaustively refuted; a search that ran
// out of budget reports `undecided` and must never be read as a refutation.
enum class SearchStatus { found, none, undecided };

struct SearchBudget {
    long long node_limit = 100'000'000;
};

template <typename T>
struct SearchResult {
    SearchStatus status = SearchStatus::undecided;
    std::optional<T> witness;
    long long nodes = 0;

    bool found() const { return status == SearchStatus::found; }
};

} // namespace balance

#endif
