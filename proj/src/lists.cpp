#include "dinitz/lists.hpp"

#include <algorithm>
#include <set>

namespace dinitz {

std::string to_string(const Symbol& s) {
    if (std::holds_alternative<std::int64_t>(s)) {
        return std::to_string(std::get<std::int64_t>(s));
    }
    return "\"" + std::get<std::string>(s) + "\"";
}

ListAssignment::ListAssignment(int rows, int cols,
                               std::vector<std::vector<std::vector<Symbol>>> lists)
    : rows_(rows), cols_(cols) {
    if (rows_ < 1 || cols_ < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    if (lists.size() != static_cast<std::size_t>(rows_)) {
        throw std::invalid_argument("list assignment has wrong row count");
    }
    std::set<Symbol> universe;
    for (const auto& row : lists) {
        if (row.size() != static_cast<std::size_t>(cols_)) {
            throw std::invalid_argument("list assignment has wrong column count");
        }
        for (const auto& cell : row) {
            if (cell.empty()) {
                throw std::invalid_argument("every cell list must be non-empty");
            }
            universe.insert(cell.begin(), cell.end());
        }
    }
    // Dense ids follow the sorted order of the external symbols.
    symbols_.assign(universe.begin(), universe.end());
    for (int id = 0; id < static_cast<int>(symbols_.size()); ++id) {
        ids_.emplace(symbols_[id], id);
    }
    lists_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : lists) {
        for (const auto& cell : row) {
            std::set<int> dense;
            for (const Symbol& s : cell) dense.insert(ids_.at(s));
            lists_.emplace_back(dense.begin(), dense.end());
        }
    }
}

ListAssignment ListAssignment::from_ints(
    int rows, int cols, const std::vector<std::vector<std::vector<std::int64_t>>>& lists) {
    std::vector<std::vector<std::vector<Symbol>>> converted(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        converted[i].resize(lists[i].size());
        for (std::size_t j = 0; j < lists[i].size(); ++j) {
            converted[i][j].assign(lists[i][j].begin(), lists[i][j].end());
        }
    }
    return ListAssignment(rows, cols, std::move(converted));
}

ListAssignment ListAssignment::uniform(int rows, int cols, std::vector<Symbol> symbols) {
    std::vector<std::vector<std::vector<Symbol>>> lists(
        rows, std::vector<std::vector<Symbol>>(cols, symbols));
    return ListAssignment(rows, cols, std::move(lists));
}

ListAssignment ListAssignment::identity(int rows, int cols) {
    std::vector<Symbol> symbols;
    for (int s = 0; s < cols; ++s) symbols.emplace_back(static_cast<std::int64_t>(s));
    return uniform(rows, cols, std::move(symbols));
}

std::optional<int> ListAssignment::dense_id(const Symbol& s) const {
    const auto it = ids_.find(s);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

std::span<const int> ListAssignment::list_at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
        throw std::invalid_argument("cell outside the grid");
    }
    return lists_[(i - 1) * cols_ + (j - 1)];
}

std::vector<Symbol> ListAssignment::list_symbols(int i, int j) const {
    std::vector<Symbol> out;
    for (int id : list_at(i, j)) out.push_back(symbols_[id]);
    return out;
}

std::size_t ListAssignment::min_list_size() const {
    std::size_t best = lists_.front().size();
    for (const auto& l : lists_) best = std::min(best, l.size());
    return best;
}

}  // namespace dinitz
