#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dinitz/core.hpp"

namespace dinitz {

/// An externally supplied cell symbol: an integer or a string.
using Symbol = std::variant<std::int64_t, std::string>;

std::string to_string(const Symbol& s);

using SymbolGrid = std::vector<std::vector<Symbol>>;

/// Per-cell symbol lists. External symbols are interned to dense ids
/// 0..k-1 assigned in sorted symbol order; every list is stored as a
/// sorted, deduplicated id vector. Lists must be non-empty.
class ListAssignment {
public:
    ListAssignment(int rows, int cols, std::vector<std::vector<std::vector<Symbol>>> lists);

    static ListAssignment from_ints(
        int rows, int cols,
        const std::vector<std::vector<std::vector<std::int64_t>>>& lists);

    /// Every cell gets the same list.
    static ListAssignment uniform(int rows, int cols, std::vector<Symbol> symbols);

    /// Every cell gets {0, ..., n-1}.
    static ListAssignment identity(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int symbol_count() const { return static_cast<int>(symbols_.size()); }
    const Symbol& symbol(int dense_id) const { return symbols_.at(dense_id); }
    std::optional<int> dense_id(const Symbol& s) const;

    /// Sorted dense ids for cell (i, j), 1-based.
    std::span<const int> list_at(int i, int j) const;
    std::vector<Symbol> list_symbols(int i, int j) const;

    std::size_t min_list_size() const;

private:
    int rows_;
    int cols_;
    std::vector<std::vector<int>> lists_;  // row-major cells, sorted dense ids
    std::vector<Symbol> symbols_;          // dense id -> external symbol
    std::map<Symbol, int> ids_;
};

}  // namespace dinitz
