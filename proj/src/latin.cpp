#include "dinitz/latin.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dinitz {

LatinCheck validate_latin_rectangle(const std::vector<std::vector<int>>& grid) {
    if (grid.empty() || grid.front().empty()) {
        throw std::invalid_argument("latin rectangle must be non-empty");
    }
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid.front().size());
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument("latin rectangle is ragged");
        }
    }

    LatinCheck check;
    // Entries range over {0..n-1}; a single-column rectangle taller than it
    // is wide reads the bound from its longer side so the vertical rule
    // stays exercisable.
    const int bound = std::max(rows, cols);
    std::set<std::pair<int, int>> range_hits;  // (row, symbol)
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            const int s = grid[i][j];
            if ((s < 0 || s >= bound) && range_hits.emplace(i + 1, s).second) {
                check.violations.push_back(
                    {LatinViolationKind::OutOfRange, i + 1, s});
            }
        }
    }
    for (int i = 0; i < rows; ++i) {
        std::set<int> seen, reported;
        for (int j = 0; j < cols; ++j) {
            const int s = grid[i][j];
            if (!seen.insert(s).second && reported.insert(s).second) {
                check.violations.push_back({LatinViolationKind::RowRepeat, i + 1, s});
            }
        }
    }
    for (int j = 0; j < cols; ++j) {
        std::set<int> seen, reported;
        for (int i = 0; i < rows; ++i) {
            const int s = grid[i][j];
            if (!seen.insert(s).second && reported.insert(s).second) {
                check.violations.push_back({LatinViolationKind::ColumnRepeat, j + 1, s});
            }
        }
    }
    check.valid = check.violations.empty();
    return check;
}

LatinRectangle::LatinRectangle(std::vector<std::vector<int>> grid) : grid_(std::move(grid)) {
    const LatinCheck check = validate_latin_rectangle(grid_);
    if (!check.valid) {
        std::ostringstream msg;
        msg << "not a latin rectangle:";
        for (const auto& v : check.violations) {
            switch (v.kind) {
                case LatinViolationKind::RowRepeat:
                    msg << " [row " << v.line << " repeats " << v.symbol << "]";
                    break;
                case LatinViolationKind::ColumnRepeat:
                    msg << " [column " << v.line << " repeats " << v.symbol << "]";
                    break;
                case LatinViolationKind::OutOfRange:
                    msg << " [row " << v.line << " has out-of-range " << v.symbol << "]";
                    break;
            }
        }
        throw std::invalid_argument(msg.str());
    }
    rows_ = static_cast<int>(grid_.size());
    cols_ = static_cast<int>(grid_.front().size());
}

std::string to_string(const LatinRectangle& rect) {
    std::ostringstream out;
    for (int i = 1; i <= rect.rows(); ++i) {
        for (int j = 1; j <= rect.cols(); ++j) {
            if (j > 1) out << ' ';
            out << rect.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace dinitz
