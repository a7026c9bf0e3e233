#pragma once

#include <string>
#include <vector>

#include "dinitz/core.hpp"

namespace dinitz {

enum class LatinViolationKind { RowRepeat, ColumnRepeat, OutOfRange };

struct LatinViolation {
    LatinViolationKind kind = LatinViolationKind::RowRepeat;
    int line = 0;    // row index for RowRepeat/OutOfRange, column index for ColumnRepeat
    int symbol = 0;  // the offending entry

    friend bool operator==(const LatinViolation&, const LatinViolation&) = default;
};

struct LatinCheck {
    bool valid = false;
    std::vector<LatinViolation> violations;
};

/// Checks the latin-rectangle invariants on a raw grid: every entry in
/// [0, max(r,n)-1] (which is [0, n-1] whenever r <= n), no repeat within
/// any row or column. Ragged or empty input is a structural error
/// (std::invalid_argument), distinct from an invariant violation.
LatinCheck validate_latin_rectangle(const std::vector<std::vector<int>>& grid);

/// r x n array over {0,...,n-1} with row- and column-distinct entries.
/// The invariants are enforced at construction.
class LatinRectangle {
public:
    explicit LatinRectangle(std::vector<std::vector<int>> grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int i, int j) const { return grid_[i - 1][j - 1]; }  // 1-based
    const std::vector<std::vector<int>>& grid() const { return grid_; }

    friend bool operator==(const LatinRectangle&, const LatinRectangle&) = default;

private:
    int rows_;
    int cols_;
    std::vector<std::vector<int>> grid_;
};

std::string to_string(const LatinRectangle& rect);

}  // namespace dinitz
