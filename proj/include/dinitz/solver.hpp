#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dinitz/lists.hpp"

namespace dinitz {

enum class SolveStatus { Solved, Unsatisfiable, LimitReached };

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    double wall_ms = 0.0;
};

struct SolverOptions {
    std::uint64_t seed = 0;
    std::uint64_t node_limit = 0;  // 0 = unlimited
    int max_restarts = 0;          // extra attempts when the node limit hits
};

struct SolveResult {
    SolveStatus status = SolveStatus::Unsatisfiable;
    SymbolGrid rectangle;  // empty unless Solved
    SolveStats stats;
    std::vector<std::string> warnings;

    /// For the square case: the n x (n+1) rectangle before the last column
    /// is deleted.
    std::optional<SymbolGrid> extended;
};

/// Finds an r x n array with row- and column-distinct entries, each drawn
/// from its cell's list. Backtracking search over cells, most-constrained
/// cell first, value order shuffled by the seed, forward checking after
/// each assignment. A solution always exists when r < n and every list has
/// at least n symbols; outside that regime exhaustion is reported as
/// Unsatisfiable. Undersized lists produce a warning and a best-effort
/// search. Requires r <= n.
SolveResult solve_rectangle(const ListAssignment& lists, const SolverOptions& options = {});

/// The n x (n+1) instance obtained by duplicating column n's lists into a
/// new column n+1.
ListAssignment extend_square_lists(const ListAssignment& lists);

/// Square case via column duplication: extends the instance, solves the
/// n x (n+1) rectangle, then deletes the last column. Requires r = n;
/// lists of size >= n+1 make the search guaranteed.
SolveResult solve_square_plus_one(const ListAssignment& lists, const SolverOptions& options = {});

enum class SolutionViolationKind { RowRepeat, ColumnRepeat, NotInList };

struct SolutionViolation {
    SolutionViolationKind kind = SolutionViolationKind::NotInList;
    int row = 0;  // RowRepeat: the row; NotInList: the cell row
    int col = 0;  // ColumnRepeat: the column; NotInList: the cell column
    Symbol symbol;
};

struct SolutionCheck {
    bool valid = false;
    std::vector<SolutionViolation> violations;
};

/// Accepts iff rows are distinct, columns are distinct, and every entry
/// belongs to its cell's list. Reports every violation. A dimension
/// mismatch is a structural error (std::invalid_argument).
SolutionCheck validate_solution(const SymbolGrid& candidate, const ListAssignment& lists);

}  // namespace dinitz
