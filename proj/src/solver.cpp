#include "dinitz/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <random>
#include <set>

namespace dinitz {

namespace {

// Candidate sets as word-packed bitmasks over dense symbol ids.
class SymbolMask {
public:
    explicit SymbolMask(int symbol_count) : words_((symbol_count + 63) / 64, 0) {}

    void set(int id) { words_[id >> 6] |= 1ULL << (id & 63); }
    void clear(int id) { words_[id >> 6] &= ~(1ULL << (id & 63)); }
    bool test(int id) const { return words_[id >> 6] >> (id & 63) & 1; }

    int count_minus(const SymbolMask& a, const SymbolMask& b) const {
        int total = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            total += std::popcount(words_[w] & ~a.words_[w] & ~b.words_[w]);
        }
        return total;
    }

    std::vector<int> extract_minus(const SymbolMask& a, const SymbolMask& b) const {
        std::vector<int> ids;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w] & ~a.words_[w] & ~b.words_[w];
            while (bits) {
                const int bit = std::countr_zero(bits);
                ids.push_back(static_cast<int>(w) * 64 + bit);
                bits &= bits - 1;
            }
        }
        return ids;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Search {
    const ListAssignment& lists;
    int rows;
    int cols;
    std::vector<SymbolMask> cell_lists;  // per cell
    std::vector<SymbolMask> row_used;
    std::vector<SymbolMask> col_used;
    std::vector<int> assignment;  // dense id or -1
    std::mt19937_64 rng;
    std::uint64_t nodes = 0;
    std::uint64_t backtracks = 0;
    std::uint64_t node_limit = 0;
    bool limit_hit = false;

    explicit Search(const ListAssignment& l, std::uint64_t seed, std::uint64_t limit)
        : lists(l),
          rows(l.rows()),
          cols(l.cols()),
          cell_lists(static_cast<std::size_t>(rows) * cols, SymbolMask(l.symbol_count())),
          row_used(rows, SymbolMask(l.symbol_count())),
          col_used(cols, SymbolMask(l.symbol_count())),
          assignment(static_cast<std::size_t>(rows) * cols, -1),
          rng(seed),
          node_limit(limit) {
        for (int i = 1; i <= rows; ++i) {
            for (int j = 1; j <= cols; ++j) {
                for (int id : l.list_at(i, j)) {
                    cell_lists[(i - 1) * cols + (j - 1)].set(id);
                }
            }
        }
    }

    int candidates(int cell) const {
        return cell_lists[cell].count_minus(row_used[cell / cols], col_used[cell % cols]);
    }

    // Most-constrained cell; ties break toward the lowest cell index.
    int select_cell() const {
        int best = -1, best_count = 0;
        for (int cell = 0; cell < rows * cols; ++cell) {
            if (assignment[cell] >= 0) continue;
            const int count = candidates(cell);
            if (best < 0 || count < best_count) {
                best = cell;
                best_count = count;
            }
        }
        return best;
    }

    bool line_viable(int cell) const {
        const int row = cell / cols, col = cell % cols;
        for (int j = 0; j < cols; ++j) {
            const int c = row * cols + j;
            if (assignment[c] < 0 && candidates(c) == 0) return false;
        }
        for (int i = 0; i < rows; ++i) {
            const int c = i * cols + col;
            if (assignment[c] < 0 && candidates(c) == 0) return false;
        }
        return true;
    }

    bool run() {
        const int cell = select_cell();
        if (cell < 0) return true;  // all assigned
        std::vector<int> values =
            cell_lists[cell].extract_minus(row_used[cell / cols], col_used[cell % cols]);
        std::shuffle(values.begin(), values.end(), rng);
        for (int id : values) {
            if (node_limit && nodes >= node_limit) {
                limit_hit = true;
                return false;
            }
            ++nodes;
            assignment[cell] = id;
            row_used[cell / cols].set(id);
            col_used[cell % cols].set(id);
            if (line_viable(cell) && run()) return true;
            assignment[cell] = -1;
            row_used[cell / cols].clear(id);
            col_used[cell % cols].clear(id);
            ++backtracks;
            if (limit_hit) return false;
        }
        return false;
    }
};

SymbolGrid to_symbols(const ListAssignment& lists, const std::vector<int>& assignment) {
    SymbolGrid grid(lists.rows(), std::vector<Symbol>(lists.cols()));
    for (int i = 0; i < lists.rows(); ++i) {
        for (int j = 0; j < lists.cols(); ++j) {
            grid[i][j] = lists.symbol(assignment[i * lists.cols() + j]);
        }
    }
    return grid;
}

}  // namespace

SolveResult solve_rectangle(const ListAssignment& lists, const SolverOptions& options) {
    if (lists.rows() > lists.cols()) {
        throw std::invalid_argument("solve_rectangle requires r <= n");
    }
    SolveResult result;
    if (lists.min_list_size() < static_cast<std::size_t>(lists.cols())) {
        result.warnings.push_back(
            "list of size " + std::to_string(lists.min_list_size()) + " is below n=" +
            std::to_string(lists.cols()) + "; no solution is guaranteed, searching anyway");
    }

    const auto start = std::chrono::steady_clock::now();
    const int attempts = options.node_limit ? options.max_restarts + 1 : 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        // Restarts draw fresh value orders from seed + attempt.
        Search search(lists, options.seed + static_cast<std::uint64_t>(attempt),
                      options.node_limit);
        const bool solved = search.run();
        result.stats.nodes += search.nodes;
        result.stats.backtracks += search.backtracks;
        if (solved) {
            result.status = SolveStatus::Solved;
            result.rectangle = to_symbols(lists, search.assignment);
            break;
        }
        result.status =
            search.limit_hit ? SolveStatus::LimitReached : SolveStatus::Unsatisfiable;
        if (!search.limit_hit) break;  // exhaustion is conclusive
    }
    const auto end = std::chrono::steady_clock::now();
    result.stats.wall_ms =
        std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(end - start)
            .count();
    return result;
}

ListAssignment extend_square_lists(const ListAssignment& lists) {
    if (lists.rows() != lists.cols()) {
        throw std::invalid_argument("column duplication requires a square instance");
    }
    const int n = lists.cols();
    std::vector<std::vector<std::vector<Symbol>>> extended(lists.rows());
    for (int i = 1; i <= lists.rows(); ++i) {
        extended[i - 1].resize(n + 1);
        for (int j = 1; j <= n; ++j) {
            extended[i - 1][j - 1] = lists.list_symbols(i, j);
        }
        extended[i - 1][n] = lists.list_symbols(i, n);  // S_{i,n+1} = S_{i,n}
    }
    return ListAssignment(lists.rows(), n + 1, std::move(extended));
}

SolveResult solve_square_plus_one(const ListAssignment& lists, const SolverOptions& options) {
    if (lists.rows() != lists.cols()) {
        throw std::invalid_argument("solve_square_plus_one requires r = n");
    }
    const int n = lists.cols();
    SolveResult result;
    if (lists.min_list_size() < static_cast<std::size_t>(n) + 1) {
        result.warnings.push_back("list of size " + std::to_string(lists.min_list_size()) +
                                  " is below n+1=" + std::to_string(n + 1) +
                                  "; no solution is guaranteed, searching anyway");
    }

    const ListAssignment extended = extend_square_lists(lists);
    SolveResult inner = solve_rectangle(extended, options);
    result.status = inner.status;
    result.stats = inner.stats;
    for (auto& w : inner.warnings) result.warnings.push_back(std::move(w));
    if (inner.status == SolveStatus::Solved) {
        result.extended = inner.rectangle;
        result.rectangle = std::move(inner.rectangle);
        for (auto& row : result.rectangle) row.pop_back();  // delete column n+1
    }
    return result;
}

SolutionCheck validate_solution(const SymbolGrid& candidate, const ListAssignment& lists) {
    if (candidate.size() != static_cast<std::size_t>(lists.rows())) {
        throw std::invalid_argument("candidate row count does not match the instance");
    }
    for (const auto& row : candidate) {
        if (row.size() != static_cast<std::size_t>(lists.cols())) {
            throw std::invalid_argument("candidate column count does not match the instance");
        }
    }

    SolutionCheck check;
    for (int i = 1; i <= lists.rows(); ++i) {
        for (int j = 1; j <= lists.cols(); ++j) {
            const Symbol& s = candidate[i - 1][j - 1];
            const auto id = lists.dense_id(s);
            const auto list = lists.list_at(i, j);
            if (!id || !std::binary_search(list.begin(), list.end(), *id)) {
                check.violations.push_back(
                    {SolutionViolationKind::NotInList, i, j, s});
            }
        }
    }
    for (int i = 1; i <= lists.rows(); ++i) {
        std::set<Symbol> seen, reported;
        for (int j = 1; j <= lists.cols(); ++j) {
            const Symbol& s = candidate[i - 1][j - 1];
            if (!seen.insert(s).second && reported.insert(s).second) {
                check.violations.push_back({SolutionViolationKind::RowRepeat, i, 0, s});
            }
        }
    }
    for (int j = 1; j <= lists.cols(); ++j) {
        std::set<Symbol> seen, reported;
        for (int i = 1; i <= lists.rows(); ++i) {
            const Symbol& s = candidate[i - 1][j - 1];
            if (!seen.insert(s).second && reported.insert(s).second) {
                check.violations.push_back({SolutionViolationKind::ColumnRepeat, 0, j, s});
            }
        }
    }
    check.valid = check.violations.empty();
    return check;
}

}  // namespace dinitz
