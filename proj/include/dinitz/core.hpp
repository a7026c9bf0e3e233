#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dinitz {

/// A cell of the r x n grid, 1-indexed in both coordinates.
struct Vertex {
    int row = 0;
    int col = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

/// Total order on the vertices of an r x n grid. Two named orders ship:
/// lex (row ascending, column ascending) and col_desc (row ascending,
/// column descending). Custom orders carry an explicit rank table and are
/// used for relabeling experiments.
class VertexOrder {
public:
    enum class Kind { Lex, ColDesc, Custom };

    static VertexOrder lex() { return VertexOrder(Kind::Lex, {}); }
    static VertexOrder col_desc() { return VertexOrder(Kind::ColDesc, {}); }

    /// ranks[(i-1)*n + (j-1)] gives the position of (i,j); must be a
    /// permutation of 0..r*n-1.
    static VertexOrder custom(std::vector<int> ranks);

    Kind kind() const { return kind_; }
    std::string name() const;

    /// Position of v in this order over the r x n vertex set.
    int rank(const Vertex& v, int rows, int cols) const;
    bool precedes(const Vertex& a, const Vertex& b, int rows, int cols) const;

    friend bool operator==(const VertexOrder&, const VertexOrder&) = default;

private:
    VertexOrder(Kind kind, std::vector<int> ranks)
        : kind_(kind), ranks_(std::move(ranks)) {}

    Kind kind_;
    std::vector<int> ranks_;
};

/// A row or column of the grid; its vertices induce a complete subgraph.
struct Line {
    enum class Kind { Row, Column };

    Kind kind = Kind::Row;
    int index = 0;  // 1-based

    static Line row(int i) { return {Kind::Row, i}; }
    static Line column(int j) { return {Kind::Column, j}; }

    friend bool operator==(const Line&, const Line&) = default;
};

std::string to_string(const Line& line);

/// Edge endpoints as ordinals into the graph's vertex order, u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// The graph on vertices (i,j), 1<=i<=r, 1<=j<=n, where two vertices are
/// adjacent exactly when they share a coordinate. Construction fixes a
/// vertex order; the edge list is canonical for (r, n, order): each edge
/// is stored with its order-smaller endpoint first and the list is sorted
/// by endpoint ordinals.
class RectangularGraph {
public:
    RectangularGraph(int rows, int cols, VertexOrder order = VertexOrder::lex());

    static std::shared_ptr<const RectangularGraph> make(
        int rows, int cols, VertexOrder order = VertexOrder::lex());

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const VertexOrder& order() const { return order_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// r*n(n-1)/2 + n*r(r-1)/2
    static long long expected_edge_count(int rows, int cols);

    const std::vector<Edge>& edges() const { return edges_; }
    Vertex vertex_at(int ordinal) const { return vertices_.at(ordinal); }
    int ordinal_of(const Vertex& v) const;

    /// Index of the edge joining a and b, or -1 if they are not adjacent.
    int edge_between(const Vertex& a, const Vertex& b) const;
    int edge_between_ordinals(int a, int b) const;

    std::span<const int> incident_edges(int ordinal) const;

    /// Vertices of a line in position order (j ascending for a row,
    /// i ascending for a column), independent of the vertex order.
    std::vector<Vertex> line_vertices(const Line& line) const;

    /// Degree of every vertex is r + n - 2.
    int vertex_degree() const { return rows_ + cols_ - 2; }

    friend bool operator==(const RectangularGraph& a, const RectangularGraph& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.order_ == b.order_;
    }

private:
    int rows_;
    int cols_;
    VertexOrder order_;
    std::vector<Vertex> vertices_;       // ordinal -> vertex
    std::vector<int> ordinal_by_cell_;   // row-major cell -> ordinal
    std::vector<Edge> edges_;
    std::vector<int> edge_index_;        // u * V + v -> edge index or -1
    std::vector<std::vector<int>> incident_;
};

/// All unordered adjacent pairs, each as (u, v) with u preceding v under
/// the order, sorted by (u, v). Deterministic for fixed inputs.
std::vector<std::pair<Vertex, Vertex>> canonical_edges(
    int rows, int cols, const VertexOrder& order = VertexOrder::lex());

/// Required out-degree per vertex. Values are validated to lie in
/// [0, r+n-2]; the sum is only checked against the edge count at the
/// point where the target drives an enumeration.
class OutDegreeTarget {
public:
    OutDegreeTarget(int rows, int cols, std::vector<int> values);  // row-major

    static OutDegreeTarget from_grid(const std::vector<std::vector<int>>& grid);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int value(const Vertex& v) const;
    int value_at_cell(int cell) const { return values_.at(cell); }
    long long sum() const;
    std::vector<std::vector<int>> as_grid() const;

    friend bool operator==(const OutDegreeTarget&, const OutDegreeTarget&) = default;

private:
    int rows_;
    int cols_;
    std::vector<int> values_;
};

/// Thrown when an enumeration would exceed the configured edge budget.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(std::size_t limit, std::size_t actual);

    std::size_t limit() const { return limit_; }
    std::size_t actual() const { return actual_; }

private:
    std::size_t limit_;
    std::size_t actual_;
};

/// Thrown instead of wrapping when an orientation count would overflow.
class CountOverflowError : public std::overflow_error {
public:
    CountOverflowError() : std::overflow_error("orientation count overflow") {}
};

/// Adds two counts, throwing CountOverflowError on wraparound.
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);

inline int cell_index(const Vertex& v, int cols) {
    return (v.row - 1) * cols + (v.col - 1);
}

}  // namespace dinitz
