#include "dinitz/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dinitz {

std::string to_string(const Vertex& v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

std::string to_string(const Line& line) {
    return (line.kind == Line::Kind::Row ? "row " : "column ") + std::to_string(line.index);
}

VertexOrder VertexOrder::custom(std::vector<int> ranks) {
    std::vector<int> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != static_cast<int>(k)) {
            throw std::invalid_argument("custom order ranks must be a permutation of 0..size-1");
        }
    }
    return VertexOrder(Kind::Custom, std::move(ranks));
}

std::string VertexOrder::name() const {
    switch (kind_) {
        case Kind::Lex: return "lex";
        case Kind::ColDesc: return "coldesc";
        case Kind::Custom: return "custom";
    }
    return "?";
}

int VertexOrder::rank(const Vertex& v, int rows, int cols) const {
    if (v.row < 1 || v.row > rows || v.col < 1 || v.col > cols) {
        throw std::invalid_argument("vertex " + to_string(v) + " outside the grid");
    }
    switch (kind_) {
        case Kind::Lex:
            return (v.row - 1) * cols + (v.col - 1);
        case Kind::ColDesc:
            return (v.row - 1) * cols + (cols - v.col);
        case Kind::Custom:
            if (ranks_.size() != static_cast<std::size_t>(rows) * cols) {
                throw std::invalid_argument("custom order rank table does not match the grid");
            }
            return ranks_[cell_index(v, cols)];
    }
    throw std::logic_error("unreachable");
}

bool VertexOrder::precedes(const Vertex& a, const Vertex& b, int rows, int cols) const {
    return rank(a, rows, cols) < rank(b, rows, cols);
}

RectangularGraph::RectangularGraph(int rows, int cols, VertexOrder order)
    : rows_(rows), cols_(cols), order_(std::move(order)) {
    if (rows_ < 1 || cols_ < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    const int v_count = rows_ * cols_;
    vertices_.resize(v_count);
    ordinal_by_cell_.assign(v_count, -1);
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            const Vertex v{i, j};
            const int rank = order_.rank(v, rows_, cols_);
            if (rank < 0 || rank >= v_count || ordinal_by_cell_.empty()) {
                throw std::invalid_argument("vertex order rank out of range");
            }
            vertices_.at(rank) = v;
            ordinal_by_cell_[cell_index(v, cols_)] = rank;
        }
    }

    edge_index_.assign(static_cast<std::size_t>(v_count) * v_count, -1);
    incident_.resize(v_count);
    for (int a = 0; a < v_count; ++a) {
        const Vertex& va = vertices_[a];
        for (int b = a + 1; b < v_count; ++b) {
            const Vertex& vb = vertices_[b];
            if (va.row != vb.row && va.col != vb.col) continue;
            const int idx = static_cast<int>(edges_.size());
            edges_.push_back(Edge{a, b});
            edge_index_[static_cast<std::size_t>(a) * v_count + b] = idx;
            edge_index_[static_cast<std::size_t>(b) * v_count + a] = idx;
            incident_[a].push_back(idx);
            incident_[b].push_back(idx);
        }
    }
}

std::shared_ptr<const RectangularGraph> RectangularGraph::make(int rows, int cols,
                                                               VertexOrder order) {
    return std::make_shared<const RectangularGraph>(rows, cols, std::move(order));
}

long long RectangularGraph::expected_edge_count(int rows, int cols) {
    const long long r = rows, n = cols;
    return r * n * (n - 1) / 2 + n * r * (r - 1) / 2;
}

int RectangularGraph::ordinal_of(const Vertex& v) const {
    if (v.row < 1 || v.row > rows_ || v.col < 1 || v.col > cols_) {
        throw std::invalid_argument("vertex " + to_string(v) + " outside the grid");
    }
    return ordinal_by_cell_[cell_index(v, cols_)];
}

int RectangularGraph::edge_between(const Vertex& a, const Vertex& b) const {
    return edge_between_ordinals(ordinal_of(a), ordinal_of(b));
}

int RectangularGraph::edge_between_ordinals(int a, int b) const {
    const int v_count = vertex_count();
    if (a < 0 || a >= v_count || b < 0 || b >= v_count || a == b) return -1;
    return edge_index_[static_cast<std::size_t>(a) * v_count + b];
}

std::span<const int> RectangularGraph::incident_edges(int ordinal) const {
    return incident_.at(ordinal);
}

std::vector<Vertex> RectangularGraph::line_vertices(const Line& line) const {
    std::vector<Vertex> out;
    if (line.kind == Line::Kind::Row) {
        if (line.index < 1 || line.index > rows_) {
            throw std::invalid_argument("row index out of range");
        }
        for (int j = 1; j <= cols_; ++j) out.push_back(Vertex{line.index, j});
    } else {
        if (line.index < 1 || line.index > cols_) {
            throw std::invalid_argument("column index out of range");
        }
        for (int i = 1; i <= rows_; ++i) out.push_back(Vertex{i, line.index});
    }
    return out;
}

std::vector<std::pair<Vertex, Vertex>> canonical_edges(int rows, int cols,
                                                       const VertexOrder& order) {
    const RectangularGraph g(rows, cols, order);
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        out.emplace_back(g.vertex_at(e.u), g.vertex_at(e.v));
    }
    return out;
}

OutDegreeTarget::OutDegreeTarget(int rows, int cols, std::vector<int> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
    if (rows_ < 1 || cols_ < 1) {
        throw std::invalid_argument("grid dimensions must be positive");
    }
    if (values_.size() != static_cast<std::size_t>(rows_) * cols_) {
        throw std::invalid_argument("out-degree target size does not match the grid");
    }
    const int degree = rows_ + cols_ - 2;
    for (int v : values_) {
        if (v < 0 || v > degree) {
            throw std::invalid_argument("out-degree target value " + std::to_string(v) +
                                        " outside [0, " + std::to_string(degree) + "]");
        }
    }
}

OutDegreeTarget OutDegreeTarget::from_grid(const std::vector<std::vector<int>>& grid) {
    if (grid.empty() || grid.front().empty()) {
        throw std::invalid_argument("out-degree grid must be non-empty");
    }
    const int rows = static_cast<int>(grid.size());
    const int cols = static_cast<int>(grid.front().size());
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& row : grid) {
        if (static_cast<int>(row.size()) != cols) {
            throw std::invalid_argument("out-degree grid is ragged");
        }
        values.insert(values.end(), row.begin(), row.end());
    }
    return OutDegreeTarget(rows, cols, std::move(values));
}

int OutDegreeTarget::value(const Vertex& v) const {
    if (v.row < 1 || v.row > rows_ || v.col < 1 || v.col > cols_) {
        throw std::invalid_argument("vertex " + to_string(v) + " outside the grid");
    }
    return values_[cell_index(v, cols_)];
}

long long OutDegreeTarget::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

std::vector<std::vector<int>> OutDegreeTarget::as_grid() const {
    std::vector<std::vector<int>> grid(rows_, std::vector<int>(cols_));
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) grid[i][j] = values_[i * cols_ + j];
    }
    return grid;
}

SizeGuardError::SizeGuardError(std::size_t limit, std::size_t actual)
    : std::runtime_error("edge count " + std::to_string(actual) +
                         " exceeds the enumeration guard of " + std::to_string(limit) +
                         " edges"),
      limit_(limit),
      actual_(actual) {}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b) {
        throw CountOverflowError();
    }
    return a + b;
}

}  // namespace dinitz
