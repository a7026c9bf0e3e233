#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "dinitz/core.hpp"
#include "dinitz/latin.hpp"

namespace dinitz {

enum class Parity { Even, Odd };

/// A direction for every edge of a RectangularGraph, one bit per canonical
/// edge: true means the edge points at its order-smaller endpoint (an
/// inverted edge). Immutable after construction.
class Orientation {
public:
    Orientation(std::shared_ptr<const RectangularGraph> graph,
                std::vector<std::uint8_t> toward_smaller);

    /// Builds from explicit (tail, head) arcs; every edge of the graph must
    /// be covered exactly once.
    static Orientation from_arcs(std::shared_ptr<const RectangularGraph> graph,
                                 const std::vector<std::pair<Vertex, Vertex>>& arcs);

    const RectangularGraph& graph() const { return *graph_; }
    const std::shared_ptr<const RectangularGraph>& graph_ptr() const { return graph_; }

    bool toward_smaller(int edge) const { return bits_[edge] != 0; }
    const std::vector<std::uint8_t>& bits() const { return bits_; }

    int tail_ordinal(int edge) const;
    int head_ordinal(int edge) const;
    Vertex tail(int edge) const { return graph_->vertex_at(tail_ordinal(edge)); }
    Vertex head(int edge) const { return graph_->vertex_at(head_ordinal(edge)); }

    /// True iff the edge between the two vertices points from -> to.
    /// The vertices must be adjacent.
    bool has_arc(const Vertex& from, const Vertex& to) const;

    std::size_t inverted_edge_count() const;

    Orientation with_flipped(const std::vector<int>& edge_indices) const;

    friend bool operator==(const Orientation& a, const Orientation& b) {
        return *a.graph_ == *b.graph_ && a.bits_ == b.bits_;
    }

private:
    std::shared_ptr<const RectangularGraph> graph_;
    std::vector<std::uint8_t> bits_;
};

Parity parity(const Orientation& d);

/// Out-degree counts per cell: total over all incident edges, and
/// horizontal restricted to same-row edges.
struct DegreeProfile {
    int rows = 0;
    int cols = 0;
    std::vector<int> total;       // row-major cells
    std::vector<int> horizontal;

    int total_at(int i, int j) const { return total[(i - 1) * cols + (j - 1)]; }
    int horizontal_at(int i, int j) const { return horizontal[(i - 1) * cols + (j - 1)]; }
    std::vector<std::vector<int>> total_grid() const;
    std::vector<std::vector<int>> horizontal_grid() const;

    friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

DegreeProfile degree_profile(const Orientation& d);

/// Out-degree of each line vertex counting only intra-line edges, in
/// position order.
std::vector<int> line_out_degrees(const Orientation& d, const Line& line);

/// The r x n matrix of horizontal out-degrees. Defined for arbitrary
/// orientations; no latin validity is implied.
std::vector<std::vector<int>> associated_matrix(const Orientation& d);

/// Orientation induced by a latin rectangle: a horizontal edge points from
/// the larger entry to the smaller, a vertical edge from the smaller entry
/// to the larger.
Orientation associated_orientation(const LatinRectangle& rect,
                                   const VertexOrder& order = VertexOrder::lex());
Orientation associated_orientation(const LatinRectangle& rect,
                                   std::shared_ptr<const RectangularGraph> graph);

/// Witness of a directed 3-cycle u -> v -> w -> u.
struct Triangle {
    Vertex u, v, w;

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Detects a directed 3-cycle. In a rectangular graph such a cycle lies
/// inside a single row or column, so detection scans each line for a
/// duplicated intra-line out-degree; the witness is reconstructed from the
/// duplicate pair. Lines are scanned rows first then columns, and the
/// least duplicate pair (by vertex order) of the first offending line
/// determines the witness.
std::optional<Triangle> has_cyclic_triangle(const Orientation& d);

}  // namespace dinitz
