#include "dinitz/orientation.hpp"

#include <algorithm>

namespace dinitz {

Orientation::Orientation(std::shared_ptr<const RectangularGraph> graph,
                         std::vector<std::uint8_t> toward_smaller)
    : graph_(std::move(graph)), bits_(std::move(toward_smaller)) {
    if (!graph_) throw std::invalid_argument("orientation requires a graph");
    if (bits_.size() != static_cast<std::size_t>(graph_->edge_count())) {
        throw std::invalid_argument("orientation bit count does not match the edge count");
    }
    for (auto& b : bits_) b = b ? 1 : 0;
}

Orientation Orientation::from_arcs(std::shared_ptr<const RectangularGraph> graph,
                                   const std::vector<std::pair<Vertex, Vertex>>& arcs) {
    if (!graph) throw std::invalid_argument("orientation requires a graph");
    std::vector<std::uint8_t> bits(graph->edge_count(), 0);
    std::vector<std::uint8_t> covered(graph->edge_count(), 0);
    for (const auto& [from, to] : arcs) {
        const int e = graph->edge_between(from, to);
        if (e < 0) {
            throw std::invalid_argument("arc " + to_string(from) + "->" + to_string(to) +
                                        " is not an edge");
        }
        if (covered[e]) {
            throw std::invalid_argument("edge " + to_string(from) + "-" + to_string(to) +
                                        " directed twice");
        }
        covered[e] = 1;
        // Inverted when the head is the order-smaller endpoint.
        bits[e] = graph->ordinal_of(to) == graph->edges()[e].u ? 1 : 0;
    }
    if (std::find(covered.begin(), covered.end(), 0) != covered.end()) {
        throw std::invalid_argument("every edge needs a direction");
    }
    return Orientation(std::move(graph), std::move(bits));
}

int Orientation::tail_ordinal(int edge) const {
    const Edge& e = graph_->edges().at(edge);
    return bits_[edge] ? e.v : e.u;
}

int Orientation::head_ordinal(int edge) const {
    const Edge& e = graph_->edges().at(edge);
    return bits_[edge] ? e.u : e.v;
}

bool Orientation::has_arc(const Vertex& from, const Vertex& to) const {
    const int e = graph_->edge_between(from, to);
    if (e < 0) {
        throw std::invalid_argument("vertices " + to_string(from) + " and " + to_string(to) +
                                    " are not adjacent");
    }
    return tail_ordinal(e) == graph_->ordinal_of(from);
}

std::size_t Orientation::inverted_edge_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

Orientation Orientation::with_flipped(const std::vector<int>& edge_indices) const {
    std::vector<std::uint8_t> bits = bits_;
    for (int e : edge_indices) {
        bits.at(e) ^= 1;
    }
    return Orientation(graph_, std::move(bits));
}

Parity parity(const Orientation& d) {
    return d.inverted_edge_count() % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<std::vector<int>> DegreeProfile::total_grid() const {
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) grid[i][j] = total[i * cols + j];
    }
    return grid;
}

std::vector<std::vector<int>> DegreeProfile::horizontal_grid() const {
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) grid[i][j] = horizontal[i * cols + j];
    }
    return grid;
}

DegreeProfile degree_profile(const Orientation& d) {
    const RectangularGraph& g = d.graph();
    DegreeProfile profile;
    profile.rows = g.rows();
    profile.cols = g.cols();
    profile.total.assign(static_cast<std::size_t>(g.rows()) * g.cols(), 0);
    profile.horizontal.assign(static_cast<std::size_t>(g.rows()) * g.cols(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Vertex tail = d.tail(e);
        const Vertex head = d.head(e);
        const int cell = cell_index(tail, g.cols());
        ++profile.total[cell];
        if (tail.row == head.row) ++profile.horizontal[cell];
    }
    return profile;
}

std::vector<int> line_out_degrees(const Orientation& d, const Line& line) {
    const RectangularGraph& g = d.graph();
    const std::vector<Vertex> verts = g.line_vertices(line);
    std::vector<int> degs(verts.size(), 0);
    for (std::size_t a = 0; a < verts.size(); ++a) {
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            if (d.has_arc(verts[a], verts[b])) {
                ++degs[a];
            } else {
                ++degs[b];
            }
        }
    }
    return degs;
}

std::vector<std::vector<int>> associated_matrix(const Orientation& d) {
    return degree_profile(d).horizontal_grid();
}

Orientation associated_orientation(const LatinRectangle& rect, const VertexOrder& order) {
    return associated_orientation(rect, RectangularGraph::make(rect.rows(), rect.cols(), order));
}

Orientation associated_orientation(const LatinRectangle& rect,
                                   std::shared_ptr<const RectangularGraph> graph) {
    if (!graph || graph->rows() != rect.rows() || graph->cols() != rect.cols()) {
        throw std::invalid_argument("graph dimensions do not match the rectangle");
    }
    std::vector<std::uint8_t> bits(graph->edge_count(), 0);
    for (int e = 0; e < graph->edge_count(); ++e) {
        const Edge& edge = graph->edges()[e];
        const Vertex a = graph->vertex_at(edge.u);
        const Vertex b = graph->vertex_at(edge.v);
        bool a_is_tail;
        if (a.row == b.row) {
            a_is_tail = rect.at(a.row, a.col) > rect.at(b.row, b.col);  // larger -> smaller
        } else {
            a_is_tail = rect.at(a.row, a.col) < rect.at(b.row, b.col);  // smaller -> larger
        }
        bits[e] = a_is_tail ? 0 : 1;
    }
    return Orientation(std::move(graph), std::move(bits));
}

namespace {

// Witness per the duplicate-degree argument: given tail -> head with equal
// intra-line out-degree, some third vertex u of the line closes the cycle
// with u -> tail and head -> u.
std::optional<Triangle> witness_from_pair(const Orientation& d,
                                          const std::vector<Vertex>& line_verts,
                                          const Vertex& tail, const Vertex& head) {
    const RectangularGraph& g = d.graph();
    const Vertex* best = nullptr;
    int best_rank = 0;
    for (const Vertex& u : line_verts) {
        if (u == tail || u == head) continue;
        if (d.has_arc(u, tail) && d.has_arc(head, u)) {
            const int rank = g.order().rank(u, g.rows(), g.cols());
            if (best == nullptr || rank < best_rank) {
                best = &u;
                best_rank = rank;
            }
        }
    }
    if (best == nullptr) return std::nullopt;
    return Triangle{tail, head, *best};
}

}  // namespace

std::optional<Triangle> has_cyclic_triangle(const Orientation& d) {
    const RectangularGraph& g = d.graph();
    std::vector<Line> lines;
    for (int i = 1; i <= g.rows(); ++i) lines.push_back(Line::row(i));
    for (int j = 1; j <= g.cols(); ++j) lines.push_back(Line::column(j));

    for (const Line& line : lines) {
        const std::vector<Vertex> verts = g.line_vertices(line);
        if (verts.size() < 3) continue;
        const std::vector<int> degs = line_out_degrees(d, line);

        // Least duplicate pair under the graph's vertex order.
        const auto rank = [&](const Vertex& v) { return g.order().rank(v, g.rows(), g.cols()); };
        bool found = false;
        Vertex best_v{}, best_w{};
        for (std::size_t a = 0; a < verts.size(); ++a) {
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                if (degs[a] != degs[b]) continue;
                Vertex v = verts[a], w = verts[b];
                if (rank(w) < rank(v)) std::swap(v, w);
                if (!found || rank(v) < rank(best_v) ||
                    (v == best_v && rank(w) < rank(best_w))) {
                    best_v = v;
                    best_w = w;
                    found = true;
                }
            }
        }
        if (!found) continue;

        const Vertex tail = d.has_arc(best_v, best_w) ? best_v : best_w;
        const Vertex head = tail == best_v ? best_w : best_v;
        const auto witness = witness_from_pair(d, verts, tail, head);
        if (!witness) {
            throw std::logic_error("duplicate out-degree pair without a closing vertex");
        }
        return witness;
    }
    return std::nullopt;
}

}  // namespace dinitz
