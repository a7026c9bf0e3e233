#include "dinitz/parity.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace dinitz {

OutDegreeTarget delta_map(int rows, int cols) {
    if (rows < 1 || rows >= cols) {
        throw std::invalid_argument("delta map requires 1 <= r < n");
    }
    std::vector<int> values(static_cast<std::size_t>(rows) * cols);
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            int v;
            if (j <= cols - rows + 1) {
                v = rows - 2 + j;
            } else if (j <= cols - i + 1) {
                v = cols - 1;
            } else {
                v = rows - 1;
            }
            values[(i - 1) * cols + (j - 1)] = v;
        }
    }
    return OutDegreeTarget(rows, cols, std::move(values));
}

LatinRectangle circulant(int rows, int cols) {
    if (rows < 1 || rows > cols) {
        throw std::invalid_argument("circulant requires 1 <= r <= n");
    }
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            grid[i - 1][j - 1] = (i + j - 2) % cols;
        }
    }
    return LatinRectangle(std::move(grid));
}

namespace {

struct EnumState {
    const RectangularGraph* graph = nullptr;
    std::vector<int> target;     // by ordinal
    std::vector<int> out;        // committed out-degree by ordinal
    std::vector<int> remaining;  // undecided incident edges by ordinal
    std::vector<std::uint8_t> bits;

    explicit EnumState(const RectangularGraph& g, const OutDegreeTarget& delta)
        : graph(&g),
          target(g.vertex_count()),
          out(g.vertex_count(), 0),
          remaining(g.vertex_count(), g.vertex_degree()),
          bits(g.edge_count(), 0) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            target[v] = delta.value(g.vertex_at(v));
        }
    }

    // Replays the first `depth` edge decisions recorded in `prefix`.
    void apply_prefix(const std::vector<std::uint8_t>& prefix, int depth) {
        for (int k = 0; k < depth; ++k) {
            const Edge& e = graph->edges()[k];
            bits[k] = prefix[k];
            ++out[prefix[k] ? e.v : e.u];
            --remaining[e.u];
            --remaining[e.v];
        }
    }
};

// Backtracking over edges k.. with two-sided pruning: a vertex may not
// exceed its target, and must still be able to reach it with the edges
// left undecided.
template <typename Leaf>
void enumerate(EnumState& st, int k, int inversions, const Leaf& leaf) {
    const auto& edges = st.graph->edges();
    if (k == static_cast<int>(edges.size())) {
        leaf(st.bits, inversions);
        return;
    }
    const int u = edges[k].u;
    const int v = edges[k].v;
    --st.remaining[u];
    --st.remaining[v];

    // u -> v
    if (st.out[u] + 1 <= st.target[u] && st.out[u] + 1 + st.remaining[u] >= st.target[u] &&
        st.out[v] + st.remaining[v] >= st.target[v]) {
        ++st.out[u];
        st.bits[k] = 0;
        enumerate(st, k + 1, inversions, leaf);
        --st.out[u];
    }
    // v -> u, which inverts the edge
    if (st.out[v] + 1 <= st.target[v] && st.out[v] + 1 + st.remaining[v] >= st.target[v] &&
        st.out[u] + st.remaining[u] >= st.target[u]) {
        ++st.out[v];
        st.bits[k] = 1;
        enumerate(st, k + 1, inversions + 1, leaf);
        --st.out[v];
    }

    ++st.remaining[u];
    ++st.remaining[v];
}

void check_guard(const RectangularGraph& g, const EnumOptions& options) {
    const auto edges = static_cast<std::size_t>(g.edge_count());
    if (edges > options.max_edges && !options.override_guard) {
        throw SizeGuardError(options.max_edges, edges);
    }
}

void check_dims(const RectangularGraph& g, const OutDegreeTarget& delta) {
    if (delta.rows() != g.rows() || delta.cols() != g.cols()) {
        throw std::invalid_argument("out-degree target does not match the graph");
    }
}

ParityCensus census_single(const RectangularGraph& g, const OutDegreeTarget& delta) {
    ParityCensus census;
    census.ordering = g.order();
    EnumState st(g, delta);
    enumerate(st, 0, 0, [&](const std::vector<std::uint8_t>&, int inversions) {
        auto& count = inversions % 2 == 0 ? census.even_count : census.odd_count;
        count = checked_add(count, 1);
    });
    return census;
}

// Partitions the search tree at a fixed depth and hands the surviving
// prefixes to worker threads. Counts add up, so the result matches the
// single-threaded census no matter how prefixes land on threads.
ParityCensus census_parallel(const RectangularGraph& g, const OutDegreeTarget& delta,
                             int jobs) {
    int depth = 0;
    while (depth < g.edge_count() && (1 << depth) < 8 * jobs && depth < 14) ++depth;

    std::vector<std::vector<std::uint8_t>> prefixes;
    {
        // The prefix sweep reuses the pruned recursion with a leaf planted
        // at `depth`; inversions are recomputed per prefix later.
        EnumState st(g, delta);
        std::function<void(int)> rec = [&](int k) {
            if (k == depth) {
                prefixes.emplace_back(st.bits.begin(), st.bits.begin() + depth);
                return;
            }
            const int u = g.edges()[k].u;
            const int v = g.edges()[k].v;
            --st.remaining[u];
            --st.remaining[v];
            if (st.out[u] + 1 <= st.target[u] &&
                st.out[u] + 1 + st.remaining[u] >= st.target[u] &&
                st.out[v] + st.remaining[v] >= st.target[v]) {
                ++st.out[u];
                st.bits[k] = 0;
                rec(k + 1);
                --st.out[u];
            }
            if (st.out[v] + 1 <= st.target[v] &&
                st.out[v] + 1 + st.remaining[v] >= st.target[v] &&
                st.out[u] + st.remaining[u] >= st.target[u]) {
                ++st.out[v];
                st.bits[k] = 1;
                rec(k + 1);
                --st.out[v];
            }
            ++st.remaining[u];
            ++st.remaining[v];
        };
        rec(0);
    }

    std::vector<ParityCensus> partial(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= prefixes.size()) return;
            EnumState st(g, delta);
            st.apply_prefix(prefixes[idx], depth);
            const int base_inversions = static_cast<int>(
                std::count(prefixes[idx].begin(), prefixes[idx].end(), 1));
            ParityCensus& out = partial[idx];
            enumerate(st, depth, base_inversions,
                      [&](const std::vector<std::uint8_t>&, int inversions) {
                          auto& count =
                              inversions % 2 == 0 ? out.even_count : out.odd_count;
                          count = checked_add(count, 1);
                      });
        }
    };
    std::vector<std::thread> pool;
    const int thread_count =
        std::max(1, std::min(jobs, static_cast<int>(prefixes.size())));
    pool.reserve(thread_count);
    for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    ParityCensus census;
    census.ordering = g.order();
    for (const ParityCensus& p : partial) {
        census.even_count = checked_add(census.even_count, p.even_count);
        census.odd_count = checked_add(census.odd_count, p.odd_count);
    }
    return census;
}

}  // namespace

ParityCensus parity_census(int rows, int cols, const OutDegreeTarget& delta,
                           const VertexOrder& order, const EnumOptions& options) {
    const auto graph = RectangularGraph::make(rows, cols, order);
    check_dims(*graph, delta);
    check_guard(*graph, options);
    if (options.jobs > 1) return census_parallel(*graph, delta, options.jobs);
    return census_single(*graph, delta);
}

void for_each_realization(const std::shared_ptr<const RectangularGraph>& graph,
                          const OutDegreeTarget& delta, const EnumOptions& options,
                          const std::function<void(const Orientation&)>& fn) {
    check_dims(*graph, delta);
    check_guard(*graph, options);
    EnumState st(*graph, delta);
    enumerate(st, 0, 0, [&](const std::vector<std::uint8_t>& bits, int) {
        fn(Orientation(graph, bits));
    });
}

std::vector<Orientation> triangle_free_realizations(int rows, int cols,
                                                    const OutDegreeTarget& delta,
                                                    const VertexOrder& order,
                                                    const EnumOptions& options) {
    const auto graph = RectangularGraph::make(rows, cols, order);
    std::vector<Orientation> out;
    for_each_realization(graph, delta, options, [&](const Orientation& d) {
        if (!has_cyclic_triangle(d)) out.push_back(d);
    });
    return out;
}

namespace {

struct PivotChoice {
    Vertex v, w;  // v precedes w in vertex order
    Line line;
};

// Least pair of same-line vertices with equal intra-line out-degree; pairs
// from rows and columns compete in one pool, compared as ordered vertex
// pairs under the graph's order.
std::optional<PivotChoice> least_duplicate_pair(const Orientation& d) {
    const RectangularGraph& g = d.graph();
    const auto rank = [&](const Vertex& v) { return g.order().rank(v, g.rows(), g.cols()); };

    std::optional<PivotChoice> best;
    const auto consider = [&](const Line& line) {
        const std::vector<Vertex> verts = g.line_vertices(line);
        const std::vector<int> degs = line_out_degrees(d, line);
        for (std::size_t a = 0; a < verts.size(); ++a) {
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                if (degs[a] != degs[b]) continue;
                Vertex v = verts[a], w = verts[b];
                if (rank(w) < rank(v)) std::swap(v, w);
                if (!best || rank(v) < rank(best->v) ||
                    (v == best->v && rank(w) < rank(best->w))) {
                    best = PivotChoice{v, w, line};
                }
            }
        }
    };
    for (int i = 1; i <= g.rows(); ++i) consider(Line::row(i));
    for (int j = 1; j <= g.cols(); ++j) consider(Line::column(j));
    return best;
}

}  // namespace

std::pair<Orientation, InvolutionTrace> involution_phi(const Orientation& d) {
    const RectangularGraph& g = d.graph();
    const auto pivot = least_duplicate_pair(d);
    if (!pivot) {
        throw std::invalid_argument(
            "involution requires an orientation containing a cyclic triangle");
    }

    // The construction assumes the pivot edge leaves one named endpoint;
    // when it points the other way the two roles swap.
    const Vertex tail = d.has_arc(pivot->v, pivot->w) ? pivot->v : pivot->w;
    const Vertex head = tail == pivot->v ? pivot->w : pivot->v;

    InvolutionTrace trace;
    trace.pivot_v = pivot->v;
    trace.pivot_w = pivot->w;
    trace.tail = tail;
    trace.line = pivot->line;

    std::vector<int> flips;
    flips.push_back(g.edge_between(tail, head));
    for (const Vertex& u : g.line_vertices(pivot->line)) {
        if (u == tail || u == head) continue;
        const bool tail_out = d.has_arc(tail, u);
        const bool head_out = d.has_arc(head, u);
        if (tail_out && head_out) {
            trace.out_out.push_back(u);
        } else if (tail_out && !head_out) {
            trace.out_in.push_back(u);
            flips.push_back(g.edge_between(tail, u));
            flips.push_back(g.edge_between(head, u));
        } else if (!tail_out && head_out) {
            trace.in_out.push_back(u);
            flips.push_back(g.edge_between(tail, u));
            flips.push_back(g.edge_between(head, u));
        } else {
            trace.in_in.push_back(u);
        }
    }
    trace.flipped_edges = static_cast<int>(flips.size());

    return {d.with_flipped(flips), std::move(trace)};
}

InvolutionReport involution_selfcheck(int rows, int cols, const VertexOrder& order,
                                      const EnumOptions& options) {
    const auto graph = RectangularGraph::make(rows, cols, order);
    const OutDegreeTarget delta = delta_map(rows, cols);
    InvolutionReport report;

    const auto note = [&](const Orientation&, const std::string& what) {
        ++report.failures;
        if (report.failure_notes.size() < 20) report.failure_notes.push_back(what);
    };

    for_each_realization(graph, delta, options, [&](const Orientation& d) {
        ++report.realizations;
        if (!has_cyclic_triangle(d)) return;
        ++report.triangle_containing;
        ++report.checked;
        if (parity(d) == Parity::Even) {
            ++report.even_count;
        } else {
            ++report.odd_count;
        }

        const auto [image, trace] = involution_phi(d);
        if (parity(image) == parity(d)) note(d, "parity did not flip");
        if (degree_profile(image).total != degree_profile(d).total) {
            note(d, "out-degree profile changed");
        }
        if (!has_cyclic_triangle(image)) note(d, "image lost its triangle");
        if (trace.flipped_edges % 2 == 0) note(d, "flipped an even number of edges");
        const int boundary = static_cast<int>(trace.out_in.size() + trace.in_out.size());
        if (trace.flipped_edges != 2 * boundary + 1) {
            note(d, "flip count is not 2|V_oi u V_io| + 1");
        }
        if (trace.in_out.size() != trace.out_in.size() + 1) {
            note(d, "|V_io| != |V_oi| + 1");
        }

        const auto [back, trace2] = involution_phi(image);
        if (!(back == d)) note(d, "applying the map twice did not restore the input");
        if (!(trace2.pivot_v == trace.pivot_v) || !(trace2.pivot_w == trace.pivot_w)) {
            note(d, "pivot pair moved under the map");
        }
    });

    if (report.even_count != report.odd_count) {
        ++report.failures;
        std::ostringstream msg;
        msg << "triangle-containing census is unbalanced: even=" << report.even_count
            << " odd=" << report.odd_count;
        report.failure_notes.push_back(msg.str());
    }
    report.passed = report.failures == 0;
    return report;
}

}  // namespace dinitz
