#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "dinitz/core.hpp"
#include "dinitz/latin.hpp"
#include "dinitz/orientation.hpp"

namespace dinitz {

inline constexpr std::size_t kDefaultMaxEdges = 36;

/// The out-degree target that makes the triangle-free realization unique.
/// Defined for 1 <= r < n:
///   r-2+j  for j <= n-r+1
///   n-1    for n-r+1 < j <= n-i+1
///   r-1    for j > n-i+1
OutDegreeTarget delta_map(int rows, int cols);

/// The latin rectangle with (i+j-2) mod n as its (i,j) entry; 1 <= r <= n.
LatinRectangle circulant(int rows, int cols);

struct EnumOptions {
    std::size_t max_edges = kDefaultMaxEdges;
    bool override_guard = false;
    int jobs = 1;  // census only; subtree partitioning, deterministic result
};

struct ParityCensus {
    std::uint64_t even_count = 0;
    std::uint64_t odd_count = 0;
    VertexOrder ordering = VertexOrder::lex();

    std::uint64_t gap() const {
        return even_count >= odd_count ? even_count - odd_count
                                       : odd_count - even_count;
    }
    std::uint64_t total() const { return checked_add(even_count, odd_count); }
};

/// Counts even and odd orientations realizing the target out-degrees, by
/// backtracking over the canonical edges with two-sided degree pruning.
/// Refuses graphs above the edge budget unless the guard is overridden.
ParityCensus parity_census(int rows, int cols, const OutDegreeTarget& delta,
                           const VertexOrder& order = VertexOrder::lex(),
                           const EnumOptions& options = {});

/// Invokes fn for every orientation realizing the target. Single-threaded;
/// the visit order is deterministic.
void for_each_realization(const std::shared_ptr<const RectangularGraph>& graph,
                          const OutDegreeTarget& delta, const EnumOptions& options,
                          const std::function<void(const Orientation&)>& fn);

/// All realizations of the target with no cyclic triangle. For
/// delta_map(r, n) this is exactly the orientation associated with the
/// circulant rectangle.
std::vector<Orientation> triangle_free_realizations(
    int rows, int cols, const OutDegreeTarget& delta,
    const VertexOrder& order = VertexOrder::lex(), const EnumOptions& options = {});

/// Record of one application of the parity-flipping involution. The pivot
/// is reported with pivot_v preceding pivot_w in vertex order; tail names
/// whichever of the two the pivot edge pointed out of before the flip.
/// The four sets partition the other vertices of the pivot line by their
/// arcs relative to (tail, head): out_out holds u with tail->u and head->u,
/// out_in holds u with tail->u->head, in_out holds u with u->tail and
/// head->u, in_in holds u with u->tail and u->head.
struct InvolutionTrace {
    Vertex pivot_v, pivot_w;
    Vertex tail;
    Line line;
    std::vector<Vertex> out_out, out_in, in_out, in_in;
    int flipped_edges = 0;
};

/// The parity-flipping involution on triangle-containing orientations:
/// picks the least same-line pair with equal intra-line out-degree and
/// reverses the pivot edge plus all edges between the pair and
/// out_in/in_out. Preserves the out-degree profile, flips parity, keeps a
/// triangle, and applied twice restores the input. Triangle-free input is
/// a precondition violation.
std::pair<Orientation, InvolutionTrace> involution_phi(const Orientation& d);

struct InvolutionReport {
    std::uint64_t realizations = 0;
    std::uint64_t triangle_containing = 0;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::uint64_t even_count = 0;  // over triangle-containing realizations
    std::uint64_t odd_count = 0;
    bool passed = false;
    std::vector<std::string> failure_notes;
};

/// Exhaustive involution check over every triangle-containing realization
/// of delta_map(r, n): involution property, parity flip, degree
/// preservation, triangle retention, pivot stability, odd flip count, and
/// the even/odd balance of the triangle-containing set.
InvolutionReport involution_selfcheck(int rows, int cols,
                                      const VertexOrder& order = VertexOrder::lex(),
                                      const EnumOptions& options = {});

}  // namespace dinitz
