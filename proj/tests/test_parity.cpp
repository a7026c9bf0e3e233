#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"

#include "dinitz/parity.hpp"

using namespace dinitz;

namespace {

Orientation cycle_123() {
    return Orientation::from_arcs(RectangularGraph::make(1, 3),
                                  {{Vertex{1, 1}, Vertex{1, 2}},
                                   {Vertex{1, 2}, Vertex{1, 3}},
                                   {Vertex{1, 3}, Vertex{1, 1}}});
}

Orientation cycle_132() {
    return Orientation::from_arcs(RectangularGraph::make(1, 3),
                                  {{Vertex{1, 1}, Vertex{1, 3}},
                                   {Vertex{1, 3}, Vertex{1, 2}},
                                   {Vertex{1, 2}, Vertex{1, 1}}});
}

std::vector<Orientation> realizations(int r, int n, const OutDegreeTarget& delta,
                                      const VertexOrder& order = VertexOrder::lex()) {
    std::vector<Orientation> out;
    for_each_realization(RectangularGraph::make(r, n, order), delta, {},
                         [&](const Orientation& d) { out.push_back(d); });
    return out;
}

VertexOrder random_relabeling(int r, int n, std::mt19937_64& rng) {
    std::vector<int> ranks(static_cast<std::size_t>(r) * n);
    for (std::size_t k = 0; k < ranks.size(); ++k) ranks[k] = static_cast<int>(k);
    std::shuffle(ranks.begin(), ranks.end(), rng);
    return VertexOrder::custom(std::move(ranks));
}

}  // namespace

TEST_CASE("delta map values") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> expected;
        for (int j = 0; j < n; ++j) expected.push_back(j);
        CHECK(delta_map(1, n).as_grid() == std::vector<std::vector<int>>{expected});
    }
    CHECK(delta_map(2, 3).as_grid() ==
          std::vector<std::vector<int>>{{1, 2, 2}, {1, 2, 1}});
    CHECK(delta_map(3, 4).as_grid() ==
          std::vector<std::vector<int>>{{2, 3, 3, 3}, {2, 3, 3, 2}, {2, 3, 2, 2}});

    CHECK_THROWS_AS(delta_map(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(delta_map(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(delta_map(0, 2), std::invalid_argument);
}

TEST_CASE("delta map sums to the edge count") {
    for (int n = 2; n <= 8; ++n) {
        for (int r = 1; r < n; ++r) {
            CAPTURE(r);
            CAPTURE(n);
            CHECK(delta_map(r, n).sum() == RectangularGraph::expected_edge_count(r, n));
        }
    }
}

TEST_CASE("circulant rectangles") {
    CHECK(circulant(1, 4).grid() == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(circulant(2, 3).grid() == std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 0}});
    CHECK(circulant(3, 4).grid() ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}});
    CHECK_THROWS_AS(circulant(4, 3), std::invalid_argument);
}

TEST_CASE("the circulant's orientation realizes the delta map") {
    for (int n = 2; n <= 8; ++n) {
        for (int r = 1; r < n; ++r) {
            CAPTURE(r);
            CAPTURE(n);
            const DegreeProfile profile =
                degree_profile(associated_orientation(circulant(r, n)));
            CHECK(profile.total_grid() == delta_map(r, n).as_grid());
        }
    }
}

TEST_CASE("census of the single-edge graph") {
    const ParityCensus census = parity_census(1, 2, OutDegreeTarget(1, 2, {0, 1}));
    CHECK(census.even_count == 0);
    CHECK(census.odd_count == 1);
    CHECK(census.gap() == 1);
}

TEST_CASE("census of the 3-vertex row with distinct targets") {
    const ParityCensus census = parity_census(1, 3, OutDegreeTarget(1, 3, {0, 1, 2}));
    CHECK(census.total() == 1);  // the realization is unique
    CHECK(census.gap() == 1);
    CHECK(census.even_count == 0);
    CHECK(census.odd_count == 1);
}

TEST_CASE("census counts frozen at small sizes") {
    const ParityCensus c23 = parity_census(2, 3, delta_map(2, 3));
    CHECK(c23.even_count == 2);
    CHECK(c23.odd_count == 3);

    const ParityCensus c24 = parity_census(2, 4, delta_map(2, 4));
    CHECK(c24.even_count == 7);
    CHECK(c24.odd_count == 6);
}

TEST_CASE("census agrees with the naive oracle") {
    std::mt19937_64 rng(99);
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{
             {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
        CAPTURE(r);
        CAPTURE(n);
        const OutDegreeTarget delta = delta_map(r, n);
        for (const VertexOrder& order : {VertexOrder::lex(), VertexOrder::col_desc(),
                                         random_relabeling(r, n, rng)}) {
            const RectangularGraph g(r, n, order);
            const oracle::NaiveCensus expected = oracle::naive_census(g, delta);
            const ParityCensus actual = parity_census(r, n, delta, order);
            CHECK(actual.even_count == expected.even);
            CHECK(actual.odd_count == expected.odd);
        }
    }

    // An arbitrary non-delta target: both 3-cycles realize (1,1,1).
    const OutDegreeTarget ones(1, 3, {1, 1, 1});
    const ParityCensus c = parity_census(1, 3, ones);
    const oracle::NaiveCensus expected =
        oracle::naive_census(RectangularGraph(1, 3), ones);
    CHECK(c.even_count == expected.even);
    CHECK(c.odd_count == expected.odd);
    CHECK(c.total() == 2);
    CHECK(c.gap() == 0);
}

TEST_CASE("census is empty when the target sum misses the edge count") {
    const ParityCensus census = parity_census(1, 3, OutDegreeTarget(1, 3, {0, 0, 0}));
    CHECK(census.even_count == 0);
    CHECK(census.odd_count == 0);
}

TEST_CASE("census validates dimensions") {
    CHECK_THROWS_AS(parity_census(2, 3, OutDegreeTarget(1, 3, {0, 1, 2})),
                    std::invalid_argument);
}

TEST_CASE("size guard refuses oversized enumerations unless overridden") {
    EnumOptions tight;
    tight.max_edges = 5;
    CHECK_THROWS_AS(parity_census(1, 4, delta_map(1, 4), VertexOrder::lex(), tight),
                    SizeGuardError);
    try {
        parity_census(1, 4, delta_map(1, 4), VertexOrder::lex(), tight);
    } catch (const SizeGuardError& e) {
        CHECK(e.limit() == 5);
        CHECK(e.actual() == 6);
    }

    tight.override_guard = true;
    CHECK(parity_census(1, 4, delta_map(1, 4), VertexOrder::lex(), tight).gap() == 1);

    // (3,5) has 45 edges, over the default guard of 36.
    CHECK_THROWS_AS(parity_census(3, 5, delta_map(3, 5)), SizeGuardError);
}

TEST_CASE("partitioned census matches the single-threaded census") {
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}}) {
        CAPTURE(r);
        CAPTURE(n);
        const OutDegreeTarget delta = delta_map(r, n);
        const ParityCensus reference = parity_census(r, n, delta);
        for (int jobs : {2, 3, 4}) {
            EnumOptions options;
            options.jobs = jobs;
            const ParityCensus parallel =
                parity_census(r, n, delta, VertexOrder::lex(), options);
            CHECK(parallel.even_count == reference.even_count);
            CHECK(parallel.odd_count == reference.odd_count);
        }
    }
}

TEST_CASE("triangle-containing realizations balance out; the gap is triangle-free") {
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 4}}) {
        CAPTURE(r);
        CAPTURE(n);
        const OutDegreeTarget delta = delta_map(r, n);
        std::uint64_t tri_even = 0, tri_odd = 0;
        std::int64_t free_signed = 0;
        for_each_realization(RectangularGraph::make(r, n), delta, {},
                             [&](const Orientation& d) {
                                 const bool even = parity(d) == Parity::Even;
                                 if (has_cyclic_triangle(d)) {
                                     (even ? tri_even : tri_odd) += 1;
                                 } else {
                                     free_signed += even ? 1 : -1;
                                 }
                             });
        CHECK(tri_even == tri_odd);
        const ParityCensus census = parity_census(r, n, delta);
        CHECK(census.gap() == static_cast<std::uint64_t>(
                                  free_signed < 0 ? -free_signed : free_signed));
    }
}

TEST_CASE("triangle-free realizations") {
    const auto unique = triangle_free_realizations(2, 3, delta_map(2, 3));
    REQUIRE(unique.size() == 1);
    CHECK(unique.front() == associated_orientation(circulant(2, 3)));

    CHECK(triangle_free_realizations(1, 3, OutDegreeTarget(1, 3, {1, 1, 1})).empty());

    CHECK(triangle_free_realizations(1, 2, OutDegreeTarget(1, 2, {0, 1})).size() == 1);
}

TEST_CASE("involution on the 3-cycle, step by step") {
    const auto [image, trace] = involution_phi(cycle_123());
    CHECK(image == cycle_132());
    CHECK(trace.pivot_v == Vertex{1, 1});
    CHECK(trace.pivot_w == Vertex{1, 2});
    CHECK(trace.tail == Vertex{1, 1});  // the pivot edge already left v
    CHECK(trace.line == Line::row(1));
    CHECK(trace.in_out == std::vector<Vertex>{Vertex{1, 3}});
    CHECK(trace.out_in.empty());
    CHECK(trace.out_out.empty());
    CHECK(trace.in_in.empty());
    CHECK(trace.flipped_edges == 3);

    // The two 3-cycles swap under the map.
    const auto [back, trace2] = involution_phi(image);
    CHECK(back == cycle_123());
    CHECK(trace2.pivot_v == trace.pivot_v);
    CHECK(trace2.pivot_w == trace.pivot_w);
}

TEST_CASE("involution rejects triangle-free input") {
    CHECK_THROWS_AS(involution_phi(associated_orientation(circulant(2, 3))),
                    std::invalid_argument);
    CHECK_THROWS_AS(involution_phi(associated_orientation(LatinRectangle({{0, 1, 2}}))),
                    std::invalid_argument);
}

TEST_CASE("involution properties over every triangle-containing orientation") {
    // Not restricted to any out-degree target: the map only needs a triangle.
    // Both shipped orders are exercised since pivot selection leans on them.
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{
             {1, 3}, {1, 4}, {1, 5}, {2, 2}, {2, 3}}) {
      for (const VertexOrder& order : {VertexOrder::lex(), VertexOrder::col_desc()}) {
        CAPTURE(r);
        CAPTURE(n);
        const auto g = RectangularGraph::make(r, n, order);
        oracle::all_orientations(g, [&](const Orientation& d) {
            if (!has_cyclic_triangle(d)) return;
            const auto [image, trace] = involution_phi(d);

            CHECK(parity(image) != parity(d));
            CHECK(degree_profile(image).total == degree_profile(d).total);
            CHECK(has_cyclic_triangle(image).has_value());
            CHECK(trace.flipped_edges % 2 == 1);
            CHECK(trace.flipped_edges ==
                  2 * static_cast<int>(trace.out_in.size() + trace.in_out.size()) + 1);
            CHECK(trace.in_out.size() == trace.out_in.size() + 1);

            const auto [back, trace2] = involution_phi(image);
            CHECK(back == d);
            CHECK(trace2.pivot_v == trace.pivot_v);
            CHECK(trace2.pivot_w == trace.pivot_w);
            CHECK(trace2.line == trace.line);
        });
      }
    }
}

TEST_CASE("involution self-check over the delta-map census domain") {
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}}) {
        for (const VertexOrder& order : {VertexOrder::lex(), VertexOrder::col_desc()}) {
            CAPTURE(r);
            CAPTURE(n);
            const InvolutionReport report = involution_selfcheck(r, n, order);
            CHECK(report.passed);
            CHECK(report.failures == 0);
            CHECK(report.even_count == report.odd_count);
        }
    }

    const InvolutionReport at23 = involution_selfcheck(2, 3);
    CHECK(at23.realizations == 5);
    CHECK(at23.triangle_containing == 4);
    CHECK(at23.checked == 4);
    CHECK(at23.even_count == 2);
    CHECK(at23.odd_count == 2);
}

TEST_CASE("the census gap is invariant under relabeling") {
    std::mt19937_64 rng(20260810);
    for (const auto& [r, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}}) {
        CAPTURE(r);
        CAPTURE(n);
        const OutDegreeTarget delta = delta_map(r, n);
        const std::uint64_t reference = parity_census(r, n, delta).gap();
        CHECK(parity_census(r, n, delta, VertexOrder::col_desc()).gap() == reference);
        for (int trial = 0; trial < 10; ++trial) {
            const VertexOrder order = random_relabeling(r, n, rng);
            CHECK(parity_census(r, n, delta, order).gap() == reference);
        }
    }
}
