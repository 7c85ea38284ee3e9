#include "graph_helpers.hpp"

#include "parking/errors.hpp"
#include "parking/mixed_graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <queue>

using namespace parking;
using parking::testing::all_mixed_graphs;
using parking::testing::make_graph;

namespace {

using E = EdgeKind;

// Kahn's algorithm on the full digraph.
bool acyclic_by_topological_sort(const Digraph& d) {
    auto indeg = d.in_degrees();
    std::queue<int> ready;
    for (int v = 1; v <= d.n(); ++v) {
        if (indeg[v - 1] == 0) ready.push(v);
    }
    int removed = 0;
    while (!ready.empty()) {
        const int u = ready.front();
        ready.pop();
        ++removed;
        for (int v = 1; v <= d.n(); ++v) {
            if (d.has_arc(u, v) && --indeg[v - 1] == 0) ready.push(v);
        }
    }
    return removed == d.n();
}

// The cyclic example: down 1<-2, up 1->3, downish 23.
MixedGraph cyclic_triangle() { return make_graph(3, {{1, 2, E::Down}, {1, 3, E::Up}, {2, 3, E::Downish}}); }

// Left-hand graph of the (3,1,1,2) example; the only complete mixed graph with mixed
// in-degrees (2,0,0,1) in which {2,3,4} is a cycle and {1,2,4} breaks the downish clause.
MixedGraph rejected_3112_graph() {
    return make_graph(4, {{1, 2, E::Downish},
                          {1, 3, E::Down},
                          {1, 4, E::Down},
                          {2, 3, E::Downish},
                          {2, 4, E::Up},
                          {3, 4, E::Downish}});
}

}  // namespace

TEST_CASE("canonical pair indexing") {
    CHECK(pair_count(1) == 0);
    CHECK(pair_count(4) == 6);
    const auto& pairs = canonical_pairs(4);
    REQUIRE(pairs.size() == 6);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(pair_index(4, pairs[i].first, pairs[i].second) == i);
    }
    CHECK(pairs.front() == std::pair{1, 2});
    CHECK(pairs.back() == std::pair{3, 4});
    CHECK_THROWS_AS(pair_index(4, 2, 2), ValidationError);
    CHECK_THROWS_AS(pair_index(4, 3, 5), ValidationError);
}

TEST_CASE("mixed graph shape is validated") {
    CHECK_THROWS_AS(MixedGraph(3, {E::Up, E::Up}), ValidationError);
    CHECK_THROWS_AS(MixedGraph(0, {}), ValidationError);
    CHECK_NOTHROW(MixedGraph(1, {}));
}

TEST_CASE("orient") {
    CHECK(orient(cyclic_triangle()).arcs() ==
          std::vector<std::pair<int, int>>{{1, 3}, {2, 1}, {3, 2}});
    CHECK(orient(MixedGraph::uniform(3, E::Downish)).arcs() ==
          std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}});
    CHECK(orient(MixedGraph::uniform(3, E::Up)).arcs() ==
          std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("mixed in-degrees") {
    CHECK(in_degrees_mixed(parking::testing::example_3112_graph()) == std::vector<int>{2, 0, 0, 1});
    for (int n = 1; n <= 6; ++n) {
        CHECK(in_degrees_mixed(MixedGraph::uniform(n, E::Downish)) ==
              std::vector<int>(static_cast<std::size_t>(n), 0));
    }
    CHECK(in_degrees_mixed(MixedGraph::uniform(3, E::Down)) == std::vector<int>{2, 1, 0});
}

TEST_CASE("oriented in-degrees") {
    CHECK(in_degrees_oriented(MixedGraph::uniform(3, E::Downish)) == std::vector<int>{2, 1, 0});
    CHECK(in_degrees_oriented(cyclic_triangle()) == std::vector<int>{1, 1, 1});
}

TEST_CASE("triangle acyclicity") {
    CHECK_FALSE(is_acyclic_by_triangles(cyclic_triangle()));
    CHECK(is_acyclic_by_triangles(MixedGraph::uniform(5, E::Up)));
}

TEST_CASE("triangle acyclicity matches topological sort on every mixed graph, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : all_mixed_graphs(n)) {
            REQUIRE(is_acyclic_by_triangles(g) == acyclic_by_topological_sort(orient(g)));
        }
    }
}

TEST_CASE("mixed in-degrees are dominated by oriented in-degrees") {
    for (const auto& g : all_mixed_graphs(4)) {
        const auto mixed = in_degrees_mixed(g);
        const auto oriented = in_degrees_oriented(g);
        for (int v = 0; v < 4; ++v) REQUIRE(mixed[v] <= oriented[v]);
    }
}

TEST_CASE("source-sink check on the (3,1,1,2) example graphs") {
    const MixedGraph left = rejected_3112_graph();
    CHECK(in_degrees_mixed(left) == std::vector<int>{2, 0, 0, 1});

    const auto result = check_source_sink(left);
    REQUIRE(std::holds_alternative<Violation>(result));
    CHECK(std::get<Violation>(result) ==
          Violation{Violation::Kind::DownishSourceSink, {1, 2, 4}});
    CHECK(all_violations(left) ==
          std::vector<Violation>{{Violation::Kind::DownishSourceSink, {1, 2, 4}},
                                 {Violation::Kind::Cycle, {2, 3, 4}}});

    CHECK(std::holds_alternative<ParkingGraph>(
        check_source_sink(parking::testing::example_3112_graph())));
}

TEST_CASE("source-sink check accepts all-downish and reports cycles") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(std::holds_alternative<ParkingGraph>(
            check_source_sink(MixedGraph::uniform(n, E::Downish))));
    }
    const auto result = check_source_sink(cyclic_triangle());
    REQUIRE(std::holds_alternative<Violation>(result));
    CHECK(std::get<Violation>(result).kind == Violation::Kind::Cycle);
    CHECK_THROWS_AS(ParkingGraph::certify(cyclic_triangle()), PreconditionError);
}

TEST_CASE("a triangle with a down edge whose source and sink are joined by a down edge is fine") {
    // 1<-3 down, 12 and 23 downish: source 3, sink 1, joined by the down edge
    CHECK(std::holds_alternative<ParkingGraph>(check_source_sink(
        make_graph(3, {{1, 3, E::Down}}))));
    // 1<-2 down, 13 and 23 downish: source 3, sink 1 joined by downish 13
    CHECK(std::holds_alternative<Violation>(check_source_sink(
        make_graph(3, {{1, 2, E::Down}}))));
}

TEST_CASE("parking graph enumeration counts") {
    CHECK(enumerate_parking_graphs(1).size() == 1);
    CHECK(enumerate_parking_graphs(2).size() == 3);
    CHECK(all_mixed_graphs(3).size() == 27);
    CHECK(enumerate_parking_graphs(3).size() == 16);
    CHECK(enumerate_parking_graphs(4).size() == 125);
    CHECK(enumerate_parking_graphs(5).size() == 1296);
    CHECK_THROWS_AS(enumerate_parking_graphs(7), ResourceLimitError);
}

TEST_CASE("enumeration order and partitioning") {
    const auto all = enumerate_parking_graphs(4);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::vector<ParkingGraph> joined;
    for (E first : {E::Up, E::Downish, E::Down}) {
        for_each_parking_graph_with_first(4, first,
                                          [&](const ParkingGraph& p) { joined.push_back(p); });
    }
    CHECK(joined == all);
}

TEST_CASE("oriented in-degrees of parking graphs are permutations, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate_parking_graphs(n)) {
            auto d = in_degrees_oriented(p.graph());
            std::sort(d.begin(), d.end());
            for (int i = 0; i < n; ++i) REQUIRE(d[i] == i);
        }
    }
}
