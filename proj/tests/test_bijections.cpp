#include "graph_helpers.hpp"

#include "parking/bijections.hpp"
#include "parking/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace parking;
using parking::testing::example_3112_graph;
using parking::testing::make_graph;

namespace {

ParkingFunction pf(std::vector<int> v) { return ParkingFunction(std::move(v)); }

RationalPoint point(std::initializer_list<const char*> coords) {
    std::vector<Rational> out;
    for (const char* c : coords) out.push_back(parse_rational(c));
    return RationalPoint(std::move(out));
}

std::vector<int> ones_to(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = -(i + 1);
    return v;
}

ParkingFunction random_parking_function(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> entry(1, n);
    std::vector<int> seq(n);
    while (true) {
        for (int& e : seq) e = entry(rng);
        if (check_by_sort(seq)) return ParkingFunction(seq);
    }
}

}  // namespace

TEST_CASE("source priority vector validation") {
    CHECK(SourcePriorityVector({-2, -1, -3}).priority(3) == 3);
    CHECK_THROWS_AS(SourcePriorityVector({-1, -1, -3}), InvariantError);
    CHECK_THROWS_AS(SourcePriorityVector({-1, 2}), InvariantError);
    CHECK_THROWS_AS(SourcePriorityVector({0, -1}), InvariantError);
}

TEST_CASE("phi on small examples") {
    CHECK(phi(ParkingGraph::certify(example_3112_graph())) == pf({3, 1, 1, 2}));
    for (int n = 1; n <= 5; ++n) {
        CHECK(phi(ParkingGraph::certify(MixedGraph::uniform(n, EdgeKind::Downish))) ==
              ParkingFunction(std::vector<int>(n, 1)));
    }
    CHECK(phi(ParkingGraph::certify(MixedGraph::uniform(3, EdgeKind::Down))) == pf({3, 2, 1}));
    CHECK(phi(ParkingGraph::certify(MixedGraph::uniform(3, EdgeKind::Up))) == pf({1, 2, 3}));
}

TEST_CASE("phi_inverse of (3,1,1,2) follows the documented construction") {
    const auto result = phi_inverse(pf({3, 1, 1, 2}));
    CHECK(result.graph.graph() == example_3112_graph());
    CHECK(result.priority.values() == std::vector<int>{-1, -2, -4, -3});
    CHECK(result.guard_activations == 0);

    const auto& events = result.trace.events;
    REQUIRE(events.size() == 7);
    const std::vector<std::tuple<bool, int, std::vector<int>>> steps{
        {true, 3, {4}}, {true, 4, {}}, {true, 2, {}}, {false, 3, {1}}, {false, 4, {1}}, {true, 1, {}}};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& [up, feeder, targets] = steps[i];
        CAPTURE(i);
        if (up) {
            REQUIRE(std::holds_alternative<UpStep>(events[i]));
            CHECK(std::get<UpStep>(events[i]).feeder == feeder);
            CHECK(std::get<UpStep>(events[i]).targets == targets);
        } else {
            REQUIRE(std::holds_alternative<DownStep>(events[i]));
            const auto& d = std::get<DownStep>(events[i]);
            CHECK(d.feeder == feeder);
            CHECK(d.targets == targets);
            CHECK(std::find(d.candidates.begin(), d.candidates.end(), feeder) != d.candidates.end());
        }
    }
    REQUIRE(std::holds_alternative<Finalize>(events.back()));
    CHECK(std::get<Finalize>(events.back()).downish ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}});
}

TEST_CASE("phi_inverse of (2,1,1) and of the all-ones sequence") {
    const auto r = phi_inverse(pf({2, 1, 1}));
    CHECK(r.graph.graph() == make_graph(3, {{1, 3, EdgeKind::Down}}));
    CHECK(r.priority.values() == std::vector<int>{-1, -2, -3});

    for (int n = 1; n <= 6; ++n) {
        const auto ones = phi_inverse(ParkingFunction(std::vector<int>(n, 1)));
        CHECK(ones.graph.graph() == MixedGraph::uniform(n, EdgeKind::Downish));
        CHECK(ones.priority.values() == ones_to(n));
    }
}

TEST_CASE("phi and phi_inverse are mutually inverse, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::set<MixedGraph> seen;
        for_each_parking_function(n, [&](const ParkingFunction& x) {
            const auto r = phi_inverse(x);
            REQUIRE(phi(r.graph) == x);
            REQUIRE(in_degrees_mixed(r.graph.graph()) == [&] {
                std::vector<int> d(x.entries());
                for (int& e : d) --e;
                return d;
            }());
            REQUIRE(seen.insert(r.graph.graph()).second);
            REQUIRE(r.guard_activations == 0);
        });
        CHECK(seen.size() == static_cast<std::size_t>(count_parking_functions(n)));
    }
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_parking_graphs(n)) {
            REQUIRE(phi_inverse(phi(g)).graph == g);
        }
    }
}

TEST_CASE("source priorities follow oriented in-degrees") {
    for (int n = 1; n <= 5; ++n) {
        for_each_parking_function(n, [&](const ParkingFunction& x) {
            const auto r = phi_inverse(x);
            const auto deg = in_degrees_oriented(r.graph.graph());
            // larger |s| means fewer oriented in-arcs
            for (int a = 1; a <= n; ++a) {
                for (int b = 1; b <= n; ++b) {
                    if (r.priority.priority(a) < r.priority.priority(b)) REQUIRE(deg[a - 1] > deg[b - 1]);
                }
            }
        });
    }
}

TEST_CASE("psi translates edge kinds into sign patterns") {
    CHECK(sign_of_kind(EdgeKind::Down) == Sign::Above);
    CHECK(sign_of_kind(EdgeKind::Downish) == Sign::Between);
    CHECK(sign_of_kind(EdgeKind::Up) == Sign::Below);
    for (Sign s : {Sign::Below, Sign::Between, Sign::Above}) CHECK(sign_of_kind(kind_of_sign(s)) == s);

    const auto r = psi(ParkingGraph::certify(example_3112_graph()));
    RegionSignVector expected = RegionSignVector::uniform(4, Sign::Between);
    expected.set_sign(3, 4, Sign::Below);
    expected.set_sign(1, 3, Sign::Above);
    expected.set_sign(1, 4, Sign::Above);
    CHECK(r.signs == expected);
    CHECK(r.witness.verified());
    CHECK(system_of_sign_vector(r.signs).strictly_satisfied_by(r.witness.point()));
}

TEST_CASE("psi_inverse of points and sign vectors") {
    CHECK(psi_inverse(point({"6/5", "1/2", "0"})).graph() == make_graph(3, {{1, 3, EdgeKind::Down}}));
    CHECK(psi_inverse(point({"2/3", "1/3", "0"})).graph() == MixedGraph::uniform(3, EdgeKind::Downish));
    CHECK_THROWS_AS(psi_inverse(point({"0", "0", "0"})), OnHyperplaneError);
    CHECK_THROWS_AS(psi_inverse(point({"1", "1/2", "0"})), OnHyperplaneError);

    const RegionSignVector cyclic(3, {Sign::Below, Sign::Above, Sign::Below});
    CHECK_THROWS_AS(psi_inverse(cyclic), PreconditionError);
    CHECK_THROWS_AS(pak_stanley_label(cyclic), PreconditionError);
}

TEST_CASE("Pak-Stanley labels") {
    CHECK(pak_stanley_label(point({"6/5", "1/2", "0"})) == pf({2, 1, 1}));
    CHECK(pak_stanley_label(point({"2/3", "1/3", "0"})) == pf({1, 1, 1}));
    CHECK(pak_stanley_label(RegionSignVector::uniform(3, Sign::Above)) == pf({3, 2, 1}));
    CHECK(pak_stanley_label(RegionSignVector::uniform(3, Sign::Below)) == pf({1, 2, 3}));
    CHECK(pak_stanley_label(point({"10", "5", "0"})) == pf({3, 2, 1}));
}

TEST_CASE("Pak-Stanley labelling is a bijection onto parking functions, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        std::set<ParkingFunction> labels;
        for (const auto& region : enumerate_regions(n)) {
            labels.insert(pak_stanley_label(region.signs));
            REQUIRE(pak_stanley_label(region.witness.point()) == pak_stanley_label(region.signs));
        }
        const auto all = enumerate_parking_functions(n);
        CHECK(std::vector<ParkingFunction>(labels.begin(), labels.end()) == all);
    }
}

TEST_CASE("graph to region round trip, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& g : enumerate_parking_graphs(n)) {
            const auto r = psi(g);
            REQUIRE(r.witness.verified());
            REQUIRE(psi_inverse(r.signs) == g);
            REQUIRE(psi_inverse(r.witness.point()) == g);
        }
    }
}

TEST_CASE("crossing one wall moves one label entry by one") {
    for (int n = 2; n <= 4; ++n) {
        std::map<RegionSignVector, ParkingFunction> label;
        for (const auto& r : enumerate_regions(n)) label.emplace(r.signs, pak_stanley_label(r.signs));
        for (const auto& [sv, x] : label) {
            if (sv.n() < 2) continue;
            for (const auto& [j, k] : canonical_pairs(n)) {
                if (sv.sign(j, k) != Sign::Between) continue;
                for (Sign s : {Sign::Above, Sign::Below}) {
                    RegionSignVector next = sv;
                    next.set_sign(j, k, s);
                    const auto it = label.find(next);
                    if (it == label.end()) continue;
                    std::vector<int> expected = x.entries();
                    ++expected[(s == Sign::Above ? j : k) - 1];
                    REQUIRE(it->second.entries() == expected);
                }
            }
        }
    }
}

TEST_CASE("random larger parking functions survive every bijection") {
    std::mt19937 rng(20140907);
    for (int n : {7, 8}) {
        for (int trial = 0; trial < 150; ++trial) {
            const auto x = random_parking_function(n, rng);
            const auto r = phi_inverse(x);
            REQUIRE(r.guard_activations == 0);
            REQUIRE(phi(r.graph) == x);
            REQUIRE(std::holds_alternative<ParkingGraph>(check_source_sink(r.graph.graph())));
            const auto region = psi(r.graph);
            REQUIRE(region.witness.verified());
            REQUIRE(pak_stanley_label(region.witness.point()) == x);
        }
    }
}
