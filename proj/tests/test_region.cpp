#include "parking/errors.hpp"
#include "parking/mixed_graph.hpp"
#include "parking/region.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace parking;

namespace {

using Rel = DifferenceConstraint::Relation;

RationalPoint point(std::initializer_list<const char*> coords) {
    std::vector<Rational> out;
    for (const char* c : coords) out.push_back(parse_rational(c));
    return RationalPoint(std::move(out));
}

RegionSignVector signs3(Sign s12, Sign s13, Sign s23) { return RegionSignVector(3, {s12, s13, s23}); }

// Independent audit of a negative-cycle certificate: rewrite each strict constraint as
// x_head - x_tail < w, require the heads and tails to telescope around a cycle, and require
// sum(w) <= 0, which contradicts 0 = sum(x_head - x_tail) < sum(w).
bool certificate_is_contradiction(const DifferenceSystem& sys, const Infeasible& cert) {
    if (cert.cycle.empty()) return false;
    struct Upper { int tail; int head; Rational w; };
    std::vector<Upper> chain;
    for (std::size_t idx : cert.cycle) {
        const auto& c = sys.constraints().at(idx);
        if (c.relation == Rel::Less) {
            chain.push_back({c.k, c.j, c.bound});
        } else {
            chain.push_back({c.j, c.k, -c.bound});
        }
    }
    Rational sum = 0;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i].head != chain[(i + 1) % chain.size()].tail) return false;
        sum += chain[i].w;
    }
    return sum <= 0;
}

}  // namespace

TEST_CASE("rational text form") {
    CHECK(to_string(parse_rational("6/5")) == "6/5");
    CHECK(to_string(parse_rational("4/6")) == "2/3");
    CHECK(to_string(parse_rational("-3/1")) == "-3");
    CHECK(to_string(parse_rational(" 0 ")) == "0");
    CHECK_THROWS_AS(parse_rational("2/-4"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
    CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
    CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("system of a sign vector") {
    const auto two = system_of_sign_vector(RegionSignVector(2, {Sign::Between}));
    CHECK(two.constraints() == std::vector<DifferenceConstraint>{{1, 2, Rel::Greater, 0},
                                                                 {1, 2, Rel::Less, 1}});
    CHECK(system_of_sign_vector(RegionSignVector::uniform(3, Sign::Between)).constraints().size() == 6);
    CHECK(system_of_sign_vector(signs3(Sign::Between, Sign::Above, Sign::Between)).constraints() ==
          std::vector<DifferenceConstraint>{{1, 2, Rel::Greater, 0},
                                            {1, 2, Rel::Less, 1},
                                            {1, 3, Rel::Greater, 1},
                                            {2, 3, Rel::Greater, 0},
                                            {2, 3, Rel::Less, 1}});
}

TEST_CASE("central region has a verified witness") {
    const auto sys = system_of_sign_vector(RegionSignVector::uniform(3, Sign::Between));
    CHECK(sys.strictly_satisfied_by(point({"2/3", "1/3", "0"})));

    const auto result = feasible_interior(sys);
    REQUIRE(std::holds_alternative<Witness>(result));
    const auto& w = std::get<Witness>(result);
    CHECK(w.verified());
    const auto& x = w.point();
    CHECK(x[1] > x[2]);
    CHECK(x[2] > x[3]);
    CHECK(x[3] > x[1] - 1);
}

TEST_CASE("cyclic sign pattern is infeasible with an auditable certificate") {
    const auto sys = system_of_sign_vector(signs3(Sign::Below, Sign::Above, Sign::Below));
    const auto result = feasible_interior(sys);
    REQUIRE(std::holds_alternative<Infeasible>(result));
    CHECK(certificate_is_contradiction(sys, std::get<Infeasible>(result)));
}

TEST_CASE("region of P(2,1,1)") {
    const auto sys = system_of_sign_vector(signs3(Sign::Between, Sign::Above, Sign::Between));
    CHECK(sys.strictly_satisfied_by(point({"6/5", "1/2", "0"})));
    const auto result = feasible_interior(sys);
    REQUIRE(std::holds_alternative<Witness>(result));
    CHECK(sys.strictly_satisfied_by(std::get<Witness>(result).point()));
}

TEST_CASE("sign vector of a point") {
    auto sv = sign_vector_of_point(point({"6/5", "1/2", "0"}));
    REQUIRE(std::holds_alternative<RegionSignVector>(sv));
    CHECK(std::get<RegionSignVector>(sv) == signs3(Sign::Between, Sign::Above, Sign::Between));

    sv = sign_vector_of_point(point({"0", "0", "0"}));
    REQUIRE(std::holds_alternative<OnHyperplane>(sv));
    CHECK(std::get<OnHyperplane>(sv).j == 1);
    CHECK(std::get<OnHyperplane>(sv).k == 2);
    CHECK(std::get<OnHyperplane>(sv).value == 0);

    sv = sign_vector_of_point(point({"2/3", "1/3", "0"}));
    REQUIRE(std::holds_alternative<RegionSignVector>(sv));
    CHECK(std::get<RegionSignVector>(sv) == RegionSignVector::uniform(3, Sign::Between));

    sv = sign_vector_of_point(point({"5/2", "3/2", "0"}));
    REQUIRE(std::holds_alternative<OnHyperplane>(sv));
    CHECK(std::get<OnHyperplane>(sv).value == 1);
}

TEST_CASE("relative boundedness") {
    CHECK(is_relatively_bounded(RegionSignVector::uniform(3, Sign::Between)));
    CHECK_FALSE(is_relatively_bounded(RegionSignVector::uniform(3, Sign::Above)));
    CHECK(is_relatively_bounded(RegionSignVector(1, {})));
    CHECK_THROWS_AS(is_relatively_bounded(signs3(Sign::Below, Sign::Above, Sign::Below)),
                    PreconditionError);

    int bounded = 0;
    for (Sign s : {Sign::Below, Sign::Between, Sign::Above}) {
        bounded += is_relatively_bounded(RegionSignVector(2, {s})) ? 1 : 0;
    }
    CHECK(bounded == 1);
}

TEST_CASE("region enumeration counts, witnesses and bounded counts") {
    const std::vector<std::pair<std::size_t, long>> expected{{1, 1}, {3, 1}, {16, 4}, {125, 27}, {1296, 256}};
    for (int n = 1; n <= 5; ++n) {
        const auto regions = enumerate_regions(n);
        CHECK(regions.size() == expected[n - 1].first);
        long bounded = 0;
        for (const auto& r : regions) {
            REQUIRE(r.witness.verified());
            REQUIRE(system_of_sign_vector(r.signs).strictly_satisfied_by(r.witness.point()));
            const auto back = sign_vector_of_point(r.witness.point());
            REQUIRE(std::holds_alternative<RegionSignVector>(back));
            REQUIRE(std::get<RegionSignVector>(back) == r.signs);
            bounded += is_relatively_bounded(r.signs) ? 1 : 0;
        }
        CHECK(bounded == expected[n - 1].second);
    }
    CHECK_THROWS_AS(enumerate_regions(6), ResourceLimitError);
}

TEST_CASE("boundedness: strong connectivity agrees with the solver probe, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& r : enumerate_regions(n)) {
            REQUIRE(is_relatively_bounded(r.signs) == is_relatively_bounded_by_probe(r.signs));
        }
    }
}

TEST_CASE("region enumeration does not depend on the worker count") {
    const auto serial = enumerate_regions(4, kDefaultRegionCap, 1);
    const auto parallel = enumerate_regions(4, kDefaultRegionCap, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].signs == parallel[i].signs);
        CHECK(serial[i].witness.point() == parallel[i].witness.point());
    }
    CHECK(std::is_sorted(serial.begin(), serial.end(),
                         [](const Region& a, const Region& b) { return a.signs < b.signs; }));
}

TEST_CASE("random difference systems: witnesses verify, certificates audit, scaling agrees") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> vertex(1, 5);
    std::uniform_int_distribution<int> bound(-6, 6);
    std::uniform_int_distribution<int> count(1, 12);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<DifferenceConstraint> integral;
        std::vector<DifferenceConstraint> scaled;
        const int m = count(rng);
        for (int c = 0; c < m; ++c) {
            int j = vertex(rng);
            int k = vertex(rng);
            if (j == k) k = j % 5 + 1;
            const Rel rel = (rng() & 1U) ? Rel::Greater : Rel::Less;
            const int b = bound(rng);
            integral.push_back({j, k, rel, Rational(b)});
            scaled.push_back({j, k, rel, Rational(b, 7)});
        }
        const DifferenceSystem sys(5, integral);
        const DifferenceSystem sys_scaled(5, scaled);
        const auto result = feasible_interior(sys);
        const auto result_scaled = feasible_interior(sys_scaled);
        REQUIRE(result.index() == result_scaled.index());
        if (const auto* w = std::get_if<Witness>(&result)) {
            ++feasible;
            REQUIRE(w->verified());
            REQUIRE(sys.strictly_satisfied_by(w->point()));
            REQUIRE(sys_scaled.strictly_satisfied_by(std::get<Witness>(result_scaled).point()));
        } else {
            ++infeasible;
            REQUIRE(certificate_is_contradiction(sys, std::get<Infeasible>(result)));
            REQUIRE(certificate_is_contradiction(sys_scaled, std::get<Infeasible>(result_scaled)));
        }
    }
    CHECK(feasible > 100);
    CHECK(infeasible > 100);
}

TEST_CASE("difference systems reject malformed constraints") {
    CHECK_THROWS_AS(DifferenceSystem(3, {{2, 2, Rel::Less, 0}}), ValidationError);
    CHECK_THROWS_AS(DifferenceSystem(3, {{1, 4, Rel::Less, 0}}), ValidationError);
}

TEST_CASE("braid cell of a point") {
    CHECK(braid_cell_of_point(point({"5", "2", "9"})) == std::vector<int>{3, 1, 2});
    CHECK(braid_cell_of_point(point({"3", "2", "1"})) == std::vector<int>{1, 2, 3});
    CHECK(braid_cell_of_point(point({"1", "2"})) == std::vector<int>{2, 1});
    CHECK_THROWS_AS(braid_cell_of_point(point({"1", "7/2", "1"})), OnHyperplaneError);
}

TEST_CASE("projection to the sum-zero plane") {
    CHECK(project_to_sum_zero(point({"1", "1", "1"})) == point({"0", "0", "0"}));
    CHECK(project_to_sum_zero(point({"2", "1", "0"})) == point({"1", "0", "-1"}));
    // mean of (6/5, 1/2, 0) is 17/30
    const auto p = project_to_sum_zero(point({"6/5", "1/2", "0"}));
    CHECK(p == point({"19/30", "-1/15", "-17/30"}));
    CHECK(p[1] + p[2] + p[3] == 0);
    CHECK(p[1] - p[2] == Rational(7, 10));
}
