#include "parking/bijections.hpp"

#include "parking/errors.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace parking {

namespace {

class GraphUnderConstruction {
public:
    explicit GraphUnderConstruction(int n) : n_(n), kinds_(pair_count(n)) {}

    bool has_edge(int a, int b) const { return kinds_[index(a, b)].has_value(); }

    void introduce(int a, int b, EdgeKind kind) {
        auto& slot = kinds_[index(a, b)];
        if (slot) {
            throw InvariantError("edge between " + std::to_string(a) + " and " +
                                 std::to_string(b) + " introduced twice");
        }
        slot = kind;
    }

    std::vector<std::pair<int, int>> finalize() {
        std::vector<std::pair<int, int>> downish;
        const auto& pairs = canonical_pairs(n_);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (!kinds_[i]) {
                kinds_[i] = EdgeKind::Downish;
                downish.push_back(pairs[i]);
            }
        }
        return downish;
    }

    MixedGraph graph() const {
        std::vector<EdgeKind> kinds;
        kinds.reserve(kinds_.size());
        for (const auto& k : kinds_) {
            if (!k) throw InvariantError("graph construction left a pair without an edge");
            kinds.push_back(*k);
        }
        return MixedGraph(n_, std::move(kinds));
    }

private:
    std::size_t index(int a, int b) const {
        return pair_index(n_, std::min(a, b), std::max(a, b));
    }

    int n_;
    std::vector<std::optional<EdgeKind>> kinds_;
};

}  // namespace

SourcePriorityVector::SourcePriorityVector(std::vector<int> values) : values_(std::move(values)) {
    const int n = static_cast<int>(values_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : values_) {
        if (v > -1 || v < -n || seen[-v]) {
            throw InvariantError("source priority vector is not a permutation of {-1,...,-n}");
        }
        seen[-v] = true;
    }
}

ParkingFunction phi(const ParkingGraph& p) {
    auto degrees = in_degrees_mixed(p.graph());
    for (auto& d : degrees) ++d;
    return ParkingFunction(std::move(degrees));
}

PhiInverseResult phi_inverse(const ParkingFunction& x) {
    const int n = x.size();
    std::vector<int> y(x.entries());
    for (auto& v : y) --v;

    GraphUnderConstruction building(n);
    AlgorithmTrace trace;
    int guard_activations = 0;

    // Each up step retires one zero and each down step strictly lowers a positive entry.
    const int max_steps = n + n * n;
    for (int step = 0;; ++step) {
        if (step > max_steps) throw InvariantError("graph construction did not terminate");

        int feeder = 0;
        for (int k = n; k >= 1; --k) {
            if (y[k - 1] == 0) {
                feeder = k;
                break;
            }
        }
        if (feeder != 0) {
            std::vector<int> was_negative;
            for (int k = 1; k <= n; ++k) {
                if (y[k - 1] < 0) was_negative.push_back(k);
            }
            UpStep event{feeder, {}};
            for (int k = feeder + 1; k <= n; ++k) {
                if (y[k - 1] > 0) {
                    building.introduce(feeder, k, EdgeKind::Up);
                    --y[k - 1];
                    event.targets.push_back(k);
                }
            }
            y[feeder - 1] = -1;
            for (int k : was_negative) --y[k - 1];
            trace.events.emplace_back(std::move(event));
            continue;
        }

        const bool any_positive = std::any_of(y.begin(), y.end(), [](int v) { return v > 0; });
        if (!any_positive) break;

        // down feeder candidates: j with some k < j, y_k > 0, and no edge between k and j
        std::vector<int> candidates;
        for (int j = 1; j <= n; ++j) {
            for (int k = 1; k < j; ++k) {
                if (y[k - 1] > 0 && !building.has_edge(k, j)) {
                    candidates.push_back(j);
                    break;
                }
            }
        }
        if (candidates.empty()) throw InvariantError("down step without a feeder candidate");

        const int lowest = std::ranges::min(candidates, {}, [&](int j) { return y[j - 1]; });
        const int lowest_value = y[lowest - 1];
        const auto ties = std::ranges::count_if(
            candidates, [&](int j) { return y[j - 1] == lowest_value; });
        if (ties != 1) throw InvariantError("tie in the down-feeder minimum");
        if (lowest_value >= 0) throw InvariantError("down feeder with nonnegative y value");

        DownStep event{lowest, {}, candidates};
        for (int k = 1; k < lowest; ++k) {
            if (y[k - 1] <= 0) continue;
            if (building.has_edge(k, lowest)) {
                ++guard_activations;
                continue;
            }
            building.introduce(k, lowest, EdgeKind::Down);
            --y[k - 1];
            event.targets.push_back(k);
        }
        trace.events.emplace_back(std::move(event));
    }

    trace.events.emplace_back(Finalize{building.finalize()});
    MixedGraph graph = building.graph();

    std::vector<int> expected(x.entries());
    for (auto& v : expected) --v;
    if (in_degrees_mixed(graph) != expected) {
        throw InvariantError("constructed graph has the wrong mixed in-degree sequence");
    }
    auto certified = check_source_sink(graph);
    if (std::holds_alternative<Violation>(certified)) {
        throw InvariantError("constructed graph violates the source-sink condition");
    }
    return PhiInverseResult{std::get<ParkingGraph>(std::move(certified)),
                            SourcePriorityVector(std::move(y)), std::move(trace),
                            guard_activations};
}

Sign sign_of_kind(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Up: return Sign::Below;
        case EdgeKind::Downish: return Sign::Between;
        case EdgeKind::Down: return Sign::Above;
    }
    throw InvariantError("unknown edge kind");
}

EdgeKind kind_of_sign(Sign sign) {
    switch (sign) {
        case Sign::Below: return EdgeKind::Up;
        case Sign::Between: return EdgeKind::Downish;
        case Sign::Above: return EdgeKind::Down;
    }
    throw InvariantError("unknown sign");
}

PsiResult psi(const ParkingGraph& p) {
    std::vector<Sign> signs;
    signs.reserve(p.graph().kinds().size());
    for (EdgeKind k : p.graph().kinds()) signs.push_back(sign_of_kind(k));
    RegionSignVector sv(p.n(), std::move(signs));
    auto result = feasible_interior(system_of_sign_vector(sv));
    if (std::holds_alternative<Infeasible>(result)) {
        throw InvariantError("parking graph maps to an empty region");
    }
    return PsiResult{std::move(sv), std::get<Witness>(std::move(result))};
}

ParkingGraph psi_inverse(const RegionSignVector& sv) {
    if (std::holds_alternative<Infeasible>(feasible_interior(system_of_sign_vector(sv)))) {
        throw PreconditionError("sign vector does not describe a region (infeasible)");
    }
    std::vector<EdgeKind> kinds;
    kinds.reserve(sv.signs().size());
    for (Sign s : sv.signs()) kinds.push_back(kind_of_sign(s));
    auto result = check_source_sink(MixedGraph(sv.n(), std::move(kinds)));
    if (std::holds_alternative<Violation>(result)) {
        throw InvariantError("region maps to a mixed graph violating the source-sink condition");
    }
    return std::get<ParkingGraph>(std::move(result));
}

ParkingGraph psi_inverse(const RationalPoint& p) {
    auto result = sign_vector_of_point(p);
    if (const auto* on = std::get_if<OnHyperplane>(&result)) {
        throw OnHyperplaneError(on->j, on->k, to_string(on->value));
    }
    return psi_inverse(std::get<RegionSignVector>(result));
}

ParkingFunction pak_stanley_label(const RegionSignVector& sv) { return phi(psi_inverse(sv)); }

ParkingFunction pak_stanley_label(const RationalPoint& p) { return phi(psi_inverse(p)); }

}  // namespace parking
