#pragma once

#include "parking/mixed_graph.hpp"
#include "parking/parking_function.hpp"
#include "parking/region.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace parking {

/// Terminal y-vector of the graph-construction algorithm: a permutation of {-1, ..., -n}.
/// |s_i| > |s_j| means i fed an up step before j did.
class SourcePriorityVector {
public:
    /// Throws InvariantError unless values is a permutation of {-1, ..., -n}.
    explicit SourcePriorityVector(std::vector<int> values);

    int n() const noexcept { return static_cast<int>(values_.size()); }
    const std::vector<int>& values() const noexcept { return values_; }
    /// |s_i| for 1-based vertex i.
    int priority(int vertex) const { return -values_[vertex - 1]; }

    friend bool operator==(const SourcePriorityVector&, const SourcePriorityVector&) = default;

private:
    std::vector<int> values_;
};

struct UpStep {
    int feeder;
    std::vector<int> targets;  // k > feeder receiving feeder -> k
};

struct DownStep {
    int feeder;
    std::vector<int> targets;     // k < feeder receiving k <- feeder
    std::vector<int> candidates;  // all down-feeder candidates at selection time
};

struct Finalize {
    std::vector<std::pair<int, int>> downish;  // pairs left without an edge, canonical order
};

using TraceEvent = std::variant<UpStep, DownStep, Finalize>;

struct AlgorithmTrace {
    std::vector<TraceEvent> events;
};

struct PhiInverseResult {
    ParkingGraph graph;
    SourcePriorityVector priority;
    AlgorithmTrace trace;
    /// Times a down step skipped a pair that already carried an edge.
    int guard_activations = 0;
};

/// Mixed in-degree sequence plus one.
ParkingFunction phi(const ParkingGraph& p);

/// Builds the unique parking graph with mixed in-degrees x - 1 by alternating up steps and
/// down steps. Throws InvariantError if any internal invariant of the construction breaks.
PhiInverseResult phi_inverse(const ParkingFunction& x);

Sign sign_of_kind(EdgeKind kind);
EdgeKind kind_of_sign(Sign sign);

struct PsiResult {
    RegionSignVector signs;
    Witness witness;
};

/// Down -> Above, Downish -> Between, Up -> Below, with a verified interior witness.
PsiResult psi(const ParkingGraph& p);

/// Reverse translation. Throws PreconditionError for an infeasible sign vector.
ParkingGraph psi_inverse(const RegionSignVector& sv);
/// Region of a point off every hyperplane. Throws OnHyperplaneError otherwise.
ParkingGraph psi_inverse(const RationalPoint& p);

/// phi(psi_inverse(.)): the parking-function label of a Shi region.
ParkingFunction pak_stanley_label(const RegionSignVector& sv);
ParkingFunction pak_stanley_label(const RationalPoint& p);

}  // namespace parking
