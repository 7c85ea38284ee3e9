#pragma once

#include "parking/parking_function.hpp"

#include <utility>
#include <vector>

namespace parking {

/// Tree on vertices 1..vertex_count. Edges are stored as (a, b) with a < b, sorted.
class LabeledTree {
public:
    /// Throws ValidationError unless the edges form a spanning tree of [vertex_count].
    LabeledTree(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
    friend auto operator<=>(const LabeledTree&, const LabeledTree&) = default;

private:
    int vertex_count_;
    std::vector<std::pair<int, int>> edges_;
};

/// Length vertex_count - 2 over labels 1..vertex_count.
class PruferCode {
public:
    PruferCode(int vertex_count, std::vector<int> labels);

    int vertex_count() const noexcept { return vertex_count_; }
    const std::vector<int>& labels() const noexcept { return labels_; }

    friend bool operator==(const PruferCode&, const PruferCode&) = default;
    friend auto operator<=>(const PruferCode&, const PruferCode&) = default;

private:
    int vertex_count_;
    std::vector<int> labels_;
};

/// Consecutive differences of a length-n parking function, reduced mod n+1.
class PollakCode {
public:
    /// residues.size() must be n - 1 and every residue in [0, n].
    PollakCode(int n, std::vector<int> residues);

    int n() const noexcept { return n_; }
    const std::vector<int>& residues() const noexcept { return residues_; }

    friend bool operator==(const PollakCode&, const PollakCode&) = default;

private:
    int n_;
    std::vector<int> residues_;
};

/// Record the neighbour of the lowest-labelled leaf and delete the leaf, until one edge is left.
PruferCode prufer_encode(const LabeledTree& t);
LabeledTree prufer_decode(const PruferCode& c);

PollakCode pollak(const ParkingFunction& x);

/// Every choice of x_1 in [1, n+1] whose reconstruction is a parking function.
/// Exactly one exists for every code.
std::vector<std::vector<int>> pollak_lifts(const PollakCode& c);

/// Throws InvariantError if the lift is not unique.
ParkingFunction pollak_inverse(const PollakCode& c);

/// Residue r corresponds to vertex label r + 1.
PruferCode prufer_code_of_pollak(const PollakCode& c);
PollakCode pollak_of_prufer_code(const PruferCode& c);

LabeledTree tree_of_parking_function(const ParkingFunction& x);
ParkingFunction parking_function_of_tree(const LabeledTree& t);

}  // namespace parking
