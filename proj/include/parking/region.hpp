#pragma once

#include "parking/rational.hpp"

#include <cstddef>
#include <functional>
#include <string_view>
#include <variant>
#include <vector>

namespace parking {

inline constexpr int kDefaultRegionCap = 5;

/// Position of x_j - x_k (j < k) relative to the two Shi hyperplanes of the pair.
/// Enumerator order is the enumeration order.
enum class Sign { Below = 0, Between = 1, Above = 2 };

std::string_view to_string(Sign sign);
/// Accepts "below", "between", "above".
Sign parse_sign(std::string_view text);

/// One Sign per canonical pair (1,2),(1,3),...,(n-1,n).
class RegionSignVector {
public:
    RegionSignVector(int n, std::vector<Sign> signs);
    static RegionSignVector uniform(int n, Sign fill);

    int n() const noexcept { return n_; }
    Sign sign(int j, int k) const;
    void set_sign(int j, int k, Sign sign);
    const std::vector<Sign>& signs() const noexcept { return signs_; }

    friend bool operator==(const RegionSignVector&, const RegionSignVector&) = default;
    friend auto operator<=>(const RegionSignVector&, const RegionSignVector&) = default;

private:
    int n_;
    std::vector<Sign> signs_;
};

/// Exact point in Q^n. Coordinates are 1-based in all accessors taking a vertex.
class RationalPoint {
public:
    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    int n() const noexcept { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int vertex) const { return coords_[vertex - 1]; }
    const std::vector<Rational>& coords() const noexcept { return coords_; }

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;

private:
    std::vector<Rational> coords_;
};

/// x_j - x_k  (relation)  bound, strict.
struct DifferenceConstraint {
    enum class Relation { Greater, Less };
    int j;
    int k;
    Relation relation;
    Rational bound;

    bool holds_at(const RationalPoint& p) const;
    friend bool operator==(const DifferenceConstraint&, const DifferenceConstraint&) = default;
};

class DifferenceSystem {
public:
    /// Throws ValidationError on j == k or vertices outside [1, n].
    DifferenceSystem(int n, std::vector<DifferenceConstraint> constraints);

    int n() const noexcept { return n_; }
    const std::vector<DifferenceConstraint>& constraints() const noexcept { return constraints_; }
    DifferenceSystem with(DifferenceConstraint extra) const;

    /// Every constraint holds strictly at p.
    bool strictly_satisfied_by(const RationalPoint& p) const;

private:
    int n_;
    std::vector<DifferenceConstraint> constraints_;
};

/// A point strictly inside a difference system. Only feasible_interior creates verified witnesses.
class Witness {
public:
    const RationalPoint& point() const noexcept { return point_; }
    bool verified() const noexcept { return verified_; }

private:
    friend class WitnessFactory;
    Witness(RationalPoint p, bool verified) : point_(std::move(p)), verified_(verified) {}

    RationalPoint point_;
    bool verified_ = false;
};

/// Negative-cycle certificate: indices of constraints that telescope around a cycle of
/// variables. Summing them yields 0 < c (or 0 > c) with c violating the strict inequality.
struct Infeasible {
    std::vector<std::size_t> cycle;
};

/// Nonemptiness of the open polyhedron of `sys`, decided exactly.
std::variant<Witness, Infeasible> feasible_interior(const DifferenceSystem& sys);

/// Above -> x_j - x_k > 1; Between -> 0 < x_j - x_k < 1; Below -> x_j - x_k < 0.
DifferenceSystem system_of_sign_vector(const RegionSignVector& sv);

struct OnHyperplane {
    int j;
    int k;
    Rational value;  // 0 or 1
};

std::variant<RegionSignVector, OnHyperplane> sign_vector_of_point(const RationalPoint& p);

/// Bounded modulo the all-ones direction, from strong connectivity of the recession order digraph.
/// Throws PreconditionError if sv is infeasible.
bool is_relatively_bounded(const RegionSignVector& sv);

/// Independent route for the same question: the region is relatively unbounded iff some
/// x_j - x_k can exceed 10n inside it. Throws PreconditionError if sv is infeasible.
bool is_relatively_bounded_by_probe(const RegionSignVector& sv);

struct Region {
    RegionSignVector signs;
    Witness witness;
};

/// Feasible sign vectors in lexicographic order (Below < Between < Above over canonical pairs),
/// each with a verified witness. `jobs` worker threads split the candidates by prefix; the
/// result does not depend on `jobs`.
std::vector<Region> enumerate_regions(int n, int cap = kDefaultRegionCap, int jobs = 1);

void for_each_region(int n, const std::function<void(const Region&)>& visit,
                     int cap = kDefaultRegionCap);

/// pi with x_{pi(1)} > x_{pi(2)} > ... > x_{pi(n)}. Throws OnHyperplaneError on ties.
std::vector<int> braid_cell_of_point(const RationalPoint& p);

/// Subtracts the coordinate mean.
RationalPoint project_to_sum_zero(const RationalPoint& p);

}  // namespace parking
