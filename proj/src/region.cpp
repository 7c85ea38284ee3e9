#include "parking/region.hpp"

#include "parking/errors.hpp"
#include "parking/mixed_graph.hpp"
#include "parking/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace parking {

class WitnessFactory {
public:
    static Witness verified(RationalPoint p) { return Witness(std::move(p), true); }
};

namespace {

// a + b*eps for a positive infinitesimal eps, ordered lexicographically.
template <class Scalar>
struct EpsValue {
    Scalar real{};
    long long eps = 0;

    EpsValue operator+(const EpsValue& o) const { return {real + o.real, eps + o.eps}; }
    bool operator<(const EpsValue& o) const {
        if (real != o.real) return real < o.real;
        return eps < o.eps;
    }
};

// x[to] <= x[from] + weight
template <class Scalar>
struct UpperBoundArc {
    int from;
    int to;
    EpsValue<Scalar> weight;
};

template <class Scalar>
UpperBoundArc<Scalar> arc_of(const DifferenceConstraint& c, Scalar bound) {
    if (c.relation == DifferenceConstraint::Relation::Less) return {c.k, c.j, {bound, -1}};
    return {c.j, c.k, {-bound, -1}};
}

template <class Scalar>
struct ShortestPaths {
    std::vector<EpsValue<Scalar>> dist;   // indexed by vertex, slot 0 unused
    std::vector<std::size_t> negative_cycle;  // non-empty iff infeasible
};

template <class Scalar>
std::vector<std::size_t> extract_cycle(const std::vector<UpperBoundArc<Scalar>>& arcs,
                                       const std::vector<std::optional<std::size_t>>& pred,
                                       int start, int n) {
    int v = start;
    for (int step = 0; step <= n; ++step) {
        if (!pred[v]) throw InvariantError("negative-cycle walk left the predecessor graph");
        v = arcs[*pred[v]].from;
    }
    std::vector<std::size_t> cycle;
    const int anchor = v;
    do {
        cycle.push_back(*pred[v]);
        v = arcs[*pred[v]].from;
    } while (v != anchor);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
}

// Bellman-Ford from a virtual source joined to every vertex by a zero arc.
template <class Scalar>
ShortestPaths<Scalar> shortest_paths(int n, const std::vector<UpperBoundArc<Scalar>>& arcs) {
    ShortestPaths<Scalar> out;
    out.dist.resize(static_cast<std::size_t>(n) + 1);
    std::vector<std::optional<std::size_t>> pred(static_cast<std::size_t>(n) + 1);
    for (int round = 0; round <= n; ++round) {
        std::optional<int> updated;
        for (std::size_t a = 0; a < arcs.size(); ++a) {
            const auto& arc = arcs[a];
            auto candidate = out.dist[arc.from] + arc.weight;
            if (candidate < out.dist[arc.to]) {
                out.dist[arc.to] = std::move(candidate);
                pred[arc.to] = a;
                updated = arc.to;
            }
        }
        if (!updated) break;
        if (round == n) {
            out.negative_cycle = extract_cycle(arcs, pred, *updated, n);
            break;
        }
    }
    return out;
}

// Integer bounds small enough that no path sum can overflow 64 bits.
bool fits_integer_fast_path(const DifferenceSystem& sys) {
    constexpr long long kLimit = 1LL << 40;
    for (const auto& c : sys.constraints()) {
        if (boost::multiprecision::denominator(c.bound) != 1) return false;
        const BigInt num = boost::multiprecision::numerator(c.bound);
        if (num > kLimit || num < -kLimit) return false;
    }
    return sys.constraints().size() < (1U << 16);
}

// Symbolic potentials: exact reals plus integer eps coefficients.
struct SymbolicSolution {
    std::vector<Rational> real;
    std::vector<long long> eps;
    std::vector<std::size_t> negative_cycle;
};

SymbolicSolution solve_symbolic(const DifferenceSystem& sys) {
    const int n = sys.n();
    SymbolicSolution out;
    auto unpack = [&](const auto& paths) {
        out.negative_cycle = paths.negative_cycle;
        for (int v = 1; v <= n; ++v) {
            out.real.emplace_back(paths.dist[v].real);
            out.eps.push_back(paths.dist[v].eps);
        }
    };
    if (fits_integer_fast_path(sys)) {
        std::vector<UpperBoundArc<long long>> arcs;
        arcs.reserve(sys.constraints().size());
        for (const auto& c : sys.constraints()) {
            arcs.push_back(arc_of(c, static_cast<long long>(boost::multiprecision::numerator(c.bound))));
        }
        unpack(shortest_paths(n, arcs));
    } else {
        std::vector<UpperBoundArc<Rational>> arcs;
        arcs.reserve(sys.constraints().size());
        for (const auto& c : sys.constraints()) arcs.push_back(arc_of(c, c.bound));
        unpack(shortest_paths(n, arcs));
    }
    return out;
}

void check_enumeration_size(int n, int cap) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (n > cap) {
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(cap));
    }
}

void enumerate_region_suffix(int n, std::vector<Sign> signs, std::size_t from,
                             const std::function<void(const Region&)>& visit) {
    const std::size_t m = signs.size();
    for (std::size_t i = from; i < m; ++i) signs[i] = Sign::Below;
    while (true) {
        RegionSignVector sv(n, signs);
        auto result = feasible_interior(system_of_sign_vector(sv));
        if (auto* w = std::get_if<Witness>(&result)) visit(Region{std::move(sv), *w});
        std::size_t pos = m;
        while (pos > from && signs[pos - 1] == Sign::Above) {
            signs[pos - 1] = Sign::Below;
            --pos;
        }
        if (pos == from) break;
        signs[pos - 1] = static_cast<Sign>(static_cast<int>(signs[pos - 1]) + 1);
    }
}

void require_feasible(const RegionSignVector& sv) {
    if (std::holds_alternative<Infeasible>(feasible_interior(system_of_sign_vector(sv)))) {
        throw PreconditionError("sign vector does not describe a region (infeasible)");
    }
}

}  // namespace

std::string_view to_string(Sign sign) {
    switch (sign) {
        case Sign::Below: return "below";
        case Sign::Between: return "between";
        case Sign::Above: return "above";
    }
    return "?";
}

Sign parse_sign(std::string_view text) {
    if (text == "below") return Sign::Below;
    if (text == "between") return Sign::Between;
    if (text == "above") return Sign::Above;
    throw ValidationError("unknown sign '" + std::string(text) + "'");
}

RegionSignVector::RegionSignVector(int n, std::vector<Sign> signs)
    : n_(n), signs_(std::move(signs)) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (signs_.size() != pair_count(n)) {
        throw ValidationError("sign vector for n = " + std::to_string(n) + " needs " +
                              std::to_string(pair_count(n)) + " entries, got " +
                              std::to_string(signs_.size()));
    }
}

RegionSignVector RegionSignVector::uniform(int n, Sign fill) {
    return RegionSignVector(n, std::vector<Sign>(pair_count(n), fill));
}

Sign RegionSignVector::sign(int j, int k) const { return signs_[pair_index(n_, j, k)]; }

void RegionSignVector::set_sign(int j, int k, Sign sign) { signs_[pair_index(n_, j, k)] = sign; }

bool DifferenceConstraint::holds_at(const RationalPoint& p) const {
    const Rational diff = p[j] - p[k];
    return relation == Relation::Greater ? diff > bound : diff < bound;
}

DifferenceSystem::DifferenceSystem(int n, std::vector<DifferenceConstraint> constraints)
    : n_(n), constraints_(std::move(constraints)) {
    if (n < 1) throw ValidationError("n must be at least 1");
    for (const auto& c : constraints_) {
        if (c.j == c.k || c.j < 1 || c.k < 1 || c.j > n || c.k > n) {
            throw ValidationError("malformed difference constraint on (" + std::to_string(c.j) +
                                  "," + std::to_string(c.k) + ")");
        }
    }
}

DifferenceSystem DifferenceSystem::with(DifferenceConstraint extra) const {
    auto constraints = constraints_;
    constraints.push_back(std::move(extra));
    return DifferenceSystem(n_, std::move(constraints));
}

bool DifferenceSystem::strictly_satisfied_by(const RationalPoint& p) const {
    if (p.n() != n_) return false;
    return std::all_of(constraints_.begin(), constraints_.end(),
                       [&](const DifferenceConstraint& c) { return c.holds_at(p); });
}

std::variant<Witness, Infeasible> feasible_interior(const DifferenceSystem& sys) {
    const int n = sys.n();
    SymbolicSolution symbolic = solve_symbolic(sys);
    if (!symbolic.negative_cycle.empty()) return Infeasible{std::move(symbolic.negative_cycle)};

    // Potentials satisfy every arc with slack >= eps symbolically; pick a concrete eps.
    Rational eps(1, 2 * n);
    for (int attempt = 0; attempt < 256; ++attempt, eps /= 2) {
        std::vector<Rational> coords;
        coords.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) coords.push_back(symbolic.real[v] + symbolic.eps[v] * eps);
        const Rational shift = coords.back();
        for (auto& x : coords) x -= shift;
        RationalPoint point(std::move(coords));
        if (sys.strictly_satisfied_by(point)) return WitnessFactory::verified(std::move(point));
    }
    throw InvariantError("could not concretize a symbolic interior point");
}

DifferenceSystem system_of_sign_vector(const RegionSignVector& sv) {
    using Rel = DifferenceConstraint::Relation;
    std::vector<DifferenceConstraint> constraints;
    for (const auto& [j, k] : canonical_pairs(sv.n())) {
        switch (sv.sign(j, k)) {
            case Sign::Above:
                constraints.push_back({j, k, Rel::Greater, Rational(1)});
                break;
            case Sign::Between:
                constraints.push_back({j, k, Rel::Greater, Rational(0)});
                constraints.push_back({j, k, Rel::Less, Rational(1)});
                break;
            case Sign::Below:
                constraints.push_back({j, k, Rel::Less, Rational(0)});
                break;
        }
    }
    return DifferenceSystem(sv.n(), std::move(constraints));
}

std::variant<RegionSignVector, OnHyperplane> sign_vector_of_point(const RationalPoint& p) {
    const int n = p.n();
    if (n < 1) throw ValidationError("point must have at least one coordinate");
    std::vector<Sign> signs;
    signs.reserve(pair_count(n));
    for (const auto& [j, k] : canonical_pairs(n)) {
        const Rational diff = p[j] - p[k];
        if (diff == 0 || diff == 1) return OnHyperplane{j, k, diff};
        signs.push_back(diff < 0 ? Sign::Below : (diff < 1 ? Sign::Between : Sign::Above));
    }
    return RegionSignVector(n, std::move(signs));
}

bool is_relatively_bounded(const RegionSignVector& sv) {
    require_feasible(sv);
    const int n = sv.n();
    if (n == 1) return true;

    // arc u -> v whenever recession directions satisfy y_u <= y_v
    std::vector<std::vector<int>> forward(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<int>> backward(static_cast<std::size_t>(n) + 1);
    auto add = [&](int u, int v) {
        forward[u].push_back(v);
        backward[v].push_back(u);
    };
    for (const auto& [j, k] : canonical_pairs(n)) {
        switch (sv.sign(j, k)) {
            case Sign::Above: add(k, j); break;
            case Sign::Below: add(j, k); break;
            case Sign::Between:
                add(j, k);
                add(k, j);
                break;
        }
    }
    auto reaches_all = [n](const std::vector<std::vector<int>>& adj) {
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        std::vector<int> stack{1};
        seen[1] = true;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : adj[u]) {
                if (!seen[v]) {
                    seen[v] = true;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reaches_all(forward) && reaches_all(backward);
}

bool is_relatively_bounded_by_probe(const RegionSignVector& sv) {
    const DifferenceSystem sys = system_of_sign_vector(sv);
    if (std::holds_alternative<Infeasible>(feasible_interior(sys))) {
        throw PreconditionError("sign vector does not describe a region (infeasible)");
    }
    const int n = sv.n();
    const Rational far(10 * n);
    for (int j = 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
            if (j == k) continue;
            const auto probe = sys.with({j, k, DifferenceConstraint::Relation::Greater, far});
            if (std::holds_alternative<Witness>(feasible_interior(probe))) return false;
        }
    }
    return true;
}

void for_each_region(int n, const std::function<void(const Region&)>& visit, int cap) {
    check_enumeration_size(n, cap);
    enumerate_region_suffix(n, std::vector<Sign>(pair_count(n), Sign::Below), 0, visit);
}

std::vector<Region> enumerate_regions(int n, int cap, int jobs) {
    check_enumeration_size(n, cap);
    const std::size_t m = pair_count(n);
    const std::size_t prefix = std::min<std::size_t>(m, 2);
    std::size_t parts = 1;
    for (std::size_t i = 0; i < prefix; ++i) parts *= 3;

    return collect_partitioned<Region>(parts, jobs, [&](std::size_t part, std::vector<Region>& out) {
        std::vector<Sign> signs(m, Sign::Below);
        std::size_t code = part;
        for (std::size_t i = prefix; i-- > 0;) {
            signs[i] = static_cast<Sign>(code % 3);
            code /= 3;
        }
        enumerate_region_suffix(n, std::move(signs), prefix,
                                [&out](const Region& r) { out.push_back(r); });
    });
}

std::vector<int> braid_cell_of_point(const RationalPoint& p) {
    const int n = p.n();
    if (n < 1) throw ValidationError("point must have at least one coordinate");
    for (const auto& [j, k] : canonical_pairs(n)) {
        if (p[j] == p[k]) throw OnHyperplaneError(j, k, "0");
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p[a] > p[b]; });
    return order;
}

RationalPoint project_to_sum_zero(const RationalPoint& p) {
    if (p.n() == 0) return p;
    Rational mean = 0;
    for (const auto& x : p.coords()) mean += x;
    mean /= p.n();
    std::vector<Rational> coords;
    coords.reserve(p.coords().size());
    for (const auto& x : p.coords()) coords.push_back(x - mean);
    return RationalPoint(std::move(coords));
}

}  // namespace parking
