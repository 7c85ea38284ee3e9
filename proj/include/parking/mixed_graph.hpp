#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace parking {

inline constexpr int kDefaultParkingGraphCap = 6;

/// Kind of the edge on a pair j < k.
///   Up:      j -> k
///   Down:    j <- k
///   Downish: undirected jk, oriented as j <- k in the associated digraph
/// Enumerator order is the enumeration order.
enum class EdgeKind { Up = 0, Downish = 1, Down = 2 };

std::string_view to_string(EdgeKind kind);
/// Accepts "up", "down", "downish". Throws ValidationError otherwise.
EdgeKind parse_edge_kind(std::string_view text);

/// Canonical pair order (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n). Vertices are 1-based.
constexpr std::size_t pair_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}
std::size_t pair_index(int n, int j, int k);
/// All canonical pairs for n, in order.
const std::vector<std::pair<int, int>>& canonical_pairs(int n);

/// Complete mixed graph on [n]: one EdgeKind per canonical pair.
class MixedGraph {
public:
    /// Throws ValidationError if n < 1 or kinds.size() != C(n,2).
    MixedGraph(int n, std::vector<EdgeKind> kinds);
    /// All pairs set to `fill`.
    static MixedGraph uniform(int n, EdgeKind fill);

    int n() const noexcept { return n_; }
    EdgeKind kind(int j, int k) const;
    void set_kind(int j, int k, EdgeKind kind);
    const std::vector<EdgeKind>& kinds() const noexcept { return kinds_; }

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;
    friend auto operator<=>(const MixedGraph&, const MixedGraph&) = default;

private:
    int n_;
    std::vector<EdgeKind> kinds_;
};

/// Directed graph on [n] stored as an adjacency matrix.
class Digraph {
public:
    explicit Digraph(int n);

    int n() const noexcept { return n_; }
    void add_arc(int tail, int head);
    bool has_arc(int tail, int head) const;
    /// Arcs in (tail, head) lexicographic order.
    std::vector<std::pair<int, int>> arcs() const;
    std::vector<int> in_degrees() const;

private:
    int n_;
    std::vector<char> adjacency_;
};

/// Associated digraph: Up (j,k) -> j->k; Down and Downish (j,k) -> k->j.
Digraph orient(const MixedGraph& g);

/// In-degrees counting only the directed (Up/Down) edges of g.
std::vector<int> in_degrees_mixed(const MixedGraph& g);

/// In-degrees in orient(g).
std::vector<int> in_degrees_oriented(const MixedGraph& g);

/// True iff no triangle is a coherently oriented 3-cycle in orient(g).
/// For a tournament this is equivalent to acyclicity.
bool is_acyclic_by_triangles(const MixedGraph& g);

struct Violation {
    enum class Kind { Cycle, DownishSourceSink };
    Kind kind;
    std::array<int, 3> vertices;  // ascending

    friend bool operator==(const Violation&, const Violation&) = default;
};

std::string_view to_string(Violation::Kind kind);

/// Source-sink violation of the triangle {a,b,c}, if any.
std::optional<Violation> triangle_violation(const MixedGraph& g, int a, int b, int c);

/// Every offending triangle, in lexicographic order.
std::vector<Violation> all_violations(const MixedGraph& g);

/// A mixed graph certified to satisfy the source-sink condition.
class ParkingGraph {
public:
    /// Throws PreconditionError carrying the least violation if g is not a parking graph.
    static ParkingGraph certify(MixedGraph g);

    const MixedGraph& graph() const noexcept { return graph_; }
    int n() const noexcept { return graph_.n(); }
    EdgeKind kind(int j, int k) const { return graph_.kind(j, k); }

    friend bool operator==(const ParkingGraph&, const ParkingGraph&) = default;
    friend auto operator<=>(const ParkingGraph&, const ParkingGraph&) = default;

private:
    explicit ParkingGraph(MixedGraph g) : graph_(std::move(g)) {}
    friend std::variant<ParkingGraph, Violation> check_source_sink(const MixedGraph& g);

    MixedGraph graph_;
};

/// Accepts g as a ParkingGraph, or reports the lexicographically least offending triangle.
std::variant<ParkingGraph, Violation> check_source_sink(const MixedGraph& g);

/// Filters all 3^C(n,2) assignments, in lexicographic order over the canonical pair list
/// with Up < Downish < Down.
void for_each_parking_graph(int n, const std::function<void(const ParkingGraph&)>& visit,
                            int cap = kDefaultParkingGraphCap);

/// Partition of for_each_parking_graph by the kind of the first pair (n >= 2).
void for_each_parking_graph_with_first(int n, EdgeKind first,
                                       const std::function<void(const ParkingGraph&)>& visit,
                                       int cap = kDefaultParkingGraphCap);

std::vector<ParkingGraph> enumerate_parking_graphs(int n, int cap = kDefaultParkingGraphCap);

}  // namespace parking
