#include "parking/mixed_graph.hpp"

#include "parking/errors.hpp"

#include <string>

namespace parking {

namespace {

constexpr int kMaxTabulatedN = 64;

void check_vertex_pair(int n, int j, int k) {
    if (j < 1 || k > n || j >= k) {
        throw ValidationError("invalid pair (" + std::to_string(j) + "," + std::to_string(k) +
                              ") for n = " + std::to_string(n) + "; need 1 <= j < k <= n");
    }
}

void check_enumeration_size(int n, int cap) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (n > cap) {
        throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                                 std::to_string(cap));
    }
}

// Odometer over kinds[from..], last pair fastest; visits every assignment of the suffix.
void enumerate_suffix(int n, std::vector<EdgeKind> kinds, std::size_t from,
                      const std::function<void(const ParkingGraph&)>& visit) {
    const std::size_t m = kinds.size();
    for (std::size_t i = from; i < m; ++i) kinds[i] = EdgeKind::Up;
    while (true) {
        MixedGraph g(n, kinds);
        if (auto result = check_source_sink(g); std::holds_alternative<ParkingGraph>(result)) {
            visit(std::get<ParkingGraph>(result));
        }
        std::size_t pos = m;
        while (pos > from && kinds[pos - 1] == EdgeKind::Down) {
            kinds[pos - 1] = EdgeKind::Up;
            --pos;
        }
        if (pos == from) break;
        kinds[pos - 1] = static_cast<EdgeKind>(static_cast<int>(kinds[pos - 1]) + 1);
    }
}

}  // namespace

std::string_view to_string(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::Up: return "up";
        case EdgeKind::Down: return "down";
        case EdgeKind::Downish: return "downish";
    }
    return "?";
}

EdgeKind parse_edge_kind(std::string_view text) {
    if (text == "up") return EdgeKind::Up;
    if (text == "down") return EdgeKind::Down;
    if (text == "downish") return EdgeKind::Downish;
    throw ValidationError("unknown edge kind '" + std::string(text) + "'");
}

std::string_view to_string(Violation::Kind kind) {
    return kind == Violation::Kind::Cycle ? "cycle" : "downish_source_sink";
}

std::size_t pair_index(int n, int j, int k) {
    check_vertex_pair(n, j, k);
    // pairs with first vertex < j, then offset within row j
    const auto row_start = static_cast<std::size_t>((j - 1) * (2 * n - j)) / 2;
    return row_start + static_cast<std::size_t>(k - j - 1);
}

const std::vector<std::pair<int, int>>& canonical_pairs(int n) {
    static const std::vector<std::vector<std::pair<int, int>>> table = [] {
        std::vector<std::vector<std::pair<int, int>>> t(kMaxTabulatedN + 1);
        for (int m = 1; m <= kMaxTabulatedN; ++m) {
            for (int j = 1; j <= m; ++j) {
                for (int k = j + 1; k <= m; ++k) t[m].emplace_back(j, k);
            }
        }
        return t;
    }();
    if (n < 1 || n > kMaxTabulatedN) {
        throw ValidationError("n = " + std::to_string(n) + " out of supported range");
    }
    return table[n];
}

MixedGraph::MixedGraph(int n, std::vector<EdgeKind> kinds) : n_(n), kinds_(std::move(kinds)) {
    if (n < 1) throw ValidationError("n must be at least 1");
    if (kinds_.size() != pair_count(n)) {
        throw ValidationError("mixed graph on " + std::to_string(n) + " vertices needs " +
                              std::to_string(pair_count(n)) + " edges, got " +
                              std::to_string(kinds_.size()));
    }
}

MixedGraph MixedGraph::uniform(int n, EdgeKind fill) {
    return MixedGraph(n, std::vector<EdgeKind>(pair_count(n < 1 ? 1 : n), fill));
}

EdgeKind MixedGraph::kind(int j, int k) const { return kinds_[pair_index(n_, j, k)]; }

void MixedGraph::set_kind(int j, int k, EdgeKind kind) { kinds_[pair_index(n_, j, k)] = kind; }

Digraph::Digraph(int n) : n_(n), adjacency_(static_cast<std::size_t>(n) * n, 0) {}

void Digraph::add_arc(int tail, int head) {
    adjacency_[static_cast<std::size_t>(tail - 1) * n_ + (head - 1)] = 1;
}

bool Digraph::has_arc(int tail, int head) const {
    return adjacency_[static_cast<std::size_t>(tail - 1) * n_ + (head - 1)] != 0;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int t = 1; t <= n_; ++t) {
        for (int h = 1; h <= n_; ++h) {
            if (has_arc(t, h)) out.emplace_back(t, h);
        }
    }
    return out;
}

std::vector<int> Digraph::in_degrees() const {
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (int t = 1; t <= n_; ++t) {
        for (int h = 1; h <= n_; ++h) {
            if (has_arc(t, h)) ++deg[h - 1];
        }
    }
    return deg;
}

Digraph orient(const MixedGraph& g) {
    Digraph d(g.n());
    for (const auto& [j, k] : canonical_pairs(g.n())) {
        if (g.kind(j, k) == EdgeKind::Up) {
            d.add_arc(j, k);
        } else {
            d.add_arc(k, j);
        }
    }
    return d;
}

std::vector<int> in_degrees_mixed(const MixedGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    for (const auto& [j, k] : canonical_pairs(g.n())) {
        switch (g.kind(j, k)) {
            case EdgeKind::Up: ++deg[k - 1]; break;
            case EdgeKind::Down: ++deg[j - 1]; break;
            case EdgeKind::Downish: break;
        }
    }
    return deg;
}

std::vector<int> in_degrees_oriented(const MixedGraph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    for (const auto& [j, k] : canonical_pairs(g.n())) {
        ++deg[(g.kind(j, k) == EdgeKind::Up ? k : j) - 1];
    }
    return deg;
}

std::optional<Violation> triangle_violation(const MixedGraph& g, int a, int b, int c) {
    const std::array<int, 3> v{a, b, c};
    const std::array<EdgeKind, 3> edges{g.kind(a, b), g.kind(a, c), g.kind(b, c)};
    const std::array<std::pair<int, int>, 3> local{{{0, 1}, {0, 2}, {1, 2}}};

    std::array<int, 3> indeg{0, 0, 0};
    bool has_down = false;
    bool has_downish = false;
    for (std::size_t e = 0; e < 3; ++e) {
        const auto [lo, hi] = local[e];
        ++indeg[edges[e] == EdgeKind::Up ? hi : lo];
        has_down = has_down || edges[e] == EdgeKind::Down;
        has_downish = has_downish || edges[e] == EdgeKind::Downish;
    }
    if (indeg[0] == 1 && indeg[1] == 1 && indeg[2] == 1) {
        return Violation{Violation::Kind::Cycle, v};
    }
    if (!(has_down && has_downish)) return std::nullopt;

    int source = -1;
    int sink = -1;
    for (int i = 0; i < 3; ++i) {
        if (indeg[i] == 0) source = v[i];
        if (indeg[i] == 2) sink = v[i];
    }
    const int lo = std::min(source, sink);
    const int hi = std::max(source, sink);
    if (g.kind(lo, hi) == EdgeKind::Downish) {
        return Violation{Violation::Kind::DownishSourceSink, v};
    }
    return std::nullopt;
}

bool is_acyclic_by_triangles(const MixedGraph& g) {
    const int n = g.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                const auto v = triangle_violation(g, a, b, c);
                if (v && v->kind == Violation::Kind::Cycle) return false;
            }
        }
    }
    return true;
}

std::vector<Violation> all_violations(const MixedGraph& g) {
    std::vector<Violation> out;
    const int n = g.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                if (auto v = triangle_violation(g, a, b, c)) out.push_back(*v);
            }
        }
    }
    return out;
}

std::variant<ParkingGraph, Violation> check_source_sink(const MixedGraph& g) {
    const int n = g.n();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            for (int c = b + 1; c <= n; ++c) {
                if (auto v = triangle_violation(g, a, b, c)) return *v;
            }
        }
    }
    return ParkingGraph(g);
}

ParkingGraph ParkingGraph::certify(MixedGraph g) {
    auto result = check_source_sink(g);
    if (auto* v = std::get_if<Violation>(&result)) {
        throw PreconditionError("not a parking graph: triangle {" +
                                std::to_string(v->vertices[0]) + "," +
                                std::to_string(v->vertices[1]) + "," +
                                std::to_string(v->vertices[2]) + "} violates the " +
                                std::string(to_string(v->kind)) + " condition");
    }
    return std::get<ParkingGraph>(std::move(result));
}

void for_each_parking_graph_with_first(int n, EdgeKind first,
                                       const std::function<void(const ParkingGraph&)>& visit,
                                       int cap) {
    check_enumeration_size(n, cap);
    if (n < 2) throw ValidationError("partitioning by the first pair needs n >= 2");
    std::vector<EdgeKind> kinds(pair_count(n), EdgeKind::Up);
    kinds[0] = first;
    enumerate_suffix(n, std::move(kinds), 1, visit);
}

void for_each_parking_graph(int n, const std::function<void(const ParkingGraph&)>& visit,
                            int cap) {
    check_enumeration_size(n, cap);
    enumerate_suffix(n, std::vector<EdgeKind>(pair_count(n), EdgeKind::Up), 0, visit);
}

std::vector<ParkingGraph> enumerate_parking_graphs(int n, int cap) {
    std::vector<ParkingGraph> out;
    for_each_parking_graph(n, [&](const ParkingGraph& p) { out.push_back(p); }, cap);
    return out;
}

}  // namespace parking
