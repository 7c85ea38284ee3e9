#include "parking/cayley.hpp"

#include "parking/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace parking {

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

LabeledTree::LabeledTree(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 2) throw ValidationError("a labeled tree needs at least 2 vertices");
    if (static_cast<int>(edges_.size()) != vertex_count_ - 1) {
        throw ValidationError("a tree on " + std::to_string(vertex_count_) + " vertices has " +
                              std::to_string(vertex_count_ - 1) + " edges, got " +
                              std::to_string(edges_.size()));
    }
    std::vector<int> parent(static_cast<std::size_t>(vertex_count_) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto& [a, b] : edges_) {
        if (a > b) std::swap(a, b);
        if (a < 1 || b > vertex_count_ || a == b) {
            throw ValidationError("invalid tree edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
        }
        const int ra = find_root(parent, a);
        const int rb = find_root(parent, b);
        if (ra == rb) throw ValidationError("tree edges contain a cycle");
        parent[ra] = rb;
    }
    std::sort(edges_.begin(), edges_.end());
}

PruferCode::PruferCode(int vertex_count, std::vector<int> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count_ < 2) throw ValidationError("a Pruefer code needs at least 2 vertices");
    if (static_cast<int>(labels_.size()) != vertex_count_ - 2) {
        throw ValidationError("Pruefer code for " + std::to_string(vertex_count_) +
                              " vertices has length " + std::to_string(vertex_count_ - 2));
    }
    for (int v : labels_) {
        if (v < 1 || v > vertex_count_) {
            throw ValidationError("Pruefer label " + std::to_string(v) + " outside [1, " +
                                  std::to_string(vertex_count_) + "]");
        }
    }
}

PollakCode::PollakCode(int n, std::vector<int> residues) : n_(n), residues_(std::move(residues)) {
    if (n_ < 1) throw ValidationError("n must be at least 1");
    if (static_cast<int>(residues_.size()) != n_ - 1) {
        throw ValidationError("Pollak code for n = " + std::to_string(n_) + " has length " +
                              std::to_string(n_ - 1));
    }
    for (int r : residues_) {
        if (r < 0 || r > n_) {
            throw ValidationError("residue " + std::to_string(r) + " outside [0, " +
                                  std::to_string(n_) + "]");
        }
    }
}

PruferCode prufer_encode(const LabeledTree& t) {
    const int v = t.vertex_count();
    std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(v) + 1);
    for (const auto& [a, b] : t.edges()) {
        adjacent[a].push_back(b);
        adjacent[b].push_back(a);
    }
    std::vector<int> degree(static_cast<std::size_t>(v) + 1);
    for (int u = 1; u <= v; ++u) degree[u] = static_cast<int>(adjacent[u].size());
    std::vector<bool> removed(static_cast<std::size_t>(v) + 1, false);

    std::vector<int> labels;
    labels.reserve(static_cast<std::size_t>(v) - 2);
    for (int step = 0; step < v - 2; ++step) {
        int leaf = 1;
        while (removed[leaf] || degree[leaf] != 1) ++leaf;
        const int neighbour = *std::find_if(adjacent[leaf].begin(), adjacent[leaf].end(),
                                            [&](int u) { return !removed[u]; });
        labels.push_back(neighbour);
        removed[leaf] = true;
        --degree[neighbour];
    }
    return PruferCode(v, std::move(labels));
}

LabeledTree prufer_decode(const PruferCode& c) {
    const int v = c.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(v) + 1, 1);
    for (int label : c.labels()) ++degree[label];

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(v) - 1);
    for (int label : c.labels()) {
        int leaf = 1;
        while (degree[leaf] != 1) ++leaf;
        edges.emplace_back(leaf, label);
        degree[leaf] = 0;
        --degree[label];
    }
    std::vector<int> last;
    for (int u = 1; u <= v; ++u) {
        if (degree[u] == 1) last.push_back(u);
    }
    if (last.size() != 2) throw InvariantError("Pruefer decoding did not end on a single edge");
    edges.emplace_back(last[0], last[1]);
    return LabeledTree(v, std::move(edges));
}

PollakCode pollak(const ParkingFunction& x) {
    const int n = x.size();
    const int modulus = n + 1;
    std::vector<int> residues;
    residues.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 1; i < n; ++i) {
        residues.push_back(((x[i] - x[i - 1]) % modulus + modulus) % modulus);
    }
    return PollakCode(n, std::move(residues));
}

std::vector<std::vector<int>> pollak_lifts(const PollakCode& c) {
    const int n = c.n();
    const int modulus = n + 1;
    std::vector<std::vector<int>> lifts;
    for (int first = 1; first <= modulus; ++first) {
        std::vector<int> seq;
        seq.reserve(static_cast<std::size_t>(n));
        int offset = first - 1;
        seq.push_back(offset % modulus + 1);
        for (int r : c.residues()) {
            offset += r;
            seq.push_back(offset % modulus + 1);
        }
        if (check_by_sort(seq)) lifts.push_back(std::move(seq));
    }
    return lifts;
}

ParkingFunction pollak_inverse(const PollakCode& c) {
    auto lifts = pollak_lifts(c);
    if (lifts.size() != 1) {
        throw InvariantError("Pollak code has " + std::to_string(lifts.size()) +
                             " parking-function lifts; expected exactly one");
    }
    return ParkingFunction(std::move(lifts.front()));
}

PruferCode prufer_code_of_pollak(const PollakCode& c) {
    std::vector<int> labels(c.residues());
    for (auto& r : labels) ++r;
    return PruferCode(c.n() + 1, std::move(labels));
}

PollakCode pollak_of_prufer_code(const PruferCode& c) {
    std::vector<int> residues(c.labels());
    for (auto& r : residues) --r;
    return PollakCode(c.vertex_count() - 1, std::move(residues));
}

LabeledTree tree_of_parking_function(const ParkingFunction& x) {
    return prufer_decode(prufer_code_of_pollak(pollak(x)));
}

ParkingFunction parking_function_of_tree(const LabeledTree& t) {
    return pollak_inverse(pollak_of_prufer_code(prufer_encode(t)));
}

}  // namespace parking
