#include "parking/serialization.hpp"

#include "parking/errors.hpp"

#include <cctype>
#include <sstream>

namespace parking::io {

namespace {

const Json& member(const Json& j, const char* key) {
    if (!j.is_object()) throw ValidationError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("missing field \"") + key + "\"");
    return *it;
}

int integer(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> integer_array(const Json& j, const char* what) {
    if (!j.is_array()) throw ValidationError(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(integer(e, what));
    return out;
}

// Reads [{"j":..,"k":..,<key>:..}, ...] into canonical pair order.
std::vector<const Json*> pairs_in_canonical_order(int n, const Json& list, const char* key) {
    if (!list.is_array()) throw ValidationError("pair list must be an array");
    std::vector<const Json*> slots(pair_count(n), nullptr);
    for (const auto& e : list) {
        const int j = integer(member(e, "j"), "j");
        const int k = integer(member(e, "k"), "k");
        if (j < 1 || k > n || j >= k) {
            throw ValidationError("pair (" + std::to_string(j) + "," + std::to_string(k) +
                                  ") invalid; need 1 <= j < k <= n");
        }
        auto& slot = slots[pair_index(n, j, k)];
        if (slot) {
            throw ValidationError("pair (" + std::to_string(j) + "," + std::to_string(k) +
                                  ") listed twice");
        }
        slot = &member(e, key);
    }
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
            const auto [j, k] = canonical_pairs(n)[i];
            throw ValidationError("pair (" + std::to_string(j) + "," + std::to_string(k) +
                                  ") missing");
        }
    }
    return slots;
}

std::string string_field(const Json& j, const char* what) {
    if (!j.is_string()) throw ValidationError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

int dimension(const Json& j) {
    const int n = integer(member(j, "n"), "n");
    if (n < 1) throw ValidationError("n must be at least 1");
    return n;
}

}  // namespace

std::string canonical(const Json& j) { return j.dump(); }

Json to_json(const ParkingFunction& x) { return Json{{"n", x.size()}, {"pf", x.entries()}}; }

std::vector<int> preference_sequence_from_json(const Json& j) {
    const int n = dimension(j);
    auto entries = integer_array(member(j, "pf"), "pf entries");
    if (static_cast<int>(entries.size()) != n) {
        throw ValidationError("pf has " + std::to_string(entries.size()) + " entries but n = " +
                              std::to_string(n));
    }
    for (int e : entries) {
        if (e < 1) throw ValidationError("pf entries must be positive");
    }
    return entries;
}

ParkingFunction parking_function_from_json(const Json& j) {
    return ParkingFunction(preference_sequence_from_json(j));
}

Json to_json(const MixedGraph& g) {
    Json edges = Json::array();
    for (const auto& [j, k] : canonical_pairs(g.n())) {
        edges.push_back({{"j", j}, {"k", k}, {"kind", std::string(to_string(g.kind(j, k)))}});
    }
    return Json{{"n", g.n()}, {"edges", std::move(edges)}};
}

MixedGraph mixed_graph_from_json(const Json& j) {
    const int n = dimension(j);
    const auto slots = pairs_in_canonical_order(n, member(j, "edges"), "kind");
    std::vector<EdgeKind> kinds;
    kinds.reserve(slots.size());
    for (const Json* s : slots) kinds.push_back(parse_edge_kind(string_field(*s, "kind")));
    return MixedGraph(n, std::move(kinds));
}

Json to_json(const RegionSignVector& sv) {
    Json signs = Json::array();
    for (const auto& [j, k] : canonical_pairs(sv.n())) {
        signs.push_back({{"j", j}, {"k", k}, {"s", std::string(to_string(sv.sign(j, k)))}});
    }
    return Json{{"n", sv.n()}, {"signs", std::move(signs)}};
}

Json to_json(const RegionSignVector& sv, const Witness& w) {
    Json out = to_json(sv);
    out["witness"] = to_json(w.point());
    return out;
}

RegionSignVector sign_vector_from_json(const Json& j) {
    const int n = dimension(j);
    const auto slots = pairs_in_canonical_order(n, member(j, "signs"), "s");
    std::vector<Sign> signs;
    signs.reserve(slots.size());
    for (const Json* s : slots) signs.push_back(parse_sign(string_field(*s, "s")));
    RegionSignVector sv(n, std::move(signs));
    if (j.contains("witness")) {
        const RationalPoint p = point_from_json(j.at("witness"));
        if (p.n() != n || !system_of_sign_vector(sv).strictly_satisfied_by(p)) {
            throw ValidationError("witness does not lie in the region");
        }
    }
    return sv;
}

Json to_json(const RationalPoint& p) {
    Json coords = Json::array();
    for (const auto& x : p.coords()) coords.push_back(to_string(x));
    return Json{{"coords", std::move(coords)}};
}

RationalPoint point_from_json(const Json& j) {
    const Json& list = member(j, "coords");
    if (!list.is_array() || list.empty()) {
        throw ValidationError("coords must be a non-empty array");
    }
    std::vector<Rational> coords;
    for (const auto& e : list) {
        if (e.is_string()) {
            coords.push_back(parse_rational(e.get<std::string>()));
        } else if (e.is_number_integer()) {
            coords.emplace_back(e.get<long long>());
        } else {
            throw ValidationError("coordinates must be rational strings or integers");
        }
    }
    return RationalPoint(std::move(coords));
}

RationalPoint point_from_list(const std::string& text) {
    std::vector<Rational> coords;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) coords.push_back(parse_rational(item));
    if (coords.empty()) throw ValidationError("point needs at least one coordinate");
    if (!text.empty() && text.back() == ',') throw ValidationError("trailing comma in point");
    return RationalPoint(std::move(coords));
}

Json to_json(const LabeledTree& t) {
    Json edges = Json::array();
    for (const auto& [a, b] : t.edges()) edges.push_back(Json::array({a, b}));
    return Json{{"n_vertices", t.vertex_count()}, {"edges", std::move(edges)}};
}

LabeledTree tree_from_json(const Json& j) {
    const int v = integer(member(j, "n_vertices"), "n_vertices");
    const Json& list = member(j, "edges");
    if (!list.is_array()) throw ValidationError("edges must be an array");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : list) {
        if (!e.is_array() || e.size() != 2) {
            throw ValidationError("tree edges must be two-element arrays");
        }
        edges.emplace_back(integer(e[0], "edge endpoint"), integer(e[1], "edge endpoint"));
    }
    return LabeledTree(v, std::move(edges));
}

Json to_json(const PollakCode& c) { return Json{{"code", c.residues()}}; }

PollakCode pollak_code_from_json(const Json& j) {
    auto residues = integer_array(member(j, "code"), "code entries");
    const int n = static_cast<int>(residues.size()) + 1;
    return PollakCode(n, std::move(residues));
}

Json to_json(const PruferCode& c) { return Json{{"code", c.labels()}}; }

PruferCode prufer_code_from_json(const Json& j) {
    auto labels = integer_array(member(j, "code"), "code entries");
    const int v = static_cast<int>(labels.size()) + 2;
    return PruferCode(v, std::move(labels));
}

Json to_json(const AlgorithmTrace& trace, const SourcePriorityVector& s) {
    Json events = Json::array();
    for (const auto& event : trace.events) {
        if (const auto* up = std::get_if<UpStep>(&event)) {
            events.push_back({{"type", "up"}, {"feeder", up->feeder}, {"targets", up->targets}});
        } else if (const auto* down = std::get_if<DownStep>(&event)) {
            events.push_back(
                {{"type", "down"}, {"feeder", down->feeder}, {"targets", down->targets}});
        } else {
            Json pairs = Json::array();
            for (const auto& [a, b] : std::get<Finalize>(event).downish) {
                pairs.push_back(Json::array({a, b}));
            }
            events.push_back({{"type", "finalize"}, {"pairs", std::move(pairs)}});
        }
    }
    return Json{{"events", std::move(events)}, {"s", s.values()}};
}

Json to_json(const Violation& v) {
    return Json{{"kind", std::string(to_string(v.kind))},
                {"vertices", Json::array({v.vertices[0], v.vertices[1], v.vertices[2]})}};
}

Json to_json(const Infeasible& cert, const DifferenceSystem& sys) {
    Json cycle = Json::array();
    for (std::size_t idx : cert.cycle) {
        const auto& c = sys.constraints().at(idx);
        cycle.push_back({{"j", c.j},
                         {"k", c.k},
                         {"relation",
                          c.relation == DifferenceConstraint::Relation::Greater ? ">" : "<"},
                         {"bound", to_string(c.bound)}});
    }
    return Json{{"infeasible_cycle", std::move(cycle)}};
}

std::vector<int> integer_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&](bool required) {
        std::size_t a = 0;
        std::size_t b = token.size();
        while (a < b && std::isspace(static_cast<unsigned char>(token[a]))) ++a;
        while (b > a && std::isspace(static_cast<unsigned char>(token[b - 1]))) --b;
        const std::string item = token.substr(a, b - a);
        token.clear();
        if (item.empty()) {
            if (required) throw ValidationError("empty entry in list '" + text + "'");
            return;
        }
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw ValidationError("not an integer: '" + item + "'");
        }
        if (used != item.size()) throw ValidationError("not an integer: '" + item + "'");
        out.push_back(value);
    };
    for (char c : text) {
        if (c == ',') {
            flush(true);
        } else {
            token.push_back(c);
        }
    }
    flush(!out.empty());
    if (out.empty()) throw ValidationError("empty sequence");
    return out;
}

}  // namespace parking::io
