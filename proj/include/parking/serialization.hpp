#pragma once

#include "parking/bijections.hpp"
#include "parking/cayley.hpp"
#include "parking/mixed_graph.hpp"
#include "parking/parking_function.hpp"
#include "parking/region.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace parking::io {

using Json = nlohmann::json;

/// Compact dump with sorted keys; the canonical byte form of every object.
std::string canonical(const Json& j);

/// {"n": 4, "pf": [3,1,1,2]}
Json to_json(const ParkingFunction& x);
/// Any positive preference sequence in pf form (not necessarily parking).
std::vector<int> preference_sequence_from_json(const Json& j);
ParkingFunction parking_function_from_json(const Json& j);

/// {"n": 4, "edges": [{"j":1,"k":2,"kind":"downish"}, ...]} in canonical pair order.
Json to_json(const MixedGraph& g);
MixedGraph mixed_graph_from_json(const Json& j);

/// {"n": 3, "signs": [{"j":1,"k":2,"s":"between"}, ...]}
Json to_json(const RegionSignVector& sv);
/// Same, plus "witness": {"coords": [...]}.
Json to_json(const RegionSignVector& sv, const Witness& w);
/// Accepts a sign-vector object (an optional witness must lie inside the region).
RegionSignVector sign_vector_from_json(const Json& j);

/// {"coords": ["6/5","1/2","0"]}; integers are also accepted on input.
Json to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);
/// "6/5,1/2,0"
RationalPoint point_from_list(const std::string& text);

/// {"n_vertices": 4, "edges": [[1,2],[2,3],[3,4]]}
Json to_json(const LabeledTree& t);
LabeledTree tree_from_json(const Json& j);

/// {"code": [...]}; for a Pollak code, n is the length plus one.
Json to_json(const PollakCode& c);
PollakCode pollak_code_from_json(const Json& j);
/// {"code": [...]}; vertex count is the length plus two.
Json to_json(const PruferCode& c);
PruferCode prufer_code_from_json(const Json& j);

/// {"events": [...], "s": [...]}
Json to_json(const AlgorithmTrace& trace, const SourcePriorityVector& s);

Json to_json(const Violation& v);
Json to_json(const Infeasible& cert, const DifferenceSystem& sys);

/// "2,1,1" -> {2,1,1}. Throws ValidationError on empty or malformed input.
std::vector<int> integer_list(const std::string& text);

}  // namespace parking::io
