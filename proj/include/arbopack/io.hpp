#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arbopack/conditions.hpp"
#include "arbopack/graph.hpp"
#include "arbopack/orient.hpp"
#include "arbopack/packing.hpp"
#include "arbopack/pieo.hpp"
#include "arbopack/verify.hpp"

namespace arbopack {

using Json = nlohmann::json;

/// An instance document:
///   {"vertices": [...], "edges": [[u,v],...], "arcs": [[tail,head],...],
///    "k": int, "f": {vertex: int}, "g": {vertex: int}}
/// edges/arcs/f/g are optional; f defaults to 0 and g to k.
struct Instance {
  MixedGraph graph;
  RootBounds bounds;
};

/// Throws InputError with a readable message on any malformed input.
Instance parse_instance(std::string_view text);
Instance instance_from_json(const Json& doc);
Json instance_to_json(const Instance& instance);

Json subpartition_to_json(const Subpartition& p, const MixedGraph& g);
Json vertex_set_to_json(VertexSet x, const MixedGraph& g);

Json report_to_json(const FeasibilityReport& report, const MixedGraph& g);
std::string report_to_text(const FeasibilityReport& report, const MixedGraph& g);

/// {"trees": [{"root": name, "edges": [...], "arcs": [...]}, ...]}
Json packing_to_json(const Packing& p, const MixedGraph& g);
std::string packing_to_text(const Packing& p, const MixedGraph& g);
/// Reads the "trees" member; other members are ignored.
Packing packing_from_json(const Json& doc, const MixedGraph& g);
Packing parse_packing(std::string_view text, const MixedGraph& g);

Json steps_to_json(const std::vector<OrientationStep>& steps, const MixedGraph& g);

Json verification_to_json(const VerificationReport& report, const MixedGraph& g);
std::string verification_to_text(const VerificationReport& report, const MixedGraph& g);

Json oracle_to_json(const OracleResult& result, const MixedGraph& g);
std::string oracle_to_text(const OracleResult& result, const MixedGraph& g);

/// {"f1": [[x,...],...], "f2": [[...],...], "order": "canonical"|"random", "seed": n}
/// Elements are strings or integers; their order of first appearance fixes
/// the ground-set indexing.
struct PieoRequest {
  std::vector<std::string> ground;
  SetFamily first;
  SetFamily second;
  PairOrder order = PairOrder::canonical;
  std::uint64_t seed = 0;
};

PieoRequest parse_pieo_request(std::string_view text);
Json trace_to_json(const LaminarizationTrace& trace, const std::vector<std::string>& ground);
std::string trace_to_text(const LaminarizationTrace& trace, const std::vector<std::string>& ground);

}  // namespace arbopack
