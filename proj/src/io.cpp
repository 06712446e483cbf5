#include "arbopack/io.hpp"

#include <sstream>

#include "arbopack/errors.hpp"

namespace arbopack {
namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& member(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) throw InputError(what + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::pair<VertexId, VertexId>> read_pairs(const Json& doc, const char* key,
                                                      const std::map<std::string, VertexId, std::less<>>& ids) {
  std::vector<std::pair<VertexId, VertexId>> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) throw InputError(std::string("'") + key + "' must be a list of pairs");
  for (const auto& pair : *it) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw InputError(std::string("each entry of '") + key + "' must be a pair of vertex names");
    }
    auto lookup = [&](const Json& name) {
      auto found = ids.find(name.get<std::string>());
      if (found == ids.end()) {
        throw InputError(std::string("'") + key + "' references unknown vertex '" + name.get<std::string>() + "'");
      }
      return found->second;
    };
    out.emplace_back(lookup(pair[0]), lookup(pair[1]));
  }
  return out;
}

std::vector<int> read_bound(const Json& doc, const char* key, const std::vector<std::string>& names,
                            const std::map<std::string, VertexId, std::less<>>& ids, int fallback) {
  std::vector<int> out(names.size(), fallback);
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return out;
  if (!it->is_object()) throw InputError(std::string("'") + key + "' must map vertex names to integers");
  for (const auto& [name, value] : it->items()) {
    auto found = ids.find(name);
    if (found == ids.end()) throw InputError(std::string("'") + key + "' names unknown vertex '" + name + "'");
    const auto x = as_int(value, std::string(key) + "(" + name + ")");
    if (x < 0 || x > std::numeric_limits<int>::max()) {
      throw InputError(std::string(key) + "(" + name + ") must be a nonnegative int");
    }
    out[found->second] = static_cast<int>(x);
  }
  return out;
}

Json names_of(VertexSet x, const MixedGraph& g) {
  Json out = Json::array();
  x.for_each([&](VertexId v) { out.push_back(g.name(v)); });
  return out;
}

std::string set_text(VertexSet x, const MixedGraph& g) {
  std::string s = "{";
  bool first = true;
  x.for_each([&](VertexId v) {
    if (!first) s += ',';
    s += g.name(v);
    first = false;
  });
  return s + "}";
}

std::string set_text(VertexSet x, const std::vector<std::string>& ground) {
  std::string s = "{";
  bool first = true;
  x.for_each([&](VertexId v) {
    if (!first) s += ',';
    s += ground[v];
    first = false;
  });
  return s + "}";
}

Json family_to_json(const SetFamily& f, const std::vector<std::string>& ground) {
  Json out = Json::array();
  for (VertexSet x : f) {
    Json members = Json::array();
    x.for_each([&](VertexId v) { members.push_back(ground[v]); });
    out.push_back(std::move(members));
  }
  return out;
}

std::vector<std::size_t> read_indices(const Json& tree, const char* key) {
  std::vector<std::size_t> out;
  auto it = tree.find(key);
  if (it == tree.end() || it->is_null()) return out;
  if (!it->is_array()) throw InputError(std::string("tree '") + key + "' must be a list of indices");
  for (const auto& v : *it) {
    const auto x = as_int(v, std::string("tree '") + key + "' entry");
    if (x < 0) throw InputError(std::string("tree '") + key + "' entries must be nonnegative");
    out.push_back(static_cast<std::size_t>(x));
  }
  return out;
}

}  // namespace

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("instance must be a JSON object");
  const auto& vertices = member(doc, "vertices");
  if (!vertices.is_array() || vertices.empty()) throw InputError("'vertices' must be a nonempty list of names");
  std::vector<std::string> names;
  std::map<std::string, VertexId, std::less<>> ids;
  for (const auto& v : vertices) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    names.push_back(v.get<std::string>());
    if (!ids.emplace(names.back(), names.size() - 1).second) {
      throw InputError("duplicate vertex '" + names.back() + "'");
    }
  }
  if (names.size() > VertexSet::kCapacity) {
    throw CapacityError("at most " + std::to_string(VertexSet::kCapacity) + " vertices are supported");
  }

  std::vector<Edge> edges;
  for (auto [u, v] : read_pairs(doc, "edges", ids)) {
    if (u == v) throw InputError("edge at vertex '" + names[u] + "' is a loop");
    edges.push_back({u, v});
  }
  std::vector<Arc> arcs;
  for (auto [t, h] : read_pairs(doc, "arcs", ids)) {
    if (t == h) throw InputError("arc at vertex '" + names[t] + "' is a loop");
    arcs.push_back({t, h});
  }

  const auto k = as_int(member(doc, "k"), "'k'");
  if (k < 1 || k > std::numeric_limits<int>::max()) throw InputError("'k' must be a positive int");
  auto lower = read_bound(doc, "f", names, ids, 0);
  auto upper = read_bound(doc, "g", names, ids, static_cast<int>(k));
  for (VertexId v = 0; v < names.size(); ++v) {
    if (lower[v] > upper[v]) {
      throw InputError("f(" + names[v] + ") = " + std::to_string(lower[v]) + " exceeds g(" + names[v] +
                       ") = " + std::to_string(upper[v]));
    }
  }
  MixedGraph graph(std::move(names), std::move(edges), std::move(arcs));
  return Instance{std::move(graph), RootBounds(static_cast<int>(k), std::move(lower), std::move(upper))};
}

Instance parse_instance(std::string_view text) { return instance_from_json(parse_json(text)); }

Json instance_to_json(const Instance& instance) {
  const auto& g = instance.graph;
  Json doc;
  doc["vertices"] = g.vertex_names();
  doc["edges"] = Json::array();
  for (const auto& e : g.edges()) doc["edges"].push_back({g.name(e.u), g.name(e.v)});
  doc["arcs"] = Json::array();
  for (const auto& a : g.arcs()) doc["arcs"].push_back({g.name(a.tail), g.name(a.head)});
  doc["k"] = instance.bounds.k();
  doc["f"] = Json::object();
  doc["g"] = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    doc["f"][g.name(v)] = instance.bounds.lower(v);
    doc["g"][g.name(v)] = instance.bounds.upper(v);
  }
  return doc;
}

Json subpartition_to_json(const Subpartition& p, const MixedGraph& g) {
  Json blocks = Json::array();
  for (VertexSet x : p.blocks()) blocks.push_back(names_of(x, g));
  return blocks;
}

Json vertex_set_to_json(VertexSet x, const MixedGraph& g) { return names_of(x, g); }

Json report_to_json(const FeasibilityReport& report, const MixedGraph& g) {
  Json doc;
  doc["feasible"] = report.feasible;
  doc["violated_condition"] = std::string(condition_name(report.violated));
  if (report.witness) {
    Json w;
    if (const auto* p = std::get_if<Subpartition>(&*report.witness)) {
      w["kind"] = "subpartition";
      w["blocks"] = subpartition_to_json(*p, g);
    } else {
      w["kind"] = "vertex_set";
      w["vertices"] = names_of(std::get<VertexSet>(*report.witness), g);
    }
    w["lhs"] = report.witness_lhs;
    w["rhs"] = report.witness_rhs;
    doc["witness"] = std::move(w);
  } else {
    doc["witness"] = nullptr;
  }
  Json slack = Json::object();
  for (const auto& [c, s] : report.min_slack) slack[std::string(condition_name(c))] = s;
  doc["slack_summary"] = std::move(slack);
  return doc;
}

std::string report_to_text(const FeasibilityReport& report, const MixedGraph& g) {
  std::ostringstream out;
  out << (report.feasible ? "feasible" : "infeasible") << '\n';
  if (report.witness) {
    out << "violated condition: " << condition_name(report.violated) << '\n' << "witness: ";
    if (const auto* p = std::get_if<Subpartition>(&*report.witness)) {
      out << describe(g, *p);
    } else {
      out << set_text(std::get<VertexSet>(*report.witness), g);
    }
    out << "  (lhs " << report.witness_lhs << " < rhs " << report.witness_rhs << ")\n";
  }
  out << "min slack:";
  for (const auto& [c, s] : report.min_slack) out << ' ' << condition_name(c) << '=' << s;
  out << '\n';
  return out.str();
}

Json packing_to_json(const Packing& p, const MixedGraph& g) {
  Json trees = Json::array();
  for (const auto& t : p.trees) {
    Json tree;
    tree["root"] = g.name(t.root);
    tree["edges"] = t.edges;
    tree["arcs"] = t.arcs;
    trees.push_back(std::move(tree));
  }
  Json doc;
  doc["trees"] = std::move(trees);
  return doc;
}

std::string packing_to_text(const Packing& p, const MixedGraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.trees.size(); ++i) {
    const auto& t = p.trees[i];
    out << "tree " << i << " root " << g.name(t.root) << ':';
    for (EdgeIndex e : t.edges) {
      out << " e" << e << '{' << g.name(g.edges()[e].u) << ',' << g.name(g.edges()[e].v) << '}';
    }
    for (ArcIndex a : t.arcs) out << " a" << a << '(' << g.name(g.arcs()[a].tail) << "->" << g.name(g.arcs()[a].head) << ')';
    out << '\n';
  }
  return out.str();
}

Packing packing_from_json(const Json& doc, const MixedGraph& g) {
  if (!doc.is_object()) throw InputError("packing must be a JSON object");
  const auto& trees = member(doc, "trees");
  if (!trees.is_array()) throw InputError("'trees' must be a list");
  Packing p;
  for (const auto& tree : trees) {
    if (!tree.is_object()) throw InputError("each tree must be an object");
    const auto& root = member(tree, "root");
    if (!root.is_string()) throw InputError("tree root must be a vertex name");
    p.trees.push_back({g.id(root.get<std::string>()), read_indices(tree, "edges"), read_indices(tree, "arcs")});
  }
  return p;
}

Packing parse_packing(std::string_view text, const MixedGraph& g) { return packing_from_json(parse_json(text), g); }

Json steps_to_json(const std::vector<OrientationStep>& steps, const MixedGraph& g) {
  Json out = Json::array();
  for (const auto& s : steps) {
    Json step;
    step["edge"] = s.edge;
    step["arc"] = {g.name(s.arc.tail), g.name(s.arc.head)};
    if (s.family) {
      step["forced_by"] = {{"tight_set", s.tight_set == 1 ? "lower" : "upper"},
                           {"family", subpartition_to_json(*s.family, g)}};
    } else {
      step["forced_by"] = nullptr;
    }
    step["tight_counts"] = {{"lower", s.lower_tight_count}, {"upper", s.upper_tight_count}};
    out.push_back(std::move(step));
  }
  return out;
}

Json verification_to_json(const VerificationReport& report, const MixedGraph& g) {
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    Json item;
    item["tree"] = f.tree ? Json(*f.tree) : Json(nullptr);
    item["reason"] = f.reason;
    item["edges"] = f.edges;
    item["arcs"] = f.arcs;
    Json vertices = Json::array();
    for (VertexId v : f.vertices) vertices.push_back(g.name(v));
    item["vertices"] = std::move(vertices);
    failures.push_back(std::move(item));
  }
  return {{"ok", report.ok()}, {"failures", std::move(failures)}};
}

std::string verification_to_text(const VerificationReport& report, const MixedGraph& g) {
  if (report.ok()) return "ok\n";
  std::ostringstream out;
  out << "invalid packing\n";
  for (const auto& f : report.failures) {
    out << "  " << (f.tree ? "tree " + std::to_string(*f.tree) : std::string("packing")) << ": " << f.reason;
    for (EdgeIndex e : f.edges) out << " e" << e;
    for (ArcIndex a : f.arcs) out << " a" << a;
    for (VertexId v : f.vertices) out << ' ' << g.name(v);
    out << '\n';
  }
  return out.str();
}

Json oracle_to_json(const OracleResult& result, const MixedGraph& g) {
  Json doc;
  doc["exists"] = result.exists;
  doc["nodes"] = result.nodes;
  doc["witness"] = result.witness ? packing_to_json(*result.witness, g) : Json(nullptr);
  return doc;
}

std::string oracle_to_text(const OracleResult& result, const MixedGraph& g) {
  std::string out = result.exists ? "packing exists\n" : "no packing exists\n";
  if (result.witness) out += packing_to_text(*result.witness, g);
  return out;
}

PieoRequest parse_pieo_request(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw InputError("pieo request must be a JSON object");
  PieoRequest req;
  std::map<std::string, VertexId> ids;
  auto element = [&](const Json& v) -> VertexId {
    std::string key;
    if (v.is_string()) {
      key = v.get<std::string>();
    } else if (v.is_number_integer()) {
      key = std::to_string(v.get<std::int64_t>());
    } else {
      throw InputError("set elements must be strings or integers");
    }
    auto [it, inserted] = ids.emplace(key, req.ground.size());
    if (inserted) {
      if (req.ground.size() == VertexSet::kCapacity) throw CapacityError("at most 64 distinct elements");
      req.ground.push_back(key);
    }
    return it->second;
  };
  auto family = [&](const char* key) {
    SetFamily out;
    const auto& list = member(doc, key);
    if (!list.is_array()) throw InputError(std::string("'") + key + "' must be a list of sets");
    for (const auto& set : list) {
      if (!set.is_array() || set.empty()) throw InputError(std::string("'") + key + "' members must be nonempty lists");
      VertexSet x;
      for (const auto& v : set) x = x.with(element(v));
      out.push_back(x);
    }
    return out;
  };
  req.first = family("f1");
  req.second = family("f2");
  if (auto it = doc.find("order"); it != doc.end()) {
    if (*it == "canonical") {
      req.order = PairOrder::canonical;
    } else if (*it == "random") {
      req.order = PairOrder::random;
    } else {
      throw InputError("'order' must be \"canonical\" or \"random\"");
    }
  }
  if (auto it = doc.find("seed"); it != doc.end()) {
    const auto s = as_int(*it, "'seed'");
    if (s < 0) throw InputError("'seed' must be nonnegative");
    req.seed = static_cast<std::uint64_t>(s);
  }
  return req;
}

Json trace_to_json(const LaminarizationTrace& trace, const std::vector<std::string>& ground) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["pair"] = {s.first, s.second};
    step["replaced"] = family_to_json({s.x, s.y}, ground);
    step["union"] = family_to_json({s.x | s.y}, ground).front();
    step["intersection"] = family_to_json({s.x & s.y}, ground).front();
    steps.push_back(std::move(step));
  }
  Json doc;
  doc["initial"] = family_to_json(trace.initial, ground);
  doc["steps"] = std::move(steps);
  doc["final"] = family_to_json(trace.final, ground);
  doc["maximal"] = family_to_json(trace.maximal, ground);
  doc["remainder"] = family_to_json(trace.remainder, ground);
  return doc;
}

std::string trace_to_text(const LaminarizationTrace& trace, const std::vector<std::string>& ground) {
  auto family = [&](const SetFamily& f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ", " : "") + set_text(f[i], ground);
    return s + "]";
  };
  std::ostringstream out;
  out << "initial:   " << family(trace.initial) << '\n';
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    out << "step " << i + 1 << ": #" << s.first << ' ' << set_text(s.x, ground) << " x #" << s.second << ' '
        << set_text(s.y, ground) << " -> " << set_text(s.x | s.y, ground) << ", " << set_text(s.x & s.y, ground)
        << '\n';
  }
  out << "final:     " << family(trace.final) << '\n';
  out << "maximal:   " << family(trace.maximal) << '\n';
  out << "remainder: " << family(trace.remainder) << '\n';
  return out.str();
}

}  // namespace arbopack
