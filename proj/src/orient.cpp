#include "arbopack/orient.hpp"

#include <sstream>

#include "arbopack/errors.hpp"

namespace arbopack {
namespace {

struct TightScan {
  TightFamilies tight;
  std::int64_t lower_slack = 0;
  std::int64_t upper_slack = 0;
  bool first = true;
};

TightScan scan_tight(const MixedGraph& g, const RootBounds& b, std::size_t limit) {
  TightScan s;
  detail::scan_family_values(g, b, limit,
                             [&](auto labels, int t, VertexSet, std::int64_t value, std::int64_t rhs_f,
                                 std::int64_t rhs_g) {
                               if (s.first) {
                                 s.lower_slack = value - rhs_f;
                                 s.upper_slack = value - rhs_g;
                                 s.first = false;
                               }
                               s.lower_slack = std::min(s.lower_slack, value - rhs_f);
                               s.upper_slack = std::min(s.upper_slack, value - rhs_g);
                               if (value == rhs_f) s.tight.lower_tight.push_back(detail::from_labels(labels, t));
                               if (value == rhs_g) s.tight.upper_tight.push_back(detail::from_labels(labels, t));
                             });
  return s;
}

/// Graph after orienting edges [0, oriented): those edges become arcs
/// appended after the original arcs, the rest stay undirected.
MixedGraph intermediate(const MixedGraph& g, const std::vector<Arc>& oriented) {
  std::vector<Arc> arcs(g.arcs().begin(), g.arcs().end());
  arcs.insert(arcs.end(), oriented.begin(), oriented.end());
  std::vector<Edge> edges(g.edges().begin() + static_cast<std::ptrdiff_t>(oriented.size()), g.edges().end());
  return MixedGraph(g.vertex_names(), std::move(edges), std::move(arcs));
}

}  // namespace

std::string describe(const MixedGraph& g, const Subpartition& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (j) out << ", ";
    out << '{';
    bool first = true;
    p.blocks()[j].for_each([&](VertexId v) {
      if (!first) out << ',';
      out << g.name(v);
      first = false;
    });
    out << '}';
  }
  out << ']';
  return out.str();
}

TightFamilies tight_families(const MixedGraph& g, const RootBounds& b, std::size_t limit) {
  auto s = scan_tight(g, b, limit);
  if (s.lower_slack < 0 || s.upper_slack < 0) {
    const auto report = check_feasible(g, b, limit);
    std::string what = "tight families need a feasible instance; condition ";
    what += condition_name(report.violated);
    if (report.witness) what += " fails at " + describe(g, std::get<Subpartition>(*report.witness));
    throw PreconditionError(what);
  }
  return std::move(s.tight);
}

SeparationDecision separating_direction(const TightFamilies& tight, const Edge& e) {
  SeparationDecision decision;
  auto consider = [&](const Subpartition& f, int set) {
    const VertexSet u = f.support();
    const bool has_u = u.contains(e.u);
    const bool has_v = u.contains(e.v);
    if (has_u == has_v) return;
    const Direction wanted = has_v ? Direction::forward : Direction::backward;
    if (decision.direction == Direction::free) {
      decision.direction = wanted;
      decision.family = f;
      decision.tight_set = set;
    } else if (decision.direction != wanted) {
      throw InternalError("tight families demand opposite orientations of one edge");
    }
  };
  for (const auto& f : tight.lower_tight) consider(f, 1);
  for (const auto& f : tight.upper_tight) consider(f, 2);
  return decision;
}

std::vector<EdgeIndex> crossing_edge_set(const MixedGraph& g, VertexSet union1, VertexSet union2) {
  const VertexSet only1 = union1 - union2;
  const VertexSet only2 = union2 - union1;
  std::vector<EdgeIndex> out;
  const auto edges = g.edges();
  for (EdgeIndex i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if ((only1.contains(e.u) && only2.contains(e.v)) || (only2.contains(e.u) && only1.contains(e.v))) {
      out.push_back(i);
    }
  }
  return out;
}

bool paranoid_enabled(const std::optional<bool>& requested, std::size_t vertex_count) {
  return requested.value_or(vertex_count <= 8);
}

std::string describe_steps(const MixedGraph& g, const std::vector<OrientationStep>& steps) {
  std::ostringstream out;
  for (const auto& s : steps) {
    out << "edge #" << s.edge << " -> " << g.name(s.arc.tail) << "->" << g.name(s.arc.head);
    if (s.family) {
      out << " (forced by " << (s.tight_set == 1 ? "lower" : "upper") << "-tight " << describe(g, *s.family)
          << ")";
    } else {
      out << " (free)";
    }
    out << " tight=" << s.lower_tight_count << '/' << s.upper_tight_count << '\n';
  }
  return out.str();
}

OrientationResult orient_all(const MixedGraph& g, const RootBounds& b, const OrientOptions& options) {
  require_enumerable(g.vertex_count(), options.limit);
  const auto initial = check_feasible(g, b, options.limit);
  if (!initial.feasible) {
    std::string what = "cannot orient an infeasible instance; condition ";
    what += condition_name(initial.violated);
    if (initial.witness) what += " fails at " + describe(g, std::get<Subpartition>(*initial.witness));
    throw PreconditionError(what);
  }
  const bool paranoid = paranoid_enabled(options.paranoid, g.vertex_count());

  OrientationResult result;
  result.original_arc_count = g.arcs().size();
  std::vector<Arc> oriented;
  const auto edges = g.edges();
  for (EdgeIndex i = 0; i < edges.size(); ++i) {
    const MixedGraph before = intermediate(g, oriented);
    auto scan = scan_tight(before, b, options.limit);
    if (scan.lower_slack < 0 || scan.upper_slack < 0) {
      throw InternalError("family conditions broke before orienting edge #" + std::to_string(i),
                          describe_steps(g, result.steps));
    }
    const Edge& e = edges[i];
    SeparationDecision decision;
    try {
      decision = separating_direction(scan.tight, e);
    } catch (const InternalError& err) {
      throw InternalError(std::string(err.what()) + " (edge #" + std::to_string(i) + ")",
                          describe_steps(g, result.steps));
    }
    Arc arc{};
    switch (decision.direction) {
      case Direction::forward: arc = {e.u, e.v}; break;
      case Direction::backward: arc = {e.v, e.u}; break;
      case Direction::free: arc = e.u < e.v ? Arc{e.u, e.v} : Arc{e.v, e.u}; break;
    }
    oriented.push_back(arc);
    result.steps.push_back({i, arc, decision.family, decision.tight_set, scan.tight.lower_tight.size(),
                            scan.tight.upper_tight.size()});

    if (paranoid) {
      const MixedGraph after = intermediate(g, oriented);
      for (const auto* list : {&scan.tight.lower_tight, &scan.tight.upper_tight}) {
        for (const auto& f : *list) {
          if (family_value(before, f) != family_value(after, f)) {
            throw InternalError("orienting edge #" + std::to_string(i) + " changed the value of tight family " +
                                    describe(g, f),
                                describe_steps(g, result.steps));
          }
        }
      }
      const auto lower = check_condition_f(after, b, options.limit);
      const auto upper = check_condition_g(after, b, options.limit);
      if (!lower.ok || !upper.ok) {
        throw InternalError("orienting edge #" + std::to_string(i) + " broke a family condition",
                            describe_steps(g, result.steps));
      }
      ++result.paranoid_checks;
    }
  }

  result.orientation = oriented;
  result.digraph = intermediate(g, oriented);
  return result;
}

}  // namespace arbopack
