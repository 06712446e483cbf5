#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arbopack/conditions.hpp"
#include "arbopack/graph.hpp"

namespace arbopack {

/// Subpartitions on which the two family conditions hold with equality.
struct TightFamilies {
  std::vector<Subpartition> lower_tight;
  std::vector<Subpartition> upper_tight;
};

/// Exhaustive scan. Throws PreconditionError (naming the witness) if either
/// family condition is violated.
TightFamilies tight_families(const MixedGraph& g, const RootBounds& b,
                             std::size_t limit = kDefaultEnumerationLimit);

/// Relative to an edge's stored endpoint order (u, v).
enum class Direction { forward, backward, free };

struct SeparationDecision {
  Direction direction = Direction::free;
  /// First tight family (lower-tight ones scanned first) whose union holds
  /// exactly one endpoint.
  std::optional<Subpartition> family;
  /// 1 for a lower-tight family, 2 for an upper-tight one, 0 when free.
  int tight_set = 0;
};

/// u -> v when some tight family's union contains v but not u, v -> u in the
/// mirrored case, free otherwise. Two families demanding opposite
/// directions is impossible for a feasible instance and raises
/// InternalError.
SeparationDecision separating_direction(const TightFamilies& tight, const Edge& e);

/// Edges with one end in union1 - union2 and the other in union2 - union1.
std::vector<EdgeIndex> crossing_edge_set(const MixedGraph& g, VertexSet union1, VertexSet union2);

struct OrientationStep {
  EdgeIndex edge = 0;
  Arc arc{};
  std::optional<Subpartition> family;
  int tight_set = 0;
  std::size_t lower_tight_count = 0;
  std::size_t upper_tight_count = 0;
};

struct OrientationResult {
  /// Original arcs keep their indices; edge e becomes arc original_arc_count + e.
  MixedGraph digraph;
  std::size_t original_arc_count = 0;
  /// Oriented copy of every original edge, by edge index.
  std::vector<Arc> orientation;
  std::vector<OrientationStep> steps;
  /// Number of per-step invariant re-checks that ran (0 unless paranoid).
  std::size_t paranoid_checks = 0;

  ArcIndex arc_of_edge(EdgeIndex e) const { return original_arc_count + e; }
};

struct OrientOptions {
  std::size_t limit = kDefaultEnumerationLimit;
  /// Unset: on for |V| <= 8.
  std::optional<bool> paranoid;
};

bool paranoid_enabled(const std::optional<bool>& requested, std::size_t vertex_count);

/// Orients the undirected edges one at a time, lowest index first, following
/// separating_direction; free edges go from the lower to the higher vertex
/// index. Both family conditions are preserved after every step, so the
/// resulting digraph satisfies the digraph conditions for the same bounds.
/// In paranoid mode every step re-checks both conditions and that every
/// pre-step tight family keeps its family value.
OrientationResult orient_all(const MixedGraph& g, const RootBounds& b, const OrientOptions& options = {});

/// One line per step, for diagnostics.
std::string describe_steps(const MixedGraph& g, const std::vector<OrientationStep>& steps);

std::string describe(const MixedGraph& g, const Subpartition& p);

}  // namespace arbopack
