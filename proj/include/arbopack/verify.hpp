#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arbopack/graph.hpp"
#include "arbopack/packing.hpp"

namespace arbopack {

/// The selected edges and arcs form a spanning tree of V(g) in which every
/// vertex is reachable from `root` (arcs forward, edges either way).
/// Throws InputError on an out-of-range index or root.
bool is_mixed_arborescence(const MixedGraph& g, std::span<const EdgeIndex> edges,
                           std::span<const ArcIndex> arcs, VertexId root);

struct VerificationFailure {
  /// Tree index, or nullopt for a packing-wide failure.
  std::optional<std::size_t> tree;
  std::string reason;
  std::vector<EdgeIndex> edges;
  std::vector<ArcIndex> arcs;
  std::vector<VertexId> vertices;
};

struct VerificationReport {
  std::vector<VerificationFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks tree count, index validity, edge/arc disjointness across trees,
/// that each tree is a spanning mixed arborescence for its root, and the
/// per-vertex root bounds. Every violated check is reported.
VerificationReport verify_packing(const MixedGraph& g, const RootBounds& b, const Packing& p);

inline constexpr std::size_t kOracleMaxVertices = 5;
inline constexpr std::size_t kOracleMaxElements = 9;

struct OracleOptions {
  /// Cut branches that can no longer meet the lower bounds or run out of
  /// elements. Never changes the answer.
  bool prune = true;
};

struct OracleResult {
  bool exists = false;
  std::optional<Packing> witness;
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking search for a packing, independent of any
/// characterization: pick a root and a spanning mixed arborescence among the
/// unused elements for each tree in turn. Trees are generated in
/// nondecreasing root order (and by smallest element for equal roots), so the
/// witness is the first packing in that order. CapacityError above
/// |V| = 5 or |E| + |A| = 9.
OracleResult oracle_pack_exists(const MixedGraph& g, const RootBounds& b, const OracleOptions& options = {});

}  // namespace arbopack
