#pragma once

#include <optional>
#include <vector>

#include "arbopack/conditions.hpp"
#include "arbopack/orient.hpp"
#include "arbopack/packing.hpp"

namespace arbopack {

/// First root-count vector (f <= counts <= g, sum k) that passes
/// check_edmonds, in lexicographic order of the sorted root sequence, i.e.
/// roots are pushed onto low-index vertices first. Requires check_cai_frank
/// to pass (PreconditionError otherwise); running out of candidates after
/// that raises InternalError.
RootMultiset select_roots(const MixedGraph& d, const RootBounds& b,
                          std::size_t limit = kDefaultEnumerationLimit);

/// Whether `arc` (tail in `grown`, head outside) can join the arborescence
/// currently spanning `grown`: after removing it from the available arcs,
/// every nonempty X must still satisfy
///   d^-(X) >= #(remaining roots outside X) + [X misses grown + head].
/// `available` flags the arcs of `d` not yet used by any tree.
bool safe_arc(const MixedGraph& d, const std::vector<bool>& available, VertexSet grown,
              const RootMultiset& remaining, ArcIndex arc, CutBackend backend = CutBackend::enumeration,
              std::size_t limit = kDefaultEnumerationLimit);

/// The same inequality for the current state, without removing an arc.
bool growth_invariant_holds(const MixedGraph& d, const std::vector<bool>& available, VertexSet grown,
                            const RootMultiset& remaining);

struct PackOptions {
  std::size_t limit = kDefaultEnumerationLimit;
  /// Unset: on for |V| <= 8.
  std::optional<bool> paranoid;
  CutBackend backend = CutBackend::enumeration;
};

/// k arc-disjoint spanning arborescences with the given roots. Trees are
/// built one after another (roots in vertex order), each grown by the first
/// safe arc in index order. Requires check_edmonds to pass.
Packing pack_arborescences(const MixedGraph& d, const RootMultiset& roots, const PackOptions& options = {});

struct SolveOutcome {
  /// Present iff the instance is feasible.
  std::optional<Packing> packing;
  FeasibilityReport report;
  std::optional<OrientationResult> orientation;
  std::optional<RootMultiset> roots;
};

/// Feasibility check, then orientation of all edges, root selection and
/// directed packing; arcs that came from edges are reported as those edges.
SolveOutcome pack_mixed(const MixedGraph& g, const RootBounds& b, const PackOptions& options = {});

}  // namespace arbopack
