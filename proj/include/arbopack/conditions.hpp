#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "arbopack/graph.hpp"

namespace arbopack {

/// Which inequality a report refers to. `family_f` / `family_g` are the
/// subpartition conditions with lower and upper root bounds; for digraph-only
/// checks `family_g` is the per-set upper-bound condition.
enum class Condition { none, root_budget, family_f, family_g, edmonds };

/// "none", "root-budget", "ii", "iii", "edmonds"
std::string_view condition_name(Condition c);

using Witness = std::variant<Subpartition, VertexSet>;

struct FeasibilityReport {
  bool feasible = true;
  Condition violated = Condition::none;
  std::optional<Witness> witness;
  /// Both sides of the violated inequality evaluated at the witness.
  std::int64_t witness_lhs = 0;
  std::int64_t witness_rhs = 0;
  /// Per condition, min over its quantifier of (lhs - rhs).
  std::map<Condition, std::int64_t> min_slack;
};

/// Multiset of roots as per-vertex multiplicities.
struct RootMultiset {
  std::vector<int> counts;

  int total() const;
  /// Roots listed with multiplicity in vertex order.
  std::vector<VertexId> expanded() const;
  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;
};

enum class CutBackend { enumeration, max_flow, both };

struct RootBudgetCheck {
  bool ok = true;
  std::int64_t lower_total = 0;
  int k = 0;
};

/// Result of a scan over all subpartitions. The witness, present only when
/// violated, has maximal violation; ties go to fewer blocks, then
/// canonical_less.
struct FamilyCheck {
  bool ok = true;
  std::int64_t min_slack = 0;
  std::optional<Subpartition> witness;
  std::int64_t witness_lhs = 0;
  std::int64_t witness_rhs = 0;
};

/// e_E(P) + sum of d_A^-(X) over the blocks of P.
std::int64_t family_value(const MixedGraph& g, const Subpartition& p);
/// k(t-1) + f~(V - U P)
std::int64_t lower_demand(const RootBounds& b, VertexSet all, const Subpartition& p);
/// kt - g~(U P)
std::int64_t upper_demand(const RootBounds& b, const Subpartition& p);

RootBudgetCheck check_root_budget(const RootBounds& b, VertexSet all);
FamilyCheck check_condition_f(const MixedGraph& g, const RootBounds& b,
                              std::size_t limit = kDefaultEnumerationLimit);
FamilyCheck check_condition_g(const MixedGraph& g, const RootBounds& b,
                              std::size_t limit = kDefaultEnumerationLimit);

/// Root budget, then the lower-bound family condition, then the upper-bound
/// family condition; the first failure supplies the witness. A root-budget
/// failure is witnessed by the empty subpartition, for which the lower-bound
/// family condition reads 0 >= f~(V) - k.
FeasibilityReport check_feasible(const MixedGraph& g, const RootBounds& b,
                                 std::size_t limit = kDefaultEnumerationLimit);

/// Cut condition for arc-disjoint spanning arborescences with fixed roots:
/// d^-(X) >= #roots outside X for every nonempty X. The max-flow backend
/// checks min over v of maxflow(super-source, v) >= |R| instead.
FeasibilityReport check_edmonds(const MixedGraph& d, const RootMultiset& roots,
                                CutBackend backend = CutBackend::enumeration,
                                std::size_t limit = kDefaultEnumerationLimit);

/// Digraph version with root bounds: root budget, the lower-bound family
/// condition, and d^-(X) >= k - g~(X) for every nonempty X.
FeasibilityReport check_cai_frank(const MixedGraph& d, const RootBounds& b,
                                  std::size_t limit = kDefaultEnumerationLimit);

/// k edge-disjoint spanning trees. Runs check_feasible with f = 0, g = k and
/// reports the witness as a partition {X0, X1, ..., Xt} of V (the complement
/// of the subpartition is appended when nonempty); witness_rhs is then k*t
/// with t = blocks - 1.
FeasibilityReport check_nash_williams(const MixedGraph& g, int k,
                                      std::size_t limit = kDefaultEnumerationLimit);

namespace detail {

/// Visits every subpartition of V(g) as a labeling together with its
/// family value and both demands.
template <class Fn>
void scan_family_values(const MixedGraph& g, const RootBounds& b, std::size_t limit, Fn&& fn) {
  const auto n = g.vertex_count();
  require_enumerable(n, limit);
  const auto edges = g.edges();
  const auto arcs = g.arcs();
  const auto lower = b.lower();
  const auto upper = b.upper();
  const std::int64_t k = b.k();
  const std::int64_t lower_all = tilde_sum(lower, g.vertices());
  for_each_labeling(n, [&](std::span<const std::uint8_t> labels, int t) {
    std::int64_t value = 0;
    for (const Edge& e : edges) {
      if (labels[e.u] != labels[e.v]) ++value;
    }
    for (const Arc& a : arcs) {
      const auto lh = labels[a.head];
      if (lh != 0 && labels[a.tail] != lh) ++value;
    }
    std::int64_t lower_in = 0;
    std::int64_t upper_in = 0;
    VertexSet support;
    for (VertexId v = 0; v < n; ++v) {
      if (labels[v] == 0) continue;
      lower_in += lower[v];
      upper_in += upper[v];
      support = support.with(v);
    }
    fn(labels, t, support, value, k * (t - 1) + (lower_all - lower_in), k * t - upper_in);
  });
}

}  // namespace detail

}  // namespace arbopack
