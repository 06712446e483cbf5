#include "arbopack/pack.hpp"

#include <algorithm>
#include <numeric>

#include "arbopack/errors.hpp"
#include "arbopack/max_flow.hpp"
#include "arbopack/verify.hpp"

namespace arbopack {
namespace {

bool residual_cut_holds(const MixedGraph& d, const std::vector<bool>& available,
                        std::optional<ArcIndex> removed, VertexSet grown, const RootMultiset& remaining) {
  const auto n = d.vertex_count();
  const auto arcs = d.arcs();
  const std::int64_t total = remaining.total();
  const VertexSet::Bits end = VertexSet::Bits{1} << n;
  for (VertexSet::Bits bits = 1; bits < end; ++bits) {
    const VertexSet x(bits);
    std::int64_t need = total - tilde_sum(remaining.counts, x) + (x.intersects(grown) ? 0 : 1);
    if (need <= 0) continue;
    for (ArcIndex i = 0; i < arcs.size() && need > 0; ++i) {
      if (!available[i] || removed == i) continue;
      if (x.contains(arcs[i].head) && !x.contains(arcs[i].tail)) --need;
    }
    if (need > 0) return false;
  }
  return true;
}

bool residual_cut_holds_by_flow(const MixedGraph& d, const std::vector<bool>& available, ArcIndex removed,
                                VertexSet grown, const RootMultiset& remaining) {
  // Root sets: each remaining root, plus `grown` acting as one root.
  const auto n = d.vertex_count();
  const std::size_t source = n;
  const std::size_t hub = n + 1;
  FlowNetwork net(n + 2);
  for (VertexId v = 0; v < n; ++v) {
    if (remaining.counts[v] > 0) net.add_arc(source, v, remaining.counts[v]);
  }
  net.add_arc(source, hub, 1);
  grown.for_each([&](VertexId v) { net.add_arc(hub, v, FlowNetwork::kInfinite); });
  const auto arcs = d.arcs();
  for (ArcIndex i = 0; i < arcs.size(); ++i) {
    if (available[i] && i != removed) net.add_arc(arcs[i].tail, arcs[i].head, 1);
  }
  const std::int64_t need = remaining.total() + 1;
  for (VertexId t = 0; t < n; ++t) {
    if (net.max_flow(source, t) < need) return false;
  }
  return true;
}

RootMultiset counts_of(std::span<const VertexId> roots, std::size_t n) {
  RootMultiset r{std::vector<int>(n, 0)};
  for (VertexId v : roots) ++r.counts[v];
  return r;
}

}  // namespace

RootMultiset select_roots(const MixedGraph& d, const RootBounds& b, std::size_t limit) {
  const auto precheck = check_cai_frank(d, b, limit);
  if (!precheck.feasible) {
    throw PreconditionError(std::string("root selection needs the digraph conditions; condition ") +
                            std::string(condition_name(precheck.violated)) + " fails");
  }
  const auto n = d.vertex_count();
  const int k = b.k();
  // Suffix sums bound what the remaining vertices can absorb.
  std::vector<std::int64_t> lower_after(n + 1, 0);
  std::vector<std::int64_t> upper_after(n + 1, 0);
  for (std::size_t v = n; v-- > 0;) {
    lower_after[v] = lower_after[v + 1] + b.lower(v);
    upper_after[v] = upper_after[v + 1] + std::min(b.upper(v), k);
  }

  RootMultiset candidate{std::vector<int>(n, 0)};
  std::optional<RootMultiset> found;
  auto rec = [&](auto& self, std::size_t v, int left) -> void {
    if (found) return;
    if (v == n) {
      if (left == 0 && check_edmonds(d, candidate, CutBackend::enumeration, limit).feasible) found = candidate;
      return;
    }
    const int hi = std::min(b.upper(v), left);
    for (int c = hi; c >= b.lower(v) && !found; --c) {
      const int rest = left - c;
      if (rest < lower_after[v + 1] || rest > upper_after[v + 1]) continue;
      candidate.counts[v] = c;
      self(self, v + 1, rest);
    }
    candidate.counts[v] = 0;
  };
  rec(rec, 0, k);
  if (!found) throw InternalError("no root multiset within the bounds satisfies the cut condition");
  return *found;
}

bool safe_arc(const MixedGraph& d, const std::vector<bool>& available, VertexSet grown,
              const RootMultiset& remaining, ArcIndex arc, CutBackend backend, std::size_t limit) {
  if (!d.edges().empty()) throw InputError("safe_arc expects a digraph");
  if (arc >= d.arcs().size() || available.size() != d.arcs().size() || !available[arc]) {
    throw InputError("safe_arc: arc is unknown or already used");
  }
  if (remaining.counts.size() != d.vertex_count()) throw InputError("safe_arc: root multiset size mismatch");
  const Arc& a = d.arcs()[arc];
  if (!grown.contains(a.tail) || grown.contains(a.head)) {
    throw InputError("safe_arc: arc must leave the grown vertex set");
  }
  const VertexSet enlarged = grown.with(a.head);
  switch (backend) {
    case CutBackend::enumeration:
      require_enumerable(d.vertex_count(), limit);
      return residual_cut_holds(d, available, arc, enlarged, remaining);
    case CutBackend::max_flow:
      return residual_cut_holds_by_flow(d, available, arc, enlarged, remaining);
    case CutBackend::both: {
      require_enumerable(d.vertex_count(), limit);
      const bool exact = residual_cut_holds(d, available, arc, enlarged, remaining);
      if (exact != residual_cut_holds_by_flow(d, available, arc, enlarged, remaining)) {
        throw InternalError("safe-arc backends disagree");
      }
      return exact;
    }
  }
  return false;
}

bool growth_invariant_holds(const MixedGraph& d, const std::vector<bool>& available, VertexSet grown,
                            const RootMultiset& remaining) {
  return residual_cut_holds(d, available, std::nullopt, grown, remaining);
}

Packing pack_arborescences(const MixedGraph& d, const RootMultiset& roots, const PackOptions& options) {
  const auto pre = check_edmonds(d, roots, options.backend, options.limit);
  if (!pre.feasible) throw PreconditionError("the root multiset violates the cut condition");

  const auto n = d.vertex_count();
  const bool paranoid = paranoid_enabled(options.paranoid, n);
  const auto order = roots.expanded();
  const auto arcs = d.arcs();
  std::vector<bool> available(arcs.size(), true);
  const VertexSet all = d.vertices();

  Packing packing;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto remaining = counts_of(std::span(order).subspan(i + 1), n);
    PackedTree tree{order[i], {}, {}};
    VertexSet grown = VertexSet::singleton(order[i]);
    while (grown != all) {
      if (paranoid && !growth_invariant_holds(d, available, grown, remaining)) {
        throw InternalError("growth invariant violated while building tree #" + std::to_string(i));
      }
      std::optional<ArcIndex> pick;
      for (ArcIndex a = 0; a < arcs.size() && !pick; ++a) {
        if (!available[a] || !grown.contains(arcs[a].tail) || grown.contains(arcs[a].head)) continue;
        if (safe_arc(d, available, grown, remaining, a, options.backend, options.limit)) pick = a;
      }
      if (!pick) throw InternalError("no safe arc while building tree #" + std::to_string(i));
      available[*pick] = false;
      grown = grown.with(arcs[*pick].head);
      tree.arcs.push_back(*pick);
    }
    std::sort(tree.arcs.begin(), tree.arcs.end());
    packing.trees.push_back(std::move(tree));
  }
  return packing;
}

SolveOutcome pack_mixed(const MixedGraph& g, const RootBounds& b, const PackOptions& options) {
  SolveOutcome out;
  out.report = check_feasible(g, b, options.limit);
  if (!out.report.feasible) return out;

  out.orientation = orient_all(g, b, {options.limit, options.paranoid});
  const auto& orientation = *out.orientation;
  const auto log = [&] { return describe_steps(g, orientation.steps); };

  Packing directed;
  try {
    out.roots = select_roots(orientation.digraph, b, options.limit);
    directed = pack_arborescences(orientation.digraph, *out.roots, options);
  } catch (const InternalError& e) {
    throw InternalError(e.what(), log());
  } catch (const PreconditionError& e) {
    throw InternalError(std::string("oriented digraph rejected: ") + e.what(), log());
  }

  Packing packing;
  for (const auto& t : directed.trees) {
    PackedTree mixed{t.root, {}, {}};
    for (ArcIndex a : t.arcs) {
      if (a < orientation.original_arc_count) {
        mixed.arcs.push_back(a);
      } else {
        mixed.edges.push_back(a - orientation.original_arc_count);
      }
    }
    std::sort(mixed.edges.begin(), mixed.edges.end());
    packing.trees.push_back(std::move(mixed));
  }

  if (paranoid_enabled(options.paranoid, g.vertex_count())) {
    const auto report = verify_packing(g, b, packing);
    if (!report.ok()) {
      throw InternalError("pipeline produced a packing that fails verification: " + report.failures.front().reason,
                          log());
    }
  }
  out.packing = std::move(packing);
  return out;
}

}  // namespace arbopack
