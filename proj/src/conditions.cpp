#include "arbopack/conditions.hpp"

#include <algorithm>
#include <limits>

#include "arbopack/errors.hpp"
#include "arbopack/max_flow.hpp"

namespace arbopack {
namespace {

/// Keeps the best violating subpartition seen so far under the total order
/// (slack, blocks, canonical_less).
class FamilyTracker {
 public:
  void offer(std::span<const std::uint8_t> labels, int t, std::int64_t lhs, std::int64_t rhs) {
    const std::int64_t slack = lhs - rhs;
    if (slack < check_.min_slack || first_) {
      check_.min_slack = slack;
      first_ = false;
    }
    if (slack >= 0) return;
    if (check_.witness) {
      const std::int64_t best = check_.witness_lhs - check_.witness_rhs;
      if (slack > best) return;
      if (slack == best) {
        const auto size = static_cast<std::size_t>(t);
        if (size > check_.witness->size()) return;
        if (size == check_.witness->size()) {
          auto candidate = detail::from_labels(labels, t);
          if (!canonical_less(candidate, *check_.witness)) return;
          check_.witness = std::move(candidate);
          check_.witness_lhs = lhs;
          check_.witness_rhs = rhs;
          return;
        }
      }
    }
    check_.ok = false;
    check_.witness = detail::from_labels(labels, t);
    check_.witness_lhs = lhs;
    check_.witness_rhs = rhs;
  }

  FamilyCheck result() const { return check_; }

 private:
  FamilyCheck check_;
  bool first_ = true;
};

struct SetCheck {
  std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
  std::optional<VertexSet> witness;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// Minimum of lhs(X) - rhs(X) over nonempty X, with the worst X as witness
/// (ties: fewer vertices, then smaller mask).
template <class Lhs, class Rhs>
SetCheck scan_sets(std::size_t n, Lhs&& lhs_of, Rhs&& rhs_of) {
  SetCheck out;
  const VertexSet::Bits end = VertexSet::Bits{1} << n;
  for (VertexSet::Bits bits = 1; bits < end; ++bits) {
    const VertexSet x(bits);
    const std::int64_t lhs = lhs_of(x);
    const std::int64_t rhs = rhs_of(x);
    const std::int64_t slack = lhs - rhs;
    out.min_slack = std::min(out.min_slack, slack);
    if (slack >= 0) continue;
    if (out.witness) {
      const std::int64_t best = out.lhs - out.rhs;
      if (slack > best) continue;
      if (slack == best && x.size() >= out.witness->size()) continue;
    }
    out.witness = x;
    out.lhs = lhs;
    out.rhs = rhs;
  }
  return out;
}

std::vector<std::int64_t> all_in_degrees(const MixedGraph& d) {
  const auto n = d.vertex_count();
  std::vector<std::int64_t> deg(std::size_t{1} << n, 0);
  for (VertexSet::Bits bits = 0; bits < deg.size(); ++bits) {
    const VertexSet x(bits);
    std::int64_t c = 0;
    for (const Arc& a : d.arcs()) {
      if (x.contains(a.head) && !x.contains(a.tail)) ++c;
    }
    deg[bits] = c;
  }
  return deg;
}

void require_directed(const MixedGraph& d) {
  if (!d.edges().empty()) throw InputError("expected a digraph, but the graph has undirected edges");
}

FeasibilityReport edmonds_by_enumeration(const MixedGraph& d, const RootMultiset& roots) {
  const auto deg = all_in_degrees(d);
  const std::int64_t total = roots.total();
  auto scan = scan_sets(
      d.vertex_count(), [&](VertexSet x) { return deg[x.bits()]; },
      [&](VertexSet x) { return total - tilde_sum(roots.counts, x); });
  FeasibilityReport r;
  r.min_slack[Condition::edmonds] = scan.min_slack;
  if (scan.witness) {
    r.feasible = false;
    r.violated = Condition::edmonds;
    r.witness = *scan.witness;
    r.witness_lhs = scan.lhs;
    r.witness_rhs = scan.rhs;
  }
  return r;
}

FeasibilityReport edmonds_by_flow(const MixedGraph& d, const RootMultiset& roots) {
  const auto n = d.vertex_count();
  const std::size_t source = n;
  FlowNetwork net(n + 1);
  for (VertexId v = 0; v < n; ++v) {
    if (roots.counts[v] > 0) net.add_arc(source, v, roots.counts[v]);
  }
  for (const Arc& a : d.arcs()) net.add_arc(a.tail, a.head, 1);

  const std::int64_t total = roots.total();
  FeasibilityReport r;
  std::int64_t min_slack = std::numeric_limits<std::int64_t>::max();
  for (VertexId t = 0; t < n; ++t) {
    const std::int64_t flow = net.max_flow(source, t);
    min_slack = std::min(min_slack, flow - total);
    if (flow < total && r.feasible) {
      const auto side = net.source_side(source);
      VertexSet sink;
      for (VertexId v = 0; v < n; ++v) {
        if (!side[v]) sink = sink.with(v);
      }
      r.feasible = false;
      r.violated = Condition::edmonds;
      r.witness = sink;
      r.witness_lhs = in_degree_arcs(d, sink);
      r.witness_rhs = total - tilde_sum(roots.counts, sink);
    }
  }
  r.min_slack[Condition::edmonds] = min_slack;
  return r;
}

void fill_from(FeasibilityReport& r, Condition c, const FamilyCheck& check) {
  r.min_slack[c] = check.min_slack;
  if (r.feasible && !check.ok) {
    r.feasible = false;
    r.violated = c;
    r.witness = *check.witness;
    r.witness_lhs = check.witness_lhs;
    r.witness_rhs = check.witness_rhs;
  }
}

void fill_root_budget(FeasibilityReport& r, const RootBounds& b, VertexSet all) {
  const auto budget = check_root_budget(b, all);
  r.min_slack[Condition::root_budget] = budget.k - budget.lower_total;
  if (!budget.ok) {
    r.feasible = false;
    r.violated = Condition::root_budget;
    r.witness = Subpartition{};
    r.witness_lhs = 0;
    r.witness_rhs = budget.lower_total - budget.k;
  }
}

void require_bounds_match(const MixedGraph& g, const RootBounds& b) {
  if (b.vertex_count() != g.vertex_count()) throw InputError("root bounds do not match the vertex count");
}

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::none: return "none";
    case Condition::root_budget: return "root-budget";
    case Condition::family_f: return "ii";
    case Condition::family_g: return "iii";
    case Condition::edmonds: return "edmonds";
  }
  return "none";
}

int RootMultiset::total() const {
  int s = 0;
  for (int c : counts) s += c;
  return s;
}

std::vector<VertexId> RootMultiset::expanded() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < counts.size(); ++v) out.insert(out.end(), static_cast<std::size_t>(counts[v]), v);
  return out;
}

std::int64_t family_value(const MixedGraph& g, const Subpartition& p) {
  std::int64_t v = crossing_edges(g, p);
  for (VertexSet x : p.blocks()) v += in_degree_arcs(g, x);
  return v;
}

std::int64_t lower_demand(const RootBounds& b, VertexSet all, const Subpartition& p) {
  const auto t = static_cast<std::int64_t>(p.size());
  return b.k() * (t - 1) + tilde_sum(b.lower(), all - p.support());
}

std::int64_t upper_demand(const RootBounds& b, const Subpartition& p) {
  const auto t = static_cast<std::int64_t>(p.size());
  return b.k() * t - tilde_sum(b.upper(), p.support());
}

RootBudgetCheck check_root_budget(const RootBounds& b, VertexSet all) {
  RootBudgetCheck r;
  r.k = b.k();
  r.lower_total = tilde_sum(b.lower(), all);
  r.ok = r.lower_total <= r.k;
  return r;
}

FamilyCheck check_condition_f(const MixedGraph& g, const RootBounds& b, std::size_t limit) {
  require_bounds_match(g, b);
  FamilyTracker tracker;
  detail::scan_family_values(g, b, limit,
                             [&](auto labels, int t, VertexSet, std::int64_t value, std::int64_t rhs_f,
                                 std::int64_t) { tracker.offer(labels, t, value, rhs_f); });
  return tracker.result();
}

FamilyCheck check_condition_g(const MixedGraph& g, const RootBounds& b, std::size_t limit) {
  require_bounds_match(g, b);
  FamilyTracker tracker;
  detail::scan_family_values(g, b, limit,
                             [&](auto labels, int t, VertexSet, std::int64_t value, std::int64_t,
                                 std::int64_t rhs_g) { tracker.offer(labels, t, value, rhs_g); });
  return tracker.result();
}

FeasibilityReport check_feasible(const MixedGraph& g, const RootBounds& b, std::size_t limit) {
  require_bounds_match(g, b);
  FamilyTracker lower;
  FamilyTracker upper;
  detail::scan_family_values(g, b, limit,
                             [&](auto labels, int t, VertexSet, std::int64_t value, std::int64_t rhs_f,
                                 std::int64_t rhs_g) {
                               lower.offer(labels, t, value, rhs_f);
                               upper.offer(labels, t, value, rhs_g);
                             });
  FeasibilityReport r;
  fill_root_budget(r, b, g.vertices());
  fill_from(r, Condition::family_f, lower.result());
  fill_from(r, Condition::family_g, upper.result());
  return r;
}

FeasibilityReport check_edmonds(const MixedGraph& d, const RootMultiset& roots, CutBackend backend,
                                std::size_t limit) {
  require_directed(d);
  if (roots.counts.size() != d.vertex_count()) throw InputError("root multiset does not match the vertex count");
  for (int c : roots.counts) {
    if (c < 0) throw InputError("root multiplicities must be nonnegative");
  }
  switch (backend) {
    case CutBackend::enumeration:
      require_enumerable(d.vertex_count(), limit);
      return edmonds_by_enumeration(d, roots);
    case CutBackend::max_flow:
      return edmonds_by_flow(d, roots);
    case CutBackend::both: {
      require_enumerable(d.vertex_count(), limit);
      auto exact = edmonds_by_enumeration(d, roots);
      auto flow = edmonds_by_flow(d, roots);
      if (exact.feasible != flow.feasible ||
          exact.min_slack[Condition::edmonds] != flow.min_slack[Condition::edmonds]) {
        throw InternalError("cut-condition backends disagree (enumeration " +
                            std::to_string(exact.min_slack[Condition::edmonds]) + ", max-flow " +
                            std::to_string(flow.min_slack[Condition::edmonds]) + ")");
      }
      return exact;
    }
  }
  return {};
}

FeasibilityReport check_cai_frank(const MixedGraph& d, const RootBounds& b, std::size_t limit) {
  require_directed(d);
  require_bounds_match(d, b);
  require_enumerable(d.vertex_count(), limit);
  FeasibilityReport r;
  fill_root_budget(r, b, d.vertices());
  fill_from(r, Condition::family_f, check_condition_f(d, b, limit));

  const auto deg = all_in_degrees(d);
  const std::int64_t k = b.k();
  auto per_set = scan_sets(
      d.vertex_count(), [&](VertexSet x) { return deg[x.bits()]; },
      [&](VertexSet x) { return k - tilde_sum(b.upper(), x); });
  r.min_slack[Condition::family_g] = per_set.min_slack;
  if (r.feasible && per_set.witness) {
    r.feasible = false;
    r.violated = Condition::family_g;
    r.witness = *per_set.witness;
    r.witness_lhs = per_set.lhs;
    r.witness_rhs = per_set.rhs;
  }
  return r;
}

FeasibilityReport check_nash_williams(const MixedGraph& g, int k, std::size_t limit) {
  if (!g.arcs().empty()) throw InputError("expected an undirected graph, but the graph has arcs");
  auto r = check_feasible(g, RootBounds(k, g.vertex_count()), limit);
  if (!r.feasible) {
    const auto& sub = std::get<Subpartition>(*r.witness);
    std::vector<VertexSet> blocks(sub.blocks().begin(), sub.blocks().end());
    const VertexSet rest = g.vertices() - sub.support();
    if (!rest.empty()) blocks.push_back(rest);
    Subpartition partition(std::move(blocks));
    r.witness_lhs = crossing_edges(g, partition);
    r.witness_rhs = static_cast<std::int64_t>(k) * static_cast<std::int64_t>(partition.size() - 1);
    r.witness = std::move(partition);
  }
  return r;
}

}  // namespace arbopack
