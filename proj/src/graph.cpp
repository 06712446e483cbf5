#include "arbopack/graph.hpp"

#include <algorithm>
#include <queue>

#include "arbopack/errors.hpp"

namespace arbopack {

MixedGraph::MixedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges,
                       std::vector<Arc> arcs)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), arcs_(std::move(arcs)) {
  if (names_.size() > VertexSet::kCapacity) {
    throw CapacityError("at most " + std::to_string(VertexSet::kCapacity) +
                        " vertices are supported, got " + std::to_string(names_.size()));
  }
  for (VertexId v = 0; v < names_.size(); ++v) {
    if (!index_.emplace(names_[v], v).second) throw InputError("duplicate vertex '" + names_[v] + "'");
  }
  const auto n = names_.size();
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (e.u >= n || e.v >= n) throw InputError("edge #" + std::to_string(i) + " has an unknown endpoint");
    if (e.u == e.v) throw InputError("edge #" + std::to_string(i) + " is a loop");
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto& a = arcs_[i];
    if (a.tail >= n || a.head >= n) throw InputError("arc #" + std::to_string(i) + " has an unknown endpoint");
    if (a.tail == a.head) throw InputError("arc #" + std::to_string(i) + " is a loop");
  }
}

std::optional<VertexId> MixedGraph::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId MixedGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InputError("unknown vertex '" + std::string(name) + "'");
}

MixedGraph MixedGraph::with_edge(VertexId u, VertexId v) const {
  auto edges = edges_;
  edges.push_back({u, v});
  return MixedGraph(names_, std::move(edges), arcs_);
}

MixedGraph MixedGraph::with_arc(VertexId tail, VertexId head) const {
  auto arcs = arcs_;
  arcs.push_back({tail, head});
  return MixedGraph(names_, edges_, std::move(arcs));
}

RootBounds::RootBounds(int k, std::size_t vertex_count)
    : RootBounds(k, std::vector<int>(vertex_count, 0), std::vector<int>(vertex_count, k)) {}

RootBounds::RootBounds(int k, std::vector<int> lower, std::vector<int> upper)
    : k_(k), lower_(std::move(lower)), upper_(std::move(upper)) {
  if (k_ < 1) throw InputError("k must be positive, got " + std::to_string(k_));
  if (lower_.size() != upper_.size()) throw InputError("f and g must cover the same vertices");
  for (std::size_t v = 0; v < lower_.size(); ++v) {
    if (lower_[v] < 0 || upper_[v] < 0) throw InputError("root bounds must be nonnegative");
    if (lower_[v] > upper_[v]) {
      throw InputError("f(" + std::to_string(v) + ") = " + std::to_string(lower_[v]) + " exceeds g = " +
                       std::to_string(upper_[v]));
    }
  }
}

Subpartition::Subpartition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  for (VertexSet b : blocks_) {
    if (b.empty()) throw InputError("subpartition blocks must be nonempty");
    if (support_.intersects(b)) throw InputError("subpartition blocks overlap");
    support_ |= b;
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](VertexSet a, VertexSet b) { return a.lowest() < b.lowest(); });
}

bool canonical_less(const Subpartition& a, const Subpartition& b) {
  auto ab = a.blocks();
  auto bb = b.blocks();
  return std::lexicographical_compare(ab.begin(), ab.end(), bb.begin(), bb.end());
}

std::int64_t in_degree_arcs(const MixedGraph& g, VertexSet x) {
  if (!x.is_subset_of(g.vertices())) throw InputError("vertex set contains an unknown vertex");
  std::int64_t d = 0;
  for (const Arc& a : g.arcs()) {
    if (x.contains(a.head) && !x.contains(a.tail)) ++d;
  }
  return d;
}

std::int64_t crossing_edges(const MixedGraph& g, const Subpartition& p) {
  if (!p.support().is_subset_of(g.vertices())) throw InputError("subpartition contains an unknown vertex");
  std::vector<int> block_of(g.vertex_count(), -1);
  for (std::size_t j = 0; j < p.size(); ++j) {
    p.blocks()[j].for_each([&](VertexId v) { block_of[v] = static_cast<int>(j); });
  }
  std::int64_t count = 0;
  for (const Edge& e : g.edges()) {
    const int bu = block_of[e.u];
    const int bv = block_of[e.v];
    if (bu != bv && (bu >= 0 || bv >= 0)) ++count;
  }
  return count;
}

std::int64_t tilde_sum(std::span<const int> h, VertexSet x, int fallback) {
  std::int64_t s = 0;
  x.for_each([&](VertexId v) { s += v < h.size() ? h[v] : fallback; });
  return s;
}

VertexSet mixed_reachable(const MixedGraph& g, VertexSet from) {
  const auto n = g.vertex_count();
  std::vector<std::vector<VertexId>> out(n);
  for (const Edge& e : g.edges()) {
    out[e.u].push_back(e.v);
    out[e.v].push_back(e.u);
  }
  for (const Arc& a : g.arcs()) out[a.tail].push_back(a.head);

  VertexSet seen = from & g.vertices();
  std::queue<VertexId> todo;
  seen.for_each([&](VertexId v) { todo.push(v); });
  while (!todo.empty()) {
    VertexId v = todo.front();
    todo.pop();
    for (VertexId w : out[v]) {
      if (!seen.contains(w)) {
        seen = seen.with(w);
        todo.push(w);
      }
    }
  }
  return seen;
}

std::uint64_t bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

void require_enumerable(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw CapacityError("exhaustive enumeration over " + std::to_string(n) +
                        " vertices exceeds the limit of " + std::to_string(limit) +
                        " (raise it with --max-n or ARBOPACK_MAX_N)");
  }
}

namespace detail {

Subpartition from_labels(std::span<const std::uint8_t> labels, int blocks) {
  std::vector<VertexSet> sets(static_cast<std::size_t>(blocks));
  for (VertexId v = 0; v < labels.size(); ++v) {
    if (labels[v] != 0) sets[labels[v] - 1U] = sets[labels[v] - 1U].with(v);
  }
  return Subpartition(std::move(sets));
}

}  // namespace detail

void for_each_subpartition(VertexSet ground, const std::function<void(const Subpartition&)>& fn,
                           std::size_t limit) {
  require_enumerable(ground.size(), limit);
  const auto members = ground.members();
  detail::for_each_labeling(members.size(), [&](std::span<const std::uint8_t> labels, int blocks) {
    std::vector<VertexSet> sets(static_cast<std::size_t>(blocks));
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] != 0) sets[labels[i] - 1U] = sets[labels[i] - 1U].with(members[i]);
    }
    fn(Subpartition(std::move(sets)));
  });
}

std::vector<Subpartition> enumerate_subpartitions(VertexSet ground, std::size_t limit) {
  std::vector<Subpartition> out;
  for_each_subpartition(ground, [&](const Subpartition& p) { out.push_back(p); }, limit);
  return out;
}

}  // namespace arbopack
