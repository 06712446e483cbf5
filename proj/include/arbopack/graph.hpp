#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arbopack/vertex_set.hpp"

namespace arbopack {

using EdgeIndex = std::size_t;
using ArcIndex = std::size_t;

/// Default upper bound on |V| for the exhaustive (Bell / 2^n) scans.
inline constexpr std::size_t kDefaultEnumerationLimit = 10;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Mixed multigraph (V; E, A). Vertices are opaque names with dense indices
/// in input order; parallel edges and arcs keep their positional index.
/// Loops are rejected.
class MixedGraph {
 public:
  MixedGraph() = default;
  explicit MixedGraph(std::vector<std::string> vertex_names, std::vector<Edge> edges = {},
                      std::vector<Arc> arcs = {});

  std::size_t vertex_count() const { return names_.size(); }
  VertexSet vertices() const { return VertexSet::first(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  VertexId id(std::string_view name) const;

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Arc> arcs() const { return arcs_; }
  std::size_t element_count() const { return edges_.size() + arcs_.size(); }

  MixedGraph with_edge(VertexId u, VertexId v) const;
  MixedGraph with_arc(VertexId tail, VertexId head) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::vector<Edge> edges_;
  std::vector<Arc> arcs_;
};

/// k together with per-vertex lower (f) and upper (g) bounds on how many of
/// the k arborescences may be rooted at each vertex.
class RootBounds {
 public:
  /// f = 0, g = k everywhere.
  RootBounds(int k, std::size_t vertex_count);
  RootBounds(int k, std::vector<int> lower, std::vector<int> upper);

  int k() const { return k_; }
  int lower(VertexId v) const { return lower_.at(v); }
  int upper(VertexId v) const { return upper_.at(v); }
  std::span<const int> lower() const { return lower_; }
  std::span<const int> upper() const { return upper_; }
  std::size_t vertex_count() const { return lower_.size(); }

 private:
  int k_;
  std::vector<int> lower_;
  std::vector<int> upper_;
};

/// Pairwise-disjoint nonempty blocks, stored in canonical order (ascending
/// smallest member). The empty subpartition is valid.
class Subpartition {
 public:
  Subpartition() = default;
  /// Throws InputError on an empty block or overlapping blocks.
  explicit Subpartition(std::vector<VertexSet> blocks);

  std::span<const VertexSet> blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  VertexSet support() const { return support_; }

  friend bool operator==(const Subpartition& a, const Subpartition& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<VertexSet> blocks_;
  VertexSet support_;
};

/// Lexicographic comparison of the canonical block sequences (blocks compared
/// by mask value).
bool canonical_less(const Subpartition& a, const Subpartition& b);

/// d_A^-(X): arcs with head in X and tail outside X, with multiplicity.
std::int64_t in_degree_arcs(const MixedGraph& g, VertexSet x);

/// e_E(P): edges with one end in a block and the other end in a different
/// block or outside every block.
std::int64_t crossing_edges(const MixedGraph& g, const Subpartition& p);

/// sum of h over X; vertices beyond the end of h contribute `fallback`.
std::int64_t tilde_sum(std::span<const int> h, VertexSet x, int fallback = 0);

/// Vertices reachable from `from` along arcs (forward) and edges (either way).
VertexSet mixed_reachable(const MixedGraph& g, VertexSet from);

/// Bell(n), exact for n <= 25.
std::uint64_t bell_number(std::size_t n);

/// Calls `fn` once for every subpartition of `ground` (Bell(|ground|+1) in
/// total, the empty one first). Throws CapacityError above `limit`.
void for_each_subpartition(VertexSet ground, const std::function<void(const Subpartition&)>& fn,
                           std::size_t limit = kDefaultEnumerationLimit);

std::vector<Subpartition> enumerate_subpartitions(VertexSet ground,
                                                  std::size_t limit = kDefaultEnumerationLimit);

/// Throws CapacityError naming the limit when n > limit.
void require_enumerable(std::size_t n, std::size_t limit);

namespace detail {

/// Enumerates subpartitions of {0..n-1} as labelings: label 0 = outside all
/// blocks, labels 1..t = block ids in order of first occurrence (restricted
/// growth), so block ids already follow the canonical order.
template <class Fn>
void for_each_labeling(std::size_t n, Fn&& fn) {
  std::vector<std::uint8_t> labels(n, 0);
  auto rec = [&](auto& self, std::size_t i, int blocks) -> void {
    if (i == n) {
      fn(std::span<const std::uint8_t>(labels), blocks);
      return;
    }
    for (int b = 0; b <= blocks + 1; ++b) {
      labels[i] = static_cast<std::uint8_t>(b);
      self(self, i + 1, b == blocks + 1 ? blocks + 1 : blocks);
    }
  };
  rec(rec, 0, 0);
}

Subpartition from_labels(std::span<const std::uint8_t> labels, int blocks);

}  // namespace detail

}  // namespace arbopack
