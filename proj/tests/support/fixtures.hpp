#pragma once

// Small named instances and random generators shared by the unit tests and
// the acceptance runner.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arbopack/conditions.hpp"
#include "arbopack/graph.hpp"
#include "arbopack/pieo.hpp"

namespace fixtures {

using arbopack::Arc;
using arbopack::Edge;
using arbopack::MixedGraph;
using arbopack::RootBounds;
using arbopack::VertexSet;

inline std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
  return out;
}

inline MixedGraph graph(std::size_t n, std::vector<Edge> edges, std::vector<Arc> arcs = {}) {
  return MixedGraph(names(n), std::move(edges), std::move(arcs));
}

inline MixedGraph triangle() { return graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline MixedGraph k4() { return graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

inline MixedGraph cycle3() { return graph(3, {}, {{0, 1}, {1, 2}, {2, 0}}); }

inline MixedGraph complete_digraph3() {
  return graph(3, {}, {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}});
}

/// Edge ab plus arc a->b.
inline MixedGraph g3() { return graph(2, {{0, 1}}, {{0, 1}}); }

/// k = 2, f = g = {a:2, b:0}.
inline RootBounds g3_bounds() { return RootBounds(2, {2, 0}, {2, 0}); }

inline RootBounds bounds(int k, std::size_t n) { return RootBounds(k, n); }

/// Uniform endpoints, each element an edge or an arc with equal chance.
inline MixedGraph random_graph(std::mt19937_64& rng, std::size_t n, std::size_t elements, double arc_share = 0.5) {
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  if (n >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::bernoulli_distribution is_arc(arc_share);
    for (std::size_t i = 0; i < elements; ++i) {
      std::size_t u = pick(rng);
      std::size_t v = pick(rng);
      while (v == u) v = pick(rng);
      if (is_arc(rng)) {
        arcs.push_back({u, v});
      } else {
        edges.push_back({u, v});
      }
    }
  }
  return graph(n, std::move(edges), std::move(arcs));
}

/// Bounds with 0 <= f <= g <= max_g (g may exceed k).
inline RootBounds random_bounds(std::mt19937_64& rng, std::size_t n, int k, int max_g) {
  std::vector<int> lower(n);
  std::vector<int> upper(n);
  std::uniform_int_distribution<int> pick(0, max_g);
  for (std::size_t v = 0; v < n; ++v) {
    int a = pick(rng);
    int b = pick(rng);
    if (a > b) std::swap(a, b);
    lower[v] = a;
    upper[v] = b;
  }
  return RootBounds(k, std::move(lower), std::move(upper));
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<VertexSet::Bits> pick(0, (VertexSet::Bits{1} << n) - 1);
  return VertexSet(pick(rng));
}

/// Random subpartition of {0..n-1}: each vertex is left out or put into one
/// of up to n blocks.
inline arbopack::Subpartition random_subpartition(std::mt19937_64& rng, std::size_t n) {
  std::vector<VertexSet> blocks(n);
  std::uniform_int_distribution<std::size_t> pick(0, n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto b = pick(rng);
    if (b < n) blocks[b] = blocks[b].with(v);
  }
  std::vector<VertexSet> nonempty;
  for (auto b : blocks) {
    if (!b.empty()) nonempty.push_back(b);
  }
  return arbopack::Subpartition(std::move(nonempty));
}

/// Random family of at most `max_members` pairwise disjoint nonempty sets
/// over {0..n-1}; each element joins one of m sets or none.
inline arbopack::SetFamily random_disjoint_family(std::mt19937_64& rng, std::size_t n, std::size_t max_members) {
  const std::size_t m = 1 + rng() % std::min(n, max_members);
  std::vector<VertexSet> sets(m);
  std::uniform_int_distribution<std::size_t> pick(0, m);
  for (std::size_t v = 0; v < n; ++v) {
    const auto b = pick(rng);
    if (b < m) sets[b] = sets[b].with(v);
  }
  arbopack::SetFamily out;
  for (auto x : sets) {
    if (!x.empty()) out.push_back(x);
  }
  return out;
}

inline arbopack::SetFamily to_family(const arbopack::Subpartition& p) {
  return arbopack::SetFamily(p.blocks().begin(), p.blocks().end());
}

/// Definitional re-evaluation of a family value from the graph, one block
/// and one element at a time.
inline std::int64_t slow_family_value(const MixedGraph& g, const std::vector<VertexSet>& blocks) {
  auto block_of = [&](std::size_t v) -> int {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (blocks[i].contains(v)) return static_cast<int>(i);
    }
    return -1;
  };
  std::int64_t value = 0;
  for (const auto& e : g.edges()) {
    const int bu = block_of(e.u);
    const int bv = block_of(e.v);
    if ((bu >= 0 || bv >= 0) && bu != bv) ++value;
  }
  for (const auto& x : blocks) {
    for (const auto& a : g.arcs()) {
      if (x.contains(a.head) && !x.contains(a.tail)) ++value;
    }
  }
  return value;
}

}  // namespace fixtures
