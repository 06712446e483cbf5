#include "arbopack/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "arbopack/errors.hpp"

namespace arbopack {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool indices_valid(const MixedGraph& g, const PackedTree& t) {
  return t.root < g.vertex_count() &&
         std::all_of(t.edges.begin(), t.edges.end(), [&](EdgeIndex e) { return e < g.edges().size(); }) &&
         std::all_of(t.arcs.begin(), t.arcs.end(), [&](ArcIndex a) { return a < g.arcs().size(); });
}

}  // namespace

bool is_mixed_arborescence(const MixedGraph& g, std::span<const EdgeIndex> edges, std::span<const ArcIndex> arcs,
                           VertexId root) {
  const auto n = g.vertex_count();
  if (root >= n) throw InputError("root is not a vertex of the graph");
  for (EdgeIndex e : edges) {
    if (e >= g.edges().size()) throw InputError("edge index " + std::to_string(e) + " out of range");
  }
  for (ArcIndex a : arcs) {
    if (a >= g.arcs().size()) throw InputError("arc index " + std::to_string(a) + " out of range");
  }
  if (edges.size() + arcs.size() + 1 != n) return false;

  UnionFind uf(n);
  std::vector<std::vector<VertexId>> out(n);
  for (EdgeIndex i : edges) {
    const auto& e = g.edges()[i];
    if (!uf.unite(e.u, e.v)) return false;
    out[e.u].push_back(e.v);
    out[e.v].push_back(e.u);
  }
  for (ArcIndex i : arcs) {
    const auto& a = g.arcs()[i];
    if (!uf.unite(a.tail, a.head)) return false;
    out[a.tail].push_back(a.head);
  }

  std::vector<bool> seen(n, false);
  std::queue<VertexId> todo;
  seen[root] = true;
  todo.push(root);
  std::size_t reached = 1;
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (VertexId w : out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
    }
  }
  return reached == n;
}

VerificationReport verify_packing(const MixedGraph& g, const RootBounds& b, const Packing& p) {
  VerificationReport report;
  auto& failures = report.failures;

  if (p.trees.size() != static_cast<std::size_t>(b.k())) {
    failures.push_back({std::nullopt,
                        "tree count: expected " + std::to_string(b.k()) + ", got " + std::to_string(p.trees.size()),
                        {}, {}, {}});
  }

  std::map<EdgeIndex, std::vector<std::size_t>> edge_users;
  std::map<ArcIndex, std::vector<std::size_t>> arc_users;
  for (std::size_t i = 0; i < p.trees.size(); ++i) {
    const auto& t = p.trees[i];
    if (!indices_valid(g, t)) {
      failures.push_back({i, "invalid index", {}, {}, {}});
      continue;
    }
    for (EdgeIndex e : t.edges) {
      auto& users = edge_users[e];
      if (users.empty() || users.back() != i) users.push_back(i);
    }
    for (ArcIndex a : t.arcs) {
      auto& users = arc_users[a];
      if (users.empty() || users.back() != i) users.push_back(i);
    }
    if (!is_mixed_arborescence(g, t.edges, t.arcs, t.root)) {
      failures.push_back({i, "not a spanning mixed arborescence at its root", t.edges, t.arcs, {t.root}});
    }
  }

  VerificationFailure shared{std::nullopt, "disjointness", {}, {}, {}};
  for (const auto& [e, users] : edge_users) {
    if (users.size() > 1) shared.edges.push_back(e);
  }
  for (const auto& [a, users] : arc_users) {
    if (users.size() > 1) shared.arcs.push_back(a);
  }
  if (!shared.edges.empty() || !shared.arcs.empty()) failures.push_back(std::move(shared));

  std::vector<int> root_count(g.vertex_count(), 0);
  for (const auto& t : p.trees) {
    if (t.root < g.vertex_count()) ++root_count[t.root];
  }
  VerificationFailure bounds{std::nullopt, "root bounds", {}, {}, {}};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (root_count[v] < b.lower(v) || root_count[v] > b.upper(v)) bounds.vertices.push_back(v);
  }
  if (!bounds.vertices.empty()) failures.push_back(std::move(bounds));
  return report;
}

OracleResult oracle_pack_exists(const MixedGraph& g, const RootBounds& b, const OracleOptions& options) {
  const auto n = g.vertex_count();
  const auto m = g.element_count();
  if (n > kOracleMaxVertices || m > kOracleMaxElements) {
    throw CapacityError("oracle caps exceeded (|V| <= " + std::to_string(kOracleMaxVertices) +
                        ", |E|+|A| <= " + std::to_string(kOracleMaxElements) + ")");
  }
  if (b.vertex_count() != n) throw InputError("root bounds do not match the vertex count");
  const std::size_t edge_count = g.edges().size();
  const std::size_t tree_size = n == 0 ? 0 : n - 1;
  const std::size_t k = static_cast<std::size_t>(b.k());

  OracleResult result;
  std::vector<int> used_roots(n, 0);
  std::vector<bool> used(m, false);
  std::vector<PackedTree> trees;
  std::vector<std::size_t> pick;

  auto lower_bounds_reachable = [&](std::size_t trees_left) {
    std::size_t unmet = 0;
    for (VertexId v = 0; v < n; ++v) unmet += static_cast<std::size_t>(std::max(0, b.lower(v) - used_roots[v]));
    return unmet <= trees_left;
  };

  auto search = [&](auto& self, std::size_t built, VertexId min_root, std::size_t min_first) -> bool {
    if (built == k) return lower_bounds_reachable(0);
    if (options.prune) {
      const auto free = static_cast<std::size_t>(std::count(used.begin(), used.end(), false));
      if (!lower_bounds_reachable(k - built) || free < (k - built) * tree_size) return false;
    }
    for (VertexId r = min_root; r < n; ++r) {
      if (used_roots[r] >= b.upper(r)) continue;
      // Choose tree_size unused elements in increasing order.
      auto choose = [&](auto& rec, std::size_t from) -> bool {
        if (pick.size() == tree_size) {
          ++result.nodes;
          if (r == min_root && built > 0 && tree_size > 0 && pick.front() <= min_first) return false;
          PackedTree t{r, {}, {}};
          for (auto id : pick) (id < edge_count ? t.edges : t.arcs).push_back(id < edge_count ? id : id - edge_count);
          if (!is_mixed_arborescence(g, t.edges, t.arcs, r)) return false;
          for (auto id : pick) used[id] = true;
          ++used_roots[r];
          trees.push_back(std::move(t));
          const std::size_t first = tree_size > 0 ? pick.front() : 0;
          const auto saved = pick;
          pick.clear();
          const bool ok = self(self, built + 1, r, first);
          pick = saved;
          if (ok) return true;
          trees.pop_back();
          --used_roots[r];
          for (auto id : pick) used[id] = false;
          return false;
        }
        for (std::size_t id = from; id < m; ++id) {
          if (used[id]) continue;
          pick.push_back(id);
          const bool ok = rec(rec, id + 1);
          pick.pop_back();
          if (ok) return true;
        }
        return false;
      };
      if (choose(choose, 0)) return true;
    }
    return false;
  };

  if (search(search, 0, 0, 0)) {
    result.exists = true;
    result.witness = Packing{trees};
  }
  return result;
}

}  // namespace arbopack
