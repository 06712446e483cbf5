#include <doctest.h>

#include <numeric>
#include <tuple>

#include "arbopack/errors.hpp"
#include "arbopack/verify.hpp"
#include "fixtures.hpp"

using namespace arbopack;

namespace {

/// Some orientation of the selected edges, together with the selected arcs,
/// gives every non-root vertex exactly one entering arc and reaches all
/// vertices from the root.
bool definitional_arborescence(const MixedGraph& g, const std::vector<EdgeIndex>& edges,
                               const std::vector<ArcIndex>& arcs, VertexId root) {
  const auto n = g.vertex_count();
  if (edges.size() + arcs.size() + 1 != n) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Arc> chosen;
    for (ArcIndex a : arcs) chosen.push_back(g.arcs()[a]);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const auto& e = g.edges()[edges[i]];
      chosen.push_back(((mask >> i) & 1U) ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    std::vector<int> indeg(n, 0);
    for (const auto& a : chosen) ++indeg[a.head];
    bool shape = indeg[root] == 0;
    for (VertexId v = 0; v < n && shape; ++v) shape = v == root || indeg[v] == 1;
    if (!shape) continue;
    VertexSet seen = VertexSet::singleton(root);
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& a : chosen) {
        if (seen.contains(a.tail) && !seen.contains(a.head)) {
          seen = seen.with(a.head);
          grew = true;
        }
      }
    }
    if (seen == g.vertices()) return true;
  }
  return false;
}

Packing g3_packing() { return Packing{{PackedTree{0, {}, {0}}, PackedTree{0, {0}, {}}}}; }

bool has_reason(const VerificationReport& r, const std::string& prefix) {
  for (const auto& f : r.failures) {
    if (f.reason.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("is_mixed_arborescence examples") {
  const auto g = fixtures::graph(3, {{0, 1}}, {{1, 2}});
  const std::vector<EdgeIndex> e{0};
  const std::vector<ArcIndex> a{0};
  CHECK(is_mixed_arborescence(g, e, a, 0));
  CHECK(is_mixed_arborescence(g, e, a, 1));
  CHECK_FALSE(is_mixed_arborescence(g, e, a, 2));

  const auto cyc = fixtures::graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(is_mixed_arborescence(cyc, std::vector<EdgeIndex>{0, 1, 2}, {}, 0));
  const auto two_cycle = fixtures::graph(3, {{0, 1}}, {{1, 0}});
  CHECK_FALSE(is_mixed_arborescence(two_cycle, std::vector<EdgeIndex>{0}, std::vector<ArcIndex>{0}, 0));
  CHECK(is_mixed_arborescence(fixtures::graph(1, {}), {}, {}, 0));
  CHECK_THROWS_AS(is_mixed_arborescence(g, std::vector<EdgeIndex>{3}, {}, 0), InputError);
  CHECK_THROWS_AS(is_mixed_arborescence(g, e, a, 5), InputError);
}

TEST_CASE("is_mixed_arborescence agrees with the orientation definition") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 2000; ++round) {
    const std::size_t n = 1 + round % 7;
    const auto g = fixtures::random_graph(rng, n, n + 3);
    // Random selection of n-1 distinct elements.
    std::vector<std::size_t> ids(g.element_count());
    std::iota(ids.begin(), ids.end(), 0);
    std::shuffle(ids.begin(), ids.end(), rng);
    if (ids.size() < n - 1) continue;
    std::vector<EdgeIndex> edges;
    std::vector<ArcIndex> arcs;
    for (std::size_t i = 0; i < n - 1; ++i) {
      if (ids[i] < g.edges().size()) {
        edges.push_back(ids[i]);
      } else {
        arcs.push_back(ids[i] - g.edges().size());
      }
    }
    const VertexId root = rng() % n;
    CHECK(is_mixed_arborescence(g, edges, arcs, root) == definitional_arborescence(g, edges, arcs, root));
  }
}

TEST_CASE("verify_packing examples") {
  const auto g = fixtures::g3();
  const auto b = fixtures::g3_bounds();
  CHECK(verify_packing(g, b, g3_packing()).ok());

  auto relabeled = g3_packing();
  relabeled.trees[1].root = 1;
  const auto r = verify_packing(g, b, relabeled);
  CHECK_FALSE(r.ok());
  CHECK(has_reason(r, "root bounds"));
  CHECK_FALSE(has_reason(r, "not a spanning"));

  auto shared = g3_packing();
  shared.trees[0] = PackedTree{0, {0}, {}};
  const auto s = verify_packing(g, b, shared);
  CHECK(has_reason(s, "disjointness"));

  auto short_by_one = g3_packing();
  short_by_one.trees.pop_back();
  CHECK(has_reason(verify_packing(g, b, short_by_one), "tree count"));

  auto bad_index = g3_packing();
  bad_index.trees[0].arcs = {7};
  CHECK(has_reason(verify_packing(g, b, bad_index), "invalid index"));

  auto not_spanning = g3_packing();
  not_spanning.trees[0].arcs.clear();
  CHECK(has_reason(verify_packing(g, b, not_spanning), "not a spanning"));
}

TEST_CASE("oracle examples") {
  const auto one = oracle_pack_exists(fixtures::triangle(), RootBounds(1, 3));
  CHECK(one.exists);
  REQUIRE(one.witness);
  CHECK(verify_packing(fixtures::triangle(), RootBounds(1, 3), *one.witness).ok());

  CHECK_FALSE(oracle_pack_exists(fixtures::triangle(), RootBounds(2, 3)).exists);

  const auto g3 = oracle_pack_exists(fixtures::g3(), fixtures::g3_bounds());
  CHECK(g3.exists);
  REQUIRE(g3.witness);
  CHECK(verify_packing(fixtures::g3(), fixtures::g3_bounds(), *g3.witness).ok());
  auto sorted = [](Packing p) {
    std::sort(p.trees.begin(), p.trees.end(), [](const PackedTree& a, const PackedTree& b) {
      return std::tie(a.root, a.edges, a.arcs) < std::tie(b.root, b.edges, b.arcs);
    });
    return p;
  };
  CHECK(sorted(*g3.witness) == sorted(g3_packing()));
}

TEST_CASE("oracle caps") {
  CHECK_THROWS_AS(oracle_pack_exists(fixtures::graph(6, {}), RootBounds(1, 6)), CapacityError);
  std::vector<Edge> ten(10, Edge{0, 1});
  CHECK_THROWS_AS(oracle_pack_exists(fixtures::graph(2, ten), RootBounds(1, 2)), CapacityError);
}

TEST_CASE("oracle pruning never changes the answer; witnesses verify") {
  std::mt19937_64 rng(62);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + round % 4;
    const int k = 1 + round % 3;
    const auto g = fixtures::random_graph(rng, n, round % 8);
    const auto b = fixtures::random_bounds(rng, n, k, 3);
    const auto pruned = oracle_pack_exists(g, b);
    const auto full = oracle_pack_exists(g, b, {.prune = false});
    CHECK(pruned.exists == full.exists);
    CHECK(pruned.witness == full.witness);
    CHECK(pruned.nodes <= full.nodes);
    if (pruned.witness) CHECK(verify_packing(g, b, *pruned.witness).ok());
  }
}
