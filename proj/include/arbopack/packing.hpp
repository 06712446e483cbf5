#pragma once

#include <vector>

#include "arbopack/graph.hpp"

namespace arbopack {

/// One arborescence of a packing: its root and the indices of the edges and
/// arcs it uses (into the graph the packing refers to).
struct PackedTree {
  VertexId root = 0;
  std::vector<EdgeIndex> edges;
  std::vector<ArcIndex> arcs;

  friend bool operator==(const PackedTree&, const PackedTree&) = default;
};

struct Packing {
  std::vector<PackedTree> trees;

  friend bool operator==(const Packing&, const Packing&) = default;
};

}  // namespace arbopack
