#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arbopack/vertex_set.hpp"

namespace arbopack {

/// Multiset of nonempty subsets of a ground set (members may repeat).
using SetFamily = std::vector<VertexSet>;

/// Replacement applied to a properly intersecting pair X, Y:
/// union_and_intersection -> {X u Y, X n Y}, union_only -> {X u Y},
/// intersection_only -> {X n Y}.
enum class PieoType { union_and_intersection = 1, union_only = 2, intersection_only = 3 };

/// X n Y, X - Y and Y - X all nonempty.
bool properly_intersecting(VertexSet x, VertexSet y);

/// Replaces members i and j. The first replacement set takes slot i; for
/// type 1 the intersection takes slot j, otherwise slot j is erased.
/// Throws PreconditionError when the pair is not properly intersecting.
SetFamily pieo_step(const SetFamily& family, std::size_t i, std::size_t j, PieoType type);

bool is_laminar(const SetFamily& family);

/// Indices of the occurrences that are maximal: no other member strictly
/// contains them and, among equal copies, only the first occurrence counts.
std::vector<bool> maximal_occurrences(const SetFamily& family);

/// Every properly intersecting pair in `family` consists of maximal members.
bool properly_intersecting_pairs_are_maximal(const SetFamily& family);

struct PieoStep {
  std::size_t first;
  std::size_t second;
  VertexSet x;
  VertexSet y;
};

struct LaminarizationTrace {
  SetFamily initial;
  std::vector<PieoStep> steps;
  SetFamily final;
  /// Maximal members of `final`.
  SetFamily maximal;
  /// `final` minus `maximal`.
  SetFamily remainder;
};

enum class PairOrder { canonical, random };

struct LaminarizeOptions {
  PairOrder order = PairOrder::canonical;
  std::uint64_t seed = 0;
  /// Called with every intermediate family, the initial one included.
  std::function<void(const SetFamily&)> observer;
};

/// Uncrosses first ⊎ second with type-1 steps until laminar. With the
/// canonical order the lexicographically first properly intersecting index
/// pair is taken each time. Each input family must consist of pairwise
/// disjoint nonempty sets (PreconditionError otherwise).
LaminarizationTrace laminarize_type1(const SetFamily& first, const SetFamily& second,
                                     const LaminarizeOptions& options = {});

/// Union of all members.
VertexSet family_union(const SetFamily& family);

/// Pairwise disjoint nonempty members.
bool is_disjoint_family(const SetFamily& family);

}  // namespace arbopack
