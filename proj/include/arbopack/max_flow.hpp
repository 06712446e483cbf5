#pragma once

#include <cstdint>
#include <vector>

namespace arbopack {

/// Small s-t max-flow network backed by Boost.Graph. Used only as the
/// cut-condition cross-check backend.
class FlowNetwork {
 public:
  using Capacity = std::int64_t;
  static constexpr Capacity kInfinite = Capacity{1} << 40;

  explicit FlowNetwork(std::size_t nodes);

  void add_arc(std::size_t from, std::size_t to, Capacity cap);
  /// Computes a maximum s-t flow from scratch (previous flow is discarded).
  Capacity max_flow(std::size_t s, std::size_t t);
  /// Nodes reachable from s in the residual network of the last max_flow.
  std::vector<bool> source_side(std::size_t s) const;

 private:
  struct Link {
    std::size_t from;
    std::size_t to;
    Capacity cap;
  };

  std::size_t nodes_;
  std::vector<Link> links_;
  std::vector<Capacity> residual_;  // per link, then per reverse link
};

}  // namespace arbopack
