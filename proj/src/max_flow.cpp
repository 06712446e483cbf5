#include "arbopack/max_flow.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>
#include <queue>

namespace arbopack {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using Network = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS,
    boost::property<boost::vertex_index_t, long,
                    boost::property<boost::vertex_color_t, boost::default_color_type,
                                    boost::property<boost::vertex_distance_t, long,
                                                    boost::property<boost::vertex_predecessor_t,
                                                                    Traits::edge_descriptor>>>>,
    boost::property<boost::edge_capacity_t, FlowNetwork::Capacity,
                    boost::property<boost::edge_residual_capacity_t, FlowNetwork::Capacity,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

}  // namespace

FlowNetwork::FlowNetwork(std::size_t nodes) : nodes_(nodes) {}

void FlowNetwork::add_arc(std::size_t from, std::size_t to, Capacity cap) {
  links_.push_back({from, to, cap});
}

FlowNetwork::Capacity FlowNetwork::max_flow(std::size_t s, std::size_t t) {
  Network net(nodes_);
  auto cap = boost::get(boost::edge_capacity, net);
  auto rev = boost::get(boost::edge_reverse, net);
  auto res = boost::get(boost::edge_residual_capacity, net);
  std::vector<Traits::edge_descriptor> forward;
  std::vector<Traits::edge_descriptor> backward;
  forward.reserve(links_.size());
  backward.reserve(links_.size());
  for (const auto& l : links_) {
    const auto e = boost::add_edge(l.from, l.to, net).first;
    const auto r = boost::add_edge(l.to, l.from, net).first;
    cap[e] = l.cap;
    cap[r] = 0;
    rev[e] = r;
    rev[r] = e;
    forward.push_back(e);
    backward.push_back(r);
  }
  const Capacity total = boost::boykov_kolmogorov_max_flow(net, s, t);
  residual_.assign(2 * links_.size(), 0);
  for (std::size_t i = 0; i < links_.size(); ++i) {
    residual_[i] = res[forward[i]];
    residual_[links_.size() + i] = res[backward[i]];
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(std::size_t s) const {
  std::vector<std::vector<std::size_t>> out(nodes_);
  const std::size_t m = links_.size();
  for (std::size_t i = 0; i < m && residual_.size() == 2 * m; ++i) {
    if (residual_[i] > 0) out[links_[i].from].push_back(links_[i].to);
    if (residual_[m + i] > 0) out[links_[i].to].push_back(links_[i].from);
  }
  std::vector<bool> seen(nodes_, false);
  std::queue<std::size_t> todo;
  seen[s] = true;
  todo.push(s);
  while (!todo.empty()) {
    const auto v = todo.front();
    todo.pop();
    for (auto w : out[v]) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push(w);
      }
    }
  }
  return seen;
}

}  // namespace arbopack
