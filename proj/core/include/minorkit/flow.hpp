// Copyright 2026 The minorkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Directed network with integer capacities and costs. Arcs are stored in
/// pairs (forward, reverse) so the residual partner of arc i is i ^ 1.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  int add_arc(int from, int to, int capacity, int cost = 0);
  int nodes() const noexcept { return static_cast<int>(head_.size()); }

  /// Augments along shortest (BFS) paths until `limit` units flow or none remain.
  int max_flow(int source, int sink, int limit);

  /// Successive shortest paths (Bellman-Ford) for up to `limit` units;
  /// returns the amount sent. Requires a network without negative cycles.
  int min_cost_flow(int source, int sink, int limit);

  /// Finds a negative-cost cycle in the residual network and pushes one unit
  /// around it. Returns false when the current flow is cost-optimal.
  bool cancel_negative_cycle();

  /// Nodes reachable from `source` in the residual network.
  std::vector<bool> residual_reachable(int source) const;

  int flow(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }
  int residual(int arc) const {
    const auto& a = arcs_[static_cast<std::size_t>(arc)];
    return a.capacity - a.flow;
  }
  void set_flow(int arc, int amount);
  std::int64_t total_cost() const;

  struct Arc {
    int to;
    int capacity;
    int cost;
    int flow;
  };
  const Arc& arc(int i) const { return arcs_[static_cast<std::size_t>(i)]; }
  std::span<const int> out_arcs(int node) const { return head_[static_cast<std::size_t>(node)]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> head_;
};

/// Split-vertex network for vertex-disjoint A-B paths: vertex v becomes
/// in(v) = 2v and out(v) = 2v+1; the super source and sink follow.
struct SplitNetwork {
  FlowNetwork net;
  int source;
  int sink;
  /// Arc index of the in(v)->out(v) arc for each vertex.
  std::vector<int> vertex_arc;
};

SplitNetwork build_split_network(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                 int edge_cost);

/// Recovers vertex sequences (A end first) from an integral flow.
std::vector<std::vector<Vertex>> decompose_paths(const Graph& g, const SplitNetwork& sn);

struct DisjointPaths {
  std::vector<std::vector<Vertex>> paths;
  /// Minimum A-B separator, reported only when fewer than `limit` paths exist.
  std::vector<Vertex> cut;
};

/// Up to `limit` vertex-disjoint A-B paths by augmenting-path max flow.
/// Paths may be long; use min_total_ab_paths for a geodesic set.
DisjointPaths max_disjoint_ab_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                    int limit);

/// Exactly `count` vertex-disjoint A-B paths of minimum total length, or
/// fewer (with the cut) when max flow is smaller.
DisjointPaths min_total_ab_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b, int count);

}  // namespace minorkit
