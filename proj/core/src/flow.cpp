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

#include "minorkit/flow.hpp"

#include <algorithm>
#include <limits>
#include <deque>
#include <queue>
#include <string>

#include "minorkit/error.hpp"

namespace minorkit {

FlowNetwork::FlowNetwork(int nodes) : head_(static_cast<std::size_t>(nodes)) {}

int FlowNetwork::add_arc(int from, int to, int capacity, int cost) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity, cost, 0});
  arcs_.push_back({from, 0, -cost, 0});
  head_[static_cast<std::size_t>(from)].push_back(id);
  head_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

void FlowNetwork::set_flow(int arc, int amount) {
  arcs_[static_cast<std::size_t>(arc)].flow = amount;
  arcs_[static_cast<std::size_t>(arc ^ 1)].flow = -amount;
}

std::int64_t FlowNetwork::total_cost() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < arcs_.size(); i += 2) {
    total += static_cast<std::int64_t>(arcs_[i].flow) * arcs_[i].cost;
  }
  return total;
}

int FlowNetwork::max_flow(int source, int sink, int limit) {
  int sent = 0;
  const auto n = head_.size();
  std::vector<int> via(n);
  while (sent < limit) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<int> q;
    q.push(source);
    via[static_cast<std::size_t>(source)] = -2;
    while (!q.empty() && via[static_cast<std::size_t>(sink)] == -1) {
      const int v = q.front();
      q.pop();
      for (int a : head_[static_cast<std::size_t>(v)]) {
        const int w = arcs_[static_cast<std::size_t>(a)].to;
        if (via[static_cast<std::size_t>(w)] == -1 && residual(a) > 0) {
          via[static_cast<std::size_t>(w)] = a;
          q.push(w);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -1) break;
    int push = limit - sent;
    for (int v = sink; v != source;) {
      const int a = via[static_cast<std::size_t>(v)];
      push = std::min(push, residual(a));
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    for (int v = sink; v != source;) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(a)].flow += push;
      arcs_[static_cast<std::size_t>(a ^ 1)].flow -= push;
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    sent += push;
  }
  return sent;
}

int FlowNetwork::min_cost_flow(int source, int sink, int limit) {
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  const auto n = head_.size();
  int sent = 0;
  std::vector<std::int64_t> dist(n);
  std::vector<int> via(n);
  std::vector<char> queued(n);
  while (sent < limit) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(via.begin(), via.end(), -1);
    std::fill(queued.begin(), queued.end(), 0);
    std::deque<int> q;
    dist[static_cast<std::size_t>(source)] = 0;
    q.push_back(source);
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      queued[static_cast<std::size_t>(v)] = 0;
      for (int a : head_[static_cast<std::size_t>(v)]) {
        if (residual(a) <= 0) continue;
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        const std::int64_t nd = dist[static_cast<std::size_t>(v)] + arc.cost;
        if (nd < dist[static_cast<std::size_t>(arc.to)]) {
          dist[static_cast<std::size_t>(arc.to)] = nd;
          via[static_cast<std::size_t>(arc.to)] = a;
          if (!queued[static_cast<std::size_t>(arc.to)]) {
            queued[static_cast<std::size_t>(arc.to)] = 1;
            q.push_back(arc.to);
          }
        }
      }
    }
    if (dist[static_cast<std::size_t>(sink)] == kInf) break;
    int push = limit - sent;
    for (int v = sink; v != source;) {
      const int a = via[static_cast<std::size_t>(v)];
      push = std::min(push, residual(a));
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    for (int v = sink; v != source;) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs_[static_cast<std::size_t>(a)].flow += push;
      arcs_[static_cast<std::size_t>(a ^ 1)].flow -= push;
      v = arcs_[static_cast<std::size_t>(a ^ 1)].to;
    }
    sent += push;
  }
  return sent;
}

bool FlowNetwork::cancel_negative_cycle() {
  const int n = nodes();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(n), 0);
  std::vector<int> via(static_cast<std::size_t>(n), -1);
  int last = -1;
  for (int round = 0; round < n; ++round) {
    last = -1;
    for (int v = 0; v < n; ++v) {
      for (int a : head_[static_cast<std::size_t>(v)]) {
        if (residual(a) <= 0) continue;
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (dist[static_cast<std::size_t>(v)] + arc.cost < dist[static_cast<std::size_t>(arc.to)]) {
          dist[static_cast<std::size_t>(arc.to)] = dist[static_cast<std::size_t>(v)] + arc.cost;
          via[static_cast<std::size_t>(arc.to)] = a;
          last = arc.to;
        }
      }
    }
    if (last < 0) return false;
  }
  // `last` was relaxed in round n, so walking back n arcs lands on a cycle.
  int v = last;
  for (int i = 0; i < n; ++i) v = arcs_[static_cast<std::size_t>(via[static_cast<std::size_t>(v)] ^ 1)].to;
  std::vector<int> cycle;
  int u = v;
  do {
    const int a = via[static_cast<std::size_t>(u)];
    cycle.push_back(a);
    u = arcs_[static_cast<std::size_t>(a ^ 1)].to;
  } while (u != v);
  int push = std::numeric_limits<int>::max();
  for (int a : cycle) push = std::min(push, residual(a));
  for (int a : cycle) {
    arcs_[static_cast<std::size_t>(a)].flow += push;
    arcs_[static_cast<std::size_t>(a ^ 1)].flow -= push;
  }
  return true;
}

std::vector<bool> FlowNetwork::residual_reachable(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int a : head_[static_cast<std::size_t>(v)]) {
      const int w = arcs_[static_cast<std::size_t>(a)].to;
      if (!seen[static_cast<std::size_t>(w)] && residual(a) > 0) {
        seen[static_cast<std::size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

SplitNetwork build_split_network(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                 int edge_cost) {
  const int n = g.order();
  // Only vertex arcs have unit capacity, so every finite cut is a vertex set.
  const int big = n + 1;
  SplitNetwork sn{FlowNetwork(2 * n + 2), 2 * n, 2 * n + 1, {}};
  sn.vertex_arc.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) sn.vertex_arc[static_cast<std::size_t>(v)] = sn.net.add_arc(2 * v, 2 * v + 1, 1);
  for (const Edge& e : g.edges()) {
    sn.net.add_arc(2 * e.u + 1, 2 * e.v, big, edge_cost);
    sn.net.add_arc(2 * e.v + 1, 2 * e.u, big, edge_cost);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex v : a) {
    if (!g.contains(v)) throw Error("vertex " + std::to_string(v) + " not in graph");
    if (!(seen[static_cast<std::size_t>(v)] & 1)) sn.net.add_arc(sn.source, 2 * v, big);
    seen[static_cast<std::size_t>(v)] |= 1;
  }
  for (Vertex v : b) {
    if (!g.contains(v)) throw Error("vertex " + std::to_string(v) + " not in graph");
    if (!(seen[static_cast<std::size_t>(v)] & 2)) sn.net.add_arc(2 * v + 1, sn.sink, big);
    seen[static_cast<std::size_t>(v)] |= 2;
  }
  return sn;
}

std::vector<std::vector<Vertex>> decompose_paths(const Graph& g, const SplitNetwork& sn) {
  const int n = g.order();
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  for (int a : sn.net.out_arcs(sn.source)) {
    if (a % 2 == 0) in_a[static_cast<std::size_t>(sn.net.arc(a).to / 2)] = 1;
  }
  for (Vertex v = 0; v < n; ++v) {
    for (int a : sn.net.out_arcs(2 * v + 1)) {
      if (a % 2 == 0 && sn.net.arc(a).to == sn.sink) in_b[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<std::vector<Vertex>> paths;
  for (int a : sn.net.out_arcs(sn.source)) {
    if (a % 2 != 0 || sn.net.flow(a) <= 0) continue;
    std::vector<Vertex> path;
    int node = sn.net.arc(a).to;
    while (node != sn.sink) {
      const Vertex v = node / 2;
      path.push_back(v);
      int next = -1;
      for (int b : sn.net.out_arcs(2 * v + 1)) {
        if (b % 2 == 0 && sn.net.flow(b) > 0) {
          next = sn.net.arc(b).to;
          if (next == sn.sink) break;
        }
      }
      if (next < 0) throw Error("flow is not a union of paths");
      node = next;
    }
    // Trim so the path meets A only at its start and B only at its end.
    std::size_t first_b = 0;
    while (!in_b[static_cast<std::size_t>(path[first_b])]) ++first_b;
    path.resize(first_b + 1);
    std::size_t last_a = path.size() - 1;
    while (!in_a[static_cast<std::size_t>(path[last_a])]) --last_a;
    path.erase(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(last_a));
    paths.push_back(std::move(path));
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

namespace {

std::vector<Vertex> split_cut(const Graph& g, const SplitNetwork& sn) {
  const auto reach = sn.net.residual_reachable(sn.source);
  std::vector<Vertex> cut;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (reach[static_cast<std::size_t>(2 * v)] && !reach[static_cast<std::size_t>(2 * v + 1)]) cut.push_back(v);
  }
  return cut;
}

}  // namespace

DisjointPaths max_disjoint_ab_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                    int limit) {
  SplitNetwork sn = build_split_network(g, a, b, 0);
  const int f = sn.net.max_flow(sn.source, sn.sink, limit);
  DisjointPaths out;
  out.paths = decompose_paths(g, sn);
  if (f < limit) out.cut = split_cut(g, sn);
  return out;
}

DisjointPaths min_total_ab_paths(const Graph& g, std::span<const Vertex> a, std::span<const Vertex> b, int count) {
  SplitNetwork sn = build_split_network(g, a, b, 1);
  const int f = sn.net.min_cost_flow(sn.source, sn.sink, count);
  DisjointPaths out;
  out.paths = decompose_paths(g, sn);
  if (f < count) out.cut = split_cut(g, sn);
  return out;
}

}  // namespace minorkit
