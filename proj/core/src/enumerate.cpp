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

#include "minorkit/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "minorkit/error.hpp"
#include "minorkit/formats.hpp"

namespace minorkit {

namespace {

using Cells = std::vector<std::vector<int>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
    for (const Edge& e : g.edges()) {
      adj_[static_cast<std::size_t>(e.u)] |= 1U << e.v;
      adj_[static_cast<std::size_t>(e.v)] |= 1U << e.u;
    }
  }

  std::vector<int> run() {
    Cells cells(1);
    for (int v = 0; v < n_; ++v) cells[0].push_back(v);
    if (n_ > 0) search(std::move(cells));
    return best_order_;
  }

 private:
  // Splits cells by neighbour counts into each splitter cell until stable.
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint32_t splitter = 0;
        for (int v : cells[s]) splitter |= 1U << v;
        for (std::size_t c = 0; c < cells.size(); ++c) {
          if (cells[c].size() < 2) continue;
          std::vector<std::pair<int, int>> keyed;
          for (int v : cells[c]) keyed.emplace_back(__builtin_popcount(adj_[static_cast<std::size_t>(v)] & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& a, const auto& b) { return a.first < b.first; });
          if (keyed.front().first == keyed.back().first) continue;
          Cells parts;
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) parts.emplace_back();
            parts.back().push_back(keyed[i].second);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  void search(Cells cells) {
    refine(cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
    }
    if (target == cells.size()) {
      std::uint64_t code = 0;
      for (int j = 1; j < n_; ++j) {
        for (int i = 0; i < j; ++i) {
          const int a = cells[static_cast<std::size_t>(i)][0];
          const int b = cells[static_cast<std::size_t>(j)][0];
          code = (code << 1) | ((adj_[static_cast<std::size_t>(a)] >> b) & 1U);
        }
      }
      if (best_order_.empty() || code > best_code_) {
        best_code_ = code;
        best_order_.clear();
        for (const auto& c : cells) best_order_.push_back(c[0]);
      }
      return;
    }
    for (int v : cells[target]) {
      Cells next = cells;
      auto& cell = next[target];
      cell.erase(std::find(cell.begin(), cell.end(), v));
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(target), std::vector<int>{v});
      search(std::move(next));
    }
  }

  int n_;
  std::vector<std::uint32_t> adj_;
  std::uint64_t best_code_ = 0;
  std::vector<int> best_order_;
};

}  // namespace

Graph canonical_form(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) throw Error("canonical form limited to 11 vertices");
  const auto order = Canonizer(g).run();
  std::vector<Vertex> position(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) position[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.emplace_back(position[static_cast<std::size_t>(e.u)], position[static_cast<std::size_t>(e.v)]);
  }
  return Graph(g.order(), edges);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

namespace {

// Every graph on n vertices is some graph on n-1 vertices plus a new vertex.
std::vector<Graph> extend(const std::vector<Graph>& previous, int n) {
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const Graph& base : previous) {
    for (std::uint32_t subset = 0; subset < (1U << (n - 1)); ++subset) {
      std::vector<Edge> edges = base.edges();
      for (Vertex v = 0; v < n - 1; ++v) {
        if ((subset >> v) & 1U) edges.emplace_back(v, n - 1);
      }
      Graph canon = canonical_form(Graph(n, edges));
      if (seen.insert(to_graph6(canon)).second) out.push_back(std::move(canon));
    }
  }
  std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
  return out;
}

}  // namespace

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 9) throw Error("graph enumeration supported for 0 <= n <= 9");
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) level = extend(level, k);
  return level;
}

std::vector<Graph> all_graphs_up_to(int max_n) {
  if (max_n < 0 || max_n > 9) throw Error("graph enumeration supported for 0 <= n <= 9");
  std::vector<Graph> out;
  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= max_n; ++k) {
    level = extend(level, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace minorkit
