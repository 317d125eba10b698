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

#include "minorkit/generators.hpp"

#include <charconv>
#include <string>

#include "minorkit/error.hpp"

namespace minorkit {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
  }
  return Graph(a + b, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 0 || cols < 0) throw Error("negative grid dimension");
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (j + 1 < cols) edges.emplace_back(i * cols + j, i * cols + j + 1);
      if (i + 1 < rows) edges.emplace_back(i * cols + j, (i + 1) * cols + j);
    }
  }
  return Graph(rows * cols, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph(10, edges);
}

Graph complete_multipartite(int m, int r) {
  if (m < 0 || r < 0) throw Error("negative multipartite parameter");
  std::vector<Edge> edges;
  const int n = m * r;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (u / m != v / m) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph gnp(int n, double p, Rng& rng) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) throw Error("invalid G(n,p) parameters");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(v))), v);
  return Graph(n, edges);
}

Graph blowup(const Graph& g, int k, bool clique) {
  if (k < 1) throw Error("blow-up factor must be positive");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) edges.emplace_back(e.u * k + a, e.v * k + b);
    }
  }
  if (clique) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) edges.emplace_back(v * k + a, v * k + b);
      }
    }
  }
  return Graph(g.order() * k, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

namespace {

int parse_positive(std::string_view s, std::string_view spec) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value < 0) {
    throw Error("bad number in graph name '" + std::string(spec) + "'");
  }
  return value;
}

std::pair<int, int> parse_pair(std::string_view s, std::string_view spec) {
  const auto x = s.find('x');
  if (x == std::string_view::npos) throw Error("expected AxB in graph name '" + std::string(spec) + "'");
  return {parse_positive(s.substr(0, x), spec), parse_positive(s.substr(x + 1), spec)};
}

}  // namespace

Graph named_graph(std::string_view spec) {
  if (spec == "petersen") return petersen_graph();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw Error("unknown graph name '" + std::string(spec) + "'");
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  if (kind == "complete") return complete_graph(parse_positive(arg, spec));
  if (kind == "path") return path_graph(parse_positive(arg, spec));
  if (kind == "cycle") return cycle_graph(parse_positive(arg, spec));
  if (kind == "star") return star_graph(parse_positive(arg, spec));
  if (kind == "grid") {
    const auto [r, c] = parse_pair(arg, spec);
    return grid_graph(r, c);
  }
  if (kind == "bipartite") {
    const auto [a, b] = parse_pair(arg, spec);
    return complete_bipartite(a, b);
  }
  if (kind == "multipartite") {
    const auto [m, r] = parse_pair(arg, spec);
    return complete_multipartite(m, r);
  }
  throw Error("unknown graph name '" + std::string(spec) + "'");
}

}  // namespace minorkit
