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

#include "minorkit/formats.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "minorkit/error.hpp"

namespace minorkit {

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edge-list" || name == "edges" || name == "edgelist") return GraphFormat::edge_list;
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  throw Error("unknown graph format '" + std::string(name) + "'");
}

GraphFormat format_for_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::graph6;
  if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::dimacs;
  return GraphFormat::edge_list;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

std::uint64_t sextet(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw ParseError("truncated graph6 string", base + pos);
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("invalid graph6 character", base + pos);
  return c - 63U;
}

Graph graph6_body(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  std::uint64_t n = 0;
  if (text.empty()) throw ParseError("empty graph6 string", base);
  if (static_cast<unsigned char>(text[0]) != 126) {
    n = sextet(text, 0, base);
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text, i, base);
    pos = 4;
  }
  if (n > 1'000'000) throw ParseError("graph6 order too large", base);
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("truncated graph6 string", base + text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing data after graph6 string", base + pos + bytes);
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = sextet(text, pos + k / 6, base);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (bits % 6 != 0 && bytes > 0) {
    const std::uint64_t last = sextet(text, pos + bytes - 1, base);
    if (last & ((1U << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding", base + pos + bytes - 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  append_size(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    base = kGraph6Header.size();
    text.remove_prefix(base);
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return graph6_body(text, base);
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      std::size_t base = start;
      if (line.substr(0, kGraph6Header.size()) == kGraph6Header) {
        line.remove_prefix(kGraph6Header.size());
        base += kGraph6Header.size();
      }
      out.push_back(graph6_body(line, base));
    }
    start = end + 1;
  }
  return out;
}

// ------------------------------------------------------ line-based formats

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

long long to_int(const Token& t) {
  long long value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError("expected integer", t.offset);
  return value;
}

class EdgeCollector {
 public:
  void add(long long u, long long v, long long n, std::size_t offset, std::size_t line_no) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("vertex out of range", offset);
    if (u == v) throw ParseError("self-loop", offset);
    const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen_.insert(e).second) {
      std::ostringstream w;
      w << "duplicate edge " << e.u << " " << e.v << " on line " << line_no << " ignored";
      warnings_.push_back(w.str());
      return;
    }
    edges_.push_back(e);
  }
  std::vector<Edge>& edges() { return edges_; }
  std::vector<std::string>& warnings() { return warnings_; }

 private:
  std::set<Edge> seen_;
  std::vector<Edge> edges_;
  std::vector<std::string> warnings_;
};

template <class F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t start = 0;
  std::size_t line_no = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    f(text.substr(start, end - start), start, line_no);
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
}

ParseResult parse_edge_list(std::string_view text) {
  long long n = -1;
  long long m = -1;
  long long lines = 0;
  std::size_t header_offset = 0;
  EdgeCollector edges;
  for_each_line(text, [&](std::string_view line, std::size_t base, std::size_t line_no) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_tokens(line, base);
    if (tokens.empty()) return;
    if (tokens.size() != 2) throw ParseError("expected two integers", tokens.size() > 2 ? tokens[2].offset : base);
    if (n < 0) {
      n = to_int(tokens[0]);
      m = to_int(tokens[1]);
      header_offset = tokens[0].offset;
      if (n < 0 || m < 0) throw ParseError("negative header value", tokens[0].offset);
      return;
    }
    ++lines;
    edges.add(to_int(tokens[0]), to_int(tokens[1]), n, tokens[0].offset, line_no);
  });
  if (n < 0) throw ParseError("missing 'n m' header", text.size());
  if (lines != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " + std::to_string(lines) + " follow",
                     header_offset);
  }
  return {Graph(static_cast<int>(n), edges.edges()), std::move(edges.warnings())};
}

ParseResult parse_dimacs(std::string_view text) {
  long long n = -1;
  long long m = -1;
  long long lines = 0;
  EdgeCollector edges;
  for_each_line(text, [&](std::string_view line, std::size_t base, std::size_t line_no) {
    const auto tokens = split_tokens(line, base);
    if (tokens.empty() || tokens[0].text == "c") return;
    if (tokens[0].text == "p") {
      if (n >= 0) throw ParseError("second problem line", tokens[0].offset);
      if (tokens.size() != 4 || (tokens[1].text != "edge" && tokens[1].text != "col")) {
        throw ParseError("expected 'p edge <n> <m>'", tokens[0].offset);
      }
      n = to_int(tokens[2]);
      m = to_int(tokens[3]);
      if (n < 0 || m < 0) throw ParseError("negative problem size", tokens[2].offset);
      return;
    }
    if (tokens[0].text == "e") {
      if (n < 0) throw ParseError("edge before problem line", tokens[0].offset);
      if (tokens.size() != 3) throw ParseError("expected 'e <u> <v>'", tokens[0].offset);
      ++lines;
      edges.add(to_int(tokens[1]) - 1, to_int(tokens[2]) - 1, n, tokens[1].offset, line_no);
      return;
    }
    throw ParseError("unknown DIMACS line type", tokens[0].offset);
  });
  if (n < 0) throw ParseError("missing problem line", text.size());
  if (lines != m) {
    edges.warnings().push_back("problem line declares " + std::to_string(m) + " edges but " +
                               std::to_string(lines) + " edge lines follow");
  }
  return {Graph(static_cast<int>(n), edges.edges()), std::move(edges.warnings())};
}

}  // namespace

ParseResult parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6: {
      const auto body = trim(text);
      const std::size_t base = static_cast<std::size_t>(body.data() - text.data());
      try {
        return {from_graph6(body), {}};
      } catch (const ParseError& e) {
        if (base == 0) throw;
        throw ParseError("invalid graph6 input", base + e.offset());
      }
    }
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::dimacs: return parse_dimacs(text);
  }
  throw Error("unknown graph format");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  switch (format) {
    case GraphFormat::graph6: return to_graph6(g) + "\n";
    case GraphFormat::edge_list:
      out << g.order() << ' ' << g.size() << '\n';
      for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
      break;
    case GraphFormat::dimacs:
      out << "p edge " << g.order() << ' ' << g.size() << '\n';
      for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
      break;
  }
  return out.str();
}

}  // namespace minorkit
