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

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "minorkit/enumerate.hpp"
#include "minorkit/formats.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/rng.hpp"
#include "minorkit_cli/cli.hpp"

namespace minorkit::cli {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 15]);
  }
  return out;
}

namespace {

Instance make_instance(Graph g, std::string source) {
  Instance inst;
  inst.graph6 = to_graph6(g);
  inst.digest = sha256_hex(inst.graph6);
  inst.graph = std::move(g);
  inst.source = std::move(source);
  return inst;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void load_file(const fs::path& p, const std::string& label, std::vector<Instance>& out) {
  const std::string text = read_file(p);
  const GraphFormat fmt = format_for_path(p.string());
  if (fmt != GraphFormat::graph6) {
    out.push_back(make_instance(parse_graph(text, fmt).graph, label));
    return;
  }
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(make_instance(from_graph6(line), label + ":" + std::to_string(lineno)));
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

long long to_int(const std::string& s, const std::string& spec) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw Error("bad number '" + s + "' in corpus spec " + spec);
  return v;
}

double to_double(const std::string& s, const std::string& spec) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error("bad number '" + s + "' in corpus spec " + spec);
  return v;
}

}  // namespace

std::vector<Instance> load_corpus(const std::string& spec, std::uint64_t seed) {
  std::vector<Instance> out;
  const std::vector<std::string> parts = split(spec, ':');
  if (parts[0] == "enum" && parts.size() == 2) {
    const long long n = to_int(parts[1], spec);
    if (n < 0 || n > 8) throw Error("enum corpus supports at most 8 vertices");
    for (Graph& g : all_graphs_up_to(static_cast<int>(n))) out.push_back(make_instance(std::move(g), spec));
  } else if (parts[0] == "gnp" && parts.size() == 4) {
    const long long count = to_int(parts[1], spec);
    const long long n = to_int(parts[2], spec);
    const double p = to_double(parts[3], spec);
    if (count < 0 || n < 0 || n > 64 || !(p >= 0 && p <= 1)) throw Error("invalid gnp corpus spec " + spec);
    const Rng root(seed);
    for (long long i = 0; i < count; ++i) {
      Rng rng = root.split(static_cast<std::uint64_t>(i));
      out.push_back(make_instance(gnp(static_cast<int>(n), p, rng), spec + "#" + std::to_string(i)));
    }
  } else if (parts[0] == "tree" && parts.size() == 3) {
    const long long count = to_int(parts[1], spec);
    const long long n = to_int(parts[2], spec);
    if (count < 0 || n < 1 || n > 64) throw Error("invalid tree corpus spec " + spec);
    const Rng root(seed);
    for (long long i = 0; i < count; ++i) {
      Rng rng = root.split(static_cast<std::uint64_t>(i));
      out.push_back(make_instance(random_tree(static_cast<int>(n), rng), spec + "#" + std::to_string(i)));
    }
  } else {
    const fs::path p(spec);
    if (fs::is_directory(p)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().filename() != "manifest.json") files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      for (const fs::path& f : files) load_file(f, f.filename().string(), out);
    } else if (fs::is_regular_file(p)) {
      load_file(p, p.filename().string(), out);
    } else {
      throw Error("corpus not found: " + spec);
    }
  }
  std::sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
    return a.digest != b.digest ? a.digest < b.digest : a.source < b.source;
  });
  return out;
}

}  // namespace minorkit::cli
