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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "minorkit/formats.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/linkage.hpp"
#include "minorkit/minors.hpp"
#include "minorkit/rng.hpp"
#include "minorkit/serialize.hpp"
#include "minorkit_cli/cli.hpp"

namespace minorkit::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

/// Parameter problems detected after CLI11 parsing; reported as usage errors.
struct UsageError : Error {
  using Error::Error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

Graph load_graph(const std::string& path) {
  const std::string text = read_text(path);
  const GraphFormat fmt = format_for_path(path);
  if (fmt == GraphFormat::graph6) {
    const std::vector<Graph> all = parse_graph6_lines(text);
    if (all.empty()) throw UsageError("no graph in " + path);
    return all.front();
  }
  return parse_graph(text, fmt).graph;
}

Graph instance_graph(const std::string& file, const std::string& named) {
  if (file.empty() == named.empty()) throw UsageError("give exactly one of --graph and --named");
  if (!file.empty()) return load_graph(file);
  try {
    return named_graph(named);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + text + "'");
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> pair_list(const std::string& text) {
  std::vector<std::pair<Vertex, Vertex>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw UsageError("pairs are written s-t, got '" + item + "'");
    const std::vector<int> ends = int_list(item.substr(0, dash) + "," + item.substr(dash + 1));
    if (ends.size() != 2) throw UsageError("bad pair '" + item + "'");
    out.emplace_back(ends[0], ends[1]);
  }
  return out;
}

// ------------------------------------------------------------------ generate

struct GenerateArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  int rows = 0;
  int cols = 0;
  int m = 0;
  int r = 0;
  std::string base;
  int k = 0;
  bool clique = false;
  int count = 1;
  std::uint64_t seed = 0;
  std::string out = ".";
};

std::vector<Graph> generate_graphs(const GenerateArgs& a, Json& params) {
  std::vector<Graph> graphs;
  auto need = [](bool ok, const char* what) {
    if (!ok) throw UsageError(what);
  };
  if (a.kind == "gnp") {
    need(a.n >= 0 && a.n <= 64, "gnp needs 0 <= --n <= 64");
    need(a.p >= 0 && a.p <= 1, "gnp needs 0 <= --p <= 1");
    need(a.count >= 1, "--count must be positive");
    params = {{"n", a.n}, {"p", a.p}, {"count", a.count}};
    const Rng root(a.seed);
    for (int i = 0; i < a.count; ++i) {
      Rng rng = root.split(static_cast<std::uint64_t>(i));
      graphs.push_back(gnp(a.n, a.p, rng));
    }
  } else if (a.kind == "grid") {
    need(a.rows >= 1 && a.cols >= 1 && a.rows * a.cols <= 64, "grid needs --rows, --cols >= 1 and at most 64 vertices");
    params = {{"rows", a.rows}, {"cols", a.cols}};
    graphs.push_back(grid_graph(a.rows, a.cols));
  } else if (a.kind == "complete") {
    need(a.n >= 0 && a.n <= 64, "complete needs 0 <= --n <= 64");
    params = {{"n", a.n}};
    graphs.push_back(complete_graph(a.n));
  } else if (a.kind == "multipartite") {
    need(a.m >= 1 && a.r >= 1 && a.m * a.r <= 64, "multipartite needs --m, --r >= 1 and at most 64 vertices");
    params = {{"m", a.m}, {"r", a.r}};
    graphs.push_back(complete_multipartite(a.m, a.r));
  } else if (a.kind == "petersen") {
    params = Json::object();
    graphs.push_back(petersen_graph());
  } else if (a.kind == "blowup") {
    need(!a.base.empty(), "blowup needs --base");
    need(a.k >= 1, "blowup needs --k >= 1");
    Graph base;
    try {
      base = named_graph(a.base);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    need(base.order() * a.k <= 64, "blowup exceeds 64 vertices");
    params = {{"base", a.base}, {"k", a.k}, {"clique", a.clique}};
    graphs.push_back(blowup(base, a.k, a.clique));
  } else {
    throw UsageError("unknown kind '" + a.kind + "'");
  }
  return graphs;
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Json params;
  const std::vector<Graph> graphs = generate_graphs(a, params);
  std::error_code ec;
  fs::create_directories(a.out, ec);
  if (!fs::is_directory(a.out)) throw UsageError("cannot create output directory " + a.out);
  Json manifest;
  manifest["schema"] = kSchemaVersion;
  manifest["command"] = "generate";
  manifest["kind"] = a.kind;
  manifest["params"] = params;
  manifest["seed"] = a.seed;
  Json files = Json::array();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::ostringstream name;
    name << a.kind << '-' << std::setw(4) << std::setfill('0') << i << ".g6";
    const std::string g6 = to_graph6(graphs[i]);
    write_text((fs::path(a.out) / name.str()).string(), g6 + "\n");
    files.push_back({{"file", name.str()},
                     {"graph6", g6},
                     {"digest", sha256_hex(g6)},
                     {"order", graphs[i].order()},
                     {"size", graphs[i].size()}});
  }
  manifest["graphs"] = files;
  write_text((fs::path(a.out) / "manifest.json").string(), manifest.dump(2) + "\n");
  out << "wrote " << graphs.size() << " graph(s) to " << a.out << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string suite;
  std::string corpus;
  std::string config;
  std::uint64_t seed = 0;
  std::int64_t budget = kDefaultBudget;
  int jobs = 1;
  std::string out;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), a.suite) == names.end()) throw UsageError("unknown suite '" + a.suite + "'");
  if (a.budget <= 0) throw UsageError("--budget must be positive");
  if (a.jobs < 1) throw UsageError("--jobs must be positive");
  VerifyOptions opts;
  opts.suite = a.suite;
  opts.corpus_label = a.corpus;
  opts.seed = a.seed;
  opts.budget = a.budget;
  opts.jobs = a.jobs;
  try {
    if (!a.config.empty()) opts.config = ConstantsConfig::load(a.config);
  } catch (const Error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  std::vector<Instance> instances;
  try {
    instances = load_corpus(a.corpus, a.seed);
  } catch (const Error& e) {
    throw UsageError(std::string("corpus: ") + e.what());
  }
  const auto started = std::chrono::steady_clock::now();
  const VerifyOutcome result = run_verify(instances, opts);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
  if (a.out.empty()) {
    out << result.report;
  } else {
    write_text(a.out, result.report);
  }
  // Timing goes to stderr so that reports stay byte-identical across runs.
  err << a.suite << ": " << instances.size() << " instance(s), " << result.passed << " pass, " << result.failed
      << " fail, " << result.skipped << " skip, " << result.exhausted << " exhausted in " << std::fixed
      << std::setprecision(3) << elapsed.count() << " s\n";
  return result.exit_code;
}

// ------------------------------------------------------------------ find

struct FindArgs {
  std::string what;
  std::string graph;
  std::string named;
  int t = 0;
  int s = 0;
  std::string pairs;
  std::string parity;
  std::string a;
  std::string b;
  int count = 0;
  std::int64_t budget = kDefaultBudget;
  std::string out;
};

int emit_found(const std::string& cert, const FindArgs& a, std::ostream& out) {
  if (a.out.empty()) {
    out << cert << "\n";
  } else {
    write_text(a.out, cert + "\n");
  }
  return kExitOk;
}

template <class T>
int report_status(const SearchResult<T>& r, std::ostream& out) {
  out << "verdict: " << to_string(r.status) << " (" << r.nodes << " nodes)\n";
  return r.status == SearchStatus::exhausted ? kExitExhausted : kExitAbsent;
}

int cmd_find(const FindArgs& a, std::ostream& out) {
  const Graph g = instance_graph(a.graph, a.named);
  if (a.budget <= 0) throw UsageError("--budget must be positive");
  if (a.what == "clique-minor") {
    if (a.t < 1) throw UsageError("clique-minor needs --t >= 1");
    const auto r = find_clique_minor(g, a.t, a.budget);
    if (!r.found()) return report_status(r, out);
    out << "verdict: found (" << r.nodes << " nodes)\n";
    return emit_found(to_json(*r.certificate), a, out);
  }
  if (a.what == "biclique-minor") {
    if (a.s < 0 || a.t < 0) throw UsageError("biclique-minor needs --s, --t >= 0");
    const auto r = find_biclique_minor(g, a.s, a.t, a.budget);
    if (!r.found()) return report_status(r, out);
    out << "verdict: found (" << r.nodes << " nodes)\n";
    return emit_found(to_json(*r.certificate), a, out);
  }
  if (a.what == "linkage") {
    LinkageSpec spec;
    spec.pairs = pair_list(a.pairs);
    if (spec.pairs.empty()) throw UsageError("linkage needs --pairs");
    if (!a.parity.empty()) spec.parity = int_list(a.parity);
    try {
      validate_spec(g, spec);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    const auto r = find_linkage(g, spec, a.budget);
    if (!r.found()) return report_status(r, out);
    out << "verdict: found (" << r.nodes << " nodes)\n";
    return emit_found(to_json(spec, *r.certificate), a, out);
  }
  if (a.what == "geodesic") {
    std::vector<Vertex> as = int_list(a.a);
    std::vector<Vertex> bs = int_list(a.b);
    int ell = a.count;
    if (ell <= 0) ell = as.empty() ? 1 : static_cast<int>(as.size());
    if (as.empty()) {
      for (Vertex v = 0; v < ell && v < g.order(); ++v) as.push_back(v);
    }
    if (bs.empty()) {
      for (Vertex v = std::max(0, g.order() - ell); v < g.order(); ++v) bs.push_back(v);
    }
    for (Vertex v : as) {
      if (!g.contains(v)) throw UsageError("vertex out of range");
    }
    for (Vertex v : bs) {
      if (!g.contains(v)) throw UsageError("vertex out of range");
    }
    std::optional<std::vector<Path>> paths;
    try {
      paths = find_geodesic_ab_paths(g, as, bs, ell);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (!paths) {
      out << "verdict: proven-absent (fewer than " << ell << " disjoint A-B paths)\n";
      return kExitAbsent;
    }
    LinkageSpec spec;
    for (const Path& p : *paths) spec.pairs.emplace_back(p.front(), p.back());
    out << "verdict: found\n";
    for (const Path& p : *paths) {
      out << "path:";
      for (Vertex v : p) out << ' ' << v;
      out << "\n";
    }
    out << "total length: " << total_length(*paths) << "\n";
    return emit_found(to_json(spec, Linkage{*paths}), a, out);
  }
  throw UsageError("unknown search '" + a.what + "'");
}

// ------------------------------------------------------------------ check

struct CheckArgs {
  std::string graph;
  std::string named;
  std::string certificate;
  std::string report;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  if (!a.report.empty()) {
    if (!a.certificate.empty() || !a.graph.empty() || !a.named.empty()) {
      throw UsageError("--report cannot be combined with a graph or certificate");
    }
    const std::string text = read_text(a.report);
    try {
      const int n = recheck_report(text);
      out << "pass: " << n << " certificate(s) re-verified\n";
      return kExitOk;
    } catch (const Error& e) {
      out << "fail: " << e.what() << "\n";
      return kExitFailure;
    }
  }
  if (a.certificate.empty()) throw UsageError("check needs --certificate or --report");
  const Graph g = instance_graph(a.graph, a.named);
  const std::string text = read_text(a.certificate);
  try {
    const Verdict v = verify_certificate_json(g, text);
    if (v) {
      out << "pass: " << certificate_kind(text) << "\n";
      return kExitOk;
    }
    out << "fail: " << v.clause << "\n";
  } catch (const Error& e) {
    out << "fail: " << e.what() << "\n";
  }
  return kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-minor and list-colouring toolkit"};
  app.name(args.empty() ? "minorkit" : fs::path(args[0]).filename().string());
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write generated graphs (graph6) and a manifest");
  generate->add_option("kind", gen.kind, "gnp | grid | complete | multipartite | petersen | blowup")->required();
  generate->add_option("--n", gen.n, "Number of vertices (gnp, complete)");
  generate->add_option("--p", gen.p, "Edge probability (gnp)");
  generate->add_option("--rows", gen.rows, "Grid rows");
  generate->add_option("--cols", gen.cols, "Grid columns");
  generate->add_option("--m", gen.m, "Part size (multipartite)");
  generate->add_option("--r", gen.r, "Number of parts (multipartite)");
  generate->add_option("--base", gen.base, "Named base graph (blowup), e.g. cycle:5");
  generate->add_option("--k", gen.k, "Copies per vertex (blowup)");
  generate->add_flag("--clique", gen.clique, "Copies of a vertex form a clique (blowup)");
  generate->add_option("--count", gen.count, "Number of samples (gnp)");
  generate->add_option("--seed", gen.seed, "Random seed");
  generate->add_option("--out", gen.out, "Output directory");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Run a verification suite over a corpus");
  verify->add_option("suite", ver.suite, "Suite name")->required();
  verify->add_option("--corpus", ver.corpus, "File, directory, enum:N, gnp:COUNT:N:P or tree:COUNT:N")->required();
  verify->add_option("--config", ver.config, "Constants file (key = value)");
  verify->add_option("--seed", ver.seed, "Random seed");
  verify->add_option("--budget", ver.budget, "Search node budget");
  verify->add_option("--jobs", ver.jobs, "Worker threads");
  verify->add_option("--out", ver.out, "Report file (default: stdout)");

  FindArgs fnd;
  auto* find = app.add_subcommand("find", "Search for a certificate");
  find->add_option("what", fnd.what, "clique-minor | biclique-minor | linkage | geodesic")->required();
  find->add_option("--graph", fnd.graph, "Graph file");
  find->add_option("--named", fnd.named, "Named graph, e.g. petersen or grid:2x3");
  find->add_option("--t", fnd.t, "Clique order, or B side of K_{s,t}");
  find->add_option("--s", fnd.s, "A side of K_{s,t}");
  find->add_option("--pairs", fnd.pairs, "Terminal pairs, e.g. 0-5,1-4");
  find->add_option("--parity", fnd.parity, "Indices of pairs that need odd paths");
  find->add_option("--a", fnd.a, "Vertices of A (geodesic)");
  find->add_option("--b", fnd.b, "Vertices of B (geodesic)");
  find->add_option("--count", fnd.count, "Number of A-B paths (geodesic)");
  find->add_option("--budget", fnd.budget, "Search node budget");
  find->add_option("--out", fnd.out, "Certificate file (default: stdout)");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Verify a certificate or every certificate in a report");
  check->add_option("--graph", chk.graph, "Graph file");
  check->add_option("--named", chk.named, "Named graph");
  check->add_option("--certificate", chk.certificate, "Certificate JSON file");
  check->add_option("--report", chk.report, "Report produced by verify");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (verify->parsed()) return cmd_verify(ver, out, err);
    if (find->parsed()) return cmd_find(fnd, out);
    return cmd_check(chk, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace minorkit::cli
