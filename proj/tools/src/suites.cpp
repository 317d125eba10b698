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

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

#include "minorkit/coloring.hpp"
#include "minorkit/constructions.hpp"
#include "minorkit/formats.hpp"
#include "minorkit/generators.hpp"
#include "minorkit/linkage.hpp"
#include "minorkit/minors.hpp"
#include "minorkit/oracles.hpp"
#include "minorkit/rng.hpp"
#include "minorkit/serialize.hpp"
#include "minorkit/woven.hpp"
#include "minorkit_cli/cli.hpp"

namespace minorkit::cli {

using Json = nlohmann::ordered_json;

namespace {

enum class Outcome { pass, fail, skip, exhausted };

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skip: return "skip";
    case Outcome::exhausted: return "exhausted";
  }
  return "?";
}

struct Result {
  Outcome outcome = Outcome::pass;
  std::string reason;
  Json detail = Json::object();
  std::optional<std::string> certificate;

  Result& fail(std::string why) {
    if (outcome != Outcome::fail) {
      outcome = Outcome::fail;
      reason = std::move(why);
    }
    return *this;
  }
};

Result skip(std::string why) {
  Result r;
  r.outcome = Outcome::skip;
  r.reason = std::move(why);
  return r;
}

Result exhausted(std::string why) {
  Result r;
  r.outcome = Outcome::exhausted;
  r.reason = std::move(why);
  return r;
}

struct Context {
  const Instance& inst;
  const VerifyOptions& opts;
  Rng rng;
};

std::vector<Vertex> shuffled(int n, Rng& rng) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[static_cast<std::size_t>(rng.below(i))]);
  }
  return v;
}

std::vector<Vertex> sorted_copy(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

/// Linkage certificate for a path system, pairing each path's ends.
std::string paths_certificate(const std::vector<Path>& paths) {
  LinkageSpec spec;
  for (const Path& p : paths) spec.pairs.emplace_back(p.front(), p.back());
  return to_json(spec, Linkage{paths});
}

bool is_budget_error(const Error& e) { return std::string_view(e.what()) == "budget exhausted"; }

// ------------------------------------------------------------------ suites

Result geodesic_express(Context& c) {
  const Graph& g = c.inst.graph;
  const int n = g.order();
  if (n < 2) return skip("fewer than two vertices");
  const int ell = std::min<int>(1 + static_cast<int>(c.rng.below(3)), n / 2);
  const std::vector<Vertex> perm = shuffled(n, c.rng);
  const std::vector<Vertex> a(perm.begin(), perm.begin() + ell);
  const std::vector<Vertex> b(perm.begin() + ell, perm.begin() + 2 * ell);
  const auto geo = find_geodesic_ab_paths(g, a, b, ell);
  if (!geo) return skip("fewer than " + std::to_string(ell) + " disjoint A-B paths");
  const int minimum = total_length(*geo);

  // Start from the first linkage a[i] -> b[i] in DFS order when one turns up
  // quickly; those paths are usually far from shortest.
  std::vector<Path> start = *geo;
  LinkageSpec spec;
  for (int i = 0; i < ell; ++i) spec.pairs.emplace_back(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
  const auto dfs = find_linkage(g, spec, std::min<std::int64_t>(c.opts.budget, 20000));
  if (dfs.found()) start = dfs.certificate->paths;

  Result r;
  r.detail["ell"] = ell;
  r.detail["a"] = a;
  r.detail["b"] = b;
  r.detail["start_total"] = total_length(start);

  const DescentResult local = geodesic_descent(g, a, b, start, false);
  if (!is_express(g, local.paths, ExpressMode::ab_paths)) r.fail("local descent ended at a non-express system");
  const DescentResult full = geodesic_descent(g, a, b, start, true);
  const int final_total = total_length(full.paths);
  r.detail["final_total"] = final_total;
  r.detail["minimum_total"] = minimum;
  r.detail["moves"] = {{"shortcut", full.shortcut_moves}, {"rewire", full.rewire_moves}, {"global", full.global_moves}};
  if (auto v = is_express(g, full.paths, ExpressMode::ab_paths); !v) r.fail("descent output not express: " + v.clause);
  if (final_total != minimum) r.fail("descent total differs from the min-cost-flow optimum");
  for (std::size_t i = 1; i < full.totals.size(); ++i) {
    if (full.totals[i] >= full.totals[i - 1]) r.fail("descent step did not shorten the system");
  }
  if (n <= 9 && ell <= 2) {
    const auto exact = oracle::min_total_ab_paths(g, a, b, ell);
    r.detail["oracle_total"] = exact ? Json(*exact) : Json(nullptr);
    if (!exact || *exact != final_total) r.fail("descent total differs from the exhaustive minimum");
  }
  r.certificate = paths_certificate(full.paths);
  return r;
}

Result mader(Context& c) {
  const Graph& g = c.inst.graph;
  if (g.order() == 0) return skip("null graph");
  if (!is_connected(g)) return skip("not connected");
  if (g.order() > 10) return skip("above the brute-force range");
  const Rational d = density(g);
  const int k = static_cast<int>((d / Rational(2)).ceil());
  Result r;
  r.detail["density"] = d.str();
  r.detail["k"] = k;
  const ConnectedPiece best = brute_max_connectivity_subgraph(g);
  r.detail["oracle_kappa"] = best.kappa;
  r.detail["oracle_vertices"] = best.subgraph.to_parent;
  const bool oracle_ok = best.kappa >= k;
  if (!oracle_ok) r.fail("no subgraph with connectivity ceil(d/2)");
  if (k >= 1) {
    const auto piece = mader_extract(g, k);
    r.detail["extracted"] = piece.has_value();
    if (piece.has_value() != oracle_ok) r.fail("mader_extract disagrees with the oracle");
    if (piece) {
      r.detail["extracted_kappa"] = piece->kappa;
      r.detail["extracted_vertices"] = piece->subgraph.to_parent;
      if (piece->kappa < k || oracle::vertex_connectivity(piece->subgraph.graph) != piece->kappa) {
        r.fail("extracted piece has the wrong connectivity");
      }
    }
  }
  return r;
}

Result duchet_meyniel(Context& c) {
  constexpr int t = 4;
  const Graph& g = c.inst.graph;
  if (g.order() == 0) return skip("null graph");
  const auto minor = find_clique_minor(g, t, c.opts.budget);
  if (minor.status == SearchStatus::exhausted) return exhausted("K_4 minor search exhausted");
  if (minor.found()) {
    Result r = skip("has a K_4 minor");
    r.certificate = to_json(*minor.certificate);
    return r;
  }
  Result r;
  const int alpha = independence_number(g);
  const int need = (g.order() + 2 * t - 1) / (2 * t);
  r.detail["alpha"] = alpha;
  r.detail["required"] = need;
  if (alpha < need) r.fail("independence number below ceil(v/8)");
  return r;
}

Result degeneracy_color(Context& c) {
  const Graph& g = c.inst.graph;
  const int n = g.order();
  if (n == 0) return skip("null graph");
  const int size = degeneracy(g).d + 1;
  const int palette = 2 * size;
  std::vector<std::vector<Color>> lists;
  for (int v = 0; v < n; ++v) {
    std::vector<Vertex> colours = shuffled(palette, c.rng);
    colours.resize(static_cast<std::size_t>(size));
    for (Vertex& x : colours) ++x;
    lists.push_back(sorted_copy(colours));
  }
  const ListAssignment l(std::move(lists));
  Result r;
  r.detail["list_size"] = size;
  r.detail["palette"] = palette;
  const Coloring col = greedy_degenerate_color(g, l);
  if (auto v = verify_coloring(g, l, col); !v) r.fail("greedy colouring rejected: " + v.clause);
  r.certificate = to_json(l, col);
  return r;
}

Result logbip(Context& c) {
  const Graph& g = c.inst.graph;
  if (g.order() == 0) return skip("null graph");
  const auto bp = bipartition(g);
  if (!bp) return skip("not bipartite");
  Result r;
  r.detail["a_size"] = bp->a.size();
  r.detail["b_size"] = bp->b.size();
  int checked = 0;
  for (int t : {3, 4}) {
    const auto minor = find_clique_minor(g, t, c.opts.budget);
    if (minor.status == SearchStatus::exhausted) return exhausted("K_" + std::to_string(t) + " minor search exhausted");
    const std::string key = "t" + std::to_string(t);
    if (minor.found()) {
      r.detail[key] = "has minor";
      if (!r.certificate) r.certificate = to_json(*minor.certificate);
      continue;
    }
    ++checked;
    const UnbalancedBound ub = check_unbalanced_bound(g, bp->a, bp->b, t, c.opts.config.c_logbip);
    r.detail[key] = {{"lhs", ub.lhs},
                     {"rhs", ub.rhs},
                     {"minimal_c", minimal_unbalanced_constant(g, bp->a, bp->b, t)}};
    if (!ub.holds) r.fail("edge bound fails for t = " + std::to_string(t));
  }
  if (checked == 0) {
    Result s = skip("has a K_3 minor and a K_4 minor");
    s.certificate = r.certificate;
    return s;
  }
  return r;
}

Result logbip3(Context& c) {
  constexpr int a = 4;
  constexpr int b = 2;
  const Graph& g = c.inst.graph;
  if (g.order() < a + b) return skip("too few vertices for K_{4,2}");
  const auto kst = find_biclique_minor(g, a, b, c.opts.budget);
  if (kst.status == SearchStatus::exhausted) return exhausted("K_{4,2} minor search exhausted");
  if (!kst.found()) return skip("no K_{4,2} minor");
  Model m;
  m.pattern = complete_bipartite(a, b);
  m.pattern_name = "K_{4,2}";
  for (const auto& s : kst.certificate->a_sets) m.branch_sets.push_back(s);
  for (const auto& s : kst.certificate->b_sets) m.branch_sets.push_back(s);
  m.assignment.resize(static_cast<std::size_t>(a + b));
  std::iota(m.assignment.begin(), m.assignment.end(), 0);
  const Expansion e = model_to_expansion(g, m);
  const MajorityResult out = majority_bipartite_minor(g, e, a);
  Result r;
  r.detail["legs"] = out.legs;
  r.detail["removed"] = out.removed;
  if (auto v = verify_expansion(g, out.expansion); !v) r.fail("output expansion rejected: " + v.clause);
  if (!out.expansion.bipartite_coloring) r.fail("output lacks a bipartite colouring");
  for (int legs : out.legs) {
    if (legs < (a + 1) / 2) r.fail("a B-node kept fewer than ceil(a/2) branch edges");
  }
  r.certificate = to_json(out.expansion);
  return r;
}

Result menger_variant(Context& c) {
  const Graph& g = c.inst.graph;
  const int n = g.order();
  const int s1 = 1 + static_cast<int>(c.rng.below(2));
  const int s2 = 1 + static_cast<int>(c.rng.below(2));
  const int base = 2 * std::max(s1, s2);
  const int nb = base + static_cast<int>(c.rng.below(3));
  if (n < s1 + s2 + nb) return skip("too few vertices");
  const std::vector<Vertex> perm = shuffled(n, c.rng);
  const std::vector<Vertex> a1 = sorted_copy({perm.begin(), perm.begin() + s1});
  const std::vector<Vertex> a2 = sorted_copy({perm.begin() + s1, perm.begin() + s1 + s2});
  const std::vector<Vertex> b = sorted_copy({perm.begin() + s1 + s2, perm.begin() + s1 + s2 + nb});
  if (!menger_fan_holds(g, a1, a2, b) || !menger_fan_holds(g, a2, a1, b)) return skip("fan hypothesis fails");
  Result r;
  r.detail["a1"] = a1;
  r.detail["a2"] = a2;
  r.detail["b"] = b;
  const MengerResult m = menger_variant_paths(g, a1, a2, b);
  if (!m.paths) return r.fail("no |A1|+|A2| disjoint paths despite the fan hypothesis");
  const std::set<Vertex> starts = [&] {
    std::set<Vertex> s(a1.begin(), a1.end());
    s.insert(a2.begin(), a2.end());
    return s;
  }();
  const std::set<Vertex> ends(b.begin(), b.end());
  std::set<Vertex> used_starts;
  if (m.paths->size() != starts.size()) r.fail("wrong number of paths");
  for (const Path& p : *m.paths) {
    if (p.empty() || !starts.count(p.front()) || !ends.count(p.back())) r.fail("path has wrong ends");
    if (!p.empty()) used_starts.insert(p.front());
  }
  if (used_starts.size() != starts.size()) r.fail("paths do not start at distinct A vertices");
  if (r.outcome == Outcome::fail) return r;
  const std::string cert = paths_certificate(*m.paths);
  if (auto v = verify_certificate_json(g, cert); !v) return r.fail("paths rejected: " + v.clause);
  r.certificate = cert;
  return r;
}

std::vector<Vertex> maximum_clique(const Graph& g) {
  VertexMask best = 0;
  std::function<void(VertexMask, VertexMask)> grow = [&](VertexMask clique, VertexMask cand) {
    if (popcount(clique) > popcount(best)) best = clique;
    while (cand) {
      if (popcount(clique) + popcount(cand) <= popcount(best)) return;
      const Vertex v = lowest(cand);
      cand &= cand - 1;
      grow(clique | bit(v), cand & g.neighbor_mask(v));
    }
  };
  grow(0, g.all_mask());
  return mask_to_vertices(best);
}

Result woven_clique(Context& c) {
  const Graph& g = c.inst.graph;
  const int n = g.order();
  if (n > 16) return skip("above the clique-search range");
  const std::vector<Vertex> clique = maximum_clique(g);
  const int m = static_cast<int>(clique.size());
  if (m < 3) return skip("largest clique has fewer than 3 vertices");
  Result r;
  r.detail["clique"] = clique;

  if (is_complete(g) && n <= 7) {
    Json woven = Json::array();
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; b <= 2 && a + 2 * b <= n; ++b) {
        const bool ok = is_woven(g, a, b, c.opts.budget);
        woven.push_back({a, b, ok});
        if (!ok) r.fail("complete graph not (" + std::to_string(a) + "," + std::to_string(b) + ")-woven");
      }
    }
    r.detail["woven"] = woven;
  }

  // Random linkage through the clique, rerouted by the clique oracle.
  const int pairs_count = std::min(1 + static_cast<int>(c.rng.below(2)), n / 2);
  const std::vector<Vertex> perm = shuffled(n, c.rng);
  LinkageSpec spec;
  for (int i = 0; i < pairs_count; ++i) {
    spec.pairs.emplace_back(perm[static_cast<std::size_t>(2 * i)], perm[static_cast<std::size_t>(2 * i + 1)]);
  }
  const bool parity = c.rng.below(2) == 1;
  if (parity) {
    std::vector<int> odd;
    for (int i = 0; i < pairs_count; ++i) {
      if (c.rng.below(2)) odd.push_back(i);
    }
    spec.parity = odd;
  }
  const auto found = find_linkage(g, spec, std::min<std::int64_t>(c.opts.budget, 200000));
  if (!found.found()) {
    r.detail["composition"] = std::string("no linkage: ") + to_string(found.status);
    return r;
  }
  std::vector<Vertex> roots = clique;
  {
    std::vector<Vertex> order = shuffled(m, c.rng);
    std::vector<Vertex> picked;
    const int a = static_cast<int>(c.rng.below(3));
    for (int i = 0; i < a; ++i) picked.push_back(clique[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
    roots = sorted_copy(picked);
  }
  const Subgraph h = induced_subgraph(g, clique);
  try {
    ComposeResult out;
    if (parity) {
      std::vector<int> j;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (c.rng.below(2)) j.push_back(static_cast<int>(i));
      }
      out = compose_through_parity_woven(g, h, clique_oracle(m), spec.pairs, *spec.parity, *found.certificate, roots, j);
    } else {
      out = compose_through_woven(g, h, clique_oracle(m), spec.pairs, *found.certificate, roots);
    }
    r.detail["composition"] = {{"parity", parity}, {"roots", roots}, {"rerouted", out.rerouted}};
    const std::string cert = to_json(spec, out.linkage);
    if (auto v = verify_certificate_json(g, cert); !v) return r.fail("composed linkage rejected: " + v.clause);
    r.certificate = cert;
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.rfind("internal", 0) == 0) return r.fail(what);
    r.detail["composition"] = "not applicable: " + what;
  }
  return r;
}

ListAssignment random_two_lists(int n, Rng& rng) {
  std::vector<std::vector<Color>> lists;
  for (int v = 0; v < n; ++v) {
    const Color drop = 1 + static_cast<Color>(rng.below(3));
    std::vector<Color> l;
    for (Color x = 1; x <= 3; ++x) {
      if (x != drop) l.push_back(x);
    }
    lists.push_back(l);
  }
  return ListAssignment(std::move(lists), 3);
}

Result separability(Context& c) {
  const Graph& g = c.inst.graph;
  const int n = g.order();
  if (n == 0) return skip("null graph");
  if (n > 7) return skip("above the oracle range");
  const ListAssignment lists = random_two_lists(n, c.rng);
  const int s = static_cast<int>(c.rng.below(2));
  const SeparabilityVerdict v = chromatic_separability(g, lists, s);
  const auto expected = oracle::chromatic_separability(g, lists, s);
  Result r;
  r.detail["lists"] = lists.lists();
  r.detail["s"] = s;
  r.detail["verdict"] = to_string(v.kind);
  r.detail["oracle"] = to_string(expected);
  if (v.kind != expected) r.fail("verdict differs from the oracle");
  if (v.kind == SeparabilityVerdict::Kind::separable) {
    if (!v.first || !v.second) return r.fail("separable verdict without witnesses");
    if (auto w = verify_separability_witness(g, lists, s, *v.first, *v.second); !w) r.fail("witness rejected: " + w.clause);
  }
  return r;
}

Result choosability(Context& c) {
  const Graph& g = c.inst.graph;
  const int n = g.order();
  if (n == 0) return skip("null graph");
  if (n > 6) return skip("above the exact range");
  const int chi = chromatic_number(g);
  const int chi_l = list_chromatic_number(g, 0, 8);
  const int bound = degeneracy(g).d + 1;
  Result r;
  r.detail["chromatic"] = chi;
  r.detail["list_chromatic"] = chi_l;
  r.detail["degeneracy_bound"] = bound;
  if (chi_l < chi || chi_l > bound) r.fail("list chromatic number outside [chi, degeneracy + 1]");
  // A random assignment of lists of size chi_l must be colourable.
  const int palette = 2 * chi_l;
  std::vector<std::vector<Color>> lists;
  for (int v = 0; v < n; ++v) {
    std::vector<Vertex> colours = shuffled(palette, c.rng);
    colours.resize(static_cast<std::size_t>(chi_l));
    for (Vertex& x : colours) ++x;
    lists.push_back(sorted_copy(colours));
  }
  const ListAssignment l(std::move(lists));
  const auto col = is_list_colorable(g, l);
  if (!col) return r.fail("random lists of size chi_l are not colourable");
  r.certificate = to_json(l, *col);
  return r;
}

using SuiteFn = Result (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"geodesic-express", geodesic_express}, {"mader", mader},
      {"duchet-meyniel", duchet_meyniel},     {"degeneracy-color", degeneracy_color},
      {"logbip", logbip},                     {"logbip3", logbip3},
      {"menger-variant", menger_variant},     {"woven-clique", woven_clique},
      {"separability", separability},         {"choosability", choosability},
  };
  return suites;
}

std::uint64_t digest_key(const std::string& digest) { return std::stoull(digest.substr(0, 16), nullptr, 16); }

Result run_one(SuiteFn fn, std::size_t suite_index, const Instance& inst, const VerifyOptions& opts) {
  Context c{inst, opts, Rng(opts.seed).split(suite_index).split(digest_key(inst.digest))};
  try {
    Result r = fn(c);
    if (r.certificate) {
      if (auto v = verify_certificate_json(inst.graph, *r.certificate); !v) {
        r.fail("certificate does not re-verify: " + v.clause);
      }
    }
    return r;
  } catch (const Error& e) {
    if (is_budget_error(e)) return exhausted(e.what());
    Result r;
    return r.fail(std::string("error: ") + e.what());
  }
}

Json config_json(const ConstantsConfig& cfg) {
  Json j = Json::object();
  for (const auto& [k, v] : cfg.entries()) j[k] = v;
  return j;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

VerifyOutcome run_verify(const std::vector<Instance>& instances, const VerifyOptions& options) {
  const auto& reg = registry();
  const auto it = std::find_if(reg.begin(), reg.end(), [&](const auto& p) { return p.first == options.suite; });
  if (it == reg.end()) throw Error("unknown suite '" + options.suite + "'");
  const auto suite_index = static_cast<std::size_t>(it - reg.begin());
  options.config.validate();

  std::vector<const Instance*> order;
  for (const Instance& inst : instances) order.push_back(&inst);
  std::sort(order.begin(), order.end(), [](const Instance* a, const Instance* b) {
    return a->digest != b->digest ? a->digest < b->digest : a->source < b->source;
  });

  std::vector<Result> results(order.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < order.size(); i = next++) {
      results[i] = run_one(it->second, suite_index, *order[i], options);
    }
  };
  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(order.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  VerifyOutcome out;
  Json list = Json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Instance& inst = *order[i];
    const Result& r = results[i];
    Json item;
    item["digest"] = inst.digest;
    item["source"] = inst.source;
    item["graph6"] = inst.graph6;
    item["order"] = inst.graph.order();
    item["size"] = inst.graph.size();
    item["verdict"] = outcome_name(r.outcome);
    if (!r.reason.empty()) item["reason"] = r.reason;
    item["detail"] = r.detail;
    if (r.certificate) {
      item["certificate_digest"] = sha256_hex(*r.certificate);
      item["certificate"] = Json::parse(*r.certificate);
    }
    list.push_back(std::move(item));
    switch (r.outcome) {
      case Outcome::pass: ++out.passed; break;
      case Outcome::fail: ++out.failed; break;
      case Outcome::skip: ++out.skipped; break;
      case Outcome::exhausted: ++out.exhausted; break;
    }
  }
  Json report;
  report["schema"] = kSchemaVersion;
  report["command"] = "verify";
  report["suite"] = options.suite;
  report["corpus"] = options.corpus_label;
  report["seed"] = options.seed;
  report["budget"] = options.budget;
  report["config"] = config_json(options.config);
  report["summary"] = {{"instances", order.size()},
                       {"pass", out.passed},
                       {"fail", out.failed},
                       {"skip", out.skipped},
                       {"exhausted", out.exhausted}};
  report["instances"] = std::move(list);
  out.report = report.dump(2) + "\n";
  out.exit_code = out.failed > 0 ? kExitFailure : out.exhausted > 0 ? kExitExhausted : kExitOk;
  return out;
}

int recheck_report(std::string_view report_json) {
  Json report;
  try {
    report = Json::parse(report_json);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), e.byte);
  }
  if (!report.is_object() || report.value("schema", -1) != kSchemaVersion) throw Error("unsupported report schema");
  int checked = 0;
  for (const Json& item : report.at("instances")) {
    if (!item.contains("certificate")) continue;
    const std::string cert = item.at("certificate").dump();
    const Graph g = from_graph6(item.at("graph6").get<std::string>());
    if (auto v = verify_certificate_json(g, cert); !v) {
      throw Error("certificate of instance " + item.at("digest").get<std::string>() + " fails: " + v.clause);
    }
    ++checked;
  }
  return checked;
}

}  // namespace minorkit::cli
