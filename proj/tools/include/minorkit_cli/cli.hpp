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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minorkit/config.hpp"
#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"

namespace minorkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitExhausted = 2;
inline constexpr int kExitAbsent = 3;
inline constexpr int kExitUsage = 64;

/// Lower-case hex SHA-256 of `data`.
std::string sha256_hex(std::string_view data);

struct Instance {
  Graph graph;
  std::string graph6;
  /// sha256_hex(graph6).
  std::string digest;
  /// "file:line" or the generator spec that produced the graph.
  std::string source;
};

/// Corpus specifications:
///   a graph file      (.g6 holds one graph per line; other formats one graph)
///   a directory       (every regular file, in name order; "manifest.json" is skipped)
///   enum:N            every graph on at most N vertices up to isomorphism (N <= 8)
///   gnp:COUNT:N:P     COUNT graphs G(N, P) drawn from `seed`
///   tree:COUNT:N      COUNT random recursive trees drawn from `seed`
/// Instances come back sorted by (digest, source). Throws Error on bad specs.
std::vector<Instance> load_corpus(const std::string& spec, std::uint64_t seed);

/// Registered verification suites, in a fixed order.
const std::vector<std::string>& suite_names();

struct VerifyOptions {
  std::string suite;
  std::string corpus_label;
  ConstantsConfig config;
  std::uint64_t seed = 0;
  std::int64_t budget = kDefaultBudget;
  int jobs = 1;
};

struct VerifyOutcome {
  /// Complete JSON report, newline-terminated.
  std::string report;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int exhausted = 0;
  /// kExitFailure if any instance failed, else kExitExhausted if any search
  /// ran out of budget, else kExitOk.
  int exit_code = kExitOk;
};

/// Runs one suite over `instances`. Throws Error for an unknown suite. The
/// report does not depend on `jobs`.
VerifyOutcome run_verify(const std::vector<Instance>& instances, const VerifyOptions& options);

/// Re-verifies every certificate embedded in a report against the instance's
/// graph. Returns the number of certificates checked; throws Error naming the
/// first instance whose certificate does not verify.
int recheck_report(std::string_view report_json);

/// Entry point of the `minorkit` executable. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minorkit::cli
