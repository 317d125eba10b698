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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace minorkit {

/// Base class for every error raised by the library. Verifiers never throw on
/// a negative answer; they return a Verdict instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Result of a certificate check. `clause` names the first violated condition.
struct Verdict {
  bool ok = true;
  std::string clause;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string clause) { return {false, std::move(clause)}; }

  explicit operator bool() const noexcept { return ok; }
};

enum class SearchStatus { found, exhausted, proven_absent };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::proven_absent: return "proven-absent";
  }
  return "?";
}

/// Outcome of a bounded exact search. `proven_absent` is only reported when the
/// search space was exhausted without hitting the node budget.
template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::proven_absent;
  std::optional<T> certificate;
  std::uint64_t nodes = 0;

  bool found() const noexcept { return status == SearchStatus::found; }
};

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

}  // namespace minorkit
