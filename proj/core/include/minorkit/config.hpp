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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minorkit {

/// Values for the existential constants used by the statement checks. The
/// defaults are placeholders (1.0) except for the two explicit density
/// constants.
struct ConstantsConfig {
  double c_newforced = 1.0;
  double c_smallconn = 1.0;
  double c_logbip = 1.0;
  double c_logbip2 = 1.0;
  double c_logbip3 = 1.0;
  double c_linked = 1.0;
  double c_woven = 1.0;
  double c_paritywoven = 1.0;
  double c_largeL = 1.0;
  double c_listprob = 1.0;
  double c_inseparable = 1.0;
  double c_separable = 1.0;
  double c_rooted2 = 1.0;
  double c_density = 3.2;
  double c_bipartitedensity = 7.0;

  /// Throws Error unless every constant is finite and strictly positive.
  void validate() const;

  /// (name, value) in declaration order.
  std::vector<std::pair<std::string, double>> entries() const;

  /// Reads `name = value` lines; blank lines and `#` comments are ignored.
  /// Unknown names, duplicates and malformed numbers throw Error.
  static ConstantsConfig parse(std::string_view text);
  static ConstantsConfig load(const std::filesystem::path& path);

  /// Round-trippable text form, one constant per line.
  std::string to_text() const;

  friend bool operator==(const ConstantsConfig&, const ConstantsConfig&) = default;
};

}  // namespace minorkit
