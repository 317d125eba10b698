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

#include "minorkit/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "minorkit/error.hpp"

namespace minorkit {

namespace {

struct Field {
  const char* name;
  double ConstantsConfig::*member;
};

constexpr Field kFields[] = {
    {"c_newforced", &ConstantsConfig::c_newforced},
    {"c_smallconn", &ConstantsConfig::c_smallconn},
    {"c_logbip", &ConstantsConfig::c_logbip},
    {"c_logbip2", &ConstantsConfig::c_logbip2},
    {"c_logbip3", &ConstantsConfig::c_logbip3},
    {"c_linked", &ConstantsConfig::c_linked},
    {"c_woven", &ConstantsConfig::c_woven},
    {"c_paritywoven", &ConstantsConfig::c_paritywoven},
    {"c_largeL", &ConstantsConfig::c_largeL},
    {"c_listprob", &ConstantsConfig::c_listprob},
    {"c_inseparable", &ConstantsConfig::c_inseparable},
    {"c_separable", &ConstantsConfig::c_separable},
    {"c_rooted2", &ConstantsConfig::c_rooted2},
    {"c_density", &ConstantsConfig::c_density},
    {"c_bipartitedensity", &ConstantsConfig::c_bipartitedensity},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

void ConstantsConfig::validate() const {
  for (const auto& f : kFields) {
    const double v = this->*f.member;
    if (!std::isfinite(v) || v <= 0) throw Error(std::string("constant ") + f.name + " must be positive");
  }
}

std::vector<std::pair<std::string, double>> ConstantsConfig::entries() const {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& f : kFields) out.emplace_back(f.name, this->*f.member);
  return out;
}

ConstantsConfig ConstantsConfig::parse(std::string_view text) {
  ConstantsConfig cfg;
  std::set<std::string> seen;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = "config line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw Error(where + ": expected name = value");
    const std::string name(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const Field* field = nullptr;
    for (const auto& f : kFields) {
      if (name == f.name) field = &f;
    }
    if (!field) throw Error(where + ": unknown constant '" + name + "'");
    if (!seen.insert(name).second) throw Error(where + ": duplicate constant '" + name + "'");
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size()) throw Error(where + ": malformed number '" + value + "'");
    cfg.*(field->member) = v;
  }
  cfg.validate();
  return cfg;
}

ConstantsConfig ConstantsConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

std::string ConstantsConfig::to_text() const {
  std::ostringstream out;
  out << std::setprecision(17);
  for (const auto& [name, value] : entries()) out << name << " = " << value << '\n';
  return out.str();
}

}  // namespace minorkit
