// Copyright 2026 The coxcompact Authors
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

#include "coxcompact/cli/render.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace coxcompact::cli {
namespace {

using nlohmann::ordered_json;

bool is_scalar(const ordered_json& v) { return !v.is_array() && !v.is_object(); }

void emit(const ordered_json& v, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close(2 * static_cast<std::size_t>(depth), ' ');
  switch (v.type()) {
    case ordered_json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) {
        out += fmt::format("{:.17g}", d);
      } else {
        out += std::isnan(d) ? "\"nan\"" : (d > 0 ? "\"inf\"" : "\"-inf\"");
      }
      return;
    }
    case ordered_json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::all_of(v.begin(), v.end(), is_scalar);
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        emit(item, out, depth + 1);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    case ordered_json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + ordered_json(key).dump() + ": ";
        emit(item, out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string render_json(const ordered_json& value) {
  std::string out;
  emit(value, out, 0);
  out += '\n';
  return out;
}

}  // namespace coxcompact::cli
