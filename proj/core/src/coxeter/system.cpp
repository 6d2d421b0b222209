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

#include "coxcompact/coxeter/system.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "coxcompact/error.hpp"

namespace coxcompact::coxeter {
namespace {

using nlohmann::json;

std::string describe_position(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte at which parsing stopped.
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t stop = std::min(byte == 0 ? 0 : byte - 1, text.size());
  for (std::size_t i = 0; i < stop; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

Order parse_order(const json& value, const std::string& where) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") return kInfiniteOrder;
    throw Error(ErrorCode::kMalformedDocument, where + ": order must be a positive integer or \"inf\"");
  }
  if (value.is_number_unsigned()) {
    const auto m = value.get<std::uint64_t>();
    if (m == 0 || m >= kInfiniteOrder) {
      throw Error(ErrorCode::kInvalidOrder, where + ": order " + std::to_string(m) + " out of range");
    }
    return static_cast<Order>(m);
  }
  if (value.is_number_integer()) {
    throw Error(ErrorCode::kInvalidOrder, where + ": order must be positive");
  }
  throw Error(ErrorCode::kMalformedDocument, where + ": order must be a positive integer or \"inf\"");
}

}  // namespace

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators, std::vector<Order> orders)
    : names_(std::move(generators)), orders_(std::move(orders)) {
  const std::size_t k = names_.size();
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "a Coxeter system needs at least one generator");
  if (k > IndexSet::kCapacity) {
    throw Error(ErrorCode::kInvalidArgument, "rank above 64 is not supported");
  }
  if (orders_.size() != k * k) {
    throw Error(ErrorCode::kInvalidArgument, "orders table must be rank x rank");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw Error(ErrorCode::kInvalidArgument, "empty generator name");
    if (!seen.insert(name).second) throw Error(ErrorCode::kDuplicateGenerator, name);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (order(i, i) != 1) {
      throw Error(ErrorCode::kInvalidOrder, "m(" + names_[i] + "," + names_[i] + ") must be 1");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const Order m = order(i, j);
      if (m != order(j, i)) {
        throw Error(ErrorCode::kInvalidOrder,
                    "orders table is not symmetric at (" + names_[i] + "," + names_[j] + ")");
      }
      if (m < 2) {
        throw Error(ErrorCode::kInvalidOrder,
                    "m(" + names_[i] + "," + names_[j] + ") must be at least 2");
      }
    }
  }
}

CoxeterSystem CoxeterSystem::from_relations(std::vector<std::string> generators,
                                            const std::vector<Relation>& relations) {
  const std::size_t k = generators.size();
  std::vector<Order> orders(k * k, kInfiniteOrder);
  for (std::size_t i = 0; i < k; ++i) orders[i * k + i] = 1;
  for (const auto& r : relations) {
    if (r.i >= k || r.j >= k) throw Error(ErrorCode::kInvalidArgument, "relation index out of range");
    orders[r.i * k + r.j] = r.m;
    orders[r.j * k + r.i] = r.m;
  }
  return CoxeterSystem(std::move(generators), std::move(orders));
}

std::optional<std::size_t> CoxeterSystem::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

bool CoxeterSystem::has_connected_diagram() const {
  IndexSet reached{0};
  IndexSet frontier{0};
  while (!frontier.empty()) {
    IndexSet next;
    frontier.for_each([&](std::size_t i) {
      for (std::size_t j = 0; j < rank(); ++j) {
        if (j != i && is_finite(order(i, j)) && !reached.contains(j)) next.insert(j);
      }
    });
    reached |= next;
    frontier = next;
  }
  return reached == all();
}

CoxeterSystem parse_system(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument,
                describe_position(text, e.byte) + ": " + std::string(e.what()));
  }
  if (!doc.is_object()) throw Error(ErrorCode::kMalformedDocument, "system document must be an object");
  if (!doc.contains("generators") || !doc["generators"].is_array()) {
    throw Error(ErrorCode::kMalformedDocument, "missing array \"generators\"");
  }

  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw Error(ErrorCode::kMalformedDocument, "generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  if (names.empty()) throw Error(ErrorCode::kMalformedDocument, "no generators");
  {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) throw Error(ErrorCode::kDuplicateGenerator, n);
    }
  }
  if (names.size() > IndexSet::kCapacity) {
    throw Error(ErrorCode::kMalformedDocument, "rank above 64 is not supported");
  }

  const std::size_t k = names.size();
  std::vector<Order> orders(k * k, kInfiniteOrder);
  std::vector<bool> listed(k * k, false);
  for (std::size_t i = 0; i < k; ++i) orders[i * k + i] = 1;

  const auto index = [&](const json& v, const std::string& where) {
    if (!v.is_string()) throw Error(ErrorCode::kMalformedDocument, where + ": generator must be a name");
    const auto name = v.get<std::string>();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw Error(ErrorCode::kMalformedDocument, where + ": unknown generator " + name);
    return static_cast<std::size_t>(it - names.begin());
  };

  if (doc.contains("orders")) {
    if (!doc["orders"].is_array()) throw Error(ErrorCode::kMalformedDocument, "\"orders\" must be an array");
    std::size_t row = 0;
    for (const auto& entry : doc["orders"]) {
      const std::string where = "orders[" + std::to_string(row++) + "]";
      if (!entry.is_array() || entry.size() != 3) {
        throw Error(ErrorCode::kMalformedDocument, where + ": expected [name, name, order]");
      }
      const std::size_t i = index(entry[0], where);
      const std::size_t j = index(entry[1], where);
      const Order m = parse_order(entry[2], where);
      if (i == j) {
        if (m != 1) throw Error(ErrorCode::kInvalidOrder, where + ": m(" + names[i] + "," + names[i] + ") must be 1");
        continue;
      }
      if (m < 2) {
        throw Error(ErrorCode::kInvalidOrder,
                    where + ": m(" + names[i] + "," + names[j] + ") must be at least 2");
      }
      if (listed[i * k + j] && orders[i * k + j] != m) {
        throw Error(ErrorCode::kMalformedDocument, where + ": conflicting orders for one pair");
      }
      listed[i * k + j] = listed[j * k + i] = true;
      orders[i * k + j] = orders[j * k + i] = m;
    }
  }
  return CoxeterSystem(std::move(names), std::move(orders));
}

std::string serialize_system(const CoxeterSystem& system) {
  nlohmann::ordered_json doc;
  doc["generators"] = system.generators();
  auto orders = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < system.rank(); ++i) {
    for (std::size_t j = i + 1; j < system.rank(); ++j) {
      const Order m = system.order(i, j);
      if (is_finite(m)) orders.push_back({system.name(i), system.name(j), m});
    }
  }
  doc["orders"] = std::move(orders);
  return doc.dump(2) + "\n";
}

std::vector<std::string> names_of(const CoxeterSystem& system, IndexSet subset) {
  std::vector<std::string> out;
  subset.for_each([&](std::size_t i) { out.push_back(system.name(i)); });
  return out;
}

}  // namespace coxcompact::coxeter
