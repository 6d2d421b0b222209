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

#include "coxcompact/coxeter/splitting.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "coxcompact/error.hpp"

namespace coxcompact::coxeter {
namespace {

bool splitting_less(const SpecialSplitting& x, const SpecialSplitting& y) {
  if (x.core != y.core) return lex_less(x.core, y.core);
  if (x.plus != y.plus) return lex_less(x.plus, y.plus);
  return lex_less(x.minus, y.minus);
}

}  // namespace

SpecialSplitting SpecialSplitting::canonical() const {
  SpecialSplitting out = *this;
  if (lex_less(out.minus, out.plus)) std::swap(out.plus, out.minus);
  return out;
}

SpecialSplitting splitting_from_core(IndexSet core, const CoxeterDiagram& diagram, IndexSet side_a) {
  const IndexSet all = diagram.vertices();
  if (!core.is_subset_of(all)) throw Error(ErrorCode::kInvalidArgument, "core is not a set of diagram vertices");
  const auto parts = components(diagram, all - core);
  if (parts.size() < 2) throw Error(ErrorCode::kNotSeparating, "core does not separate the diagram");

  IndexSet a;
  IndexSet b;
  for (const auto& part : parts) {
    if (part.is_subset_of(side_a)) {
      a |= part;
    } else if (!part.intersects(side_a)) {
      b |= part;
    } else {
      throw Error(ErrorCode::kInvalidSideAssignment, "side assignment splits a complement component");
    }
  }
  if (!(side_a - all - core).empty() || !(side_a & core).empty()) {
    throw Error(ErrorCode::kInvalidSideAssignment, "side assignment must only contain complement vertices");
  }
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptySide, "both sides need a complement component");
  return SpecialSplitting{core | a, core, core | b, false};
}

std::vector<SpecialSplitting> enumerate_special_splittings(const CoxeterDiagram& diagram) {
  const std::size_t k = diagram.vertex_count();
  if (k > 24) throw Error(ErrorCode::kInvalidArgument, "splitting enumeration is limited to rank 24");
  const IndexSet all = diagram.vertices();

  std::vector<SpecialSplitting> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    const IndexSet core(bits);
    const auto parts = components(diagram, all - core);
    if (parts.size() < 2) continue;
    // parts[0] stays on side A so each unordered bipartition is visited once.
    const std::size_t free_parts = parts.size() - 1;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << free_parts); ++mask) {
      IndexSet a = parts[0];
      IndexSet b;
      for (std::size_t p = 0; p < free_parts; ++p) {
        ((mask >> p) & 1U ? a : b) |= parts[p + 1];
      }
      out.push_back(SpecialSplitting{core | a, core, core | b, false}.canonical());
    }
  }
  std::sort(out.begin(), out.end(), splitting_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CoxeterDiagram recombine(const SpecialSplitting& splitting, const CoxeterDiagram& diagram) {
  const auto a = span(diagram, splitting.plus);
  const auto b = span(diagram, splitting.minus);
  const auto c = span(diagram, splitting.core);
  std::vector<std::size_t> embed_a;
  std::vector<std::size_t> embed_b;
  for (const auto& name : c.names()) {
    embed_a.push_back(*a.index_of(name));
    embed_b.push_back(*b.index_of(name));
  }
  return visual_amalgamation(a, b, c, embed_a, embed_b);
}

}  // namespace coxcompact::coxeter
