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

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "coxcompact/error.hpp"
#include "coxcompact/trees/labelling.hpp"
#include "coxcompact/trees/metric_tree.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace coxcompact::trees {
namespace {

using testing::Rng;

MetricTree path3() { return MetricTree(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

// Center 0 with leaves 1, 2, 3.
MetricTree star3() { return MetricTree(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}); }

Labelling labels(std::size_t n, std::vector<IndexSet> sets) { return Labelling(n, std::move(sets)); }

TEST(MetricTree, RejectsNonTrees) {
  auto code = [](std::size_t n, std::vector<TreeEdge> edges) {
    try {
      MetricTree(n, std::move(edges));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kNumericalFailure;
  };
  EXPECT_EQ(code(3, {{0, 1, 1.0}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code(3, {{0, 1, 1.0}, {1, 0, 1.0}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code(2, {{0, 1, 0.0}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code(2, {{0, 2, 1.0}}), ErrorCode::kInvalidArgument);
  EXPECT_EQ(MetricTree(0, {}).vertex_count(), 0U);
  EXPECT_EQ(MetricTree(1, {}).edge_count(), 0U);
}

TEST(Path, Examples) {
  const MetricTree star = star3();
  EXPECT_EQ(star.path(2, 2), std::vector<std::size_t>{2});
  EXPECT_EQ(star.path(1, 2), (std::vector<std::size_t>{1, 0, 2}));
  EXPECT_EQ(star.leaves(), (std::vector<std::size_t>{1, 2, 3}));
}

TEST(Path, MatchesSearchOracleOnRandomTrees) {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 15;
    const MetricTree tree = testing::random_tree(rng, n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto p = tree.path(a, b);
        ASSERT_EQ(p, testing::brute_path(tree, a, b));
        EXPECT_EQ(p.front(), a);
        EXPECT_EQ(p.back(), b);
        for (std::size_t i = 1; i + 1 < p.size(); ++i) EXPECT_GE(tree.degree(p[i]), 2U);
        EXPECT_NEAR(tree.distance(a, b), testing::brute_tree_distance(tree, a, b), 1e-12);
        EXPECT_EQ(tree.path_edges(a, b).size(), p.size() - 1);
      }
    }
  }
}

TEST(Distance, InteriorPoints) {
  const MetricTree tree(3, {{0, 1, 2.0}, {1, 2, 3.0}});
  EXPECT_DOUBLE_EQ(tree.distance(TreePoint{0, 1, 0.5}, TreePoint{2, 1, 1.0}), 3.5);
  EXPECT_DOUBLE_EQ(tree.distance(TreePoint{0, 1, 0.5}, TreePoint{0, 1, 1.5}), 1.0);
  EXPECT_DOUBLE_EQ(tree.distance(TreePoint{0, 1, 0.5}, TreePoint{1, 0, 0.5}), 1.0);
  EXPECT_DOUBLE_EQ(tree.distance(TreePoint::vertex(1), TreePoint{2, 1, 1.0}), 2.0);
}

TEST(Side, PartitionsTheVertices) {
  Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const MetricTree tree = testing::random_tree(rng, 2 + trial % 12);
    for (std::size_t e = 0; e < tree.edge_count(); ++e) {
      const auto plus = tree.side({e, true});
      const auto minus = tree.side({e, false});
      EXPECT_TRUE(plus[tree.edge(e).v]);
      EXPECT_TRUE(minus[tree.edge(e).u]);
      for (std::size_t v = 0; v < tree.vertex_count(); ++v) EXPECT_NE(plus[v], minus[v]);
    }
  }
}

TEST(CanonicalExtension, FillsTheMiddleOfAPath) {
  const Labelling ext = canonical_extension(path3(), labels(1, {{0}, {}, {0}}));
  EXPECT_EQ(ext.at(1), IndexSet{0});
}

TEST(CanonicalExtension, ConnectedLabelsAreUnchanged) {
  const Labelling lab = labels(3, {{0, 1}, {0, 2}, {1}, {}});
  EXPECT_EQ(canonical_extension(star3(), lab), lab);
}

TEST(CanonicalExtension, MatchesPairwiseOracle) {
  Rng rng(43);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const std::size_t universe = 1 + trial % 5;
    const MetricTree tree = testing::random_tree(rng, n);
    const Labelling lab = testing::random_labelling(rng, n, universe, 0.25);
    const Labelling ext = canonical_extension(tree, lab);
    EXPECT_EQ(ext.sets(), testing::brute_canonical_extension(tree, lab));
    for (std::size_t v = 0; v < n; ++v) EXPECT_TRUE(lab.at(v).is_subset_of(ext.at(v)));
    EXPECT_EQ(canonical_extension(tree, ext), ext);
    EXPECT_EQ(ext.union_all(), lab.union_all());
    // Property A always holds afterwards; Property B holds iff it did before.
    const LabellingCheck check = is_labelling_system(tree, ext);
    if (lab.union_all() == lab.full()) {
      EXPECT_TRUE(check);
    } else {
      ASSERT_FALSE(check);
      EXPECT_EQ(check.violation->kind, LabellingViolation::Kind::kSurjectivity);
    }
  }
}

TEST(IsLabellingSystem, ConnectednessWitness) {
  const LabellingCheck check = is_labelling_system(path3(), labels(1, {{0}, {}, {0}}));
  ASSERT_FALSE(check);
  const LabellingViolation& v = *check.violation;
  EXPECT_EQ(v.kind, LabellingViolation::Kind::kConnectedness);
  EXPECT_EQ(v.label, 0U);
  EXPECT_EQ(std::min(v.a, v.b), 0U);
  EXPECT_EQ(std::max(v.a, v.b), 2U);
  EXPECT_EQ(v.x, 1U);
  EXPECT_TRUE(is_labelling_system(path3(), canonical_extension(path3(), labels(1, {{0}, {}, {0}}))));
}

TEST(IsLabellingSystem, MissingLabel) {
  const LabellingCheck check = is_labelling_system(path3(), labels(3, {{0}, {0, 1}, {1}}));
  ASSERT_FALSE(check);
  EXPECT_EQ(check.violation->kind, LabellingViolation::Kind::kSurjectivity);
  EXPECT_EQ(check.violation->label, 2U);
}

TEST(IsLabellingSystem, WitnessesAreGenuine) {
  Rng rng(44);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const MetricTree tree = testing::random_tree(rng, n);
    const Labelling lab = testing::random_labelling(rng, n, 1 + trial % 4, 0.3);
    const LabellingCheck check = is_labelling_system(tree, lab);
    const bool expected =
        testing::brute_canonical_extension(tree, lab) == lab.sets() && lab.union_all() == lab.full();
    EXPECT_EQ(static_cast<bool>(check), expected);
    if (check) continue;
    const LabellingViolation& v = *check.violation;
    if (v.kind == LabellingViolation::Kind::kSurjectivity) {
      EXPECT_FALSE(lab.union_all().contains(v.label));
    } else {
      EXPECT_TRUE(lab.at(v.a).contains(v.label));
      EXPECT_TRUE(lab.at(v.b).contains(v.label));
      EXPECT_FALSE(lab.at(v.x).contains(v.label));
      const auto p = tree.path(v.a, v.b);
      EXPECT_NE(std::find(p.begin(), p.end(), v.x), p.end());
    }
  }
}

TEST(ClassifyEdge, TwoVertices) {
  const MetricTree tree(2, {{0, 1, 1.0}});
  const Labelling lab = labels(2, {{0}, {1}});
  EXPECT_EQ(classify_edge(tree, lab, {0, true}), EdgeClass::kUseful);
  EXPECT_EQ(classify_edge(tree, lab, {0, false}), EdgeClass::kUseful);
  const Subtree sub = useful_subtree(tree, lab);
  EXPECT_EQ(sub.edges, std::vector<std::size_t>{0});
  EXPECT_EQ(sub.vertices, (std::vector<std::size_t>{0, 1}));
}

TEST(ClassifyEdge, AttachingAFullVertex) {
  // {1} - {1,2} - {1,2}: the canonical extension of {1} | {2} with a full
  // third vertex hanging off the second.
  const MetricTree tree(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const Labelling lab = canonical_extension(tree, labels(2, {{0}, {1}, {0, 1}}));
  EXPECT_EQ(classify_edge(tree, lab, {0, true}), EdgeClass::kUseless);
  EXPECT_EQ(classify_edge(tree, lab, {1, true}), EdgeClass::kUseless);
  EXPECT_TRUE(useful_subtree(tree, lab).empty());
  EXPECT_EQ(full_vertex(tree, lab), std::optional<std::size_t>{1});
}

TEST(FullVertex, StarOfSingletons) {
  const Labelling lab = labels(3, {{}, {0}, {1}, {2}});
  EXPECT_EQ(full_vertex(star3(), lab), std::nullopt);
  for (std::size_t e = 0; e < 3; ++e) EXPECT_EQ(classify_edge(star3(), lab, {e, true}), EdgeClass::kUseful);
  EXPECT_EQ(useful_subtree(star3(), lab).edges.size(), 3U);
}

TEST(FullVertex, PairwiseOverlapsForceTheCenter) {
  // Each leaf pair shares a label, so each label spans the center.
  const Labelling lab = canonical_extension(star3(), labels(3, {{}, {0, 1}, {1, 2}, {0, 2}}));
  EXPECT_EQ(lab.at(0), IndexSet::first(3));
  EXPECT_EQ(full_vertex(star3(), lab), std::optional<std::size_t>{0});
  EXPECT_TRUE(useful_subtree(star3(), lab).empty());
}

TEST(FullVertex, SingleVertex) {
  const MetricTree tree(1, {});
  EXPECT_EQ(full_vertex(tree, labels(4, {IndexSet::first(4)})), std::optional<std::size_t>{0});
  EXPECT_TRUE(useful_subtree(tree, labels(4, {IndexSet::first(4)})).empty());
}

TEST(FullVertex, FirstInIdentifierOrder) {
  const Labelling lab = labels(2, {{0}, {0, 1}, {0, 1}});
  EXPECT_EQ(full_vertex(path3(), lab), std::optional<std::size_t>{1});
}

TEST(Helly, RandomLabellingSystemsAgreeWithOracles) {
  Rng rng(45);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + trial % 12;
    const std::size_t universe = 1 + trial % 5;
    const MetricTree tree = testing::random_tree(rng, n);
    const Labelling lab = testing::random_labelling_system(rng, tree, universe, 0.2);
    ASSERT_TRUE(is_labelling_system(tree, lab));

    const auto classes = classify_edges(tree, lab);
    const auto sides = all_side_labels(tree, lab);
    std::vector<std::size_t> useful;
    for (std::size_t e = 0; e < tree.edge_count(); ++e) {
      const bool brute = testing::brute_useful(tree, lab, e);
      EXPECT_EQ(classes[e] == EdgeClass::kUseful, brute);
      EXPECT_EQ(classify_edge(tree, lab, {e, true}), classify_edge(tree, lab, {e, false}));
      EXPECT_EQ(classify_edge(tree, lab, {e, true}), classes[e]);
      const auto [v_side, u_side] = testing::brute_side_unions(tree, lab, e);
      EXPECT_EQ(sides[e].plus, v_side);
      EXPECT_EQ(sides[e].minus, u_side);
      const SideLabels back = side_labels(tree, lab, {e, false});
      EXPECT_EQ(back.plus, u_side);
      EXPECT_EQ(back.minus, v_side);
      if (brute) useful.push_back(e);
    }

    const auto full = full_vertex(tree, lab);
    EXPECT_EQ(full, testing::brute_full_vertex(tree, lab));
    EXPECT_EQ(full.has_value(), useful.empty());

    const Subtree sub = useful_subtree(tree, lab);
    EXPECT_EQ(sub.edges, useful);
    EXPECT_TRUE(testing::edges_connected(tree, sub.edges));
    if (!sub.empty()) {
      IndexSet seen;
      for (std::size_t v : sub.vertices) seen |= lab.at(v);
      EXPECT_EQ(seen, lab.full());
    }
  }
}

TEST(SteinerSpan, SpansPaths) {
  Rng rng(46);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const MetricTree tree = testing::random_tree(rng, n);
    std::vector<bool> marked(n);
    for (std::size_t v = 0; v < n; ++v) marked[v] = std::bernoulli_distribution(0.3)(rng);
    std::vector<bool> expected(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!marked[a] || !marked[b]) continue;
        for (std::size_t x : testing::brute_path(tree, a, b)) expected[x] = true;
      }
    }
    EXPECT_EQ(steiner_span(tree, marked), expected);
  }
}

}  // namespace
}  // namespace coxcompact::trees
