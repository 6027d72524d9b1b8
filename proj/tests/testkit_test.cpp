#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "morseflow/enumerate.hpp"
#include "testkit.hpp"

namespace morseflow {
namespace {

using testkit::brute_force_iso;
using testkit::four_point_named;
using testkit::load_fixture;

TEST(BruteForce, RelabelledCopies) {
  std::mt19937 rng(11);
  const auto d = four_point_named();
  EXPECT_TRUE(brute_force_iso(d, testkit::shuffled(d, rng)));
  EXPECT_TRUE(brute_force_iso(d, load_fixture("four_point.json"), {false, false}));
}

TEST(BruteForce, ReversalNeedsTheReverseQuotient) {
  const auto sink = load_fixture("five_point_interior_sink.json");
  EXPECT_TRUE(brute_force_iso(sink, reverse_flow(sink), {true, true}));
  EXPECT_FALSE(brute_force_iso(sink, reverse_flow(sink), {true, false}));
}

TEST(BruteForce, DifferentShapes) {
  EXPECT_FALSE(brute_force_iso(load_fixture("five_point_interior_sink.json"),
                               load_fixture("five_point_boundary_nodes.json")));
}

TEST(BruteForce, RotationOrderMatters) {
  // Same vertices and edges as the four-point flow, with two red darts at
  // the source swapped.
  const auto d = four_point_named();
  std::vector<std::vector<Dart>> rot = d.rotations();
  auto& at_source = rot[d.find_vertex("a")];
  std::swap(at_source[1], at_source[2]);
  const SeparatrixDiagram other(d.vertices(), d.edges(), rot);
  EXPECT_EQ(brute_force_iso(d, other, {false, false}), are_isomorphic(d, other, {false, false}));
}

TEST(BruteForce, TooLarge) {
  std::vector<VertexSpec> vs{{"a", VertexKind::BndSource}, {"z", VertexKind::BndSink}};
  std::vector<EdgeSpec> es;
  std::map<std::string, std::vector<DartRef>> rot{{"a", {}}, {"z", {}}};
  for (int i = 0; i < 21; ++i) {
    const std::string id = "b" + std::to_string(i);
    es.push_back({id, "a", "z", EdgeKind::BndArc});
    rot["a"].push_back({id, End::Tail});
    rot["z"].insert(rot["z"].begin(), {id, End::Head});
  }
  const auto big = build_diagram(vs, es, rot);
  EXPECT_THROW(brute_force_iso(big, big), testkit::TooLarge);
  EXPECT_THROW(testkit::exhaustive_recount(7), testkit::TooLarge);
}

TEST(Recount, AgreesWithEnumeration) {
  EXPECT_EQ(testkit::exhaustive_recount(4), 1u);
  EXPECT_EQ(testkit::exhaustive_recount(5), 3u);
  EXPECT_EQ(testkit::exhaustive_recount(6), enumerate_flows(6).size());
}

class PairwiseAgreement : public ::testing::TestWithParam<std::tuple<int, bool, bool>> {};

TEST_P(PairwiseAgreement, CanonMatchesBruteForce) {
  const auto [n, mirror_q, reverse_q] = GetParam();
  const QuotientConfig q{mirror_q, reverse_q};
  // Strict classes so that mirror and reverse pairs are present.
  const auto flows = enumerate_flows(n, {{}, {false, false}, false});
  for (std::size_t i = 0; i < flows.size(); ++i) {
    for (std::size_t j = i; j < flows.size(); ++j) {
      EXPECT_EQ(are_isomorphic(flows[i], flows[j], q), brute_force_iso(flows[i], flows[j], q))
          << n << ' ' << i << ' ' << j;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(AllQuotients, PairwiseAgreement,
                         ::testing::Combine(::testing::Values(4, 5, 6), ::testing::Bool(), ::testing::Bool()));

}  // namespace
}  // namespace morseflow
