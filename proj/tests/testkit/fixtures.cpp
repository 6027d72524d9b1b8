#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "morseflow/io.hpp"

namespace morseflow::testkit {

std::filesystem::path data_path(std::string_view name) {
  return std::filesystem::path(MORSEFLOW_TEST_DATA) / std::string(name);
}

SeparatrixDiagram load_fixture(std::string_view name) { return read_document(data_path(name)).diagram; }

SeparatrixDiagram four_point_named() {
  using VK = VertexKind;
  using EK = EdgeKind;
  const std::vector<VertexSpec> vertices{
      {"a", VK::BndSource}, {"z", VK::BndSink}, {"s1", VK::IntSaddle}, {"s2", VK::IntSaddle}};
  const std::vector<EdgeSpec> edges{
      {"r1", "a", "s1", EK::Red},   {"g1", "s1", "z", EK::Green}, {"r2", "a", "s1", EK::Red},
      {"g2", "s1", "z", EK::Green}, {"r3", "a", "s2", EK::Red},   {"r4", "a", "s2", EK::Red},
      {"b1", "a", "z", EK::BndArc}, {"b2", "a", "z", EK::BndArc}, {"g3", "s2", "z", EK::Green},
      {"g4", "s2", "z", EK::Green},
  };
  const auto t = [](const char* e) { return DartRef{e, End::Tail}; };
  const auto h = [](const char* e) { return DartRef{e, End::Head}; };
  const std::map<std::string, std::vector<DartRef>> rotation{
      {"s1", {h("r1"), t("g1"), h("r2"), t("g2")}},
      {"a", {t("r1"), t("r3"), t("r2"), t("r4"), t("b1"), t("b2")}},
      {"z", {h("g1"), h("b2"), h("b1"), h("g3"), h("g2"), h("g4")}},
      {"s2", {h("r3"), t("g3"), h("r4"), t("g4")}},
  };
  return build_diagram(vertices, edges, rotation);
}

SeparatrixDiagram shuffled(const SeparatrixDiagram& d, std::mt19937& rng) {
  std::vector<std::uint32_t> vs(d.vertex_count());
  std::vector<std::uint32_t> es(d.edge_count());
  std::iota(vs.begin(), vs.end(), 0u);
  std::iota(es.begin(), es.end(), 0u);
  std::shuffle(vs.begin(), vs.end(), rng);
  std::shuffle(es.begin(), es.end(), rng);
  return relabel(d, vs, es);
}

}  // namespace morseflow::testkit
