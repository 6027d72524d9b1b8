#include <gtest/gtest.h>

#include <cctype>

#include "fixtures.hpp"
#include "morseflow/enumerate.hpp"
#include "morseflow/io.hpp"

namespace morseflow {
namespace {

using testkit::four_point_named;

// Recursive-descent check of the Graphviz grammar subset: digraph ID { stmt* }
// with node statements, edge statements and bracketed attribute lists.
class DotChecker {
 public:
  explicit DotChecker(std::string_view s) : s_(s) {}

  bool accepts() {
    if (!keyword("digraph")) return false;
    id();
    if (!punct('{')) return false;
    while (!at('}')) {
      if (!statement()) return false;
    }
    punct('}');
    skip();
    return pos_ == s_.size();
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool punct(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }
  bool keyword(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    pos_ += w.size();
    return true;
  }
  bool id() {
    skip();
    if (pos_ >= s_.size()) return false;
    if (s_[pos_] == '"') {
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\') ++pos_;
        ++pos_;
      }
      if (pos_ >= s_.size()) return false;
      ++pos_;
      return true;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return pos_ > start;
  }
  bool attr_list() {
    if (!punct('[')) return true;
    while (!at(']')) {
      if (!id() || !punct('=') || !id()) return false;
      if (!punct(',')) punct(';');
    }
    return punct(']');
  }
  bool statement() {
    if (!id()) return false;
    skip();
    while (keyword("->")) {
      if (!id()) return false;
    }
    if (!attr_list()) return false;
    punct(';');
    return true;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

TEST(Json, RoundTripsEveryEnumeratedFlow) {
  for (const auto& f : enumerate_flows(6, {{}, {}, true})) {
    const std::string text = to_json({{1, 1}, f});
    const DiagramDocument back = parse_json(text);
    EXPECT_EQ(back.diagram, f);
    EXPECT_EQ(back.surface, (Surface{1, 1}));
    EXPECT_EQ(to_json(back), text);
  }
}

TEST(Json, NamedDiagramRoundTrips) {
  const auto d = four_point_named();
  EXPECT_EQ(parse_json(to_json({{}, d})).diagram, d);
}

TEST(Json, LayoutIsSortedAndNewlineTerminated) {
  const std::string text = to_json({{}, four_point_named()});
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  const auto pos = [&](std::string_view key) { return text.find("\"" + std::string(key) + "\""); };
  EXPECT_LT(pos("edges"), pos("format_version"));
  EXPECT_LT(pos("format_version"), pos("rotations"));
  EXPECT_LT(pos("rotations"), pos("surface"));
  EXPECT_LT(pos("surface"), pos("vertices"));
  EXPECT_NE(text.find("\"format_version\": \"1\""), std::string::npos);
  EXPECT_NE(text.find("\"r1.t\""), std::string::npos);
}

TEST(Json, MalformedDocuments) {
  const std::string good = to_json({{}, four_point_named()});
  EXPECT_THROW(parse_json("{"), FormatError);
  EXPECT_THROW(parse_json("[]"), FormatError);
  EXPECT_THROW(parse_json(R"({"format_version": "2"})"), FormatError);

  auto replaced = [&](std::string_view from, std::string_view to) {
    std::string s = good;
    const auto at = s.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    return s.replace(at, from.size(), to);
  };
  EXPECT_THROW(parse_json(replaced("\"r1.t\"", "\"r1.x\"")), FormatError);
  EXPECT_THROW(parse_json(replaced("\"bnd_source\"", "\"bnd_thing\"")), FormatError);
  EXPECT_THROW(parse_json(replaced("\"genus\": 1", "\"genus\": \"one\"")), FormatError);
  EXPECT_THROW(parse_json(replaced("\"vertices\"", "\"nodes\"")), FormatError);
  EXPECT_THROW(parse_json(replaced("\"r1.t\"", "\"r2.t\"")), DiagramError);
}

TEST(Dot, ExportsAreWellFormed) {
  for (const auto& f : enumerate_flows(6, {{}, {}, true})) {
    const std::string dot = to_dot(f, "x");
    EXPECT_TRUE(DotChecker(dot).accepts()) << dot;
  }
}

TEST(Dot, CarriesKindsAndColours) {
  const std::string dot = to_dot(four_point_named(), "d4");
  EXPECT_EQ(dot.rfind("digraph \"d4\" {", 0), 0u);
  EXPECT_NE(dot.find("\"s1\" [kind=\"int_saddle\""), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"s1\" [id=\"r1\", kind=\"red\", color=red]"), std::string::npos);
  EXPECT_NE(dot.find("\"s1\" -> \"z\" [id=\"g1\", kind=\"green\", color=green]"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -> \"z\" [id=\"b1\", kind=\"bnd_arc\", color=black]"), std::string::npos);
  EXPECT_TRUE(DotChecker(dot).accepts());
}

TEST(Dot, QuotesAreEscaped) {
  const auto d = build_diagram({{"p\"q", VertexKind::IntSource}}, {}, {{"p\"q", {}}});
  const std::string dot = to_dot(d);
  EXPECT_NE(dot.find("\"p\\\"q\""), std::string::npos);
  EXPECT_TRUE(DotChecker(dot).accepts());
  EXPECT_FALSE(DotChecker("digraph { \"a\" -> }").accepts());
}

TEST(Table, Rows) {
  EXPECT_EQ(bifurcation_header(), "points | Morse | SN | BSN | BDS | HN | HS");
  BifurcationSignature s;
  s[BifurcationKind::BSN] = 2;
  s[BifurcationKind::BDS] = 1;
  s[BifurcationKind::HN] = 2;
  EXPECT_EQ(bifurcation_row(5, 3, s), "5 | 3 | 0 | 2 | 1 | 2 | 0");
  EXPECT_EQ(bifurcation_row(4, 1, {}), "4 | 1 | 0 | 0 | 0 | 0 | 0");
}

}  // namespace
}  // namespace morseflow
