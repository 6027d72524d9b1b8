#include "morseflow/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "morseflow/canon.hpp"
#include "morseflow/enumerate.hpp"

namespace morseflow {

namespace {

using json = nlohmann::json;

std::string dart_text(const SeparatrixDiagram& d, Dart x) {
  return d.edge(x.edge).id + (x.end == End::Tail ? ".t" : ".h");
}

DartRef parse_dart(const std::string& s) {
  const auto dot = s.rfind('.');
  if (dot == std::string::npos || dot + 2 != s.size() || (s[dot + 1] != 't' && s[dot + 1] != 'h')) {
    throw FormatError("malformed dart '" + s + "'");
  }
  return {s.substr(0, dot), s[dot + 1] == 't' ? End::Tail : End::Head};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string dot_id(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string_view dot_color(EdgeKind k) {
  switch (k) {
    case EdgeKind::Red: return "red";
    case EdgeKind::Green: return "green";
    case EdgeKind::BndArc: return "black";
  }
  return "black";
}

}  // namespace

std::string to_json(const DiagramDocument& doc) {
  const SeparatrixDiagram& d = doc.diagram;
  json j;
  j["format_version"] = std::string(kFormatVersion);
  j["surface"] = {{"genus", doc.surface.genus}, {"boundaries", doc.surface.boundaries}};
  json vertices = json::array();
  for (const Vertex& v : d.vertices()) {
    vertices.push_back({{"id", v.id}, {"kind", std::string(to_string(v.kind))}});
  }
  json edges = json::array();
  for (const Edge& e : d.edges()) {
    edges.push_back({{"id", e.id},
                     {"tail", d.vertex(e.tail).id},
                     {"head", d.vertex(e.head).id},
                     {"kind", std::string(to_string(e.kind))}});
  }
  json rotations = json::object();
  for (std::uint32_t v = 0; v < d.vertex_count(); ++v) {
    json cycle = json::array();
    for (const Dart& x : d.rotation(v)) cycle.push_back(dart_text(d, x));
    rotations[d.vertex(v).id] = std::move(cycle);
  }
  j["vertices"] = std::move(vertices);
  j["edges"] = std::move(edges);
  j["rotations"] = std::move(rotations);
  return j.dump(2) + "\n";
}

DiagramDocument parse_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const json& version = field(j, "format_version");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
      throw FormatError("unsupported format_version");
    }
    DiagramDocument doc;
    const json& surface = field(j, "surface");
    doc.surface.genus = field(surface, "genus").get<int>();
    doc.surface.boundaries = field(surface, "boundaries").get<int>();

    std::vector<VertexSpec> vertices;
    for (const json& v : field(j, "vertices")) {
      vertices.push_back({field(v, "id").get<std::string>(),
                          vertex_kind_from_string(field(v, "kind").get<std::string>())});
    }
    std::vector<EdgeSpec> edges;
    for (const json& e : field(j, "edges")) {
      edges.push_back({field(e, "id").get<std::string>(), field(e, "tail").get<std::string>(),
                       field(e, "head").get<std::string>(),
                       edge_kind_from_string(field(e, "kind").get<std::string>())});
    }
    std::map<std::string, std::vector<DartRef>> rotation;
    const json& rotations = field(j, "rotations");
    if (!rotations.is_object()) throw FormatError("rotations must be an object");
    for (const auto& [id, cycle] : rotations.items()) {
      auto& out = rotation[id];
      for (const json& x : cycle) out.push_back(parse_dart(x.get<std::string>()));
    }
    doc.diagram = build_diagram(vertices, edges, rotation);
    return doc;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

DiagramDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

std::string to_dot(const SeparatrixDiagram& d, std::string_view name) {
  std::ostringstream os;
  os << "digraph " << dot_id(name) << " {\n";
  for (const Vertex& v : d.vertices()) {
    os << "  " << dot_id(v.id) << " [kind=" << dot_id(to_string(v.kind))
       << ", label=" << dot_id(v.id + "\\n" + std::string(to_string(v.kind))) << "];\n";
  }
  for (const Edge& e : d.edges()) {
    os << "  " << dot_id(d.vertex(e.tail).id) << " -> " << dot_id(d.vertex(e.head).id)
       << " [id=" << dot_id(e.id) << ", kind=" << dot_id(to_string(e.kind))
       << ", color=" << dot_color(e.kind) << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string format_flow_line(std::size_t ordinal, const SeparatrixDiagram& d, QuotientConfig q) {
  std::ostringstream os;
  os << ordinal << "  " << canonical_code(d, q).short_hash() << "  " << budget_of(d).to_string();
  return os.str();
}

std::string bifurcation_header() { return "points | Morse | SN | BSN | BDS | HN | HS"; }

std::string bifurcation_row(int points, std::size_t flows, const BifurcationSignature& totals) {
  std::ostringstream os;
  os << points << " | " << flows;
  for (int c : totals.counts) os << " | " << c;
  return os.str();
}

}  // namespace morseflow
