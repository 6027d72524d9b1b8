#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morseflow/bifurcate.hpp"
#include "morseflow/canon.hpp"
#include "morseflow/enumerate.hpp"
#include "morseflow/io.hpp"
#include "morseflow/topology.hpp"

namespace fs = std::filesystem;
using namespace morseflow;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kSemantic = 2;

struct SurfaceArgs {
  int genus = 1;
  int boundaries = 1;
  std::string quotient = "mirror";

  void attach(CLI::App* app) {
    app->add_option("--genus", genus, "genus of the surface")->check(CLI::NonNegativeNumber);
    app->add_option("--boundaries", boundaries, "number of boundary circles")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--quotient", quotient, "identify mirror images or not")
        ->check(CLI::IsMember({"mirror", "no-mirror"}));
  }
  Surface surface() const { return {genus, boundaries}; }
  QuotientConfig config() const { return {quotient == "mirror", false}; }
};

std::vector<SeparatrixDiagram> flows_for(const SurfaceArgs& s, int points, bool up_to) {
  EnumerateOptions opts;
  opts.surface = s.surface();
  opts.quotient = s.config();
  opts.up_to = up_to;
  return enumerate_flows(points, opts);
}

int run_enumerate(const SurfaceArgs& s, int points, bool up_to, const std::string& format,
                  const std::string& out_dir) {
  const auto flows = flows_for(s, points, up_to);
  const QuotientConfig q = s.config();
  if (format == "table") {
    for (std::size_t i = 0; i < flows.size(); ++i) std::cout << format_flow_line(i, flows[i], q) << '\n';
  } else {
    const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    fs::create_directories(dir);
    std::ostringstream index;
    for (std::size_t i = 0; i < flows.size(); ++i) {
      const std::string hash = canonical_code(flows[i], q).short_hash();
      if (format == "json") {
        write_text(dir / (hash + ".json"), to_json({s.surface(), flows[i]}));
      } else {
        write_text(dir / (hash + ".dot"), to_dot(flows[i], hash));
      }
      index << i << ' ' << hash << ' ' << budget_of(flows[i]).to_string() << '\n';
    }
    write_text(dir / "index.txt", index.str());
  }
  std::cout << flows.size() << " flows\n";
  return kOk;
}

int run_bifurcations(const SurfaceArgs& s, int points, bool up_to, bool per_flow) {
  std::cout << bifurcation_header() << '\n';
  std::vector<std::string> details;
  const int first = up_to ? 2 : points;
  for (int n = first; n <= points; ++n) {
    const auto flows = flows_for(s, n, false);
    std::cout << bifurcation_row(n, flows.size(), totals(flows, s.surface())) << '\n';
    if (!per_flow) continue;
    for (const auto& f : flows) {
      details.push_back(std::to_string(n) + ' ' + canonical_code(f, s.config()).short_hash() + ' ' +
                        signature(f, s.surface()).to_string());
    }
  }
  for (const auto& line : details) std::cout << line << '\n';
  return kOk;
}

int run_validate(const std::string& file) {
  const DiagramDocument doc = read_document(file);
  const ValidationVerdict verdict = validate(doc.diagram, doc.surface);
  if (verdict.valid()) {
    std::cout << "valid\n";
    return kOk;
  }
  std::cout << "invalid\n";
  for (const Violation& v : verdict.violations) std::cout << to_string(v.rule) << ' ' << v.detail << '\n';
  return kSemantic;
}

int run_canon(const std::string& file, const SurfaceArgs& s) {
  std::cout << canonical_code(read_document(file).diagram, s.config()).hex() << '\n';
  return kOk;
}

int run_iso(const std::string& a, const std::string& b, const SurfaceArgs& s, bool reverse) {
  QuotientConfig q = s.config();
  q.identify_reverse = reverse;
  const bool same = are_isomorphic(read_document(a).diagram, read_document(b).diagram, q);
  std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
  return same ? kOk : kSemantic;
}

int run_contract(const std::string& file, const std::string& edge_id, const std::string& out) {
  const DiagramDocument doc = read_document(file);
  if (!validate(doc.diagram, doc.surface).valid()) {
    std::cerr << "input diagram is not valid\n";
    return kSemantic;
  }
  std::uint32_t edge = 0;
  try {
    edge = doc.diagram.find_edge(edge_id);
  } catch (const std::exception&) {
    std::cerr << "no edge '" << edge_id << "'\n";
    return kUsage;
  }
  ContractionResult result;
  try {
    result = contract(doc.diagram, edge, doc.surface);
  } catch (const BifurcationError& e) {
    std::cerr << e.what() << '\n';
    return kSemantic;
  }
  if (const auto* bad = std::get_if<Indeterminate>(&result)) {
    std::cout << "indeterminate\n";
    for (const Violation& v : bad->violations) std::cout << to_string(v.rule) << ' ' << v.detail << '\n';
    return kSemantic;
  }
  const std::string text = to_json({doc.surface, std::get<SeparatrixDiagram>(result)});
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text(out, text);
  }
  return kOk;
}

int run_double(const std::string& file) {
  const DiagramDocument doc = read_document(file);
  const DoubleSummary sum = double_summary(doc.diagram);
  const int expected = double_index_excess(doc.surface);
  const int excess = sum.saddles - sum.nodes;
  std::cout << "vertices_total=" << sum.vertices_total << '\n'
            << "saddles=" << sum.saddles << '\n'
            << "nodes=" << sum.nodes << '\n'
            << "euler_characteristic=" << sum.euler_characteristic << '\n'
            << "saddles_minus_nodes=" << excess << " expected=" << expected
            << (excess == expected ? " ok" : " mismatch") << '\n';
  return excess == expected ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morse flows on surfaces with boundary"};
  app.require_subcommand(1);

  SurfaceArgs surf;
  int points = 0;
  bool up_to = false;
  bool per_flow = false;
  bool reverse = false;
  std::string format = "table";
  std::string out;
  std::string file;
  std::string file_b;
  std::string edge;

  auto* en = app.add_subcommand("enumerate", "list flows up to equivalence");
  surf.attach(en);
  en->add_option("--points", points, "number of singular points")->required()->check(CLI::NonNegativeNumber);
  en->add_flag("--up-to", up_to, "include every point count up to --points");
  en->add_option("--format", format)->check(CLI::IsMember({"table", "json", "dot"}));
  en->add_option("--out", out, "output directory for json and dot");

  auto* bi = app.add_subcommand("bifurcations", "count saddle-node bifurcations");
  surf.attach(bi);
  bi->add_option("--points", points)->required()->check(CLI::NonNegativeNumber);
  bi->add_flag("--up-to", up_to);
  bi->add_flag("--per-flow", per_flow, "print each flow's signature");

  auto* va = app.add_subcommand("validate", "check a diagram document");
  va->add_option("file", file)->required();

  auto* ca = app.add_subcommand("canon", "print the canonical code");
  ca->add_option("file", file)->required();
  ca->add_option("--quotient", surf.quotient)->check(CLI::IsMember({"mirror", "no-mirror"}));

  auto* is = app.add_subcommand("iso", "compare two diagram documents");
  is->add_option("a", file)->required();
  is->add_option("b", file_b)->required();
  is->add_option("--quotient", surf.quotient)->check(CLI::IsMember({"mirror", "no-mirror"}));
  is->add_flag("--reverse", reverse, "identify a flow with its reversal");

  auto* co = app.add_subcommand("contract", "apply the bifurcation along one edge");
  co->add_option("file", file)->required();
  co->add_option("--edge", edge)->required();
  co->add_option("--out", out, "write the result here instead of stdout");

  auto* du = app.add_subcommand("double", "index count on the doubled surface");
  du->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*en) return run_enumerate(surf, points, up_to, format, out);
    if (*bi) return run_bifurcations(surf, points, up_to, per_flow);
    if (*va) return run_validate(file);
    if (*ca) return run_canon(file, surf);
    if (*is) return run_iso(file, file_b, surf, reverse);
    if (*co) return run_contract(file, edge, out);
    if (*du) return run_double(file);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
