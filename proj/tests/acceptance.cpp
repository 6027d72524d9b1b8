// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "morseflow/bifurcate.hpp"
#include "morseflow/canon.hpp"
#include "morseflow/enumerate.hpp"
#include "morseflow/io.hpp"
#include "morseflow/topology.hpp"
#include "testkit.hpp"

namespace fs = std::filesystem;
using namespace morseflow;

namespace {

constexpr double kRuntimeLimitSeconds = 60.0;
constexpr int kRandomTrials = 1000;
const QuotientConfig kQuotient{true, false};

using BK = BifurcationKind;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(int id, std::string_view name, const Outcome& o) {
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  " << o.detail << '\n';
  if (!o.pass) ++failures;
}

std::map<int, std::vector<SeparatrixDiagram>> flows_by_n;

BifurcationSignature sig(std::initializer_list<std::pair<BK, int>> items) {
  BifurcationSignature s;
  for (auto [k, c] : items) s[k] = c;
  return s;
}

std::string tuple_text(const BifurcationSignature& s) {
  std::ostringstream os;
  os << '(';
  for (int k = 0; k < kBifurcationKindCount; ++k) os << (k ? "," : "") << s.counts[k];
  os << ')';
  return os.str();
}

using Multiset = std::map<BifurcationSignature, int>;

std::string multiset_text(const Multiset& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : m) {
    os << (first ? "" : " ") << s.to_string() << "x" << c;
    first = false;
  }
  return os.str();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(MORSEFLOW_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome flow_counts() {
  const auto start = std::chrono::steady_clock::now();
  for (int n : {4, 5, 6}) flows_by_n[n] = enumerate_flows(n, {{1, 1}, kQuotient, false});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::array<std::size_t, 3> want{1, 3, 21};
  const std::array<std::size_t, 3> got{flows_by_n[4].size(), flows_by_n[5].size(), flows_by_n[6].size()};
  std::ostringstream os;
  os << "n=4/5/6 got " << got[0] << '/' << got[1] << '/' << got[2] << " want " << want[0] << '/' << want[1]
     << '/' << want[2] << ", " << secs << " s (limit " << kRuntimeLimitSeconds << " s)";
  return {got == want && secs < kRuntimeLimitSeconds, os.str()};
}

Outcome bifurcation_totals() {
  const std::map<int, BifurcationSignature> want{
      {4, {}},
      {5, sig({{BK::BSN, 2}, {BK::BDS, 1}, {BK::HN, 2}})},
      {6, sig({{BK::SN, 20}, {BK::BSN, 14}, {BK::BDS, 10}, {BK::HN, 4}, {BK::HS, 26}})},
  };
  bool pass = true;
  std::ostringstream os;
  for (const auto& [n, w] : want) {
    const auto got = totals(flows_by_n[n]);
    pass = pass && got == w;
    os << "n=" << n << " got " << tuple_text(got) << " want " << tuple_text(w) << "; ";
  }
  return {pass, os.str()};
}

Outcome signature_multisets() {
  const std::map<int, Multiset> want{
      {4, {{BifurcationSignature{}, 1}}},
      {5, {{sig({{BK::BSN, 2}, {BK::BDS, 1}}), 1}, {sig({{BK::HN, 1}}), 2}}},
      {6,
       {{sig({{BK::SN, 2}, {BK::HS, 1}}), 2},
        {sig({{BK::SN, 1}, {BK::HS, 1}}), 6},
        {sig({{BK::SN, 3}, {BK::HS, 1}}), 2},
        {sig({{BK::SN, 2}, {BK::HS, 2}}), 2},
        {sig({{BK::HN, 2}}), 1},
        {sig({{BK::BSN, 1}, {BK::BDS, 1}, {BK::HN, 1}}), 2},
        {sig({{BK::HS, 2}, {BK::BSN, 2}, {BK::BDS, 1}}), 2},
        {sig({{BK::HS, 4}, {BK::BSN, 2}, {BK::BDS, 1}}), 2},
        {sig({{BK::BSN, 2}, {BK::BDS, 3}}), 1},
        {sig({{BK::BSN, 2}, {BK::BDS, 1}}), 1}}},
  };
  bool pass = true;
  std::ostringstream os;
  for (const auto& [n, w] : want) {
    Multiset got;
    for (const auto& f : flows_by_n[n]) ++got[signature(f)];
    if (got == w) {
      os << "n=" << n << " matches; ";
    } else {
      pass = false;
      os << "n=" << n << " got [" << multiset_text(got) << "] want [" << multiset_text(w) << "]; ";
    }
  }
  return {pass, os.str()};
}

Outcome self_reverse_counts() {
  const std::map<int, std::pair<int, std::size_t>> want{{4, {1, 1}}, {5, {1, 3}}, {6, {3, 21}}};
  bool pass = true;
  std::ostringstream os;
  for (const auto& [n, w] : want) {
    const auto& flows = flows_by_n[n];
    const int sym = static_cast<int>(std::count_if(flows.begin(), flows.end(), [](const auto& f) {
      return symmetries(f, kQuotient).self_reverse;
    }));
    pass = pass && sym == w.first && flows.size() == w.second;
    os << "n=" << n << " got " << sym << '/' << flows.size() << " want " << w.first << '/' << w.second << "; ";
  }
  return {pass, os.str()};
}

Outcome contraction_check(const fs::path& scratch) {
  const fs::path input = testkit::data_path("five_point_interior_sink.json");
  const auto d = read_document(input).diagram;
  std::vector<std::string> hn;
  for (const auto& rec : classify_edges(d)) {
    if (rec.kind == BK::HN) hn.push_back(d.edge(rec.edge).id);
  }
  if (hn.size() != 1) return {false, "expected a unique HN edge, found " + std::to_string(hn.size())};
  const fs::path four = scratch / "four.json";
  write_text(four, to_json({{1, 1}, flows_by_n[4].front()}));
  const fs::path out = scratch / "contracted.json";
  const auto c = run_cli("contract " + input.string() + " --edge " + hn.front() + " --out " + out.string());
  const auto iso = run_cli("iso " + out.string() + " " + four.string());
  const bool pass = c.code == 0 && iso.code == 0 && iso.out == "isomorphic\n";
  return {pass, "contract exit " + std::to_string(c.code) + ", iso exit " + std::to_string(iso.code) + " \"" +
                    iso.out.substr(0, iso.out.find('\n')) + "\""};
}

Outcome property_suites() {
  std::vector<SeparatrixDiagram> all;
  for (int n : {4, 5, 6}) all.insert(all.end(), flows_by_n[n].begin(), flows_by_n[n].end());
  std::set<CanonicalCode> codes;
  for (const auto& f : all) codes.insert(canonical_code(f, kQuotient));

  int bad = 0;
  for (const auto& d : all) {
    const auto dbl = double_summary(d);
    const auto report = trace_faces(d);
    std::size_t darts = 0;
    for (const auto& w : report.face_walks) darts += w.size();
    bad += !validate(d).valid();
    bad += dbl.saddles - dbl.nodes != 2;
    bad += darts != 2 * d.edge_count();
    bad += budget_of(d).boundary_total() % 2 != 0;
    bad += !codes.contains(canonical_code(reverse_flow(d), kQuotient));
  }

  int disagreements = 0;
  std::size_t pairs = 0;
  for (int n : {4, 5, 6}) {
    const auto& fs = flows_by_n[n];
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = i; j < fs.size(); ++j) {
        ++pairs;
        disagreements += are_isomorphic(fs[i], fs[j], kQuotient) != testkit::brute_force_iso(fs[i], fs[j], kQuotient);
      }
    }
  }

  std::mt19937 rng(97);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::bernoulli_distribution coin(0.5);
  int random_disagreements = 0;
  for (int t = 0; t < kRandomTrials; ++t) {
    const auto& a = all[pick(rng)];
    SeparatrixDiagram b = testkit::shuffled(coin(rng) ? a : all[pick(rng)], rng);
    if (coin(rng)) b = mirror(b);
    if (coin(rng)) b = reverse_flow(b);
    random_disagreements +=
        (canonical_code(a, kQuotient) == canonical_code(b, kQuotient)) != testkit::brute_force_iso(a, b, kQuotient);
  }

  std::ostringstream os;
  os << all.size() << " flows, " << bad << " invariant failures; " << pairs << " pairs, " << disagreements
     << " oracle disagreements; " << kRandomTrials << " random trials, " << random_disagreements
     << " disagreements";
  return {bad == 0 && disagreements == 0 && random_disagreements == 0, os.str()};
}

Outcome determinism(const fs::path& scratch) {
  const fs::path a = scratch / "run_a";
  const fs::path b = scratch / "run_b";
  const auto ra = run_cli("enumerate --points 6 --format json --out " + a.string());
  const auto rb = run_cli("enumerate --points 6 --format json --out " + b.string());
  std::set<std::string> names_a, names_b;
  for (const auto& e : fs::directory_iterator(a)) names_a.insert(e.path().filename().string());
  for (const auto& e : fs::directory_iterator(b)) names_b.insert(e.path().filename().string());
  bool same = ra.code == 0 && rb.code == 0 && ra.out == rb.out && names_a == names_b && !names_a.empty();
  for (const auto& n : names_a) same = same && slurp(a / n) == slurp(b / n);
  return {same, std::to_string(names_a.size()) + " files compared, stdout \"" +
                    ra.out.substr(0, ra.out.find('\n')) + "\""};
}

}  // namespace

int main() {
  const fs::path scratch = fs::temp_directory_path() / "morseflow_acceptance";
  fs::remove_all(scratch);
  fs::create_directories(scratch);

  report(1, "flow counts", flow_counts());
  report(2, "bifurcation totals", bifurcation_totals());
  report(3, "signature multisets", signature_multisets());
  report(4, "self-reverse counts", self_reverse_counts());
  report(5, "contraction to the four-point flow", contraction_check(scratch));
  report(6, "property suites", property_suites());
  report(7, "determinism", determinism(scratch));

  fs::remove_all(scratch);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
