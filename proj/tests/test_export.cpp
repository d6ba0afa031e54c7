#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "ivt/export.hpp"

using namespace ivt;

namespace {

std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const ClassificationReport &report() {
  static const ClassificationReport r = classify_all(GridConfig{}, 2);
  return r;
}

std::set<std::string> edges(const std::string &dot) {
  static const std::regex edge(R"re("([^"]+)" -> "([^"]+)")re");
  std::set<std::string> out;
  for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it)
    out.insert((*it)[1].str() + ">" + (*it)[2].str());
  return out;
}

} // namespace

TEST_CASE("STD DOT matches golden files") {
  int compared = 0;
  for (const auto &entry : std::filesystem::directory_iterator(IVT_GOLDEN_DIR "/std")) {
    int i = 0, j = 0;
    REQUIRE(std::sscanf(entry.path().filename().c_str(), "f_%d_%d.dot", &i, &j) == 2);
    CAPTURE(entry.path());
    CHECK(emit_std_dot(PairMap(i, j)) == slurp(entry.path()));
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("STD DOT edge set equals build_std") {
  for (PairMap f : PairMap::all()) {
    std::set<std::string> expected;
    const TransitionDiagram d = build_std(f);
    for (PairState s : all_pair_states)
      expected.insert(s.label() + ">" + d.next(s).label());
    CHECK(edges(emit_std_dot(f)) == expected);
  }
  CHECK(edges(emit_std_dot(PairMap(4, 5))).count("11>00"));
  CHECK(edges(emit_std_dot(PairMap(0, 0))) ==
        std::set<std::string>{"00>00", "01>00", "10>00", "11>00"});
}

TEST_CASE("orbit DOT") {
  SUBCASE("IVT_{13,3} from (0,2)") {
    const std::vector<NatPair> starts{{0, 2}};
    const std::string dot = emit_orbit_dot(PairMap(13, 3), starts);
    CHECK(edges(dot) == std::set<std::string>{"0,2>1,3", "1,3>1,2", "1,2>1,2"});
    CHECK(dot.find("\"1,2\" [style=bold]") != std::string::npos);
    CHECK(dot.find("\"0,2\" [peripheries=2]") != std::string::npos);
    CHECK(dot.find("\"1,3\";") != std::string::npos);
  }
  SUBCASE("IVT_{10,0} on the 8x8 box drains into (0,0)") {
    std::vector<NatPair> starts;
    for (unsigned m = 0; m < 8; ++m)
      for (unsigned n = 0; n < 8; ++n)
        starts.push_back(NatPair{m, n});
    const std::string dot = emit_orbit_dot(PairMap(10, 0), starts);
    for (const std::string &e : edges(dot)) {
      const std::string target = e.substr(e.find('>') + 1);
      CHECK((target == "0,0" || target.substr(target.find(',')) == ",0"));
    }
    CHECK(dot.find("\"0,0\" -> \"0,0\" [style=bold]") != std::string::npos);
  }
  SUBCASE("single fixed point") {
    const std::vector<NatPair> starts{{0, 0}};
    const std::string dot = emit_orbit_dot(PairMap(0, 0), starts);
    CHECK(edges(dot) == std::set<std::string>{"0,0>0,0"});
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(emit_orbit_dot(PairMap(0, 0), {}), std::invalid_argument);
    const std::vector<NatPair> starts{{0, 0}};
    CHECK_THROWS_AS(emit_orbit_dot(PairMap(1, 1), starts, OrbitConfig{1}), CycleNotFound);
  }
}

TEST_CASE("classification JSON") {
  const std::string json = emit_classification(report(), Format::json, true);
  CHECK(json.find("\"schema_version\": 1") != std::string::npos);
  CHECK(json.find("\"totals\": {\n    \"I\": 125,\n    \"II\": 93,\n    \"III\": 32,\n    \"IV\": 6\n  }") !=
        std::string::npos);
  CHECK(json.find("\"diff\": []") != std::string::npos);
  CHECK(json.find("SENSITIVITY_MISMATCH") != std::string::npos);

  const ClassificationReport back = parse_classification_json(json);
  CHECK(back == report());
  const ClassificationReport no_diff =
      parse_classification_json(emit_classification(report(), Format::json, false));
  CHECK(no_diff.records == report().records);
  CHECK(no_diff.diff.empty());
  CHECK_THROWS(parse_classification_json("{\"schema_version\": 2}"));
}

TEST_CASE("classification CSV and text") {
  const std::string csv = emit_classification(report(), Format::csv, true);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("i,j,class,", 0) == 0);
  CHECK(header.size() > 5);
  CHECK(header.substr(header.size() - 5) == ",diff");
  int rows = 0;
  for (std::string line; std::getline(lines, line);)
    ++rows;
  CHECK(rows == 256);
  CHECK(csv.find("\n9,5,IV,") != std::string::npos);
  CHECK(csv.find("\n4,3,I,") != std::string::npos);

  const std::string text = emit_classification(report(), Format::text, true);
  CHECK(text.find("totals: I=125 II=93 III=32 IV=6") != std::string::npos);
  CHECK_THROWS_AS(emit_classification(report(), Format::dot, false), std::invalid_argument);
}

TEST_CASE("other emitters") {
  const std::string collatz = emit_collatz(enumerate_collatz_like(), Format::json);
  CHECK(collatz.find("\"count\": 16") != std::string::npos);
  const Trajectory t = trajectory(13, 3, NatPair{0, 2});
  CHECK(emit_trajectory(PairMap(13, 3), t, Format::text).find("cycle: (1,2)") !=
        std::string::npos);
  CHECK(emit_trajectory(PairMap(13, 3), t, Format::json).find("\"steps_to_cycle\": 2") !=
        std::string::npos);
  CHECK_THROWS_AS(emit_trajectory(PairMap(13, 3), t, Format::csv), std::invalid_argument);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_FALSE(parse_format("yaml"));
}
