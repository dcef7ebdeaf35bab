#include "support.hpp"

#include "wallin/gallery_file.hpp"
#include "wallin/svg.hpp"

#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace wallin;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(WALLIN_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("wallin_cli_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("gallery files round-trip") {
  for (const auto& name : fixtures::names()) {
    auto g = *fixtures::by_name(name);
    auto text = format_gallery(g);
    CHECK(parse_gallery(text, g.name) == g);
  }
  auto g = parse_gallery(
      "# an L\n"
      "polygon = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]\n"
      "sites = {A: (1/2, 1/2), B: (3.25, 1)}\n");
  CHECK(g.outline.size() == 6);
  REQUIRE(g.marked.size() == 2);
  CHECK(g.marked[1].name == "B");
  CHECK(g.marked[1].at == Point(ratio(13, 4), 1));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_AS(parse_gallery("sites = {A: (0, 0)}\n"), ParseError);
  try {
    parse_gallery("# x\npolygon = [(0, 0), (1, 0), (1, oops)]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_gallery("polygon = [(0, 0), (1, 1/0), (0, 1)]\n"), ParseError);
  CHECK_THROWS_AS(parse_gallery("polygon = [(0, 0), (1, 0), (0, 1)]\nsites = {A: (0, 0), A: (1, 0)}\n"), ParseError);
}

TEST_CASE("area centroid") {
  CHECK(area_centroid(test::square4()) == Point(2, 2));
  CHECK(area_centroid(test::lshape()) == Point(ratio(5, 3), ratio(5, 3)));
}

TEST_CASE("svg output is deterministic") {
  auto g = fixtures::gamma8();
  auto poly = test::poly_of(g);
  auto sites = choose_sites(poly, g, SiteChoice::Corners);
  auto d = build_decomposition(poly, sites);
  dual_graph_and_sinks(d);
  auto report = check_normal_wrt(poly, sites);
  CHECK(svg::decomposition(poly, d) == svg::decomposition(poly, d));
  CHECK(svg::witness(poly, sites, report) == svg::witness(poly, sites, report));
  auto a = run_cli("render gamma8 sinks");
  auto b = run_cli("render gamma8 sinks");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("<svg", 0) == 0);
  CHECK(a.out.find("H_{4,5,8}") != std::string::npos);
}

TEST_CASE("the view of the far corner of an L shows its chord") {
  auto r = run_cli("render lshape views --site 4,1");
  REQUIRE(r.status == 0);
  CHECK(r.out.find(R"(<line x1="320.000" y1="320.000" x2="40.000" y2="180.000")") != std::string::npos);
}

TEST_CASE("exit codes") {
  struct Case {
    std::string args;
    int status;
  };
  std::vector<Case> cases{
      {"check square", 0},
      {"check lshape", 0},
      {"check gamma6 --sites marked", 1},
      {"check gamma6 --sites A,B,C", 1},
      {"check gamma8", 1},
      {"check gamma9", 0},
      {"check gamma9 --sites all", 1},
      {"check gamma8_exact", 2},
      {"check gamma8_exact --oracle-fallback", 1},
      {"check gamma9_exact --sites all --oracle-fallback", 1},
      {"check convex_cover_gallery --sites marked", 0},
      {"check spiral3", 0},
      {"check no_such_gallery", 2},
      {"check lshape --sites nobody", 2},
      {"frobnicate", 2},
      {"--help", 0},
      {"suffice lshape", 0},
      {"fixtures", 0},
  };
  for (const auto& c : cases) CHECK_MESSAGE(run_cli(c.args).status == c.status, c.args);
}

TEST_CASE("check prints a machine-readable record") {
  auto r = run_cli("check gamma8 --minimal");
  CHECK(r.status == 1);
  CHECK(r.out.find("verdict=NOT_NORMAL") != std::string::npos);
  CHECK(r.out.find("minimal_witness=4,5,8") != std::string::npos);
  auto j = run_cli("check gamma9 --sites all --json");
  CHECK(j.status == 1);
  CHECK(j.out.find("\"verdict\"") != std::string::npos);
}

TEST_CASE("exported fixtures load back from disk") {
  for (const auto& name : {"gamma6", "two_pockets", "gamma9"}) {
    auto r = run_cli(std::string("export ") + name);
    REQUIRE(r.status == 0);
    auto path = temp_file(std::string(name) + ".txt", r.out);
    auto loaded = load_gallery(path.string());
    auto g = *fixtures::by_name(name);
    CHECK(loaded.outline == g.outline);
    CHECK(loaded.marked == g.marked);
    auto direct = run_cli("check " + std::string(name) + " --sites all");
    auto via_file = run_cli("check " + path.string() + " --sites all");
    CHECK(direct.status == via_file.status);
    std::filesystem::remove(path);
  }
}

TEST_CASE("generated galleries are valid input") {
  for (const auto& kind : {"star", "few-reflex", "simple", "pinwheel", "spiral"}) {
    auto r = run_cli(std::string("generate ") + kind + " --seed 7");
    REQUIRE_MESSAGE(r.status == 0, kind);
    auto g = parse_gallery(r.out);
    CHECK_NOTHROW(SimplePolygon::validate(g.outline));
  }
}

TEST_CASE("checked-in gallery files match the built-in fixtures") {
  for (const auto& name : fixtures::names()) {
    auto path = std::filesystem::path(WALLIN_FIXTURE_DIR) / (name + ".gallery");
    REQUIRE_MESSAGE(std::filesystem::exists(path), path.string());
    auto loaded = load_gallery(path.string());
    auto g = *fixtures::by_name(name);
    CHECK_MESSAGE(loaded.outline == g.outline, name);
    CHECK_MESSAGE(loaded.marked == g.marked, name);
  }
}
