#include "support.hpp"

#include <doctest.h>

#include <bit>
#include <set>

using namespace wallin;
using test::corner;
using test::lshape;

namespace {

struct Setup {
  SimplePolygon poly;
  GuardSiteSet sites;
};

Setup corners_of(const Gallery& g, SiteChoice c = SiteChoice::Corners) {
  auto poly = test::poly_of(g);
  auto sites = choose_sites(poly, g, c);
  return {poly, sites};
}

bool has_pair(const std::vector<FeasiblePair>& pairs, std::size_t site, std::size_t base) {
  return std::find(pairs.begin(), pairs.end(), FeasiblePair{site, base}) != pairs.end();
}

}  // namespace

TEST_CASE("feasible pairs") {
  auto l = lshape();
  auto one = test::single_site(l, {4, 1});
  auto pairs = feasible_pairs(l, one);
  REQUIRE(pairs.size() == 1);
  CHECK(l.vertex(pairs[0].base) == Point(2, 2));

  auto sq = test::square4();
  CHECK(feasible_pairs(sq, choose_sites(sq, {"sq", {}, {}}, SiteChoice::Corners)).empty());

  auto [g9, corners] = corners_of(fixtures::gamma9());
  auto p9 = feasible_pairs(g9, corners);
  auto site = [&](const char* n) { return corners.find(n).value(); };
  CHECK_FALSE(has_pair(p9, site("4"), corner(g9, 8)));
  CHECK_FALSE(segment_inside(g9, g9.vertex(corner(g9, 4)), g9.vertex(corner(g9, 8))));
  CHECK_FALSE(has_pair(p9, site("6"), corner(g9, 3)));
  CHECK(segment_inside(g9, g9.vertex(corner(g9, 6)), g9.vertex(corner(g9, 3))));
  CHECK(has_pair(p9, site("7"), corner(g9, 3)));
  CHECK(has_pair(p9, site("9"), corner(g9, 8)));
}

TEST_CASE("windows") {
  auto l = lshape();
  auto one = test::single_site(l, {4, 1});
  auto w = build_windows(l, one, feasible_pairs(l, one));
  REQUIRE(w.size() == 1);
  CHECK(w[0].base == Point(2, 2));
  CHECK(w[0].tip == Point(0, 3));

  auto [g8, corners] = corners_of(fixtures::gamma8());
  auto pairs = feasible_pairs(g8, corners);
  FeasiblePair p87{corners.find("8").value(), corner(g8, 7)};
  REQUIRE(has_pair(pairs, p87.site, p87.base));
  auto w87 = build_windows(g8, corners, {p87});
  // The right wall runs from corner 2 down to corner 3.
  auto right = Segment(g8.vertex(corner(g8, 2)), g8.vertex(corner(g8, 3)));
  CHECK(on_segment(right.a(), right.b(), w87[0].tip));
  CHECK(w87[0].tip != right.a());
  CHECK(w87[0].tip != right.b());
}

TEST_CASE("the literal figure coordinates send two windows to corner 1") {
  auto [g8, corners] = corners_of(fixtures::gamma8_exact());
  FeasiblePair p37{corners.find("3").value(), corner(g8, 7)};
  FeasiblePair p47{corners.find("4").value(), corner(g8, 7)};
  auto pairs = feasible_pairs(g8, corners);
  REQUIRE(has_pair(pairs, p37.site, p37.base));
  REQUIRE(has_pair(pairs, p47.site, p47.base));
  auto w = build_windows(g8, corners, {p37, p47});
  CHECK(w[0].tip == g8.vertex(corner(g8, 1)));
  CHECK(w[1].tip == g8.vertex(corner(g8, 1)));

  auto report = check_general_position(g8, corners, trace_windows(g8, corners, pairs));
  CHECK_FALSE(report.ok());
  CHECK_THROWS_AS(build_windows(g8, corners, pairs), DecompositionError);
  CHECK_THROWS_AS(build_decomposition(g8, corners), DegeneracyError);
}

TEST_CASE("general position checks") {
  auto l = lshape();
  auto one = test::single_site(l, {4, 1});
  CHECK(check_general_position(l, one, build_windows(l, one, feasible_pairs(l, one))).ok());

  // Two sites on one line through the reflex corner (2,2) share a window.
  auto t = SimplePolygon::validate({{2, 0}, {4, 0}, {4, 2}, {6, 2}, {6, 4}, {0, 4}, {0, 2}, {2, 2}});
  GuardSiteSet two(t, {{"P", {ratio(3, 2), 3}}, {"Q", {1, 4}}});
  auto report = check_general_position(t, two, trace_windows(t, two, feasible_pairs(t, two)));
  REQUIRE_FALSE(report.ok());
  bool collinear = std::any_of(report.violations.begin(), report.violations.end(), [](const auto& issue) {
    return issue.kind == DegeneracyReport::Issue::Kind::CollinearWindows;
  });
  CHECK(collinear);
  CHECK(report.describe().find("overlaps") != std::string::npos);

  // A third site inside that window.
  GuardSiteSet on(t, {{"P", {ratio(3, 2), 3}}, {"R", {ratio(5, 2), 1}}});
  auto r2 = check_general_position(t, on, trace_windows(t, on, feasible_pairs(t, on)));
  bool site_on = std::any_of(r2.violations.begin(), r2.violations.end(), [](const auto& issue) {
    return issue.kind == DegeneracyReport::Issue::Kind::SiteOnWindow;
  });
  CHECK(site_on);

  auto [g8, corners] = corners_of(fixtures::gamma8());
  CHECK(check_general_position(g8, corners, build_windows(g8, corners, feasible_pairs(g8, corners))).ok());
}

TEST_CASE("decompositions of small galleries") {
  auto sq = test::square4();
  auto center = test::single_site(sq, {2, 2});
  auto ds = build_decomposition(sq, center);
  REQUIRE(ds.regions.size() == 1);
  CHECK(ds.regions[0].visible == 1);
  auto gs = dual_graph_and_sinks(ds);
  CHECK(gs.edges.empty());
  CHECK(gs.sinks == std::vector<std::size_t>{0});

  auto l = lshape();
  auto one = test::single_site(l, {4, 1});
  auto d = build_decomposition(l, one);
  REQUIRE(d.regions.size() == 2);
  const Region* below = nullptr;
  const Region* above = nullptr;
  for (const auto& r : d.regions) (r.visible ? below : above) = &r;
  REQUIRE(below);
  REQUIRE(above);
  CHECK(segment_inside(l, {4, 1}, below->representative));
  CHECK_FALSE(segment_inside(l, {4, 1}, above->representative));
  CHECK(above->area == 3);
  CHECK(below->area == 9);

  auto g = dual_graph_and_sinks(d);
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0] == std::make_pair(below->id, above->id));
  CHECK(g.sinks == std::vector<std::size_t>{above->id});
}

TEST_CASE("the hidden triangle of gamma8 is a sink") {
  auto [g8, corners] = corners_of(fixtures::gamma8());
  auto d = build_decomposition(g8, corners);
  dual_graph_and_sinks(d);
  const SiteMask hidden = test::mask_of(corners, {"4", "5", "8"});
  const SiteMask expected = full_mask(corners.size()) & ~hidden;
  std::optional<std::size_t> h458;
  for (const auto& r : d.regions) {
    if (r.visible == expected) h458 = r.id;
  }
  REQUIRE(h458.has_value());
  CHECK(std::find(d.sinks.begin(), d.sinks.end(), *h458) != d.sinks.end());
  std::size_t neighbours = 0;
  for (const auto& a : d.adjacency) {
    if (a.a != *h458 && a.b != *h458) continue;
    ++neighbours;
    SiteMask other = d.regions[a.a == *h458 ? a.b : a.a].visible;
    CHECK((other & expected) == expected);
    CHECK(other != expected);
  }
  CHECK(neighbours >= 3);
  // The figure's H_{4,5}: seen by 8 as well.
  bool h45 = std::any_of(d.regions.begin(), d.regions.end(), [&](const Region& r) {
    return r.visible == (full_mask(corners.size()) & ~test::mask_of(corners, {"4", "5"}));
  });
  CHECK(h45);
}

TEST_CASE("structural invariants on every fixture") {
  gen::Rng rng(41);
  std::size_t checked = 0;
  for (const auto& name : fixtures::names()) {
    auto g = *fixtures::by_name(name);
    auto poly = test::poly_of(g);
    for (auto choice : {SiteChoice::Corners, SiteChoice::Marked, SiteChoice::All}) {
      auto sites = choose_sites(poly, g, choice);
      if (sites.size() == 0 || !test::general_position(poly, sites)) continue;
      ++checked;
      auto bad = test::structural_violations(poly, sites, rng);
      CHECK_MESSAGE(bad.empty(), name << ": " << (bad.empty() ? "" : bad.front()));
    }
  }
  CHECK(checked >= 12);
}
