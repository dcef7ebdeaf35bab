#include "support.hpp"

#include <doctest.h>

#include <tuple>

using namespace wallin;

namespace {

// m random sites in a random gallery of the given family; the verdict with
// the oracle fallback so degenerate draws still count.
Verdict verdict_for(const std::vector<Point>& outline, gen::Rng& rng, std::size_t m) {
  auto poly = SimplePolygon::validate(outline);
  GuardSiteSet sites(poly, gen::random_sites(rng, poly, m));
  CheckOptions opt;
  opt.oracle_fallback = true;
  return check_normal_wrt(poly, sites, opt).verdict;
}

}  // namespace

TEST_CASE("galleries with at most two reflex corners are normal") {
  gen::Rng rng(61);
  std::uniform_int_distribution<std::size_t> n(5, 12), m(1, 8), reflex(0, 2);
  for (int i = 0; i < 30; ++i) {
    auto outline = gen::few_reflex_polygon(rng, n(rng), reflex(rng));
    CHECK(reflex_corners(SimplePolygon::validate(outline)).size() <= 2);
    CHECK(verdict_for(outline, rng, m(rng)) == Verdict::Normal);
  }
}

TEST_CASE("star galleries are normal") {
  gen::Rng rng(62);
  std::uniform_int_distribution<std::size_t> n(4, 14), m(1, 8);
  for (int i = 0; i < 30; ++i) {
    auto outline = gen::star_polygon(rng, n(rng));
    CHECK_FALSE(kernel(SimplePolygon::validate(outline)).empty());
    CHECK(verdict_for(outline, rng, m(rng)) == Verdict::Normal);
  }
}

TEST_CASE("sufficient conditions imply normal verdicts") {
  gen::Rng rng(63);
  std::size_t implied = 0;
  for (int i = 0; i < 40; ++i) {
    auto outline = i % 2 ? gen::spiral_polygon(rng, 4) : gen::simple_polygon(rng, 7);
    auto poly = SimplePolygon::validate(outline);
    if (!sufficient_conditions(poly).implies_normal) continue;
    ++implied;
    CHECK(verdict_for(outline, rng, 6) == Verdict::Normal);
  }
  CHECK(implied >= 20);
}

TEST_CASE("one or two sites that see all walls see everything") {
  gen::Rng rng(64);
  for (const auto& inst : test::small_covering_sets(rng, 40)) {
    auto poly = SimplePolygon::validate(inst.outline);
    GuardSiteSet sites(poly, inst.sites);
    CHECK(oracle::brute_force_normal_wrt(poly, sites).normal);
    std::vector<Point> at;
    for (const auto& s : inst.sites) at.push_back(s.at);
    CHECK(oracle::hidden_components(poly, at, oracle::make_grid(poly, 24)).empty());
  }
}

TEST_CASE("sink algorithm agrees with brute force on random galleries") {
  gen::Rng rng(65);
  std::size_t compared = 0, not_normal = 0;
  for (std::size_t i = 0; compared < 24; ++i) {
    auto inst = test::random_instance(rng, i, 12, 8);
    auto poly = SimplePolygon::validate(inst.outline);
    GuardSiteSet sites(poly, inst.sites);
    if (!test::general_position(poly, sites)) continue;
    ++compared;
    auto fast = check_normal_wrt(poly, sites);
    auto brute = oracle::brute_force_normal_wrt(poly, sites);
    REQUIRE(fast.verdict != Verdict::InconclusiveDegenerate);
    CHECK((fast.verdict == Verdict::Normal) == brute.normal);
    if (fast.witness) {
      ++not_normal;
      CHECK(fast.witness->size() >= 3);
      CHECK(brute.witness.has_value());
      CHECK(std::popcount(*brute.witness) >= 3);
    }
  }
  CHECK(not_normal > 0);
}

TEST_CASE("fixtures are what they claim") {
  for (const auto& name : fixtures::names()) {
    auto g = *fixtures::by_name(name);
    CAPTURE(name);
    auto poly = test::poly_of(g);
    CHECK(poly.size() == g.outline.size());
    for (const auto& s : g.marked) CHECK(oracle::inside_closed(poly, s.at));
  }
  auto reflex_of = [](const std::string& name) {
    auto poly = test::poly_of(*fixtures::by_name(name));
    std::vector<std::size_t> labels;
    for (auto i : reflex_corners(poly)) labels.push_back(poly.source_index(i) + 1);
    std::sort(labels.begin(), labels.end());
    return labels;
  };
  CHECK(reflex_of("gamma8") == std::vector<std::size_t>{3, 6, 7});
  CHECK(reflex_of("gamma8_exact") == std::vector<std::size_t>{3, 6, 7});
  CHECK(reflex_of("lshape").size() == 1);
  CHECK(reflex_of("gamma6").size() == 3);

  // The nudged figures are in general position; their exact versions are not.
  for (const auto& [name, choice, ok] : std::vector<std::tuple<std::string, SiteChoice, bool>>{
           {"gamma8", SiteChoice::Corners, true},
           {"gamma8_exact", SiteChoice::Corners, false},
           {"gamma9", SiteChoice::All, true},
           {"gamma9_exact", SiteChoice::All, false},
           {"gamma6", SiteChoice::Marked, true}}) {
    auto g = *fixtures::by_name(name);
    auto poly = test::poly_of(g);
    CHECK_MESSAGE(test::general_position(poly, choose_sites(poly, g, choice)) == ok, name);
  }

  // Nudging moved vertices by less than a third of a unit.
  auto close = [](const std::vector<Point>& a, const std::vector<Point>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (abs(a[i].x - b[i].x) > ratio(1, 3) || abs(a[i].y - b[i].y) > ratio(1, 3)) return false;
    }
    return true;
  };
  CHECK(close(fixtures::gamma8().outline, fixtures::gamma8_exact().outline));
  CHECK(close(fixtures::gamma9().outline, fixtures::gamma9_exact().outline));
}
