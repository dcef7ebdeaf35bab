#include "wallin/fixtures.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wallin {

namespace {

Point pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

std::vector<Point> ring(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> out;
  for (auto [x, y] : xy) out.emplace_back(x, y);
  return out;
}

}  // namespace

std::vector<Site> corner_sites(const SimplePolygon& poly) {
  std::vector<Site> out;
  out.reserve(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    out.push_back({std::to_string(poly.source_index(i) + 1), poly.vertex(i)});
  }
  std::sort(out.begin(), out.end(), [](const Site& a, const Site& b) { return std::stoul(a.name) < std::stoul(b.name); });
  return out;
}

GuardSiteSet choose_sites(const SimplePolygon& poly, const Gallery& g, SiteChoice choice) {
  std::vector<Site> sites;
  if (choice != SiteChoice::Marked) sites = corner_sites(poly);
  if (choice != SiteChoice::Corners) {
    for (const auto& m : g.marked) {
      bool at_corner = false;
      for (std::size_t i = 0; i < poly.size() && choice == SiteChoice::All; ++i) at_corner |= poly.vertex(i) == m.at;
      if (at_corner) continue;
      Site s = m;
      // Marked points named like a corner label get an "m" prefix.
      if (choice == SiteChoice::All && std::any_of(sites.begin(), sites.end(), [&](const Site& c) { return c.name == s.name; }))
        s.name = "m" + s.name;
      sites.push_back(std::move(s));
    }
  }
  return GuardSiteSet(poly, std::move(sites));
}

GuardSiteSet sites_by_name(const SimplePolygon& poly, const Gallery& g, const std::vector<std::string>& names) {
  std::map<std::string, Point> known;
  for (auto& s : corner_sites(poly)) known.emplace(s.name, s.at);
  for (const auto& m : g.marked) known.insert_or_assign(m.name, m.at);
  std::vector<Site> sites;
  for (const auto& n : names) {
    auto it = known.find(n);
    if (it == known.end()) throw std::invalid_argument("unknown site '" + n + "'");
    sites.push_back({n, it->second});
  }
  return GuardSiteSet(poly, std::move(sites));
}

namespace fixtures {

Gallery square() { return {"square", ring({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), {}}; }

Gallery lshape() { return {"lshape", ring({{0, 0}, {4, 0}, {4, 2}, {2, 2}, {2, 4}, {0, 4}}), {}}; }

// Three reflex corners; the sight lines of A, B, C through them bound a
// triangle around D.
Gallery gamma6() {
  return {"gamma6",
          ring({{10, 7}, {9, 6}, {3, 5}, {4, 5}, {6, 0}, {6, 1}}),
          {{"A", Point(10, 7)}, {"B", Point(3, 5)}, {"C", Point(6, 0)}, {"D", pt("13/2", "9/2")}}};
}

Gallery two_pockets() {
  return {"two_pockets",
          ring({{0, 6}, {3, 6}, {3, 5}, {2, 4}, {4, 2}, {5, 2}, {7, 4}, {9, 2},
                {8, 1}, {7, 2}, {6, 1}, {6, 0}, {0, 2}, {1, 3}, {1, 5}, {0, 5}}),
          {{"1", Point(0, 5)}, {"2", Point(0, 2)}, {"3", Point(4, 2)}, {"4", Point(6, 0)}, {"5", Point(8, 1)}}};
}

Gallery convex_cover_gallery() {
  return {"convex_cover_gallery",
          ring({{0, 5}, {6, 5}, {6, 0}, {0, 0}, {0, 3}, {2, 3}, {2, 1}, {4, 1}, {4, 4}, {0, 4}}),
          {{"1", Point(2, 4)}, {"2", Point(4, 3)}, {"3", Point(3, 1)}, {"4", Point(2, 2)}}};
}

// Corners 1..8 in input order. The top wall is raised and corner 3 lifted so
// that no two windows share a line.
Gallery gamma8() {
  return {"gamma8",
          {pt("1", "26/5"), pt("5", "26/5"), pt("5", "11/10"), pt("6", "0"), pt("0", "0"), pt("2", "2"), pt("2", "4"),
           pt("1", "4")},
          {}};
}

// The grid drawing taken literally: 4, 3, 7, 1 and 5, 6, 2 are collinear.
Gallery gamma8_exact() {
  return {"gamma8_exact", ring({{1, 5}, {5, 5}, {5, 1}, {6, 0}, {0, 0}, {2, 2}, {2, 4}, {1, 4}}), {}};
}

// Corners 1..9 in input order plus the extra site G on the bottom wall.
Gallery gamma9() {
  return {"gamma9",
          {pt("1", "21/5"), pt("4", "4"), pt("4", "1"), pt("6", "6/5"), pt("6", "0"), pt("1", "0"), pt("2", "1"),
           pt("2", "3"), pt("1", "31/10")},
          {{"G", pt("24/5", "0")}}};
}

Gallery gamma9_exact() {
  return {"gamma9_exact", ring({{1, 4}, {4, 4}, {4, 1}, {6, 1}, {6, 0}, {1, 0}, {2, 1}, {2, 3}, {1, 3}}),
          {{"G", Point(5, 0)}}};
}

Gallery spiral(std::size_t turns) {
  if (turns == 0) throw std::invalid_argument("spiral needs at least one turn");
  // Centre line of a square spiral with lane spacing 4, thickened by 1 on
  // each side. Each left turn leaves one reflex corner on the inner side.
  static const long dx[] = {1, 0, -1, 0};
  static const long dy[] = {0, 1, 0, -1};
  std::vector<std::pair<long, long>> centre{{0, 0}};
  for (std::size_t s = 0; s <= turns; ++s) {
    long len = 4 * static_cast<long>(s / 2 + 1);
    auto [x, y] = centre.back();
    centre.emplace_back(x + dx[s % 4] * len, y + dy[s % 4] * len);
  }
  auto normal = [](std::size_t s) { return std::pair<long, long>{-dy[s % 4], dx[s % 4]}; };
  std::vector<Point> left, right;
  for (std::size_t k = 0; k < centre.size(); ++k) {
    // Mitred offset: sum of the normals of the segments meeting here.
    long nx = 0, ny = 0;
    if (k > 0) nx += normal(k - 1).first, ny += normal(k - 1).second;
    if (k + 1 < centre.size()) nx += normal(k).first, ny += normal(k).second;
    left.emplace_back(centre[k].first + nx, centre[k].second + ny);
    right.emplace_back(centre[k].first - nx, centre[k].second - ny);
  }
  std::vector<Point> outline(right.begin(), right.end());
  outline.insert(outline.end(), left.rbegin(), left.rend());
  return {"spiral" + std::to_string(turns), std::move(outline), {}};
}

std::vector<std::string> names() {
  return {"square", "lshape", "gamma6", "two_pockets", "convex_cover_gallery", "gamma8", "gamma8_exact", "gamma9", "gamma9_exact",
          "spiral3", "spiral6"};
}

std::optional<Gallery> by_name(const std::string& name) {
  if (name == "square") return square();
  if (name == "lshape") return lshape();
  if (name == "gamma6") return gamma6();
  if (name == "two_pockets") return two_pockets();
  if (name == "convex_cover_gallery") return convex_cover_gallery();
  if (name == "gamma8") return gamma8();
  if (name == "gamma8_exact") return gamma8_exact();
  if (name == "gamma9") return gamma9();
  if (name == "gamma9_exact") return gamma9_exact();
  if (name.rfind("spiral", 0) == 0 && name.size() > 6) {
    try {
      std::size_t used = 0;
      unsigned long turns = std::stoul(name.substr(6), &used);
      if (used == name.size() - 6 && turns >= 1 && turns <= 64) return spiral(turns);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

}  // namespace fixtures

}  // namespace wallin
