#include "wallin/generators.hpp"

#include "wallin/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace wallin::gen {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Points on a circle at jittered, evenly spread angles, rounded to integers.
std::vector<Point> around_origin(Rng& rng, std::size_t n, long r_lo, long r_hi) {
  std::uniform_real_distribution<double> jitter(-0.35, 0.35);
  std::vector<Point> out;
  for (std::size_t k = 0; k < n; ++k) {
    double a = 2 * std::numbers::pi * (static_cast<double>(k) + jitter(rng)) / static_cast<double>(n);
    double r = static_cast<double>(uniform(rng, r_lo, r_hi));
    out.emplace_back(std::lround(r * std::cos(a)), std::lround(r * std::sin(a)));
  }
  return out;
}

bool properly_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

}  // namespace

bool no_three_collinear(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orient(pts[i], pts[j], pts[k]) == 0) return false;
      }
    }
  }
  return true;
}

std::vector<Point> star_polygon(Rng& rng, std::size_t n, long radius) {
  if (n < 3) throw std::invalid_argument("star_polygon: n must be at least 3");
  const Point origin(0, 0);
  for (;;) {
    auto pts = around_origin(rng, n, radius / 5, radius);
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const Point& a = pts[k];
      const Point& b = pts[(k + 1) % n];
      // Strictly counter-clockwise step of less than a half turn.
      ok = a != origin && orient(origin, a, b) > 0;
    }
    if (!ok) continue;
    try {
      SimplePolygon::validate(pts);
    } catch (const PolygonError&) {
      continue;
    }
    return pts;
  }
}

std::vector<Point> few_reflex_polygon(Rng& rng, std::size_t n, std::size_t reflex, long radius) {
  if (reflex > 2) throw std::invalid_argument("few_reflex_polygon: at most two reflex corners");
  if (n < (reflex == 0 ? 3 : 3 + reflex)) throw std::invalid_argument("few_reflex_polygon: n too small");
  for (;;) {
    auto hull = convex_hull(around_origin(rng, n, radius, radius));
    if (hull.size() != n) continue;
    std::vector<std::size_t> pushed;
    while (pushed.size() < reflex) {
      auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
      bool near = std::any_of(pushed.begin(), pushed.end(), [&](std::size_t j) {
        std::size_t d = i > j ? i - j : j - i;
        return std::min(d, n - d) < 2;
      });
      if (!near) pushed.push_back(i);
    }
    auto pts = hull;
    for (auto i : pushed) {
      // Past the chord of the neighbours, part way towards the origin.
      Point chord_mid = midpoint(hull[(i + n - 1) % n], hull[(i + 1) % n]);
      Rational f = ratio(uniform(rng, 1, 6), 10);
      Point q = chord_mid - f * chord_mid;
      pts[i] = Point(Rational(std::lround(q.x.get_d())), Rational(std::lround(q.y.get_d())));
    }
    try {
      auto poly = SimplePolygon::validate(pts);
      if (poly.size() != n || reflex_corners(poly).size() != reflex) continue;
    } catch (const PolygonError&) {
      continue;
    }
    return pts;
  }
}

std::vector<Point> simple_polygon(Rng& rng, std::size_t n, long extent) {
  if (n < 3) throw std::invalid_argument("simple_polygon: n must be at least 3");
  for (;;) {
    std::set<Point> seen;
    std::vector<Point> pts;
    while (pts.size() < n) {
      Point p(uniform(rng, 0, extent), uniform(rng, 0, extent));
      if (seen.insert(p).second) pts.push_back(p);
    }
    if (!no_three_collinear(pts)) continue;
    // 2-opt: reversing the path between two crossing edges shortens the tour,
    // so this terminates.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t i = 0; i < n && !changed; ++i) {
        for (std::size_t j = i + 2; j < n && !changed; ++j) {
          if (i == 0 && j == n - 1) continue;
          if (properly_cross(pts[i], pts[i + 1], pts[j], pts[(j + 1) % n])) {
            std::reverse(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                         pts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
            changed = true;
          }
        }
      }
    }
    try {
      SimplePolygon::validate(pts);
    } catch (const PolygonError&) {
      continue;
    }
    return pts;
  }
}

std::vector<Point> pinwheel_polygon(Rng& rng, std::size_t arms, long radius) {
  if (arms < 3) throw std::invalid_argument("pinwheel_polygon: at least three arms");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double step = 2 * std::numbers::pi / static_cast<double>(arms);
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < arms; ++i) {
      double a = step * (static_cast<double>(i) + 0.2 * (unit(rng) - 0.5));
      double r_tip = radius * (0.7 + 0.3 * unit(rng));
      double r_in = r_tip * (0.5 + 0.3 * unit(rng));
      double back = step * (0.03 + 0.1 * unit(rng));
      pts.emplace_back(std::lround(r_tip * std::cos(a)), std::lround(r_tip * std::sin(a)));
      pts.emplace_back(std::lround(r_in * std::cos(a - back)), std::lround(r_in * std::sin(a - back)));
    }
    try {
      auto poly = SimplePolygon::validate(pts);
      if (poly.size() != 2 * arms || reflex_corners(poly).size() != arms) continue;
    } catch (const PolygonError&) {
      continue;
    }
    return pts;
  }
}

std::vector<Point> spiral_polygon(Rng& rng, std::size_t max_turns) {
  auto turns = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(std::max<std::size_t>(1, max_turns))));
  return fixtures::spiral(turns).outline;
}

std::vector<Site> random_sites(Rng& rng, const SimplePolygon& poly, std::size_t m) {
  auto [lo, hi] = poly.bounds();
  std::set<Point> used;
  std::vector<Site> out;
  const long n = static_cast<long>(poly.size());
  while (out.size() < m) {
    Point p;
    long kind = uniform(rng, 0, 3);
    if (kind == 0) {
      p = poly.vertex(static_cast<std::size_t>(uniform(rng, 0, n - 1)));
    } else if (kind == 1) {
      p = poly.at({static_cast<std::size_t>(uniform(rng, 0, n - 1)), ratio(uniform(rng, 1, 15), 16)});
    } else {
      Rational tx = ratio(uniform(rng, 1, 255), 256);
      Rational ty = ratio(uniform(rng, 1, 255), 256);
      p = Point(lo.x + tx * (hi.x - lo.x), lo.y + ty * (hi.y - lo.y));
      if (!classify_point(poly, p).inside_closed()) continue;
    }
    if (!used.insert(p).second) continue;
    out.push_back({"s" + std::to_string(out.size() + 1), p});
  }
  return out;
}

}  // namespace wallin::gen
