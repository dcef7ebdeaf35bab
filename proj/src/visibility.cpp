#include "wallin/visibility.hpp"

#include "wallin/arrangement.hpp"

#include <algorithm>
#include <set>

namespace wallin {

IntervalSet wall_view(const SimplePolygon& poly, const Point& p) {
  if (!classify_point(poly, p).inside_closed()) {
    throw PolygonError(PolygonError::Kind::PointOutside, "viewpoint outside the gallery: " + to_string(p));
  }
  const std::size_t n = poly.size();
  std::vector<IntervalSet::Interval> seen;

  for (std::size_t e = 0; e < n; ++e) {
    const Point& c = poly.vertex(e);
    const Point& d = poly.vertex(e + 1);

    // Visibility along the edge only changes where a sight line through a
    // corner meets it.
    std::vector<Rational> ts{Rational(0), Rational(1)};
    for (const auto& v : poly.vertices()) {
      if (v == p) continue;
      int oc = orient(p, v, c);
      int od = orient(p, v, d);
      if (oc * od >= 0) continue;
      Point pv = v - p;
      ts.push_back(cross(p - c, pv) / cross(d - c, pv));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

    const Rational base(static_cast<unsigned long>(e));
    std::vector<bool> open_seen(ts.size() - 1);
    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
      open_seen[k] = segment_inside(poly, p, lerp(c, d, (ts[k] + ts[k + 1]) / 2));
      if (open_seen[k]) seen.push_back({base + ts[k], base + ts[k + 1]});
    }
    for (std::size_t k = 0; k < ts.size(); ++k) {
      bool covered = (k > 0 && open_seen[k - 1]) || (k + 1 < ts.size() && open_seen[k]);
      if (covered) continue;
      if (segment_inside(poly, p, lerp(c, d, ts[k]))) seen.push_back({base + ts[k], base + ts[k]});
    }
  }
  return IntervalSet::from_intervals(n, std::move(seen));
}

namespace {

// Drops repeated points and every vertex where the ring does not turn,
// including zero-width spikes.
std::vector<Point> clean_ring(std::vector<Point> ring) {
  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t m = ring.size();
    if (m < 3) break;
    for (std::size_t i = 0; i < m; ++i) {
      const Point& a = ring[(i + m - 1) % m];
      const Point& b = ring[i];
      const Point& c = ring[(i + 1) % m];
      if (a == b || orient(a, b, c) == 0) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

}  // namespace

View visibility_polygon(const SimplePolygon& poly, const Point& p) {
  return visibility_polygon(poly, p, wall_view(poly, p));
}

View visibility_polygon(const SimplePolygon& poly, const Point& p, const IntervalSet& walls) {
  const std::size_t n = poly.size();
  std::vector<Point> ring;
  for (const auto& iv : walls.intervals()) {
    ring.push_back(poly.at(poly.pos_of(iv.lo)));
    mpz_class first;
    mpz_fdiv_q(first.get_mpz_t(), iv.lo.get_num_mpz_t(), iv.lo.get_den_mpz_t());
    for (mpz_class k = first + 1; k < iv.hi; ++k) ring.push_back(poly.vertex(k.get_ui() % n));
    ring.push_back(poly.at(poly.pos_of(iv.hi)));
  }
  return {p, SimplePolygon::validate(clean_ring(std::move(ring)))};
}

Kernel kernel(const SimplePolygon& poly) {
  auto [lo, hi] = poly.bounds();
  std::vector<Point> region{lo, {hi.x, lo.y}, hi, {lo.x, hi.y}};

  for (std::size_t e = 0; e < poly.size() && !region.empty(); ++e) {
    const Point& a = poly.vertex(e);
    const Point& b = poly.vertex(e + 1);
    std::vector<Point> clipped;
    const std::size_t m = region.size();
    for (std::size_t k = 0; k < m; ++k) {
      const Point& cur = region[k];
      const Point& nxt = region[(k + 1) % m];
      int oc = orient(a, b, cur);
      int on = orient(a, b, nxt);
      if (oc >= 0) clipped.push_back(cur);
      if (oc * on < 0) {
        Rational fc = cross(b - a, cur - a);
        Rational fn = cross(b - a, nxt - a);
        clipped.push_back(lerp(cur, nxt, fc / (fc - fn)));
      }
    }
    clipped.erase(std::unique(clipped.begin(), clipped.end()), clipped.end());
    while (clipped.size() > 1 && clipped.front() == clipped.back()) clipped.pop_back();
    region = std::move(clipped);
  }
  return {std::move(region)};
}

bool view_is_convex(const SimplePolygon& poly, const Point& p) {
  View v = visibility_polygon(poly, p);
  return reflex_corners(v.polygon).empty();
}

std::vector<Point> convex_cover_candidates(const SimplePolygon& poly) {
  const std::size_t n = poly.size();
  auto reflex = reflex_corners(poly);
  std::vector<bool> is_reflex(n, false);
  for (auto r : reflex) is_reflex[r] = true;

  std::vector<Point> out;
  std::set<Point> seen;
  auto add = [&](Point q) {
    if (seen.insert(q).second) out.push_back(std::move(q));
  };
  for (auto r : reflex) {
    for (std::size_t nb : {(r + n - 1) % n, (r + 1) % n}) {
      if (is_reflex[nb]) {
        add(midpoint(poly.vertex(r), poly.vertex(nb)));
      } else {
        add(poly.vertex(nb));
      }
    }
  }
  return out;
}

std::optional<std::vector<Point>> convex_cover_certificate(const SimplePolygon& poly) {
  if (reflex_corners(poly).empty()) return std::vector<Point>{poly.vertex(0)};

  std::vector<Point> kept;
  std::vector<Chord> chords;
  for (const auto& s : convex_cover_candidates(poly)) {
    View v = visibility_polygon(poly, s);
    if (!reflex_corners(v.polygon).empty()) continue;
    const std::size_t label = kept.size();
    kept.push_back(s);
    for (std::size_t i = 0; i < v.polygon.size(); ++i) {
      chords.push_back({v.polygon.vertex(i), v.polygon.vertex(i + 1), label});
    }
  }
  if (kept.empty()) return std::nullopt;

  auto cells = Arrangement::build(poly, chords);
  for (const auto& face : cells.faces()) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [&](const Point& s) { return segment_inside(poly, s, face.representative); });
    if (!covered) return std::nullopt;
  }
  return kept;
}

}  // namespace wallin
