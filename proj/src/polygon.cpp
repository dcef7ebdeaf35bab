#include "wallin/polygon.hpp"

#include <algorithm>
#include <numeric>

namespace wallin {

namespace {

BoundaryPos make_pos(std::size_t n, std::size_t edge, Rational t) {
  if (t == 1) return {(edge + 1) % n, Rational(0)};
  return {edge, std::move(t)};
}

void sort_unique(std::vector<Rational>& values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
}

}  // namespace

SimplePolygon SimplePolygon::validate(std::vector<Point> v) {
  if (v.size() < 3) {
    throw PolygonError(PolygonError::Kind::TooFewVertices, "a polygon needs at least 3 vertices");
  }
  std::vector<std::size_t> src(v.size());
  std::iota(src.begin(), src.end(), std::size_t{0});

  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == v[(i + 1) % v.size()]) {
      throw PolygonError(PolygonError::Kind::ZeroLengthEdge,
                         "zero-length edge at vertex " + std::to_string(i) + " " + to_string(v[i]));
    }
  }

  // Merge collinear chains; a collinear back-track is a spike and not simple.
  for (bool changed = true; changed && v.size() >= 3;) {
    changed = false;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& a = v[(i + n - 1) % n];
      const Point& b = v[i];
      const Point& c = v[(i + 1) % n];
      if (orient(a, b, c) != 0) continue;
      if (!on_segment(a, c, b) || a == c) {
        throw PolygonError(PolygonError::Kind::NotSimple,
                           "boundary doubles back at " + to_string(b),
                           std::make_pair(src[(i + n - 1) % n], src[i]));
      }
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      src.erase(src.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  if (v.size() < 3) {
    throw PolygonError(PolygonError::Kind::TooFewVertices, "all vertices are collinear");
  }

  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    Segment ei(v[i], v[(i + 1) % n]);
    for (std::size_t j = i + 1; j < n; ++j) {
      Segment ej(v[j], v[(j + 1) % n]);
      auto hit = intersect_segments(ei, ej);
      if (hit.empty()) continue;
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent && hit.kind == SegmentIntersection::Kind::Point) {
        const Point& shared = (j == i + 1) ? v[j] : v[i];
        if (hit.point == shared) continue;
      }
      throw PolygonError(PolygonError::Kind::NotSimple,
                         "edges " + std::to_string(src[i]) + " and " + std::to_string(src[j]) +
                             " intersect",
                         std::make_pair(src[i], src[j]));
    }
  }

  if (twice_signed_area(v) < 0) {
    std::reverse(v.begin() + 1, v.end());
    std::reverse(src.begin() + 1, src.end());
  }
  return SimplePolygon(std::move(v), std::move(src));
}

Rational SimplePolygon::area() const { return twice_signed_area(vertices_) / 2; }

std::pair<Point, Point> SimplePolygon::bounds() const {
  Point lo = vertices_[0];
  Point hi = vertices_[0];
  for (const auto& p : vertices_) {
    if (p.x < lo.x) lo.x = p.x;
    if (p.y < lo.y) lo.y = p.y;
    if (p.x > hi.x) hi.x = p.x;
    if (p.y > hi.y) hi.y = p.y;
  }
  return {lo, hi};
}

Point SimplePolygon::at(const BoundaryPos& pos) const {
  return lerp(vertex(pos.edge), vertex(pos.edge + 1), pos.t);
}

BoundaryPos SimplePolygon::pos_of(const Rational& value) const {
  const std::size_t n = size();
  if (value >= static_cast<unsigned long>(n)) return {0, Rational(0)};
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  std::size_t edge = whole.get_ui();
  return {edge, value - whole};
}

// ---------------------------------------------------------------------------

IntervalSet IntervalSet::from_intervals(std::size_t circumference, std::vector<Interval> raw) {
  const Rational n(static_cast<unsigned long>(circumference));
  for (auto& iv : raw) {
    if (iv.lo > iv.hi) std::swap(iv.lo, iv.hi);
    if (iv.lo == n && iv.hi == n) iv.lo = iv.hi = 0;
  }
  std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

  IntervalSet out(circumference);
  for (auto& iv : raw) {
    if (!out.intervals_.empty() && iv.lo <= out.intervals_.back().hi) {
      if (iv.hi > out.intervals_.back().hi) out.intervals_.back().hi = iv.hi;
    } else {
      out.intervals_.push_back(std::move(iv));
    }
  }
  return out;
}

Rational IntervalSet::measure() const {
  Rational total = 0;
  for (const auto& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

bool IntervalSet::contains(const Rational& value) const {
  const Rational n(static_cast<unsigned long>(circumference_));
  for (const auto& iv : intervals_) {
    if (iv.lo <= value && value <= iv.hi) return true;
    if (value == 0 && iv.hi == n) return true;
    if (value == n && iv.lo == 0) return true;
  }
  return false;
}

bool IntervalSet::has_gap() const {
  Rational cursor = 0;
  for (const auto& iv : intervals_) {
    if (iv.lo > cursor) return true;
    if (iv.hi > cursor) cursor = iv.hi;
  }
  return cursor < static_cast<unsigned long>(circumference_);
}

std::pair<IntervalSet, Rational> interval_union_measure(std::size_t circumference,
                                                        std::span<const IntervalSet> sets) {
  struct Endpoint {
    const Rational* value;
    bool left;
  };
  std::vector<Endpoint> events;
  for (const auto& s : sets) {
    for (const auto& iv : s.intervals()) {
      events.push_back({&iv.lo, true});
      events.push_back({&iv.hi, false});
    }
  }
  std::sort(events.begin(), events.end(), [](const Endpoint& a, const Endpoint& b) {
    int c = cmp(*a.value, *b.value);
    if (c != 0) return c < 0;
    return a.left && !b.left;
  });

  std::vector<IntervalSet::Interval> merged;
  Rational measure = 0;
  std::size_t depth = 0;
  const Rational* start = nullptr;
  for (const auto& e : events) {
    if (e.left) {
      if (depth++ == 0) start = e.value;
    } else if (--depth == 0) {
      merged.push_back({*start, *e.value});
      measure += *e.value - *start;
    }
  }
  return {IntervalSet::from_intervals(circumference, std::move(merged)), measure};
}

// ---------------------------------------------------------------------------

PointClass classify_point(const SimplePolygon& poly, const Point& p) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    int o = orient(a, b, p);
    if (o == 0 && on_segment(a, b, p)) {
      return {PointClass::Kind::Boundary, make_pos(n, i, param_along(a, b, p))};
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
    }
  }
  return {inside ? PointClass::Kind::Interior : PointClass::Kind::Exterior, {}};
}

bool segment_inside(const SimplePolygon& poly, const Point& a, const Point& b) {
  if (!classify_point(poly, a).inside_closed() || !classify_point(poly, b).inside_closed()) {
    throw PolygonError(PolygonError::Kind::PointOutside,
                       "sight segment endpoint outside the gallery: " + to_string(a) + " -> " +
                           to_string(b));
  }
  if (a == b) return true;

  std::vector<Rational> splits{Rational(0), Rational(1)};
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& c = poly.vertex(i);
    const Point& d = poly.vertex(i + 1);
    int o1 = orient(a, b, c);
    int o2 = orient(a, b, d);
    if (o1 == 0 && o2 == 0) {
      for (const Point* e : {&c, &d}) {
        Rational t = param_along(a, b, *e);
        if (t > 0 && t < 1) splits.push_back(std::move(t));
      }
      continue;
    }
    if (o1 * o2 > 0) continue;
    int o3 = orient(c, d, a);
    int o4 = orient(c, d, b);
    if (o3 * o4 > 0) continue;
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return false;  // proper crossing
    if (o1 == 0) splits.push_back(param_along(a, b, c));
    if (o2 == 0) splits.push_back(param_along(a, b, d));
  }
  sort_unique(splits);
  for (std::size_t k = 0; k + 1 < splits.size(); ++k) {
    Point mid = lerp(a, b, (splits[k] + splits[k + 1]) / 2);
    if (!classify_point(poly, mid).inside_closed()) return false;
  }
  return true;
}

namespace {

struct RayContact {
  Rational s;
  bool overlap = false;
  Rational s_end;  // end of the overlap stretch
};

std::vector<RayContact> ray_contacts(const SimplePolygon& poly, const Point& o, const Point& dir) {
  std::vector<RayContact> out;
  const std::size_t n = poly.size();
  const Rational len2 = dot(dir, dir);
  for (std::size_t i = 0; i < n; ++i) {
    const Point& c = poly.vertex(i);
    const Point& d = poly.vertex(i + 1);
    Point cd = d - c;
    Rational denom = cross(dir, cd);
    if (denom != 0) {
      Rational s = cross(c - o, cd) / denom;
      if (s <= 0) continue;
      Rational u = cross(c - o, dir) / denom;
      if (u < 0 || u > 1) continue;
      out.push_back({std::move(s), false, Rational(0)});
    } else if (sgn(cross(c - o, dir)) == 0) {
      Rational sc = dot(c - o, dir) / len2;
      Rational sd = dot(d - o, dir) / len2;
      if (sc > sd) std::swap(sc, sd);
      if (sd <= 0) continue;
      if (sc < 0) sc = 0;
      out.push_back({sc, true, sd});
    }
  }
  return out;
}

}  // namespace

RayHit ray_shoot(const SimplePolygon& poly, const Point& origin, const Point& dir) {
  if (dir == Point(0, 0)) throw std::invalid_argument("ray_shoot: zero direction");
  auto contacts = ray_contacts(poly, origin, dir);
  const RayContact* best = nullptr;
  for (const auto& c : contacts) {
    if (!best || c.s < best->s || (c.s == best->s && c.overlap)) best = &c;
  }
  if (!best) throw PolygonError(PolygonError::Kind::NoHit, "ray from " + to_string(origin) + " hits nothing");
  if (best->overlap) {
    throw PolygonError(PolygonError::Kind::DegenerateAlongEdge,
                       "ray from " + to_string(origin) + " runs along a wall");
  }
  Point hit = origin + best->s * dir;
  auto cls = classify_point(poly, hit);
  return {hit, cls.pos};
}

SightLimit sight_limit(const SimplePolygon& poly, const Point& origin, const Point& dir) {
  if (dir == Point(0, 0)) throw std::invalid_argument("sight_limit: zero direction");
  auto contacts = ray_contacts(poly, origin, dir);
  std::vector<Rational> stops;
  for (const auto& c : contacts) {
    if (c.s > 0) stops.push_back(c.s);
    if (c.overlap) stops.push_back(c.s_end);
  }
  sort_unique(stops);

  Rational reach = 0;
  for (const auto& s : stops) {
    Point mid = origin + ((reach + s) / 2) * dir;
    if (!classify_point(poly, mid).inside_closed()) break;
    reach = s;
  }
  if (reach == 0) {
    throw PolygonError(PolygonError::Kind::NoHit,
                       "ray from " + to_string(origin) + " leaves the gallery immediately");
  }

  SightLimit out;
  out.tip.point = origin + reach * dir;
  out.tip.pos = classify_point(poly, out.tip.point).pos;
  for (const auto& c : contacts) {
    if (c.overlap && c.s < reach && c.s_end > c.s) out.runs_along_wall = true;
    if (!c.overlap && c.s < reach) out.grazed.push_back(origin + c.s * dir);
  }
  std::sort(out.grazed.begin(), out.grazed.end());
  out.grazed.erase(std::unique(out.grazed.begin(), out.grazed.end()), out.grazed.end());
  return out;
}

std::vector<std::size_t> reflex_corners(const SimplePolygon& poly) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (orient(poly.prev(i), poly.vertex(i), poly.next(i)) < 0) out.push_back(i);
  }
  return out;
}

}  // namespace wallin
