// Views of points: visible wall portions, visibility polygons, the kernel,
// and the convex-view cover certificate.

#pragma once

#include "wallin/polygon.hpp"

#include <optional>
#include <vector>

namespace wallin {

struct View {
  Point site;
  SimplePolygon polygon;  // closed visibility region of `site`
};

/// Wall positions visible from p (closed visibility), as a normalized set on [0, n].
IntervalSet wall_view(const SimplePolygon& poly, const Point& p);

/// The visibility polygon of p. Its boundary visits the visible wall portions in
/// wall order; consecutive portions are joined by windows (chords on rays from p).
View visibility_polygon(const SimplePolygon& poly, const Point& p);

/// Same, reusing a wall view that was already computed for p.
View visibility_polygon(const SimplePolygon& poly, const Point& p, const IntervalSet& walls);

struct Kernel {
  std::vector<Point> polygon;  // convex, CCW; may degenerate to a segment or a point

  bool empty() const { return polygon.empty(); }
};

/// Intersection of the inner closed half-planes of all edges.
Kernel kernel(const SimplePolygon& poly);

bool view_is_convex(const SimplePolygon& poly, const Point& p);

/// Candidate wall points for a convex-view cover: the non-reflex corners on
/// edges next to reflex corners, and midpoints of edges between two reflex corners.
std::vector<Point> convex_cover_candidates(const SimplePolygon& poly);

/// Candidates with convex views, returned only when their views jointly cover
/// the gallery. A result certifies normality; nullopt is inconclusive.
std::optional<std::vector<Point>> convex_cover_certificate(const SimplePolygon& poly);

}  // namespace wallin
