// The gallery: a validated counter-clockwise simple polygon, its boundary
// parameterization, and the containment queries that define closed
// visibility.

#pragma once

#include "wallin/geom.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wallin {

class PolygonError : public std::runtime_error {
 public:
  enum class Kind { NotSimple, TooFewVertices, ZeroLengthEdge, PointOutside, NoHit, DegenerateAlongEdge };

  PolygonError(Kind kind, const std::string& what,
               std::optional<std::pair<std::size_t, std::size_t>> edges = std::nullopt)
      : std::runtime_error(what), kind_(kind), edges_(edges) {}

  Kind kind() const { return kind_; }
  /// For NotSimple: the offending edge pair (indices into the input list).
  const std::optional<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

 private:
  Kind kind_;
  std::optional<std::pair<std::size_t, std::size_t>> edges_;
};

/// A position on the walls: fraction t of the way along edge `edge`.
/// Totally ordered by value() = edge + t in [0, n).
struct BoundaryPos {
  std::size_t edge = 0;
  Rational t;

  Rational value() const { return Rational(static_cast<unsigned long>(edge)) + t; }
  friend bool operator==(const BoundaryPos& a, const BoundaryPos& b) {
    return a.edge == b.edge && a.t == b.t;
  }
};

class SimplePolygon {
 public:
  /// Validates and normalizes: CW input is reversed, collinear chains are
  /// merged. Throws PolygonError {TooFewVertices, ZeroLengthEdge, NotSimple}.
  static SimplePolygon validate(std::vector<Point> vertices);

  std::size_t size() const { return vertices_.size(); }
  const Point& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  std::span<const Point> vertices() const { return vertices_; }
  const Point& prev(std::size_t i) const { return vertex(i + size() - 1); }
  const Point& next(std::size_t i) const { return vertex(i + 1); }
  Segment edge(std::size_t i) const { return {vertex(i), vertex(i + 1)}; }

  /// Index of vertex i in the list given to validate().
  std::size_t source_index(std::size_t i) const { return source_index_[i]; }

  Rational area() const;
  /// Axis-aligned bounding box as (min corner, max corner).
  std::pair<Point, Point> bounds() const;

  Point at(const BoundaryPos& pos) const;
  /// Maps a value in [0, n] back to a position; n wraps to 0.
  BoundaryPos pos_of(const Rational& value) const;

 private:
  explicit SimplePolygon(std::vector<Point> v, std::vector<std::size_t> src)
      : vertices_(std::move(v)), source_index_(std::move(src)) {}

  std::vector<Point> vertices_;
  std::vector<std::size_t> source_index_;
};

/// Sorted, pairwise disjoint closed intervals of boundary values in [0, n].
/// Touching intervals are merged; single points are allowed. The value n is
/// the same wall point as 0; an isolated point at n is stored as 0.
class IntervalSet {
 public:
  struct Interval {
    Rational lo;
    Rational hi;
    friend bool operator==(const Interval&, const Interval&) = default;
  };

  IntervalSet() = default;
  explicit IntervalSet(std::size_t circumference) : circumference_(circumference) {}

  /// Builds a normalized set from arbitrary closed intervals.
  static IntervalSet from_intervals(std::size_t circumference, std::vector<Interval> raw);

  std::size_t circumference() const { return circumference_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return intervals_.empty(); }
  Rational measure() const;
  bool contains(const Rational& value) const;
  /// Explicit scan for an uncovered stretch of positive length.
  bool has_gap() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::size_t circumference_ = 0;
  std::vector<Interval> intervals_;
};

/// Union of interval sets on a common circle via one sorted endpoint sweep
/// (left endpoints before right ones on ties), plus the union's measure.
std::pair<IntervalSet, Rational> interval_union_measure(std::size_t circumference,
                                                        std::span<const IntervalSet> sets);

struct PointClass {
  enum class Kind { Interior, Boundary, Exterior };
  Kind kind = Kind::Exterior;
  BoundaryPos pos;  // valid for Boundary

  bool inside_closed() const { return kind != Kind::Exterior; }
};

PointClass classify_point(const SimplePolygon& poly, const Point& p);

/// Closed-visibility sight test: every point of segment ab lies in the
/// closed polygon. Throws PolygonError::PointOutside if a or b is exterior.
bool segment_inside(const SimplePolygon& poly, const Point& a, const Point& b);

struct RayHit {
  Point point;
  BoundaryPos pos;
};

/// First boundary point strictly beyond origin along origin + s*dir.
/// Throws NoHit, or DegenerateAlongEdge when the first contact runs along a wall.
RayHit ray_shoot(const SimplePolygon& poly, const Point& origin, const Point& dir);

/// Furthest point reachable from origin along dir without leaving the closed
/// polygon. Grazing contacts are passed through.
struct SightLimit {
  RayHit tip;
  bool runs_along_wall = false;      // a positive-length stretch of [origin, tip] lies on a wall
  std::vector<Point> grazed;         // boundary contacts strictly between origin and tip
};
SightLimit sight_limit(const SimplePolygon& poly, const Point& origin, const Point& dir);

std::vector<std::size_t> reflex_corners(const SimplePolygon& poly);

}  // namespace wallin
