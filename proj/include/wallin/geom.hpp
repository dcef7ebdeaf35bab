// Exact planar primitives over arbitrary-precision rationals.
//
// Every predicate in the library bottoms out in orient() and
// intersect_segments(); nothing here rounds.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallin {

using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal such as "-2.125" into an exact value.
/// Throws std::invalid_argument on malformed text.
Rational parse_rational(const std::string& text);

/// num/den in lowest terms. Throws std::invalid_argument when den is zero.
Rational ratio(long num, long den);

/// Canonical "p/q" (or "p" when the denominator is one).
std::string to_string(const Rational& value);

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long px, long py) : x(px), y(py) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  /// Lexicographic (x, then y); the sweep order used throughout.
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

std::ostream& operator<<(std::ostream& os, const Point& p);
std::string to_string(const Point& p);

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

inline Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

/// Point at parameter t on the segment a -> b.
inline Point lerp(const Point& a, const Point& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

/// Sign of (q - p) x (r - p): +1 left turn, -1 right turn, 0 collinear.
int orient(const Point& p, const Point& q, const Point& r);

/// True iff r lies on the closed segment pq (pq may be degenerate).
bool on_segment(const Point& p, const Point& q, const Point& r);

/// Parameter of r along a -> b, assuming r is on the supporting line.
Rational param_along(const Point& a, const Point& b, const Point& r);

class Segment {
 public:
  /// Throws std::invalid_argument when a == b.
  Segment(Point a, Point b);

  const Point& a() const { return a_; }
  const Point& b() const { return b_; }

  friend bool operator==(const Segment&, const Segment&) = default;

 private:
  Point a_;
  Point b_;
};

struct SegmentIntersection {
  enum class Kind { Empty, Point, Overlap };

  Kind kind = Kind::Empty;
  Point point;                   // valid for Kind::Point
  std::optional<Segment> overlap;  // valid for Kind::Overlap; ordered along the first segment

  bool empty() const { return kind == Kind::Empty; }
};

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2);

/// Twice the signed area of a closed vertex ring (positive when CCW).
Rational twice_signed_area(const std::vector<Point>& ring);

/// Convex hull (CCW, no collinear points). Empty input gives empty output.
std::vector<Point> convex_hull(std::vector<Point> points);

}  // namespace wallin
