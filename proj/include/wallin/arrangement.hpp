// Faces of a simple polygon cut by a set of chords.
//
// The polygon interior is split into vertical trapezoids by an exact slab
// sweep over all segment endpoints and pairwise intersections. Trapezoids are
// then merged across every vertical slab boundary that is not covered by a
// wall or chord, so each face is a connected component of
// interior \ (walls U chords).

#pragma once

#include "wallin/polygon.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace wallin {

struct Chord {
  Point a;
  Point b;
  std::size_t label = 0;
};

class Arrangement {
 public:
  /// A maximal piece of wall or chord with no other segment crossing its interior.
  struct Piece {
    Point lo;  // lexicographically smaller endpoint
    Point hi;
    bool wall = false;
    std::vector<std::size_t> labels;  // chord labels lying along this piece, sorted
  };

  struct Trapezoid {
    Rational x0, x1;
    std::size_t lower = 0;  // piece ids
    std::size_t upper = 0;
    Rational lower_y0, lower_y1, upper_y0, upper_y1;
    std::size_t face = 0;

    Rational area() const { return (x1 - x0) * ((upper_y0 - lower_y0) + (upper_y1 - lower_y1)) / 2; }
    /// Centre of the vertical midline; strictly interior.
    Point midline_center() const;
    /// Point at relative position (alpha, beta) in (0,1)^2.
    Point sample(const Rational& alpha, const Rational& beta) const;
    std::vector<Point> corners() const;  // CCW, duplicates removed
  };

  struct Face {
    std::vector<std::size_t> trapezoids;
    Point representative;
    Rational area;
  };

  /// Two faces sharing a positive-length stretch of chord(s).
  struct Adjacency {
    std::size_t a = 0;  // a < b
    std::size_t b = 0;
    std::vector<std::size_t> labels;  // chords along the shared boundary
  };

  static Arrangement build(const SimplePolygon& poly, std::span<const Chord> chords);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::vector<Trapezoid>& trapezoids() const { return traps_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Adjacency>& adjacency() const { return adjacency_; }

  /// Exact test: the face equals its convex hull (compared by area).
  bool face_is_convex(std::size_t face) const;
  /// Boundary points of all trapezoids of a face.
  std::vector<Point> face_points(std::size_t face) const;

 private:
  std::vector<Piece> pieces_;
  std::vector<Trapezoid> traps_;
  std::vector<Face> faces_;
  std::vector<Adjacency> adjacency_;
};

}  // namespace wallin
