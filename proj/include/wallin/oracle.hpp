// Brute-force reference implementations. Nothing here reuses the visibility
// or interval code of the main pipeline, so agreement between the two is
// evidence rather than tautology.

#pragma once

#include "wallin/decomposition.hpp"
#include "wallin/polygon.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace wallin::oracle {

using IntervalList = std::vector<IntervalSet::Interval>;

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point in the closed polygon, by winding number.
bool inside_closed(const SimplePolygon& poly, const Point& p);

/// Segment pq inside the closed polygon: split at every crossing with an
/// edge's supporting line and test each piece's midpoint.
bool naive_visible(const SimplePolygon& poly, const Point& p, const Point& q);

/// Closed intervals merged pairwise until no two touch; sorted on return.
IntervalList naive_merge(IntervalList intervals, std::size_t circumference);
Rational naive_measure(const IntervalList& merged);

IntervalList naive_wall_view(const SimplePolygon& poly, const Point& p);
/// Area of the view of p as a fan of triangles over its visible wall pieces.
Rational naive_view_area(const SimplePolygon& poly, const Point& p);

struct SampleGrid {
  std::size_t resolution = 0;
  struct Cell {
    std::size_t i, j;
    Point at;
  };
  std::vector<Cell> cells;  // interior cell centres only
};

SampleGrid make_grid(const SimplePolygon& poly, std::size_t resolution);

struct BruteForceResult {
  bool normal = true;
  std::optional<SiteMask> witness;           // a minimum-size witness
  std::optional<Point> hidden_point;
  std::vector<SiteMask> minimal_witnesses;   // all witnesses of that size
  std::size_t subsets_checked = 0;
  bool used_grid = false;
};

/// Tries all nonempty subsets of the sites. Hidden points are searched among
/// decomposition representatives, or grid cells when the decomposition is
/// degenerate. Throws OracleError when there are more sites than `cap`.
BruteForceResult brute_force_normal_wrt(const SimplePolygon& poly, const GuardSiteSet& sites, std::size_t cap = 12,
                                        std::size_t grid_resolution = 64);

/// Grid cells seen by none of the guards, clustered by 4-neighbourhood.
std::vector<std::vector<Point>> hidden_components(const SimplePolygon& poly, std::span<const Point> guards,
                                                  const SampleGrid& grid);

}  // namespace wallin::oracle
