// Visibility decomposition of a gallery with respect to a finite site set.
//
// Every feasible pair (site P, reflex corner C) contributes the window from C
// to the furthest wall point visible from P on the ray P->C. Walls and
// windows cut the gallery into regions whose interiors are seen by a fixed
// subset of the sites; regions with no neighbour seen by fewer sites are sinks.

#pragma once

#include "wallin/arrangement.hpp"
#include "wallin/polygon.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallin {

struct Site {
  std::string name;
  Point at;

  friend bool operator==(const Site&, const Site&) = default;
};

class GuardSiteSet {
 public:
  GuardSiteSet() = default;
  /// Throws std::invalid_argument on duplicate names or coordinates and on
  /// sites outside the closed gallery.
  GuardSiteSet(const SimplePolygon& poly, std::vector<Site> sites);

  std::size_t size() const { return sites_.size(); }
  const Site& operator[](std::size_t i) const { return sites_[i]; }
  const std::vector<Site>& sites() const { return sites_; }
  std::vector<Point> points() const;
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::vector<Site> sites_;
};

/// Site subsets as bitmasks; at most 64 sites.
using SiteMask = std::uint64_t;
constexpr std::size_t kMaxSites = 64;

std::vector<std::size_t> mask_to_indices(SiteMask mask);
SiteMask full_mask(std::size_t m);

struct FeasiblePair {
  std::size_t site = 0;  // index into the site set
  std::size_t base = 0;  // reflex vertex index
  friend bool operator==(const FeasiblePair&, const FeasiblePair&) = default;
};

struct Window {
  FeasiblePair pair;
  Point base;
  Point tip;
  BoundaryPos tip_pos;
  bool runs_along_wall = false;
  std::vector<Point> grazed;  // boundary contacts strictly inside the window
};

class DecompositionError : public std::runtime_error {
 public:
  enum class Kind { DegenerateWindow, Degenerate, IncomparableNeighbors, CyclicDualGraph };
  DecompositionError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::vector<FeasiblePair> feasible_pairs(const SimplePolygon& poly, const GuardSiteSet& sites);

/// One window per pair. Throws DecompositionError::DegenerateWindow when a
/// window would run along a wall.
std::vector<Window> build_windows(const SimplePolygon& poly, const GuardSiteSet& sites,
                                  const std::vector<FeasiblePair>& pairs);

/// Same construction without the wall-overlap check.
std::vector<Window> trace_windows(const SimplePolygon& poly, const GuardSiteSet& sites,
                                  const std::vector<FeasiblePair>& pairs);

struct DegeneracyReport {
  struct Issue {
    enum class Kind { CollinearWindows, SiteOnWindow, WindowAlongWall, WindowGrazesBoundary, BaseAdjacentToSite };
    Kind kind;
    std::vector<std::size_t> windows;
    std::optional<std::size_t> site;
    std::string detail;
  };

  std::vector<Issue> violations;  // block the sink algorithm
  std::vector<Issue> warnings;    // reported only

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Checks that no two windows overlap along a common line and that no site
/// lies inside another site's window.
DegeneracyReport check_general_position(const SimplePolygon& poly, const GuardSiteSet& sites,
                                        const std::vector<Window>& windows);

class DegeneracyError : public DecompositionError {
 public:
  explicit DegeneracyError(DegeneracyReport report)
      : DecompositionError(Kind::Degenerate, report.describe()), report_(std::move(report)) {}
  const DegeneracyReport& report() const { return report_; }

 private:
  DegeneracyReport report_;
};

struct Region {
  std::size_t id = 0;
  Point representative;
  SiteMask visible = 0;  // V(R)
  Rational area;
};

struct RegionAdjacency {
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> windows;
};

struct VisibilityDecomposition {
  GuardSiteSet sites;
  std::vector<Window> windows;
  std::vector<Region> regions;
  std::vector<RegionAdjacency> adjacency;
  std::vector<std::size_t> sinks;  // filled by dual_graph_and_sinks
  Arrangement cells;
};

/// Throws DegeneracyError when check_general_position fails (a window
/// running along a wall is one of the violations).
VisibilityDecomposition build_decomposition(const SimplePolygon& poly, const GuardSiteSet& sites);

struct DualGraph {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // R -> R' with V(R) strictly containing V(R')
  std::vector<std::size_t> sinks;
};

/// Orients every adjacency toward the smaller visible set and returns the
/// nodes without outgoing edges. Also records the sinks in `d`.
/// Throws IncomparableNeighbors (also for equal sets) or CyclicDualGraph.
DualGraph dual_graph_and_sinks(VisibilityDecomposition& d);

}  // namespace wallin
