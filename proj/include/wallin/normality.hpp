// Deciding whether a gallery is normal with respect to a finite site set:
// does every configuration drawn from the sites that sees all walls also
// see the whole interior?

#pragma once

#include "wallin/decomposition.hpp"
#include "wallin/visibility.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wallin {

enum class Verdict { Normal, NotNormal, InconclusiveDegenerate };

std::string to_string(Verdict v);

/// Sites that see every wall point but miss an interior point.
struct WitnessSet {
  SiteMask sites = 0;
  Point uncovered_point;
  IntervalSet covered_walls;
  bool all_on_boundary = false;  // every witness site lies on a wall

  std::size_t size() const { return mask_to_indices(sites).size(); }
};

struct SinkStats {
  std::size_t regions = 0;
  std::size_t sinks = 0;
  std::size_t checked = 0;
};

struct StepTimings {
  double decomposition_ms = 0;
  double wall_views_ms = 0;
  double sink_checks_ms = 0;
};

struct NormalityReport {
  Verdict verdict = Verdict::Normal;
  std::optional<WitnessSet> witness;
  std::optional<std::size_t> witness_region;
  SinkStats stats;
  StepTimings timings;
  std::optional<DegeneracyReport> degeneracy;
  bool used_oracle = false;
  std::vector<std::string> notes;
};

struct CheckOptions {
  bool oracle_fallback = false;
  std::size_t grid_resolution = 64;
  std::size_t oracle_cap = 12;
};

bool covers_walls(const SimplePolygon& poly, std::span<const Point> sites);
/// Coverage from precomputed wall views of the chosen sites.
bool covers_walls(std::size_t circumference, std::span<const IntervalSet> views);

std::vector<IntervalSet> wall_views(const SimplePolygon& poly, const GuardSiteSet& sites);

/// The sink-region algorithm. Degenerate inputs yield InconclusiveDegenerate
/// unless `options.oracle_fallback` asks for the brute-force answer.
NormalityReport check_normal_wrt(const SimplePolygon& poly, const GuardSiteSet& sites,
                                 const CheckOptions& options = {});

/// Re-checks a witness from scratch: full wall coverage and an uncovered point
/// hidden from every witness site.
bool verify_witness(const SimplePolygon& poly, const GuardSiteSet& sites, const WitnessSet& w);

/// Smallest subset of the sites that covers the walls while leaving some
/// region unseen, or nullopt when the gallery is normal w.r.t. the sites.
/// Exhaustive in subset size; throws DecompositionError on degenerate input.
std::optional<WitnessSet> minimal_witness(const SimplePolygon& poly, const GuardSiteSet& sites);

struct SufficientConditions {
  bool reflex_le_2 = false;
  bool star = false;
  bool convex_cover = false;
  bool implies_normal = false;
  std::size_t reflex_count = 0;
  Kernel kernel;
  std::optional<std::vector<Point>> cover;
};

SufficientConditions sufficient_conditions(const SimplePolygon& poly);

}  // namespace wallin
