#include "wallin/normality.hpp"

#include "wallin/oracle.hpp"

#include <chrono>
#include <functional>

namespace wallin {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::pair<IntervalSet, Rational> union_of(std::size_t n, const std::vector<IntervalSet>& views, SiteMask mask) {
  std::vector<IntervalSet> chosen;
  for (auto i : mask_to_indices(mask)) chosen.push_back(views[i]);
  return interval_union_measure(n, chosen);
}

bool all_on_walls(const SimplePolygon& poly, const GuardSiteSet& sites, SiteMask mask) {
  for (auto i : mask_to_indices(mask)) {
    if (classify_point(poly, sites[i].at).kind != PointClass::Kind::Boundary) return false;
  }
  return true;
}

WitnessSet make_witness(const SimplePolygon& poly, const GuardSiteSet& sites, const std::vector<IntervalSet>& views,
                        SiteMask mask, const Point& hidden) {
  WitnessSet w;
  w.sites = mask;
  w.uncovered_point = hidden;
  w.covered_walls = union_of(poly.size(), views, mask).first;
  w.all_on_boundary = all_on_walls(poly, sites, mask);
  return w;
}

void require_verified(const SimplePolygon& poly, const GuardSiteSet& sites, const WitnessSet& w) {
  if (!verify_witness(poly, sites, w)) throw std::logic_error("witness failed re-verification");
  if (w.size() < 3) throw std::logic_error("witness with fewer than three sites");
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Normal: return "NORMAL";
    case Verdict::NotNormal: return "NOT NORMAL";
    case Verdict::InconclusiveDegenerate: return "INCONCLUSIVE (degenerate input)";
  }
  return "?";
}

bool covers_walls(std::size_t circumference, std::span<const IntervalSet> views) {
  return interval_union_measure(circumference, views).second == static_cast<unsigned long>(circumference);
}

bool covers_walls(const SimplePolygon& poly, std::span<const Point> sites) {
  std::vector<IntervalSet> views;
  views.reserve(sites.size());
  for (const auto& p : sites) views.push_back(wall_view(poly, p));
  return covers_walls(poly.size(), views);
}

std::vector<IntervalSet> wall_views(const SimplePolygon& poly, const GuardSiteSet& sites) {
  std::vector<IntervalSet> views;
  views.reserve(sites.size());
  for (const auto& s : sites.sites()) views.push_back(wall_view(poly, s.at));
  return views;
}

bool verify_witness(const SimplePolygon& poly, const GuardSiteSet& sites, const WitnessSet& w) {
  if (w.sites == 0) return false;
  std::vector<Point> chosen;
  for (auto i : mask_to_indices(w.sites)) chosen.push_back(sites[i].at);
  if (!covers_walls(poly, chosen)) return false;
  if (classify_point(poly, w.uncovered_point).kind != PointClass::Kind::Interior) return false;
  for (const auto& p : chosen) {
    if (segment_inside(poly, p, w.uncovered_point)) return false;
  }
  return true;
}

NormalityReport check_normal_wrt(const SimplePolygon& poly, const GuardSiteSet& sites, const CheckOptions& options) {
  NormalityReport report;
  const std::size_t n = poly.size();
  const SiteMask all = full_mask(sites.size());

  // Step 1: decomposition, dual graph, sinks.
  auto t0 = Clock::now();
  std::optional<VisibilityDecomposition> decomposition;
  try {
    decomposition = build_decomposition(poly, sites);
    dual_graph_and_sinks(*decomposition);
  } catch (const DegeneracyError& e) {
    report.degeneracy = e.report();
    decomposition.reset();
  } catch (const DecompositionError& e) {
    report.notes.push_back(e.what());
    decomposition.reset();
  }
  report.timings.decomposition_ms = ms_since(t0);

  // Step 2: wall views.
  auto t1 = Clock::now();
  auto views = wall_views(poly, sites);
  report.timings.wall_views_ms = ms_since(t1);

  if (sites.size() == 0 || !covers_walls(n, views)) {
    report.verdict = Verdict::Normal;
    report.notes.push_back("no configuration drawn from the sites covers the walls");
    if (decomposition) {
      report.stats.regions = decomposition->regions.size();
      report.stats.sinks = decomposition->sinks.size();
    }
    return report;
  }

  if (!decomposition) {
    if (!options.oracle_fallback) {
      report.verdict = Verdict::InconclusiveDegenerate;
      return report;
    }
    auto t2 = Clock::now();
    auto brute = oracle::brute_force_normal_wrt(poly, sites, options.oracle_cap, options.grid_resolution);
    report.timings.sink_checks_ms = ms_since(t2);
    report.used_oracle = true;
    report.notes.push_back(brute.used_grid ? "verdict from brute force over a sample grid"
                                           : "verdict from brute force over region representatives");
    if (brute.normal) {
      report.verdict = Verdict::Normal;
    } else {
      report.verdict = Verdict::NotNormal;
      report.witness = make_witness(poly, sites, views, *brute.witness, *brute.hidden_point);
      require_verified(poly, sites, *report.witness);
    }
    return report;
  }

  // Step 3: does the complement of V(R) cover the walls for some sink R?
  auto t3 = Clock::now();
  report.stats.regions = decomposition->regions.size();
  report.stats.sinks = decomposition->sinks.size();
  report.verdict = Verdict::Normal;
  for (auto r : decomposition->sinks) {
    ++report.stats.checked;
    const auto& region = decomposition->regions[r];
    SiteMask hidden_from = all & ~region.visible;
    if (hidden_from == 0) continue;
    if (union_of(n, views, hidden_from).second != static_cast<unsigned long>(n)) continue;
    report.verdict = Verdict::NotNormal;
    report.witness = make_witness(poly, sites, views, hidden_from, region.representative);
    report.witness_region = r;
    require_verified(poly, sites, *report.witness);
    break;
  }
  report.timings.sink_checks_ms = ms_since(t3);
  return report;
}

std::optional<WitnessSet> minimal_witness(const SimplePolygon& poly, const GuardSiteSet& sites) {
  const std::size_t m = sites.size();
  if (m > 30) throw std::invalid_argument("minimal_witness: too many sites for exhaustive search");

  auto d = build_decomposition(poly, sites);
  dual_graph_and_sinks(d);
  auto views = wall_views(poly, sites);
  const std::size_t n = poly.size();
  const SiteMask all = full_mask(m);

  struct Failing {
    SiteMask hidden_from;
    Point representative;
  };
  std::vector<Failing> failing;
  for (auto r : d.sinks) {
    SiteMask hidden_from = all & ~d.regions[r].visible;
    if (hidden_from != 0 && union_of(n, views, hidden_from).second == static_cast<unsigned long>(n)) {
      failing.push_back({hidden_from, d.regions[r].representative});
    }
  }
  if (failing.empty()) return std::nullopt;

  // Subsets in increasing size, lexicographic by index within a size.
  std::optional<WitnessSet> found;
  std::function<void(std::size_t, std::size_t, SiteMask)> extend = [&](std::size_t start, std::size_t left,
                                                                       SiteMask mask) {
    if (found) return;
    if (left == 0) {
      for (const auto& f : failing) {
        if ((mask & ~f.hidden_from) != 0) continue;
        if (union_of(n, views, mask).second != static_cast<unsigned long>(n)) return;
        found = make_witness(poly, sites, views, mask, f.representative);
        return;
      }
      return;
    }
    for (std::size_t i = start; i + left <= m && !found; ++i) extend(i + 1, left - 1, mask | (SiteMask{1} << i));
  };
  for (std::size_t k = 1; k <= m && !found; ++k) extend(0, k, 0);

  if (found) require_verified(poly, sites, *found);
  return found;
}

SufficientConditions sufficient_conditions(const SimplePolygon& poly) {
  SufficientConditions out;
  out.reflex_count = reflex_corners(poly).size();
  out.reflex_le_2 = out.reflex_count <= 2;
  out.kernel = kernel(poly);
  out.star = !out.kernel.empty();
  out.cover = convex_cover_certificate(poly);
  out.convex_cover = out.cover.has_value();
  out.implies_normal = out.reflex_le_2 || out.star || out.convex_cover;
  return out;
}

}  // namespace wallin
