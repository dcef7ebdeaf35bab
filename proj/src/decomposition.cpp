#include "wallin/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace wallin {

GuardSiteSet::GuardSiteSet(const SimplePolygon& poly, std::vector<Site> sites) : sites_(std::move(sites)) {
  if (sites_.size() > kMaxSites) {
    throw std::invalid_argument("at most " + std::to_string(kMaxSites) + " sites are supported");
  }
  std::set<std::string> names;
  std::set<Point> coords;
  for (const auto& s : sites_) {
    if (!names.insert(s.name).second) throw std::invalid_argument("duplicate site name '" + s.name + "'");
    if (!coords.insert(s.at).second) {
      throw std::invalid_argument("site '" + s.name + "' duplicates the position " + to_string(s.at));
    }
    if (!classify_point(poly, s.at).inside_closed()) {
      throw std::invalid_argument("site '" + s.name + "' at " + to_string(s.at) + " is outside the gallery");
    }
  }
}

std::vector<Point> GuardSiteSet::points() const {
  std::vector<Point> out;
  out.reserve(sites_.size());
  for (const auto& s : sites_) out.push_back(s.at);
  return out;
}

std::optional<std::size_t> GuardSiteSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < sites_.size(); ++i) {
    if (sites_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> mask_to_indices(SiteMask mask) {
  std::vector<std::size_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

SiteMask full_mask(std::size_t m) { return m >= 64 ? ~SiteMask{0} : (SiteMask{1} << m) - 1; }

std::vector<FeasiblePair> feasible_pairs(const SimplePolygon& poly, const GuardSiteSet& sites) {
  std::vector<FeasiblePair> out;
  auto reflex = reflex_corners(poly);
  for (std::size_t s = 0; s < sites.size(); ++s) {
    const Point& p = sites[s].at;
    for (auto c : reflex) {
      const Point& corner = poly.vertex(c);
      if (corner == p) continue;
      // Both walls at the corner in one closed half-plane of line p-corner.
      if (orient(p, corner, poly.prev(c)) * orient(p, corner, poly.next(c)) < 0) continue;
      if (!segment_inside(poly, p, corner)) continue;
      out.push_back({s, c});
    }
  }
  return out;
}

std::vector<Window> trace_windows(const SimplePolygon& poly, const GuardSiteSet& sites,
                                  const std::vector<FeasiblePair>& pairs) {
  std::vector<Window> out;
  out.reserve(pairs.size());
  for (const auto& pr : pairs) {
    const Point& base = poly.vertex(pr.base);
    auto limit = sight_limit(poly, base, base - sites[pr.site].at);
    out.push_back({pr, base, limit.tip.point, limit.tip.pos, limit.runs_along_wall, std::move(limit.grazed)});
  }
  return out;
}

std::vector<Window> build_windows(const SimplePolygon& poly, const GuardSiteSet& sites,
                                  const std::vector<FeasiblePair>& pairs) {
  auto out = trace_windows(poly, sites, pairs);
  for (const auto& w : out) {
    if (w.runs_along_wall) {
      throw DecompositionError(DecompositionError::Kind::DegenerateWindow,
                               "window of site '" + sites[w.pair.site].name + "' at corner " +
                                   to_string(w.base) + " runs along a wall");
    }
  }
  return out;
}

std::string DegeneracyReport::describe() const {
  auto kind_name = [](Issue::Kind k) {
    switch (k) {
      case Issue::Kind::CollinearWindows: return "collinear windows";
      case Issue::Kind::SiteOnWindow: return "site on window";
      case Issue::Kind::WindowAlongWall: return "window along wall";
      case Issue::Kind::WindowGrazesBoundary: return "window grazes boundary";
      case Issue::Kind::BaseAdjacentToSite: return "window base adjacent to boundary site";
    }
    return "?";
  };
  std::ostringstream os;
  if (violations.empty()) {
    os << "general position holds";
  } else {
    os << violations.size() << " general-position violation(s)";
  }
  for (const auto* list : {&violations, &warnings}) {
    for (const auto& issue : *list) {
      os << (list == &violations ? "\n  violation: " : "\n  warning: ") << kind_name(issue.kind) << ": "
         << issue.detail;
    }
  }
  return os.str();
}

DegeneracyReport check_general_position(const SimplePolygon& poly, const GuardSiteSet& sites,
                                        const std::vector<Window>& windows) {
  using Issue = DegeneracyReport::Issue;
  DegeneracyReport report;
  auto label = [&](std::size_t w) {
    const auto& win = windows[w];
    return "W(" + sites[win.pair.site].name + "," + std::to_string(poly.source_index(win.pair.base) + 1) + ")";
  };

  for (std::size_t i = 0; i < windows.size(); ++i) {
    const auto& wi = windows[i];
    if (wi.runs_along_wall) {
      report.violations.push_back({Issue::Kind::WindowAlongWall, {i}, wi.pair.site, label(i) + " runs along a wall"});
    }
    if (!wi.grazed.empty()) {
      report.warnings.push_back({Issue::Kind::WindowGrazesBoundary, {i}, wi.pair.site,
                                 label(i) + " touches the boundary at " + to_string(wi.grazed.front())});
    }
    for (std::size_t j = i + 1; j < windows.size(); ++j) {
      const auto& wj = windows[j];
      if (orient(wi.base, wi.tip, wj.base) != 0 || orient(wi.base, wi.tip, wj.tip) != 0) continue;
      Rational t0 = param_along(wi.base, wi.tip, wj.base);
      Rational t1 = param_along(wi.base, wi.tip, wj.tip);
      if (t0 > t1) std::swap(t0, t1);
      if (std::min(t1, Rational(1)) > std::max(t0, Rational(0))) {
        report.violations.push_back(
            {Issue::Kind::CollinearWindows, {i, j}, std::nullopt, label(i) + " overlaps " + label(j)});
      }
    }
    for (std::size_t s = 0; s < sites.size(); ++s) {
      const Point& p = sites[s].at;
      if (p != wi.base && p != wi.tip && on_segment(wi.base, wi.tip, p)) {
        report.violations.push_back(
            {Issue::Kind::SiteOnWindow, {i}, s, "site '" + sites[s].name + "' lies inside " + label(i)});
      }
    }
    const Point& site = sites[wi.pair.site].at;
    const std::size_t c = wi.pair.base;
    for (std::size_t e : {c, (c + poly.size() - 1) % poly.size()}) {
      const Point& a = poly.vertex(e);
      const Point& b = poly.vertex(e + 1);
      if (site != a && site != b && on_segment(a, b, site)) {
        report.warnings.push_back({Issue::Kind::BaseAdjacentToSite, {i}, wi.pair.site,
                                   "site '" + sites[wi.pair.site].name + "' lies on a wall ending at the base of " +
                                       label(i)});
      }
    }
  }
  return report;
}

VisibilityDecomposition build_decomposition(const SimplePolygon& poly, const GuardSiteSet& sites) {
  VisibilityDecomposition d;
  d.sites = sites;
  d.windows = trace_windows(poly, sites, feasible_pairs(poly, sites));
  auto report = check_general_position(poly, sites, d.windows);
  if (!report.ok()) throw DegeneracyError(std::move(report));

  std::vector<Chord> chords;
  chords.reserve(d.windows.size());
  for (std::size_t i = 0; i < d.windows.size(); ++i) chords.push_back({d.windows[i].base, d.windows[i].tip, i});
  d.cells = Arrangement::build(poly, chords);

  const auto& faces = d.cells.faces();
  d.regions.reserve(faces.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Region r{f, faces[f].representative, 0, faces[f].area};
    for (std::size_t s = 0; s < sites.size(); ++s) {
      if (segment_inside(poly, sites[s].at, r.representative)) r.visible |= SiteMask{1} << s;
    }
    d.regions.push_back(std::move(r));
  }
  for (const auto& adj : d.cells.adjacency()) d.adjacency.push_back({adj.a, adj.b, adj.labels});
  return d;
}

DualGraph dual_graph_and_sinks(VisibilityDecomposition& d) {
  DualGraph g;
  g.nodes = d.regions.size();
  std::vector<std::size_t> out_degree(g.nodes, 0);
  std::vector<std::size_t> in_degree(g.nodes, 0);
  std::vector<std::vector<std::size_t>> succ(g.nodes);

  for (const auto& adj : d.adjacency) {
    SiteMask va = d.regions[adj.a].visible;
    SiteMask vb = d.regions[adj.b].visible;
    std::size_t from, to;
    if (va != vb && (vb & ~va) == 0) {
      from = adj.a;
      to = adj.b;
    } else if (va != vb && (va & ~vb) == 0) {
      from = adj.b;
      to = adj.a;
    } else {
      throw DecompositionError(DecompositionError::Kind::IncomparableNeighbors,
                               "adjacent regions " + std::to_string(adj.a) + " and " + std::to_string(adj.b) +
                                   (va == vb ? " see the same sites" : " have incomparable visible-site sets"));
    }
    g.edges.emplace_back(from, to);
    succ[from].push_back(to);
    ++out_degree[from];
    ++in_degree[to];
  }

  std::queue<std::size_t> ready;
  for (std::size_t v = 0; v < g.nodes; ++v) {
    if (in_degree[v] == 0) ready.push(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop();
    ++visited;
    for (auto w : succ[v]) {
      if (--in_degree[w] == 0) ready.push(w);
    }
  }
  if (visited != g.nodes) {
    throw DecompositionError(DecompositionError::Kind::CyclicDualGraph, "dual graph has a cycle");
  }

  for (std::size_t v = 0; v < g.nodes; ++v) {
    if (out_degree[v] == 0) g.sinks.push_back(v);
  }
  d.sinks = g.sinks;
  return g;
}

}  // namespace wallin
