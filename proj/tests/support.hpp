// Helpers shared by the test binaries.

#pragma once

#include "wallin/fixtures.hpp"
#include "wallin/generators.hpp"
#include "wallin/normality.hpp"
#include "wallin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <set>
#include <map>
#include <string>
#include <vector>

namespace wallin::test {

inline SimplePolygon poly_of(const Gallery& g) { return SimplePolygon::validate(g.outline); }

inline SimplePolygon lshape() { return poly_of(fixtures::lshape()); }

inline SimplePolygon square4() { return SimplePolygon::validate({{0, 0}, {4, 0}, {4, 4}, {0, 4}}); }

inline GuardSiteSet single_site(const SimplePolygon& poly, const Point& p, std::string name = "P") {
  return GuardSiteSet(poly, {{std::move(name), p}});
}

/// Vertex index of the corner named by its 1-based input position.
inline std::size_t corner(const SimplePolygon& poly, std::size_t label) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly.source_index(i) + 1 == label) return i;
  }
  throw std::out_of_range("no corner " + std::to_string(label));
}

inline SiteMask mask_of(const GuardSiteSet& sites, const std::vector<std::string>& names) {
  SiteMask m = 0;
  for (const auto& n : names) m |= SiteMask{1} << sites.find(n).value();
  return m;
}

inline std::vector<std::string> names_of(const GuardSiteSet& sites, SiteMask mask) {
  std::vector<std::string> out;
  for (auto i : mask_to_indices(mask)) out.push_back(sites[i].name);
  std::sort(out.begin(), out.end());
  return out;
}

/// Uniform point of the closed polygon on a lattice of pitch bbox/den.
inline Point random_point_inside(gen::Rng& rng, const SimplePolygon& poly, long den = 97) {
  auto [lo, hi] = poly.bounds();
  std::uniform_int_distribution<long> d(0, den);
  for (;;) {
    Point p(lo.x + ratio(d(rng), den) * (hi.x - lo.x), lo.y + ratio(d(rng), den) * (hi.y - lo.y));
    if (classify_point(poly, p).inside_closed()) return p;
  }
}

/// Random gallery for oracle comparisons: alternates untangled random
/// polygons and pinwheels; pinwheel site sets include each tip with
/// probability 7/10.
struct Instance {
  std::vector<Point> outline;
  std::vector<Site> sites;
};

inline Instance random_instance(gen::Rng& rng, std::size_t index, std::size_t max_n, std::size_t max_m) {
  std::uniform_int_distribution<std::size_t> m_dist(1, max_m);
  Instance inst;
  std::size_t m = m_dist(rng);
  if (index % 2 == 0) {
    inst.outline = gen::simple_polygon(rng, std::uniform_int_distribution<std::size_t>(4, max_n)(rng));
    inst.sites = gen::random_sites(rng, SimplePolygon::validate(inst.outline), m);
    return inst;
  }
  inst.outline = gen::pinwheel_polygon(rng, std::uniform_int_distribution<std::size_t>(3, max_n / 2)(rng));
  auto poly = SimplePolygon::validate(inst.outline);
  std::bernoulli_distribution take(0.7);
  for (std::size_t i = 0; i < inst.outline.size() && inst.sites.size() < m; i += 2) {
    if (take(rng)) inst.sites.push_back({"t" + std::to_string(i / 2 + 1), inst.outline[i]});
  }
  for (auto& s : gen::random_sites(rng, poly, m)) {
    if (inst.sites.size() >= m) break;
    bool dup = std::any_of(inst.sites.begin(), inst.sites.end(), [&](const Site& t) { return t.at == s.at; });
    if (!dup) inst.sites.push_back({"r" + std::to_string(inst.sites.size() + 1), s.at});
  }
  return inst;
}

inline bool general_position(const SimplePolygon& poly, const GuardSiteSet& sites) {
  return check_general_position(poly, sites, trace_windows(poly, sites, feasible_pairs(poly, sites))).ok();
}

/// Regions seen by none of `guards`, grouped into connected components
/// through shared window stretches. Each component is returned as the list
/// of its region ids.
inline std::vector<std::vector<std::size_t>> hidden_region_components(const VisibilityDecomposition& d,
                                                                      SiteMask guards) {
  std::map<std::size_t, std::size_t> parent;
  std::vector<std::size_t> hidden;
  for (const auto& r : d.regions) {
    if ((r.visible & guards) == 0) {
      hidden.push_back(r.id);
      parent[r.id] = r.id;
    }
  }
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : d.adjacency) {
    if (parent.count(a.a) && parent.count(a.b)) parent[find(a.a)] = find(a.b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (auto id : hidden) groups[find(id)].push_back(id);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  return out;
}

/// A union of regions is convex iff its area equals that of its hull.
inline bool regions_form_convex_set(const VisibilityDecomposition& d, const std::vector<std::size_t>& ids) {
  std::vector<Point> pts;
  Rational area = 0;
  for (auto id : ids) {
    auto more = d.cells.face_points(id);
    pts.insert(pts.end(), more.begin(), more.end());
    area += d.regions[id].area;
  }
  auto hull = convex_hull(pts);
  return twice_signed_area(hull) == 2 * area;
}

/// Random galleries with one or two sites that together see every wall.
/// Sites are drawn from the corners and a random pool until a covering
/// choice turns up; galleries where none does within `tries` are skipped.
inline std::vector<Instance> small_covering_sets(gen::Rng& rng, std::size_t count, std::size_t tries = 60) {
  std::vector<Instance> out;
  std::uniform_int_distribution<int> family(0, 3);
  std::uniform_int_distribution<std::size_t> size(1, 2);
  while (out.size() < count) {
    std::vector<Point> outline;
    switch (family(rng)) {
      case 0: outline = gen::star_polygon(rng, std::uniform_int_distribution<std::size_t>(4, 10)(rng)); break;
      case 1: outline = gen::few_reflex_polygon(rng, std::uniform_int_distribution<std::size_t>(6, 10)(rng), 2); break;
      case 2: outline = gen::simple_polygon(rng, std::uniform_int_distribution<std::size_t>(4, 8)(rng)); break;
      default: outline = gen::spiral_polygon(rng, 2); break;
    }
    auto poly = SimplePolygon::validate(outline);
    auto pool = gen::random_sites(rng, poly, 12);
    for (std::size_t i = 0; i < poly.size(); ++i) pool.push_back({"c" + std::to_string(i + 1), poly.vertex(i)});
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t t = 0; t < tries; ++t) {
      std::vector<Site> chosen{pool[pick(rng)]};
      if (size(rng) == 2) {
        auto other = pool[pick(rng)];
        if (other.at == chosen[0].at) continue;
        chosen.push_back(other);
      }
      std::vector<Point> at;
      for (const auto& c : chosen) at.push_back(c.at);
      if (!covers_walls(poly, at)) continue;
      out.push_back({outline, chosen});
      break;
    }
  }
  return out;
}

/// Everything that should hold for a decomposition in general position.
/// Returns one message per violated property; empty means all hold.
inline std::vector<std::string> structural_violations(const SimplePolygon& poly, const GuardSiteSet& sites,
                                                      gen::Rng& rng) {
  std::vector<std::string> bad;
  auto d = build_decomposition(poly, sites);
  auto graph = dual_graph_and_sinks(d);

  Rational total = 0;
  for (const auto& r : d.regions) total += r.area;
  if (total != poly.area()) bad.push_back("region areas sum to " + to_string(total));

  // Kahn's algorithm: every node is removed iff the graph is acyclic.
  std::vector<std::size_t> indegree(graph.nodes, 0);
  std::vector<std::vector<std::size_t>> out(graph.nodes);
  for (const auto& [from, to] : graph.edges) {
    out[from].push_back(to);
    ++indegree[to];
  }
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < graph.nodes; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    auto v = ready.front();
    ready.pop_front();
    ++removed;
    for (auto w : out[v]) {
      if (--indegree[w] == 0) ready.push_back(w);
    }
  }
  if (removed != graph.nodes) bad.push_back("dual graph has a cycle");
  if (graph.edges.size() != d.adjacency.size()) bad.push_back("an adjacency was left unoriented");

  std::set<std::size_t> sinks(d.sinks.begin(), d.sinks.end());
  for (const auto& a : d.adjacency) {
    if (sinks.count(a.a) && sinks.count(a.b)) bad.push_back("adjacent sinks");
    int diff = std::popcount(d.regions[a.a].visible) - std::popcount(d.regions[a.b].visible);
    if (std::abs(diff) != 1) bad.push_back("|V| differs by " + std::to_string(std::abs(diff)) + " across a window");
  }
  for (const auto& [from, to] : graph.edges) {
    if ((d.regions[from].visible & d.regions[to].visible) != d.regions[to].visible) {
      bad.push_back("dual edge between incomparable regions");
    }
  }

  std::uniform_int_distribution<long> u(1, 63);
  for (const auto& r : d.regions) {
    if (classify_point(poly, r.representative).kind != PointClass::Kind::Interior) {
      bad.push_back("representative of region " + std::to_string(r.id) + " is not interior");
    }
    const auto& face = d.cells.faces()[r.id];
    for (int k = 0; k < 3; ++k) {
      const auto& trap =
          d.cells.trapezoids()[face.trapezoids[static_cast<std::size_t>(u(rng)) % face.trapezoids.size()]];
      Point q = trap.sample(ratio(u(rng), 64), ratio(u(rng), 64));
      SiteMask seen = 0;
      for (std::size_t s = 0; s < sites.size(); ++s) {
        if (oracle::naive_visible(poly, sites[s].at, q)) seen |= SiteMask{1} << s;
      }
      if (seen != r.visible) bad.push_back("V changes inside region " + std::to_string(r.id) + " at " + to_string(q));
    }
  }
  return bad;
}

}  // namespace wallin::test
