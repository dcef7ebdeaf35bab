#include "wallin/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>

namespace wallin::oracle {

namespace {

Rational side(const Point& a, const Point& b, const Point& p) {
  return (b.x - a.x) * (p.y - a.y) - (p.x - a.x) * (b.y - a.y);
}

bool on_wall(const Point& a, const Point& b, const Point& p) {
  if (side(a, b, p) != 0) return false;
  return (p.x - a.x) * (p.x - b.x) <= 0 && (p.y - a.y) * (p.y - b.y) <= 0;
}

// Quick reject: pq crosses some wall at a point interior to both.
bool crosses_a_wall(const SimplePolygon& poly, const Point& p, const Point& q) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    int s1 = sgn(side(p, q, a));
    int s2 = sgn(side(p, q, b));
    if (s1 * s2 >= 0) continue;
    int s3 = sgn(side(a, b, p));
    int s4 = sgn(side(a, b, q));
    if (s3 * s4 < 0) return true;
  }
  return false;
}

}  // namespace

bool inside_closed(const SimplePolygon& poly, const Point& p) {
  int winding = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    if (on_wall(a, b, p)) return true;
    if (a.y <= p.y) {
      if (b.y > p.y && side(a, b, p) > 0) ++winding;
    } else if (b.y <= p.y && side(a, b, p) < 0) {
      --winding;
    }
  }
  return winding != 0;
}

bool naive_visible(const SimplePolygon& poly, const Point& p, const Point& q) {
  if (p == q) return inside_closed(poly, p);
  if (crosses_a_wall(poly, p, q)) return false;

  const Point pq = q - p;
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    const Point ab = b - a;
    Rational denom = pq.x * ab.y - pq.y * ab.x;
    if (denom != 0) {
      Rational t = ((a.x - p.x) * ab.y - (a.y - p.y) * ab.x) / denom;
      if (t > 0 && t < 1) cuts.push_back(std::move(t));
    } else if (side(a, b, p) == 0) {
      Rational len2 = pq.x * pq.x + pq.y * pq.y;
      for (const Point* e : {&a, &b}) {
        Rational t = ((e->x - p.x) * pq.x + (e->y - p.y) * pq.y) / len2;
        if (t > 0 && t < 1) cuts.push_back(std::move(t));
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  if (!inside_closed(poly, p) || !inside_closed(poly, q)) return false;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational t = (cuts[k] + cuts[k + 1]) / 2;
    if (!inside_closed(poly, {p.x + t * pq.x, p.y + t * pq.y})) return false;
  }
  return true;
}

IntervalList naive_merge(IntervalList intervals, std::size_t circumference) {
  const Rational n(static_cast<unsigned long>(circumference));
  for (auto& iv : intervals) {
    if (iv.lo == n && iv.hi == n) iv.lo = iv.hi = 0;
  }
  for (bool merged = true; merged;) {
    merged = false;
    for (std::size_t i = 0; i < intervals.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < intervals.size(); ++j) {
        auto& a = intervals[i];
        const auto& b = intervals[j];
        if (b.lo > a.hi || a.lo > b.hi) continue;
        a.lo = std::min(a.lo, b.lo);
        a.hi = std::max(a.hi, b.hi);
        intervals.erase(intervals.begin() + static_cast<std::ptrdiff_t>(j));
        merged = true;
        break;
      }
    }
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const IntervalSet::Interval& a, const IntervalSet::Interval& b) { return a.lo < b.lo; });
  return intervals;
}

Rational naive_measure(const IntervalList& merged) {
  Rational total = 0;
  for (const auto& iv : merged) total += iv.hi - iv.lo;
  return total;
}

namespace {

struct EdgePiece {
  std::size_t edge;
  Rational t0, t1;
  bool open_visible;
};

// Visible pieces of every wall; consecutive cut parameters per edge.
template <typename Fn>
void walk_edge_pieces(const SimplePolygon& poly, const Point& p, Fn&& visit) {
  for (std::size_t e = 0; e < poly.size(); ++e) {
    const Point& a = poly.vertex(e);
    const Point& b = poly.vertex(e + 1);
    const Point ab = b - a;
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Point& v = poly.vertex(k);
      if (v == p) continue;
      const Point pv = v - p;
      Rational denom = pv.x * ab.y - pv.y * ab.x;
      if (denom == 0) continue;
      // a + t*ab on the line through p and v.
      Rational t = ((p.x - a.x) * pv.y - (p.y - a.y) * pv.x) / (ab.x * pv.y - ab.y * pv.x);
      if (t > 0 && t < 1) cuts.push_back(std::move(t));
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<bool> vis(cuts.size() - 1);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      Rational mid = (cuts[k] + cuts[k + 1]) / 2;
      vis[k] = naive_visible(poly, p, {a.x + mid * ab.x, a.y + mid * ab.y});
      visit(EdgePiece{e, cuts[k], cuts[k + 1], vis[k]}, a, ab);
    }
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      if ((k > 0 && vis[k - 1]) || (k < vis.size() && vis[k])) continue;
      if (naive_visible(poly, p, {a.x + cuts[k] * ab.x, a.y + cuts[k] * ab.y})) {
        visit(EdgePiece{e, cuts[k], cuts[k], true}, a, ab);
      }
    }
  }
}

}  // namespace

IntervalList naive_wall_view(const SimplePolygon& poly, const Point& p) {
  IntervalList raw;
  walk_edge_pieces(poly, p, [&](const EdgePiece& piece, const Point&, const Point&) {
    if (!piece.open_visible) return;
    Rational base(static_cast<unsigned long>(piece.edge));
    raw.push_back({base + piece.t0, base + piece.t1});
  });
  return naive_merge(std::move(raw), poly.size());
}

Rational naive_view_area(const SimplePolygon& poly, const Point& p) {
  Rational area = 0;
  walk_edge_pieces(poly, p, [&](const EdgePiece& piece, const Point& a, const Point& ab) {
    if (!piece.open_visible || piece.t0 == piece.t1) return;
    Point q0{a.x + piece.t0 * ab.x, a.y + piece.t0 * ab.y};
    Point q1{a.x + piece.t1 * ab.x, a.y + piece.t1 * ab.y};
    Rational twice = (q0.x - p.x) * (q1.y - p.y) - (q0.y - p.y) * (q1.x - p.x);
    area += abs(twice) / 2;
  });
  return area;
}

SampleGrid make_grid(const SimplePolygon& poly, std::size_t resolution) {
  if (resolution == 0) throw OracleError("grid resolution must be positive");
  auto [lo, hi] = poly.bounds();
  const Rational k(static_cast<unsigned long>(resolution));
  const Rational dx = (hi.x - lo.x) / k;
  const Rational dy = (hi.y - lo.y) / k;
  SampleGrid grid;
  grid.resolution = resolution;
  for (std::size_t j = 0; j < resolution; ++j) {
    for (std::size_t i = 0; i < resolution; ++i) {
      Point c{lo.x + (Rational(static_cast<unsigned long>(i)) + Rational(1, 2)) * dx,
              lo.y + (Rational(static_cast<unsigned long>(j)) + Rational(1, 2)) * dy};
      if (!inside_closed(poly, c)) continue;
      bool on_boundary = false;
      for (std::size_t e = 0; e < poly.size() && !on_boundary; ++e) {
        on_boundary = on_wall(poly.vertex(e), poly.vertex(e + 1), c);
      }
      if (!on_boundary) grid.cells.push_back({i, j, std::move(c)});
    }
  }
  return grid;
}

BruteForceResult brute_force_normal_wrt(const SimplePolygon& poly, const GuardSiteSet& sites, std::size_t cap,
                                        std::size_t grid_resolution) {
  const std::size_t m = sites.size();
  if (m > cap) {
    throw OracleError("brute force capped at " + std::to_string(cap) + " sites, got " + std::to_string(m));
  }
  BruteForceResult out;
  if (m == 0) return out;

  std::vector<IntervalList> views;
  for (const auto& s : sites.sites()) views.push_back(naive_wall_view(poly, s.at));

  std::vector<Point> probes;
  try {
    auto d = build_decomposition(poly, sites);
    for (const auto& r : d.regions) probes.push_back(r.representative);
  } catch (const DecompositionError&) {
    out.used_grid = true;
    for (auto& c : make_grid(poly, grid_resolution).cells) probes.push_back(std::move(c.at));
  }

  std::vector<SiteMask> seen_by(probes.size(), 0);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    for (std::size_t s = 0; s < m; ++s) {
      if (naive_visible(poly, sites[s].at, probes[k])) seen_by[k] |= SiteMask{1} << s;
    }
  }

  std::vector<SiteMask> subsets;
  for (SiteMask f = 1; f <= full_mask(m); ++f) subsets.push_back(f);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](SiteMask a, SiteMask b) { return std::popcount(a) < std::popcount(b); });

  const Rational circumference(static_cast<unsigned long>(poly.size()));
  int witness_size = -1;
  for (SiteMask f : subsets) {
    if (witness_size >= 0 && std::popcount(f) > witness_size) break;
    ++out.subsets_checked;
    std::optional<std::size_t> hidden;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      if ((seen_by[k] & f) == 0) {
        hidden = k;
        break;
      }
    }
    if (!hidden) continue;
    IntervalList parts;
    for (std::size_t s = 0; s < m; ++s) {
      if (f & (SiteMask{1} << s)) parts.insert(parts.end(), views[s].begin(), views[s].end());
    }
    if (naive_measure(naive_merge(std::move(parts), poly.size())) != circumference) continue;
    if (witness_size < 0) {
      witness_size = std::popcount(f);
      out.normal = false;
      out.witness = f;
      out.hidden_point = probes[*hidden];
    }
    out.minimal_witnesses.push_back(f);
  }
  return out;
}

std::vector<std::vector<Point>> hidden_components(const SimplePolygon& poly, std::span<const Point> guards,
                                                  const SampleGrid& grid) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hidden;
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    const auto& cell = grid.cells[c];
    bool seen = std::any_of(guards.begin(), guards.end(),
                            [&](const Point& g) { return naive_visible(poly, g, cell.at); });
    if (!seen) hidden.emplace(std::make_pair(cell.i, cell.j), c);
  }

  std::vector<std::vector<Point>> components;
  std::map<std::pair<std::size_t, std::size_t>, bool> done;
  for (const auto& [key, idx] : hidden) {
    if (done[key]) continue;
    components.emplace_back();
    std::queue<std::pair<std::size_t, std::size_t>> todo;
    todo.push(key);
    done[key] = true;
    while (!todo.empty()) {
      auto [i, j] = todo.front();
      todo.pop();
      components.back().push_back(grid.cells[hidden.at({i, j})].at);
      const std::pair<std::size_t, std::size_t> nbrs[] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
      for (const auto& nb : nbrs) {
        if (hidden.count(nb) && !done[nb]) {
          done[nb] = true;
          todo.push(nb);
        }
      }
    }
  }
  return components;
}

}  // namespace wallin::oracle
