#include "wallin/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wallin {

namespace {

struct RawSegment {
  Point a;
  Point b;
  bool wall;
  std::optional<std::size_t> label;
};

bool boxes_overlap(const RawSegment& s, const RawSegment& t) {
  auto [sx0, sx1] = std::minmax(s.a.x, s.b.x);
  auto [tx0, tx1] = std::minmax(t.a.x, t.b.x);
  if (sx1 < tx0 || tx1 < sx0) return false;
  auto [sy0, sy1] = std::minmax(s.a.y, s.b.y);
  auto [ty0, ty1] = std::minmax(t.a.y, t.b.y);
  return !(sy1 < ty0 || ty1 < sy0);
}

Rational y_at(const Arrangement::Piece& p, const Rational& x) {
  return p.lo.y + (p.hi.y - p.lo.y) * (x - p.lo.x) / (p.hi.x - p.lo.x);
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

struct VerticalPiece {
  Rational y0, y1;
  bool wall;
  const std::vector<std::size_t>* labels;
};

}  // namespace

Point Arrangement::Trapezoid::midline_center() const {
  Rational xm = (x0 + x1) / 2;
  Rational yl = (lower_y0 + lower_y1) / 2;
  Rational yu = (upper_y0 + upper_y1) / 2;
  return {xm, (yl + yu) / 2};
}

Point Arrangement::Trapezoid::sample(const Rational& alpha, const Rational& beta) const {
  Rational x = x0 + alpha * (x1 - x0);
  Rational yl = lower_y0 + alpha * (lower_y1 - lower_y0);
  Rational yu = upper_y0 + alpha * (upper_y1 - upper_y0);
  return {x, yl + beta * (yu - yl)};
}

std::vector<Point> Arrangement::Trapezoid::corners() const {
  std::vector<Point> pts{{x0, lower_y0}, {x1, lower_y1}, {x1, upper_y1}, {x0, upper_y0}};
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  return pts;
}

Arrangement Arrangement::build(const SimplePolygon& poly, std::span<const Chord> chords) {
  std::vector<RawSegment> segs;
  for (std::size_t i = 0; i < poly.size(); ++i) segs.push_back({poly.vertex(i), poly.vertex(i + 1), true, {}});
  for (const auto& c : chords) {
    if (c.a == c.b) continue;
    segs.push_back({c.a, c.b, false, c.label});
  }

  // Cut every segment at all points where another segment touches it.
  std::vector<std::vector<Point>> cuts(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) cuts[i] = {segs[i].a, segs[i].b};
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].wall && segs[j].wall) continue;  // simple polygon: walls meet only at corners
      if (!boxes_overlap(segs[i], segs[j])) continue;
      auto hit = intersect_segments(Segment(segs[i].a, segs[i].b), Segment(segs[j].a, segs[j].b));
      if (hit.kind == SegmentIntersection::Kind::Point) {
        cuts[i].push_back(hit.point);
        cuts[j].push_back(hit.point);
      } else if (hit.kind == SegmentIntersection::Kind::Overlap) {
        for (const Point* p : {&hit.overlap->a(), &hit.overlap->b()}) {
          cuts[i].push_back(*p);
          cuts[j].push_back(*p);
        }
      }
    }
  }

  Arrangement out;
  std::map<std::pair<Point, Point>, std::size_t> piece_index;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    auto& pts = cuts[i];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      auto key = std::make_pair(pts[k], pts[k + 1]);
      auto [it, fresh] = piece_index.try_emplace(key, out.pieces_.size());
      if (fresh) out.pieces_.push_back({pts[k], pts[k + 1], false, {}});
      Piece& piece = out.pieces_[it->second];
      piece.wall = piece.wall || segs[i].wall;
      if (segs[i].label) piece.labels.push_back(*segs[i].label);
    }
  }
  for (auto& piece : out.pieces_) {
    std::sort(piece.labels.begin(), piece.labels.end());
    piece.labels.erase(std::unique(piece.labels.begin(), piece.labels.end()), piece.labels.end());
  }

  // Slab boundaries.
  std::vector<Rational> xs;
  for (const auto& p : out.pieces_) {
    xs.push_back(p.lo.x);
    xs.push_back(p.hi.x);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  auto x_index = [&xs](const Rational& x) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), x) - xs.begin());
  };

  const std::size_t slabs = xs.empty() ? 0 : xs.size() - 1;
  std::vector<std::vector<std::size_t>> starting(slabs + 1);
  std::vector<std::size_t> end_slab(out.pieces_.size(), 0);
  std::vector<std::vector<VerticalPiece>> verticals(xs.size());
  for (std::size_t id = 0; id < out.pieces_.size(); ++id) {
    const Piece& p = out.pieces_[id];
    if (p.lo.x == p.hi.x) {
      verticals[x_index(p.lo.x)].push_back({p.lo.y, p.hi.y, p.wall, &p.labels});
      continue;
    }
    starting[x_index(p.lo.x)].push_back(id);
    end_slab[id] = x_index(p.hi.x);
  }
  for (auto& v : verticals) {
    std::sort(v.begin(), v.end(), [](const VerticalPiece& a, const VerticalPiece& b) { return a.y0 < b.y0; });
  }

  struct TrapLink {
    std::size_t a, b;
    const std::vector<std::size_t>* labels;
  };
  std::vector<TrapLink> links;
  std::vector<std::pair<std::size_t, std::size_t>> merges;

  std::vector<std::size_t> active;
  std::vector<std::size_t> prev_slab_traps;
  for (std::size_t s = 0; s < slabs; ++s) {
    active.erase(std::remove_if(active.begin(), active.end(), [&](std::size_t id) { return end_slab[id] <= s; }),
                 active.end());
    active.insert(active.end(), starting[s].begin(), starting[s].end());

    const Rational& x0 = xs[s];
    const Rational& x1 = xs[s + 1];
    const Rational xm = (x0 + x1) / 2;

    struct Entry {
      std::size_t id;
      Rational ym;
    };
    std::vector<Entry> order;
    order.reserve(active.size());
    for (std::size_t id : active) order.push_back({id, y_at(out.pieces_[id], xm)});
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) { return a.ym < b.ym; });

    std::vector<std::size_t> slab_traps;
    bool inside = false;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const Piece& lower = out.pieces_[order[k].id];
      if (lower.wall) inside = !inside;
      if (!inside) continue;
      const Piece& upper = out.pieces_[order[k + 1].id];
      Trapezoid t;
      t.x0 = x0;
      t.x1 = x1;
      t.lower = order[k].id;
      t.upper = order[k + 1].id;
      t.lower_y0 = y_at(lower, x0);
      t.lower_y1 = y_at(lower, x1);
      t.upper_y0 = y_at(upper, x0);
      t.upper_y1 = y_at(upper, x1);
      const std::size_t tid = out.traps_.size();
      if (!slab_traps.empty() && !lower.wall) {
        const std::size_t below = slab_traps.back();
        if (out.traps_[below].upper == t.lower) links.push_back({below, tid, &lower.labels});
      }
      slab_traps.push_back(tid);
      out.traps_.push_back(std::move(t));
    }

    // Glue to the previous slab across x = x0 wherever no vertical piece separates.
    const auto& vert = verticals[s];
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < prev_slab_traps.size() && j < slab_traps.size()) {
      const Trapezoid& L = out.traps_[prev_slab_traps[i]];
      const Trapezoid& R = out.traps_[slab_traps[j]];
      const Rational& lo = std::max(L.lower_y1, R.lower_y0);
      const Rational& hi = std::min(L.upper_y1, R.upper_y0);
      if (lo < hi) {
        Rational cursor = lo;
        bool open = false;
        for (const auto& v : vert) {
          if (v.y1 <= lo || v.y0 >= hi) continue;
          if (v.y0 > cursor) open = true;
          if (v.y1 > cursor) cursor = v.y1;
          if (!v.wall) links.push_back({prev_slab_traps[i], slab_traps[j], v.labels});
        }
        if (cursor < hi) open = true;
        if (open) merges.emplace_back(prev_slab_traps[i], slab_traps[j]);
      }
      if (L.upper_y1 < R.upper_y0) {
        ++i;
      } else {
        ++j;
      }
    }
    prev_slab_traps = std::move(slab_traps);
  }

  UnionFind uf(out.traps_.size());
  for (auto [a, b] : merges) uf.unite(a, b);

  std::vector<std::size_t> face_of_root(out.traps_.size(), SIZE_MAX);
  for (std::size_t t = 0; t < out.traps_.size(); ++t) {
    std::size_t root = uf.find(t);
    if (face_of_root[root] == SIZE_MAX) {
      face_of_root[root] = out.faces_.size();
      out.faces_.push_back({{}, out.traps_[t].midline_center(), Rational(0)});
    }
    Face& f = out.faces_[face_of_root[root]];
    out.traps_[t].face = face_of_root[root];
    f.trapezoids.push_back(t);
    f.area += out.traps_[t].area();
  }

  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> adj;
  for (const auto& link : links) {
    std::size_t fa = out.traps_[link.a].face;
    std::size_t fb = out.traps_[link.b].face;
    if (fa == fb) continue;
    auto& labels = adj[std::minmax(fa, fb)];
    labels.insert(labels.end(), link.labels->begin(), link.labels->end());
  }
  for (auto& [key, labels] : adj) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    out.adjacency_.push_back({key.first, key.second, std::move(labels)});
  }
  return out;
}

std::vector<Point> Arrangement::face_points(std::size_t face) const {
  std::vector<Point> pts;
  for (std::size_t t : faces_[face].trapezoids) {
    auto c = traps_[t].corners();
    pts.insert(pts.end(), c.begin(), c.end());
  }
  return pts;
}

bool Arrangement::face_is_convex(std::size_t face) const {
  auto hull = convex_hull(face_points(face));
  if (hull.size() < 3) return false;
  return twice_signed_area(hull) == 2 * faces_[face].area;
}

}  // namespace wallin
