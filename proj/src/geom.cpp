#include "wallin/geom.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace wallin {

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty number");

  auto digits_only = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
  };
  auto strip_plus = [](std::string s) {
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    return s;
  };

  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!digits_only(num, true) || !digits_only(den, false)) {
      throw std::invalid_argument("malformed fraction '" + raw + "'");
    }
    mpz_class n(strip_plus(num)), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + raw + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }

  if (auto dot_pos = text.find('.'); dot_pos != std::string::npos) {
    std::string whole = text.substr(0, dot_pos);
    std::string frac = text.substr(dot_pos + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || !digits_only(whole, false) || !digits_only(frac, false)) {
      throw std::invalid_argument("malformed decimal '" + raw + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Rational r(mpz_class(whole) * scale + mpz_class(frac), scale);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  if (!digits_only(text, true)) throw std::invalid_argument("malformed number '" + raw + "'");
  return Rational(mpz_class(strip_plus(text)));
}

Rational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << '(' << p.x.get_str() << ',' << p.y.get_str() << ')';
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

int orient(const Point& p, const Point& q, const Point& r) {
  Rational c = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(c);
}

bool on_segment(const Point& p, const Point& q, const Point& r) {
  if (orient(p, q, r) != 0) return false;
  return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
         r.y <= std::max(p.y, q.y);
}

Rational param_along(const Point& a, const Point& b, const Point& r) {
  Point d = b - a;
  return dot(r - a, d) / dot(d, d);
}

Segment::Segment(Point a, Point b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == b_) throw std::invalid_argument("degenerate segment at " + to_string(a_));
}

SegmentIntersection intersect_segments(const Segment& s1, const Segment& s2) {
  const Point& p = s1.a();
  const Point& q = s1.b();
  const Point& r = s2.a();
  const Point& s = s2.b();

  int o1 = orient(p, q, r);
  int o2 = orient(p, q, s);
  int o3 = orient(r, s, p);
  int o4 = orient(r, s, q);

  SegmentIntersection out;

  if (o1 == 0 && o2 == 0) {
    // Collinear: project the second segment onto the first.
    Rational tr = param_along(p, q, r);
    Rational ts = param_along(p, q, s);
    Rational lo = std::max(Rational(0), std::min(tr, ts));
    Rational hi = std::min(Rational(1), std::max(tr, ts));
    if (lo > hi) return out;
    if (lo == hi) {
      out.kind = SegmentIntersection::Kind::Point;
      out.point = lerp(p, q, lo);
      return out;
    }
    out.kind = SegmentIntersection::Kind::Overlap;
    out.overlap.emplace(lerp(p, q, lo), lerp(p, q, hi));
    return out;
  }

  if (o1 * o2 > 0 || o3 * o4 > 0) return out;

  out.kind = SegmentIntersection::Kind::Point;
  if (o1 == 0) {
    out.point = r;
  } else if (o2 == 0) {
    out.point = s;
  } else if (o3 == 0) {
    out.point = p;
  } else if (o4 == 0) {
    out.point = q;
  } else {
    Point d1 = q - p;
    Point d2 = s - r;
    Rational t = cross(r - p, d2) / cross(d1, d2);
    out.point = lerp(p, q, t);
  }
  return out;
}

Rational twice_signed_area(const std::vector<Point>& ring) {
  Rational acc = 0;
  const std::size_t n = ring.size();
  for (std::size_t i = 0; i < n; ++i) acc += cross(ring[i], ring[(i + 1) % n]);
  return acc;
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace wallin
