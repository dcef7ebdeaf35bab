#include "wallin/svg.hpp"

#include "wallin/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

namespace wallin::svg {

namespace {

constexpr double kSize = 640;
constexpr double kMargin = 40;

class Canvas {
 public:
  explicit Canvas(const SimplePolygon& poly) {
    auto [lo, hi] = poly.bounds();
    lo_x_ = lo.x.get_d();
    hi_y_ = hi.y.get_d();
    double w = Rational(hi.x - lo.x).get_d();
    double h = Rational(hi.y - lo.y).get_d();
    scale_ = (kSize - 2 * kMargin) / std::max(w, h);
    width_ = w * scale_ + 2 * kMargin;
    height_ = h * scale_ + 2 * kMargin;
  }

  std::string xy(const Point& p) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", kMargin + (p.x.get_d() - lo_x_) * scale_,
                  kMargin + (hi_y_ - p.y.get_d()) * scale_);
    return buf;
  }

  std::string coord(const Point& p, bool want_x) const {
    std::string s = xy(p);
    auto comma = s.find(',');
    return want_x ? s.substr(0, comma) : s.substr(comma + 1);
  }

  void polygon(const std::vector<Point>& ring, const std::string& style) {
    body_ << "<polygon points=\"";
    for (std::size_t i = 0; i < ring.size(); ++i) body_ << (i ? " " : "") << xy(ring[i]);
    body_ << "\" " << style << "/>\n";
  }

  void line(const Point& a, const Point& b, const std::string& style) {
    body_ << "<line x1=\"" << coord(a, true) << "\" y1=\"" << coord(a, false) << "\" x2=\"" << coord(b, true)
          << "\" y2=\"" << coord(b, false) << "\" " << style << "/>\n";
  }

  void dot(const Point& p, double r, const std::string& style) {
    body_ << "<circle cx=\"" << coord(p, true) << "\" cy=\"" << coord(p, false) << "\" r=\"" << r << "\" " << style
          << "/>\n";
  }

  void star(const Point& p, double r) {
    double cx = kMargin + (p.x.get_d() - lo_x_) * scale_;
    double cy = kMargin + (hi_y_ - p.y.get_d()) * scale_;
    body_ << "<polygon points=\"";
    for (int k = 0; k < 10; ++k) {
      double a = -std::numbers::pi / 2 + k * std::numbers::pi / 5;
      double rr = k % 2 ? r * 0.45 : r;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", k ? " " : "", cx + rr * std::cos(a), cy + rr * std::sin(a));
      body_ << buf;
    }
    body_ << "\" fill=\"#d62728\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
  }

  void text(const Point& p, const std::string& s, double dx = 5, double dy = -5, double size = 12) {
    std::string escaped;
    for (char c : s) {
      if (c == '<') escaped += "&lt;";
      else if (c == '>') escaped += "&gt;";
      else if (c == '&') escaped += "&amp;";
      else escaped += c;
    }
    body_ << "<text x=\"" << coord(p, true) << "\" y=\"" << coord(p, false) << "\" dx=\"" << dx << "\" dy=\"" << dy
          << "\" font-family=\"sans-serif\" font-size=\"" << size << "\">" << escaped << "</text>\n";
  }

  std::string finish() const {
    char head[256];
    std::snprintf(head, sizeof head,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.0f "
                  "%.0f\">\n",
                  width_, height_, width_, height_);
    return std::string(head) + "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n" + body_.str() + "</svg>\n";
  }

 private:
  double lo_x_ = 0, hi_y_ = 0, scale_ = 1, width_ = 0, height_ = 0;
  std::ostringstream body_;
};

const char* kWall = "fill=\"none\" stroke=\"black\" stroke-width=\"2\"";
const char* kWindow = "stroke=\"#1f77b4\" stroke-width=\"1\" stroke-dasharray=\"6,4\"";

void walls(Canvas& c, const SimplePolygon& poly) {
  c.polygon({poly.vertices().begin(), poly.vertices().end()}, kWall);
}

void corner_labels(Canvas& c, const SimplePolygon& poly) {
  for (const auto& s : corner_sites(poly)) c.text(s.at, s.name, 4, -4, 10);
}

void site_marks(Canvas& c, const std::vector<Site>& sites) {
  for (const auto& s : sites) {
    c.dot(s.at, 3, "fill=\"black\"");
    c.text(s.at, s.name);
  }
}

std::string hidden_label(const GuardSiteSet& sites, SiteMask visible) {
  std::string out = "H_{";
  bool first = true;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (visible & (SiteMask{1} << i)) continue;
    out += (first ? "" : ",") + sites[i].name;
    first = false;
  }
  return out + "}";
}

std::string regions(const SimplePolygon& poly, const VisibilityDecomposition& d, bool label_all) {
  Canvas c(poly);
  std::set<std::size_t> sink_set(d.sinks.begin(), d.sinks.end());
  for (const auto& t : d.cells.trapezoids()) {
    if (sink_set.count(t.face)) c.polygon(t.corners(), "fill=\"#c7c7c7\" stroke=\"none\"");
  }
  for (const auto& w : d.windows) c.line(w.base, w.tip, kWindow);
  walls(c, poly);
  for (const auto& r : d.regions) {
    if (label_all || sink_set.count(r.id)) c.text(r.representative, hidden_label(d.sites, r.visible), -12, 4, 9);
  }
  site_marks(c, d.sites.sites());
  return c.finish();
}

}  // namespace

std::string gallery(const SimplePolygon& poly, const std::vector<Site>& marked) {
  Canvas c(poly);
  walls(c, poly);
  corner_labels(c, poly);
  site_marks(c, marked);
  return c.finish();
}

std::string views(const SimplePolygon& poly, const std::vector<Site>& sites) {
  Canvas c(poly);
  std::vector<View> vs;
  for (const auto& s : sites) vs.push_back(visibility_polygon(poly, s.at));
  for (const auto& v : vs) {
    c.polygon({v.polygon.vertices().begin(), v.polygon.vertices().end()},
              "fill=\"#ffdd57\" fill-opacity=\"0.35\" stroke=\"none\"");
  }
  for (const auto& v : vs) {
    for (std::size_t i = 0; i < v.polygon.size(); ++i) {
      const Point& a = v.polygon.vertex(i);
      const Point& b = v.polygon.vertex(i + 1);
      if (classify_point(poly, midpoint(a, b)).kind != PointClass::Kind::Boundary) c.line(a, b, kWindow);
    }
  }
  walls(c, poly);
  site_marks(c, sites);
  return c.finish();
}

std::string decomposition(const SimplePolygon& poly, const VisibilityDecomposition& d) {
  return regions(poly, d, true);
}

std::string sinks(const SimplePolygon& poly, const VisibilityDecomposition& d) { return regions(poly, d, false); }

std::string witness(const SimplePolygon& poly, const GuardSiteSet& sites, const NormalityReport& report) {
  if (!report.witness) throw std::invalid_argument("witness rendering needs a NOT NORMAL verdict");
  const auto& w = *report.witness;
  Canvas c(poly);
  std::vector<Site> chosen;
  for (auto i : mask_to_indices(w.sites)) chosen.push_back(sites[i]);
  for (const auto& s : chosen) {
    auto v = visibility_polygon(poly, s.at);
    c.polygon({v.polygon.vertices().begin(), v.polygon.vertices().end()},
              "fill=\"#2ca02c\" fill-opacity=\"0.2\" stroke=\"none\"");
  }
  walls(c, poly);
  for (const auto& s : chosen) {
    c.star(s.at, 9);
    c.text(s.at, s.name, 8, -8);
  }
  c.dot(w.uncovered_point, 5, "fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"");
  c.text(w.uncovered_point, "uncovered", 8, 4, 10);
  return c.finish();
}

}  // namespace wallin::svg
