#include "wallin/gallery_file.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace wallin {

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (c == '\n') ++line_;
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                   text_[pos_] == '-' || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  Rational number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                   text_[pos_] == '+' || text_[pos_] == '/' || text_[pos_] == '.' ||
                                   text_[pos_] == ' ')) {
      if (text_[pos_] == ' ' && pos_ > start && text_[pos_ - 1] != '/' && next_nonspace() != '/') break;
      ++pos_;
    }
    try {
      return parse_rational(text_.substr(start, pos_ - start));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  Point point() {
    expect('(');
    Rational x = number();
    expect(',');
    Rational y = number();
    expect(')');
    return {x, y};
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, what); }

 private:
  char next_nonspace() const {
    std::size_t p = pos_;
    while (p < text_.size() && text_[p] == ' ') ++p;
    return p < text_.size() ? text_[p] : '\0';
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

}  // namespace

Gallery parse_gallery(const std::string& text, std::string name) {
  Gallery g;
  g.name = std::move(name);
  Reader in(text);
  bool have_polygon = false, have_sites = false;
  while (!in.at_end()) {
    std::string key = in.name();
    in.expect('=');
    if (key == "polygon") {
      if (have_polygon) in.fail("polygon given twice");
      have_polygon = true;
      in.expect('[');
      while (!in.peek(']')) {
        g.outline.push_back(in.point());
        if (!in.peek(']')) in.expect(',');
      }
      in.expect(']');
    } else if (key == "sites") {
      if (have_sites) in.fail("sites given twice");
      have_sites = true;
      std::set<std::string> seen;
      in.expect('{');
      while (!in.peek('}')) {
        std::string site = in.name();
        if (!seen.insert(site).second) in.fail("duplicate site '" + site + "'");
        in.expect(':');
        g.marked.push_back({site, in.point()});
        if (!in.peek('}')) in.expect(',');
      }
      in.expect('}');
    } else {
      in.fail("unknown key '" + key + "'");
    }
  }
  if (!have_polygon) throw ParseError(1, "missing 'polygon'");
  return g;
}

std::string format_gallery(const Gallery& g) {
  std::ostringstream os;
  os << "polygon = [";
  for (std::size_t i = 0; i < g.outline.size(); ++i) {
    os << (i ? ", " : "") << "(" << to_string(g.outline[i].x) << ", " << to_string(g.outline[i].y) << ")";
  }
  os << "]\n";
  if (!g.marked.empty()) {
    os << "sites = {";
    for (std::size_t i = 0; i < g.marked.size(); ++i) {
      const auto& s = g.marked[i];
      os << (i ? ", " : "") << s.name << ": (" << to_string(s.at.x) << ", " << to_string(s.at.y) << ")";
    }
    os << "}\n";
  }
  return os.str();
}

Gallery load_gallery(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string name = path;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  if (auto dot = name.find_last_of('.'); dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return parse_gallery(buf.str(), name);
}

Point area_centroid(const SimplePolygon& poly) {
  Rational cx = 0, cy = 0, twice_area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly.vertex(i);
    const Point& b = poly.vertex(i + 1);
    Rational c = cross(a, b);
    twice_area += c;
    cx += (a.x + b.x) * c;
    cy += (a.y + b.y) * c;
  }
  return {cx / (3 * twice_area), cy / (3 * twice_area)};
}

}  // namespace wallin
