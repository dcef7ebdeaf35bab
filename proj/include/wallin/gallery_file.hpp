// Text format for galleries:
//
//   # comment
//   polygon = [(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]
//   sites = {A: (1/2, 1/2), B: (3.25, 1)}
//
// Coordinates are integers, decimals or p/q fractions. `sites` is optional.

#pragma once

#include "wallin/fixtures.hpp"

#include <stdexcept>
#include <string>

namespace wallin {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Syntax only; the outline is validated when it is turned into a polygon.
Gallery parse_gallery(const std::string& text, std::string name = "gallery");
/// Exact p/q coordinates; parse_gallery(format_gallery(g)) == g.
std::string format_gallery(const Gallery& g);

Gallery load_gallery(const std::string& path);

/// Centre of mass of the enclosed area.
Point area_centroid(const SimplePolygon& poly);

}  // namespace wallin
