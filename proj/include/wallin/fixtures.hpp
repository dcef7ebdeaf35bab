// Built-in galleries and site-set helpers.

#pragma once

#include "wallin/decomposition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wallin {

/// A gallery as given by the user: outline in input order plus named points.
struct Gallery {
  std::string name;
  std::vector<Point> outline;
  std::vector<Site> marked;

  friend bool operator==(const Gallery&, const Gallery&) = default;
};

/// Sites at every corner, named by 1-based position in the input outline.
std::vector<Site> corner_sites(const SimplePolygon& poly);

enum class SiteChoice { Corners, Marked, All };

/// All = corners plus the marked points that are not corners. A marked name
/// that clashes with a corner label is prefixed with "m".
GuardSiteSet choose_sites(const SimplePolygon& poly, const Gallery& g, SiteChoice choice);

/// Selects sites by name from corners and marked points.
GuardSiteSet sites_by_name(const SimplePolygon& poly, const Gallery& g, const std::vector<std::string>& names);

namespace fixtures {

Gallery square();
Gallery lshape();
Gallery gamma6();
Gallery two_pockets();
Gallery convex_cover_gallery();
Gallery gamma8();
Gallery gamma8_exact();
Gallery gamma9();
Gallery gamma9_exact();
/// Right-angled spiral with `turns` >= 1 reflex turns.
Gallery spiral(std::size_t turns);

std::vector<std::string> names();
std::optional<Gallery> by_name(const std::string& name);

}  // namespace fixtures

}  // namespace wallin
