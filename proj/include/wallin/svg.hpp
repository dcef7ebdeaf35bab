// Deterministic SVG drawings: walls solid, windows dashed, sinks shaded,
// witness sites starred, the uncovered point circled. The y axis points up.

#pragma once

#include "wallin/normality.hpp"

#include <string>
#include <vector>

namespace wallin::svg {

std::string gallery(const SimplePolygon& poly, const std::vector<Site>& marked);

/// Views of the given sites; chords of each view are dashed.
std::string views(const SimplePolygon& poly, const std::vector<Site>& sites);

/// Regions labelled H_{...} by the sites they are hidden from.
std::string decomposition(const SimplePolygon& poly, const VisibilityDecomposition& d);

/// Like decomposition(), with only the sinks labelled.
std::string sinks(const SimplePolygon& poly, const VisibilityDecomposition& d);

/// Requires a NOT NORMAL report.
std::string witness(const SimplePolygon& poly, const GuardSiteSet& sites, const NormalityReport& report);

}  // namespace wallin::svg
