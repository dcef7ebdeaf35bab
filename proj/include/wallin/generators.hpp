// Seeded random galleries and site sets with integer coordinates.

#pragma once

#include "wallin/decomposition.hpp"

#include <random>
#include <span>
#include <vector>

namespace wallin::gen {

using Rng = std::mt19937_64;

/// Star-shaped around the origin: vertices at distinct angles, consecutive
/// angular gaps below a half turn. n >= 3.
std::vector<Point> star_polygon(Rng& rng, std::size_t n, long radius = 1000);

/// Convex polygon on a circle with `reflex` (<= 2) vertices pushed inward
/// past the chord of their neighbours. n >= 4 for one push, n >= 5 for two.
std::vector<Point> few_reflex_polygon(Rng& rng, std::size_t n, std::size_t reflex, long radius = 1000);

/// Random points joined in random order, then untangled by 2-opt moves.
/// No three vertices are collinear.
std::vector<Point> simple_polygon(Rng& rng, std::size_t n, long extent = 1000);

/// Pinwheel with k arms: tips alternate with reflex corners turned slightly
/// back, so the sight lines of the tips through the reflex corners enclose a
/// pocket near the centre. n = 2k, k >= 3.
std::vector<Point> pinwheel_polygon(Rng& rng, std::size_t arms, long radius = 1000);

/// Right-angled spiral with a random number of turns in [1, max_turns].
std::vector<Point> spiral_polygon(Rng& rng, std::size_t max_turns);

/// Mix of corners, points on walls and interior points, named s1, s2, ...
std::vector<Site> random_sites(Rng& rng, const SimplePolygon& poly, std::size_t m);

bool no_three_collinear(std::span<const Point> pts);

}  // namespace wallin::gen
