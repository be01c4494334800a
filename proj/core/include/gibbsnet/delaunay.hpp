#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "gibbsnet/geometry.hpp"

namespace gibbsnet {

struct Triangulation {
    std::vector<std::array<int, 3>> triangles;  // ccw vertex indices into the input
    std::vector<std::vector<int>> neighbors;    // per input point, sorted ascending

    std::size_t edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // unordered, first < second
};

// Incremental Bowyer-Watson over a super-triangle. Exact duplicate points are
// rejected; fewer than three points (or a fully collinear set) yield no
// triangles and empty adjacency. Predicates run in double with an error
// filter and fall back to widened precision near ties.
Triangulation delaunay(std::span<const Vec2> points);

// Signed in-circle test used by the triangulation, exposed for verification:
// positive when p lies strictly inside the circumcircle of ccw (a, b, c).
double incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p);
double orient2d(const Vec2& a, const Vec2& b, const Vec2& c);

}  // namespace gibbsnet
