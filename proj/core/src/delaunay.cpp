#include "gibbsnet/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace gibbsnet {

namespace {

// Error-filtered predicates: evaluate in double, and when the result is
// smaller than a rounding bound on the accumulated magnitudes, re-evaluate in
// long double. Ties that survive the widened pass are treated as zero.

double orient2d_filtered(const Vec2& a, const Vec2& b, const Vec2& c) {
    const double acx = a.x - c.x, acy = a.y - c.y;
    const double bcx = b.x - c.x, bcy = b.y - c.y;
    const double det = acx * bcy - acy * bcx;
    const double mag = std::abs(acx * bcy) + std::abs(acy * bcx);
    if (std::abs(det) > 4.0e-16 * mag) return det;
    const long double lacx = static_cast<long double>(a.x) - c.x;
    const long double lacy = static_cast<long double>(a.y) - c.y;
    const long double lbcx = static_cast<long double>(b.x) - c.x;
    const long double lbcy = static_cast<long double>(b.y) - c.y;
    const long double ldet = lacx * lbcy - lacy * lbcx;
    const long double lmag = std::abs(lacx * lbcy) + std::abs(lacy * lbcx);
    if (std::abs(ldet) <= 4.0e-19L * lmag) return 0.0;
    return static_cast<double>(ldet);
}

double incircle_filtered(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
    const double adx = a.x - p.x, ady = a.y - p.y;
    const double bdx = b.x - p.x, bdy = b.y - p.y;
    const double cdx = c.x - p.x, cdy = c.y - p.y;
    const double ad = adx * adx + ady * ady;
    const double bd = bdx * bdx + bdy * bdy;
    const double cd = cdx * cdx + cdy * cdy;
    const double det = adx * (bdy * cd - cdy * bd) - ady * (bdx * cd - cdx * bd) +
                       ad * (bdx * cdy - cdx * bdy);
    const double mag = std::abs(adx) * (std::abs(bdy * cd) + std::abs(cdy * bd)) +
                       std::abs(ady) * (std::abs(bdx * cd) + std::abs(cdx * bd)) +
                       ad * (std::abs(bdx * cdy) + std::abs(cdx * bdy));
    if (std::abs(det) > 1.0e-15 * mag) return det;

    const long double ladx = static_cast<long double>(a.x) - p.x;
    const long double lady = static_cast<long double>(a.y) - p.y;
    const long double lbdx = static_cast<long double>(b.x) - p.x;
    const long double lbdy = static_cast<long double>(b.y) - p.y;
    const long double lcdx = static_cast<long double>(c.x) - p.x;
    const long double lcdy = static_cast<long double>(c.y) - p.y;
    const long double lad = ladx * ladx + lady * lady;
    const long double lbd = lbdx * lbdx + lbdy * lbdy;
    const long double lcd = lcdx * lcdx + lcdy * lcdy;
    const long double ldet = ladx * (lbdy * lcd - lcdy * lbd) -
                             lady * (lbdx * lcd - lcdx * lbd) +
                             lad * (lbdx * lcdy - lcdx * lbdy);
    const long double lmag = std::abs(ladx) * (std::abs(lbdy * lcd) + std::abs(lcdy * lbd)) +
                             std::abs(lady) * (std::abs(lbdx * lcd) + std::abs(lcdx * lbd)) +
                             lad * (std::abs(lbdx * lcdy) + std::abs(lcdx * lbdy));
    if (std::abs(ldet) <= 2.0e-18L * lmag) return 0.0;
    return static_cast<double>(ldet);
}

struct Tri {
    int a, b, c;   // ccw
    bool alive = true;
};

}  // namespace

double orient2d(const Vec2& a, const Vec2& b, const Vec2& c) {
    return orient2d_filtered(a, b, c);
}

double incircle(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& p) {
    return incircle_filtered(a, b, c, p);
}

std::size_t Triangulation::edge_count() const { return edges().size(); }

std::vector<std::pair<int, int>> Triangulation::edges() const {
    std::set<std::pair<int, int>> set;
    for (const auto& t : triangles) {
        const auto ins = [&](int u, int v) {
            set.insert({std::min(u, v), std::max(u, v)});
        };
        ins(t[0], t[1]);
        ins(t[1], t[2]);
        ins(t[2], t[0]);
    }
    return {set.begin(), set.end()};
}

Triangulation delaunay(std::span<const Vec2> points) {
    const int n = static_cast<int>(points.size());
    Triangulation out;
    out.neighbors.resize(points.size());

    {
        std::vector<int> order(points.size());
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return points[i].x != points[j].x ? points[i].x < points[j].x
                                              : points[i].y < points[j].y;
        });
        for (int i = 0; i + 1 < n; ++i)
            if (points[order[i]].x == points[order[i + 1]].x &&
                points[order[i]].y == points[order[i + 1]].y)
                throw std::invalid_argument("duplicate point in Delaunay input");
    }
    if (n < 3) return out;

    double lo_x = points[0].x, hi_x = points[0].x;
    double lo_y = points[0].y, hi_y = points[0].y;
    for (const Vec2& p : points) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double cx = 0.5 * (lo_x + hi_x);
    const double cy = 0.5 * (lo_y + hi_y);
    // Far enough that the bulge of circumcircles through super vertices stays
    // well below the in-circle tolerance near the hull.
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
    const double r = span * 1.0e8;

    std::vector<Vec2> verts(points.begin(), points.end());
    verts.push_back({cx - 1.03 * r, cy - 0.57 * r});
    verts.push_back({cx + 0.99 * r, cy - 0.61 * r});
    verts.push_back({cx + 0.02 * r, cy + 1.07 * r});
    const int s0 = n, s1 = n + 1, s2 = n + 2;

    std::vector<Tri> tris;
    tris.push_back({s0, s1, s2});

    std::vector<int> bad;
    std::map<std::pair<int, int>, int> boundary;  // directed edge -> count of reverse
    std::size_t dead = 0;
    for (int p = 0; p < n; ++p) {
        if (dead * 2 > tris.size()) {
            std::erase_if(tris, [](const Tri& t) { return !t.alive; });
            dead = 0;
        }

        bad.clear();
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            if (!tris[t].alive) continue;
            if (incircle_filtered(verts[tris[t].a], verts[tris[t].b], verts[tris[t].c],
                                  verts[p]) > 0.0)
                bad.push_back(t);
        }
        if (bad.empty()) {
            // The point sits on a circle boundary that the filter resolved to
            // a tie; fall back to the triangles containing it.
            for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
                if (!tris[t].alive) continue;
                const Vec2& a = verts[tris[t].a];
                const Vec2& b = verts[tris[t].b];
                const Vec2& c = verts[tris[t].c];
                if (orient2d_filtered(a, b, verts[p]) >= 0.0 &&
                    orient2d_filtered(b, c, verts[p]) >= 0.0 &&
                    orient2d_filtered(c, a, verts[p]) >= 0.0)
                    bad.push_back(t);
            }
            if (bad.empty()) throw std::runtime_error("Delaunay point location failed");
        }

        // Directed edges of the cavity that appear exactly once bound it.
        boundary.clear();
        auto touch = [&](int u, int v) {
            const auto rev = boundary.find({v, u});
            if (rev != boundary.end())
                boundary.erase(rev);
            else
                boundary[{u, v}] += 1;
        };
        for (int t : bad) {
            touch(tris[t].a, tris[t].b);
            touch(tris[t].b, tris[t].c);
            touch(tris[t].c, tris[t].a);
            tris[t].alive = false;
            ++dead;
        }
        for (const auto& [edge, count] : boundary) {
            (void)count;
            tris.push_back({edge.first, edge.second, p});
        }
    }

    std::set<std::pair<int, int>> edge_set;
    for (const Tri& t : tris) {
        if (!t.alive) continue;
        if (t.a >= n || t.b >= n || t.c >= n) continue;
        out.triangles.push_back({t.a, t.b, t.c});
        const auto ins = [&](int u, int v) {
            edge_set.insert({std::min(u, v), std::max(u, v)});
        };
        ins(t.a, t.b);
        ins(t.b, t.c);
        ins(t.c, t.a);
    }
    for (const auto& [u, v] : edge_set) {
        out.neighbors[u].push_back(v);
        out.neighbors[v].push_back(u);
    }
    for (auto& list : out.neighbors) std::sort(list.begin(), list.end());
    return out;
}

}  // namespace gibbsnet
