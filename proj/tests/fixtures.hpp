#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene::testing {

inline PlanarGraph cycle_graph(int n)
{
    std::vector<std::vector<Vertex>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + 1) % n, (i + n - 1) % n};
    return build_from_rotation(rot);
}

inline PlanarGraph k4()
{
    // Center 3 inside triangle 0-1-2, clockwise.
    return build_from_rotation({{1, 3, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}});
}

inline const FullereneGraph& c20()
{
    static const FullereneGraph g = dodecahedron();
    return g;
}

inline const FullereneGraph& c60()
{
    static const FullereneGraph g = leapfrog(c20());
    return g;
}

inline const FullereneGraph& c180()
{
    static const FullereneGraph g = leapfrog(c60());
    return g;
}

inline const FullereneGraph& c540()
{
    static const FullereneGraph g = leapfrog(c180());
    return g;
}

/// Rotation system of a straight-line planar drawing (clockwise order).
inline PlanarGraph from_drawing(const std::vector<std::pair<double, double>>& pos,
                                const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    std::vector<std::vector<Vertex>> rotation(pos.size());
    for (auto [u, v] : edges) {
        rotation[u].push_back(v);
        rotation[v].push_back(u);
    }
    for (Vertex u = 0; u < static_cast<Vertex>(pos.size()); ++u) {
        auto angle = [&](Vertex v) {
            return std::atan2(pos[v].second - pos[u].second, pos[v].first - pos[u].first);
        };
        std::sort(rotation[u].begin(), rotation[u].end(),
                  [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
    }
    return build_from_rotation(rotation);
}

/// D5h nanotube fullerene with `rings` zigzag rings between two pentagon
/// caps: 10 + 10 * rings vertices, `rings - 1` belts of five hexagons.
/// rings = 1 is the dodecahedron. Rotation comes from a straight-line
/// drawing on concentric circles.
inline FullereneGraph nanotube(int rings)
{
    const int n = 10 + 10 * rings;
    std::vector<std::pair<double, double>> pos(n);
    std::vector<std::pair<Vertex, Vertex>> edges;
    constexpr double deg = std::numbers::pi / 180.0;
    auto place = [&](Vertex v, double radius, double angle) {
        pos[v] = {radius * std::cos(angle * deg), radius * std::sin(angle * deg)};
    };
    auto up = [](int k, int i) { return 5 + 10 * (k - 1) + 2 * ((i % 5 + 5) % 5); };
    auto down = [](int k, int i) { return 6 + 10 * (k - 1) + 2 * ((i % 5 + 5) % 5); };
    const int inner = 5 + 10 * rings;
    for (int i = 0; i < 5; ++i) {
        place(i, 2.0 * rings + 4, 72.0 * i);
        place(inner + i, 1.0, 36.0 * rings + 72.0 * i);
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(inner + i, inner + (i + 1) % 5);
        edges.emplace_back(i, up(1, i));
        edges.emplace_back(down(rings, i), inner + i);
    }
    for (int k = 1; k <= rings; ++k) {
        const double radius = 2.0 * (rings - k) + 3;
        for (int i = 0; i < 5; ++i) {
            place(up(k, i), radius + 0.5, 36.0 * (k - 1) + 72.0 * i);
            place(down(k, i), radius, 36.0 * k + 72.0 * i);
            edges.emplace_back(up(k, i), down(k, i));
            edges.emplace_back(down(k, i), up(k, i + 1));
            if (k < rings) edges.emplace_back(down(k, i), up(k + 1, i));
        }
    }
    return validate_fullerene(from_drawing(pos, edges));
}

/// Floyd-Warshall; independent of the BFS under test.
inline std::vector<std::vector<int>> all_pairs_distances(const PlanarGraph& g)
{
    const int n = g.vertex_count();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        d[u][v] = d[v][u] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

}  // namespace fullerene::testing
