#include "fullerene/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>

namespace fullerene {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::NonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::BadFaceSize: return "BadFaceSize";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::EmptySourceSet: return "EmptySourceSet";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::PatchDegenerate: return "PatchDegenerate";
    case ErrorCode::LoopCreated: return "LoopCreated";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::ListDeficit: return "ListDeficit";
    case ErrorCode::PigeonholeViolated: return "PigeonholeViolated";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotResonant: return "NotResonant";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NonPlanar: return "NonPlanar";
    case ErrorCode::BadVertexCount: return "BadVertexCount";
    case ErrorCode::TruncatedRecord: return "TruncatedRecord";
    case ErrorCode::NeighborOutOfRange: return "NeighborOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// PlanarGraph

PlanarGraph PlanarGraph::from_rotation(const std::vector<std::vector<Vertex>>& rotation,
                                       bool require_planar)
{
    const int n = static_cast<int>(rotation.size());
    for (int u = 0; u < n; ++u) {
        for (Vertex v : rotation[u]) {
            if (v < 0 || v >= n)
                throw Error(ErrorCode::NeighborOutOfRange,
                            "vertex " + std::to_string(u) + " lists " + std::to_string(v));
            if (v == u)
                throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        }
    }

    // positions[u][v] = indices of v in u's list, in list order
    std::vector<std::map<Vertex, std::vector<int>>> positions(n);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < static_cast<int>(rotation[u].size()); ++i)
            positions[u][rotation[u][i]].push_back(i);

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<HalfEdge>> half_rotation(n);
    for (int u = 0; u < n; ++u) half_rotation[u].assign(rotation[u].size(), -1);

    for (int u = 0; u < n; ++u) {
        for (const auto& [v, at_u] : positions[u]) {
            auto it = positions[v].find(u);
            if (it == positions[v].end() || it->second.size() != at_u.size())
                throw Error(ErrorCode::AsymmetricAdjacency,
                            std::to_string(u) + " lists " + std::to_string(v) +
                                " but the multiplicities differ");
            if (v < u) continue;
            const auto& at_v = it->second;
            const std::size_t m = at_u.size();
            for (std::size_t k = 0; k < m; ++k) {
                const Edge e = static_cast<Edge>(edges.size());
                edges.emplace_back(u, v);
                half_rotation[u][at_u[k]] = 2 * e;
                half_rotation[v][at_v[m - 1 - k]] = 2 * e + 1;
            }
        }
    }
    return from_half_edges(n, edges, half_rotation, require_planar);
}

PlanarGraph PlanarGraph::from_half_edges(int vertex_count,
                                         const std::vector<std::pair<Vertex, Vertex>>& edges,
                                         const std::vector<std::vector<HalfEdge>>& rotation,
                                         bool require_planar)
{
    PlanarGraph g;
    g.head_.resize(2 * edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [u, v] = edges[e];
        if (u == v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
        g.head_[2 * e] = v;
        g.head_[2 * e + 1] = u;
    }
    g.rotation_ = rotation;
    g.rotation_.resize(vertex_count);
    g.rotation_index_.assign(g.head_.size(), -1);
    for (Vertex v = 0; v < vertex_count; ++v) {
        for (int i = 0; i < g.degree(v); ++i) {
            const HalfEdge h = g.rotation_[v][i];
            if (h < 0 || h >= g.half_edge_count() || g.tail(h) != v || g.rotation_index_[h] != -1)
                throw Error(ErrorCode::Internal,
                            "malformed half-edge rotation at vertex " + std::to_string(v));
            g.rotation_index_[h] = i;
        }
    }
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h)
        if (g.rotation_index_[h] == -1)
            throw Error(ErrorCode::Internal, "half-edge " + std::to_string(h) + " not in any rotation");

    g.trace_faces();
    if (require_planar && !g.is_planar())
        throw Error(ErrorCode::NonPlanarEmbedding,
                    "V - E + F = " + std::to_string(g.euler_characteristic()) + " over " +
                        std::to_string(g.component_count()) + " component(s)");
    return g;
}

HalfEdge PlanarGraph::rotation_next(HalfEdge h) const
{
    const auto& rot = rotation_[tail(h)];
    return rot[(rotation_index_[h] + 1) % rot.size()];
}

HalfEdge PlanarGraph::rotation_prev(HalfEdge h) const
{
    const auto& rot = rotation_[tail(h)];
    return rot[(rotation_index_[h] + rot.size() - 1) % rot.size()];
}

void PlanarGraph::trace_faces()
{
    faces_.clear();
    face_of_.assign(head_.size(), -1);
    for (HalfEdge start = 0; start < half_edge_count(); ++start) {
        if (face_of_[start] != -1) continue;
        const Face f = face_count();
        std::vector<HalfEdge> cycle;
        HalfEdge h = start;
        do {
            face_of_[h] = f;
            cycle.push_back(h);
            h = next_in_face(h);
        } while (h != start);
        faces_.push_back(std::move(cycle));
    }
}

std::vector<Vertex> PlanarGraph::face_vertices(Face f) const
{
    std::vector<Vertex> out;
    out.reserve(faces_[f].size());
    for (HalfEdge h : faces_[f]) out.push_back(tail(h));
    return out;
}

std::vector<Vertex> PlanarGraph::neighbors(Vertex v) const
{
    std::vector<Vertex> out;
    out.reserve(rotation_[v].size());
    for (HalfEdge h : rotation_[v]) out.push_back(head(h));
    return out;
}

std::vector<std::vector<Vertex>> PlanarGraph::rotation_lists() const
{
    std::vector<std::vector<Vertex>> out(vertex_count());
    for (Vertex v = 0; v < vertex_count(); ++v) out[v] = neighbors(v);
    return out;
}

std::optional<Edge> PlanarGraph::find_edge(Vertex u, Vertex v) const
{
    for (HalfEdge h : rotation_[u])
        if (head(h) == v) return edge_of(h);
    return std::nullopt;
}

int PlanarGraph::component_count() const
{
    std::vector<char> seen(vertex_count(), 0);
    int components = 0;
    for (Vertex s = 0; s < vertex_count(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (HalfEdge h : rotation_[u]) {
                if (!seen[head(h)]) {
                    seen[head(h)] = 1;
                    stack.push_back(head(h));
                }
            }
        }
    }
    return components;
}

int PlanarGraph::euler_characteristic() const
{
    int isolated = 0;
    for (Vertex v = 0; v < vertex_count(); ++v)
        if (degree(v) == 0) ++isolated;
    return vertex_count() - edge_count() + face_count() + isolated;
}

bool PlanarGraph::is_simple() const
{
    for (Vertex v = 0; v < vertex_count(); ++v) {
        auto nb = neighbors(v);
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
        if (std::binary_search(nb.begin(), nb.end(), v)) return false;
    }
    return true;
}

void PlanarGraph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty() && static_cast<int>(labels.size()) != vertex_count())
        throw Error(ErrorCode::PreconditionViolated, "label count does not match vertex count");
    labels_ = std::move(labels);
}

bool PlanarGraph::half_edges_consistent() const
{
    for (HalfEdge h = 0; h < half_edge_count(); ++h) {
        if (twin(twin(h)) != h || head(twin(h)) != tail(h)) return false;
        if (face_of_[h] < 0 || face_of_[h] >= face_count()) return false;
    }
    std::size_t traced = 0;
    for (const auto& f : faces_) traced += f.size();
    return traced == head_.size();
}

// ---------------------------------------------------------------------------
// Fullerene validation and duality

PlanarGraph build_from_rotation(const std::vector<std::vector<Vertex>>& rotation)
{
    return PlanarGraph::from_rotation(rotation, true);
}

bool is_three_connected(const PlanarGraph& g)
{
    const int n = g.vertex_count();
    if (n < 4 || g.component_count() != 1) return false;
    std::vector<char> removed(n, 0);
    std::vector<char> seen(n, 0);
    std::vector<Vertex> stack;
    auto connected_without = [&](Vertex a, Vertex b) {
        std::fill(seen.begin(), seen.end(), 0);
        Vertex start = 0;
        while (start == a || start == b) ++start;
        stack.assign(1, start);
        seen[start] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (HalfEdge h : g.rotation(u)) {
                const Vertex w = g.head(h);
                if (w == a || w == b || seen[w]) continue;
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
        return reached == n - 2;
    };
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!connected_without(a, b)) return false;
    return true;
}

FullereneGraph validate_fullerene(PlanarGraph g)
{
    if (!g.is_planar())
        throw Error(ErrorCode::NonPlanarEmbedding, "embedding is not spherical");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3)
            throw Error(ErrorCode::NotCubic,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    if (!g.is_simple()) throw Error(ErrorCode::NotSimple, "parallel edges present");

    FullereneGraph out;
    for (Face f = 0; f < g.face_count(); ++f) {
        const int size = g.face_size(f);
        if (size == 5)
            out.pentagons_.push_back(f);
        else if (size == 6)
            out.hexagons_.push_back(f);
        else
            throw Error(ErrorCode::BadFaceSize,
                        "face " + std::to_string(f) + " has size " + std::to_string(size));
    }
    if (out.pentagons_.size() != 12)
        throw Error(ErrorCode::BadFaceSize,
                    std::to_string(out.pentagons_.size()) + " pentagons instead of 12");
    if (!is_three_connected(g)) throw Error(ErrorCode::NotThreeConnected, "found a 2-vertex cut");
    out.graph_ = std::move(g);
    return out;
}

PlanarGraph face_dual(const PlanarGraph& g)
{
    std::vector<std::pair<Vertex, Vertex>> edges(g.edge_count());
    for (Edge e = 0; e < g.edge_count(); ++e) edges[e] = {g.face_of(2 * e), g.face_of(2 * e + 1)};
    std::vector<std::vector<HalfEdge>> rotation(g.face_count());
    for (Face f = 0; f < g.face_count(); ++f) {
        const auto cycle = g.face(f);
        rotation[f].assign(cycle.begin(), cycle.end());
    }
    return PlanarGraph::from_half_edges(g.face_count(), edges, rotation, true);
}

DualTriangulation dual(const FullereneGraph& g)
{
    DualTriangulation d;
    d.graph_ = face_dual(g.graph());
    for (Vertex v = 0; v < d.graph_.vertex_count(); ++v)
        if (d.graph_.degree(v) == 5) d.degree5_.push_back(v);
    d.primal_face_map_.resize(d.graph_.vertex_count());
    for (Vertex v = 0; v < d.graph_.vertex_count(); ++v) d.primal_face_map_[v] = v;
    d.primal_edge_map_.resize(d.graph_.edge_count());
    for (Edge e = 0; e < d.graph_.edge_count(); ++e) d.primal_edge_map_[e] = e;
    return d;
}

bool dual_involution_holds(const FullereneGraph& g, const DualTriangulation& d)
{
    const PlanarGraph& primal = g.graph();
    const PlanarGraph& tri = d.graph();
    const PlanarGraph back = face_dual(tri);
    if (back.vertex_count() != primal.vertex_count() || back.edge_count() != primal.edge_count())
        return false;

    // Dual-face -> primal vertex through the stored edge bijection.
    std::map<std::vector<Edge>, Vertex> by_edge_set;
    for (Vertex v = 0; v < primal.vertex_count(); ++v) {
        std::vector<Edge> es;
        for (HalfEdge h : primal.rotation(v)) es.push_back(PlanarGraph::edge_of(h));
        std::sort(es.begin(), es.end());
        by_edge_set[es] = v;
    }
    std::vector<Vertex> to_primal(back.vertex_count(), -1);
    for (Vertex x = 0; x < back.vertex_count(); ++x) {
        std::vector<Edge> es;
        for (HalfEdge h : back.rotation(x)) es.push_back(d.primal_edge(PlanarGraph::edge_of(h)));
        std::sort(es.begin(), es.end());
        auto it = by_edge_set.find(es);
        if (it == by_edge_set.end()) return false;
        to_primal[x] = it->second;
    }
    for (Edge e = 0; e < back.edge_count(); ++e) {
        auto [a, b] = back.endpoints(e);
        auto [u, v] = primal.endpoints(d.primal_edge(e));
        const bool same = (to_primal[a] == u && to_primal[b] == v) ||
                          (to_primal[a] == v && to_primal[b] == u);
        if (!same) return false;
    }
    for (Vertex v = 0; v < tri.vertex_count(); ++v)
        if (d.primal_face(v) < 0 || d.primal_face(v) >= primal.face_count() ||
            tri.degree(v) != primal.face_size(d.primal_face(v)))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Distances

std::vector<int> bfs_distance(const PlanarGraph& g, std::span<const Vertex> sources)
{
    if (sources.empty()) throw Error(ErrorCode::EmptySourceSet, "bfs_distance needs a source");
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (dist[s] == 0) continue;
        dist[s] = 0;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        for (HalfEdge h : g.rotation(u)) {
            const Vertex w = g.head(h);
            if (dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

std::vector<Vertex> bfs_ball(const PlanarGraph& g, Vertex source, int radius)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> order{source};
    dist[source] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex u = order[i];
        if (dist[u] == radius) continue;
        for (HalfEdge h : g.rotation(u)) {
            const Vertex w = g.head(h);
            if (dist[w] != -1) continue;
            dist[w] = dist[u] + 1;
            order.push_back(w);
        }
    }
    return order;
}

// ---------------------------------------------------------------------------
// Fixtures

FullereneGraph dodecahedron()
{
    // Straight-line drawing on three rings: outer pentagon, middle decagon,
    // inner pentagon. Sorting neighbors by decreasing angle gives a
    // clockwise rotation system.
    constexpr double pi = std::numbers::pi;
    std::vector<std::pair<double, double>> pos(20);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        const double outer = 2 * pi * i / 5;
        const double shifted = outer + pi / 5;
        pos[i] = {3 * std::cos(outer), 3 * std::sin(outer)};
        pos[5 + 2 * i] = {2 * std::cos(outer), 2 * std::sin(outer)};
        pos[6 + 2 * i] = {2 * std::cos(shifted), 2 * std::sin(shifted)};
        pos[15 + i] = {std::cos(shifted), std::sin(shifted)};
    }
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, 5 + 2 * i);
        edges.emplace_back(6 + 2 * i, 15 + i);
        edges.emplace_back(15 + i, 15 + (i + 1) % 5);
    }
    for (int j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);

    std::vector<std::vector<Vertex>> rotation(20);
    for (auto [u, v] : edges) {
        rotation[u].push_back(v);
        rotation[v].push_back(u);
    }
    for (Vertex u = 0; u < 20; ++u) {
        auto angle = [&](Vertex v) {
            return std::atan2(pos[v].second - pos[u].second, pos[v].first - pos[u].first);
        };
        std::sort(rotation[u].begin(), rotation[u].end(),
                  [&](Vertex a, Vertex b) { return angle(a) > angle(b); });
    }
    return validate_fullerene(PlanarGraph::from_rotation(rotation));
}

FullereneGraph leapfrog(const FullereneGraph& g)
{
    const PlanarGraph tri = face_dual(g.graph());
    // One new vertex per dual half-edge; around dual vertex u the new
    // vertices form a face, and each dual triangle becomes a hexagon.
    std::vector<std::vector<Vertex>> rotation(tri.half_edge_count());
    for (HalfEdge h = 0; h < tri.half_edge_count(); ++h)
        rotation[h] = {PlanarGraph::twin(h), tri.rotation_prev(h), tri.rotation_next(h)};
    return validate_fullerene(PlanarGraph::from_rotation(rotation));
}

}  // namespace fullerene
