#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fullerene/error.hpp"

namespace fullerene {

using Vertex = int;
using Edge = int;
using HalfEdge = int;
using Face = int;

/// Rotation system (combinatorial map) of an embedded graph.
///
/// Edge `e` owns half-edges `2e` and `2e + 1`; the twin of a half-edge is
/// `h ^ 1`. Each vertex stores its outgoing half-edges in cyclic (clockwise)
/// order. Faces are traced with `next_in_face(h) = rotation_next(twin(h))`
/// and numbered in trace order starting from half-edge 0.
class PlanarGraph {
public:
    PlanarGraph() = default;

    /// Builds from per-vertex cyclic neighbor lists. The k-th occurrence of
    /// `v` in the list of `u` (u < v) is paired with the k-th occurrence of
    /// `u` in the list of `v`, counted from the end.
    static PlanarGraph from_rotation(const std::vector<std::vector<Vertex>>& rotation,
                                     bool require_planar = true);

    /// Builds from explicit edges (tail, head of half-edge 2e) and per-vertex
    /// cyclic sequences of outgoing half-edge ids.
    static PlanarGraph from_half_edges(int vertex_count,
                                       const std::vector<std::pair<Vertex, Vertex>>& edges,
                                       const std::vector<std::vector<HalfEdge>>& rotation,
                                       bool require_planar = true);

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return static_cast<int>(head_.size() / 2); }
    int half_edge_count() const { return static_cast<int>(head_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    int degree(Vertex v) const { return static_cast<int>(rotation_[v].size()); }
    std::span<const HalfEdge> rotation(Vertex v) const { return rotation_[v]; }

    static HalfEdge twin(HalfEdge h) { return h ^ 1; }
    static Edge edge_of(HalfEdge h) { return h >> 1; }
    Vertex head(HalfEdge h) const { return head_[h]; }
    Vertex tail(HalfEdge h) const { return head_[h ^ 1]; }
    std::pair<Vertex, Vertex> endpoints(Edge e) const { return {tail(2 * e), head(2 * e)}; }

    HalfEdge rotation_next(HalfEdge h) const;
    HalfEdge rotation_prev(HalfEdge h) const;
    HalfEdge next_in_face(HalfEdge h) const { return rotation_next(twin(h)); }

    Face face_of(HalfEdge h) const { return face_of_[h]; }
    std::span<const HalfEdge> face(Face f) const { return faces_[f]; }
    int face_size(Face f) const { return static_cast<int>(faces_[f].size()); }
    /// Tails of the face's half-edges, in trace order.
    std::vector<Vertex> face_vertices(Face f) const;

    /// Neighbors of `v` in rotation order.
    std::vector<Vertex> neighbors(Vertex v) const;
    std::vector<std::vector<Vertex>> rotation_lists() const;
    std::optional<Edge> find_edge(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    int component_count() const;
    /// V - E + F, where every isolated vertex contributes one face.
    int euler_characteristic() const;
    /// True iff every component satisfies V - E + F = 2.
    bool is_planar() const { return euler_characteristic() == 2 * component_count(); }
    bool is_simple() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

    /// Structural self-check: twin involution and face partition.
    bool half_edges_consistent() const;

private:
    void trace_faces();

    std::vector<Vertex> head_;
    std::vector<std::vector<HalfEdge>> rotation_;
    std::vector<int> rotation_index_;
    std::vector<std::vector<HalfEdge>> faces_;
    std::vector<Face> face_of_;
    std::vector<std::string> labels_;
};

/// Validated fullerene: cubic, simple, 3-connected, faces of size 5 and 6.
class FullereneGraph {
public:
    const PlanarGraph& graph() const { return graph_; }
    const std::vector<Face>& pentagons() const { return pentagons_; }
    const std::vector<Face>& hexagons() const { return hexagons_; }
    int p() const { return graph_.vertex_count(); }

    friend FullereneGraph validate_fullerene(PlanarGraph g);

private:
    PlanarGraph graph_;
    std::vector<Face> pentagons_;
    std::vector<Face> hexagons_;
};

/// Plane dual of a fullerene. Dual vertex `f` is primal face `f` and dual
/// edge `e` crosses primal edge `e`; the maps are stored explicitly anyway.
class DualTriangulation {
public:
    const PlanarGraph& graph() const { return graph_; }
    const std::vector<Vertex>& degree5() const { return degree5_; }
    Face primal_face(Vertex dual_vertex) const { return primal_face_map_[dual_vertex]; }
    Edge primal_edge(Edge dual_edge) const { return primal_edge_map_[dual_edge]; }

    friend DualTriangulation dual(const FullereneGraph& g);

private:
    PlanarGraph graph_;
    std::vector<Vertex> degree5_;
    std::vector<Face> primal_face_map_;
    std::vector<Edge> primal_edge_map_;
};

PlanarGraph build_from_rotation(const std::vector<std::vector<Vertex>>& rotation);

FullereneGraph validate_fullerene(PlanarGraph g);

/// Face dual of any embedded graph: vertex per face, edge `e` crosses edge `e`.
PlanarGraph face_dual(const PlanarGraph& g);

DualTriangulation dual(const FullereneGraph& g);

/// Checks that dualizing the triangulation again recovers `g` through the
/// stored maps (face of G* <-> vertex of G, edge ids preserved).
bool dual_involution_holds(const FullereneGraph& g, const DualTriangulation& d);

/// Hop distances from the source set; -1 for unreachable vertices.
std::vector<int> bfs_distance(const PlanarGraph& g, std::span<const Vertex> sources);

/// Vertices within `radius` hops of `source` (source included), BFS order.
std::vector<Vertex> bfs_ball(const PlanarGraph& g, Vertex source, int radius);

bool is_three_connected(const PlanarGraph& g);

FullereneGraph dodecahedron();

/// Leapfrog transform: truncation of the dual triangulation. Vertex `h` of
/// the result sits on half-edge `h` of the dual.
FullereneGraph leapfrog(const FullereneGraph& g);

}  // namespace fullerene
