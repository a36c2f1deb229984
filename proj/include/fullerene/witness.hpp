#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fullerene/graph.hpp"

namespace fullerene {

/// Distance-2 neighborhood R(v) of a witness in the dual triangulation.
///
/// With inner ring e_0..e_5 in rotation order around the center, `r_star[i]`
/// is the boundary vertex adjacent to both e_i and e_{i+1}, and `corners[i]`
/// is the boundary vertex adjacent to e_i alone. The boundary cycle reads
/// corners[0], r_star[0], corners[1], r_star[1], ...
struct Patch {
    Vertex center = -1;
    std::array<Vertex, 6> inner_ring{};
    std::array<Vertex, 12> boundary_cycle{};
    std::array<Vertex, 6> r_star{};
    std::array<Vertex, 6> corners{};

    /// All 19 vertices: center, inner ring, boundary.
    std::vector<Vertex> vertices() const;
};

struct DroppedWitness {
    Vertex vertex = -1;
    std::string reason;
};

struct WitnessSet {
    /// Accepted witnesses in selection order; `patches[i]` belongs to `witnesses[i]`.
    std::vector<Vertex> witnesses;
    std::vector<Patch> patches;
    /// Every vertex the greedy picked, including dropped ones.
    std::vector<Vertex> greedy_order;
    /// Newly whitened vertices per greedy step, aligned with `greedy_order`.
    std::vector<int> whitened_counts;
    int initial_white_count = 0;
    int face_count = 0;
    std::vector<DroppedWitness> dropped;

    std::size_t size() const { return witnesses.size(); }
    bool certified() const { return dropped.empty(); }
};

/// The 12 degree-5 vertices of the dual, ascending.
std::vector<Vertex> degree5_set(const DualTriangulation& d);

/// Extracts and checks R(v). Throws PreconditionViolated unless `v` has
/// degree 6 and sits at distance >= 3 from every degree-5 vertex, and
/// PatchDegenerate when the neighborhood is not the flat 19-vertex disk.
Patch extract_patch(const DualTriangulation& d, Vertex v);

/// Greedy selection: whiten everything within distance 2 of the degree-5
/// vertices, then repeatedly take the first black vertex in `priority`
/// order and whiten its distance-4 ball. Degenerate patches are dropped and
/// recorded in `dropped`. An empty priority means ascending vertex id.
WitnessSet select_witnesses(const DualTriangulation& d, std::span<const Vertex> priority = {});

/// Smallest integer >= (faces - 192) / 61, or 0 when that is not positive.
int witness_lower_bound(int faces);

struct WitnessCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

/// Post-hoc verification with fresh BFS runs: degrees, pairwise distance
/// >= 5, distance >= 3 to the degree-5 set, the white-count constants, the
/// size guarantee (when certified) and pairwise disjointness of patches.
WitnessCheck verify_witnesses(const DualTriangulation& d, const WitnessSet& w);

}  // namespace fullerene
