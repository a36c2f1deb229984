#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fullerene/graph.hpp"
#include "fullerene/witness.hpp"

namespace fullerene {

/// Vertex color in {1, 2, 3, 4}; 0 means uncolored.
using Color = int;

/// Edge color class of the Tait coloring.
enum class EdgeClass : std::uint8_t { A = 0, B = 1, C = 2 };

char to_char(EdgeClass k);

/// Fixed pairing of dual color pairs onto edge classes:
/// {1,2},{3,4} -> A; {1,3},{2,4} -> B; {1,4},{2,3} -> C.
EdgeClass pair_class(Color x, Color y);

/// H0 is the dual with every witness and its six neighbours deleted; H is
/// H0 with each witness's R* identified into one vertex. Both keep the
/// surviving dual vertices in ascending order of dual id.
struct ReducedGraphs {
    PlanarGraph h0;
    PlanarGraph h;
    std::vector<Vertex> h0_index;   ///< dual vertex -> H0 vertex, -1 if deleted
    std::vector<Vertex> merge_map;  ///< dual vertex -> H vertex, -1 if deleted
    std::vector<Vertex> merged;     ///< per witness, its H vertex
};

ReducedGraphs build_reduced(const DualTriangulation& d, const WitnessSet& w);

struct FourColorOptions {
    std::uint64_t node_budget = 10'000'000;
    /// Tie order among equally constrained vertices; 0 keeps ascending ids.
    std::uint64_t seed = 0;
};

struct FourColorStats {
    std::uint64_t nodes = 0;
    std::uint64_t kempe_swaps = 0;
    std::uint64_t backtracks = 0;
};

/// Proper 4-coloring by backtracking (most constrained vertex first) with
/// Kempe-chain interchanges at dead ends. Components are colored
/// independently. Throws SearchBudgetExceeded when the node budget runs out.
std::vector<Color> four_color(const PlanarGraph& h, const FourColorOptions& options = {},
                              FourColorStats* stats = nullptr);

/// Exhaustive search for a proper coloring with `palette` colors; returns
/// nullopt when none exists. Meant for small graphs.
std::optional<std::vector<Color>> exhaustive_coloring(const PlanarGraph& g, int palette);

bool is_proper_coloring(const PlanarGraph& g, std::span<const Color> colors, int palette = 4);

/// Colors a 6-cycle from per-vertex lists. Among proper assignments, the
/// one with the lowest `penalty` wins; ties go to the lexicographically
/// first list choice.
std::optional<std::array<Color, 6>> complete_six_cycle(
    const std::array<std::vector<Color>, 6>& lists,
    const std::function<int(const std::array<Color, 6>&)>& penalty = {});

/// Fewest inner-ring hexagons of one witness that any list completion
/// leaves resonant in a second class, given the witness color and the
/// colors of its six corners.
int min_double_resonance(Color witness_color, const std::array<Color, 6>& corner_colors);

/// Local search over Kempe interchanges in H that lowers the total of
/// min_double_resonance over all witnesses. The coloring stays proper.
/// Returns the remaining total.
int reduce_double_resonance(const ReducedGraphs& reduced, const WitnessSet& w, std::vector<Color>& h_coloring,
                            int max_rounds = 256);

struct DualColoring {
    std::vector<Color> colors;          ///< per dual vertex
    std::vector<Color> witness_colors;  ///< c(v), aligned with WitnessSet::witnesses
    /// Per witness, the list of each inner-ring vertex before completion.
    std::vector<std::array<std::vector<Color>, 6>> inner_lists;
};

/// Pulls a proper coloring of H back to the dual, colors each witness with
/// its merged color and completes the inner 6-cycles from their 2-lists.
/// The completion prefers assignments under which no inner-ring hexagon is
/// resonant in a second class.
DualColoring extend_coloring(const DualTriangulation& d, const WitnessSet& w,
                             const ReducedGraphs& reduced, std::span<const Color> h_coloring);

struct TaitColoring {
    std::vector<EdgeClass> edge_colors;  ///< per primal edge
};

TaitColoring tait_edge_coloring(const DualTriangulation& d, const DualColoring& dc,
                                const FullereneGraph& g);

/// The three edges at every primal vertex carry three distinct classes.
bool is_proper_tait(const FullereneGraph& g, const TaitColoring& t);

/// Around every dual triangle the three induced classes are distinct.
bool triangles_rainbow(const DualTriangulation& d, const TaitColoring& t);

}  // namespace fullerene
