#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fullerene/coloring.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/witness.hpp"

namespace fullerene {

using BigInt = mpz_class;

enum class MatchingSource { ClassA, ClassB, ClassC, Switched, Enumerated };

std::string_view to_string(MatchingSource s);

struct PerfectMatching {
    std::vector<Edge> edges;  ///< ascending edge ids
    MatchingSource source = MatchingSource::Enumerated;

    friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) { return a.edges == b.edges; }
};

bool is_perfect_matching(const PlanarGraph& g, std::span<const Edge> edges);

/// Throws InvalidMatching unless every vertex is covered exactly once.
void validate_matching(const PlanarGraph& g, const PerfectMatching& m);

/// The three color classes of a Tait coloring, in class order a, b, c.
std::array<PerfectMatching, 3> class_matchings(const FullereneGraph& g, const TaitColoring& t);

struct ResonantSet {
    PerfectMatching matching;
    std::vector<Face> faces;  ///< ascending
    bool disjoint = true;
};

/// Hexagonal faces (size 6) incident with exactly three matching edges,
/// optionally restricted to `only`. `disjoint` reports pairwise vertex
/// disjointness of the result.
ResonantSet resonant_faces(const PlanarGraph& g, const PerfectMatching& m,
                           std::optional<std::span<const Face>> only = std::nullopt);

struct BestClass {
    EdgeClass cls = EdgeClass::A;
    ResonantSet resonant;  ///< disjoint witness-adjacent hexagons resonant in `cls`
    /// Witness-adjacent hexagons forced resonant in each class by c(v).
    std::array<int, 3> forced_counts{};
    /// Witness-adjacent hexagons resonant in each class (any reason).
    std::array<int, 3> resonant_counts{};
    /// Per witness, per inner-ring hexagon: number of classes it is resonant in.
    std::vector<std::array<int, 6>> class_multiplicity;
};

/// Picks the class with the most witness-adjacent resonant hexagons. The
/// hexagon of inner-ring vertex e around witness v is counted for the class
/// of the dual edge ve. Throws PigeonholeViolated when the winner holds
/// fewer than 2|W| hexagons and NotDisjoint if they overlap.
BestClass best_class(const FullereneGraph& g, const DualTriangulation& d, const TaitColoring& t,
                     const WitnessSet& w);

struct SwitchResult {
    std::vector<PerfectMatching> matchings;  ///< first min(cap, count) subsets
    BigInt count;                            ///< 2^|faces|
    bool complete = true;                    ///< every matching materialized
};

/// Complements the boundary of every subset of the resonant hexagons.
SwitchResult switch_enumerate(const PlanarGraph& g, const PerfectMatching& m, std::span<const Face> faces,
                              std::uint64_t cap = std::uint64_t{1} << 20);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

/// Per-edge orientation (+1: tail(2e) -> head(2e), -1 reversed) such that
/// every face but one per component has an odd number of edges oriented
/// along its trace direction.
std::vector<int> pfaffian_orientation(const PlanarGraph& g);

/// Determinant of the signed skew adjacency under the Pfaffian orientation.
BigInt pfaffian_determinant(const PlanarGraph& g);

/// Exact number of perfect matchings of a planar graph. The determinant
/// must be a perfect square; Internal is thrown otherwise.
BigInt count_perfect_matchings(const PlanarGraph& g);

/// All perfect matchings, branching on the lowest uncovered vertex; throws
/// CapExceeded past `cap`.
std::vector<PerfectMatching> brute_enumerate(const PlanarGraph& g, std::uint64_t cap = 1'000'000);

struct Rational {
    long num = 0;
    long den = 1;

    static Rational make(long num, long den);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;
    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Exponent (p - 380) / 61 of the exponential lower bound, for any p.
Rational theorem1_exponent(long p);

/// Smallest integer k with k >= 2^e, computed exactly.
BigInt ceil_pow2(const Rational& e);

/// Exact test of value >= 2^e.
bool at_least_pow2(const BigInt& value, const Rational& e);

struct LowerBounds {
    long p = 0;
    Rational theorem1_exponent;  ///< (p - 380) / 61
    double theorem1 = 0;
    BigInt zz;                   ///< ceil(3(p + 2) / 4)
    Rational km_exponent;        ///< p / 20 - 1 / 2
    double km = 0;               ///< 15 * 2^km_exponent
    Rational corollary_exponent;
    double corollary = 0;
};

/// Throws BadVertexCount unless p is even and at least 20.
LowerBounds lower_bounds(long p);

}  // namespace fullerene
