#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fullerene/coloring.hpp"
#include "fullerene/graph.hpp"
#include "fullerene/matchings.hpp"
#include "fullerene/witness.hpp"

namespace fullerene {

struct AnalyzeOptions {
    bool exact_count = true;
    std::uint64_t switch_cap = std::uint64_t{1} << 20;
    std::uint64_t seed = 0;
    std::uint64_t node_budget = 10'000'000;
};

struct MatchingReport {
    long p = 0;
    int faces = 0;
    int witness_count = 0;
    std::array<int, 3> class_resonant_counts{};
    EdgeClass best_class = EdgeClass::A;
    int disjoint_resonant_count = 0;
    BigInt switch_count;
    std::optional<BigInt> exact_count;
    LowerBounds bounds;
    bool certified = true;
    std::vector<std::string> warnings;

    /// Failed invariant scans; empty on a clean run.
    std::vector<std::string> invariant_failures;
    int double_resonant_faces = 0;
    std::uint64_t coloring_nodes = 0;

    bool invariants_ok() const { return invariant_failures.empty(); }
};

/// Every intermediate object of one run, for callers that want more than
/// the report.
struct PipelineResult {
    FullereneGraph graph;
    DualTriangulation dual;
    WitnessSet witnesses;
    ReducedGraphs reduced;
    std::vector<Color> h_coloring;
    DualColoring dual_coloring;
    TaitColoring tait;
    std::array<PerfectMatching, 3> classes;
    BestClass best;
    SwitchResult switches;
    MatchingReport report;
};

/// Runs the whole chain on a validated fullerene. Errors keep their code and
/// get the failing stage prefixed to the message.
PipelineResult run_pipeline(const FullereneGraph& g, const AnalyzeOptions& options = {});

/// validate_fullerene followed by run_pipeline, report only.
MatchingReport analyze(const PlanarGraph& g, const AnalyzeOptions& options = {});

/// Versioned JSON document (schema 1), keys in a fixed order.
std::string report_json(const MatchingReport& r, int indent = 2);
std::string report_text(const MatchingReport& r);

}  // namespace fullerene
