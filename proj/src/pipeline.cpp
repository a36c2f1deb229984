#include "fullerene/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace fullerene {

namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const Error& e) {
        std::string msg = e.what();
        const std::string prefix = std::string(to_string(e.code())) + ": ";
        if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
        throw Error(e.code(), std::string("stage ") + name + ": " + msg);
    } catch (const std::exception& e) {
        throw Error(ErrorCode::Internal, std::string("stage ") + name + ": " + e.what());
    }
}

void scan_classes(const FullereneGraph& g, const std::array<PerfectMatching, 3>& classes,
                  std::vector<std::string>& failures)
{
    const PlanarGraph& pg = g.graph();
    std::vector<int> owner(pg.edge_count(), 0);
    for (int k = 0; k < 3; ++k) {
        if (!is_perfect_matching(pg, classes[k].edges))
            failures.push_back(std::string("class ") + to_char(static_cast<EdgeClass>(k)) + " is not a perfect matching");
        for (Edge e : classes[k].edges) ++owner[e];
    }
    if (std::any_of(owner.begin(), owner.end(), [](int c) { return c != 1; }))
        failures.push_back("color classes do not partition the edge set");
}

void scan_switches(const PlanarGraph& g, const SwitchResult& s, std::vector<std::string>& failures)
{
    std::vector<const std::vector<Edge>*> seen;
    seen.reserve(s.matchings.size());
    for (const auto& m : s.matchings) {
        if (!is_perfect_matching(g, m.edges)) {
            failures.push_back("a switched matching is not perfect");
            return;
        }
        seen.push_back(&m.edges);
    }
    auto less = [](auto* a, auto* b) { return *a < *b; };
    auto same = [](auto* a, auto* b) { return *a == *b; };
    std::sort(seen.begin(), seen.end(), less);
    if (std::adjacent_find(seen.begin(), seen.end(), same) != seen.end())
        failures.push_back("switched matchings are not pairwise distinct");
    if (s.complete && BigInt(static_cast<unsigned long>(s.matchings.size())) != s.count)
        failures.push_back("switch count disagrees with the materialized list");
}

}  // namespace

PipelineResult run_pipeline(const FullereneGraph& g, const AnalyzeOptions& options)
{
    PipelineResult r;
    r.graph = g;
    MatchingReport& rep = r.report;
    auto& failures = rep.invariant_failures;

    rep.p = g.p();
    rep.faces = g.graph().face_count();

    r.dual = stage("dual", [&] { return dual(g); });
    if (!dual_involution_holds(g, r.dual)) failures.push_back("dual involution does not hold");

    r.witnesses = stage("select_witnesses", [&] { return select_witnesses(r.dual); });
    rep.witness_count = static_cast<int>(r.witnesses.size());
    rep.certified = r.witnesses.certified();
    for (const auto& dw : r.witnesses.dropped)
        rep.warnings.push_back("dropped witness " + std::to_string(dw.vertex) + ": " + dw.reason);
    {
        WitnessCheck check = verify_witnesses(r.dual, r.witnesses);
        for (auto& f : check.failures) failures.push_back("witnesses: " + f);
    }

    r.reduced = stage("build_reduced", [&] { return build_reduced(r.dual, r.witnesses); });

    FourColorStats stats;
    r.h_coloring = stage("four_color", [&] {
        return four_color(r.reduced.h, FourColorOptions{options.node_budget, options.seed}, &stats);
    });
    rep.coloring_nodes = stats.nodes;
    rep.double_resonant_faces = stage("four_color", [&] {
        return reduce_double_resonance(r.reduced, r.witnesses, r.h_coloring);
    });
    if (!is_proper_coloring(r.reduced.h, r.h_coloring)) failures.push_back("coloring of H is not proper");

    r.dual_coloring = stage("extend_coloring", [&] {
        return extend_coloring(r.dual, r.witnesses, r.reduced, r.h_coloring);
    });
    if (!is_proper_coloring(r.dual.graph(), r.dual_coloring.colors))
        failures.push_back("extended dual coloring is not proper");

    r.tait = stage("tait_edge_coloring", [&] { return tait_edge_coloring(r.dual, r.dual_coloring, g); });
    if (!is_proper_tait(g, r.tait)) failures.push_back("edge coloring is not proper");
    if (!triangles_rainbow(r.dual, r.tait)) failures.push_back("a dual triangle is not rainbow");

    r.classes = stage("class_matchings", [&] { return class_matchings(g, r.tait); });
    scan_classes(g, r.classes, failures);

    r.best = stage("best_class", [&] { return best_class(g, r.dual, r.tait, r.witnesses); });
    rep.class_resonant_counts = r.best.forced_counts;
    rep.best_class = r.best.cls;
    rep.disjoint_resonant_count = static_cast<int>(r.best.resonant.faces.size());
    if (rep.double_resonant_faces > 0)
        rep.warnings.push_back(std::to_string(rep.double_resonant_faces) +
                               " witness-adjacent hexagons are resonant in more than one class");
    {
        int total = 0;
        for (int c : r.best.forced_counts) total += c;
        if (total != 6 * rep.witness_count) failures.push_back("class counts do not sum to 6|W|");
        if (rep.certified && rep.disjoint_resonant_count < 2 * rep.witness_count)
            failures.push_back("best class holds fewer than 2|W| hexagons");
        if (!r.best.resonant.disjoint) failures.push_back("best class hexagons are not disjoint");
    }

    r.switches = stage("switch_enumerate", [&] {
        return switch_enumerate(g.graph(), r.best.resonant.matching, r.best.resonant.faces, options.switch_cap);
    });
    rep.switch_count = r.switches.count;
    if (!r.switches.complete)
        rep.warnings.push_back("switch enumeration stopped at the cap of " + std::to_string(options.switch_cap));
    scan_switches(g.graph(), r.switches, failures);

    rep.bounds = stage("lower_bounds", [&] { return lower_bounds(rep.p); });

    if (options.exact_count) {
        rep.exact_count = stage("count_perfect_matchings", [&] { return count_perfect_matchings(g.graph()); });
        if (rep.switch_count > *rep.exact_count) failures.push_back("switch count exceeds the exact count");
        if (rep.certified && !at_least_pow2(*rep.exact_count, rep.bounds.theorem1_exponent))
            failures.push_back("exact count is below the exponential lower bound");
    }
    if (rep.certified && !at_least_pow2(rep.switch_count, Rational::make(2 * rep.witness_count, 1)))
        failures.push_back("switch count is below 2^(2|W|)");
    return r;
}

MatchingReport analyze(const PlanarGraph& g, const AnalyzeOptions& options)
{
    FullereneGraph fg = stage("validate", [&] { return validate_fullerene(g); });
    return run_pipeline(fg, options).report;
}

std::string report_json(const MatchingReport& r, int indent)
{
    using nlohmann::ordered_json;
    auto bound = [](const Rational& e, double value) {
        ordered_json b;
        b["exponent"] = e.str();
        b["value"] = value;
        return b;
    };
    ordered_json j;
    j["schema"] = 1;
    j["p"] = r.p;
    j["faces"] = r.faces;
    j["witness_count"] = r.witness_count;
    j["class_resonant_counts"] = {{"a", r.class_resonant_counts[0]},
                                  {"b", r.class_resonant_counts[1]},
                                  {"c", r.class_resonant_counts[2]}};
    j["best_class"] = std::string(1, to_char(r.best_class));
    j["disjoint_resonant_count"] = r.disjoint_resonant_count;
    j["switch_count"] = r.switch_count.get_str();
    j["exact_count"] = r.exact_count ? ordered_json(r.exact_count->get_str()) : ordered_json(nullptr);
    j["bounds"] = {{"theorem1", bound(r.bounds.theorem1_exponent, r.bounds.theorem1)},
                   {"zz", r.bounds.zz.get_str()},
                   {"km", bound(r.bounds.km_exponent, r.bounds.km)},
                   {"corollary", bound(r.bounds.corollary_exponent, r.bounds.corollary)}};
    j["certified"] = r.certified;
    j["warnings"] = r.warnings;
    j["invariants_ok"] = r.invariants_ok();
    j["invariant_failures"] = r.invariant_failures;
    j["double_resonant_faces"] = r.double_resonant_faces;
    return j.dump(indent);
}

std::string report_text(const MatchingReport& r)
{
    std::ostringstream out;
    out << "p                        " << r.p << '\n'
        << "faces                    " << r.faces << '\n'
        << "witness_count            " << r.witness_count << '\n'
        << "class_resonant_counts    a=" << r.class_resonant_counts[0] << " b=" << r.class_resonant_counts[1]
        << " c=" << r.class_resonant_counts[2] << '\n'
        << "best_class               " << to_char(r.best_class) << '\n'
        << "disjoint_resonant_count  " << r.disjoint_resonant_count << '\n'
        << "switch_count             " << r.switch_count.get_str() << '\n'
        << "exact_count              " << (r.exact_count ? r.exact_count->get_str() : "-") << '\n'
        << "bound theorem1           2^(" << r.bounds.theorem1_exponent.str() << ") = " << r.bounds.theorem1 << '\n'
        << "bound zz                 " << r.bounds.zz.get_str() << '\n'
        << "bound km                 15*2^(" << r.bounds.km_exponent.str() << ") = " << r.bounds.km << '\n'
        << "bound corollary          2^(" << r.bounds.corollary_exponent.str() << ") = " << r.bounds.corollary << '\n'
        << "certified                " << (r.certified ? "yes" : "no") << '\n'
        << "invariants               " << (r.invariants_ok() ? "ok" : "FAILED") << '\n';
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
    for (const auto& f : r.invariant_failures) out << "invariant failure: " << f << '\n';
    return out.str();
}

}  // namespace fullerene
