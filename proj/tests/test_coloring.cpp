#include "doctest.h"
#include "fixtures.hpp"
#include "fullerene/coloring.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace fullerene;
using namespace fullerene::testing;

namespace {

struct Pipeline {
    DualTriangulation dual;
    WitnessSet witnesses;
    ReducedGraphs reduced;
    std::vector<Color> h_colors;
    DualColoring dual_colors;
    TaitColoring tait;
};

Pipeline run(const FullereneGraph& g, std::uint64_t seed = 0)
{
    Pipeline p;
    p.dual = dual(g);
    p.witnesses = select_witnesses(p.dual);
    p.reduced = build_reduced(p.dual, p.witnesses);
    p.h_colors = four_color(p.reduced.h, {.node_budget = 10'000'000, .seed = seed});
    reduce_double_resonance(p.reduced, p.witnesses, p.h_colors);
    p.dual_colors = extend_coloring(p.dual, p.witnesses, p.reduced, p.h_colors);
    p.tait = tait_edge_coloring(p.dual, p.dual_colors, g);
    return p;
}

}  // namespace

TEST_CASE("pair_class grouping")
{
    CHECK(pair_class(1, 2) == EdgeClass::A);
    CHECK(pair_class(4, 3) == EdgeClass::A);
    CHECK(pair_class(1, 3) == EdgeClass::B);
    CHECK(pair_class(2, 4) == EdgeClass::B);
    CHECK(pair_class(1, 4) == EdgeClass::C);
    CHECK(pair_class(3, 2) == EdgeClass::C);
    CHECK_THROWS_AS(pair_class(2, 2), Error);
    CHECK(to_char(EdgeClass::B) == 'b');
}

TEST_CASE("four_color basics")
{
    auto tri = build_from_rotation({{1, 2}, {2, 0}, {0, 1}});
    auto c = four_color(tri);
    CHECK(std::set<Color>(c.begin(), c.end()).size() == 3);
    CHECK(is_proper_coloring(tri, c));

    PlanarGraph empty;
    CHECK(four_color(empty).empty());

    auto ico = dual(c20());
    auto ic = four_color(ico.graph());
    CHECK(is_proper_coloring(ico.graph(), ic));
    CHECK_FALSE(exhaustive_coloring(ico.graph(), 3).has_value());
    CHECK(exhaustive_coloring(ico.graph(), 4).has_value());

    // Components are colored independently.
    auto two = PlanarGraph::from_rotation({{1, 2}, {2, 0}, {0, 1}, {}, {5}, {4}});
    auto tc = four_color(two);
    CHECK(is_proper_coloring(two, tc));
}

TEST_CASE("four_color budget")
{
    auto d = dual(c540());
    try {
        four_color(d.graph(), {.node_budget = 5, .seed = 0});
        FAIL("expected SearchBudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SearchBudgetExceeded);
    }
}

TEST_CASE("four_color on fixture duals and seeds")
{
    for (const auto* g : {&c20(), &c60(), &c180(), &c540()}) {
        auto d = dual(*g);
        for (std::uint64_t seed : {0u, 1u, 7u}) {
            FourColorStats stats;
            auto colors = four_color(d.graph(), {.node_budget = 10'000'000, .seed = seed}, &stats);
            CHECK(is_proper_coloring(d.graph(), colors));
            CHECK(stats.nodes <= 10'000'000);
        }
    }
}

TEST_CASE("build_reduced without witnesses leaves the dual unchanged")
{
    auto d = dual(c60());
    auto w = select_witnesses(d);
    REQUIRE(w.witnesses.empty());
    auto r = build_reduced(d, w);
    CHECK(r.h0.rotation_lists() == d.graph().rotation_lists());
    CHECK(r.h.rotation_lists() == d.graph().rotation_lists());
}

TEST_CASE("build_reduced on C540")
{
    auto d = dual(c540());
    auto w = select_witnesses(d);
    const int k = static_cast<int>(w.witnesses.size());
    REQUIRE(k >= 2);
    auto r = build_reduced(d, w);
    CHECK(r.h0.vertex_count() == 272 - 7 * k);
    CHECK(r.h.vertex_count() == 272 - 12 * k);
    CHECK(r.h.is_planar());
    CHECK(r.h.is_simple());
    CHECK(r.h0.is_planar());
    for (std::size_t i = 0; i < w.patches.size(); ++i) {
        const Vertex m = r.merged[i];
        for (Vertex x : w.patches[i].r_star) CHECK(r.merge_map[x] == m);
        // Six R* vertices each keep two outer neighbours, plus the six
        // corners, each reached from two R* vertices and merged once.
        CHECK(r.h.degree(m) == 18);
    }
}

TEST_CASE("complete_six_cycle")
{
    std::array<std::vector<Color>, 6> same;
    same.fill({2, 3});
    auto ring = complete_six_cycle(same);
    REQUIRE(ring);
    CHECK(*ring == std::array<Color, 6>{2, 3, 2, 3, 2, 3});

    // Every 2-list assignment on a 6-cycle is colorable.
    const std::vector<std::vector<Color>> pairs{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    int combos = 0;
    std::array<int, 6> idx{};
    for (int code = 0; code < 6 * 6 * 6 * 6 * 6 * 6; ++code) {
        int c = code;
        std::array<std::vector<Color>, 6> lists;
        for (int j = 0; j < 6; ++j) {
            idx[j] = c % 6;
            c /= 6;
            lists[j] = pairs[idx[j]];
        }
        if (!complete_six_cycle(lists)) ++combos;
    }
    CHECK(combos == 0);
}

TEST_CASE("extend_coloring on C540 against exhaustive oracle")
{
    auto p = run(c540());
    const auto& g = p.dual.graph();
    CHECK(is_proper_coloring(g, p.dual_colors.colors));
    for (std::size_t i = 0; i < p.witnesses.patches.size(); ++i) {
        const Patch& patch = p.witnesses.patches[i];
        const Color cv = p.dual_colors.witness_colors[i];
        CHECK(p.dual_colors.colors[patch.center] == cv);
        for (Vertex r : patch.r_star) CHECK(p.dual_colors.colors[r] == cv);
        for (const auto& list : p.dual_colors.inner_lists[i]) CHECK(list.size() == 2);

        // Oracle: all 4^6 recolorings of the inner ring that are proper in
        // the full dual must use only list colors.
        auto colors = p.dual_colors.colors;
        int proper = 0;
        for (int code = 0; code < 4096; ++code) {
            int c = code;
            for (Vertex e : patch.inner_ring) {
                colors[e] = 1 + c % 4;
                c /= 4;
            }
            if (!is_proper_coloring(g, colors)) continue;
            ++proper;
            for (int j = 0; j < 6; ++j) {
                const auto& list = p.dual_colors.inner_lists[i][j];
                CHECK(std::find(list.begin(), list.end(), colors[patch.inner_ring[j]]) != list.end());
            }
        }
        CHECK(proper >= 1);
        CHECK(proper <= 64);
    }
}

TEST_CASE("Tait colorings on fixtures")
{
    for (const auto* g : {&c20(), &c60(), &c180(), &c540()}) {
        auto p = run(*g);
        CHECK(is_proper_tait(*g, p.tait));
        CHECK(triangles_rainbow(p.dual, p.tait));
        std::array<int, 3> sizes{};
        for (auto k : p.tait.edge_colors) ++sizes[static_cast<int>(k)];
        for (int s : sizes) CHECK(s == g->p() / 2);
    }
}

TEST_CASE("permuting the palette permutes the classes")
{
    const auto& g = c180();
    auto p = run(g);
    const std::array<Color, 5> perm{0, 3, 1, 4, 2};
    DualColoring swapped = p.dual_colors;
    for (auto& c : swapped.colors) c = perm[c];
    auto t2 = tait_edge_coloring(p.dual, swapped, g);
    CHECK(is_proper_tait(g, t2));
    std::map<EdgeClass, std::set<EdgeClass>> image;
    for (Edge e = 0; e < g.graph().edge_count(); ++e) image[p.tait.edge_colors[e]].insert(t2.edge_colors[e]);
    CHECK(image.size() == 3);
    std::set<EdgeClass> targets;
    for (auto& [from, to] : image) {
        CHECK(to.size() == 1);
        targets.insert(*to.begin());
    }
    CHECK(targets.size() == 3);
}
