#include "fullerene/coloring.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

namespace fullerene {

char to_char(EdgeClass k)
{
    return static_cast<char>('a' + static_cast<int>(k));
}

EdgeClass pair_class(Color x, Color y)
{
    if (x == y || x < 1 || x > 4 || y < 1 || y > 4)
        throw Error(ErrorCode::Internal, "pair_class needs two distinct colors in 1..4");
    const int lo = std::min(x, y);
    const int hi = std::max(x, y);
    if ((lo == 1 && hi == 2) || (lo == 3 && hi == 4)) return EdgeClass::A;
    if ((lo == 1 && hi == 3) || (lo == 2 && hi == 4)) return EdgeClass::B;
    return EdgeClass::C;
}

// ---------------------------------------------------------------------------
// Surgery

namespace {

std::vector<Vertex> dedupe_keep_first(const std::vector<Vertex>& list)
{
    std::vector<Vertex> out;
    for (Vertex x : list)
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    return out;
}

/// Neighbours of `r` that survive deletion, in rotation order starting right
/// after the contiguous block of deleted neighbours.
std::vector<Vertex> surviving_arc(const PlanarGraph& g, Vertex r, const std::vector<char>& removed)
{
    const auto nb = g.neighbors(r);
    const int deg = static_cast<int>(nb.size());
    int last_removed = -1;
    for (int i = 0; i < deg; ++i)
        if (removed[nb[i]] && !removed[nb[(i + 1) % deg]]) {
            if (last_removed != -1)
                throw Error(ErrorCode::Internal, "deleted neighbours of an R* vertex are not contiguous");
            last_removed = i;
        }
    if (last_removed == -1) throw Error(ErrorCode::Internal, "R* vertex has no deleted neighbour");
    std::vector<Vertex> arc;
    for (int k = 1; k <= deg; ++k) {
        const Vertex x = nb[(last_removed + k) % deg];
        if (!removed[x]) arc.push_back(x);
    }
    return arc;
}

}  // namespace

ReducedGraphs build_reduced(const DualTriangulation& d, const WitnessSet& w)
{
    const PlanarGraph& g = d.graph();
    const int n = g.vertex_count();
    ReducedGraphs out;

    std::vector<char> removed(n, 0);
    std::vector<int> group(n, -1);
    for (std::size_t i = 0; i < w.patches.size(); ++i) {
        const Patch& p = w.patches[i];
        for (Vertex x : p.inner_ring) removed[x] = 1;
        removed[p.center] = 1;
        for (Vertex r : p.r_star) {
            if (group[r] != -1) throw Error(ErrorCode::PreconditionViolated, "patches overlap");
            group[r] = static_cast<int>(i);
        }
    }
    for (const Patch& p : w.patches)
        for (Vertex r : p.r_star)
            if (removed[r]) throw Error(ErrorCode::PreconditionViolated, "patches overlap");

    out.h0_index.assign(n, -1);
    int h0_count = 0;
    for (Vertex x = 0; x < n; ++x)
        if (!removed[x]) out.h0_index[x] = h0_count++;
    std::vector<std::vector<Vertex>> h0_rotation(h0_count);
    for (Vertex x = 0; x < n; ++x) {
        if (removed[x]) continue;
        for (Vertex y : g.neighbors(x))
            if (!removed[y]) h0_rotation[out.h0_index[x]].push_back(out.h0_index[y]);
    }
    out.h0 = PlanarGraph::from_rotation(h0_rotation, true);

    out.merge_map.assign(n, -1);
    out.merged.assign(w.patches.size(), -1);
    int h_count = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (removed[x]) continue;
        if (group[x] != -1) {
            int& slot = out.merged[group[x]];
            if (slot == -1) slot = h_count++;
            out.merge_map[x] = slot;
        } else {
            out.merge_map[x] = h_count++;
        }
    }

    std::vector<std::vector<Vertex>> h_rotation(h_count);
    for (Vertex x = 0; x < n; ++x) {
        if (removed[x] || group[x] != -1) continue;
        std::vector<Vertex> mapped;
        for (Vertex y : g.neighbors(x))
            if (!removed[y]) mapped.push_back(out.merge_map[y]);
        h_rotation[out.merge_map[x]] = dedupe_keep_first(mapped);
    }
    for (std::size_t i = 0; i < w.patches.size(); ++i) {
        const Patch& p = w.patches[i];
        // Chain the arcs of the six R* vertices around the hole: each arc
        // runs corner to corner, and consecutive arcs share a corner.
        std::vector<std::vector<Vertex>> arcs;
        for (Vertex r : p.r_star) arcs.push_back(surviving_arc(g, r, removed));
        std::vector<char> used(6, 0);
        std::vector<Vertex> combined = arcs[0];
        used[0] = 1;
        for (int step = 1; step < 6; ++step) {
            int next = -1;
            for (int j = 0; j < 6; ++j)
                if (!used[j] && !arcs[j].empty() && arcs[j].front() == combined.back()) next = j;
            if (next == -1) throw Error(ErrorCode::Internal, "R* arcs do not chain around the hole");
            used[next] = 1;
            combined.insert(combined.end(), arcs[next].begin(), arcs[next].end());
        }
        const Vertex self = out.merged[i];
        std::vector<Vertex> mapped;
        for (Vertex y : combined) {
            const Vertex hy = out.merge_map[y];
            if (hy == self)
                throw Error(ErrorCode::LoopCreated,
                            "identifying R*(" + std::to_string(p.center) + ") creates a loop");
            mapped.push_back(hy);
        }
        h_rotation[self] = dedupe_keep_first(mapped);
    }
    out.h = PlanarGraph::from_rotation(h_rotation, true);

    const int k = static_cast<int>(w.patches.size());
    if (out.h0.vertex_count() != n - 7 * k || out.h.vertex_count() != out.h0.vertex_count() - 5 * k)
        throw Error(ErrorCode::Internal, "reduced graph vertex counts are off");
    return out;
}

// ---------------------------------------------------------------------------
// Four-coloring search

namespace {

class FourColorSearch {
public:
    FourColorSearch(const PlanarGraph& g, std::span<const Vertex> component,
                    const std::vector<std::uint64_t>& tie_rank, std::vector<Color>& color,
                    std::uint64_t budget, FourColorStats& stats)
        : g_(g), component_(component), tie_rank_(tie_rank), color_(color), budget_(budget),
          stats_(stats), seen_count_(g.vertex_count(), {0, 0, 0, 0, 0})
    {}

    bool run() { return solve(); }

private:
    int saturation(Vertex v) const
    {
        int s = 0;
        for (int c = 1; c <= 4; ++c) s += seen_count_[v][c] > 0 ? 1 : 0;
        return s;
    }

    void assign(Vertex v, Color c, bool record = true)
    {
        const Color old = color_[v];
        if (record) trail_.emplace_back(v, old);
        for (HalfEdge h : g_.rotation(v)) {
            const Vertex w = g_.head(h);
            if (old) --seen_count_[w][old];
            if (c) ++seen_count_[w][c];
        }
        color_[v] = c;
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            auto [v, old] = trail_.back();
            trail_.pop_back();
            assign(v, old, false);
        }
    }

    Vertex pick() const
    {
        Vertex best = -1;
        int best_sat = -1, best_deg = -1;
        for (Vertex v : component_) {
            if (color_[v]) continue;
            const int sat = saturation(v);
            int deg = 0;
            for (HalfEdge h : g_.rotation(v)) deg += color_[g_.head(h)] ? 0 : 1;
            if (sat > best_sat || (sat == best_sat && deg > best_deg) ||
                (sat == best_sat && deg == best_deg && tie_rank_[v] < tie_rank_[best])) {
                best = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best;
    }

    /// Frees a color at `v` by swapping an (a, b) Kempe chain that contains
    /// every a-coloured neighbour of v but no b-coloured one.
    bool kempe_free(Vertex v)
    {
        const int n = g_.vertex_count();
        std::vector<int> mark(n, 0);
        int stamp = 0;
        for (Color a = 1; a <= 4; ++a) {
            for (Color b = 1; b <= 4; ++b) {
                if (a == b) continue;
                ++stamp;
                std::vector<Vertex> chain;
                for (HalfEdge h : g_.rotation(v)) {
                    const Vertex s = g_.head(h);
                    if (color_[s] != a || mark[s] == stamp) continue;
                    mark[s] = stamp;
                    chain.push_back(s);
                    for (std::size_t i = chain.size() - 1; i < chain.size(); ++i) {
                        for (HalfEdge e : g_.rotation(chain[i])) {
                            const Vertex t = g_.head(e);
                            if (t == v || mark[t] == stamp) continue;
                            if (color_[t] == a || color_[t] == b) {
                                mark[t] = stamp;
                                chain.push_back(t);
                            }
                        }
                    }
                }
                bool blocked = false;
                for (HalfEdge h : g_.rotation(v))
                    if (color_[g_.head(h)] == b && mark[g_.head(h)] == stamp) blocked = true;
                if (blocked || chain.empty()) continue;
                for (Vertex x : chain) assign(x, color_[x] == a ? b : a);
                ++stats_.kempe_swaps;
                return true;
            }
        }
        return false;
    }

    bool solve()
    {
        const Vertex v = pick();
        if (v == -1) return true;
        if (++stats_.nodes > budget_)
            throw Error(ErrorCode::SearchBudgetExceeded,
                        "4-coloring search exceeded " + std::to_string(budget_) + " nodes");
        const std::size_t entry = trail_.size();
        if (saturation(v) == 4 && !kempe_free(v)) {
            ++stats_.backtracks;
            return false;
        }
        const std::size_t mark = trail_.size();
        for (Color c = 1; c <= 4; ++c) {
            if (seen_count_[v][c] > 0) continue;
            assign(v, c);
            if (solve()) return true;
            undo_to(mark);
        }
        undo_to(entry);
        ++stats_.backtracks;
        return false;
    }

    const PlanarGraph& g_;
    std::span<const Vertex> component_;
    const std::vector<std::uint64_t>& tie_rank_;
    std::vector<Color>& color_;
    std::uint64_t budget_;
    FourColorStats& stats_;
    std::vector<std::array<int, 5>> seen_count_;
    std::vector<std::pair<Vertex, Color>> trail_;
};

std::vector<std::vector<Vertex>> components(const PlanarGraph& g)
{
    std::vector<int> comp(g.vertex_count(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] != -1) continue;
        out.emplace_back();
        auto& members = out.back();
        comp[s] = static_cast<int>(out.size() - 1);
        members.push_back(s);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (HalfEdge h : g.rotation(members[i]))
                if (comp[g.head(h)] == -1) {
                    comp[g.head(h)] = comp[s];
                    members.push_back(g.head(h));
                }
        std::sort(members.begin(), members.end());
    }
    return out;
}

}  // namespace

std::vector<Color> four_color(const PlanarGraph& h, const FourColorOptions& options, FourColorStats* stats)
{
    const int n = h.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : h.neighbors(v))
            if (w == v) throw Error(ErrorCode::PreconditionViolated, "graph has a loop");

    std::vector<std::uint64_t> tie_rank(n);
    std::iota(tie_rank.begin(), tie_rank.end(), 0);
    if (options.seed != 0) {
        std::mt19937_64 rng(options.seed);
        std::shuffle(tie_rank.begin(), tie_rank.end(), rng);
    }

    FourColorStats local;
    FourColorStats& st = stats ? *stats : local;
    std::vector<Color> color(n, 0);
    for (const auto& comp : components(h)) {
        FourColorSearch search(h, comp, tie_rank, color, options.node_budget, st);
        if (!search.run())
            throw Error(ErrorCode::Internal, "4-coloring search exhausted without a solution");
    }
    if (!is_proper_coloring(h, color, 4))
        throw Error(ErrorCode::Internal, "4-coloring search produced an improper coloring");
    return color;
}

std::optional<std::vector<Color>> exhaustive_coloring(const PlanarGraph& g, int palette)
{
    const int n = g.vertex_count();
    std::vector<Color> color(n, 0);
    // Plain depth-first search in vertex order, no heuristics.
    std::function<bool(Vertex)> go = [&](Vertex v) {
        if (v == n) return true;
        for (Color c = 1; c <= palette; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (w < v && color[w] == c) ok = false;
            if (!ok) continue;
            color[v] = c;
            if (go(v + 1)) return true;
        }
        color[v] = 0;
        return false;
    };
    if (!go(0)) return std::nullopt;
    return color;
}

bool is_proper_coloring(const PlanarGraph& g, std::span<const Color> colors, int palette)
{
    if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
    for (Color c : colors)
        if (c < 1 || c > palette) return false;
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (colors[u] == colors[v]) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Extension to the full dual

std::optional<std::array<Color, 6>> complete_six_cycle(
    const std::array<std::vector<Color>, 6>& lists,
    const std::function<int(const std::array<Color, 6>&)>& penalty)
{
    std::optional<std::array<Color, 6>> best;
    int best_penalty = std::numeric_limits<int>::max();
    std::array<Color, 6> pick{};
    std::function<void(int)> go = [&](int i) {
        if (i == 6) {
            if (pick[5] == pick[0]) return;
            const int score = penalty ? penalty(pick) : 0;
            if (score < best_penalty) {
                best_penalty = score;
                best = pick;
            }
            return;
        }
        for (Color c : lists[i]) {
            if (i > 0 && pick[i - 1] == c) continue;
            pick[i] = c;
            go(i + 1);
        }
    };
    go(0);
    return best;
}

namespace {

std::array<std::vector<Color>, 6> inner_lists_from(Color witness_color, const std::array<Color, 6>& corners)
{
    std::array<std::vector<Color>, 6> lists;
    for (int j = 0; j < 6; ++j)
        for (Color c = 1; c <= 4; ++c)
            if (c != witness_color && c != corners[j]) lists[j].push_back(c);
    return lists;
}

/// Inner face j is resonant in a second class exactly when its two inner
/// neighbours and its corner share one color.
int double_resonance(const std::array<Color, 6>& ring, const std::array<Color, 6>& corners)
{
    int bad = 0;
    for (int j = 0; j < 6; ++j)
        if (ring[(j + 1) % 6] == ring[(j + 5) % 6] && ring[(j + 1) % 6] == corners[j]) ++bad;
    return bad;
}

int total_double_resonance(const ReducedGraphs& reduced, const WitnessSet& w, std::span<const Color> h_coloring)
{
    int total = 0;
    for (std::size_t i = 0; i < w.patches.size(); ++i) {
        std::array<Color, 6> corners{};
        for (int j = 0; j < 6; ++j) corners[j] = h_coloring[reduced.merge_map[w.patches[i].corners[j]]];
        total += min_double_resonance(h_coloring[reduced.merged[i]], corners);
    }
    return total;
}

/// Swaps the (a, b) Kempe chain through `start`; returns the touched vertices.
std::vector<Vertex> kempe_swap(const PlanarGraph& g, std::vector<Color>& colors, Vertex start, Color b)
{
    const Color a = colors[start];
    std::vector<Vertex> chain{start};
    std::vector<char> in(g.vertex_count(), 0);
    in[start] = 1;
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (Vertex y : g.neighbors(chain[i]))
            if (!in[y] && (colors[y] == a || colors[y] == b)) {
                in[y] = 1;
                chain.push_back(y);
            }
    for (Vertex x : chain) colors[x] = colors[x] == a ? b : a;
    return chain;
}

}  // namespace

int min_double_resonance(Color witness_color, const std::array<Color, 6>& corner_colors)
{
    const auto lists = inner_lists_from(witness_color, corner_colors);
    int best = 7;
    auto ring = complete_six_cycle(lists, [&](const std::array<Color, 6>& r) {
        const int score = double_resonance(r, corner_colors);
        best = std::min(best, score);
        return score;
    });
    return ring ? best : 7;
}

int reduce_double_resonance(const ReducedGraphs& reduced, const WitnessSet& w, std::vector<Color>& h_coloring,
                            int max_rounds)
{
    const PlanarGraph& h = reduced.h;
    int current = total_double_resonance(reduced, w, h_coloring);
    for (int round = 0; round < max_rounds && current > 0; ++round) {
        bool improved = false;
        for (std::size_t i = 0; i < w.patches.size() && current > 0; ++i) {
            std::array<Color, 6> corners{};
            for (int j = 0; j < 6; ++j) corners[j] = h_coloring[reduced.merge_map[w.patches[i].corners[j]]];
            if (min_double_resonance(h_coloring[reduced.merged[i]], corners) == 0) continue;
            // Chains through the merged vertex, the corners, or a corner's
            // neighbours can all change the corner pattern.
            std::vector<Vertex> starts{reduced.merged[i]};
            for (Vertex c : w.patches[i].corners) {
                starts.push_back(reduced.merge_map[c]);
                for (Vertex y : h.neighbors(reduced.merge_map[c])) starts.push_back(y);
            }
            for (std::size_t s = 0; s < starts.size() && !improved; ++s) {
                const Vertex start = starts[s];
                for (Color b = 1; b <= 4 && !improved; ++b) {
                    if (b == h_coloring[start]) continue;
                    const Color a = h_coloring[start];
                    const auto chain = kempe_swap(h, h_coloring, start, b);
                    const int candidate = total_double_resonance(reduced, w, h_coloring);
                    if (candidate < current) {
                        current = candidate;
                        improved = true;
                    } else {
                        for (Vertex x : chain) h_coloring[x] = h_coloring[x] == a ? b : a;
                    }
                }
            }
        }
        if (!improved) break;
    }
    if (!is_proper_coloring(h, h_coloring, 4))
        throw Error(ErrorCode::Internal, "Kempe refinement broke properness");
    return current;
}

DualColoring extend_coloring(const DualTriangulation& d, const WitnessSet& w,
                             const ReducedGraphs& reduced, std::span<const Color> h_coloring)
{
    const PlanarGraph& g = d.graph();
    if (!is_proper_coloring(reduced.h, h_coloring, 4))
        throw Error(ErrorCode::PreconditionViolated, "coloring of H is not proper");

    DualColoring out;
    out.colors.assign(g.vertex_count(), 0);
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (reduced.merge_map[x] != -1) out.colors[x] = h_coloring[reduced.merge_map[x]];

    for (std::size_t i = 0; i < w.patches.size(); ++i) {
        const Patch& p = w.patches[i];
        const Color cv = h_coloring[reduced.merged[i]];
        out.colors[p.center] = cv;
        out.witness_colors.push_back(cv);

        std::array<std::vector<Color>, 6> lists;
        std::array<Color, 6> corners{};
        for (int j = 0; j < 6; ++j) {
            corners[j] = out.colors[p.corners[j]];
            std::array<bool, 5> blocked{};
            for (Vertex y : g.neighbors(p.inner_ring[j])) blocked[out.colors[y]] = true;
            for (Color c = 1; c <= 4; ++c)
                if (!blocked[c]) lists[j].push_back(c);
            if (lists[j].size() < 2)
                throw Error(ErrorCode::ListDeficit, "inner vertex " + std::to_string(p.inner_ring[j]) +
                                                        " of witness " + std::to_string(p.center) +
                                                        " has " + std::to_string(lists[j].size()) +
                                                        " available colors");
        }
        out.inner_lists.push_back(lists);

        const auto ring = complete_six_cycle(
            lists, [&](const std::array<Color, 6>& r) { return double_resonance(r, corners); });
        if (!ring) throw Error(ErrorCode::Internal, "inner 6-cycle has no list coloring");
        for (int j = 0; j < 6; ++j) out.colors[p.inner_ring[j]] = (*ring)[j];
    }

    if (!is_proper_coloring(g, out.colors, 4))
        throw Error(ErrorCode::Internal, "extended dual coloring is not proper");
    return out;
}

// ---------------------------------------------------------------------------
// Tait coloring

TaitColoring tait_edge_coloring(const DualTriangulation& d, const DualColoring& dc, const FullereneGraph& g)
{
    const PlanarGraph& tri = d.graph();
    if (!is_proper_coloring(tri, dc.colors, 4))
        throw Error(ErrorCode::PreconditionViolated, "dual coloring is not proper");
    TaitColoring t;
    t.edge_colors.assign(g.graph().edge_count(), EdgeClass::A);
    for (Edge e = 0; e < tri.edge_count(); ++e) {
        auto [x, y] = tri.endpoints(e);
        t.edge_colors[d.primal_edge(e)] = pair_class(dc.colors[x], dc.colors[y]);
    }
    return t;
}

bool is_proper_tait(const FullereneGraph& g, const TaitColoring& t)
{
    const PlanarGraph& pg = g.graph();
    if (static_cast<int>(t.edge_colors.size()) != pg.edge_count()) return false;
    for (Vertex v = 0; v < pg.vertex_count(); ++v) {
        std::array<int, 3> seen{};
        for (HalfEdge h : pg.rotation(v)) ++seen[static_cast<int>(t.edge_colors[PlanarGraph::edge_of(h)])];
        if (seen != std::array<int, 3>{1, 1, 1}) return false;
    }
    return true;
}

bool triangles_rainbow(const DualTriangulation& d, const TaitColoring& t)
{
    const PlanarGraph& tri = d.graph();
    for (Face f = 0; f < tri.face_count(); ++f) {
        if (tri.face_size(f) != 3) return false;
        std::array<int, 3> seen{};
        for (HalfEdge h : tri.face(f))
            ++seen[static_cast<int>(t.edge_colors[d.primal_edge(PlanarGraph::edge_of(h))])];
        if (seen != std::array<int, 3>{1, 1, 1}) return false;
    }
    return true;
}

}  // namespace fullerene
