#include "fullerene/witness.hpp"

#include <algorithm>
#include <set>

namespace fullerene {

std::vector<Vertex> Patch::vertices() const
{
    std::vector<Vertex> out{center};
    out.insert(out.end(), inner_ring.begin(), inner_ring.end());
    out.insert(out.end(), boundary_cycle.begin(), boundary_cycle.end());
    return out;
}

std::vector<Vertex> degree5_set(const DualTriangulation& d)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < d.graph().vertex_count(); ++v)
        if (d.graph().degree(v) == 5) out.push_back(v);
    return out;
}

int witness_lower_bound(int faces)
{
    const int excess = faces - 192;
    return excess > 0 ? (excess + 60) / 61 : 0;
}

namespace {

[[noreturn]] void degenerate(Vertex v, const std::string& what)
{
    throw Error(ErrorCode::PatchDegenerate, "witness " + std::to_string(v) + ": " + what);
}

}  // namespace

Patch extract_patch(const DualTriangulation& d, Vertex v)
{
    const PlanarGraph& g = d.graph();
    if (v < 0 || v >= g.vertex_count())
        throw Error(ErrorCode::PreconditionViolated, "vertex out of range");
    if (g.degree(v) != 6)
        throw Error(ErrorCode::PreconditionViolated,
                    "witness " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    {
        const auto u = degree5_set(d);
        const auto dist = bfs_distance(g, u);
        if (dist[v] < 3)
            throw Error(ErrorCode::PreconditionViolated,
                        "witness " + std::to_string(v) + " is within distance 2 of a pentagon");
    }

    Patch patch;
    patch.center = v;
    const auto ring = g.neighbors(v);
    std::copy(ring.begin(), ring.end(), patch.inner_ring.begin());

    // Walk each inner vertex's rotation starting from the center, heading
    // toward the next inner vertex: center, e_{i+1}, r_i, corner_i, r_{i-1}, e_{i-1}.
    std::array<Vertex, 6> r_from_left{};
    std::array<Vertex, 6> r_from_right{};
    for (int i = 0; i < 6; ++i) {
        const Vertex e = ring[i];
        const Vertex next = ring[(i + 1) % 6];
        const Vertex prev = ring[(i + 5) % 6];
        if (g.degree(e) != 6) degenerate(v, "inner vertex " + std::to_string(e) + " is not of degree 6");
        const auto nb = g.neighbors(e);
        const auto at = [&](int k) { return nb[((k % 6) + 6) % 6]; };
        const int p = static_cast<int>(std::find(nb.begin(), nb.end(), v) - nb.begin());
        int s = 0;
        if (at(p + 1) == next && at(p - 1) == prev)
            s = 1;
        else if (at(p - 1) == next && at(p + 1) == prev)
            s = -1;
        else
            degenerate(v, "inner ring is not a 6-cycle in rotation order");
        r_from_left[i] = at(p + 2 * s);
        patch.corners[i] = at(p + 3 * s);
        r_from_right[(i + 5) % 6] = at(p + 4 * s);
    }
    for (int i = 0; i < 6; ++i) {
        if (r_from_left[i] != r_from_right[i])
            degenerate(v, "triangles beyond the inner ring do not close up");
        patch.r_star[i] = r_from_left[i];
        patch.boundary_cycle[2 * i] = patch.corners[i];
        patch.boundary_cycle[2 * i + 1] = patch.r_star[i];
    }

    const auto all = patch.vertices();
    if (std::set<Vertex>(all.begin(), all.end()).size() != 19)
        degenerate(v, "fewer than 19 distinct vertices within distance 2");

    const auto& cyc = patch.boundary_cycle;
    for (int i = 0; i < 12; ++i) {
        for (int j = i + 1; j < 12; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == 11);
            if (g.adjacent(cyc[i], cyc[j]) != consecutive)
                degenerate(v, consecutive ? "boundary is not a cycle" : "boundary 12-cycle has a chord");
        }
    }
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (g.adjacent(patch.r_star[i], patch.r_star[j])) degenerate(v, "R* is not independent");

    for (int i = 0; i < 6; ++i) {
        int star = 0, other = 0;
        for (Vertex b : patch.r_star) star += g.adjacent(ring[i], b) ? 1 : 0;
        for (Vertex b : patch.corners) other += g.adjacent(ring[i], b) ? 1 : 0;
        if (star != 2 || other != 1) degenerate(v, "inner vertex does not see 2 R* and 1 corner");
    }
    // The R* class is the one whose members touch two inner vertices.
    for (int i = 0; i < 6; ++i) {
        int inner = 0;
        for (Vertex e : ring) inner += g.adjacent(patch.r_star[i], e) ? 1 : 0;
        if (inner != 2) degenerate(v, "R* vertex does not touch two inner vertices");
    }
    return patch;
}

WitnessSet select_witnesses(const DualTriangulation& d, std::span<const Vertex> priority)
{
    const PlanarGraph& g = d.graph();
    const int n = g.vertex_count();
    std::vector<Vertex> order(priority.begin(), priority.end());
    if (order.empty()) {
        order.resize(n);
        for (int i = 0; i < n; ++i) order[i] = i;
    } else {
        auto sorted = order;
        std::sort(sorted.begin(), sorted.end());
        bool permutation = static_cast<int>(sorted.size()) == n;
        for (int i = 0; permutation && i < n; ++i) permutation = sorted[i] == i;
        if (!permutation)
            throw Error(ErrorCode::PreconditionViolated, "priority must be a permutation of the vertices");
    }

    WitnessSet out;
    out.face_count = n;
    std::vector<char> white(n, 0);
    const auto u = degree5_set(d);
    if (!u.empty()) {
        const auto dist = bfs_distance(g, u);
        for (Vertex x = 0; x < n; ++x) {
            if (dist[x] != -1 && dist[x] <= 2) {
                white[x] = 1;
                ++out.initial_white_count;
            }
        }
    }

    for (Vertex candidate : order) {
        if (white[candidate]) continue;
        out.greedy_order.push_back(candidate);
        int fresh = 0;
        for (Vertex x : bfs_ball(g, candidate, 4)) {
            if (!white[x]) {
                white[x] = 1;
                ++fresh;
            }
        }
        out.whitened_counts.push_back(fresh);
    }

    for (Vertex v : out.greedy_order) {
        try {
            out.patches.push_back(extract_patch(d, v));
            out.witnesses.push_back(v);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::PatchDegenerate) throw;
            out.dropped.push_back({v, e.what()});
        }
    }
    return out;
}

WitnessCheck verify_witnesses(const DualTriangulation& d, const WitnessSet& w)
{
    const PlanarGraph& g = d.graph();
    WitnessCheck check;
    auto fail = [&](std::string msg) {
        check.ok = false;
        check.failures.push_back(std::move(msg));
    };

    const auto u = degree5_set(d);
    if (u.size() != 12) fail("degree-5 set has " + std::to_string(u.size()) + " vertices");
    const auto from_u = u.empty() ? std::vector<int>(g.vertex_count(), -1) : bfs_distance(g, u);

    for (std::size_t i = 0; i < w.witnesses.size(); ++i) {
        const Vertex v = w.witnesses[i];
        if (g.degree(v) != 6) fail("witness " + std::to_string(v) + " is not of degree 6");
        if (from_u[v] != -1 && from_u[v] < 3)
            fail("witness " + std::to_string(v) + " is within distance 2 of a pentagon");
        std::vector<Vertex> src{v};
        const auto dist = bfs_distance(g, src);
        for (std::size_t j = i + 1; j < w.witnesses.size(); ++j)
            if (dist[w.witnesses[j]] != -1 && dist[w.witnesses[j]] < 5)
                fail("witnesses " + std::to_string(v) + " and " + std::to_string(w.witnesses[j]) +
                     " are closer than 5");
    }

    if (w.initial_white_count > 192) fail("more than 192 initially white vertices");
    for (int c : w.whitened_counts)
        if (c > 61) fail("a greedy step whitened more than 61 vertices");
    long whitened = w.initial_white_count;
    for (int c : w.whitened_counts) whitened += c;
    if (whitened != g.vertex_count()) fail("black vertices remain after the greedy loop");
    if (whitened > 192 + 61L * static_cast<long>(w.greedy_order.size()))
        fail("whitened total exceeds 192 + 61|W|");
    if (static_cast<int>(w.greedy_order.size()) < witness_lower_bound(g.vertex_count()))
        fail("greedy picked fewer than ceil((F - 192) / 61) witnesses");
    if (w.certified() && static_cast<int>(w.witnesses.size()) < witness_lower_bound(g.vertex_count()))
        fail("certified witness set below the size guarantee");

    std::set<Vertex> covered;
    for (const auto& p : w.patches)
        for (Vertex x : p.vertices())
            if (!covered.insert(x).second) fail("patches overlap at vertex " + std::to_string(x));
    return check;
}

}  // namespace fullerene
