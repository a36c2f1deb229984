#include "fullerene/matchings.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace fullerene {

std::string_view to_string(MatchingSource s)
{
    switch (s) {
    case MatchingSource::ClassA: return "class-a";
    case MatchingSource::ClassB: return "class-b";
    case MatchingSource::ClassC: return "class-c";
    case MatchingSource::Switched: return "switched";
    case MatchingSource::Enumerated: return "enumerated";
    }
    return "unknown";
}

bool is_perfect_matching(const PlanarGraph& g, std::span<const Edge> edges)
{
    if (2 * static_cast<long>(edges.size()) != g.vertex_count()) return false;
    std::vector<int> cover(g.vertex_count(), 0);
    for (Edge e : edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        auto [u, v] = g.endpoints(e);
        if (++cover[u] > 1 || ++cover[v] > 1) return false;
    }
    return true;
}

void validate_matching(const PlanarGraph& g, const PerfectMatching& m)
{
    if (!is_perfect_matching(g, m.edges))
        throw Error(ErrorCode::InvalidMatching, std::string(to_string(m.source)) + " matching is not perfect");
}

std::array<PerfectMatching, 3> class_matchings(const FullereneGraph& g, const TaitColoring& t)
{
    std::array<PerfectMatching, 3> out;
    out[0].source = MatchingSource::ClassA;
    out[1].source = MatchingSource::ClassB;
    out[2].source = MatchingSource::ClassC;
    for (Edge e = 0; e < g.graph().edge_count(); ++e)
        out[static_cast<int>(t.edge_colors[e])].edges.push_back(e);
    for (const auto& m : out) validate_matching(g.graph(), m);
    return out;
}

namespace {

std::vector<char> edge_mask(const PlanarGraph& g, std::span<const Edge> edges)
{
    std::vector<char> mask(g.edge_count(), 0);
    for (Edge e : edges) mask[e] = 1;
    return mask;
}

bool faces_disjoint(const PlanarGraph& g, std::span<const Face> faces)
{
    std::set<Vertex> seen;
    for (Face f : faces)
        for (Vertex v : g.face_vertices(f))
            if (!seen.insert(v).second) return false;
    return true;
}

}  // namespace

ResonantSet resonant_faces(const PlanarGraph& g, const PerfectMatching& m, std::optional<std::span<const Face>> only)
{
    validate_matching(g, m);
    const auto in_m = edge_mask(g, m.edges);
    std::vector<Face> candidates;
    if (only) {
        candidates.assign(only->begin(), only->end());
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    } else {
        candidates.resize(g.face_count());
        std::iota(candidates.begin(), candidates.end(), 0);
    }
    ResonantSet out;
    out.matching = m;
    for (Face f : candidates) {
        if (g.face_size(f) != 6) continue;
        int hits = 0;
        for (HalfEdge h : g.face(f)) hits += in_m[PlanarGraph::edge_of(h)];
        if (hits == 3) out.faces.push_back(f);
    }
    out.disjoint = faces_disjoint(g, out.faces);
    return out;
}

BestClass best_class(const FullereneGraph& g, const DualTriangulation& d, const TaitColoring& t,
                     const WitnessSet& w)
{
    const PlanarGraph& pg = g.graph();
    const auto classes = class_matchings(g, t);
    std::array<std::vector<char>, 3> in_class;
    for (int k = 0; k < 3; ++k) in_class[k] = edge_mask(pg, classes[k].edges);

    BestClass out;
    std::array<std::vector<Face>, 3> forced;
    for (const Patch& patch : w.patches) {
        std::array<int, 6> multiplicity{};
        for (int j = 0; j < 6; ++j) {
            const Vertex e = patch.inner_ring[j];
            const Face f = d.primal_face(e);
            const auto dual_edge = d.graph().find_edge(patch.center, e);
            if (!dual_edge) throw Error(ErrorCode::Internal, "witness is not adjacent to its inner ring");
            const int k = static_cast<int>(t.edge_colors[d.primal_edge(*dual_edge)]);
            forced[k].push_back(f);
            ++out.forced_counts[k];
            for (int c = 0; c < 3; ++c) {
                int hits = 0;
                for (HalfEdge h : pg.face(f)) hits += in_class[c][PlanarGraph::edge_of(h)];
                if (pg.face_size(f) == 6 && hits == 3) {
                    ++out.resonant_counts[c];
                    ++multiplicity[j];
                }
            }
        }
        out.class_multiplicity.push_back(multiplicity);
    }

    int best = 0;
    for (int k = 1; k < 3; ++k)
        if (forced[k].size() > forced[best].size()) best = k;
    out.cls = static_cast<EdgeClass>(best);
    out.resonant = resonant_faces(pg, classes[best], std::span<const Face>(forced[best]));
    if (out.resonant.faces.size() != forced[best].size())
        throw Error(ErrorCode::NotResonant, "a witness-adjacent hexagon is not resonant in its forced class");
    if (out.resonant.faces.size() < 2 * w.patches.size())
        throw Error(ErrorCode::PigeonholeViolated,
                    "best class holds " + std::to_string(out.resonant.faces.size()) +
                        " resonant hexagons for " + std::to_string(w.patches.size()) + " witnesses");
    if (!out.resonant.disjoint)
        throw Error(ErrorCode::NotDisjoint, "resonant hexagons of the best class overlap");
    return out;
}

SwitchResult switch_enumerate(const PlanarGraph& g, const PerfectMatching& m, std::span<const Face> faces,
                              std::uint64_t cap)
{
    validate_matching(g, m);
    const auto base = edge_mask(g, m.edges);
    for (Face f : faces) {
        if (g.face_size(f) != 6)
            throw Error(ErrorCode::NotResonant, "face " + std::to_string(f) + " is not a hexagon");
        int hits = 0;
        for (HalfEdge h : g.face(f)) hits += base[PlanarGraph::edge_of(h)];
        if (hits != 3) throw Error(ErrorCode::NotResonant, "face " + std::to_string(f) + " is not resonant");
    }
    if (!faces_disjoint(g, faces)) throw Error(ErrorCode::NotDisjoint, "hexagons share a vertex");

    SwitchResult out;
    mpz_ui_pow_ui(out.count.get_mpz_t(), 2, faces.size());
    std::uint64_t limit = cap;
    if (faces.size() < 64) limit = std::min<std::uint64_t>(cap, std::uint64_t{1} << faces.size());
    out.complete = BigInt(std::to_string(limit)) == out.count;

    out.matchings.reserve(limit);
    std::vector<char> mask;
    for (std::uint64_t subset = 0; subset < limit; ++subset) {
        mask = base;
        for (std::size_t i = 0; i < faces.size() && i < 64; ++i)
            if (subset >> i & 1)
                for (HalfEdge h : g.face(faces[i])) mask[PlanarGraph::edge_of(h)] ^= 1;
        PerfectMatching sw;
        sw.source = MatchingSource::Switched;
        sw.edges.reserve(m.edges.size());
        for (Edge e = 0; e < g.edge_count(); ++e)
            if (mask[e]) sw.edges.push_back(e);
        validate_matching(g, sw);
        out.matchings.push_back(std::move(sw));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exact counting

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a)
{
    const std::size_t n = a.size();
    if (n == 0) return 1;
    for (const auto& row : a)
        if (row.size() != n) throw Error(ErrorCode::PreconditionViolated, "matrix is not square");

    int sign = 1;
    BigInt prev = 1;
    BigInt tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        const mpz_srcptr akk = a[k][k].get_mpz_t();
        for (std::size_t i = k + 1; i < n; ++i) {
            const mpz_srcptr aik = a[i][k].get_mpz_t();
            const bool zero_lead = mpz_sgn(aik) == 0;
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_ptr aij = a[i][j].get_mpz_t();
                // a_ij <- (a_ij * a_kk - a_ik * a_kj) / prev, exactly.
                mpz_mul(tmp.get_mpz_t(), aij, akk);
                if (!zero_lead) mpz_submul(tmp.get_mpz_t(), aik, a[k][j].get_mpz_t());
                mpz_divexact(aij, tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::vector<int> pfaffian_orientation(const PlanarGraph& g)
{
    if (!g.is_planar()) throw Error(ErrorCode::NonPlanar, "Pfaffian orientation needs a planar embedding");
    const int n = g.vertex_count();
    std::vector<int> dir(g.edge_count(), 0);
    std::vector<char> tree(g.edge_count(), 0);

    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<Vertex> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            for (HalfEdge h : g.rotation(queue[i])) {
                if (seen[g.head(h)]) continue;
                seen[g.head(h)] = 1;
                tree[PlanarGraph::edge_of(h)] = 1;
                dir[PlanarGraph::edge_of(h)] = 1;
                queue.push_back(g.head(h));
            }
        }
    }

    // Faces linked by non-tree edges form a spanning forest of the dual;
    // fix parities from the leaves towards one root face per component.
    const int faces = g.face_count();
    std::vector<Edge> parent_edge(faces, -1);
    std::vector<char> reached(faces, 0);
    std::vector<Face> order;
    for (Face root = 0; root < faces; ++root) {
        if (reached[root]) continue;
        reached[root] = 1;
        order.push_back(root);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
            for (HalfEdge h : g.face(order[i])) {
                const Edge e = PlanarGraph::edge_of(h);
                if (tree[e]) continue;
                const Face other = g.face_of(PlanarGraph::twin(h));
                if (reached[other]) continue;
                reached[other] = 1;
                parent_edge[other] = e;
                order.push_back(other);
            }
        }
    }
    auto along = [&](HalfEdge h) { return (h % 2 == 0) == (dir[PlanarGraph::edge_of(h)] == 1); };
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Face f = *it;
        const Edge pe = parent_edge[f];
        if (pe == -1) continue;
        int count = 0;
        HalfEdge pe_half = -1;
        for (HalfEdge h : g.face(f)) {
            if (PlanarGraph::edge_of(h) == pe) {
                pe_half = h;
                continue;
            }
            if (dir[PlanarGraph::edge_of(h)] == 0)
                throw Error(ErrorCode::Internal, "face has an unoriented edge besides its parent");
            count += along(h) ? 1 : 0;
        }
        // Orient the parent edge along this face iff the count so far is even.
        const bool want_along = count % 2 == 0;
        dir[pe] = ((pe_half % 2 == 0) == want_along) ? 1 : -1;
    }
    return dir;
}

BigInt pfaffian_determinant(const PlanarGraph& g)
{
    const auto dir = pfaffian_orientation(g);
    const int n = g.vertex_count();
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (dir[e] == -1) std::swap(u, v);
        a[u][v] += 1;
        a[v][u] -= 1;
    }
    return bareiss_determinant(std::move(a));
}

BigInt count_perfect_matchings(const PlanarGraph& g)
{
    if (!g.is_planar()) throw Error(ErrorCode::NonPlanar, "counting needs a planar embedding");
    if (g.vertex_count() % 2 != 0) return 0;
    const BigInt det = pfaffian_determinant(g);
    if (det < 0) throw Error(ErrorCode::Internal, "skew-symmetric determinant is negative");
    BigInt root;
    mpz_sqrt(root.get_mpz_t(), det.get_mpz_t());
    if (root * root != det) throw Error(ErrorCode::Internal, "Pfaffian determinant is not a perfect square");
    return root;
}

std::vector<PerfectMatching> brute_enumerate(const PlanarGraph& g, std::uint64_t cap)
{
    const int n = g.vertex_count();
    std::vector<PerfectMatching> out;
    if (n % 2 != 0) return out;
    std::vector<std::vector<std::pair<Edge, Vertex>>> incident(n);
    for (Edge e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        incident[u].emplace_back(e, v);
        incident[v].emplace_back(e, u);
    }
    std::vector<char> covered(n, 0);
    std::vector<Edge> chosen;
    std::function<void(Vertex)> go = [&](Vertex from) {
        while (from < n && covered[from]) ++from;
        if (from == n) {
            if (out.size() >= cap)
                throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " perfect matchings");
            PerfectMatching m;
            m.edges = chosen;
            std::sort(m.edges.begin(), m.edges.end());
            out.push_back(std::move(m));
            return;
        }
        covered[from] = 1;
        for (auto [e, w] : incident[from]) {
            if (covered[w]) continue;
            covered[w] = 1;
            chosen.push_back(e);
            go(from + 1);
            chosen.pop_back();
            covered[w] = 0;
        }
        covered[from] = 0;
    };
    go(0);
    return out;
}

// ---------------------------------------------------------------------------
// Bounds

Rational Rational::make(long num, long den)
{
    if (den == 0) throw Error(ErrorCode::Internal, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long g = std::gcd(num < 0 ? -num : num, den);
    return {num / g, den / g};
}

std::string Rational::str() const
{
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational theorem1_exponent(long p)
{
    return Rational::make(p - 380, 61);
}

BigInt ceil_pow2(const Rational& e)
{
    // Smallest k with k^den >= 2^num.
    if (e.num <= 0) return 1;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(e.num));
    BigInt root;
    const int exact = mpz_root(root.get_mpz_t(), power.get_mpz_t(), static_cast<unsigned long>(e.den));
    return exact ? root : root + 1;
}

bool at_least_pow2(const BigInt& value, const Rational& e)
{
    if (value <= 0) return false;
    // value >= 2^(num/den)  <=>  value^den >= 2^num
    BigInt lhs;
    mpz_pow_ui(lhs.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(e.den));
    if (e.num >= 0) {
        BigInt rhs;
        mpz_ui_pow_ui(rhs.get_mpz_t(), 2, static_cast<unsigned long>(e.num));
        return lhs >= rhs;
    }
    return true;
}

LowerBounds lower_bounds(long p)
{
    if (p < 20 || p % 2 != 0)
        throw Error(ErrorCode::BadVertexCount, "p = " + std::to_string(p) + " is not an even count >= 20");
    LowerBounds b;
    b.p = p;
    b.theorem1_exponent = theorem1_exponent(p);
    b.theorem1 = std::exp2(b.theorem1_exponent.value());
    b.zz = (3 * BigInt(p + 2) + 3) / 4;
    b.km_exponent = Rational::make(p - 10, 20);
    b.km = 15.0 * std::exp2(b.km_exponent.value());
    b.corollary_exponent = b.theorem1_exponent;
    b.corollary = b.theorem1;
    return b;
}

}  // namespace fullerene
