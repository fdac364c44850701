#include "tpk/proof_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "tpk/canonical.hpp"
#include "tpk/exact_turan.hpp"
#include "tpk/generators.hpp"

namespace tpk {

namespace {

// Shared peel loop: `threshold(i)` is the largest degree removable when i
// vertices are alive; removal picks the lowest degree, ties lowest index.
template <typename ThresholdFn>
PeelTrace peel(const Graph& g, ThresholdFn threshold) {
    const uint32_t n = g.order();
    PeelTrace tr;
    tr.initial_edges = g.edge_count();
    std::vector<int64_t> deg(n);
    std::vector<char> alive(n, 1);
    for (uint32_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    uint32_t alive_count = n;
    uint64_t edges = g.edge_count();
    while (alive_count > 0) {
        const int64_t bar = threshold(alive_count);
        uint32_t pick = UINT32_MAX;
        for (uint32_t v = 0; v < n; ++v)
            if (alive[v] && deg[v] <= bar && (pick == UINT32_MAX || deg[v] < deg[pick])) pick = v;
        if (pick == UINT32_MAX) break;
        tr.removed.push_back({pick, (uint32_t)deg[pick], bar});
        alive[pick] = 0;
        --alive_count;
        edges -= deg[pick];
        g.for_neighbors(pick, [&](uint32_t w) {
            if (alive[w]) --deg[w];
        });
    }
    tr.final_vertices = VertexSet(n);
    for (uint32_t v = 0; v < n; ++v)
        if (alive[v]) tr.final_vertices.add(v);
    tr.final_graph = induced_subgraph(g, tr.final_vertices).graph;
    tr.final_size = alive_count;
    tr.final_edges = edges;
    return tr;
}

}  // namespace

PeelTrace peel_to_min_degree(const Graph& g, uint32_t d) {
    return peel(g, [d](uint32_t) { return (int64_t)d - 1; });
}

PeelTrace turan_peel(const Graph& g) {
    return peel(g, [](uint32_t i) { return (int64_t)(h(i) - h(i - 1)) - 1; });
}

CutResult local_max_cut(const Graph& g, uint64_t seed) {
    const uint32_t n = g.order();
    std::mt19937_64 rng(seed);
    VertexSet side1(n), side2(n);
    for (uint32_t v = 0; v < n; ++v) (rng() & 1 ? side2 : side1).add(v);
    CutResult out;
    out.seed = seed;
    bool changed = true;
    while (changed) {
        changed = false;
        for (uint32_t v = 0; v < n; ++v) {
            VertexSet& own = side1.contains(v) ? side1 : side2;
            VertexSet& other = side1.contains(v) ? side2 : side1;
            uint32_t internal = own.intersection_size(g.row(v));
            uint32_t cross = other.intersection_size(g.row(v));
            if (internal > cross) {
                own.remove(v);
                other.add(v);
                ++out.moves;
                changed = true;
            }
        }
    }
    for (uint32_t v = 0; v < n; ++v) {
        const VertexSet& own = side1.contains(v) ? side1 : side2;
        uint32_t internal = own.intersection_size(g.row(v));
        if (side1.contains(v))
            out.internal_edges_1 += internal;
        else
            out.internal_edges_2 += internal;
    }
    out.internal_edges_1 /= 2;
    out.internal_edges_2 /= 2;
    out.cross_edges = g.edge_count() - out.internal_edges_1 - out.internal_edges_2;
    out.side1 = std::move(side1);
    out.side2 = std::move(side2);
    return out;
}

StructureReport structure_report(const Graph& g, double epsilon,
                                 std::optional<std::pair<VertexSet, VertexSet>> partition,
                                 uint64_t seed, uint64_t budget) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0,1)");
    const uint32_t n = g.order();
    StructureReport rep;
    rep.epsilon = epsilon;
    rep.lambda = std::cbrt(4.0 * epsilon);
    rep.seed = seed;
    if (partition) {
        rep.partition_method = "provided";
        rep.x1 = std::move(partition->first);
        rep.x2 = std::move(partition->second);
        if (rep.x1.capacity() != n || rep.x2.capacity() != n || rep.x1.intersects(rep.x2) ||
            rep.x1.size() + rep.x2.size() != n)
            throw std::invalid_argument("partition does not split the vertex set");
    } else {
        rep.partition_method = "local_max_cut(seed=" + std::to_string(seed) + ")";
        CutResult cut = local_max_cut(g, seed);
        rep.x1 = std::move(cut.side1);
        rep.x2 = std::move(cut.side2);
    }

    for (uint32_t v = 0; v < n; ++v) {
        bool in1 = rep.x1.contains(v);
        const VertexSet& own = in1 ? rep.x1 : rep.x2;
        uint32_t internal = own.intersection_size(g.row(v));
        (in1 ? rep.internal_edges_1 : rep.internal_edges_2) += internal;
    }
    rep.internal_edges_1 /= 2;
    rep.internal_edges_2 /= 2;
    rep.cross_edges = g.edge_count() - rep.internal_edges_1 - rep.internal_edges_2;

    rep.eps_bound = epsilon * (double)n * (double)n;
    rep.eps_ok = (double)(rep.internal_edges_1 + rep.internal_edges_2) < rep.eps_bound;

    rep.claim1_bound = (0.5 + std::sqrt(epsilon)) * n;
    rep.claim1_ok =
        (double)rep.x1.size() <= rep.claim1_bound && (double)rep.x2.size() <= rep.claim1_bound;

    const double lam_n = rep.lambda * n;
    rep.r1 = VertexSet(n);
    rep.r2 = VertexSet(n);
    for (uint32_t v = 0; v < n; ++v) {
        bool in1 = rep.x1.contains(v);
        const VertexSet& own = in1 ? rep.x1 : rep.x2;
        if ((double)own.intersection_size(g.row(v)) > lam_n) (in1 ? rep.r1 : rep.r2).add(v);
    }
    VertexSet r_all = rep.r1;
    r_all |= rep.r2;
    rep.r_size = r_all.size();
    rep.r_ratio = n ? (double)rep.r_size / n : 0.0;
    rep.claim2_bound = lam_n / 2.0;
    rep.claim2_ok = !((double)rep.r_size > rep.claim2_bound);

    rep.w1 = rep.x1;
    rep.w1.subtract(r_all);
    rep.w2 = rep.x2;
    rep.w2.subtract(r_all);

    rep.claim3_bound = (double)(n / 2) - 1.5 * lam_n;
    rep.claim3_ok = true;
    rep.min_cross_degree_w1 = UINT32_MAX;
    rep.min_cross_degree_w2 = UINT32_MAX;
    for (int side = 1; side <= 2; ++side) {
        const VertexSet& w_own = side == 1 ? rep.w1 : rep.w2;
        const VertexSet& w_opp = side == 1 ? rep.w2 : rep.w1;
        uint32_t& min_cross = side == 1 ? rep.min_cross_degree_w1 : rep.min_cross_degree_w2;
        w_own.for_each([&](uint32_t u) {
            uint32_t c = w_opp.intersection_size(g.row(u));
            min_cross = std::min(min_cross, c);
            if (!((double)c > rep.claim3_bound) && rep.claim3_ok) {
                rep.claim3_ok = false;
                rep.claim3_violator = u;
            }
        });
    }
    if (rep.min_cross_degree_w1 == UINT32_MAX) rep.min_cross_degree_w1 = 0;
    if (rep.min_cross_degree_w2 == UINT32_MAX) rep.min_cross_degree_w2 = 0;

    rep.claim4_ok = true;
    const Graph f = graph_f();
    for (int side = 1; side <= 2 && rep.claim4_ok; ++side) {
        const VertexSet& w = side == 1 ? rep.w1 : rep.w2;
        InducedSubgraph sub = induced_subgraph(g, w);
        FreeResult fr = is_free(sub.graph, f, budget);
        if (fr.verdict == Freeness::NotFree) {
            rep.claim4_ok = false;
            rep.claim4_side = (uint32_t)side;
            Embedding e = fr.witness;
            for (uint32_t& hv : e.map) hv = sub.vertex_of[hv];
            rep.claim4_witness = std::move(e);
        } else if (fr.verdict == Freeness::Inconclusive) {
            rep.claim4_conclusive = false;
        }
    }
    return rep;
}

std::optional<VertexSet> find_common_neighbors(const Graph& g, const VertexSet& y,
                                               const VertexSet& candidates, uint32_t k) {
    if (y.empty()) throw std::invalid_argument("y must be nonempty");
    VertexSet common = candidates;
    y.for_each([&](uint32_t v) {
        kernels::active().and_into(common.words().data(), common.words().data(),
                                   g.row(v).data(), g.words());
    });
    if (common.size() < k) return std::nullopt;
    VertexSet out(g.order());
    uint32_t v = common.next(0);
    for (uint32_t i = 0; i < k; ++i, v = common.next(v + 1)) out.add(v);
    return out;
}

std::optional<Embedding> extend_cycle_to_f(const Graph& g, const Embedding& c6) {
    if (!verify_embedding(cycle_graph(6), g, c6))
        throw std::invalid_argument("c6 is not a valid 6-cycle embedding");
    const auto& c = c6.map;
    for (int rot = 0; rot < 6; ++rot)
        for (int dir : {1, -1}) {
            // cycle positions as x_3..x_8 (0-indexed F vertices 2..7)
            uint32_t ring[6];
            for (int j = 0; j < 6; ++j) ring[j] = c[(rot + dir * j + 12) % 6];
            VertexSet used(g.order());
            for (uint32_t v : ring) used.add(v);
            auto attach = [&](uint32_t anchor) -> std::optional<uint32_t> {
                uint32_t best = UINT32_MAX;
                g.for_neighbors(anchor, [&](uint32_t w) {
                    if (!used.contains(w) && w < best) best = w;
                });
                if (best == UINT32_MAX) return std::nullopt;
                used.add(best);
                return best;
            };
            auto x2 = attach(ring[0]);  // neighbor of x_3
            if (!x2) continue;
            auto x1 = attach(*x2);
            if (!x1) continue;
            auto x9 = attach(ring[5]);  // neighbor of x_8
            if (!x9) continue;
            auto x10 = attach(*x9);
            if (!x10) continue;
            Embedding f;
            f.map = {*x1,    *x2,     ring[0], ring[1], ring[2],
                     ring[3], ring[4], ring[5], *x9,     *x10};
            return f;
        }
    return std::nullopt;
}

Tp4Coloring tp4_coloring() {
    const Graph tp4 = triangular_pyramid(4).graph;
    const Graph f = graph_f();
    const std::string f_code = canonical_code(f);
    const uint32_t n = tp4.order();
    std::vector<uint8_t> color(n, 0);

    auto check = [&](Tp4Coloring& out) -> bool {
        for (auto [a, b] : std::initializer_list<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
            VertexSet u(n), v3(n);
            for (uint32_t v = 0; v < n; ++v)
                (color[v] == a || color[v] == b ? u : v3).add(v);
            if (u.size() != 10 || v3.size() != 5) continue;
            bool indep = true;
            v3.for_each([&](uint32_t v) {
                if (v3.intersects(tp4.row(v))) indep = false;
            });
            if (!indep) continue;
            InducedSubgraph sub = induced_subgraph(tp4, u);
            if (canonical_code(sub.graph) != f_code) continue;
            FindResult iso = find_embedding(f, sub.graph);
            if (iso.status != FindStatus::Found)
                throw std::logic_error("equal canonical codes but no isomorphism found");
            out.v1 = VertexSet(n);
            out.v2 = VertexSet(n);
            out.v3 = v3;
            for (uint32_t v = 0; v < n; ++v) {
                if (color[v] == a) out.v1.add(v);
                if (color[v] == b) out.v2.add(v);
            }
            out.f_iso.map.resize(10);
            for (uint32_t fv = 0; fv < 10; ++fv)
                out.f_iso.map[fv] = sub.vertex_of[iso.embedding.map[fv]];
            return true;
        }
        return false;
    };

    Tp4Coloring out;
    auto rec = [&](auto&& self, uint32_t v) -> bool {
        if (v == n) return check(out);
        for (uint8_t col = 1; col <= 3; ++col) {
            bool ok = true;
            tp4.for_neighbors(v, [&](uint32_t w) {
                if (w < v && color[w] == col) ok = false;
            });
            if (!ok) continue;
            color[v] = col;
            if (self(self, v + 1)) return true;
            color[v] = 0;
        }
        return false;
    };
    if (!rec(rec, 0))
        throw std::logic_error(
            "no proper 3-coloring of the 4-layer pyramid splits into the chorded "
            "path plus an independent 5-set; construction invariant violated");
    return out;
}

Tp4Witness embed_tp4_constructive(uint32_t s, uint32_t t) {
    if (s < 10) throw std::invalid_argument("s must be >= 10 to hold the planted graph");
    if (t < 5) throw std::invalid_argument("t must be >= 5 to hold the independent class");
    std::vector<Edge> edges;
    for (uint32_t u = 0; u < s; ++u)
        for (uint32_t v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    for (auto [u, v] : graph_f().edges()) edges.emplace_back(u, v);
    Graph host = Graph::from_edges(s + t, edges);

    Tp4Coloring col = tp4_coloring();
    Tp4Witness out;
    out.host = std::move(host);
    out.embedding.map.assign(15, 0);
    for (uint32_t fv = 0; fv < 10; ++fv) out.embedding.map[col.f_iso.map[fv]] = fv;
    uint32_t slot = 0;
    col.v3.for_each([&](uint32_t v) { out.embedding.map[v] = s + slot++; });
    return out;
}

}  // namespace tpk
