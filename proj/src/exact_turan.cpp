#include "tpk/exact_turan.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "tpk/canonical.hpp"
#include "tpk/errors.hpp"
#include "tpk/generators.hpp"
#include "tpk/graph6.hpp"
#include "tpk/subiso.hpp"

namespace tpk {

namespace {

// search-local adjacency: one word per vertex, n <= 12
using Rows = std::vector<uint16_t>;

Graph rows_to_graph(const Rows& rows) {
    std::vector<Edge> edges;
    const uint32_t n = (uint32_t)rows.size();
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v)
            if ((rows[u] >> v) & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

struct SmallPattern {
    uint32_t pn = 0;
    std::array<uint16_t, 12> rows{};
    std::vector<Edge> edges;
};

// Does host+{hu,hv} contain the pattern? Since the host without that edge is
// pattern-free, any copy must map some pattern edge onto {hu,hv}; anchor each
// pattern edge there in both orientations and backtrack over the rest,
// always extending at an unmapped pattern vertex with the most mapped
// neighbors.
bool anchored_rec(const SmallPattern& pat, const Rows& host, std::array<int8_t, 12>& pmap,
                  uint16_t used, uint32_t mapped) {
    if (mapped == pat.pn) return true;
    uint32_t best = UINT32_MAX, best_cnt = 0;
    for (uint32_t p = 0; p < pat.pn; ++p) {
        if (pmap[p] >= 0) continue;
        uint32_t cnt = 0;
        uint16_t nb = pat.rows[p];
        while (nb) {
            if (pmap[std::countr_zero(nb)] >= 0) ++cnt;
            nb &= (uint16_t)(nb - 1);
        }
        if (best == UINT32_MAX || cnt > best_cnt) best = p, best_cnt = cnt;
    }
    uint16_t cand = (uint16_t)(((1u << host.size()) - 1) & ~used);
    uint16_t nb = pat.rows[best];
    while (nb && cand) {
        uint32_t q = std::countr_zero(nb);
        nb &= (uint16_t)(nb - 1);
        if (pmap[q] >= 0) cand &= host[pmap[q]];
    }
    while (cand) {
        uint32_t h = std::countr_zero(cand);
        cand &= (uint16_t)(cand - 1);
        pmap[best] = (int8_t)h;
        if (anchored_rec(pat, host, pmap, (uint16_t)(used | (1u << h)), mapped + 1)) return true;
        pmap[best] = -1;
    }
    return false;
}

bool creates_pattern(const SmallPattern& pat, const Rows& host, uint32_t hu, uint32_t hv) {
    std::array<int8_t, 12> pmap;
    for (auto [pa, pb] : pat.edges)
        for (int flip = 0; flip < 2; ++flip) {
            uint32_t a = flip ? pb : pa, b = flip ? pa : pb;
            pmap.fill(-1);
            pmap[a] = (int8_t)hu;
            pmap[b] = (int8_t)hv;
            if (anchored_rec(pat, host, pmap, (uint16_t)((1u << hu) | (1u << hv)), 2))
                return true;
        }
    return false;
}

}  // namespace

TuranRecord exact_ex(uint32_t n, const Graph& pattern, uint64_t budget, uint32_t max_n) {
    if (n < 1) throw std::invalid_argument("exact_ex needs n >= 1");
    if (pattern.edge_count() == 0)
        throw std::invalid_argument("pattern needs at least one edge");
    if (!is_connected(pattern)) throw std::invalid_argument("pattern must be connected");

    TuranRecord rec;
    rec.n = n;
    rec.pattern_code = pattern.order() <= kCanonicalMaxVertices ? canonical_code(pattern)
                                                                : encode_graph6(pattern);

    // a pattern with more vertices than the host cannot embed at all
    if (pattern.order() > n) {
        rec.value = (uint64_t)n * (n - 1) / 2;
        rec.witnesses = {encode_graph6(complete_graph(n))};
        return rec;
    }

    if (max_n > kHardExactMaxN) max_n = kHardExactMaxN;
    if (n > max_n)
        throw capability_error("exact_ex limited to n <= " + std::to_string(max_n) +
                               " for this pattern, got n = " + std::to_string(n));

    SmallPattern pat;
    pat.pn = pattern.order();
    for (uint32_t v = 0; v < pat.pn; ++v) {
        uint16_t row = 0;
        pattern.for_neighbors(v, [&](uint32_t w) { row |= (uint16_t)(1u << w); });
        pat.rows[v] = row;
    }
    pat.edges = pattern.edges();

    // T_2(n) is pattern-free whenever the pattern is non-bipartite
    uint64_t incumbent = is_bipartite(pattern) ? 0 : h(n);

    uint64_t nodes = 0;
    bool out_of_budget = false;

    std::map<std::string, Rows> level;
    level.emplace(canonical_code(Graph::from_edges(n, {})), Rows(n, 0));

    uint64_t value = 0;
    std::vector<std::string> witnesses;

    Rows child(n, 0);
    for (uint32_t m = 0; !level.empty(); ++m) {
        value = m;
        witnesses.clear();
        for (const auto& [code, rows] : level) witnesses.push_back(code);

        std::map<std::string, Rows> next;
        for (const auto& [code, rows] : level) {
            if (++nodes > budget) {
                out_of_budget = true;
                break;
            }
            // additions that keep the graph pattern-free
            std::vector<Edge> safe;
            for (uint32_t u = 0; u < n; ++u)
                for (uint32_t v = u + 1; v < n; ++v) {
                    if ((rows[u] >> v) & 1) continue;
                    ++nodes;
                    if (!creates_pattern(pat, rows, u, v)) safe.emplace_back(u, v);
                }
            // optimistic completion: every edge of a pattern-free supergraph
            // of this graph must be individually addable here
            if ((uint64_t)m + safe.size() < incumbent) continue;
            for (auto [u, v] : safe) {
                child = rows;
                child[u] |= (uint16_t)(1u << v);
                child[v] |= (uint16_t)(1u << u);
                next.emplace(canonical_code(rows_to_graph(child)), child);
            }
        }
        if (out_of_budget) break;
        if (!next.empty()) incumbent = std::max<uint64_t>(incumbent, m + 1);
        level = std::move(next);
    }

    rec.nodes_explored = nodes;
    rec.status = out_of_budget ? RecordStatus::BudgetExceeded : RecordStatus::Exact;
    if (out_of_budget && !is_bipartite(pattern) && h(n) > value) {
        // the seeded T_2(n) bound is better than anything the cut-off
        // search reached
        rec.value = h(n);
        rec.witnesses = {canonical_code(turan_graph(n, 2))};
        return rec;
    }
    rec.value = value;
    rec.witnesses = std::move(witnesses);
    return rec;
}

RecordCheck verify_record(const TuranRecord& r) {
    Graph pattern;
    try {
        pattern = decode_graph6(r.pattern_code);
    } catch (const std::exception& e) {
        return {false, std::string("pattern code undecodable: ") + e.what()};
    }
    if (r.witnesses.empty()) return {false, "record carries no witnesses"};
    for (const std::string& w : r.witnesses) {
        Graph g;
        try {
            g = decode_graph6(w);
        } catch (const std::exception& e) {
            return {false, "witness " + w + " undecodable: " + e.what()};
        }
        if (g.order() != r.n)
            return {false, "witness " + w + " has " + std::to_string(g.order()) +
                               " vertices, record says n=" + std::to_string(r.n)};
        if (g.edge_count() != r.value)
            return {false, "witness " + w + " has " + std::to_string(g.edge_count()) +
                               " edges, record claims " + std::to_string(r.value)};
        if (find_embedding(pattern, g).status != FindStatus::None)
            return {false, "witness " + w + " contains the pattern"};
    }
    return {true, ""};
}

}  // namespace tpk
