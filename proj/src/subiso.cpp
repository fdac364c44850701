#include "tpk/subiso.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "tpk/errors.hpp"

namespace tpk {

namespace {

// Connectivity-respecting, most-constrained-first static order: start at the
// highest-degree vertex, then repeatedly take the highest-degree vertex
// adjacent to the ordered prefix (falling back to all unordered vertices at
// component boundaries). Ties break to the smaller index.
std::vector<uint32_t> pattern_order(const Graph& pattern) {
    const uint32_t pn = pattern.order();
    std::vector<uint32_t> order;
    order.reserve(pn);
    std::vector<char> placed(pn, 0), touched(pn, 0);
    for (uint32_t step = 0; step < pn; ++step) {
        uint32_t best = UINT32_MAX;
        bool best_touched = false;
        for (uint32_t v = 0; v < pn; ++v) {
            if (placed[v]) continue;
            if (best == UINT32_MAX || (touched[v] && !best_touched) ||
                (touched[v] == best_touched && pattern.degree(v) > pattern.degree(best)))
                best = v, best_touched = touched[v];
        }
        placed[best] = 1;
        order.push_back(best);
        pattern.for_neighbors(best, [&](uint32_t w) { touched[w] = 1; });
    }
    return order;
}

}  // namespace

FindResult find_embedding(const Graph& pattern, const Graph& host, uint64_t budget) {
    const uint32_t pn = pattern.order(), hn = host.order();
    if (pn < 1) throw std::invalid_argument("pattern must have at least one vertex");
    if (pn > hn) return {FindStatus::None, {}, 0};

    std::vector<uint32_t> order = pattern_order(pattern);
    // positions of already-ordered pattern neighbors, per depth
    std::vector<std::vector<uint32_t>> prior(pn);
    std::vector<uint32_t> pos_of(pn);
    for (uint32_t k = 0; k < pn; ++k) pos_of[order[k]] = k;
    for (uint32_t k = 0; k < pn; ++k)
        pattern.for_neighbors(order[k], [&](uint32_t w) {
            if (pos_of[w] < k) prior[k].push_back(pos_of[w]);
        });

    // host vertices with enough degree, per depth
    std::vector<uint32_t> host_deg(hn);
    for (uint32_t h = 0; h < hn; ++h) host_deg[h] = host.degree(h);
    std::vector<VertexSet> deg_ok(pn, VertexSet(hn));
    for (uint32_t k = 0; k < pn; ++k) {
        uint32_t need = pattern.degree(order[k]);
        for (uint32_t h = 0; h < hn; ++h)
            if (host_deg[h] >= need) deg_ok[k].add(h);
    }

    std::vector<VertexSet> cand(pn, VertexSet(hn));
    std::vector<uint32_t> map_by_pos(pn);
    VertexSet used(hn);
    uint64_t nodes = 0;
    bool out_of_budget = false;

    auto dfs = [&](auto&& self, uint32_t k) -> bool {
        if (k == pn) return true;
        VertexSet& c = cand[k];
        c = deg_ok[k];
        c.subtract(used);
        for (uint32_t j : prior[k]) {
            const auto row = host.row(map_by_pos[j]);
            kernels::active().and_into(c.words().data(), c.words().data(), row.data(),
                                       row.size());
        }
        for (uint32_t h = c.next(0); h < hn; h = c.next(h + 1)) {
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            map_by_pos[k] = h;
            used.add(h);
            if (self(self, k + 1)) return true;
            used.remove(h);
            if (out_of_budget) return false;
        }
        return false;
    };

    if (dfs(dfs, 0)) {
        Embedding e;
        e.map.resize(pn);
        for (uint32_t k = 0; k < pn; ++k) e.map[order[k]] = map_by_pos[k];
        return {FindStatus::Found, std::move(e), nodes};
    }
    return {out_of_budget ? FindStatus::BudgetExceeded : FindStatus::None, {}, nodes};
}

FreeResult is_free(const Graph& host, const Graph& pattern, uint64_t budget) {
    FindResult r = find_embedding(pattern, host, budget);
    switch (r.status) {
        case FindStatus::Found:
            return {Freeness::NotFree, std::move(r.embedding), r.nodes};
        case FindStatus::None:
            return {Freeness::Free, {}, r.nodes};
        default:
            return {Freeness::Inconclusive, {}, r.nodes};
    }
}

VerifyResult verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e) {
    if (e.map.size() != pattern.order())
        return {false, "map covers " + std::to_string(e.map.size()) + " vertices, pattern has " +
                           std::to_string(pattern.order())};
    for (uint32_t p = 0; p < pattern.order(); ++p)
        if (e.map[p] >= host.order())
            return {false, "vertex " + std::to_string(p) + " maps to " +
                               std::to_string(e.map[p]) + ", outside the host"};
    VertexSet seen(host.order());
    for (uint32_t p = 0; p < pattern.order(); ++p) {
        if (seen.contains(e.map[p]))
            return {false, "not injective: host vertex " + std::to_string(e.map[p]) +
                               " is hit twice"};
        seen.add(e.map[p]);
    }
    for (auto [u, v] : pattern.edges())
        if (!host.has_edge(e.map[u], e.map[v]))
            return {false, "pattern edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") has no host edge (" + std::to_string(e.map[u]) + "," +
                               std::to_string(e.map[v]) + ")"};
    return {true, ""};
}

uint64_t count_bicliques(const Graph& host, uint32_t r) {
    if (r < 1 || r > 3)
        throw capability_error("count_bicliques supports r in [1,3], got " + std::to_string(r));
    const uint32_t n = host.order();
    if (r == 1) return host.edge_count();
    const auto& ops = kernels::active();
    if (r == 2) {
        // each K_{2,2} is counted once from each side
        uint64_t twice = 0;
        for (uint32_t u = 0; u < n; ++u)
            for (uint32_t v = u + 1; v < n; ++v) {
                uint64_t c = ops.and_popcount(host.row(u).data(), host.row(v).data(),
                                              host.words());
                twice += c * (c - 1) / 2;
            }
        return twice / 2;
    }
    uint64_t twice = 0;
    std::vector<uint64_t> ab(host.words());
    for (uint32_t a1 = 0; a1 < n; ++a1) {
        if (host.degree(a1) < 3) continue;
        for (uint32_t a2 = a1 + 1; a2 < n; ++a2) {
            ops.and_into(ab.data(), host.row(a1).data(), host.row(a2).data(), host.words());
            if (ops.popcount(ab.data(), host.words()) < 3) continue;
            for (uint32_t a3 = a2 + 1; a3 < n; ++a3) {
                uint64_t c = ops.and_popcount(ab.data(), host.row(a3).data(), host.words());
                if (c >= 3) twice += c * (c - 1) * (c - 2) / 6;
            }
        }
    }
    return twice / 2;
}

std::vector<VertexSet> independent_sets(const Graph& g) {
    const uint32_t n = g.order();
    if (n > 20)
        throw capability_error("independent set enumeration limited to 20 vertices, got " +
                               std::to_string(n));
    std::vector<uint32_t> adj(n, 0);
    for (uint32_t v = 0; v < n; ++v)
        g.for_neighbors(v, [&](uint32_t w) { adj[v] |= 1u << w; });
    const uint32_t total = 1u << n;
    std::vector<char> ok(total, 0);
    std::vector<VertexSet> out;
    for (uint32_t mask = 0; mask < total; ++mask) {
        if (mask == 0) {
            ok[0] = 1;
        } else {
            uint32_t v = std::countr_zero(mask);
            uint32_t rest = mask & (mask - 1);
            ok[mask] = ok[rest] && !(adj[v] & rest);
        }
        if (ok[mask]) {
            VertexSet s(n);
            for (uint32_t v = 0; v < n; ++v)
                if ((mask >> v) & 1) s.add(v);
            out.push_back(std::move(s));
        }
    }
    return out;
}

}  // namespace tpk
