#include "tpk/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "tpk/errors.hpp"

namespace tpk {

Graph Graph::from_edges(uint32_t n, std::span<const Edge> edges) {
    if (n > kMaxVertices)
        throw capability_error("graph order " + std::to_string(n) + " exceeds capacity " +
                               std::to_string(kMaxVertices));
    Graph g;
    g.n_ = n;
    g.words_ = (n + 63) / 64;
    g.rows_.assign((size_t)n * g.words_, 0);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint " + std::to_string(std::max(u, v)) +
                                        " out of range for n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        uint64_t& wu = g.rows_[(size_t)u * g.words_ + (v >> 6)];
        if (!((wu >> (v & 63)) & 1)) {
            wu |= 1ull << (v & 63);
            g.rows_[(size_t)v * g.words_ + (u >> 6)] |= 1ull << (u & 63);
            ++g.edges_;
        }
    }
    return g;
}

uint32_t Graph::min_degree() const {
    uint32_t best = n_ ? degree(0) : 0;
    for (uint32_t v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

uint32_t Graph::max_degree() const {
    uint32_t best = 0;
    for (uint32_t v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edges_);
    for (uint32_t u = 0; u < n_; ++u)
        for_neighbors(u, [&](uint32_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

uint32_t girth(const Graph& g) {
    const uint32_t n = g.order();
    if (n == 0 || g.edge_count() == 0) return kInfiniteGirth;
    uint32_t best = kInfiniteGirth;
    std::vector<uint32_t> dist(n), queue(n);
    std::vector<uint32_t> stamp(n, 0);
    uint32_t run = 0;
    for (uint32_t s = 0; s < n; ++s) {
        if (best == 3) break;
        ++run;
        uint32_t head = 0, tail = 0;
        queue[tail++] = s;
        stamp[s] = run;
        dist[s] = 0;
        // Tree edges and the parent link have dist[w] < dist[u], so the
        // inequality keeps exactly the non-tree edges seen from their
        // earlier-processed endpoint. Vertices deeper than half the
        // incumbent cycle cannot improve it.
        while (head < tail) {
            uint32_t u = queue[head++];
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            g.for_neighbors(u, [&](uint32_t w) {
                if (stamp[w] != run) {
                    stamp[w] = run;
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                } else if (dist[w] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            });
        }
    }
    return best;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<uint32_t> verts = s.to_vector();
    std::vector<uint32_t> index_of(g.order(), UINT32_MAX);
    for (uint32_t i = 0; i < verts.size(); ++i) index_of[verts[i]] = i;
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < verts.size(); ++i)
        g.for_neighbors(verts[i], [&](uint32_t w) {
            if (index_of[w] != UINT32_MAX && index_of[w] > i)
                edges.emplace_back(i, index_of[w]);
        });
    return {Graph::from_edges((uint32_t)verts.size(), edges), std::move(verts)};
}

uint32_t component_count(const Graph& g) {
    const uint32_t n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<uint32_t> stack;
    uint32_t comps = 0;
    for (uint32_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            g.for_neighbors(u, [&](uint32_t w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
    }
    return comps;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

bool is_bipartite(const Graph& g, VertexSet* part0, VertexSet* part1) {
    const uint32_t n = g.order();
    std::vector<int8_t> color(n, -1);
    std::vector<uint32_t> stack;
    for (uint32_t s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            uint32_t u = stack.back();
            stack.pop_back();
            bool ok = true;
            g.for_neighbors(u, [&](uint32_t w) {
                if (color[w] == -1) {
                    color[w] = (int8_t)(1 - color[u]);
                    stack.push_back(w);
                } else if (color[w] == color[u]) {
                    ok = false;
                }
            });
            if (!ok) return false;
        }
    }
    if (part0 && part1) {
        *part0 = VertexSet(n);
        *part1 = VertexSet(n);
        for (uint32_t v = 0; v < n; ++v) (color[v] == 0 ? part0 : part1)->add(v);
    }
    return true;
}

Graph gnp_random_graph(uint32_t n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    const bool all = p >= 1.0;
    const uint64_t threshold = all ? 0 : (uint64_t)(p * 18446744073709551616.0L);
    std::vector<Edge> edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) {
            uint64_t r = rng();
            if (all || r < threshold) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace tpk
