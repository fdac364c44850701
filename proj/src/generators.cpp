#include "tpk/generators.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "tpk/errors.hpp"

namespace tpk {

PyramidLayout triangular_pyramid(uint32_t k) {
    if (k < 1 || k > 50)
        throw std::invalid_argument("layer count must be in [1,50], got " + std::to_string(k));
    auto idx = [](uint32_t layer, uint32_t t) { return layer * (layer - 1) / 2 + t - 1; };
    const uint32_t n = (k + 1) * (k + 2) / 2;
    std::vector<Edge> edges;
    for (uint32_t i = 1; i <= k + 1; ++i)
        for (uint32_t t = 1; t < i; ++t) edges.emplace_back(idx(i, t), idx(i, t + 1));
    for (uint32_t i = 1; i <= k; ++i)
        for (uint32_t t = 1; t <= i; ++t) {
            edges.emplace_back(idx(i, t), idx(i + 1, t));
            edges.emplace_back(idx(i, t), idx(i + 1, t + 1));
        }
    PyramidLayout out{Graph::from_edges(n, edges), std::vector<uint32_t>(n),
                      std::vector<uint32_t>(n)};
    for (uint32_t i = 1; i <= k + 1; ++i)
        for (uint32_t t = 1; t <= i; ++t) {
            out.layer_of[idx(i, t)] = i;
            out.pos_of[idx(i, t)] = t;
        }
    return out;
}

Graph graph_f() {
    std::vector<Edge> edges;
    for (uint32_t i = 0; i < 9; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(2, 7);
    return Graph::from_edges(10, edges);
}

Graph turan_graph(uint32_t n, uint32_t k) {
    if (n < 1) throw std::invalid_argument("turan graph needs n >= 1");
    if (k < 1 || k > n)
        throw std::invalid_argument("part count must be in [1,n], got " + std::to_string(k));
    // first n%k parts get ceil(n/k) vertices, contiguously numbered
    std::vector<uint32_t> part_of(n);
    uint32_t v = 0;
    for (uint32_t p = 0; p < k; ++p) {
        uint32_t size = n / k + (p < n % k ? 1 : 0);
        for (uint32_t t = 0; t < size; ++t) part_of[v++] = p;
    }
    std::vector<Edge> edges;
    for (uint32_t a = 0; a < n; ++a)
        for (uint32_t b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Bipartite complete_bipartite(uint32_t a, uint32_t b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite parts must be nonempty");
    std::vector<Edge> edges;
    edges.reserve((size_t)a * b);
    for (uint32_t u = 0; u < a; ++u)
        for (uint32_t v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    Bipartite out{Graph::from_edges(a + b, edges), VertexSet(a + b), VertexSet(a + b)};
    for (uint32_t u = 0; u < a; ++u) out.part_a.add(u);
    for (uint32_t v = 0; v < b; ++v) out.part_b.add(a + v);
    return out;
}

namespace {
bool is_prime(uint32_t q) {
    if (q < 2) return false;
    for (uint32_t d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}
}  // namespace

Bipartite high_girth_bipartite(uint32_t q) {
    if (!is_prime(q) || q < 2 || q > 13)
        throw std::invalid_argument("q must be a prime in [2,13], got " + std::to_string(q));
    const uint32_t part = q * q * q;
    auto pid = [&](uint32_t a, uint32_t b, uint32_t c) { return a * q * q + b * q + c; };
    std::vector<Edge> edges;
    edges.reserve((size_t)part * q);
    for (uint32_t p1 = 0; p1 < q; ++p1)
        for (uint32_t p2 = 0; p2 < q; ++p2)
            for (uint32_t p3 = 0; p3 < q; ++p3)
                for (uint32_t l1 = 0; l1 < q; ++l1) {
                    uint32_t l2 = (l1 * p1 + p2) % q;
                    uint32_t l3 = (l1 * p2 + p3) % q;
                    edges.emplace_back(pid(p1, p2, p3), part + pid(l1, l2, l3));
                }
    Bipartite out{Graph::from_edges(2 * part, edges), VertexSet(2 * part), VertexSet(2 * part)};
    for (uint32_t v = 0; v < part; ++v) out.part_a.add(v);
    for (uint32_t v = 0; v < part; ++v) out.part_b.add(part + v);
    uint32_t g = girth(out.graph);
    if (g < 8)
        throw construction_error("algebraic bipartite recipe failed its girth gate at q=" +
                                 std::to_string(q) + ": girth " + std::to_string(g));
    return out;
}

Graph greedy_high_girth(uint32_t n, uint32_t gmin, uint64_t seed) {
    if (gmin < 4) throw std::invalid_argument("greedy_high_girth needs gmin >= 4");
    if (n < 1) throw std::invalid_argument("greedy_high_girth needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<uint32_t>> adj(n);
    // dist(u,v) >= gmin-1 keeps every new cycle through (u,v) at length >= gmin
    std::vector<uint32_t> dist(n), queue(n);
    auto far_enough = [&](uint32_t u, uint32_t v) {
        std::fill(dist.begin(), dist.end(), UINT32_MAX);
        uint32_t head = 0, tail = 0;
        dist[u] = 0;
        queue[tail++] = u;
        while (head < tail) {
            uint32_t x = queue[head++];
            if (dist[x] + 1 >= gmin - 1) break;
            for (uint32_t w : adj[x])
                if (dist[w] == UINT32_MAX) {
                    dist[w] = dist[x] + 1;
                    if (w == v) return false;
                    queue[tail++] = w;
                }
        }
        return true;
    };
    std::vector<Edge> pairs;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Edge> accepted;
    bool added = true;
    while (added) {
        added = false;
        // seeded Fisher-Yates with a plain modulo draw (determinism over
        // uniformity; std::shuffle is implementation-defined)
        for (size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);
        for (auto [u, v] : pairs) {
            bool present = false;
            for (uint32_t w : adj[u])
                if (w == v) {
                    present = true;
                    break;
                }
            if (present) continue;
            if (far_enough(u, v)) {
                adj[u].push_back(v);
                adj[v].push_back(u);
                accepted.emplace_back(u, v);
                added = true;
            }
        }
    }
    return Graph::from_edges(n, accepted);
}

Graph complete_graph(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t u = 0; u < n; ++u)
        for (uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(uint32_t n) {
    std::vector<Edge> edges;
    for (uint32_t u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(uint32_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (uint32_t u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph::from_edges(n, edges);
}

}  // namespace tpk
