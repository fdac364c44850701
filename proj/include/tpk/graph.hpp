#ifndef TPK_GRAPH_HPP
#define TPK_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tpk/bitset.hpp"

namespace tpk {

using Edge = std::pair<uint32_t, uint32_t>;

/// Girth value for acyclic graphs; larger than any finite cycle length so
/// `girth(g) > bound` comparisons stay total.
inline constexpr uint32_t kInfiniteGirth = std::numeric_limits<uint32_t>::max();

// Immutable simple undirected graph. Adjacency is one bit row per vertex
// ((n+63)/64 words), so neighborhood intersections and degree counts run on
// the word kernels. Safe to share across threads after construction.
class Graph {
public:
    static constexpr uint32_t kMaxVertices = 8192;

    Graph() = default;

    // Builds the simple graph with exactly the distinct listed edges.
    // Throws std::invalid_argument on self-loops or out-of-range endpoints,
    // capability_error when n exceeds kMaxVertices.
    static Graph from_edges(uint32_t n, std::span<const Edge> edges);
    static Graph from_edges(uint32_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    uint32_t order() const { return n_; }
    uint64_t edge_count() const { return edges_; }
    uint32_t words() const { return words_; }

    bool has_edge(uint32_t u, uint32_t v) const {
        return (rows_[(size_t)u * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    std::span<const uint64_t> row(uint32_t v) const {
        return {rows_.data() + (size_t)v * words_, words_};
    }
    uint32_t degree(uint32_t v) const {
        return (uint32_t)kernels::active().popcount(rows_.data() + (size_t)v * words_, words_);
    }
    uint32_t min_degree() const;
    uint32_t max_degree() const;

    template <typename F>
    void for_neighbors(uint32_t v, F&& f) const {
        const uint64_t* r = rows_.data() + (size_t)v * words_;
        for (uint32_t wi = 0; wi < words_; ++wi) {
            uint64_t w = r[wi];
            while (w) {
                f((uint32_t)(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }
    std::vector<uint32_t> neighbors(uint32_t v) const {
        std::vector<uint32_t> out;
        for_neighbors(v, [&](uint32_t u) { out.push_back(u); });
        return out;
    }
    VertexSet neighbor_set(uint32_t v) const {
        VertexSet s(n_);
        std::copy(row(v).begin(), row(v).end(), s.words().begin());
        return s;
    }
    std::vector<Edge> edges() const;

    // Labeled equality (same n, same adjacency).
    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && rows_ == o.rows_;
    }

private:
    uint32_t n_ = 0;
    uint32_t words_ = 0;
    uint64_t edges_ = 0;
    std::vector<uint64_t> rows_;
};

/// Length of a shortest cycle, kInfiniteGirth for forests.
/// BFS from every vertex, pruned to half the best cycle found so far.
uint32_t girth(const Graph& g);

/// Induced subgraph plus the original vertex of each new index
/// (new index i came from vertex_of[i]; vertices keep their relative order).
struct InducedSubgraph {
    Graph graph;
    std::vector<uint32_t> vertex_of;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
uint32_t component_count(const Graph& g);

/// Two-colorability; parts filled with a witness bipartition when true.
bool is_bipartite(const Graph& g, VertexSet* part0 = nullptr, VertexSet* part1 = nullptr);

/// G(n,p) with a pinned bit-for-bit construction: edge (u,v), u<v in row-major
/// order, is present iff the next mt19937_64 draw < p * 2^64.
Graph gnp_random_graph(uint32_t n, double p, uint64_t seed);

}  // namespace tpk

#endif
