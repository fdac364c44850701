#ifndef TPK_GENERATORS_HPP
#define TPK_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

// Layered triangular pyramid: layer i in [1, k+1] is a path on i vertices,
// consecutive layers joined by the two downward edges per position.
// Vertex numbering is layer-major: y_t^i -> i(i-1)/2 + t - 1.
struct PyramidLayout {
    Graph graph;
    std::vector<uint32_t> layer_of;  // 1-based layer index
    std::vector<uint32_t> pos_of;    // 1-based position within the layer
};

/// TP_k, 1 <= k <= 50. (k+1)(k+2)/2 vertices, 3k(k+1)/2 edges.
PyramidLayout triangular_pyramid(uint32_t k);

/// The 10-vertex chorded path: vertices x_1..x_10 mapped to 0..9, edges
/// {i,i+1} for 0 <= i <= 8 plus the chord {2,7}. A 6-cycle with two pendant
/// 2-paths; girth 6.
Graph graph_f();

/// Balanced complete k-partite graph on n vertices (part sizes differ by
/// at most 1). turan_graph(n,2) has floor(n^2/4) edges.
Graph turan_graph(uint32_t n, uint32_t k);

struct Bipartite {
    Graph graph;
    VertexSet part_a, part_b;
};

/// K_{a,b}; part A is [0,a), part B is [a,a+b).
Bipartite complete_bipartite(uint32_t a, uint32_t b);

/// Dense bipartite graph on parts P and L of q^3 coordinate triples over the
/// integers mod q: p=(p1,p2,p3) ~ l=(l1,l2,l3) iff l2 = l1*p1 + p2 and
/// l3 = l1*p2 + p3. q-regular, q^4 edges. The constructor verifies
/// girth >= 8 and throws construction_error if the check fails (the
/// algebraic recipe is a candidate, not an axiom).
/// q must be prime, 2 <= q <= 13.
Bipartite high_girth_bipartite(uint32_t q);

/// Randomized maximal girth->=gmin graph: seeded passes over the non-edges,
/// each added iff the girth stays >= gmin, until a full pass adds nothing.
/// Deterministic in (n, gmin, seed).
Graph greedy_high_girth(uint32_t n, uint32_t gmin, uint64_t seed);

Graph complete_graph(uint32_t n);
Graph path_graph(uint32_t n);
Graph cycle_graph(uint32_t n);

}  // namespace tpk

#endif
