#ifndef TPK_PROOF_LAB_HPP
#define TPK_PROOF_LAB_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tpk/graph.hpp"
#include "tpk/subiso.hpp"

namespace tpk {

struct PeelStep {
    uint32_t vertex;     // original index
    uint32_t degree;     // degree at removal time
    int64_t threshold;   // max degree allowed for removal at that step
};

struct PeelTrace {
    std::vector<PeelStep> removed;
    VertexSet final_vertices;  // survivors, original indexing
    Graph final_graph;         // survivors relabeled to [0, t)
    uint32_t final_size = 0;   // t
    uint64_t initial_edges = 0;
    uint64_t final_edges = 0;
};

/// Removes vertices of degree < d (lowest degree first, ties lowest index)
/// until the remainder has minimum degree >= d or is empty.
PeelTrace peel_to_min_degree(const Graph& g, uint32_t d);

/// Size-dependent peel: with i vertices alive, removes a vertex of degree
/// <= floor(i/2) - 1 if one exists (same tie rule), else stops. When the
/// input has at least floor(n^2/4) edges the trace satisfies
/// final_edges >= floor(t^2/4) + n - t.
PeelTrace turan_peel(const Graph& g);

struct CutResult {
    VertexSet side1, side2;
    uint64_t cross_edges = 0;
    uint64_t internal_edges_1 = 0, internal_edges_2 = 0;
    uint64_t moves = 0;
    uint64_t seed = 0;
};

/// Seeded random bipartition improved by single-vertex moves until locally
/// optimal: every vertex ends with cross-degree >= internal-degree. Not a
/// global maximum.
CutResult local_max_cut(const Graph& g, uint64_t seed);

// Partition diagnostics in the R/W decomposition style. The claims are
// checks, not assumptions: each carries its own pass flag and counterexample
// payload.
struct StructureReport {
    double epsilon = 0;
    double lambda = 0;  // cbrt(4*epsilon)
    std::string partition_method;
    uint64_t seed = 0;
    VertexSet x1, x2, r1, r2, w1, w2;
    uint64_t cross_edges = 0;
    uint64_t internal_edges_1 = 0, internal_edges_2 = 0;
    // e(G[X_1]) + e(G[X_2]) < eps * n^2
    double eps_bound = 0;
    bool eps_ok = false;
    // |X_i| <= (1/2 + sqrt(eps)) n
    bool claim1_ok = false;
    double claim1_bound = 0;
    // |R| <= lambda n / 2, reported with the raw count and ratio
    bool claim2_ok = false;
    double claim2_bound = 0;
    uint32_t r_size = 0;
    double r_ratio = 0;
    // every u in W_i has > floor(n/2) - (3/2) lambda n neighbors in the
    // opposite W
    bool claim3_ok = false;
    double claim3_bound = 0;
    std::optional<uint32_t> claim3_violator;
    uint32_t min_cross_degree_w1 = 0, min_cross_degree_w2 = 0;
    // G[W_i] is F-free
    bool claim4_ok = false;
    uint32_t claim4_side = 0;                  // 1 or 2 when violated
    std::optional<Embedding> claim4_witness;   // F -> original vertex ids
    bool claim4_conclusive = true;             // false on budget exhaustion
};

/// Runs the decomposition at the given epsilon. Without an explicit
/// partition, local_max_cut(g, seed) supplies one.
StructureReport structure_report(const Graph& g, double epsilon,
                                 std::optional<std::pair<VertexSet, VertexSet>> partition = {},
                                 uint64_t seed = 0, uint64_t budget = kDefaultBudget);

/// k vertices from `candidates` adjacent to every vertex of `y` (lowest
/// indices first), or nullopt when fewer than k exist.
std::optional<VertexSet> find_common_neighbors(const Graph& g, const VertexSet& y,
                                               const VertexSet& candidates, uint32_t k);

/// Extends an embedded 6-cycle to the chorded 10-vertex graph F by greedily
/// attaching a 2-path at each chord endpoint, trying all 12 orientations of
/// the cycle. Guaranteed to succeed when the minimum degree is >= 10.
std::optional<Embedding> extend_cycle_to_f(const Graph& g, const Embedding& c6);

struct Tp4Coloring {
    VertexSet v1, v2, v3;  // over TP_4's vertices; v1|v2 induces F, v3 independent
    Embedding f_iso;       // graph_f() vertex -> TP_4 vertex
};

/// First proper 3-coloring of TP_4 (vertices in index order, colors 1..3)
/// whose first matching class pair induces a graph isomorphic to F with the
/// remaining class an independent 5-set. Throws std::logic_error if the
/// exhaustive search finds none.
Tp4Coloring tp4_coloring();

struct Tp4Witness {
    Graph host;           // K_{s,t} with F planted on the first 10 of the s-part
    Embedding embedding;  // TP_4 -> host
};

/// Constructive witness: requires s >= 10 (F side) and t >= 5 (independent side).
Tp4Witness embed_tp4_constructive(uint32_t s, uint32_t t);

}  // namespace tpk

#endif
