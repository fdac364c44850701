#ifndef TPK_SUBISO_HPP
#define TPK_SUBISO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

/// Injective map pattern vertex -> host vertex; edge-preserving in the
/// subgraph (not induced) sense.
struct Embedding {
    std::vector<uint32_t> map;
};

inline constexpr uint64_t kDefaultBudget = 100'000'000;  // node expansions

enum class FindStatus { Found, None, BudgetExceeded };

struct FindResult {
    FindStatus status = FindStatus::None;
    Embedding embedding;       // valid iff status == Found
    uint64_t nodes = 0;        // expansions actually spent
};

/// Backtracking search over a connectivity-respecting, most-constrained-first
/// static pattern order; candidates filtered by degree and adjacency to the
/// already-mapped neighbors. None is an exhaustiveness proof; the returned
/// witness is the lexicographically least under the search order.
FindResult find_embedding(const Graph& pattern, const Graph& host,
                          uint64_t budget = kDefaultBudget);

enum class Freeness { Free, NotFree, Inconclusive };

struct FreeResult {
    Freeness verdict = Freeness::Free;
    Embedding witness;  // valid iff verdict == NotFree
    uint64_t nodes = 0;
};

FreeResult is_free(const Graph& host, const Graph& pattern, uint64_t budget = kDefaultBudget);

struct VerifyResult {
    bool ok = true;
    std::string violation;  // first violated constraint when !ok
    explicit operator bool() const { return ok; }
};

/// Checks injectivity, range, arity, and that every pattern edge maps to a
/// host edge. O(pattern edges).
VerifyResult verify_embedding(const Graph& pattern, const Graph& host, const Embedding& e);

/// Number of K_{r,r} subgraphs as unordered pairs {A,B} of disjoint r-sets
/// with all r^2 cross edges present. Supports r in [1,3] only.
uint64_t count_bicliques(const Graph& host, uint32_t r);

/// All independent sets (including the empty set) in lexicographic order of
/// the vertex bitmask. Limited to n <= 20.
std::vector<VertexSet> independent_sets(const Graph& g);

}  // namespace tpk

#endif
