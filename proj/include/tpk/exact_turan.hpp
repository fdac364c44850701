#ifndef TPK_EXACT_TURAN_HPP
#define TPK_EXACT_TURAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tpk/graph.hpp"

namespace tpk {

/// h(n) = e(T_2(n)) = floor(n^2/4).
inline constexpr uint64_t h(uint64_t n) { return n * n / 4; }

enum class RecordStatus { Exact, BudgetExceeded };

struct TuranRecord {
    uint32_t n = 0;
    std::string pattern_code;  // canonical code when the pattern fits the
                               // canonical-size limit, labeled graph6 otherwise
    uint64_t value = 0;        // exact ex(n, pattern), or the best bound found
    RecordStatus status = RecordStatus::Exact;
    std::vector<std::string> witnesses;  // canonical graph6, deduplicated
    uint64_t nodes_explored = 0;
};

inline constexpr uint64_t kDefaultExactBudget = 1'000'000'000;
inline constexpr uint32_t kDefaultExactMaxN = 10;
inline constexpr uint32_t kHardExactMaxN = 12;

/// Exact ex(n, pattern) with all extremal witnesses up to isomorphism.
/// Breadth-first orderly generation over isomorphism classes of pattern-free
/// graphs, one edge per level: children deduplicated by canonical code,
/// branches whose optimistic completion cannot reach the incumbent cut, the
/// incumbent seeded with T_2(n) for non-bipartite patterns.
/// Patterns larger than n short-circuit to K_n. Otherwise n is capped at
/// max_n (default 10, hard limit 12).
TuranRecord exact_ex(uint32_t n, const Graph& pattern, uint64_t budget = kDefaultExactBudget,
                     uint32_t max_n = kDefaultExactMaxN);

struct RecordCheck {
    bool ok = true;
    std::string problem;
    explicit operator bool() const { return ok; }
};

/// Re-checks each witness: decodable, n vertices, exactly `value` edges,
/// pattern-free. Does not re-prove maximality.
RecordCheck verify_record(const TuranRecord& r);

}  // namespace tpk

#endif
