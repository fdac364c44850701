#ifndef TPK_CONSTRUCTIONS_HPP
#define TPK_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tpk/graph.hpp"
#include "tpk/subiso.hpp"

namespace tpk {

// TP_4-freeness reduction for hosts of the form "K_{a,b} plus a graph P
// planted on the lowest a-part vertices": an embedding of TP_4 sends the
// b-side image to an independent set I of TP_4, every edge-bearing component
// of TP_4 - I into P, and isolated remainder vertices anywhere in the a-part.

struct ReducedPatternEntry {
    VertexSet ind_set;          // independent set of TP_4
    uint32_t comp_girth;        // girth of TP_4 - ind_set, kInfiniteGirth if acyclic
    uint32_t comp_edges;        // edges of the complement
};

struct ReducedPatternTable {
    std::vector<ReducedPatternEntry> entries;  // bitmask-lexicographic order
    uint32_t g_max = 0;                        // max finite girth over entries with edges
    uint32_t acyclic_with_edges = 0;           // these would defeat the girth gap
    uint32_t edgeless_complements = 0;
};

/// Exhaustive table over all independent sets of TP_4 (the 2^15 enumeration
/// is the oracle; no value is assumed).
const ReducedPatternTable& reduced_pattern_girths();

enum class CertMethod { GirthGap, ExhaustivePatterns };
enum class CertVerdict { Certified, Refuted, Undecided };

const char* to_string(CertMethod m);
const char* to_string(CertVerdict v);

struct PyramidFreeCertificate {
    CertMethod method = CertMethod::ExhaustivePatterns;
    uint32_t g_host = 0;               // girth of the planted graph
    uint32_t g_max = 0;                // from the reduced-pattern table
    uint64_t checked_patterns = 0;
    CertVerdict verdict = CertVerdict::Undecided;
    std::optional<Embedding> refutation;  // TP_4 -> assembled host
};

struct HostDescription {
    uint32_t a = 0, b = 0;
    Graph planted;  // order <= a, occupies vertices [0, order) of the a-part
};

/// The explicit host graph: a-part [0,a), b-part [a,a+b), all cross edges,
/// planted edges inside the a-part.
Graph assemble_host(const HostDescription& d);

/// Certifies or refutes TP_4-freeness of the described host. The girth-gap
/// fast path applies only when the table shows no acyclic reduced pattern
/// and girth(planted) > g_max; otherwise each admissible independent set is
/// checked by explicit search. Refutations carry a full TP_4 embedding.
PyramidFreeCertificate pyramid_free_certificate(const HostDescription& d,
                                                uint64_t budget = kDefaultBudget);

struct AlgebraicStrategy {
    uint32_t q;
};
struct GreedyStrategy {
    uint32_t gmin;
    uint64_t seed;
};
using Strategy = std::variant<AlgebraicStrategy, GreedyStrategy>;

struct ConstructionManifest {
    uint32_t n = 0, a = 0, b = 0;
    Strategy planted_strategy{AlgebraicStrategy{0}};
    std::string planted_g6;
    uint64_t total_edges = 0;
    uint64_t excess = 0;  // total_edges - floor(n^2/4)
    std::optional<PyramidFreeCertificate> certificate;
};

/// Candidate lower-bound graph: K_{ceil(n/2),floor(n/2)} plus a high-girth
/// graph planted on the larger part, with a certificate attempt attached.
/// Throws construction_error if the certificate comes back Refuted.
std::pair<Graph, ConstructionManifest> lower_bound_graph(uint32_t n, const Strategy& strategy,
                                                         uint64_t budget = kDefaultBudget);

}  // namespace tpk

#endif
